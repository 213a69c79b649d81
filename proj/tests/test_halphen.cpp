#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lorentz/halphen.hpp"
#include "test_util.hpp"

using namespace lorentz;
using namespace lorentz::testutil;

namespace {

// brute force: is there an integer s with |s_i| <= box and
// (N D - sum s_i E_i) . E_j = 0 for all j?
bool small_solution_exists(const Lattice& lat, const std::vector<IVec>& comps, const IVec& d,
                           const Int& n, long box) {
  IMat gram = gram_of(lat, comps);
  IVec w(comps.size());
  for (std::size_t i = 0; i < comps.size(); ++i) w[i] = n * pairing(lat, d, comps[i]);
  std::vector<long> c(comps.size(), -box);
  for (;;) {
    IVec s(comps.size());
    for (std::size_t i = 0; i < comps.size(); ++i) s[i] = c[i];
    if (gram * s == w) return true;
    std::size_t pos = 0;
    while (pos < comps.size() && c[pos] == box) c[pos++] = -box;
    if (pos == comps.size()) return false;
    ++c[pos];
  }
}

std::vector<IVec> config_components(const FiberConfig& config) {
  std::vector<IVec> out;
  for (const Fiber& f : config.fibers)
    for (const FiberComponent& c : f.components) out.push_back(c.e);
  return out;
}

}  // namespace

TEST_CASE("model invariants: K_X^2 = 0, rank 10, signature (1,9), primitive") {
  for (unsigned m : {1u, 2u, 3u}) {
    HalphenModel model = HalphenModel::create(m);
    CHECK(model.lat->rank() == 10);
    CHECK(pairing(*model.lat, model.kx, model.kx) == 0);
    CHECK(signature_of(model.lat->gram) == Inertia{1, 9, 0});
    CHECK(gcd_all(model.kx) == 1);
    CHECK(model.fiber_class == vec_scale(Int(-(long)m), model.kx));
  }
  CHECK_THROWS_AS(HalphenModel::create(0), Error);
}

TEST_CASE("translation formula: trivial cases and the worked e0 image") {
  HalphenModel model = HalphenModel::create(1);
  CHECK(translation_action(model, IVec(10, Int(0))).matrix.mat.is_identity());
  CHECK(translation_action(model, model.kx).matrix.mat.is_identity());

  IVec alpha = ivec({0, 1, -1, 0, 0, 0, 0, 0, 0, 0});
  AutGenerator gen = translation_action(model, alpha);
  IVec e0(10, Int(0));
  e0[0] = 1;
  IVec image = gen.matrix.mat * e0;
  CHECK(image == ivec({10, 0, -6, -3, -3, -3, -3, -3, -3, -3}));
  CHECK(pairing(*model.lat, image, image) == 1);
  CHECK(gen.matrix.mat * model.kx == model.kx);
  CHECK(gen.matrix.mat * model.fiber_class == model.fiber_class);

  CHECK_THROWS_AS(translation_action(model, e0), Error);  // e0 . K != 0
}

TEST_CASE("translation formula is a homomorphism on K^perp") {
  Rng rng(555);
  for (unsigned m : {1u, 2u, 3u}) {
    HalphenModel model = HalphenModel::create(m);
    std::vector<IVec> basis = kx_perp_basis(model);
    for (int trial = 0; trial < 20; ++trial) {
      IVec a(10, Int(0)), b(10, Int(0));
      for (const IVec& v : basis) {
        a = vec_add(a, vec_scale(Int(rng.range(-3, 3)), v));
        b = vec_add(b, vec_scale(Int(rng.range(-3, 3)), v));
      }
      IMat la = translation_action(model, a).matrix.mat;
      IMat lb = translation_action(model, b).matrix.mat;
      IMat lab = translation_action(model, vec_add(a, b)).matrix.mat;
      CHECK(la * lb == lab);
      CHECK(lb * la == lab);
    }
  }
}

TEST_CASE("classify(lambda_alpha) is parabolic exactly off Z K_X") {
  for (unsigned m : {1u, 2u, 3u}) {
    HalphenModel model = HalphenModel::create(m);
    Classification on_ray =
        classify(translation_action(model, vec_scale(Int(2), model.kx)).matrix);
    CHECK(on_ray.tag == IsoType::Elliptic);
    CHECK(on_ray.order == 1);

    Classification off_ray = classify(
        translation_action(model, vec_add(model.kx, ivec({0, 1, -1, 0, 0, 0, 0, 0, 0, 0}))).matrix);
    CHECK(off_ray.tag == IsoType::Parabolic);
    CHECK(off_ray.translation_exponent == 1);
  }
}

TEST_CASE("orbit of e0 under lambda_{n(e1-e2)} has e0-coefficient 1 + 9n^2") {
  HalphenModel model = HalphenModel::create(1);
  IVec e0(10, Int(0));
  e0[0] = 1;
  for (long n = 0; n <= 20; ++n) {
    IVec alpha = ivec({0, n, -n, 0, 0, 0, 0, 0, 0, 0});
    IVec image = translation_action(model, alpha).matrix.mat * e0;
    CHECK(image[0] == 1 + 9 * n * n);
    // and the formula image = e0 + 3n alpha1 - 3n^2 K with alpha1 = e1 - e2
    IVec expected = vec_add(e0, vec_add(vec_scale(Int(3 * n), ivec({0, 1, -1, 0, 0, 0, 0, 0, 0, 0})),
                                        vec_scale(Int(-3 * n * n), model.kx)));
    CHECK(image == expected);
  }
}

TEST_CASE("config validation accepts the standard fixtures") {
  HalphenModel m1 = HalphenModel::create(1);
  CHECK_NOTHROW(validate_config(m1, FiberConfig{}));
  CHECK_NOTHROW(validate_config(m1, FiberConfig{{cycle_fiber(m1, 1, 2)}}));
  CHECK_NOTHROW(validate_config(m1, FiberConfig{{cycle_fiber(m1, 1, 2), cycle_fiber(m1, 3, 3)}}));
  CHECK_NOTHROW(validate_config(m1, FiberConfig{{cycle_fiber(m1, 1, 9)}}));
  HalphenModel m2 = HalphenModel::create(2);
  CHECK_NOTHROW(validate_config(m2, FiberConfig{{cycle_fiber(m2, 1, 2, true)}}));
}

TEST_CASE("config validation rejects broken configurations") {
  HalphenModel model = HalphenModel::create(1);

  // wrong component square (orthogonal to K but of square -4)
  FiberConfig bad_square{{Fiber{{FiberComponent{ivec({0, 1, 1, -1, -1, 0, 0, 0, 0, 0}), Int(1)},
                                 FiberComponent{ivec({0, 1, -1, 0, 0, 0, 0, 0, 0, 0}), Int(1)}}}}};
  CHECK_THROWS_WITH_AS(validate_config(model, bad_square),
                       doctest::Contains("square -2"), Error);

  // sum of components misses the fiber class
  Fiber partial = cycle_fiber(model, 1, 3);
  partial.components.pop_back();
  CHECK_THROWS_AS(validate_config(model, FiberConfig{{partial}}), Error);

  // single-component fiber
  Fiber single;
  single.components.push_back(FiberComponent{model.fiber_class, Int(1)});
  CHECK_THROWS_AS(validate_config(model, FiberConfig{{single}}), Error);

  // gcd mismatch: doubled multiplicities without the multiple flag
  Fiber doubled = cycle_fiber(model, 1, 2);
  CHECK_THROWS_AS(validate_config(HalphenModel::create(2),
                                  FiberConfig{{doubled}}), Error);

  // overlapping supports break semidefiniteness or the radical condition
  FiberConfig overlap{{cycle_fiber(model, 1, 3), cycle_fiber(model, 2, 3)}};
  CHECK_THROWS_AS(validate_config(model, overlap), Error);

  // sum(mu - 1) > 8 must be rejected with its own error code
  FiberConfig toobig{{cycle_fiber(model, 1, 9), cycle_fiber(model, 1, 2)}};
  try {
    validate_config(model, toobig);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code == "mu_sum_exceeds_8");
  }
}

TEST_CASE("rank formulas: unnodal, I9, I3+I4, all single cycles") {
  HalphenModel model = HalphenModel::create(1);
  RankPair unnodal = translation_group_rank(model, FiberConfig{});
  CHECK(unnodal.rk_n == 1);
  CHECK(unnodal.rk_g == 8);

  RankPair i9 = translation_group_rank(model, FiberConfig{{cycle_fiber(model, 1, 9)}});
  CHECK(i9.rk_n == 9);
  CHECK(i9.rk_g == 0);

  RankPair i34 = translation_group_rank(
      model, FiberConfig{{cycle_fiber(model, 1, 3), cycle_fiber(model, 4, 4)}});
  CHECK(i34.rk_n == 6);
  CHECK(i34.rk_g == 3);

  for (std::size_t k = 2; k <= 9; ++k) {
    RankPair rk = translation_group_rank(model, FiberConfig{{cycle_fiber(model, 1, k)}});
    CHECK(rk.rk_n == k);
    CHECK(rk.rk_g == 8 - (k - 1));
  }
}

TEST_CASE("crucial solver: trivial and nontrivial minimal dilations") {
  HalphenModel model = HalphenModel::create(1);
  FiberConfig i2{{cycle_fiber(model, 1, 2)}};

  CrucialSolution triv = crucial_solver(model, i2, model.kx);
  CHECK(triv.n == 1);
  CHECK(vec_is_zero(triv.s));

  // D = E1 is itself supported in the fiber: N = 1
  const IVec e1_minus_e2 = ivec({0, 1, -1, 0, 0, 0, 0, 0, 0, 0});
  CrucialSolution comp = crucial_solver(model, i2, e1_minus_e2);
  CHECK(comp.n == 1);

  // D = e2 - e3 pairs to (1, -1) with the two components: minimal N is 2
  const IVec d = ivec({0, 0, 1, -1, 0, 0, 0, 0, 0, 0});
  CrucialSolution sol = crucial_solver(model, i2, d);
  CHECK(sol.n == 2);
  std::vector<IVec> comps = config_components(i2);
  for (const IVec& e : comps)
    CHECK(pairing(*model.lat, vec_sub(vec_scale(sol.n, d), sol.s), e) == 0);
  // exhaustive oracle: no solution with N = 1 and small coefficients
  CHECK_FALSE(small_solution_exists(*model.lat, comps, d, Int(1), 40));
  CHECK(small_solution_exists(*model.lat, comps, d, Int(2), 40));

  CHECK_THROWS_AS(crucial_solver(model, i2, ivec({1, 0, 0, 0, 0, 0, 0, 0, 0, 0})), Error);
}

TEST_CASE("generator basis: unnodal E8, corank cases, multiple fiber") {
  HalphenModel model = HalphenModel::create(1);
  GeneratorBasis unnodal = generator_basis(model, FiberConfig{});
  REQUIRE(unnodal.generators.size() == 8);
  CHECK(unnodal.notice.empty());

  std::vector<IVec> alphas;
  for (const AutGenerator& g : unnodal.generators) {
    alphas.push_back(g.alpha);
    CHECK(pairing(*model.lat, g.alpha, model.kx) == 0);
    Classification c = classify(g.matrix);
    CHECK(c.tag == IsoType::Parabolic);
  }
  IMat q = gram_of(*model.lat, alphas);
  CHECK(inertia(q) == Inertia{0, 8, 0});
  for (std::size_t i = 0; i < 8; ++i) CHECK(q(i, i) % 2 == 0);
  Int det = i_det(q);
  CHECK((det == 1 || det == -1));

  // additivity of the lifted generators
  IMat l01 = unnodal.generators[0].matrix.mat * unnodal.generators[1].matrix.mat;
  CHECK(l01 == translation_action(model, vec_add(alphas[0], alphas[1])).matrix.mat);

  GeneratorBasis i9 = generator_basis(model, FiberConfig{{cycle_fiber(model, 1, 9)}});
  CHECK(i9.generators.empty());
  CHECK_FALSE(i9.notice.empty());

  GeneratorBasis i8 = generator_basis(model, FiberConfig{{cycle_fiber(model, 1, 8)}});
  REQUIRE(i8.generators.size() == 1);
  CHECK(classify(i8.generators[0].matrix).tag == IsoType::Parabolic);

  HalphenModel m2 = HalphenModel::create(2);
  GeneratorBasis mult = generator_basis(m2, FiberConfig{{cycle_fiber(m2, 1, 2, true)}});
  CHECK(mult.generators.size() == 7);
  for (const AutGenerator& g : mult.generators)
    CHECK(classify(g.matrix).tag == IsoType::Parabolic);
}

TEST_CASE("generators kill the fiber components modulo the fiber class") {
  // on a nodal config the lifted alphas still pair to zero with K
  HalphenModel model = HalphenModel::create(1);
  FiberConfig i2{{cycle_fiber(model, 1, 2)}};
  GeneratorBasis basis = generator_basis(model, i2);
  REQUIRE(basis.generators.size() == 7);
  for (const AutGenerator& g : basis.generators) {
    CHECK(g.matrix.mat * model.kx == model.kx);
    CHECK(is_isometry(*model.lat, g.matrix.mat).ok);
  }
}

TEST_CASE("kx_perp_basis spans a saturated rank-9 sublattice") {
  HalphenModel model = HalphenModel::create(1);
  std::vector<IVec> basis = kx_perp_basis(model);
  REQUIRE(basis.size() == 9);
  IMat mat(10, 9);
  for (std::size_t j = 0; j < 9; ++j) mat.set_col(j, basis[j]);
  CHECK(i_rank(mat) == 9);
  // K_X itself is an integer combination (saturation)
  CHECK(solve_integer(mat, model.kx).has_value());
}
