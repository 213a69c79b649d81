#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lorentz/group.hpp"
#include "lorentz/halphen.hpp"
#include "lorentz/json_io.hpp"
#include "test_util.hpp"

using namespace lorentz;
using namespace lorentz::testutil;

namespace {

IMat lambda_alpha(const HalphenModel& model, std::initializer_list<long> alpha) {
  return translation_action(model, ivec(alpha)).matrix.mat;
}

IMat evaluate_word(const GroupSpec& spec, const Word& w) {
  IMat m = IMat::identity(spec.lat->rank());
  for (int letter : w) {
    const IMat& g = spec.generators[std::abs(letter) - 1];
    m = m * (letter > 0 ? g : isometry_inverse_mat(*spec.lat, g));
  }
  return m;
}

}  // namespace

TEST_CASE("two commuting translation generators: moderate growth report") {
  HalphenModel model = HalphenModel::create(1);
  GroupSpec spec;
  spec.lat = model.lat;
  spec.generators.push_back(lambda_alpha(model, {0, 1, -1, 0, 0, 0, 0, 0, 0, 0}));
  spec.generators.push_back(lambda_alpha(model, {0, 0, 1, -1, 0, 0, 0, 0, 0, 0}));
  spec.word_bound = 4;

  GroupReport rep = explore(spec);
  CHECK(rep.verdict == GroupVerdict::ModerateUpToL);
  REQUIRE(rep.common_theta.has_value());
  CHECK(*rep.common_theta == ivec({3, -1, -1, -1, -1, -1, -1, -1, -1, -1}));
  CHECK(rep.translation_rank == 2);
  CHECK(rep.finite_part_order_lower_bound == 1);
  CHECK(rep.inconsistency_hint.empty());

  // the generators commute, so words with |i|+|j| <= 4 give 40 non-identity
  // elements, all in the kernel
  CHECK(rep.elements_explored == 41);
  CHECK(rep.kernel_generators.size() == 40);

  // every generator fixes the common ray
  for (const IMat& g : spec.generators) CHECK(g * *rep.common_theta == *rep.common_theta);

  // kernel elements commute pairwise (sample)
  for (std::size_t i = 0; i < rep.kernel_generators.size(); i += 9)
    for (std::size_t j = i; j < rep.kernel_generators.size(); j += 13) {
      IMat a = evaluate_word(spec, rep.kernel_generators[i].word);
      IMat b = evaluate_word(spec, rep.kernel_generators[j].word);
      CHECK(a * b == b * a);
    }
}

TEST_CASE("a single involution: finite up to the bound") {
  auto lat = minkowski3();
  GroupSpec spec{lat, {basis_swap(3, 1, 2)}, 5};
  GroupReport rep = explore(spec);
  CHECK(rep.verdict == GroupVerdict::FiniteUpToL);
  CHECK(rep.elements_explored == 2);
  CHECK(rep.finite_part_order_lower_bound == 2);
  CHECK(rep.translation_rank == 0);
  CHECK_FALSE(rep.common_theta.has_value());
}

TEST_CASE("translations along different rays: hyperbolic witness at length 2") {
  HalphenModel model = HalphenModel::create(1);
  IMat m = lambda_alpha(model, {0, 1, -1, 0, 0, 0, 0, 0, 0, 0});
  IMat s = IMat::identity(10);
  s(1, 1) = -1;
  GroupSpec spec{model.lat, {m, s * m * s}, 4};

  GroupReport rep = explore(spec);
  CHECK(rep.verdict == GroupVerdict::HyperbolicFound);
  CHECK(rep.witness_word.size() == 2);
  Classification c = classify(Isometry::make(model.lat, evaluate_word(spec, rep.witness_word)));
  CHECK(c.tag == IsoType::Hyperbolic);
}

TEST_CASE("explore is deterministic") {
  HalphenModel model = HalphenModel::create(1);
  GroupSpec spec;
  spec.lat = model.lat;
  spec.generators.push_back(lambda_alpha(model, {0, 1, -1, 0, 0, 0, 0, 0, 0, 0}));
  spec.generators.push_back(lambda_alpha(model, {0, 0, 1, -1, 0, 0, 0, 0, 0, 0}));
  spec.word_bound = 3;
  const std::string a = emit_group_report(explore(spec)).dump();
  const std::string b = emit_group_report(explore(spec)).dump();
  CHECK(a == b);
}

TEST_CASE("explore validates generators") {
  auto lat = minkowski3();
  IMat bad = IMat::identity(3);
  bad(0, 0) = 2;
  GroupSpec spec{lat, {bad}, 2};
  CHECK_THROWS_AS(explore(spec), Error);
  GroupSpec empty{lat, {}, 2};
  CHECK_THROWS_AS(explore(empty), Error);
}

TEST_CASE("mixed parabolic and elliptic generators sharing the ray") {
  // lambda_alpha together with a permutation fixing K_X: still moderate,
  // and the finite part lower bound grows
  HalphenModel model = HalphenModel::create(1);
  IMat m = lambda_alpha(model, {0, 1, -1, 0, 0, 0, 0, 0, 0, 0});
  IMat perm = basis_swap(10, 3, 4);  // fixes K_X, acts on Sigma
  GroupSpec spec{model.lat, {m, perm}, 3};
  GroupReport rep = explore(spec);
  CHECK(rep.verdict == GroupVerdict::ModerateUpToL);
  REQUIRE(rep.common_theta.has_value());
  CHECK(rep.finite_part_order_lower_bound >= 2);
  CHECK(rep.translation_rank >= 1);
}

TEST_CASE("torsion closure: identity, involution, Weyl S3") {
  auto lat3 = minkowski3();
  TorsionClosure id_only = torsion_subgroup_is_finite_check(lat3, {IMat::identity(3)});
  CHECK(id_only.stabilized);
  CHECK(id_only.size == 1);

  TorsionClosure invol = torsion_subgroup_is_finite_check(lat3, {basis_swap(3, 1, 2)});
  CHECK(invol.stabilized);
  CHECK(invol.size == 2);

  // reflections in e1-e2 and e2-e3 generate the symmetric group on three
  // letters inside O(Z^{1,9})
  auto lat10 = minkowski(10);
  IVec r1 = ivec({0, 1, -1, 0, 0, 0, 0, 0, 0, 0});
  IVec r2 = ivec({0, 0, 1, -1, 0, 0, 0, 0, 0, 0});
  TorsionClosure weyl = torsion_subgroup_is_finite_check(
      lat10, {reflection(*lat10, r1), reflection(*lat10, r2)});
  CHECK(weyl.stabilized);
  CHECK(weyl.size == 6);

  // non-elliptic input is rejected
  HalphenModel model = HalphenModel::create(1);
  CHECK_THROWS_AS(torsion_subgroup_is_finite_check(
                      model.lat, {lambda_alpha(model, {0, 1, -1, 0, 0, 0, 0, 0, 0, 0})}),
                  Error);
}

TEST_CASE("torsion closure reports inconclusive when the cap is hit") {
  auto lat = minkowski3();
  TorsionClosure res = torsion_subgroup_is_finite_check(lat, {basis_swap(3, 1, 2)}, 1);
  CHECK_FALSE(res.stabilized);
}
