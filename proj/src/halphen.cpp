#include "lorentz/halphen.hpp"

#include <sstream>

namespace lorentz {

HalphenModel HalphenModel::create(unsigned m) {
  if (m == 0) fail("bad_index", "Halphen index must be positive");
  HalphenModel model;
  IMat gram(10, 10);
  for (std::size_t i = 0; i < 10; ++i) gram(i, i) = (i == 0) ? 1 : -1;
  model.lat = Lattice::create(std::move(gram));
  model.kx.assign(10, Int(1));
  model.kx[0] = -3;
  model.m = m;
  model.fiber_class = vec_scale(Int(-static_cast<long>(m)), model.kx);
  return model;
}

namespace {

std::vector<const FiberComponent*> all_components(const FiberConfig& config) {
  std::vector<const FiberComponent*> out;
  for (const Fiber& f : config.fibers)
    for (const FiberComponent& c : f.components) out.push_back(&c);
  return out;
}

}  // namespace

IMat gram_of(const Lattice& lat, const std::vector<IVec>& vs) {
  IMat g(vs.size(), vs.size());
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i; j < vs.size(); ++j) {
      g(i, j) = pairing(lat, vs[i], vs[j]);
      g(j, i) = g(i, j);
    }
  return g;
}

void validate_config(const HalphenModel& model, const FiberConfig& config) {
  const Lattice& lat = *model.lat;

  if (config.sum_mu_minus_one() > 8)
    fail("mu_sum_exceeds_8", "sum(mu_i - 1) exceeds 8; no such configuration exists");

  std::size_t multiple_count = 0;
  for (std::size_t fi = 0; fi < config.fibers.size(); ++fi) {
    const Fiber& f = config.fibers[fi];
    std::ostringstream where;
    where << "fiber " << fi;
    if (f.components.size() < 2)
      fail("invalid_config", where.str() + ": a listed fiber must be reducible (>= 2 components)");
    if (f.multiple && ++multiple_count > 1)
      fail("invalid_config", "more than one multiple fiber");

    IVec sum(lat.rank(), Int(0));
    std::vector<Int> mults;
    std::vector<IVec> comps;
    for (const FiberComponent& c : f.components) {
      if (c.e.size() != lat.rank()) fail("invalid_config", where.str() + ": component length");
      if (c.a <= 0) fail("invalid_config", where.str() + ": multiplicities must be positive");
      if (pairing(lat, c.e, model.kx) != 0)
        fail("invalid_config", where.str() + ": component not orthogonal to K");
      if (pairing(lat, c.e, model.fiber_class) != 0)
        fail("invalid_config", where.str() + ": component not orthogonal to the fiber class");
      if (pairing(lat, c.e, c.e) != -2)
        fail("invalid_config", where.str() + ": component of a reducible fiber must have square -2");
      sum = vec_add(sum, vec_scale(c.a, c.e));
      mults.push_back(c.a);
      comps.push_back(c.e);
    }
    if (sum != model.fiber_class)
      fail("invalid_config", where.str() + ": multiplicities do not sum to the fiber class");
    const Int g = gcd_all(mults);
    const Int expected = f.multiple ? Int(model.m) : Int(1);
    if (g != expected)
      fail("invalid_config", where.str() + ": gcd of multiplicities must be " + expected.get_str() +
                                 (f.multiple ? " (multiple fiber)" : " (primitive fiber)"));
    IMat comp_mat(lat.rank(), comps.size());
    for (std::size_t j = 0; j < comps.size(); ++j) comp_mat.set_col(j, comps[j]);
    if (i_rank(comp_mat) != comps.size())
      fail("invalid_config", where.str() + ": components are linearly dependent");
  }

  std::vector<const FiberComponent*> comps = all_components(config);
  if (comps.empty()) return;  // unnodal: nothing further to check

  std::vector<IVec> vs;
  for (const FiberComponent* c : comps) vs.push_back(c->e);
  IMat big_gram = gram_of(lat, vs);
  Inertia in = inertia(big_gram);
  if (in.pos != 0)
    fail("invalid_config", "the form is not negative semidefinite on the component span");

  // radical of the restricted form must be the integer span of the primitive
  // fiber classes; for the multiple fiber m D the primitive class D itself
  // is a supported square-zero class
  IMat fiber_mat(comps.size(), config.fibers.size());
  {
    std::size_t row = 0;
    for (std::size_t fi = 0; fi < config.fibers.size(); ++fi) {
      const Int g = config.fibers[fi].multiple ? Int(model.m) : Int(1);
      for (const FiberComponent& c : config.fibers[fi].components)
        fiber_mat(row++, fi) = exact_div(c.a, g);
    }
  }
  for (const IVec& rad : integer_kernel(big_gram)) {
    if (!solve_integer(fiber_mat, rad))
      fail("invalid_config",
           "an isotropic combination of components is not an integer combination of fibers");
  }
  for (std::size_t fi = 0; fi < config.fibers.size(); ++fi) {
    IVec fv = fiber_mat.col(fi);
    if (!vec_is_zero(big_gram * fv))
      fail("internal", "fiber class not in the radical despite the sum condition");
  }
}

AutGenerator translation_action(const HalphenModel& model, const IVec& alpha) {
  const Lattice& lat = *model.lat;
  if (alpha.size() != lat.rank()) fail("dimension_mismatch", "alpha length");
  if (pairing(lat, alpha, model.kx) != 0)
    fail("alpha_not_orthogonal", "alpha must be orthogonal to K");
  const Int alpha_sq = pairing(lat, alpha, alpha);
  if (alpha_sq % 2 != 0)
    fail("broken_parity", "alpha^2 must be even on K^perp (K is characteristic)");
  const Int half_sq = exact_div(alpha_sq, Int(2));
  const Int m(static_cast<long>(model.m));

  const std::size_t n = lat.rank();
  IMat u(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    IVec d(n, Int(0));
    d[j] = 1;
    const Int dk = pairing(lat, d, model.kx);
    const Int da = pairing(lat, d, alpha);
    // D - m (D.K) alpha + { m (D.alpha) - m^2 (D.K) alpha^2/2 } K
    const Int c_alpha = -m * dk;
    const Int c_k = m * da - m * m * dk * half_sq;
    IVec img = vec_add(d, vec_add(vec_scale(c_alpha, alpha), vec_scale(c_k, model.kx)));
    u.set_col(j, img);
  }
  return AutGenerator{alpha, Isometry::make(model.lat, std::move(u))};
}

RankPair translation_group_rank(const HalphenModel& model, const FiberConfig& config) {
  validate_config(model, config);
  const Lattice& lat = *model.lat;
  std::vector<const FiberComponent*> comps = all_components(config);

  IMat span_mat(lat.rank(), 1 + comps.size());
  span_mat.set_col(0, model.kx);
  for (std::size_t j = 0; j < comps.size(); ++j) span_mat.set_col(j + 1, comps[j]->e);
  const std::size_t rk_n = i_rank(span_mat);

  const std::size_t sum = config.sum_mu_minus_one();
  if (rk_n != 1 + sum)
    fail("internal", "rank of N disagrees with 1 + sum(mu_i - 1) on a validated config");
  return RankPair{rk_n, 8 - sum};
}

CrucialSolution crucial_solver(const HalphenModel& model, const FiberConfig& config,
                               const IVec& d) {
  validate_config(model, config);
  const Lattice& lat = *model.lat;
  if (d.size() != lat.rank()) fail("dimension_mismatch", "divisor length");
  if (pairing(lat, d, model.fiber_class) != 0)
    fail("not_orthogonal_to_fiber", "D must satisfy D.C = 0");

  std::vector<const FiberComponent*> comps = all_components(config);
  std::vector<IVec> vs;
  for (const FiberComponent* c : comps) vs.push_back(c->e);
  IMat gram = gram_of(lat, vs);
  IVec w(comps.size());
  for (std::size_t i = 0; i < comps.size(); ++i) w[i] = pairing(lat, d, vs[i]);

  if (comps.empty()) return CrucialSolution{Int(1), IVec(lat.rank(), Int(0)), {}};

  auto sol = solve_integer_minimal_dilation(gram, w);
  if (!sol) fail("internal", "pairing system inconsistent on a validated config");
  IVec s_vec(lat.rank(), Int(0));
  for (std::size_t j = 0; j < comps.size(); ++j)
    s_vec = vec_add(s_vec, vec_scale(sol->second[j], vs[j]));
  return CrucialSolution{sol->first, std::move(s_vec), std::move(sol->second)};
}

std::vector<IVec> kx_perp_basis(const HalphenModel& model) {
  return orthogonal_complement(*model.lat, model.kx);
}

GeneratorBasis generator_basis(const HalphenModel& model, const FiberConfig& config) {
  validate_config(model, config);
  const Lattice& lat = *model.lat;

  GeneratorBasis out;
  const std::size_t sum = config.sum_mu_minus_one();
  if (sum == 8) {
    out.notice = "sum(mu_i - 1) = 8: the translation group is trivial and the "
                 "image of Aut in O(NS) is finite";
    return out;
  }

  std::vector<IVec> kperp = kx_perp_basis(model);
  IMat basis(lat.rank(), kperp.size());
  for (std::size_t j = 0; j < kperp.size(); ++j) basis.set_col(j, kperp[j]);

  // N = span(K, components), written in K^perp coordinates
  std::vector<IVec> n_gens{model.kx};
  for (const Fiber& f : config.fibers)
    for (const FiberComponent& c : f.components) n_gens.push_back(c.e);
  IMat coords(kperp.size(), n_gens.size());
  for (std::size_t j = 0; j < n_gens.size(); ++j) {
    auto c = solve_integer(basis, n_gens[j]);
    if (!c) fail("internal", "N generator outside the saturated K^perp basis");
    coords.set_col(j, *c);
  }

  Smith s = smith_normal_form(coords);
  std::size_t r = 0;
  for (std::size_t i = 0; i < std::min(coords.rows, coords.cols); ++i)
    if (s.d(i, i) != 0) ++r;
  IMat uinv = to_integer(q_inverse(to_rational(s.u)));

  // columns r.. of u^-1 lift a basis of the free part of K^perp / N
  for (std::size_t j = r; j < kperp.size(); ++j) {
    IVec alpha = basis * uinv.col(j);
    AutGenerator gen = translation_action(model, alpha);
    Classification cls = classify(gen.matrix);
    if (cls.tag != IsoType::Parabolic)
      fail("internal", "lifted generator is not parabolic");
    out.generators.push_back(std::move(gen));
  }
  if (out.generators.size() != 8 - sum)
    fail("internal", "generator count disagrees with the rank formula");
  return out;
}

}  // namespace lorentz
