#include "lorentz/classify.hpp"

#include <cmath>

namespace lorentz {

const char* to_string(IsoType t) {
  switch (t) {
    case IsoType::Elliptic: return "Elliptic";
    case IsoType::Parabolic: return "Parabolic";
    case IsoType::Hyperbolic: return "Hyperbolic";
  }
  return "?";
}

const char* to_string(GrowthClass c) {
  switch (c) {
    case GrowthClass::Bounded: return "bounded";
    case GrowthClass::Quadratic: return "quadratic";
    case GrowthClass::Exponential: return "exponential";
  }
  return "?";
}

namespace {

unsigned long to_ulong(const Int& x) {
  if (!x.fits_ulong_p()) fail("internal", "exponent does not fit an unsigned long");
  return x.get_ui();
}

// Minimal d | bound with u^d = id, assuming u^bound = id.
unsigned long element_order(const IMat& u, unsigned long bound) {
  unsigned long ord = bound;
  for (unsigned long p = 2; p <= ord; ++p) {
    if (ord % p) continue;
    while (ord % p == 0 && pow(u, ord / p).is_identity()) ord /= p;
  }
  return ord;
}

double max_abs_log2(const IMat& m) {
  const Int* best = &m.a[0];
  for (const Int& x : m.a)
    if (mpz_cmpabs(x.get_mpz_t(), best->get_mpz_t()) > 0) best = &x;
  return log2_abs(*best);
}

// Ratio-convergence power iteration for the dominant eigenvalue.
double power_iteration_radius(const IMat& u) {
  const std::size_t n = u.rows;
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    Rng rng(0x5eed0000 + seed);
    IVec v(n);
    for (Int& x : v) x = rng.range(-9, 9);
    if (vec_is_zero(v)) continue;
    double prev_log = 0, ratio = 0;
    {
      const Int* best = &v[0];
      for (const Int& x : v)
        if (mpz_cmpabs(x.get_mpz_t(), best->get_mpz_t()) > 0) best = &x;
      prev_log = log2_abs(*best);
    }
    int stable = 0;
    for (int iter = 0; iter < 30000; ++iter) {
      v = u * v;
      const Int* best = &v[0];
      for (const Int& x : v)
        if (mpz_cmpabs(x.get_mpz_t(), best->get_mpz_t()) > 0) best = &x;
      const double cur_log = log2_abs(*best);
      const double r = std::exp2(cur_log - prev_log);
      prev_log = cur_log;
      if (iter > 4 && std::fabs(r - ratio) <= 1e-9 * std::fabs(r)) {
        if (++stable >= 3 && r > 1.0) return r;
      } else {
        stable = 0;
      }
      ratio = r;
    }
  }
  fail("internal", "power iteration did not converge");
}

}  // namespace

IMat sigma_extended_basis(const Lattice& lat, const IVec& theta) {
  const std::size_t n = lat.rank();
  std::vector<IVec> comp = orthogonal_complement(lat, theta);
  if (comp.size() != n - 1) fail("internal", "unexpected orthogonal complement rank");
  IMat basis(n, n - 1);
  for (std::size_t j = 0; j < comp.size(); ++j) basis.set_col(j, comp[j]);

  auto coords = solve_integer(basis, theta);
  if (!coords) fail("internal", "theta not in its own orthogonal complement");
  IMat col(n - 1, 1);
  for (std::size_t i = 0; i < n - 1; ++i) col(i, 0) = (*coords)[i];
  Smith s = smith_normal_form(col);
  if (s.d(0, 0) != 1) fail("not_primitive", "theta must be primitive");
  IMat u = s.u;
  if (s.v(0, 0) == -1)
    for (Int& x : u.a) x = -x;
  // now u * coords = e_1, so basis * u^-1 has theta as first column
  IMat uinv = to_integer(q_inverse(to_rational(u)));
  return basis * uinv;
}

IMat induced_action_on_sigma(const Lattice& lat, const IMat& u, const IVec& theta,
                             const IMat& extended_basis) {
  const std::size_t n = lat.rank();
  if (u * theta != theta) fail("theta_not_fixed", "theta is not fixed by the isometry");
  IMat image = u * extended_basis;
  IMat x(n - 1, n - 1);
  for (std::size_t j = 0; j < n - 1; ++j) {
    auto sol = solve_integer(extended_basis, image.col(j));
    if (!sol) fail("internal", "isometry does not preserve theta^perp");
    x.set_col(j, *sol);
  }
  IMat induced(n - 2, n - 2);
  for (std::size_t i = 1; i < n - 1; ++i)
    for (std::size_t j = 1; j < n - 1; ++j) induced(i - 1, j - 1) = x(i, j);
  return induced;
}

unsigned long translation_exponent(const Isometry& u, const IVec& theta) {
  const Lattice& lat = *u.lat;
  if (pairing(lat, theta, theta) != 0) fail("not_isotropic", "theta must be isotropic");
  if (u.mat * theta != theta) fail("theta_not_fixed", "theta is not fixed by the isometry");
  const std::size_t n = lat.rank();
  if (n <= 2) return 1;
  IMat basis = sigma_extended_basis(lat, primitivized(lat, theta));
  IMat induced = induced_action_on_sigma(lat, u.mat, theta, basis);
  const unsigned long cap = to_ulong(quasi_unipotence_exponent(n - 2));
  IMat p = induced;
  for (unsigned long k = 1; k <= cap; ++k) {
    if (p.is_identity()) return k;
    p = p * induced;
  }
  fail("internal", "induced action on Sigma has order beyond its bound");
}

Classification classify(const Isometry& u) {
  const Lattice& lat = *u.lat;
  const std::size_t n = lat.rank();
  Classification res;
  res.char_poly = char_poly(u.mat);

  // exact hyperbolicity certificate first: it is equivalent to the
  // K-power tests below and avoids powering matrices with huge entries
  if (has_root_above_one(res.char_poly)) {
    res.tag = IsoType::Hyperbolic;
    res.spectral_radius_approx = power_iteration_radius(u.mat);
    return res;
  }

  const unsigned long k_exp = to_ulong(quasi_unipotence_exponent(n));
  IMat uk = pow(u.mat, k_exp);
  if (uk.is_identity()) {
    res.tag = IsoType::Elliptic;
    res.order = element_order(u.mat, k_exp);
    return res;
  }

  IMat nil = uk - IMat::identity(n);
  if (!pow(nil, static_cast<unsigned long>(n)).is_zero())
    fail("internal", "non-hyperbolic isometry with non-nilpotent u^K - id");

  res.tag = IsoType::Parabolic;

  // fixed space of u^K; the radical of the restricted form is the theta line
  std::vector<QVec> fixed = q_kernel(to_rational(nil));
  const std::size_t w = fixed.size();
  QMat restricted(w, w);
  for (std::size_t i = 0; i < w; ++i)
    for (std::size_t j = 0; j < w; ++j) restricted(i, j) = pairing(lat, fixed[i], fixed[j]);
  std::vector<QVec> radical = q_kernel(restricted);
  if (radical.size() != 1) fail("internal", "parabolic fixed space has no unique isotropic ray");
  QVec theta_q(n, Rat(0));
  for (std::size_t i = 0; i < w; ++i)
    theta_q = vec_add(theta_q, vec_scale(radical[0][i], fixed[i]));
  res.theta = primitivized(lat, clear_denominators(theta_q));
  if (pairing(lat, res.theta, res.theta) != 0 || u.mat * res.theta != res.theta)
    fail("internal", "extracted ray is not an isotropic fixed vector");
  res.translation_exponent = translation_exponent(u, res.theta);
  return res;
}

IVec invariant_isotropic_ray(const Isometry& u) {
  Classification c = classify(u);
  if (c.tag != IsoType::Parabolic) fail("not_parabolic", "isometry has no invariant isotropic ray");
  return c.theta;
}

GrowthReport growth_probe(const Isometry& u, unsigned long n_max) {
  if (n_max < 8) fail("bad_n_max", "growth probe needs n_max >= 8");
  std::vector<unsigned long> grid;
  for (unsigned long n = 1; n <= n_max; n *= 2) grid.push_back(n);
  if (grid.back() != n_max) grid.push_back(n_max);

  GrowthReport rep;
  for (unsigned long n : grid) {
    IMat p = pow(u.mat, n);
    const double lg = max_abs_log2(p);
    rep.samples.push_back(GrowthSample{n, std::exp2(lg), lg});
  }

  const std::size_t m = rep.samples.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  double tx = 0, txx = 0, txy = 0;  // exponential fit against n itself
  const double ln2 = std::log(2.0);
  for (const GrowthSample& s : rep.samples) {
    const double x = std::log(static_cast<double>(s.n));
    const double y = std::max(s.log2_norm, 0.0) * ln2;
    sx += x; sy += y; sxx += x * x; sxy += x * y;
    const double t = static_cast<double>(s.n);
    tx += t; txx += t * t; txy += t * y;
  }
  const double dm = static_cast<double>(m);
  const double slope = (dm * sxy - sx * sy) / (dm * sxx - sx * sx);
  const double eslope = (dm * txy - tx * sy) / (dm * txx - tx * tx);
  rep.fitted_exponent = slope;

  double rss_poly = 0, rss_exp = 0;
  const double a_poly = (sy - slope * sx) / dm;
  const double a_exp = (sy - eslope * tx) / dm;
  for (const GrowthSample& s : rep.samples) {
    const double y = std::max(s.log2_norm, 0.0) * ln2;
    const double ep = y - (a_poly + slope * std::log(static_cast<double>(s.n)));
    const double ee = y - (a_exp + eslope * static_cast<double>(s.n));
    rss_poly += ep * ep;
    rss_exp += ee * ee;
  }

  if (rss_exp < rss_poly && eslope > 0.05) rep.fitted_class = GrowthClass::Exponential;
  else if (std::fabs(slope) <= 0.5) rep.fitted_class = GrowthClass::Bounded;
  else if (slope >= 1.7 && slope <= 2.3) rep.fitted_class = GrowthClass::Quadratic;
  else rep.fitted_class = slope < 1.1 ? GrowthClass::Bounded : GrowthClass::Quadratic;
  return rep;
}

}  // namespace lorentz
