#include "lorentz/translation.hpp"

#include <algorithm>

namespace lorentz {

TranslationFrame TranslationFrame::create(LatticePtr lat, IVec theta, IVec eta) {
  TranslationFrame f;
  const Lattice& l = *lat;
  if (pairing(l, theta, theta) != 0) fail("not_isotropic", "theta must be isotropic");
  if (pairing(l, eta, eta) != 0) fail("not_isotropic", "eta must be isotropic");
  if (!in_positive_cone(l, theta)) fail("not_in_cone", "theta must lie in the positive cone");
  if (!in_positive_cone(l, eta)) fail("not_in_cone", "eta must lie in the positive cone");
  if (gcd_all(theta) != 1) fail("not_primitive", "theta must be primitive");
  f.pairing_te = pairing(l, theta, eta);
  if (f.pairing_te == 0) fail("collinear", "theta and eta are collinear");
  if (f.pairing_te < 0) fail("internal", "isotropic vectors in one cone pair non-negatively");

  const std::size_t n = l.rank();
  IMat rows(2, n);
  IVec gt = l.gram * theta, ge = l.gram * eta;
  for (std::size_t j = 0; j < n; ++j) {
    rows(0, j) = gt[j];
    rows(1, j) = ge[j];
  }
  f.complement_basis = integer_kernel(rows);
  if (f.complement_basis.size() != n - 2) fail("internal", "complement has unexpected rank");
  f.lat = std::move(lat);
  f.theta = std::move(theta);
  f.eta = std::move(eta);
  return f;
}

QVec project_complement(const TranslationFrame& frame, const QVec& v) {
  const Lattice& l = *frame.lat;
  const Rat t(frame.pairing_te);
  QVec th = to_rational(frame.theta), et = to_rational(frame.eta);
  const Rat s = pairing(l, v, et) / t;   // theta coefficient
  const Rat r = pairing(l, v, th) / t;   // eta coefficient
  QVec w = vec_sub(v, vec_scale(s, th));
  return vec_sub(w, vec_scale(r, et));
}

Translation make_translation(const TranslationFrame& frame, const QVec& zeta) {
  const Lattice& l = *frame.lat;
  const std::size_t n = l.rank();
  if (zeta.size() != n) fail("dimension_mismatch", "zeta length");
  QVec th = to_rational(frame.theta), et = to_rational(frame.eta);
  if (pairing(l, zeta, th) != 0 || pairing(l, zeta, et) != 0)
    fail("zeta_outside_complement", "zeta must be orthogonal to theta and eta");

  const Rat t(frame.pairing_te);
  const Rat a = -pairing(l, zeta, zeta) / (2 * t);

  QMat basis(n, n), image(n, n);
  basis.set_col(0, th);
  basis.set_col(1, et);
  image.set_col(0, th);
  image.set_col(1, vec_add(vec_add(vec_scale(a, th), et), zeta));
  for (std::size_t j = 0; j < n - 2; ++j) {
    QVec w = to_rational(frame.complement_basis[j]);
    basis.set_col(j + 2, w);
    const Rat lambda = -pairing(l, w, zeta) / t;
    image.set_col(j + 2, vec_add(w, vec_scale(lambda, th)));
  }

  Translation tr;
  tr.frame = frame;
  tr.zeta = zeta;
  tr.matrix = image * q_inverse(basis);
  tr.integral = is_integral(tr.matrix);
  return tr;
}

bool in_translation_group(const TranslationFrame& frame, const QMat& u) {
  QVec th = to_rational(frame.theta);
  if (u * th != th) return false;
  // identity on theta^perp / R theta: check the complement basis; together
  // with theta it spans theta^perp
  for (const IVec& w : frame.complement_basis) {
    QVec diff = vec_sub(u * to_rational(w), to_rational(w));
    // diff must be a rational multiple of theta
    std::size_t lead = th.size();
    for (std::size_t i = 0; i < th.size(); ++i)
      if (th[i] != 0) { lead = i; break; }
    const Rat c = diff[lead] / th[lead];
    if (diff != vec_scale(c, th)) return false;
  }
  return true;
}

QVec decompose_translation(const TranslationFrame& frame, const QMat& u) {
  if (!in_translation_group(frame, u))
    fail("not_translation", "isometry is not in T_theta for this frame");
  return project_complement(frame, u * to_rational(frame.eta));
}

Translation translation_from_matrix(const TranslationFrame& frame, const QMat& u) {
  QVec zeta = decompose_translation(frame, u);
  Translation tr;
  tr.frame = frame;
  tr.zeta = std::move(zeta);
  tr.matrix = u;
  tr.integral = is_integral(u);
  return tr;
}

std::vector<Int> scale_to_integer_poly(const std::vector<Rat>& p) {
  Int den = 1;
  for (const Rat& c : p) den = int_lcm(den, c.get_den());
  std::vector<Int> q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) q[i] = Rat(p[i] * Rat(den)).get_num();
  return q;
}

bool is_hyperbolic_exact(const Lattice&, const QMat& u) {
  return has_root_above_one(char_poly(u));
}

HyperbolicWitness hyperbolic_from_pair(const Translation& u, const Translation& v) {
  const Lattice& l = *u.frame.lat;
  if (u.frame.lat->gram.a != v.frame.lat->gram.a)
    fail("lattice_mismatch", "translations live in different lattices");
  if (vec_is_zero(u.zeta) || vec_is_zero(v.zeta))
    fail("zero_translation", "both translations must be nonzero");
  if (primitivized(l, u.frame.theta) == primitivized(l, v.frame.theta))
    fail("collinear", "translation directions are collinear");

  const QMat uv = u.matrix * v.matrix;
  if (is_hyperbolic_exact(l, uv)) {
    HyperbolicWitness w{uv, false, char_poly(uv), 0.0};
    w.spectral_radius_approx = root_above_one(scale_to_integer_poly(w.char_poly));
    return w;
  }
  const QMat uinv_v = q_inverse(u.matrix) * v.matrix;
  if (is_hyperbolic_exact(l, uinv_v)) {
    HyperbolicWitness w{uinv_v, true, char_poly(uinv_v), 0.0};
    w.spectral_radius_approx = root_above_one(scale_to_integer_poly(w.char_poly));
    return w;
  }
  fail("internal", "neither uv nor u^-1 v is hyperbolic");
}

std::optional<Rat> check_ray_proportionality(const Translation& u, const Translation& v,
                                             const IVec& x) {
  const Lattice& l = *u.frame.lat;
  if (u.frame.theta != v.frame.eta || u.frame.eta != v.frame.theta)
    fail("frame_mismatch", "expected mirrored frames (theta, eta) and (eta, theta)");
  if (!in_positive_cone(l, x)) fail("not_in_cone", "x must lie in the positive cone");
  QVec xq = to_rational(x);
  if (u.matrix * xq != v.matrix * xq) fail("not_equal_at_x", "u(x) != v(x)");
  if (vec_is_zero(u.zeta) || vec_is_zero(v.zeta))
    fail("zero_translation", "both translations must be nonzero");

  std::size_t lead = u.zeta.size();
  for (std::size_t i = 0; i < u.zeta.size(); ++i)
    if (u.zeta[i] != 0) { lead = i; break; }
  const Rat t = v.zeta[lead] / u.zeta[lead];
  if (v.zeta != vec_scale(t, u.zeta)) return std::nullopt;
  if (t <= 0) return std::nullopt;
  return t;
}

IVec find_isotropic_in_cone(const Lattice& lat, const IVec& avoid) {
  const std::size_t n = lat.rank();
  IVec avoid_prim;
  if (!avoid.empty()) avoid_prim = primitivized(lat, avoid);
  for (long radius = 1; radius <= 8; ++radius) {
    std::vector<long> c(n, -radius);
    for (;;) {
      long maxabs = 0;
      for (long x : c) maxabs = std::max(maxabs, std::labs(x));
      if (maxabs == radius) {  // new shell only
        IVec x(n);
        for (std::size_t i = 0; i < n; ++i) x[i] = c[i];
        if (!vec_is_zero(x) && pairing(lat, x, x) == 0 &&
            pairing(lat, x, lat.cone_ref) > 0 &&
            (avoid_prim.empty() || primitivized(lat, x) != avoid_prim))
          return x;
      }
      std::size_t pos = 0;
      while (pos < n && c[pos] == radius) c[pos++] = -radius;
      if (pos == n) break;
      ++c[pos];
    }
  }
  fail("no_isotropic_vector", "no small isotropic vector found in the cone");
}

}  // namespace lorentz
