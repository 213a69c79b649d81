#pragma once

#include <optional>

#include "lorentz/classify.hpp"
#include "lorentz/lattice.hpp"

namespace lorentz {

// A pair of non-collinear isotropic directions in the positive cone with a
// basis of their common orthogonal complement; the chart in which parabolic
// translations along theta are written.
struct TranslationFrame {
  LatticePtr lat;
  IVec theta;  // isotropic, in the cone, primitive
  IVec eta;    // isotropic, in the cone, non-collinear with theta
  Int pairing_te;
  std::vector<IVec> complement_basis;  // saturated basis of theta^perp cap eta^perp

  static TranslationFrame create(LatticePtr lat, IVec theta, IVec eta);
};

struct Translation {
  TranslationFrame frame;
  QVec zeta;    // ambient coordinates, inside span(complement_basis)
  QMat matrix;
  bool integral;
};

// The unique isometry with u(theta) = theta, u(eta) = a theta + eta + zeta,
// a = -zeta^2 / (2 theta.eta), and u(x) = x + lambda(x) theta on the
// complement, lambda(x) = -(x.zeta) / (theta.eta).
Translation make_translation(const TranslationFrame& frame, const QVec& zeta);

// Orthogonal projection onto theta^perp cap eta^perp along span(theta, eta).
QVec project_complement(const TranslationFrame& frame, const QVec& v);

// True iff u fixes theta and acts as the identity on theta^perp / R theta.
bool in_translation_group(const TranslationFrame& frame, const QMat& u);

// zeta = pi(u(eta)); errors unless u is in T_theta.
QVec decompose_translation(const TranslationFrame& frame, const QMat& u);

Translation translation_from_matrix(const TranslationFrame& frame, const QMat& u);

// Exact hyperbolicity test for a rational isometry preserving the cone:
// the deflated characteristic polynomial is negative at 1.
bool is_hyperbolic_exact(const Lattice& lat, const QMat& u);

struct HyperbolicWitness {
  QMat matrix;
  bool used_inverse;  // false: uv, true: u^-1 v
  std::vector<Rat> char_poly;
  double spectral_radius_approx;
};

// For translations u along theta and v along eta (non-collinear), one of
// uv, u^-1 v is hyperbolic; prefers uv when both are.
HyperbolicWitness hyperbolic_from_pair(const Translation& u, const Translation& v);

// Witness for the ray-proportionality lemma: when u(x) = v(x) for some x in
// the cone, psi(v) = t phi(u) with t > 0. Requires mirrored frames
// (v.frame = (eta, theta)). Returns nullopt if the zetas fail to be
// positively proportional, which would contradict the lemma.
std::optional<Rat> check_ray_proportionality(const Translation& u, const Translation& v,
                                             const IVec& x);

// Smallest isotropic lattice vector in the positive cone not collinear with
// `avoid`, by box enumeration of growing radius.
IVec find_isotropic_in_cone(const Lattice& lat, const IVec& avoid = {});

std::vector<Int> scale_to_integer_poly(const std::vector<Rat>& p);

}  // namespace lorentz
