#pragma once

#include "lorentz/lattice.hpp"

namespace lorentz {

enum class IsoType { Elliptic, Parabolic, Hyperbolic };

const char* to_string(IsoType t);

struct Classification {
  IsoType tag = IsoType::Elliptic;
  unsigned long order = 0;                 // Elliptic
  IVec theta;                              // Parabolic: primitive isotropic fixed ray
  unsigned long translation_exponent = 0;  // Parabolic: minimal k with u^k in T_theta
  std::vector<Int> char_poly;              // ascending coefficients
  double spectral_radius_approx = 0.0;     // Hyperbolic
};

// Trichotomy for an integral isometry in O_+.
// Quasi-unipotence is decided through the single exponent
// K = lcm{ m : phi(m) <= n } and nilpotency of u^K - id.
Classification classify(const Isometry& u);

// The primitive integral theta in the positive cone with u(theta) = theta,
// theta^2 = 0; errors unless u is parabolic.
IVec invariant_isotropic_ray(const Isometry& u);

// Minimal k >= 1 such that u^k acts as the identity on
// Sigma = (theta^perp cap Lattice) / Z theta.
unsigned long translation_exponent(const Isometry& u, const IVec& theta);

enum class GrowthClass { Bounded, Quadratic, Exponential };

const char* to_string(GrowthClass c);

struct GrowthSample {
  unsigned long n;
  double norm;       // max-abs entry of u^n (saturates to inf)
  double log2_norm;  // exact-width logarithm, used for the fits
};

struct GrowthReport {
  std::vector<GrowthSample> samples;
  double fitted_exponent = 0.0;
  GrowthClass fitted_class = GrowthClass::Bounded;
};

// Norm growth of powers along n = 1, 2, 4, ..., n_max; log-log regression
// for the exponent. Diagnostic only, never used to classify.
GrowthReport growth_probe(const Isometry& u, unsigned long n_max);

// Basis of theta^perp cap Lattice whose first column is theta; the classes
// of the remaining columns form a basis of Sigma.
IMat sigma_extended_basis(const Lattice& lat, const IVec& theta);

// Action of u on Sigma in that basis; u must fix theta.
IMat induced_action_on_sigma(const Lattice& lat, const IMat& u, const IVec& theta,
                             const IMat& extended_basis);

}  // namespace lorentz
