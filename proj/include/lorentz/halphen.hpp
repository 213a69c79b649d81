#pragma once

#include <string>

#include "lorentz/classify.hpp"
#include "lorentz/lattice.hpp"

namespace lorentz {

// Neron-Severi lattice of a Halphen surface of index m: Z^{1,9} with
// gram diag(1,-1,...,-1), K = -3e0 + e1 + ... + e9, fiber class C = -mK.
struct HalphenModel {
  LatticePtr lat;
  IVec kx;
  unsigned m = 1;
  IVec fiber_class;

  static HalphenModel create(unsigned m);
};

struct FiberComponent {
  IVec e;
  Int a;  // multiplicity
};

struct Fiber {
  std::vector<FiberComponent> components;
  bool multiple = false;  // the fiber m*D; gcd of multiplicities is m
};

struct FiberConfig {
  std::vector<Fiber> fibers;
  std::size_t sum_mu_minus_one() const {
    std::size_t s = 0;
    for (const Fiber& f : fibers) s += f.components.size() - 1;
    return s;
  }
};

// Lattice-level necessary conditions for a reducible-fiber configuration:
// every fiber has >= 2 components, components are (-2)-classes orthogonal to
// K with multiplicities summing to C, per-fiber independence, negative
// semidefiniteness on the whole component span, and radical spanned by the
// fiber classes. Throws Error("mu_sum_exceeds_8") when sum(mu_i - 1) > 8 and
// Error("invalid_config") otherwise.
void validate_config(const HalphenModel& model, const FiberConfig& config);

struct AutGenerator {
  IVec alpha;  // in K^perp
  Isometry matrix;
};

// The translation action D -> D - m (D.K) alpha + {m (D.alpha)
// - m^2/2 (D.K) alpha^2} K; integral because alpha^2 is even on K^perp.
AutGenerator translation_action(const HalphenModel& model, const IVec& alpha);

struct RankPair {
  std::size_t rk_n = 0;  // rank of span(K, components) = 1 + sum(mu_i - 1)
  std::size_t rk_g = 0;  // rank of the free part of K^perp / N = 8 - sum
};

RankPair translation_group_rank(const HalphenModel& model, const FiberConfig& config);

struct CrucialSolution {
  Int n;       // minimal N >= 1
  IVec s;      // integer combination of components with (N D - S).E_j = 0
  IVec coeffs; // component coefficients of S
};

CrucialSolution crucial_solver(const HalphenModel& model, const FiberConfig& config,
                               const IVec& d);

struct GeneratorBasis {
  std::vector<AutGenerator> generators;
  std::string notice;  // set when rk_g = 0 and the list is empty
};

// Lifts a basis of the free part of K^perp / N and applies the translation
// formula to each lift.
GeneratorBasis generator_basis(const HalphenModel& model, const FiberConfig& config);

// Saturated integer basis of K^perp.
std::vector<IVec> kx_perp_basis(const HalphenModel& model);

// Gram matrix of a list of lattice vectors.
IMat gram_of(const Lattice& lat, const std::vector<IVec>& vs);

}  // namespace lorentz
