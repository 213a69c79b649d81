#pragma once

#include <optional>
#include <string>

#include "lorentz/classify.hpp"

namespace lorentz {

struct GroupSpec {
  LatticePtr lat;
  std::vector<IMat> generators;
  unsigned word_bound;
};

enum class GroupVerdict { HyperbolicFound, ModerateUpToL, FiniteUpToL };

const char* to_string(GroupVerdict v);

// Words are sequences of signed 1-based generator indices; -i means the
// inverse of generator i.
using Word = std::vector<int>;

std::string word_to_string(const Word& w);

struct KernelElement {
  Word word;
  QVec zeta;
};

struct GroupReport {
  GroupVerdict verdict = GroupVerdict::FiniteUpToL;
  Word witness_word;                       // hyperbolic_found only
  std::optional<IVec> common_theta;
  std::size_t translation_rank = 0;
  std::size_t finite_part_order_lower_bound = 0;
  std::vector<KernelElement> kernel_generators;
  std::string inconsistency_hint;          // nonempty when the explored data
                                           // already forces a hyperbolic
                                           // element beyond the bound
  std::size_t elements_explored = 0;
};

// BFS over freely reduced words up to the bound, classifying every distinct
// element; see GroupReport for what each verdict carries.
GroupReport explore(const GroupSpec& spec);

struct TorsionClosure {
  bool stabilized = false;
  std::size_t size = 0;
};

// Close a set of elliptic elements under products, up to a cap
// (default 10 n^2). stabilized=false means the cap was hit (inconclusive).
TorsionClosure torsion_subgroup_is_finite_check(const LatticePtr& lat,
                                                const std::vector<IMat>& elements,
                                                std::size_t cap = 0);

}  // namespace lorentz
