#include "lorentz/group.hpp"

#include <deque>
#include <map>
#include <set>
#include <sstream>

#include "lorentz/translation.hpp"

namespace lorentz {

const char* to_string(GroupVerdict v) {
  switch (v) {
    case GroupVerdict::HyperbolicFound: return "hyperbolic_found";
    case GroupVerdict::ModerateUpToL: return "moderate_up_to_L";
    case GroupVerdict::FiniteUpToL: return "finite_up_to_L";
  }
  return "?";
}

std::string word_to_string(const Word& w) {
  if (w.empty()) return "id";
  std::ostringstream os;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) os << "*";
    os << "g" << std::abs(w[i]);
    if (w[i] < 0) os << "^-1";
  }
  return os.str();
}

namespace {

std::string matrix_key(const IMat& m) {
  std::ostringstream os;
  for (const Int& x : m.a) os << x.get_str() << ',';
  return os.str();
}

}  // namespace

GroupReport explore(const GroupSpec& spec) {
  const LatticePtr& lat = spec.lat;
  const std::size_t k = spec.generators.size();
  if (k == 0) fail("invalid_generators", "empty generator list");

  // letters in the fixed order g1, g1^-1, g2, g2^-1, ...
  std::vector<IMat> letter_mat;
  std::vector<int> letter_id;
  for (std::size_t i = 0; i < k; ++i) {
    Isometry g = Isometry::make(lat, spec.generators[i]);  // validates
    letter_mat.push_back(g.mat);
    letter_id.push_back(static_cast<int>(i) + 1);
    letter_mat.push_back(isometry_inverse_mat(*lat, g.mat));
    letter_id.push_back(-static_cast<int>(i) - 1);
  }

  struct Element {
    IMat mat;
    Word word;
    Classification cls;
  };
  std::vector<Element> elements;
  std::map<std::string, std::size_t> seen;

  GroupReport rep;

  const IMat id = IMat::identity(lat->rank());
  elements.push_back(Element{id, {}, classify(identity_isometry(lat))});
  seen.emplace(matrix_key(id), 0);

  std::vector<std::size_t> frontier{0};
  for (unsigned len = 1; len <= spec.word_bound; ++len) {
    std::vector<std::size_t> next;
    for (std::size_t ei : frontier) {
      const Word parent_word = elements[ei].word;  // copy: elements may grow
      const IMat parent_mat = elements[ei].mat;
      for (std::size_t li = 0; li < letter_mat.size(); ++li) {
        if (!parent_word.empty() && parent_word.back() == -letter_id[li]) continue;  // free reduction
        IMat m = parent_mat * letter_mat[li];
        std::string key = matrix_key(m);
        if (seen.count(key)) continue;
        Word w = parent_word;
        w.push_back(letter_id[li]);
        Classification cls = classify(Isometry{lat, m});
        if (cls.tag == IsoType::Hyperbolic) {
          rep.verdict = GroupVerdict::HyperbolicFound;
          rep.witness_word = w;
          rep.elements_explored = elements.size() + 1;
          return rep;
        }
        seen.emplace(std::move(key), elements.size());
        next.push_back(elements.size());
        elements.push_back(Element{std::move(m), std::move(w), std::move(cls)});
      }
    }
    frontier = std::move(next);
  }

  rep.elements_explored = elements.size();

  bool any_parabolic = false;
  std::set<IVec> rays;
  for (const Element& e : elements)
    if (e.cls.tag == IsoType::Parabolic) {
      any_parabolic = true;
      rays.insert(e.cls.theta);
    }

  if (!any_parabolic) {
    rep.verdict = GroupVerdict::FiniteUpToL;
    rep.finite_part_order_lower_bound = elements.size();
    return rep;
  }

  rep.verdict = GroupVerdict::ModerateUpToL;
  if (rays.size() != 1) {
    rep.inconsistency_hint =
        "parabolic elements fix different isotropic rays; a hyperbolic element "
        "exists at some word length beyond the bound";
    return rep;
  }
  IVec theta = *rays.begin();
  for (const IMat& g : spec.generators)
    if (g * theta != theta) {
      rep.inconsistency_hint =
          "a generator moves the parabolic fixed ray; a hyperbolic element "
          "exists at some word length beyond the bound";
      return rep;
    }
  rep.common_theta = theta;

  // induced actions on Sigma = (theta^perp cap Lattice) / Z theta
  IMat basis = sigma_extended_basis(*lat, theta);
  std::set<std::string> induced_seen;
  std::vector<std::size_t> kernel_indices;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    IMat induced = induced_action_on_sigma(*lat, elements[i].mat, theta, basis);
    induced_seen.insert(matrix_key(induced));
    if (induced.is_identity() && !elements[i].word.empty()) kernel_indices.push_back(i);
  }
  rep.finite_part_order_lower_bound = induced_seen.size();

  IVec eta = find_isotropic_in_cone(*lat, theta);
  TranslationFrame frame = TranslationFrame::create(lat, theta, eta);
  QMat zmat(kernel_indices.size(), lat->rank());
  for (std::size_t r = 0; r < kernel_indices.size(); ++r) {
    const Element& e = elements[kernel_indices[r]];
    QVec zeta = decompose_translation(frame, to_rational(e.mat));
    for (std::size_t c = 0; c < zeta.size(); ++c) zmat(r, c) = zeta[c];
    rep.kernel_generators.push_back(KernelElement{e.word, std::move(zeta)});
  }
  rep.translation_rank = q_rank(zmat);
  return rep;
}

TorsionClosure torsion_subgroup_is_finite_check(const LatticePtr& lat,
                                                const std::vector<IMat>& elements,
                                                std::size_t cap) {
  const std::size_t n = lat->rank();
  if (cap == 0) cap = 10 * n * n;
  std::vector<IMat> gens;
  for (const IMat& m : elements) {
    Classification c = classify(Isometry::make(lat, m));
    if (c.tag != IsoType::Elliptic) fail("non_elliptic", "torsion check needs elliptic inputs");
    gens.push_back(m);
  }

  std::map<std::string, std::size_t> seen;
  std::deque<IMat> todo;
  const IMat id = IMat::identity(n);
  seen.emplace(matrix_key(id), 0);
  todo.push_back(id);
  for (const IMat& g : gens)
    if (seen.emplace(matrix_key(g), seen.size()).second) todo.push_back(g);

  while (!todo.empty()) {
    IMat cur = std::move(todo.front());
    todo.pop_front();
    for (const IMat& g : gens) {
      for (IMat prod : {cur * g, g * cur}) {
        if (seen.size() > cap) return TorsionClosure{false, seen.size()};
        if (seen.emplace(matrix_key(prod), seen.size()).second) todo.push_back(std::move(prod));
      }
    }
  }
  return TorsionClosure{true, seen.size()};
}

}  // namespace lorentz
