#pragma once

#include <memory>

#include "lorentz/linalg.hpp"
#include "lorentz/mat.hpp"

namespace lorentz {

// Integral lattice of signature (1, n-1) with a chosen positive cone.
// cone_ref is any vector of positive square; the component of the positive
// cone containing it is the distinguished one.
struct Lattice {
  IMat gram;
  IVec cone_ref;

  std::size_t rank() const { return gram.rows; }

  // Validates symmetry, signature (1, n-1) and cone_ref^2 > 0. When cone_ref
  // is empty the first basis vector is used; it must have positive square.
  static std::shared_ptr<const Lattice> create(IMat gram, IVec cone_ref = {});
};

using LatticePtr = std::shared_ptr<const Lattice>;

// Exact inertia of a symmetric integer matrix.
Inertia signature_of(const IMat& gram);

Int pairing(const Lattice& lat, const IVec& x, const IVec& y);
Rat pairing(const Lattice& lat, const QVec& x, const QVec& y);

struct IsometryCheck {
  bool ok = false;
  std::size_t i = 0, j = 0;  // first violated Gram entry when !ok
};

// UT * G * U = G, entrywise; total (never throws on well-shaped input).
IsometryCheck is_isometry(const Lattice& lat, const IMat& u);
bool preserves_cone(const Lattice& lat, const IMat& u);
bool preserves_cone(const Lattice& lat, const QMat& u);

// x != 0, x^2 >= 0 and x on the cone_ref side.
bool in_positive_cone(const Lattice& lat, const IVec& x);
bool in_positive_cone(const Lattice& lat, const QVec& x);

// Divide by the gcd of the coordinates; sign fixed so the result pairs
// positively with cone_ref, with first-nonzero-positive as the tie-break.
IVec primitivized(const Lattice& lat, IVec x);

// Element of O_+(Lattice); validated on construction.
struct Isometry {
  LatticePtr lat;
  IMat mat;

  static Isometry make(LatticePtr lat, IMat mat);

  std::size_t rank() const { return lat->rank(); }
  IVec apply(const IVec& x) const { return mat * x; }
};

Isometry compose(const Isometry& u, const Isometry& v);  // apply v, then u
Isometry inverse(const Isometry& u);
Isometry identity_isometry(LatticePtr lat);

// Integral inverse of an isometry matrix: G^-1 U^T G.
IMat isometry_inverse_mat(const Lattice& lat, const IMat& u);

// Saturated integer basis of theta^perp in the lattice.
std::vector<IVec> orthogonal_complement(const Lattice& lat, const IVec& theta);

}  // namespace lorentz
