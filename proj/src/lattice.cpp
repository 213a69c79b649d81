#include "lorentz/lattice.hpp"

namespace lorentz {

Inertia signature_of(const IMat& gram) { return inertia(gram); }

std::shared_ptr<const Lattice> Lattice::create(IMat gram, IVec cone_ref) {
  const std::size_t n = gram.rows;
  if (gram.cols != n || n == 0) fail("bad_lattice", "gram matrix must be square and nonempty");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (gram(i, j) != gram(j, i)) fail("not_symmetric", "gram matrix must be symmetric");
  const Inertia sig = inertia(gram);
  if (sig.pos != 1 || sig.zero != 0)
    fail("bad_signature", "gram matrix must have signature (1, n-1)");

  auto lat = std::make_shared<Lattice>();
  lat->gram = std::move(gram);
  if (cone_ref.empty()) {
    cone_ref.assign(n, Int(0));
    cone_ref[0] = 1;
  }
  if (cone_ref.size() != n) fail("dimension_mismatch", "cone_ref length");
  lat->cone_ref = std::move(cone_ref);
  if (pairing(*lat, lat->cone_ref, lat->cone_ref) <= 0)
    fail("bad_cone_ref", "cone_ref must have positive square");
  return lat;
}

Int pairing(const Lattice& lat, const IVec& x, const IVec& y) {
  const std::size_t n = lat.rank();
  if (x.size() != n || y.size() != n) fail("dimension_mismatch", "pairing operand length");
  Int s = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) s += x[i] * lat.gram(i, j) * y[j];
  }
  return s;
}

Rat pairing(const Lattice& lat, const QVec& x, const QVec& y) {
  const std::size_t n = lat.rank();
  if (x.size() != n || y.size() != n) fail("dimension_mismatch", "pairing operand length");
  Rat s = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) s += x[i] * Rat(lat.gram(i, j)) * y[j];
  }
  return s;
}

IsometryCheck is_isometry(const Lattice& lat, const IMat& u) {
  const std::size_t n = lat.rank();
  if (u.rows != n || u.cols != n) fail("dimension_mismatch", "isometry matrix shape");
  IMat g = transpose(u) * lat.gram * u;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (g(i, j) != lat.gram(i, j)) return IsometryCheck{false, i, j};
  return IsometryCheck{true, 0, 0};
}

bool preserves_cone(const Lattice& lat, const IMat& u) {
  return pairing(lat, u * lat.cone_ref, lat.cone_ref) > 0;
}

bool preserves_cone(const Lattice& lat, const QMat& u) {
  return pairing(lat, u * to_rational(lat.cone_ref), to_rational(lat.cone_ref)) > 0;
}

bool in_positive_cone(const Lattice& lat, const IVec& x) {
  if (vec_is_zero(x)) fail("zero_vector", "cone membership of the zero vector");
  return pairing(lat, x, x) >= 0 && pairing(lat, x, lat.cone_ref) > 0;
}

bool in_positive_cone(const Lattice& lat, const QVec& x) {
  if (vec_is_zero(x)) fail("zero_vector", "cone membership of the zero vector");
  return pairing(lat, x, x) >= 0 && pairing(lat, x, to_rational(lat.cone_ref)) > 0;
}

IVec primitivized(const Lattice& lat, IVec x) {
  if (vec_is_zero(x)) fail("zero_vector", "primitivize of the zero vector");
  Int g = gcd_all(x);
  if (g > 1)
    for (Int& c : x) c = exact_div(c, g);
  const Int p = pairing(lat, x, lat.cone_ref);
  bool flip = false;
  if (p < 0) {
    flip = true;
  } else if (p == 0) {
    for (const Int& c : x)
      if (c != 0) { flip = c < 0; break; }
  }
  if (flip)
    for (Int& c : x) c = -c;
  return x;
}

Isometry Isometry::make(LatticePtr lat, IMat mat) {
  IsometryCheck chk = is_isometry(*lat, mat);
  if (!chk.ok) fail("not_isometry", "matrix does not preserve the form");
  if (!preserves_cone(*lat, mat)) fail("not_in_o_plus", "matrix swaps the two cone components");
  return Isometry{std::move(lat), std::move(mat)};
}

Isometry compose(const Isometry& u, const Isometry& v) {
  return Isometry{u.lat, u.mat * v.mat};
}

Isometry inverse(const Isometry& u) {
  return Isometry{u.lat, isometry_inverse_mat(*u.lat, u.mat)};
}

Isometry identity_isometry(LatticePtr lat) {
  const std::size_t n = lat->rank();
  return Isometry{std::move(lat), IMat::identity(n)};
}

IMat isometry_inverse_mat(const Lattice& lat, const IMat& u) {
  QMat ginv = q_inverse(to_rational(lat.gram));
  QMat inv = ginv * to_rational(transpose(u) * lat.gram);
  return to_integer(inv);
}

std::vector<IVec> orthogonal_complement(const Lattice& lat, const IVec& theta) {
  const std::size_t n = lat.rank();
  if (theta.size() != n) fail("dimension_mismatch", "orthogonal complement operand");
  IMat row(1, n);
  IVec gtheta = lat.gram * theta;
  for (std::size_t j = 0; j < n; ++j) row(0, j) = gtheta[j];
  return integer_kernel(row);
}

}  // namespace lorentz
