#pragma once

#include <optional>
#include <vector>

#include "lorentz/mat.hpp"

namespace lorentz {

struct Inertia {
  std::size_t pos = 0, neg = 0, zero = 0;
  bool operator==(const Inertia&) const = default;
};

// Exact inertia of a symmetric rational matrix: symmetric Gaussian
// elimination with diagonal pivoting, off-diagonal 2x2 hyperbolic step when
// the active diagonal vanishes.
Inertia inertia(const QMat& symmetric);
Inertia inertia(const IMat& symmetric);

std::size_t q_rank(QMat m);
std::size_t i_rank(const IMat& m);

// Basis of { x : m x = 0 } over the rationals.
std::vector<QVec> q_kernel(const QMat& m);

// One rational solution of m x = b, or nullopt when inconsistent.
std::optional<QVec> q_solve(const QMat& m, const QVec& b);

QMat q_inverse(const QMat& m);  // throws on singular input

Int i_det(const IMat& m);

// Smith normal form: u * a * v = d with u, v unimodular and d diagonal,
// d(i,i) >= 0 and d(i,i) | d(i+1,i+1).
struct Smith {
  IMat u, d, v;
};
Smith smith_normal_form(IMat a);

// Saturated basis of { x in Z^n : a x = 0 }.
std::vector<IVec> integer_kernel(const IMat& a);

// One integer solution of a x = b, or nullopt when none exists.
std::optional<IVec> solve_integer(const IMat& a, const IVec& b);

// Minimal N >= 1 such that a x = N b has an integer solution, with one such
// solution; requires a x = b to be rationally consistent.
std::optional<std::pair<Int, IVec>> solve_integer_minimal_dilation(const IMat& a, const IVec& b);

// Scale a rational vector to a primitive integer vector (same direction).
IVec clear_denominators(const QVec& v);

// Characteristic polynomial, ascending coefficients c[0] + c[1] x + ...,
// monic of degree n (Faddeev-LeVerrier, exact).
std::vector<Int> char_poly(const IMat& m);
std::vector<Rat> char_poly(const QMat& m);

Int poly_eval(const std::vector<Int>& p, const Int& x);
Rat poly_eval(const std::vector<Rat>& p, const Rat& x);

// Divide out every (x - 1) and (x + 1) factor.
std::vector<Int> deflate_at_unit_roots(std::vector<Int> p);
std::vector<Rat> deflate_at_unit_roots(std::vector<Rat> p);

// True iff p has a real root > 1; exact sign test after deflation at +-1.
// Sound for characteristic polynomials of cone-preserving isometries, where
// at most one reciprocal root pair lies off the unit circle.
bool has_root_above_one(const std::vector<Int>& p);
bool has_root_above_one(const std::vector<Rat>& p);

// Largest real root of p above 1, by bisection to the given relative
// tolerance; requires has_root_above_one(p).
double root_above_one(const std::vector<Int>& p, double rel_tol = 1e-12);

// lcm of all m >= 1 with euler_phi(m) <= n; the quasi-unipotence exponent.
unsigned long euler_phi(unsigned long m);
Int quasi_unipotence_exponent(std::size_t n);

}  // namespace lorentz
