#include "lorentz/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <type_traits>

namespace lorentz {

double log2_abs(const Int& x) {
  if (x == 0) return -std::numeric_limits<double>::infinity();
  long exp2;
  double mant = mpz_get_d_2exp(&exp2, x.get_mpz_t());
  return std::log2(std::fabs(mant)) + static_cast<double>(exp2);
}

Inertia inertia(const QMat& symmetric) {
  const std::size_t n = symmetric.rows;
  if (symmetric.cols != n) fail("dimension_mismatch", "inertia of non-square matrix");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (symmetric(i, j) != symmetric(j, i)) fail("not_symmetric", "inertia of non-symmetric matrix");

  QMat s = symmetric;
  std::vector<std::size_t> act(n);
  std::iota(act.begin(), act.end(), 0);
  Inertia res;

  while (!act.empty()) {
    std::size_t kpos = act.size();
    for (std::size_t p = 0; p < act.size(); ++p)
      if (s(act[p], act[p]) != 0) { kpos = p; break; }

    if (kpos < act.size()) {
      const std::size_t k = act[kpos];
      const Rat piv = s(k, k);
      if (piv > 0) ++res.pos; else ++res.neg;
      act.erase(act.begin() + kpos);
      for (std::size_t r : act)
        for (std::size_t c : act) s(r, c) -= s(r, k) * s(k, c) / piv;
      continue;
    }

    // all active diagonal entries vanish; take a hyperbolic 2x2 pivot
    std::size_t ipos = act.size(), jpos = act.size();
    for (std::size_t p = 0; p < act.size() && ipos == act.size(); ++p)
      for (std::size_t q = p + 1; q < act.size(); ++q)
        if (s(act[p], act[q]) != 0) { ipos = p; jpos = q; break; }
    if (ipos == act.size()) {
      res.zero += act.size();
      break;
    }
    const std::size_t i = act[ipos], j = act[jpos];
    const Rat b = s(i, j);
    ++res.pos;
    ++res.neg;
    act.erase(act.begin() + jpos);
    act.erase(act.begin() + ipos);
    for (std::size_t r : act)
      for (std::size_t c : act) s(r, c) -= (s(r, i) * s(j, c) + s(r, j) * s(i, c)) / b;
  }
  return res;
}

Inertia inertia(const IMat& symmetric) { return inertia(to_rational(symmetric)); }

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(QMat& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
    std::size_t sel = m.rows;
    for (std::size_t i = row; i < m.rows; ++i)
      if (m(i, col) != 0) { sel = i; break; }
    if (sel == m.rows) continue;
    if (sel != row)
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m(sel, j), m(row, j));
    const Rat piv = m(row, col);
    for (std::size_t j = col; j < m.cols; ++j) m(row, j) /= piv;
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == row || m(i, col) == 0) continue;
      const Rat f = m(i, col);
      for (std::size_t j = col; j < m.cols; ++j) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t q_rank(QMat m) { return rref(m).size(); }

std::size_t i_rank(const IMat& m) {
  QMat q = to_rational(m);
  return q_rank(q);
}

std::vector<QVec> q_kernel(const QMat& m) {
  QMat r = m;
  std::vector<std::size_t> pivots = rref(r);
  std::vector<bool> is_pivot(m.cols, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<QVec> basis;
  for (std::size_t f = 0; f < m.cols; ++f) {
    if (is_pivot[f]) continue;
    QVec x(m.cols, Rat(0));
    x[f] = 1;
    for (std::size_t p = 0; p < pivots.size(); ++p) x[pivots[p]] = -r(p, f);
    basis.push_back(std::move(x));
  }
  return basis;
}

std::optional<QVec> q_solve(const QMat& m, const QVec& b) {
  if (b.size() != m.rows) fail("dimension_mismatch", "solve rhs shape");
  QMat aug(m.rows, m.cols + 1);
  for (std::size_t i = 0; i < m.rows; ++i) {
    for (std::size_t j = 0; j < m.cols; ++j) aug(i, j) = m(i, j);
    aug(i, m.cols) = b[i];
  }
  std::vector<std::size_t> pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols) return std::nullopt;
  QVec x(m.cols, Rat(0));
  for (std::size_t p = 0; p < pivots.size(); ++p) x[pivots[p]] = aug(p, m.cols);
  return x;
}

QMat q_inverse(const QMat& m) {
  if (m.rows != m.cols) fail("dimension_mismatch", "inverse of non-square matrix");
  const std::size_t n = m.rows;
  QMat aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  std::vector<std::size_t> pivots = rref(aug);
  if (pivots.size() != n || pivots.back() != n - 1) fail("singular", "matrix is not invertible");
  QMat inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

Int i_det(const IMat& m) {
  if (m.rows != m.cols) fail("dimension_mismatch", "determinant of non-square matrix");
  QMat a = to_rational(m);
  Rat det = 1;
  const std::size_t n = a.rows;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t sel = n;
    for (std::size_t i = col; i < n; ++i)
      if (a(i, col) != 0) { sel = i; break; }
    if (sel == n) return 0;
    if (sel != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(sel, j), a(col, j));
      det = -det;
    }
    det *= a(col, col);
    const Rat piv = a(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (a(i, col) == 0) continue;
      const Rat f = a(i, col) / piv;
      for (std::size_t j = col; j < n; ++j) a(i, j) -= f * a(col, j);
    }
  }
  if (det.get_den() != 1) fail("internal", "integer determinant with denominator");
  return det.get_num();
}

Smith smith_normal_form(IMat a) {
  const std::size_t m = a.rows, n = a.cols;
  IMat u = IMat::identity(m), v = IMat::identity(n);

  auto row_swap = [&](std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < n; ++c) std::swap(a(i, c), a(j, c));
    for (std::size_t c = 0; c < m; ++c) std::swap(u(i, c), u(j, c));
  };
  auto col_swap = [&](std::size_t i, std::size_t j) {
    for (std::size_t r = 0; r < m; ++r) std::swap(a(r, i), a(r, j));
    for (std::size_t r = 0; r < n; ++r) std::swap(v(r, i), v(r, j));
  };
  auto row_axpy = [&](std::size_t dst, std::size_t src, const Int& f) {
    for (std::size_t c = 0; c < n; ++c) a(dst, c) += f * a(src, c);
    for (std::size_t c = 0; c < m; ++c) u(dst, c) += f * u(src, c);
  };
  auto col_axpy = [&](std::size_t dst, std::size_t src, const Int& f) {
    for (std::size_t r = 0; r < m; ++r) a(r, dst) += f * a(r, src);
    for (std::size_t r = 0; r < n; ++r) v(r, dst) += f * v(r, src);
  };
  auto row_negate = [&](std::size_t i) {
    for (std::size_t c = 0; c < n; ++c) a(i, c) = -a(i, c);
    for (std::size_t c = 0; c < m; ++c) u(i, c) = -u(i, c);
  };

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    // smallest nonzero entry of the trailing block into the pivot slot
    std::size_t pi = m, pj = n;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j) {
        if (a(i, j) == 0) continue;
        if (pi == m || mpz_cmpabs(a(i, j).get_mpz_t(), a(pi, pj).get_mpz_t()) < 0) { pi = i; pj = j; }
      }
    if (pi == m) break;
    if (pi != t) row_swap(pi, t);
    if (pj != t) col_swap(pj, t);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (a(i, t) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
        row_axpy(i, t, -q);
        if (a(i, t) != 0) {  // remainder became the smaller pivot
          row_swap(i, t);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a(t, j) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
        col_axpy(j, t, -q);
        if (a(t, j) != 0) {
          col_swap(j, t);
          clean = false;
        }
      }
      if (!clean) continue;
      // divisibility sweep for the Smith chain condition
      for (std::size_t i = t + 1; i < m && clean; ++i)
        for (std::size_t j = t + 1; j < n && clean; ++j)
          if (a(i, j) % a(t, t) != 0) {
            row_axpy(t, i, 1);
            clean = false;
          }
    }
    if (a(t, t) < 0) row_negate(t);
  }
  return Smith{u, a, v};
}

std::vector<IVec> integer_kernel(const IMat& a) {
  Smith s = smith_normal_form(a);
  const std::size_t n = a.cols;
  std::vector<IVec> basis;
  for (std::size_t j = 0; j < n; ++j) {
    const bool diag_zero = j >= std::min(a.rows, n) || s.d(j, j) == 0;
    if (diag_zero) basis.push_back(s.v.col(j));
  }
  return basis;
}

std::optional<IVec> solve_integer(const IMat& a, const IVec& b) {
  if (b.size() != a.rows) fail("dimension_mismatch", "solve rhs shape");
  Smith s = smith_normal_form(a);
  IVec ub = s.u * b;
  IVec y(a.cols, Int(0));
  for (std::size_t i = 0; i < a.rows; ++i) {
    const Int d = (i < std::min(a.rows, a.cols)) ? s.d(i, i) : Int(0);
    if (d == 0) {
      if (ub[i] != 0) return std::nullopt;
    } else {
      if (ub[i] % d != 0) return std::nullopt;
      y[i] = exact_div(ub[i], d);
    }
  }
  return s.v * y;
}

std::optional<std::pair<Int, IVec>> solve_integer_minimal_dilation(const IMat& a, const IVec& b) {
  if (b.size() != a.rows) fail("dimension_mismatch", "solve rhs shape");
  Smith s = smith_normal_form(a);
  IVec ub = s.u * b;
  Int scale = 1;
  for (std::size_t i = 0; i < a.rows; ++i) {
    const Int d = (i < std::min(a.rows, a.cols)) ? s.d(i, i) : Int(0);
    if (d == 0) {
      if (ub[i] != 0) return std::nullopt;  // not even rationally solvable
    } else if (ub[i] != 0) {
      scale = int_lcm(scale, exact_div(d, int_gcd(d, ub[i])));
    }
  }
  IVec y(a.cols, Int(0));
  for (std::size_t i = 0; i < std::min(a.rows, a.cols); ++i)
    if (s.d(i, i) != 0) y[i] = exact_div(scale * ub[i], s.d(i, i));
  return std::make_pair(scale, s.v * y);
}

IVec clear_denominators(const QVec& v) {
  Int den = 1;
  for (const Rat& x : v) den = int_lcm(den, x.get_den());
  IVec w(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    Rat scaled = v[i] * Rat(den);
    w[i] = scaled.get_num();
  }
  Int g = gcd_all(w);
  if (g > 1)
    for (Int& x : w) x = exact_div(x, g);
  return w;
}

namespace {

template <class T>
std::vector<T> char_poly_impl(const Mat<T>& m) {
  if (m.rows != m.cols) fail("dimension_mismatch", "char poly of non-square matrix");
  const std::size_t n = m.rows;
  std::vector<T> coeff(n + 1, T(0));
  coeff[n] = 1;
  Mat<T> mk = m;
  for (std::size_t k = 1; k <= n; ++k) {
    if (k > 1) {
      Mat<T> shifted = mk;
      for (std::size_t i = 0; i < n; ++i) shifted(i, i) += coeff[n - k + 1];
      mk = m * shifted;
    }
    T trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += mk(i, i);
    if constexpr (std::is_same_v<T, Int>) {
      Int q, r;
      const Int kk(static_cast<unsigned long>(k));
      mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), trace.get_mpz_t(), kk.get_mpz_t());
      if (r != 0) fail("internal", "Faddeev-LeVerrier division not exact");
      coeff[n - k] = -q;
    } else {
      coeff[n - k] = -trace / T(static_cast<long>(k));
    }
  }
  return coeff;
}

template <class T>
T poly_eval_impl(const std::vector<T>& p, const T& x) {
  T acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

// Divide ascending-coefficient p by (x - r); requires p(r) = 0.
template <class T>
std::vector<T> synthetic_div(const std::vector<T>& p, const T& r) {
  const std::size_t d = p.size() - 1;
  std::vector<T> q(d, T(0));
  q[d - 1] = p[d];
  for (std::size_t k = d - 1; k >= 1; --k) q[k - 1] = p[k] + r * q[k];
  return q;
}

template <class T>
std::vector<T> deflate_impl(std::vector<T> p) {
  for (;;) {
    if (p.size() <= 1) return p;
    if (poly_eval_impl(p, T(1)) == 0) {
      p = synthetic_div(p, T(1));
      continue;
    }
    if (poly_eval_impl(p, T(-1)) == 0) {
      p = synthetic_div(p, T(-1));
      continue;
    }
    return p;
  }
}

}  // namespace

std::vector<Int> char_poly(const IMat& m) { return char_poly_impl(m); }
std::vector<Rat> char_poly(const QMat& m) { return char_poly_impl(m); }

Int poly_eval(const std::vector<Int>& p, const Int& x) { return poly_eval_impl(p, x); }
Rat poly_eval(const std::vector<Rat>& p, const Rat& x) { return poly_eval_impl(p, x); }

std::vector<Int> deflate_at_unit_roots(std::vector<Int> p) { return deflate_impl(std::move(p)); }
std::vector<Rat> deflate_at_unit_roots(std::vector<Rat> p) { return deflate_impl(std::move(p)); }

bool has_root_above_one(const std::vector<Int>& p) {
  std::vector<Int> q = deflate_at_unit_roots(p);
  if (q.size() <= 1) return false;
  if (q.back() < 0) fail("internal", "expected a positive leading coefficient");
  return poly_eval(q, Int(1)) < 0;
}

bool has_root_above_one(const std::vector<Rat>& p) {
  std::vector<Rat> q = deflate_at_unit_roots(p);
  if (q.size() <= 1) return false;
  if (q.back() < 0) fail("internal", "expected a positive leading coefficient");
  return poly_eval(q, Rat(1)) < 0;
}

double root_above_one(const std::vector<Int>& p, double rel_tol) {
  std::vector<Int> q = deflate_at_unit_roots(p);
  if (q.size() <= 1 || poly_eval(q, Int(1)) >= 0) fail("no_root", "no root above 1");
  std::vector<Rat> qr(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) qr[i] = Rat(q[i]);
  Rat lo = 1, hi = 2;
  while (poly_eval(qr, hi) <= 0) hi *= 2;
  while (Rat(hi - lo).get_d() / hi.get_d() > rel_tol) {
    Rat mid = (lo + hi) / 2;
    if (poly_eval(qr, mid) > 0) hi = mid; else lo = mid;
  }
  return Rat((lo + hi) / 2).get_d();
}

unsigned long euler_phi(unsigned long m) {
  unsigned long result = m;
  for (unsigned long p = 2; p * p <= m; ++p) {
    if (m % p) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

Int quasi_unipotence_exponent(std::size_t n) {
  // phi(m) >= sqrt(m/2), so phi(m) <= n forces m <= 2 n^2
  Int k = 1;
  for (unsigned long m = 1; m <= 2 * static_cast<unsigned long>(n) * n + 2; ++m)
    if (euler_phi(m) <= n) k = int_lcm(k, Int(m));
  return k;
}

}  // namespace lorentz
