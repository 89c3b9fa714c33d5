#include "cubepaths/snf.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <vector>

namespace cubepaths {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool IntMatrix::is_zero() const {
  for (const Int& x : data_)
    if (x != 0) return false;
  return true;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows())
    throw std::invalid_argument("multiply: dimension mismatch");
  IntMatrix out(a.rows(), b.cols());
  Int acc, term;
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const Int& aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols(); ++j) {
        const Int& bkj = b.at(k, j);
        if (bkj == 0) continue;
        term = aik * bkj;
        out.at(i, j) += term;
      }
    }
  return out;
}

namespace {

struct Snf {
  IntMatrix d, u, v;
  int m, n;
  bool track;

  explicit Snf(const IntMatrix& a, bool track_transforms)
      : d(a),
        u(track_transforms ? IntMatrix::identity(a.rows()) : IntMatrix()),
        v(track_transforms ? IntMatrix::identity(a.cols()) : IntMatrix()),
        m(a.rows()), n(a.cols()), track(track_transforms) {}

  void swap_rows(int a_, int b_) {
    if (a_ == b_) return;
    for (int j = 0; j < n; ++j) std::swap(d.at(a_, j), d.at(b_, j));
    if (track)
      for (int j = 0; j < m; ++j) std::swap(u.at(a_, j), u.at(b_, j));
  }
  void swap_cols(int a_, int b_) {
    if (a_ == b_) return;
    for (int i = 0; i < m; ++i) std::swap(d.at(i, a_), d.at(i, b_));
    if (track)
      for (int i = 0; i < n; ++i) std::swap(v.at(i, a_), v.at(i, b_));
  }
  // row r -= q * row s
  void row_op(int r, int s, const Int& q) {
    if (q == 0) return;
    for (int j = 0; j < n; ++j)
      if (d.at(s, j) != 0) d.at(r, j) -= q * d.at(s, j);
    if (track)
      for (int j = 0; j < m; ++j)
        if (u.at(s, j) != 0) u.at(r, j) -= q * u.at(s, j);
  }
  // col c -= q * col s
  void col_op(int c, int s, const Int& q) {
    if (q == 0) return;
    for (int i = 0; i < m; ++i)
      if (d.at(i, s) != 0) d.at(i, c) -= q * d.at(i, s);
    if (track)
      for (int i = 0; i < n; ++i)
        if (v.at(i, s) != 0) v.at(i, c) -= q * v.at(i, s);
  }
  void negate_row(int r) {
    for (int j = 0; j < n; ++j) d.at(r, j) = -d.at(r, j);
    if (track)
      for (int j = 0; j < m; ++j) u.at(r, j) = -u.at(r, j);
  }

  // Smallest nonzero |entry| in the trailing block; ties broken by the
  // Markowitz fill count (nnz(row)-1)*(nnz(col)-1) to keep the elimination
  // (and the transform matrices) sparse.
  bool find_pivot(int t, int& pr, int& pc) const {
    std::vector<long> row_nnz(m - t, 0), col_nnz(n - t, 0);
    for (int i = t; i < m; ++i)
      for (int j = t; j < n; ++j)
        if (d.at(i, j) != 0) {
          ++row_nnz[i - t];
          ++col_nnz[j - t];
        }
    bool found = false;
    Int best;
    long best_fill = 0;
    for (int i = t; i < m; ++i)
      for (int j = t; j < n; ++j) {
        const Int& x = d.at(i, j);
        if (x == 0) continue;
        Int a = abs(x);
        const long fill = (row_nnz[i - t] - 1) * (col_nnz[j - t] - 1);
        if (!found || a < best || (a == best && fill < best_fill)) {
          best = std::move(a);
          best_fill = fill;
          pr = i;
          pc = j;
          found = true;
        }
      }
    return found;
  }

  bool pivot_is_lone(int t) const {
    for (int i = t + 1; i < m; ++i)
      if (d.at(i, t) != 0) return false;
    for (int j = t + 1; j < n; ++j)
      if (d.at(t, j) != 0) return false;
    return true;
  }

  void run() {
    const int steps = std::min(m, n);
    Int q, r;
    for (int t = 0; t < steps; ++t) {
      int pr, pc;
      if (!find_pivot(t, pr, pc)) break;  // trailing block is zero
      for (;;) {
        find_pivot(t, pr, pc);
        swap_rows(t, pr);
        swap_cols(t, pc);
        // Euclidean sweep: leaves remainders behind, so the loop re-runs
        // with a strictly smaller pivot until everything clears
        for (int i = t + 1; i < m; ++i) {
          if (d.at(i, t) == 0) continue;
          mpz_fdiv_q(q.get_mpz_t(), d.at(i, t).get_mpz_t(),
                     d.at(t, t).get_mpz_t());
          row_op(i, t, q);
        }
        for (int j = t + 1; j < n; ++j) {
          if (d.at(t, j) == 0) continue;
          mpz_fdiv_q(q.get_mpz_t(), d.at(t, j).get_mpz_t(),
                     d.at(t, t).get_mpz_t());
          col_op(j, t, q);
        }
        if (!pivot_is_lone(t)) continue;
        // enforce divisibility of the trailing block by the pivot
        bool divides_all = true;
        for (int i = t + 1; i < m && divides_all; ++i)
          for (int j = t + 1; j < n && divides_all; ++j) {
            mpz_fdiv_r(r.get_mpz_t(), d.at(i, j).get_mpz_t(),
                       d.at(t, t).get_mpz_t());
            if (r != 0) {
              // fold the offending row into row t and restart the sweep
              row_op(t, i, Int(-1));
              divides_all = false;
            }
          }
        if (divides_all) break;
      }
      if (d.at(t, t) < 0) negate_row(t);
    }
  }
};

}  // namespace

SmithResult smith_normal_form(const IntMatrix& m) {
  Snf snf(m, true);
  snf.run();
  SmithResult out;
  out.d = std::move(snf.d);
  out.u = std::move(snf.u);
  out.v = std::move(snf.v);
  const int steps = std::min(m.rows(), m.cols());
  for (int t = 0; t < steps; ++t) {
    if (out.d.at(t, t) == 0) break;
    out.divisors.push_back(out.d.at(t, t));
  }
  out.rank = static_cast<int>(out.divisors.size());
  return out;
}

std::vector<Int> smith_divisors(const IntMatrix& m) {
  Snf snf(m, false);
  snf.run();
  std::vector<Int> divisors;
  for (int t = 0; t < std::min(m.rows(), m.cols()); ++t) {
    if (snf.d.at(t, t) == 0) break;
    divisors.push_back(snf.d.at(t, t));
  }
  return divisors;
}

int integer_rank(const IntMatrix& m) {
  return static_cast<int>(smith_divisors(m).size());
}

}  // namespace cubepaths
