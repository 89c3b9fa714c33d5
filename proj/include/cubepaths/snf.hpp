#pragma once

#include <vector>

#include "cubepaths/rat.hpp"

namespace cubepaths {

// Dense exact integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Int& at(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Int& at(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

  static IntMatrix identity(int n);
  bool is_zero() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Int> data_;
};

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);

// Smith normal form U * M * V = D with U, V unimodular and D diagonal with
// d_1 | d_2 | ... (all d_i >= 0). `divisors` are the nonzero diagonal
// entries, rank their count.
struct SmithResult {
  IntMatrix d;
  IntMatrix u;
  IntMatrix v;
  int rank = 0;
  std::vector<Int> divisors;
};

SmithResult smith_normal_form(const IntMatrix& m);

// Divisors only, without tracking the transforms; much lighter on matrices
// whose unimodular factors would fill in.
std::vector<Int> smith_divisors(const IntMatrix& m);

// Rank over the rationals (equals the number of nonzero SNF divisors).
int integer_rank(const IntMatrix& m);

}  // namespace cubepaths
