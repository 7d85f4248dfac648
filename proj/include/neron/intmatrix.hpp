#pragma once

#include <initializer_list>
#include <optional>
#include <vector>

#include "neron/error.hpp"
#include "neron/int.hpp"

namespace neron {

// Dense exact integer matrix, row-major.  The universal carrier for lattice
// maps; column span is the usual encoding of a sublattice.
class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(long rows, long cols)
      : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows * cols)) {
    require_internal(rows >= 0 && cols >= 0, "negative matrix dimension");
  }
  IntMatrix(std::initializer_list<std::initializer_list<Int>> rows);

  static IntMatrix identity(long n);
  static IntMatrix zero(long rows, long cols) { return IntMatrix(rows, cols); }
  static IntMatrix column(const std::vector<Int>& v);

  long rows() const { return rows_; }
  long cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Int& at(long i, long j) { return a_[static_cast<size_t>(i * cols_ + j)]; }
  const Int& at(long i, long j) const {
    return a_[static_cast<size_t>(i * cols_ + j)];
  }

  bool operator==(const IntMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
  bool operator!=(const IntMatrix& o) const { return !(*this == o); }

  bool is_zero() const;
  bool is_identity() const;

  IntMatrix transpose() const;
  IntMatrix operator*(const IntMatrix& o) const;
  IntMatrix operator+(const IntMatrix& o) const;
  IntMatrix operator-(const IntMatrix& o) const;
  IntMatrix operator-() const;

  IntMatrix col(long j) const;
  std::vector<Int> col_vec(long j) const;
  void set_col(long j, const std::vector<Int>& v);

  // Stack side by side / on top of each other.
  static IntMatrix hstack(const IntMatrix& a, const IntMatrix& b);
  static IntMatrix vstack(const IntMatrix& a, const IntMatrix& b);

  // Columns selected by index, in the given order.
  IntMatrix select_cols(const std::vector<long>& idx) const;
  IntMatrix select_rows(const std::vector<long>& idx) const;

  std::vector<Int> mul_vec(const std::vector<Int>& v) const;

  void swap_rows(long i, long j);
  void swap_cols(long i, long j);

 private:
  long rows_, cols_;
  std::vector<Int> a_;
};

struct SmithResult {
  IntMatrix u;  // rows x rows, unimodular
  IntMatrix d;  // rows x cols, diagonal with divisibility chain, entries >= 0
  IntMatrix v;  // cols x cols, unimodular
};

// u*a*v == d.  Deterministic: smallest-magnitude nonzero pivot, first
// position in row-major order breaking ties.
SmithResult smith_normal_form(const IntMatrix& a);

// Diagonal of the Smith form only (no transforms; cheaper).
std::vector<Int> smith_invariants(const IntMatrix& a);

// Columns form a basis of {x : a*x == 0}; the basis spans a saturated (pure)
// sublattice, which for a kernel is automatic.
IntMatrix kernel_basis(const IntMatrix& a);

// Canonical basis of the column span: column-style Hermite form with pivots
// positive, pivot rows strictly increasing, entries left of a pivot reduced
// into [0, pivot).  Lattices are equal iff their forms are equal.
IntMatrix column_hnf_basis(const IntMatrix& a);

long rank(const IntMatrix& a);

Int determinant(const IntMatrix& a);

bool is_unimodular(const IntMatrix& a);

// Exact solver for repeated systems a*x = b against a fixed a.
class ExactSolver {
 public:
  explicit ExactSolver(const IntMatrix& a);
  // Any integral solution (free coordinates set to zero), or nullopt.
  std::optional<IntMatrix> solve(const IntMatrix& b) const;
  std::optional<std::vector<Int>> solve_vec(const std::vector<Int>& b) const;
  long rank() const { return rank_; }

 private:
  long m_, n_, rank_;
  SmithResult snf_;
};

std::optional<IntMatrix> solve_exact(const IntMatrix& a, const IntMatrix& b);

// Inverse of a unimodular matrix.
IntMatrix inverse_unimodular(const IntMatrix& a);

// True iff the columns span a saturated sublattice (all Smith invariants 1).
bool is_saturated_basis(const IntMatrix& a);

// Equality of column-span lattices.
bool lattice_equal(const IntMatrix& a, const IntMatrix& b);

}  // namespace neron
