#pragma once

#include <vector>

#include "gradedalg/rational.hpp"

namespace gradedalg {

/// Dense matrix over Q. Desk-scale dimensions; no sparsity machinery.
struct Matrix {
  int rows = 0, cols = 0;
  std::vector<Rat> a;  // row-major

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}

  Rat& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
  const Rat& at(int r, int c) const {
    return a[static_cast<std::size_t>(r) * cols + c];
  }

  static Matrix identity(int n);
  Matrix operator*(const Matrix& o) const;
  bool is_zero() const;
  bool operator==(const Matrix&) const = default;
};

Vec mat_vec(const Matrix& m, const Vec& v);

int rank(Matrix m);

/// Reduced row echelon form; optionally reports pivot columns.
Matrix rref(Matrix m, std::vector<int>* pivot_cols = nullptr);

/// Exact null-space basis, echelonized and deterministic; size = cols - rank.
std::vector<Vec> kernel_basis(const Matrix& m);

/// One exact solution of A x = b, if consistent.
bool solve(const Matrix& m, const Vec& b, Vec& x);

/// nullity(d_cur) - rank(d_prev), after verifying d_cur * d_prev = 0.
/// Throws InputError if the pair is not a complex.
int quotient_dim(const Matrix& d_prev, const Matrix& d_cur);

/// Deterministic reduced echelon basis of the span of the given vectors.
std::vector<Vec> echelonize(const std::vector<Vec>& vs);

/// Echelon representatives of span(vs) modulo span(mod).
std::vector<Vec> reduce_mod(const std::vector<Vec>& vs,
                            const std::vector<Vec>& mod);

}  // namespace gradedalg
