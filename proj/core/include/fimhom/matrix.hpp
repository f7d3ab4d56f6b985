#pragma once

#include <vector>

#include "fimhom/field.hpp"

namespace fimhom {

using Vec = std::vector<u32>;

/// Dense row-major matrix over F_p. All entries share the one modulus.
struct PrimeMatrix {
  int rows = 0;
  int cols = 0;
  u32 p = 2;
  std::vector<u32> a;  // rows * cols entries, canonical residues

  PrimeMatrix() = default;
  PrimeMatrix(int r, int c, u32 prime)
      : rows(r), cols(c), p(prime), a(static_cast<size_t>(r) * c, 0) {}

  static PrimeMatrix identity(int n, u32 p);

  u32& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  u32 at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

  Vec row(int r) const { return Vec(a.begin() + static_cast<size_t>(r) * cols,
                                    a.begin() + static_cast<size_t>(r + 1) * cols); }
  Vec col(int c) const;

  bool is_zero() const;
  bool operator==(const PrimeMatrix&) const = default;
};

PrimeMatrix mul(const PrimeMatrix& A, const PrimeMatrix& B);

/// Matrix-vector product A*v.
Vec matvec(const PrimeMatrix& A, const Vec& v);

/// Stack vectors as the rows of a matrix (all of length `cols`).
PrimeMatrix from_rows(const std::vector<Vec>& rows, int cols, u32 p);

/// Keep only the given columns, in the given order.
PrimeMatrix select_cols(const PrimeMatrix& A, const std::vector<int>& cols);

/// Submatrix with the given rows and columns, in the given order.
PrimeMatrix submatrix(const PrimeMatrix& A, const std::vector<int>& rows,
                      const std::vector<int>& cols);

/// Horizontal concatenation [A | B].
PrimeMatrix hcat(const PrimeMatrix& A, const PrimeMatrix& B);

}  // namespace fimhom
