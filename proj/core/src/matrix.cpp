#include "fimhom/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace fimhom {

PrimeMatrix PrimeMatrix::identity(int n, u32 p) {
  PrimeMatrix m(n, n, p);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Vec PrimeMatrix::col(int c) const {
  Vec v(rows);
  for (int r = 0; r < rows; ++r) v[r] = at(r, c);
  return v;
}

bool PrimeMatrix::is_zero() const {
  return std::all_of(a.begin(), a.end(), [](u32 x) { return x == 0; });
}

PrimeMatrix mul(const PrimeMatrix& A, const PrimeMatrix& B) {
  if (A.cols != B.rows || A.p != B.p)
    throw std::invalid_argument("matrix product shape/modulus mismatch");
  PrimeMatrix C(A.rows, B.cols, A.p);
  const u64 p = A.p;
  for (int i = 0; i < A.rows; ++i) {
    for (int k = 0; k < A.cols; ++k) {
      u64 aik = A.at(i, k);
      if (aik == 0) continue;
      const u32* brow = &B.a[static_cast<size_t>(k) * B.cols];
      u32* crow = &C.a[static_cast<size_t>(i) * C.cols];
      for (int j = 0; j < B.cols; ++j) {
        crow[j] = static_cast<u32>((crow[j] + aik * brow[j]) % p);
      }
    }
  }
  return C;
}

Vec matvec(const PrimeMatrix& A, const Vec& v) {
  if (static_cast<int>(v.size()) != A.cols)
    throw std::invalid_argument("matrix-vector shape mismatch");
  Vec out(A.rows, 0);
  const u64 p = A.p;
  for (int i = 0; i < A.rows; ++i) {
    u64 acc = 0;
    const u32* arow = &A.a[static_cast<size_t>(i) * A.cols];
    for (int j = 0; j < A.cols; ++j) {
      acc += (u64)arow[j] * v[j];
      if (acc >> 62) acc %= p;
    }
    out[i] = static_cast<u32>(acc % p);
  }
  return out;
}

PrimeMatrix from_rows(const std::vector<Vec>& rows, int cols, u32 p) {
  PrimeMatrix m(static_cast<int>(rows.size()), cols, p);
  for (size_t r = 0; r < rows.size(); ++r) {
    if (static_cast<int>(rows[r].size()) != cols)
      throw std::invalid_argument("row length mismatch");
    std::copy(rows[r].begin(), rows[r].end(), m.a.begin() + r * cols);
  }
  return m;
}

PrimeMatrix select_cols(const PrimeMatrix& A, const std::vector<int>& cols) {
  PrimeMatrix m(A.rows, static_cast<int>(cols.size()), A.p);
  for (int r = 0; r < A.rows; ++r)
    for (size_t j = 0; j < cols.size(); ++j) m.at(r, static_cast<int>(j)) = A.at(r, cols[j]);
  return m;
}

PrimeMatrix submatrix(const PrimeMatrix& A, const std::vector<int>& rows,
                      const std::vector<int>& cols) {
  PrimeMatrix m(static_cast<int>(rows.size()), static_cast<int>(cols.size()), A.p);
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < cols.size(); ++j)
      m.at(static_cast<int>(i), static_cast<int>(j)) = A.at(rows[i], cols[j]);
  return m;
}

PrimeMatrix hcat(const PrimeMatrix& A, const PrimeMatrix& B) {
  if (A.rows != B.rows || A.p != B.p) throw std::invalid_argument("hcat shape mismatch");
  PrimeMatrix m(A.rows, A.cols + B.cols, A.p);
  for (int r = 0; r < A.rows; ++r) {
    for (int c = 0; c < A.cols; ++c) m.at(r, c) = A.at(r, c);
    for (int c = 0; c < B.cols; ++c) m.at(r, A.cols + c) = B.at(r, c);
  }
  return m;
}

}  // namespace fimhom
