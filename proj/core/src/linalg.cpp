#include "fimhom/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace fimhom {

RrefResult rref(const PrimeMatrix& M) {
  PrimeMatrix R = M;
  PrimeField F(M.p);
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < R.cols && r < R.rows; ++c) {
    int sel = -1;
    for (int i = r; i < R.rows; ++i) {
      if (R.at(i, c) != 0) {
        sel = i;
        break;
      }
    }
    if (sel < 0) continue;
    if (sel != r) {
      for (int j = 0; j < R.cols; ++j) std::swap(R.at(sel, j), R.at(r, j));
    }
    u32 s = F.inv(R.at(r, c));
    if (s != 1) {
      for (int j = c; j < R.cols; ++j) R.at(r, j) = F.mul(R.at(r, j), s);
    }
    for (int i = 0; i < R.rows; ++i) {
      if (i == r) continue;
      u32 f = R.at(i, c);
      if (f == 0) continue;
      for (int j = c; j < R.cols; ++j)
        R.at(i, j) = F.sub(R.at(i, j), F.mul(f, R.at(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(R), std::move(pivots)};
}

int rank(const PrimeMatrix& M) { return static_cast<int>(rref(M).pivots.size()); }

Subspace Subspace::zero(int ambient, u32 p) {
  Subspace s;
  s.ambient = ambient;
  s.p = p;
  s.basis = PrimeMatrix(0, ambient, p);
  return s;
}

Subspace Subspace::from_span(const PrimeMatrix& rows) {
  auto [R, piv] = rref(rows);
  Subspace s;
  s.ambient = rows.cols;
  s.p = rows.p;
  int k = static_cast<int>(piv.size());
  s.basis = PrimeMatrix(k, rows.cols, rows.p);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < rows.cols; ++j) s.basis.at(i, j) = R.at(i, j);
  s.pivots = std::move(piv);
  return s;
}

Subspace Subspace::full(int ambient, u32 p) {
  Subspace s;
  s.ambient = ambient;
  s.p = p;
  s.basis = PrimeMatrix::identity(ambient, p);
  s.pivots.resize(ambient);
  for (int i = 0; i < ambient; ++i) s.pivots[i] = i;
  return s;
}

Vec Subspace::reduce(const Vec& v) const {
  if (static_cast<int>(v.size()) != ambient)
    throw std::invalid_argument("subspace/vector dimension mismatch");
  Vec w = v;
  PrimeField F(p);
  for (int r = 0; r < rank(); ++r) {
    u32 c = w[pivots[r]];
    if (c == 0) continue;
    for (int j = 0; j < ambient; ++j) w[j] = F.sub(w[j], F.mul(c, basis.at(r, j)));
  }
  return w;
}

bool Subspace::contains(const Vec& v) const {
  Vec w = reduce(v);
  return std::all_of(w.begin(), w.end(), [](u32 x) { return x == 0; });
}

Vec Subspace::coords_of(const Vec& v) const {
  if (!contains(v)) throw std::invalid_argument("vector outside subspace");
  Vec c(rank());
  for (int r = 0; r < rank(); ++r) c[r] = v[pivots[r]];
  return c;
}

bool Subspace::adjoin(const Vec& v) {
  Vec w = reduce(v);
  int lead = -1;
  for (int j = 0; j < ambient; ++j) {
    if (w[j] != 0) {
      lead = j;
      break;
    }
  }
  if (lead < 0) return false;
  PrimeField F(p);
  u32 s = F.inv(w[lead]);
  if (s != 1)
    for (auto& x : w) x = F.mul(x, s);
  // eliminate the new pivot column from existing rows
  for (int r = 0; r < rank(); ++r) {
    u32 f = basis.at(r, lead);
    if (f == 0) continue;
    for (int j = 0; j < ambient; ++j)
      basis.at(r, j) = F.sub(basis.at(r, j), F.mul(f, w[j]));
  }
  int pos = static_cast<int>(std::lower_bound(pivots.begin(), pivots.end(), lead) -
                             pivots.begin());
  PrimeMatrix nb(rank() + 1, ambient, p);
  for (int r = 0; r < pos; ++r)
    for (int j = 0; j < ambient; ++j) nb.at(r, j) = basis.at(r, j);
  for (int j = 0; j < ambient; ++j) nb.at(pos, j) = w[j];
  for (int r = pos; r < rank(); ++r)
    for (int j = 0; j < ambient; ++j) nb.at(r + 1, j) = basis.at(r, j);
  basis = std::move(nb);
  pivots.insert(pivots.begin() + pos, lead);
  return true;
}

Subspace kernel_basis(const PrimeMatrix& M) {
  auto [R, piv] = rref(M);
  PrimeField F(M.p);
  std::vector<bool> is_pivot(M.cols, false);
  for (int c : piv) is_pivot[c] = true;
  std::vector<Vec> rows;
  for (int j = 0; j < M.cols; ++j) {
    if (is_pivot[j]) continue;
    Vec v(M.cols, 0);
    v[j] = 1;
    for (size_t r = 0; r < piv.size(); ++r) v[piv[r]] = F.neg(R.at(static_cast<int>(r), j));
    rows.push_back(std::move(v));
  }
  return Subspace::from_span(from_rows(rows, M.cols, M.p));
}

Subspace column_space(const PrimeMatrix& M) {
  std::vector<Vec> rows;
  rows.reserve(M.cols);
  for (int c = 0; c < M.cols; ++c) rows.push_back(M.col(c));
  return Subspace::from_span(from_rows(rows, M.rows, M.p));
}

Subspace sum_and_close(int ambient, u32 p, const std::vector<Vec>& seeds,
                       const std::vector<VecMap>& maps) {
  Subspace S = Subspace::zero(ambient, p);
  for (const auto& v : seeds) S.adjoin(v);
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& f : maps) {
      for (int r = 0; r < S.rank(); ++r) {
        Vec img = f(S.row(r));
        if (static_cast<int>(img.size()) != ambient)
          throw std::invalid_argument("closure map changes ambient dimension");
        if (S.adjoin(img)) grew = true;
      }
    }
  }
  return S;
}

Subspace sum_and_close(const std::vector<Subspace>& seeds,
                       const std::vector<PrimeMatrix>& maps) {
  if (seeds.empty()) throw std::invalid_argument("sum_and_close needs a seed");
  int ambient = seeds.front().ambient;
  u32 p = seeds.front().p;
  std::vector<Vec> vecs;
  for (const auto& s : seeds) {
    if (s.ambient != ambient || s.p != p)
      throw std::invalid_argument("seed ambient/modulus mismatch");
    for (int r = 0; r < s.rank(); ++r) vecs.push_back(s.row(r));
  }
  std::vector<VecMap> fns;
  for (const auto& m : maps) {
    if (m.rows != ambient || m.cols != ambient)
      throw std::invalid_argument("closure map must be an endomorphism of the ambient space");
    fns.push_back([&m](const Vec& v) { return matvec(m, v); });
  }
  return sum_and_close(ambient, p, vecs, fns);
}

QuotientData quotient_data(const Subspace& sub) {
  PrimeField F(sub.p);
  std::vector<bool> is_pivot(sub.ambient, false);
  for (int c : sub.pivots) is_pivot[c] = true;
  QuotientData q;
  for (int j = 0; j < sub.ambient; ++j)
    if (!is_pivot[j]) q.complement.push_back(j);
  q.proj = PrimeMatrix(static_cast<int>(q.complement.size()), sub.ambient, sub.p);
  for (size_t k = 0; k < q.complement.size(); ++k) {
    int c = q.complement[k];
    q.proj.at(static_cast<int>(k), c) = 1;
    for (int r = 0; r < sub.rank(); ++r)
      q.proj.at(static_cast<int>(k), sub.pivots[r]) = F.neg(sub.basis.at(r, c));
  }
  return q;
}

}  // namespace fimhom
