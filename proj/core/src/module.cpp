#include "fimhom/module.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace fimhom {

int PointwiseModule::total_dim() const {
  return std::accumulate(dims.begin(), dims.end(), 0);
}

PointwiseModule PointwiseModule::shell(const Grid& grid, u32 p, std::vector<int> d) {
  PointwiseModule V;
  V.grid = grid;
  V.p = p;
  V.dims = std::move(d);
  int N = grid.size();
  V.trans.resize(N);
  V.incl.resize(N);
  for (int idx = 0; idx < N; ++idx) {
    V.trans[idx].resize(grid.m);
    V.incl[idx].resize(grid.m);
    for (int c = 0; c < grid.m; ++c) {
      int letters = grid.objects[idx][c];
      V.trans[idx][c].resize(letters >= 2 ? letters - 1 : 0);
    }
  }
  return V;
}

int FreeModule::summand_of(int obj, int basis_index) const {
  for (size_t k = 0; k < degrees.size(); ++k) {
    int off = offsets[obj][k];
    if (off < 0) continue;
    if (basis_index >= off && basis_index < off + static_cast<int>(homsizes[obj][k]))
      return static_cast<int>(k);
  }
  throw std::out_of_range("basis index outside fiber");
}

int FreeModule::basis_index(int obj, int summand, const Morphism& f) const {
  int off = offsets[obj][summand];
  if (off < 0) throw std::invalid_argument("summand has no basis at this object");
  return off + static_cast<int>(hom_rank(f));
}

std::vector<int> FreeModule::degree_block(int obj) const {
  std::vector<int> out;
  for (size_t k = 0; k < degrees.size(); ++k) {
    if (degrees[k] != grid.objects[obj]) continue;
    int off = offsets[obj][k];
    for (u64 t = 0; t < homsizes[obj][k]; ++t) out.push_back(off + static_cast<int>(t));
  }
  return out;
}

Vec FreeModule::apply_trans(int obj, int coord, int j, const Vec& v) const {
  const auto& perm = trans_perm[obj][coord][j - 1];
  Vec out(v.size(), 0);
  for (size_t b = 0; b < v.size(); ++b) out[perm[b]] = v[b];
  return out;
}

Vec FreeModule::apply_incl(int obj, int coord, const Vec& v) const {
  const auto& perm = incl_perm[obj][coord];
  int up = grid.up(obj, coord);
  Vec out(dims[up], 0);
  for (size_t b = 0; b < v.size(); ++b) out[perm[b]] = v[b];
  return out;
}

FreeModule make_free(const Grid& grid, u32 p, const std::vector<Obj>& degrees) {
  for (const Obj& d : degrees)
    if (!grid.contains(d))
      throw std::invalid_argument("free module degree outside grid: " + obj_to_string(d));
  FreeModule F;
  F.grid = grid;
  F.p = p;
  F.degrees = degrees;
  int N = grid.size();
  int S = static_cast<int>(degrees.size());
  F.dims.assign(N, 0);
  F.offsets.assign(N, std::vector<int>(S, -1));
  F.homsizes.assign(N, std::vector<u64>(S, 0));
  std::vector<std::vector<std::vector<Morphism>>> basis(N);  // [obj][summand]
  for (int idx = 0; idx < N; ++idx) {
    basis[idx].resize(S);
    int off = 0;
    for (int k = 0; k < S; ++k) {
      basis[idx][k] = enumerate_hom(degrees[k], grid.objects[idx]);
      u64 cnt = basis[idx][k].size();
      F.homsizes[idx][k] = cnt;
      F.offsets[idx][k] = cnt > 0 ? off : -1;
      off += static_cast<int>(cnt);
    }
    F.dims[idx] = off;
  }
  F.trans_perm.resize(N);
  F.incl_perm.resize(N);
  for (int idx = 0; idx < N; ++idx) {
    const Obj& n = grid.objects[idx];
    F.trans_perm[idx].resize(grid.m);
    F.incl_perm[idx].resize(grid.m);
    for (int c = 0; c < grid.m; ++c) {
      int letters = n[c];
      F.trans_perm[idx][c].resize(letters >= 2 ? letters - 1 : 0);
      for (int j = 1; j <= letters - 1; ++j) {
        Morphism t = transposition_morphism(n, c, j);
        auto& perm = F.trans_perm[idx][c][j - 1];
        perm.resize(F.dims[idx]);
        for (int k = 0; k < S; ++k) {
          int off = F.offsets[idx][k];
          for (u64 b = 0; b < F.homsizes[idx][k]; ++b) {
            Morphism img = compose(t, basis[idx][k][b]);
            perm[off + static_cast<int>(b)] = off + static_cast<int>(hom_rank(img));
          }
        }
      }
      int up = grid.up(idx, c);
      if (up >= 0) {
        Morphism io = inclusion_morphism(n, c);
        auto& perm = F.incl_perm[idx][c];
        perm.resize(F.dims[idx]);
        for (int k = 0; k < S; ++k) {
          int off = F.offsets[idx][k];
          int off_up = F.offsets[up][k];
          for (u64 b = 0; b < F.homsizes[idx][k]; ++b) {
            Morphism img = compose(io, basis[idx][k][b]);
            perm[off + static_cast<int>(b)] = off_up + static_cast<int>(hom_rank(img));
          }
        }
      }
    }
  }
  return F;
}

PointwiseModule to_pointwise(const FreeModule& F) {
  PointwiseModule V = PointwiseModule::shell(F.grid, F.p, F.dims);
  int N = F.grid.size();
  for (int idx = 0; idx < N; ++idx) {
    int d = F.dims[idx];
    for (int c = 0; c < F.grid.m; ++c) {
      for (size_t j = 0; j < F.trans_perm[idx][c].size(); ++j) {
        PrimeMatrix M(d, d, F.p);
        for (int b = 0; b < d; ++b) M.at(F.trans_perm[idx][c][j][b], b) = 1;
        V.trans[idx][c][j] = std::move(M);
      }
      int up = F.grid.up(idx, c);
      if (up >= 0) {
        PrimeMatrix M(F.dims[up], d, F.p);
        for (int b = 0; b < d; ++b) M.at(F.incl_perm[idx][c][b], b) = 1;
        V.incl[idx][c] = std::move(M);
      }
    }
  }
  return V;
}

PointwiseModule free_module(const Obj& d, const Grid& grid, u32 p) {
  return to_pointwise(make_free(grid, p, {d}));
}

PointwiseModule zero_module(const Grid& grid, u32 p) {
  return PointwiseModule::shell(grid, p, std::vector<int>(grid.size(), 0));
}

PrimeMatrix action_of(const Morphism& f, const PointwiseModule& V) {
  int src = V.grid.index_of(f.src);
  int tgt = V.grid.index_of(f.tgt);
  if (src < 0 || tgt < 0) throw std::invalid_argument("morphism objects outside grid");
  GeneratorWord w = factor(f);
  PrimeMatrix M = PrimeMatrix::identity(V.dims[src], V.p);
  int cur = src;
  for (const Atom& a : w.atoms) {
    if (a.is_inclusion) {
      M = mul(V.inclusion(cur, a.coord), M);
      cur = V.grid.up(cur, a.coord);
    } else {
      M = mul(V.transposition(cur, a.coord, a.j), M);
    }
  }
  return M;
}

Vec apply_morphism(const Morphism& f, const PointwiseModule& V, const Vec& v) {
  int src = V.grid.index_of(f.src);
  int tgt = V.grid.index_of(f.tgt);
  if (src < 0 || tgt < 0) throw std::invalid_argument("morphism objects outside grid");
  GeneratorWord w = factor(f);
  Vec x = v;
  int cur = src;
  for (const Atom& a : w.atoms) {
    if (a.is_inclusion) {
      x = matvec(V.inclusion(cur, a.coord), x);
      cur = V.grid.up(cur, a.coord);
    } else {
      x = matvec(V.transposition(cur, a.coord, a.j), x);
    }
  }
  return x;
}

namespace {

void check_eq(std::vector<Violation>& out, const PrimeMatrix& A, const PrimeMatrix& B,
              const std::string& kind, int obj, const std::string& detail) {
  if (!(A == B)) out.push_back({kind, obj, detail});
}

}  // namespace

std::vector<Violation> validate(const PointwiseModule& V) {
  std::vector<Violation> out;
  const Grid& g = V.grid;
  for (int idx = 0; idx < g.size(); ++idx) {
    const Obj& n = g.objects[idx];
    int d = V.dims[idx];
    PrimeMatrix id = PrimeMatrix::identity(d, V.p);
    for (int c = 0; c < g.m; ++c) {
      int top = n[c] - 1;
      for (int j = 1; j <= top; ++j) {
        const PrimeMatrix& A = V.transposition(idx, c, j);
        if (A.rows != d || A.cols != d) {
          out.push_back({"shape", idx, "transposition matrix shape"});
          continue;
        }
        check_eq(out, mul(A, A), id, "involution", idx,
                 "coord " + std::to_string(c + 1) + " s_" + std::to_string(j));
        if (j + 1 <= top) {
          const PrimeMatrix& B = V.transposition(idx, c, j + 1);
          check_eq(out, mul(mul(A, B), A), mul(mul(B, A), B), "braid", idx,
                   "coord " + std::to_string(c + 1) + " s_" + std::to_string(j));
        }
        for (int l = j + 2; l <= top; ++l) {
          const PrimeMatrix& B = V.transposition(idx, c, l);
          check_eq(out, mul(A, B), mul(B, A), "distant-commute", idx,
                   "coord " + std::to_string(c + 1));
        }
        for (int c2 = c + 1; c2 < g.m; ++c2) {
          for (int j2 = 1; j2 <= n[c2] - 1; ++j2) {
            const PrimeMatrix& B = V.transposition(idx, c2, j2);
            check_eq(out, mul(A, B), mul(B, A), "cross-coordinate-commute", idx, "");
          }
        }
      }
      int up = g.up(idx, c);
      if (up < 0) continue;
      const PrimeMatrix& E = V.inclusion(idx, c);
      if (E.rows != V.dims[up] || E.cols != d) {
        out.push_back({"shape", idx, "inclusion matrix shape"});
        continue;
      }
      // naturality of the inclusion against the embedded group
      for (int c2 = 0; c2 < g.m; ++c2) {
        int top2 = n[c2] - 1;  // embedded S_{n_i} inside S_{n_i + 1} when c2 == c
        for (int j = 1; j <= top2; ++j) {
          check_eq(out, mul(E, V.transposition(idx, c2, j)),
                   mul(V.transposition(up, c2, j), E), "inclusion-naturality", idx,
                   "coord " + std::to_string(c2 + 1) + " s_" + std::to_string(j));
        }
      }
      // commuting squares of distinct-coordinate inclusions
      for (int c2 = c + 1; c2 < g.m; ++c2) {
        int up2 = g.up(idx, c2);
        if (up2 < 0) continue;
        int upup = g.up(up, c2);
        if (upup < 0) continue;
        check_eq(out, mul(V.inclusion(up, c2), E), mul(V.inclusion(up2, c), V.inclusion(idx, c2)),
                 "square-commute", idx,
                 "coords " + std::to_string(c + 1) + "," + std::to_string(c2 + 1));
      }
    }
  }
  return out;
}

PointwiseModule direct_sum(const Grid& grid, u32 p,
                           const std::vector<const PointwiseModule*>& parts) {
  for (const auto* part : parts) {
    if (!(part->grid == grid) || part->p != p)
      throw std::invalid_argument("direct sum grid/field mismatch");
  }
  int N = grid.size();
  std::vector<int> dims(N, 0);
  for (int idx = 0; idx < N; ++idx)
    for (const auto* part : parts) dims[idx] += part->dims[idx];
  PointwiseModule V = PointwiseModule::shell(grid, p, dims);
  auto blockdiag = [&](int idx, auto&& pick, int rows, int cols) {
    PrimeMatrix M(rows, cols, p);
    int ro = 0, co = 0;
    for (const auto* part : parts) {
      const PrimeMatrix& B = pick(*part);
      for (int r = 0; r < B.rows; ++r)
        for (int c = 0; c < B.cols; ++c) M.at(ro + r, co + c) = B.at(r, c);
      ro += B.rows;
      co += B.cols;
    }
    (void)idx;
    return M;
  };
  for (int idx = 0; idx < N; ++idx) {
    const Obj& n = grid.objects[idx];
    for (int c = 0; c < grid.m; ++c) {
      for (int j = 1; j <= n[c] - 1; ++j) {
        V.trans[idx][c][j - 1] = blockdiag(
            idx, [&](const PointwiseModule& m) -> const PrimeMatrix& {
              return m.transposition(idx, c, j);
            },
            dims[idx], dims[idx]);
      }
      int up = grid.up(idx, c);
      if (up >= 0) {
        V.incl[idx][c] = blockdiag(
            idx,
            [&](const PointwiseModule& m) -> const PrimeMatrix& { return m.inclusion(idx, c); },
            dims[up], dims[idx]);
      }
    }
  }
  return V;
}

PointwiseModule restrict_to(const PointwiseModule& V, const Obj& bounds) {
  if (!leq(bounds, V.grid.bounds))
    throw std::invalid_argument("restriction window exceeds module grid");
  Grid g = Grid::make(bounds);
  std::vector<int> dims(g.size());
  for (int idx = 0; idx < g.size(); ++idx)
    dims[idx] = V.dims[V.grid.index_of(g.objects[idx])];
  PointwiseModule W = PointwiseModule::shell(g, V.p, dims);
  for (int idx = 0; idx < g.size(); ++idx) {
    int src = V.grid.index_of(g.objects[idx]);
    const Obj& n = g.objects[idx];
    for (int c = 0; c < g.m; ++c) {
      for (int j = 1; j <= n[c] - 1; ++j)
        W.trans[idx][c][j - 1] = V.transposition(src, c, j);
      if (g.up(idx, c) >= 0) W.incl[idx][c] = V.inclusion(src, c);
    }
  }
  return W;
}

}  // namespace fimhom
