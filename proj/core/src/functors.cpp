#include "fimhom/functors.hpp"

#include <algorithm>
#include <stdexcept>

namespace fimhom {

PointwiseModule sigma(int coord, const PointwiseModule& V) {
  const Grid& g = V.grid;
  if (g.bounds[coord] < 1) throw std::invalid_argument("sigma needs bound >= 1 in its coordinate");
  Grid sg = g.shrink([&] {
    Obj d(g.m, 0);
    d[coord] = 1;
    return d;
  }());
  std::vector<int> dims(sg.size());
  for (int idx = 0; idx < sg.size(); ++idx)
    dims[idx] = V.dims[g.index_of(plus_unit(sg.objects[idx], coord))];
  PointwiseModule W = PointwiseModule::shell(sg, V.p, dims);
  for (int idx = 0; idx < sg.size(); ++idx) {
    const Obj& n = sg.objects[idx];
    int src = g.index_of(plus_unit(n, coord));
    for (int c = 0; c < sg.m; ++c) {
      // transpositions restrict along the embedding fixing the top letter
      for (int j = 1; j <= n[c] - 1; ++j)
        W.trans[idx][c][j - 1] = V.transposition(src, c, j);
      if (sg.up(idx, c) < 0) continue;
      if (c != coord) {
        W.incl[idx][c] = V.inclusion(src, c);
      } else {
        // psi sends the standard inclusion to (swap top two) . standard inclusion
        int src_up = g.index_of(plus_unit(plus_unit(n, coord), coord));
        W.incl[idx][c] =
            mul(V.transposition(src_up, coord, n[coord] + 1), V.inclusion(src, coord));
      }
    }
  }
  return W;
}

ModuleMap natural_map(int coord, const PointwiseModule& V) {
  const Grid& g = V.grid;
  if (g.bounds[coord] < 1) throw std::invalid_argument("natural map needs bound >= 1");
  Obj delta(g.m, 0);
  delta[coord] = 1;
  Grid sg = g.shrink(delta);
  ModulePtr src = own(restrict_to(V, sg.bounds));
  ModulePtr tgt = own(sigma(coord, V));
  ModuleMap f{src, tgt, {}};
  f.mats.resize(sg.size());
  for (int idx = 0; idx < sg.size(); ++idx)
    f.mats[idx] = V.inclusion(g.index_of(sg.objects[idx]), coord);
  return f;
}

FourTermSequence four_term(int coord, const PointwiseModule& V) {
  FourTermSequence seq;
  seq.nat = natural_map(coord, V);
  seq.V = seq.nat.src;
  seq.SigmaV = seq.nat.tgt;
  auto ker = map_kernel(seq.nat);
  seq.K = ker.module;
  seq.incl = std::move(ker.incl);
  auto coker = map_cokernel(seq.nat);
  seq.D = coker.module;
  seq.proj = std::move(coker.proj);
  return seq;
}

PointwiseModule f_s(const SubsetS& S, const PointwiseModule& V) {
  const Grid& g = V.grid;
  for (int b : g.bounds)
    if (b < 1) throw std::invalid_argument("F_S needs all bounds >= 1");
  for (int i : S)
    if (i < 0 || i >= g.m) throw std::invalid_argument("subset coordinate out of range");
  Obj ones(g.m, 1);
  Grid sg = g.shrink(ones);
  std::vector<PointwiseModule> parts;
  parts.reserve(g.m);
  for (int i = 0; i < g.m; ++i) {
    bool in_S = std::find(S.begin(), S.end(), i) != S.end();
    if (in_S) {
      auto coker = map_cokernel(natural_map(i, V));
      parts.push_back(restrict_to(*coker.module, sg.bounds));
    } else {
      parts.push_back(restrict_to(sigma(i, V), sg.bounds));
    }
  }
  std::vector<const PointwiseModule*> ptrs;
  for (const auto& m : parts) ptrs.push_back(&m);
  return direct_sum(sg, V.p, ptrs);
}

namespace {

PointwiseModule sum_over_subset(const SubsetS& S, const PointwiseModule& V, bool derivative) {
  const Grid& g = V.grid;
  if (S.empty()) throw std::invalid_argument("subset must be nonempty");
  Obj delta(g.m, 0);
  for (int i : S) {
    if (i < 0 || i >= g.m) throw std::invalid_argument("subset coordinate out of range");
    if (g.bounds[i] < 1) throw std::invalid_argument("bound must be >= 1 on the subset");
    delta[i] = 1;
  }
  Grid sg = g.shrink(delta);
  std::vector<PointwiseModule> parts;
  for (int i : S) {
    if (derivative) {
      auto coker = map_cokernel(natural_map(i, V));
      parts.push_back(restrict_to(*coker.module, sg.bounds));
    } else {
      parts.push_back(restrict_to(sigma(i, V), sg.bounds));
    }
  }
  std::vector<const PointwiseModule*> ptrs;
  for (const auto& m : parts) ptrs.push_back(&m);
  return direct_sum(sg, V.p, ptrs);
}

}  // namespace

PointwiseModule sigma_s(const SubsetS& S, const PointwiseModule& V) {
  return sum_over_subset(S, V, false);
}

PointwiseModule d_s(const SubsetS& S, const PointwiseModule& V) {
  return sum_over_subset(S, V, true);
}

H0Data h0(const PointwiseModule& V) {
  const Grid& g = V.grid;
  H0Data out;
  out.dims.resize(g.size());
  out.lifts.resize(g.size());
  out.lower_image.resize(g.size());
  for (int idx = 0; idx < g.size(); ++idx) {
    const Obj& n = g.objects[idx];
    std::vector<Vec> seeds;
    for (int c = 0; c < g.m; ++c) {
      int dn = g.down(idx, c);
      if (dn < 0) continue;
      const PrimeMatrix& E = V.inclusion(dn, c);
      for (int col = 0; col < E.cols; ++col) seeds.push_back(E.col(col));
    }
    std::vector<VecMap> maps;
    for (int c = 0; c < g.m; ++c)
      for (int j = 1; j <= n[c] - 1; ++j)
        maps.push_back([&V, idx, c, j](const Vec& v) {
          return matvec(V.transposition(idx, c, j), v);
        });
    Subspace I = sum_and_close(V.dims[idx], V.p, seeds, maps);
    out.dims[idx] = V.dims[idx] - I.rank();
    out.lifts[idx] = quotient_data(I).complement;
    out.lower_image[idx] = std::move(I);
  }
  return out;
}

MinimalCover minimal_cover(const PointwiseModule& V) {
  const Grid& g = V.grid;
  H0Data h = h0(V);
  MinimalCover mc;
  for (int idx = 0; idx < g.size(); ++idx) {
    const Obj& n = g.objects[idx];
    std::vector<VecMap> maps;
    for (int c = 0; c < g.m; ++c)
      for (int j = 1; j <= n[c] - 1; ++j)
        maps.push_back([&V, idx, c, j](const Vec& v) {
          return matvec(V.transposition(idx, c, j), v);
        });
    Subspace S = h.lower_image[idx];
    while (S.rank() < V.dims[idx]) {
      // first standard coordinate outside the current span
      int pick = -1;
      {
        std::vector<bool> is_pivot(V.dims[idx], false);
        for (int c : S.pivots) is_pivot[c] = true;
        for (int c = 0; c < V.dims[idx] && pick < 0; ++c) {
          if (!is_pivot[c]) pick = c;
        }
      }
      if (pick < 0) throw std::logic_error("cover span stalled");
      Vec lift(V.dims[idx], 0);
      lift[pick] = 1;
      mc.degrees.push_back(n);
      mc.lifts.push_back(lift);
      std::vector<Vec> seeds;
      for (int r = 0; r < S.rank(); ++r) seeds.push_back(S.row(r));
      seeds.push_back(lift);
      S = sum_and_close(V.dims[idx], V.p, seeds, maps);
    }
  }
  mc.P = make_free(g, V.p, mc.degrees);
  mc.P_module = own(to_pointwise(mc.P));
  ModuleMap cover{mc.P_module, own(V), free_map_matrices(mc.P, ops_of(V), mc.lifts)};
  mc.cover = std::move(cover);
  return mc;
}

}  // namespace fimhom
