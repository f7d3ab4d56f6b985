#include "fimhom/homology.hpp"

#include <algorithm>
#include <stdexcept>

namespace fimhom {

int Resolution::fiber_dim(int s, int obj) const {
  if (s < 0 || s >= static_cast<int>(levels.size())) return 0;
  return levels[s].P.dims[obj];
}

namespace {

struct CoverPlan {
  std::vector<Obj> degrees;
  std::vector<Vec> lifts;
};

// Greedy generators for the syzygy W inside the free module P: start from the
// pushforward closure of the lower fibers and extend by whole orbit closures.
CoverPlan plan_cover_inside(const FreeModule& P, const std::vector<Subspace>& W) {
  const Grid& g = P.grid;
  CoverPlan plan;
  for (int idx = 0; idx < g.size(); ++idx) {
    const Obj& n = g.objects[idx];
    std::vector<Vec> seeds;
    for (int c = 0; c < g.m; ++c) {
      int dn = g.down(idx, c);
      if (dn < 0) continue;
      for (int r = 0; r < W[dn].rank(); ++r)
        seeds.push_back(P.apply_incl(dn, c, W[dn].row(r)));
    }
    std::vector<VecMap> maps;
    for (int c = 0; c < g.m; ++c)
      for (int j = 1; j <= n[c] - 1; ++j)
        maps.push_back([&P, idx, c, j](const Vec& v) { return P.apply_trans(idx, c, j, v); });
    Subspace S = sum_and_close(P.dims[idx], P.p, seeds, maps);
    while (S.rank() < W[idx].rank()) {
      int pick = -1;
      for (int r = 0; r < W[idx].rank() && pick < 0; ++r)
        if (!S.contains(W[idx].row(r))) pick = r;
      if (pick < 0) throw std::logic_error("syzygy cover stalled");
      Vec lift = W[idx].row(pick);
      plan.degrees.push_back(n);
      plan.lifts.push_back(lift);
      std::vector<Vec> grow;
      for (int r = 0; r < S.rank(); ++r) grow.push_back(S.row(r));
      grow.push_back(lift);
      S = sum_and_close(P.dims[idx], P.p, grow, maps);
    }
  }
  return plan;
}

bool all_zero(const std::vector<Subspace>& W) {
  return std::all_of(W.begin(), W.end(), [](const Subspace& s) { return s.rank() == 0; });
}

}  // namespace

Resolution resolve(const PointwiseModule& V, int levels) {
  Resolution R;
  R.grid = V.grid;
  R.p = V.p;
  R.vdims = V.dims;
  if (levels <= 0) return R;

  MinimalCover mc = minimal_cover(V);
  Resolution::Level lvl0;
  lvl0.P = std::move(mc.P);
  lvl0.diff = std::move(mc.cover.mats);
  lvl0.syzygy.resize(R.grid.size());
  for (int idx = 0; idx < R.grid.size(); ++idx)
    lvl0.syzygy[idx] = kernel_basis(lvl0.diff[idx]);
  R.levels.push_back(std::move(lvl0));

  for (int s = 1; s < levels; ++s) {
    const Resolution::Level& prev = R.levels.back();
    if (all_zero(prev.syzygy)) break;
    CoverPlan plan = plan_cover_inside(prev.P, prev.syzygy);
    Resolution::Level lvl;
    lvl.P = make_free(R.grid, R.p, plan.degrees);
    lvl.diff = free_map_matrices(lvl.P, ops_of(prev.P), plan.lifts);
    lvl.syzygy.resize(R.grid.size());
    for (int idx = 0; idx < R.grid.size(); ++idx)
      lvl.syzygy[idx] = kernel_basis(lvl.diff[idx]);
    R.levels.push_back(std::move(lvl));
  }
  return R;
}

HomologyTable homology_table(const Resolution& R, const H0Data& h, int smax) {
  HomologyTable T;
  T.grid = R.grid;
  T.smax = smax;
  T.rows.assign(smax + 1, std::vector<int>(R.grid.size(), 0));
  T.rows[0] = h.dims;
  int L = static_cast<int>(R.levels.size());
  for (int s = 1; s <= smax; ++s) {
    if (s >= L) break;  // complex is exact beyond the built levels
    for (int idx = 0; idx < R.grid.size(); ++idx) {
      std::vector<int> cols = R.levels[s].P.degree_block(idx);
      if (cols.empty()) continue;
      std::vector<int> rows_prev = R.levels[s - 1].P.degree_block(idx);
      int k = static_cast<int>(cols.size());
      if (!rows_prev.empty())
        k -= rank(submatrix(R.levels[s].diff[idx], rows_prev, cols));
      int im = 0;
      if (s + 1 < L) {
        std::vector<int> cols_next = R.levels[s + 1].P.degree_block(idx);
        if (!cols_next.empty())
          im = rank(submatrix(R.levels[s + 1].diff[idx], cols, cols_next));
      }
      T.rows[s][idx] = k - im;
    }
  }
  T.shell_contact.assign(smax + 1, false);
  for (int s = 0; s <= smax; ++s) {
    for (int idx = 0; idx < R.grid.size(); ++idx) {
      if (T.rows[s][idx] == 0) continue;
      const Obj& n = R.grid.objects[idx];
      for (int i = 0; i < R.grid.m; ++i)
        if (n[i] == R.grid.bounds[i]) T.shell_contact[s] = true;
    }
  }
  return T;
}

HomologyTable homology_table(const PointwiseModule& V, int smax) {
  if (smax < 0) throw std::invalid_argument("smax must be >= 0");
  Resolution R = resolve(V, smax + 2);
  return homology_table(R, h0(V), smax);
}

DegreeReport degree_report_from(const HomologyTable& table) {
  DegreeReport rep;
  rep.hd.assign(table.smax + 1, -1);
  rep.shell_contact = table.shell_contact;
  for (int s = 0; s <= table.smax; ++s) {
    for (int idx = 0; idx < table.grid.size(); ++idx)
      if (table.rows[s][idx] != 0)
        rep.hd[s] = std::max(rep.hd[s], rank_of(table.grid.objects[idx]));
    if (table.shell_contact[s]) rep.boundary_flag = true;
  }
  rep.gd = rep.hd[0];
  rep.prd = table.smax >= 1 ? std::max(rep.hd[0], rep.hd[1]) : rep.hd[0];
  bool any = false;
  int best = 0;
  for (int s = 0; s <= table.smax; ++s) {
    if (rep.hd[s] < 0) continue;
    int v = rep.hd[s] - s;
    best = any ? std::max(best, v) : v;
    any = true;
  }
  if (any) rep.reg = best;
  return rep;
}

DegreeReport degree_report(const PointwiseModule& V, int smax) {
  return degree_report_from(homology_table(V, smax));
}

TorsionVector torsion_vector(const PointwiseModule& V) {
  const Grid& g = V.grid;
  for (int b : g.bounds)
    if (b < 1) throw std::invalid_argument("torsion vector needs all bounds >= 1");
  TorsionVector tv;
  tv.t.assign(g.m, -1);
  tv.witnesses.assign(g.m, {});
  for (int idx = 0; idx < g.size(); ++idx) {
    const Obj& n = g.objects[idx];
    for (int i = 0; i < g.m; ++i) {
      if (g.up(idx, i) < 0) continue;
      const PrimeMatrix& E = V.inclusion(idx, i);
      if (rank(E) == V.dims[idx]) continue;  // injective: no kernel here
      if (n[i] > tv.t[i]) {
        tv.t[i] = n[i];
        tv.witnesses[i].clear();
      }
      if (n[i] == tv.t[i]) tv.witnesses[i].push_back(idx);
    }
  }
  tv.tsum = 0;
  for (int i = 0; i < g.m; ++i) tv.tsum += tv.t[i];
  return tv;
}

bool is_torsion_free(const PointwiseModule& V) {
  const Grid& g = V.grid;
  for (int idx = 0; idx < g.size(); ++idx) {
    for (int i = 0; i < g.m; ++i) {
      if (g.up(idx, i) < 0) continue;
      if (rank(V.inclusion(idx, i)) != V.dims[idx]) return false;
    }
  }
  return true;
}

EulerReport euler_check(const Resolution& R) {
  EulerReport rep;
  int L = static_cast<int>(R.levels.size());
  for (int idx = 0; idx < R.grid.size(); ++idx) {
    long long sum = 0;
    for (int s = 0; s < L; ++s) sum += (s % 2 == 0 ? 1 : -1) * R.levels[s].P.dims[idx];
    if (L > 0) {
      int tail = R.levels[L - 1].syzygy[idx].rank();
      sum += (L % 2 == 0 ? 1 : -1) * tail;
    }
    if (sum != R.vdims[idx]) {
      rep.ok = false;
      rep.mismatch_objects.push_back(idx);
    }
  }
  return rep;
}

}  // namespace fimhom
