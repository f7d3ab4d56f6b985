#include "fimhom/tree.hpp"

#include <algorithm>
#include <stdexcept>

namespace fimhom {

std::vector<int> singular_indices(const PointwiseModule& V) {
  const Grid& g = V.grid;
  std::vector<int> out;
  for (int i = 0; i < g.m; ++i) {
    bool singular = false;
    for (int idx = 0; idx < g.size() && !singular; ++idx) {
      if (g.up(idx, i) < 0) continue;
      if (rank(V.inclusion(idx, i)) != V.dims[idx]) singular = true;
    }
    if (singular) out.push_back(i);
  }
  return out;
}

std::vector<Subspace> torsion_kernel_family(const PointwiseModule& V, int coord) {
  const Grid& g = V.grid;
  std::vector<Subspace> fam(g.size());
  for (int idx = 0; idx < g.size(); ++idx) {
    const Obj& n = g.objects[idx];
    if (g.up(idx, coord) >= 0) {
      // exact where the one-step map exists; pushforwards from below and the
      // group action stay inside the kernel, so no closure pass is needed
      fam[idx] = kernel_basis(V.inclusion(idx, coord));
      continue;
    }
    std::vector<Vec> seeds;
    for (int c = 0; c < g.m; ++c) {
      int dn = g.down(idx, c);
      if (dn < 0) continue;
      for (int r = 0; r < fam[dn].rank(); ++r)
        seeds.push_back(matvec(V.inclusion(dn, c), fam[dn].row(r)));
    }
    std::vector<VecMap> maps;
    for (int c = 0; c < g.m; ++c)
      for (int j = 1; j <= n[c] - 1; ++j)
        maps.push_back([&V, idx, c, j](const Vec& v) {
          return matvec(V.transposition(idx, c, j), v);
        });
    fam[idx] = sum_and_close(V.dims[idx], V.p, seeds, maps);
  }
  return fam;
}

PointwiseModule child(const PointwiseModule& V, int coord) {
  std::vector<Subspace> fam = torsion_kernel_family(V, coord);
  bool nonzero = std::any_of(fam.begin(), fam.end(),
                             [](const Subspace& s) { return s.rank() > 0; });
  if (!nonzero) throw std::invalid_argument("coordinate is regular; no child");
  return *quotient_by(own(V), fam).module;
}

int TreeNode::count() const {
  int c = 1;
  for (const TreeNode& ch : children) c += ch.count();
  return c;
}

int TreeNode::depth() const {
  int d = 0;
  for (const TreeNode& ch : children) d = std::max(d, 1 + ch.depth());
  return d;
}

namespace {

TreeNode build_node(PointwiseModule V, int level, std::vector<int> path, int level_cap,
                    int smax, bool& terminated) {
  TreeNode node;
  node.level = level;
  node.path = std::move(path);
  node.degrees = degree_report(V, smax);
  node.torsion = torsion_vector(V);
  node.singular = singular_indices(V);
  node.module = std::move(V);
  if (node.module.is_zero() || node.singular.empty()) return node;  // leaf
  if (-level >= level_cap) {
    terminated = false;
    return node;
  }
  for (int i : node.singular) {
    PointwiseModule ch = child(node.module, i);
    std::vector<int> cpath = node.path;
    cpath.push_back(i);
    node.children.push_back(
        build_node(std::move(ch), level - 1, std::move(cpath), level_cap, smax, terminated));
  }
  return node;
}

}  // namespace

TorsionTree build_tree(const PointwiseModule& V, int level_cap, int smax) {
  if (level_cap < 0) throw std::invalid_argument("level cap must be >= 0");
  TorsionTree tree;
  bool terminated = true;
  tree.root = build_node(V, 0, {}, level_cap, smax, terminated);
  tree.terminated = terminated;
  tree.node_count = tree.root.count();
  tree.depth = tree.root.depth();
  return tree;
}

FiltrationReport filtration_check(const PointwiseModule& V) {
  const Grid& g = V.grid;
  for (int b : g.bounds)
    if (b < 1) throw std::invalid_argument("filtration check needs all bounds >= 1");
  Obj ones(g.m, 1);
  Grid sg = g.shrink(ones);

  std::vector<int> sing = singular_indices(V);
  auto is_singular = [&](int i) {
    return std::find(sing.begin(), sing.end(), i) != sing.end();
  };

  // per-coordinate pieces restricted to the common window
  std::vector<PointwiseModule> sigma_r(g.m);   // Sigma_i V for singular i
  std::vector<PointwiseModule> d_r(g.m);       // D_i V for all i
  std::vector<std::vector<PrimeMatrix>> proj_r(g.m);
  for (int i = 0; i < g.m; ++i) {
    ModuleMap nat = natural_map(i, V);
    auto coker = map_cokernel(nat);
    d_r[i] = restrict_to(*coker.module, sg.bounds);
    if (is_singular(i)) {
      sigma_r[i] = restrict_to(*nat.tgt, sg.bounds);
      proj_r[i].resize(sg.size());
      for (int idx = 0; idx < sg.size(); ++idx)
        proj_r[i][idx] = coker.proj.mats[nat.tgt->grid.index_of(sg.objects[idx])];
    }
  }

  // children of V (quotients on the full grid), restricted fibers via their
  // quotient data; we need their dimensions and the induced maps into Sigma_i
  std::vector<std::vector<Subspace>> kernels(g.m);
  for (int i : sing) kernels[i] = torsion_kernel_family(V, i);

  FiltrationReport rep;
  rep.kernel_dims.assign(sg.size(), 0);
  rep.children_dims.assign(sg.size(), 0);

  // materialize both sides with blocks ordered by coordinate
  std::vector<const PointwiseModule*> fr_parts, dm_parts;
  for (int i = 0; i < g.m; ++i) {
    fr_parts.push_back(is_singular(i) ? &sigma_r[i] : &d_r[i]);
    dm_parts.push_back(&d_r[i]);
  }
  ModulePtr FR = own(direct_sum(sg, V.p, fr_parts));
  ModulePtr DM = own(direct_sum(sg, V.p, dm_parts));

  // F_R V -> D_[m] V: identity on D_i blocks (regular i), proj on Sigma_i
  // blocks (singular i)
  std::vector<PrimeMatrix> phis(sg.size());
  for (int idx = 0; idx < sg.size(); ++idx) {
    PrimeMatrix phi(DM->dims[idx], FR->dims[idx], V.p);
    int ro = 0, co = 0;
    for (int i = 0; i < g.m; ++i) {
      if (is_singular(i)) {
        const PrimeMatrix& pr = proj_r[i][idx];
        for (int r = 0; r < pr.rows; ++r)
          for (int c = 0; c < pr.cols; ++c) phi.at(ro + r, co + c) = pr.at(r, c);
        ro += pr.rows;
        co += pr.cols;
      } else {
        for (int r = 0; r < d_r[i].dims[idx]; ++r) phi.at(ro + r, co + r) = 1;
        ro += d_r[i].dims[idx];
        co += d_r[i].dims[idx];
      }
    }
    phis[idx] = std::move(phi);
  }
  rep.map_natural = is_natural(ModuleMap{FR, DM, phis});
  if (!rep.map_natural) rep.pass = false;

  for (int idx = 0; idx < sg.size(); ++idx) {
    const PrimeMatrix& phi = phis[idx];
    int rows = phi.rows, cols = phi.cols;
    int phi_rank = rank(phi);
    if (phi_rank != rows) {
      rep.pass = false;
      rep.surjectivity_failures.push_back(idx);
    }
    int ker_dim = cols - phi_rank;
    rep.kernel_dims[idx] = ker_dim;

    // assembled map from the direct sum of the children into F_R V
    int vidx = g.index_of(sg.objects[idx]);
    int child_total = 0;
    std::vector<PrimeMatrix> blocks;  // per singular i: Sigma_i-block rows
    for (int i : sing) {
      QuotientData q = quotient_data(kernels[i][vidx]);
      child_total += static_cast<int>(q.complement.size());
      blocks.push_back(select_cols(V.inclusion(vidx, i), q.complement));
    }
    rep.children_dims[idx] = child_total;
    if (child_total != ker_dim) {
      rep.pass = false;
      rep.kernel_dim_failures.push_back(idx);
    }
    PrimeMatrix psi(cols, child_total, V.p);
    {
      int co2 = 0;
      size_t bi = 0;
      for (int i = 0, ro2 = 0; i < g.m; ++i) {
        int block_rows = is_singular(i) ? sigma_r[i].dims[idx] : d_r[i].dims[idx];
        if (is_singular(i)) {
          const PrimeMatrix& B = blocks[bi++];
          for (int r = 0; r < B.rows; ++r)
            for (int c = 0; c < B.cols; ++c) psi.at(ro2 + r, co2 + c) = B.at(r, c);
          co2 += B.cols;
        }
        ro2 += block_rows;
      }
    }
    // psi must be injective, land in ker(phi), and fill it
    bool iso = rank(psi) == child_total && mul(phi, psi).is_zero() && child_total == ker_dim;
    if (!iso) {
      rep.pass = false;
      rep.iso_failures.push_back(idx);
    }
  }
  return rep;
}

RecursiveIneqReport recursive_inequality_check(const PointwiseModule& V, int smax) {
  const Grid& g = V.grid;
  std::vector<int> sing = singular_indices(V);
  std::vector<int> regular;
  for (int i = 0; i < g.m; ++i)
    if (std::find(sing.begin(), sing.end(), i) == sing.end()) regular.push_back(i);

  DegreeReport dv = degree_report(V, smax);
  bool v_zero = V.is_zero();

  RecursiveIneqReport rep;
  int R = static_cast<int>(regular.size());
  for (int mask = 0; mask < (1 << R); ++mask) {
    RecursiveIneqEntry e;
    for (int b = 0; b < R; ++b)
      if (mask & (1 << b)) e.subset.push_back(regular[b]);
    PointwiseModule fs = f_s(e.subset, V);
    DegreeReport df = degree_report(fs, smax);
    e.reg_v = dv.reg;
    e.reg_fs = df.reg;
    if (v_zero || fs.is_zero()) {
      e.pass = true;  // vacuous by the zero-module convention
    } else if (dv.boundary_flag || df.boundary_flag) {
      e.skipped = true;
    } else if (!dv.reg.has_value()) {
      e.pass = true;
    } else if (!df.reg.has_value()) {
      e.pass = true;  // nonzero module with no visible homology cannot refute
    } else {
      e.margin = *df.reg + 1 - *dv.reg;
      e.pass = e.margin >= 0;
      if (!e.pass) rep.any_fail = true;
    }
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

}  // namespace fimhom
