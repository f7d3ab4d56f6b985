#include "fimhom/verify.hpp"

#include <algorithm>
#include <sstream>

namespace fimhom {

void VerifyReport::tally() {
  pass = fail = skip = 0;
  for (const auto& c : cases) {
    for (const auto& line : c.checks) {
      switch (line.verdict) {
        case Verdict::Pass: ++pass; break;
        case Verdict::Fail: ++fail; break;
        case Verdict::Skip: ++skip; break;
      }
    }
  }
}

namespace {

void push(std::vector<CheckLine>& out, const std::string& name, Verdict v,
          const std::string& detail) {
  out.push_back({name, v, detail});
}

void push_bool(std::vector<CheckLine>& out, const std::string& name, bool ok,
               const std::string& detail) {
  push(out, name, ok ? Verdict::Pass : Verdict::Fail, detail);
}

std::string subset_str(const SubsetS& S) {
  std::ostringstream os;
  os << '{';
  for (size_t k = 0; k < S.size(); ++k) {
    if (k) os << ',';
    os << S[k] + 1;
  }
  os << '}';
  return os.str();
}

std::string opt_str(const std::optional<int>& v) {
  return v.has_value() ? std::to_string(*v) : std::string("-inf");
}

struct GdInfo {
  int gd = -1;
  bool contact = false;
};

GdInfo gd_info(const PointwiseModule& V) {
  H0Data h = h0(V);
  GdInfo out;
  for (int idx = 0; idx < V.grid.size(); ++idx) {
    if (h.dims[idx] == 0) continue;
    out.gd = std::max(out.gd, rank_of(V.grid.objects[idx]));
    for (int i = 0; i < V.grid.m; ++i)
      if (V.grid.objects[idx][i] == V.grid.bounds[i]) out.contact = true;
  }
  return out;
}

// torsion vector ignoring kernel objects on the shell of `discount_coord`;
// those fibers of a child module are truncation approximations
TorsionVector torsion_discounted(const PointwiseModule& V, int discount_coord) {
  const Grid& g = V.grid;
  TorsionVector tv;
  tv.t.assign(g.m, -1);
  tv.witnesses.assign(g.m, {});
  for (int idx = 0; idx < g.size(); ++idx) {
    const Obj& n = g.objects[idx];
    if (n[discount_coord] == g.bounds[discount_coord]) continue;
    for (int i = 0; i < g.m; ++i) {
      if (g.up(idx, i) < 0) continue;
      if (rank(V.inclusion(idx, i)) == V.dims[idx]) continue;
      tv.t[i] = std::max(tv.t[i], n[i]);
    }
  }
  tv.tsum = 0;
  for (int i = 0; i < g.m; ++i) tv.tsum += tv.t[i];
  return tv;
}

std::string tvec_str(const TorsionVector& tv) {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < tv.t.size(); ++i) {
    if (i) os << ',';
    os << tv.t[i];
  }
  os << ')';
  return os.str();
}

void check_tree_edges(const TreeNode& node, std::vector<CheckLine>& out) {
  for (size_t c = 0; c < node.children.size(); ++c) {
    const TreeNode& ch = node.children[c];
    int coord = ch.path.back();
    std::ostringstream os;
    os << "edge path=";
    for (size_t q = 0; q < ch.path.size(); ++q) {
      if (q) os << '.';
      os << ch.path[q] + 1;
    }
    os << " tsum " << node.torsion.tsum << "->" << ch.torsion.tsum;
    if (ch.torsion.tsum <= node.torsion.tsum - 1) {
      push(out, "theorem/tree-descent", Verdict::Pass, os.str());
    } else {
      TorsionVector disc = torsion_discounted(ch.module, coord);
      if (disc.tsum <= node.torsion.tsum - 1) {
        push(out, "theorem/tree-descent", Verdict::Skip, os.str() + " (shell witness)");
      } else {
        push(out, "theorem/tree-descent", Verdict::Fail, os.str());
      }
    }
    check_tree_edges(ch, out);
  }
  if (node.children.empty()) {
    bool leaf_ok = node.module.is_zero() || is_torsion_free(node.module);
    push_bool(out, "theorem/tree-leaf", leaf_ok, "tsum=" + std::to_string(node.torsion.tsum));
  }
}

}  // namespace

std::vector<CheckLine> verify_module(const PointwiseModule& V, u64 map_seed, int smax) {
  smax = std::max(smax, 2);
  std::vector<CheckLine> out;
  const Grid& g = V.grid;
  const int m = g.m;
  const bool vzero = V.is_zero();

  auto viol = validate(V);
  push_bool(out, "module/validate", viol.empty(),
            viol.empty() ? "clean"
                         : viol.front().kind + " at " +
                               obj_to_string(g.objects[std::max(0, viol.front().obj)]));

  Resolution RV = resolve(V, smax + 2);
  H0Data h0V = h0(V);
  HomologyTable TV = homology_table(RV, h0V, smax);
  DegreeReport dv = degree_report_from(TV);

  EulerReport eu = euler_check(RV);
  push_bool(out, "oracle/euler", eu.ok,
            eu.ok ? "objects=" + std::to_string(g.size())
                  : "mismatch at " + obj_to_string(g.objects[eu.mismatch_objects.front()]));

  bool functors_ok = true;
  for (int b : g.bounds)
    if (b < 1) functors_ok = false;
  if (!functors_ok) {
    push(out, "functors", Verdict::Skip, "some bound is zero; functor layer unavailable");
    return out;
  }

  TorsionVector tv = torsion_vector(V);
  std::vector<int> sing = singular_indices(V);

  bool tf = is_torsion_free(V);
  bool basic4 = (tf == sing.empty()) && (tf == (tv.tsum == -m));
  push_bool(out, "lemma/basic-4-torsion-free", basic4,
            "t=" + tvec_str(tv) + " singular=" + subset_str(sing));

  std::vector<FourTermSequence> seqs;
  seqs.reserve(m);
  for (int i = 0; i < m; ++i) seqs.push_back(four_term(i, V));

  for (int i = 0; i < m; ++i) {
    const FourTermSequence& s = seqs[i];
    const Grid& sgrid = s.V->grid;
    bool ok = true;
    std::string where;
    for (int idx = 0; idx < sgrid.size() && ok; ++idx) {
      int dK = s.K->dims[idx], dV = s.V->dims[idx];
      int dS = s.SigmaV->dims[idx], dD = s.D->dims[idx];
      int r_incl = rank(s.incl.mats[idx]);
      int r_nat = rank(s.nat.mats[idx]);
      int r_proj = rank(s.proj.mats[idx]);
      bool here = r_incl == dK && mul(s.nat.mats[idx], s.incl.mats[idx]).is_zero() &&
                  r_nat == dV - dK && mul(s.proj.mats[idx], s.nat.mats[idx]).is_zero() &&
                  r_proj == dS - r_nat && r_proj == dD;
      if (!here) {
        ok = false;
        where = obj_to_string(sgrid.objects[idx]);
      }
    }
    push_bool(out, "functor/four-term-exact", ok,
              "i=" + std::to_string(i + 1) + (ok ? "" : " at " + where));
  }

  // Lemma basic (1) on the free cover of V
  {
    const FreeModule& P0 = RV.levels[0].P;
    if (P0.degrees.empty()) {
      push(out, "lemma/basic-1-free-shift", Verdict::Pass, "zero cover");
    } else {
      PointwiseModule P = to_pointwise(P0);
      GdInfo gp = gd_info(P);
      bool ok = true;
      std::string detail;
      for (int i = 0; i < m && ok; ++i) {
        for (int idx = 0; idx < g.size(); ++idx) {
          if (g.up(idx, i) < 0) continue;
          if (rank(P.inclusion(idx, i)) != P.dims[idx]) {
            ok = false;
            detail = "natural map not injective at " + obj_to_string(g.objects[idx]);
            break;
          }
        }
        if (!ok) break;
        PointwiseModule SP = sigma(i, P);
        DegreeReport ds = degree_report(SP, 1);
        if (ds.hd[1] != -1) {
          ok = false;
          detail = "H_1(Sigma_" + std::to_string(i + 1) + " P) != 0";
          break;
        }
        if (ds.gd > gp.gd) {
          ok = false;
          detail = "gd(Sigma_" + std::to_string(i + 1) + " P) > gd(P)";
          break;
        }
        auto coker = map_cokernel(natural_map(i, P));
        DegreeReport dd = degree_report(*coker.module, 1);
        if (dd.hd[1] != -1) {
          ok = false;
          detail = "H_1(D_" + std::to_string(i + 1) + " P) != 0";
          break;
        }
        if (dd.gd > gp.gd - 1) {
          ok = false;
          detail = "gd(D_" + std::to_string(i + 1) + " P) > gd(P)-1";
          break;
        }
      }
      push_bool(out, "lemma/basic-1-free-shift", ok, ok ? "gd(P)=" + std::to_string(gp.gd) : detail);
    }
  }

  // Lemma basic (2): gd(V) = gd(D_[m] V) + 1 for nonzero V
  {
    SubsetS full(m);
    for (int i = 0; i < m; ++i) full[i] = i;
    PointwiseModule Dm = d_s(full, V);
    GdInfo gD = gd_info(Dm);
    std::string detail = "gd(V)=" + std::to_string(dv.gd) + " gd(D[m])=" + std::to_string(gD.gd);
    if (vzero) {
      push(out, "lemma/basic-2-gd-drop", Verdict::Pass, "zero module");
    } else if (TV.shell_contact[0] || gD.contact) {
      push(out, "lemma/basic-2-gd-drop", Verdict::Skip, detail + " (shell)");
    } else {
      push_bool(out, "lemma/basic-2-gd-drop", dv.gd == gD.gd + 1, detail);
    }
  }

  // Lemma basic (3): prd bounds for every nonempty subset
  {
    bool v_contact = TV.shell_contact[0] || TV.shell_contact[1];
    for (int mask = 1; mask < (1 << m); ++mask) {
      SubsetS S;
      for (int i = 0; i < m; ++i)
        if (mask & (1 << i)) S.push_back(i);
      PointwiseModule Ss = sigma_s(S, V);
      PointwiseModule Ds = d_s(S, V);
      DegreeReport rs = degree_report(Ss, 1);
      DegreeReport rd = degree_report(Ds, 1);
      std::string base = "S=" + subset_str(S);
      if (vzero) {
        push(out, "lemma/basic-3-prd", Verdict::Pass, base + " zero module");
        continue;
      }
      if (v_contact || rs.shell_contact[0] || rs.shell_contact[1]) {
        push(out, "lemma/basic-3-prd", Verdict::Skip, base + " sigma (shell)");
      } else {
        push_bool(out, "lemma/basic-3-prd", rs.prd <= dv.prd,
                  base + " prd(Sigma_S)=" + std::to_string(rs.prd) +
                      " prd(V)=" + std::to_string(dv.prd));
      }
      if (v_contact || rd.shell_contact[0] || rd.shell_contact[1]) {
        push(out, "lemma/basic-3-prd", Verdict::Skip, base + " derivative (shell)");
      } else {
        push_bool(out, "lemma/basic-3-prd", rd.prd <= dv.prd - 1,
                  base + " prd(D_S)=" + std::to_string(rd.prd) +
                      " prd(V)=" + std::to_string(dv.prd));
      }
    }
  }

  // Lemma basic (5): t_i(V) <= gd(K_i V)
  for (int i = 0; i < m; ++i) {
    GdInfo gK = gd_info(*seqs[i].K);
    std::string detail = "i=" + std::to_string(i + 1) + " t_i=" + std::to_string(tv.t[i]) +
                         " gd(K_i)=" + std::to_string(gK.gd);
    if (gK.contact && tv.t[i] > gK.gd) {
      push(out, "lemma/basic-5-torsion-gd", Verdict::Skip, detail + " (shell)");
    } else {
      push_bool(out, "lemma/basic-5-torsion-gd", tv.t[i] <= gK.gd, detail);
    }
  }

  // Lemma basic (6): torsion under shifts
  for (int j = 0; j < m; ++j) {
    const PointwiseModule& SV = *seqs[j].SigmaV;
    bool window_ok = true;
    for (int b : SV.grid.bounds)
      if (b < 1) window_ok = false;
    if (!window_ok) {
      push(out, "lemma/basic-6-torsion-shift", Verdict::Skip,
           "j=" + std::to_string(j + 1) + " window too small");
      continue;
    }
    TorsionVector ts = torsion_vector(SV);
    bool ok = true;
    std::string detail = "j=" + std::to_string(j + 1) + " t(Sigma_j)=" + tvec_str(ts) +
                         " t(V)=" + tvec_str(tv);
    for (int i = 0; i < m; ++i) {
      if (ts.t[i] > tv.t[i]) ok = false;
      if (i == j && tv.t[i] >= 0 && !(ts.t[i] < tv.t[i])) ok = false;
    }
    push_bool(out, "lemma/basic-6-torsion-shift", ok, detail);
  }

  // Corollary: t(V/K_i V) <= t(V) - 1 for singular i
  std::vector<PointwiseModule> children;
  for (int i : sing) children.push_back(child(V, i));
  for (size_t k = 0; k < sing.size(); ++k) {
    int i = sing[k];
    TorsionVector tc = torsion_vector(children[k]);
    std::string detail = "i=" + std::to_string(i + 1) + " tsum(child)=" +
                         std::to_string(tc.tsum) + " tsum(V)=" + std::to_string(tv.tsum);
    if (tc.tsum <= tv.tsum - 1) {
      push(out, "corollary/child-descent", Verdict::Pass, detail);
    } else {
      TorsionVector disc = torsion_discounted(children[k], i);
      if (disc.tsum <= tv.tsum - 1) {
        push(out, "corollary/child-descent", Verdict::Skip, detail + " (shell witness)");
      } else {
        push(out, "corollary/child-descent", Verdict::Fail, detail);
      }
    }
  }

  // Corollary: gd(K_i), prd(V/K_i), t_i <= max(prd(V), hd_2(D_i V))
  for (int i = 0; i < m; ++i) {
    HomologyTable TD = homology_table(*seqs[i].D, 2);
    DegreeReport rd = degree_report_from(TD);
    bool bound_contact = TV.shell_contact[0] || TV.shell_contact[1] || rd.boundary_flag;
    int bound = std::max(dv.prd, rd.hd[2]);
    GdInfo gK = gd_info(*seqs[i].K);
    std::string detail = "i=" + std::to_string(i + 1) + " bound=" + std::to_string(bound) +
                         " gd(K)=" + std::to_string(gK.gd) + " t_i=" + std::to_string(tv.t[i]);
    if (vzero) {
      push(out, "corollary/finite-bounds", Verdict::Pass, "zero module");
      continue;
    }
    bool singular_i = std::find(sing.begin(), sing.end(), i) != sing.end();
    std::optional<int> prd_child;
    bool child_contact = false;
    if (singular_i) {
      const PointwiseModule& ch = children[std::find(sing.begin(), sing.end(), i) - sing.begin()];
      DegreeReport rc = degree_report(ch, 1);
      prd_child = rc.prd;
      child_contact = rc.shell_contact[0] || rc.shell_contact[1];
      detail += " prd(child)=" + std::to_string(rc.prd);
    }
    if (bound_contact || gK.contact || child_contact) {
      push(out, "corollary/finite-bounds", Verdict::Skip, detail + " (shell)");
      continue;
    }
    bool ok = gK.gd <= bound && tv.t[i] <= bound &&
              (!prd_child.has_value() || *prd_child <= bound);
    push_bool(out, "corollary/finite-bounds", ok, detail);
  }

  // Filtration lemma
  {
    FiltrationReport fr = filtration_check(V);
    std::string detail;
    if (fr.pass) {
      detail = "objects=" + std::to_string(fr.kernel_dims.size());
    } else if (!fr.map_natural) {
      detail = "map not natural";
    } else {
      int at = !fr.surjectivity_failures.empty()   ? fr.surjectivity_failures.front()
               : !fr.kernel_dim_failures.empty()   ? fr.kernel_dim_failures.front()
                                                   : fr.iso_failures.front();
      Grid sg = g.shrink(Obj(g.m, 1));
      detail = "failure at " + obj_to_string(sg.objects[at]);
    }
    push_bool(out, "lemma/filtration", fr.pass, detail);
  }

  // Recursive regularity inequality
  {
    RecursiveIneqReport rr = recursive_inequality_check(V, smax);
    int checked = 0, skipped = 0;
    for (const auto& e : rr.entries) {
      if (e.skipped) ++skipped;
      else ++checked;
    }
    std::string detail = "subsets=" + std::to_string(rr.entries.size()) +
                         " checked=" + std::to_string(checked) +
                         " skipped=" + std::to_string(skipped);
    if (rr.any_fail) {
      for (const auto& e : rr.entries)
        if (!e.skipped && !e.pass)
          detail += " S=" + subset_str(e.subset) + " reg(V)=" + opt_str(e.reg_v) +
                    " reg(F_S)=" + opt_str(e.reg_fs);
      push(out, "lemma/recursive-inequality", Verdict::Fail, detail);
    } else if (checked == 0) {
      push(out, "lemma/recursive-inequality", Verdict::Skip, detail);
    } else {
      push(out, "lemma/recursive-inequality", Verdict::Pass, detail);
    }
  }

  // Tree construction
  {
    int cap = tv.tsum + m + 1;
    TorsionTree tree = build_tree(V, std::max(cap, 0), 1);
    std::string detail = "nodes=" + std::to_string(tree.node_count) +
                         " depth=" + std::to_string(tree.depth) + " cap=" + std::to_string(cap);
    push_bool(out, "theorem/tree-termination", tree.terminated && tree.depth <= cap, detail);
    check_tree_edges(tree.root, out);
  }

  // Abelian closure: kernel/cokernel/image of a random map are modules
  {
    DetRng rng(map_seed);
    int gens = 1 + static_cast<int>(rng.below(2));
    std::vector<Obj> degrees;
    std::vector<Vec> images;
    for (int k = 0; k < gens; ++k) {
      int at = static_cast<int>(rng.below(g.size()));
      degrees.push_back(g.objects[at]);
      Vec img(V.dims[at]);
      for (auto& x : img) x = static_cast<u32>(rng.below(V.p));
      images.push_back(std::move(img));
    }
    FreeModule P = make_free(g, V.p, degrees);
    ModuleMap f = free_map(P, own(V), images);
    auto ker = map_kernel(f);
    auto coker = map_cokernel(f);
    auto img = map_image(f);
    push_bool(out, "abelian/kernel-module", validate(*ker.module).empty() && is_natural(ker.incl),
              "gens=" + std::to_string(gens));
    push_bool(out, "abelian/cokernel-module",
              validate(*coker.module).empty() && is_natural(coker.proj), "");
    push_bool(out, "abelian/image-module", validate(*img.module).empty() && is_natural(img.incl),
              "");
    bool ranks_ok = true;
    for (int idx = 0; idx < g.size() && ranks_ok; ++idx) {
      int r = rank(f.mats[idx]);
      if (ker.module->dims[idx] + r != f.src->dims[idx]) ranks_ok = false;
      if (coker.module->dims[idx] != V.dims[idx] - r) ranks_ok = false;
      if (img.module->dims[idx] != r) ranks_ok = false;
      if (!mul(f.mats[idx], ker.incl.mats[idx]).is_zero()) ranks_ok = false;
    }
    push_bool(out, "abelian/rank-exactness", ranks_ok, "");
  }

  return out;
}

VerifyReport run_verify_random(const RandomVerifyConfig& cfg) {
  VerifyReport rep;
  RandomPresentationParams params;
  params.m = cfg.m;
  params.bounds = cfg.bounds;
  params.p = cfg.p;
  for (int k = 0; k < cfg.count; ++k) {
    u64 seed = cfg.seed + static_cast<u64>(k);
    Presentation P = random_presentation(seed, params);
    PointwiseModule V = evaluate_presentation(P);
    VerifyCase vc;
    std::ostringstream label;
    label << "case " << k << " seed=" << seed << " field=" << cfg.p
          << " gens=" << P.generators.size() << " rels=" << P.relations.size()
          << " dim=" << V.total_dim();
    vc.label = label.str();
    vc.checks = verify_module(V, seed ^ 0x9e3779b97f4a7c15ull, cfg.smax);
    rep.cases.push_back(std::move(vc));
  }
  rep.tally();
  return rep;
}

VerifyReport run_verify_presentation(const Presentation& P, int smax) {
  VerifyReport rep;
  PointwiseModule V = evaluate_presentation(P);
  VerifyCase vc;
  std::ostringstream label;
  label << "case 0 file field=" << P.p << " gens=" << P.generators.size()
        << " rels=" << P.relations.size() << " dim=" << V.total_dim();
  vc.label = label.str();
  vc.checks = verify_module(V, 0x9e3779b97f4a7c15ull, smax);
  rep.cases.push_back(std::move(vc));
  rep.tally();
  return rep;
}

}  // namespace fimhom
