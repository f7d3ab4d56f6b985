#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "fimhom/verify.hpp"

using namespace fimhom;
using ordered_json = nlohmann::ordered_json;

namespace {

// ---------------------------------------------------------------------------
// presentation file parsing
// ---------------------------------------------------------------------------

Obj parse_obj(const ordered_json& j, int m, const std::string& where) {
  if (!j.is_array() || static_cast<int>(j.size()) != m)
    throw std::invalid_argument(where + ": expected an array of " + std::to_string(m) +
                                " coordinates");
  Obj n;
  for (const auto& v : j) {
    if (!v.is_number_integer() || v.get<long long>() < 0)
      throw std::invalid_argument(where + ": coordinates must be non-negative integers");
    n.push_back(v.get<int>());
  }
  return n;
}

Presentation parse_presentation(const ordered_json& j) {
  Presentation P;
  if (!j.is_object()) throw std::invalid_argument("input is not an object");
  if (!j.contains("field") || !j["field"].is_number_integer())
    throw std::invalid_argument("missing integer key 'field'");
  long long field = j["field"].get<long long>();
  if (field < 2 || !is_prime(static_cast<u64>(field)))
    throw std::invalid_argument("field must be prime");
  P.p = static_cast<u32>(field);
  if (!j.contains("m") || !j["m"].is_number_integer() || j["m"].get<int>() < 1)
    throw std::invalid_argument("'m' must be a positive integer");
  P.m = j["m"].get<int>();
  if (!j.contains("bounds")) throw std::invalid_argument("missing key 'bounds'");
  P.bounds = parse_obj(j["bounds"], P.m, "bounds");
  Grid grid = Grid::make(P.bounds);

  if (j.contains("generators")) {
    if (!j["generators"].is_array()) throw std::invalid_argument("'generators' must be an array");
    int gi = 0;
    for (const auto& gj : j["generators"]) {
      std::string where = "generators[" + std::to_string(gi++) + "]";
      Obj d = parse_obj(gj, P.m, where);
      if (!grid.contains(d)) throw std::invalid_argument(where + ": object out of bounds");
      P.generators.push_back(std::move(d));
    }
  }

  if (j.contains("relations")) {
    if (!j["relations"].is_array()) throw std::invalid_argument("'relations' must be an array");
    int ri = 0;
    for (const auto& rj : j["relations"]) {
      std::string rw = "relations[" + std::to_string(ri++) + "]";
      if (!rj.is_object() || !rj.contains("object") || !rj.contains("terms"))
        throw std::invalid_argument(rw + ": expected keys 'object' and 'terms'");
      FreeElement rel;
      rel.object = parse_obj(rj["object"], P.m, rw + ".object");
      if (!grid.contains(rel.object))
        throw std::invalid_argument(rw + ": object out of bounds");
      if (!rj["terms"].is_array()) throw std::invalid_argument(rw + ".terms must be an array");
      int ti = 0;
      for (const auto& tj : rj["terms"]) {
        std::string tw = rw + ".terms[" + std::to_string(ti++) + "]";
        if (!tj.is_object() || !tj.contains("gen") || !tj.contains("maps") ||
            !tj.contains("coeff"))
          throw std::invalid_argument(tw + ": expected keys 'gen', 'maps', 'coeff'");
        RelationTerm term;
        if (!tj["gen"].is_number_integer())
          throw std::invalid_argument(tw + ".gen must be an integer");
        term.gen = tj["gen"].get<int>();
        if (term.gen < 0 || term.gen >= static_cast<int>(P.generators.size()))
          throw std::invalid_argument(tw + ": generator index out of range");
        const Obj& d = P.generators[term.gen];
        if (!tj["maps"].is_array() || static_cast<int>(tj["maps"].size()) != P.m)
          throw std::invalid_argument(tw + ".maps must list one image array per coordinate");
        Morphism f{d, rel.object, {}};
        f.parts.resize(P.m);
        for (int c = 0; c < P.m; ++c) {
          const auto& mj = tj["maps"][c];
          if (!mj.is_array() || static_cast<int>(mj.size()) != d[c])
            throw std::invalid_argument(tw + ": wrong image-list length in coordinate " +
                                        std::to_string(c + 1));
          Injection inj{d[c], rel.object[c], {}};
          std::vector<bool> seen(rel.object[c] + 1, false);
          for (const auto& vj : mj) {
            if (!vj.is_number_integer())
              throw std::invalid_argument(tw + ": image must be an integer");
            int v = vj.get<int>();
            if (v < 1 || v > rel.object[c])
              throw std::invalid_argument(tw + ": image out of range in coordinate " +
                                          std::to_string(c + 1));
            if (seen[v])
              throw std::invalid_argument(tw + ": duplicate image in coordinate " +
                                          std::to_string(c + 1));
            seen[v] = true;
            inj.images.push_back(v);
          }
          f.parts[c] = std::move(inj);
        }
        term.map = std::move(f);
        if (!tj["coeff"].is_number_integer())
          throw std::invalid_argument(tw + ".coeff must be an integer");
        PrimeField F(P.p);
        term.coeff = F.reduce(tj["coeff"].get<long long>());
        if (term.coeff == 0) throw std::invalid_argument(tw + ": zero coefficient");
        rel.terms.push_back(std::move(term));
      }
      P.relations.push_back(std::move(rel));
    }
  }
  check_presentation(P);
  return P;
}

Presentation load_presentation(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  ordered_json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed input: ") + e.what());
  }
  return parse_presentation(j);
}

// ---------------------------------------------------------------------------
// rendering
// ---------------------------------------------------------------------------

std::string reg_str(const std::optional<int>& reg) {
  return reg.has_value() ? std::to_string(*reg) : std::string("-inf");
}

std::string coord_set_str(const std::vector<int>& coords) {
  std::ostringstream os;
  os << '{';
  for (size_t k = 0; k < coords.size(); ++k) {
    if (k) os << ',';
    os << coords[k] + 1;
  }
  os << '}';
  return os.str();
}

ordered_json degrees_json(const DegreeReport& rep) {
  ordered_json d;
  d["gd"] = rep.gd;
  d["prd"] = rep.prd;
  d["hd"] = rep.hd;
  if (rep.reg.has_value())
    d["reg"] = *rep.reg;
  else
    d["reg"] = "-inf";
  d["boundary"] = rep.boundary_flag;
  return d;
}

struct AnalyzeData {
  Presentation P;
  PointwiseModule V;
  HomologyTable table;
  DegreeReport degrees;
  bool has_torsion_data = false;
  TorsionVector torsion;
  std::vector<int> singular;
  bool torsion_free = false;
};

AnalyzeData analyze(const Presentation& P, int smax) {
  AnalyzeData a;
  a.P = P;
  a.V = evaluate_presentation(P);
  a.table = homology_table(a.V, smax);
  a.degrees = degree_report_from(a.table);
  bool bounds_ok = true;
  for (int b : P.bounds)
    if (b < 1) bounds_ok = false;
  if (bounds_ok) {
    a.has_torsion_data = true;
    a.torsion = torsion_vector(a.V);
    a.singular = singular_indices(a.V);
    a.torsion_free = is_torsion_free(a.V);
  }
  return a;
}

void render_analyze_text(const AnalyzeData& a, std::ostream& os) {
  const Grid& g = a.V.grid;
  os << "presentation: field=" << a.P.p << " m=" << a.P.m << " bounds="
     << obj_to_string(a.P.bounds) << " generators=" << a.P.generators.size()
     << " relations=" << a.P.relations.size() << "\n";
  os << "dims:";
  for (int idx = 0; idx < g.size(); ++idx)
    os << " " << obj_to_string(g.objects[idx]) << "=" << a.V.dims[idx];
  os << "\nhomology:\n";
  for (int s = 0; s <= a.table.smax; ++s) {
    os << "  s=" << s << ":";
    bool any = false;
    for (int idx = 0; idx < g.size(); ++idx) {
      if (a.table.rows[s][idx] == 0) continue;
      os << " " << obj_to_string(g.objects[idx]) << "=" << a.table.rows[s][idx];
      any = true;
    }
    if (!any) os << " none";
    os << "\n";
  }
  os << "degrees: gd=" << a.degrees.gd << " prd=" << a.degrees.prd << " hd=[";
  for (size_t s = 0; s < a.degrees.hd.size(); ++s) {
    if (s) os << ",";
    os << a.degrees.hd[s];
  }
  os << "] reg=" << reg_str(a.degrees.reg)
     << " boundary=" << (a.degrees.boundary_flag ? "flagged" : "clear") << "\n";
  if (a.has_torsion_data) {
    os << "torsion: t=(";
    for (size_t i = 0; i < a.torsion.t.size(); ++i) {
      if (i) os << ",";
      os << a.torsion.t[i];
    }
    os << ") tsum=" << a.torsion.tsum << " singular=" << coord_set_str(a.singular)
       << " torsion_free=" << (a.torsion_free ? "yes" : "no") << "\n";
  } else {
    os << "torsion: unavailable (some bound is zero)\n";
  }
}

ordered_json render_analyze_json(const AnalyzeData& a) {
  const Grid& g = a.V.grid;
  ordered_json out;
  out["field"] = a.P.p;
  out["m"] = a.P.m;
  out["bounds"] = ordered_json(a.P.bounds);
  ordered_json objs = ordered_json::array();
  for (const Obj& n : g.objects) objs.push_back(ordered_json(n));
  out["objects"] = objs;
  out["dims"] = a.V.dims;
  ordered_json rows = ordered_json::array();
  for (int s = 0; s <= a.table.smax; ++s) rows.push_back(a.table.rows[s]);
  out["homology"] = rows;
  out["degrees"] = degrees_json(a.degrees);
  if (a.has_torsion_data) {
    ordered_json t;
    t["t"] = a.torsion.t;
    t["tsum"] = a.torsion.tsum;
    ordered_json sing = ordered_json::array();
    for (int i : a.singular) sing.push_back(i + 1);
    t["singular"] = sing;
    t["torsion_free"] = a.torsion_free;
    out["torsion"] = t;
  } else {
    out["torsion"] = nullptr;
  }
  return out;
}

void render_resolve_text(const Resolution& R, const HomologyTable& table, std::ostream& os) {
  const Grid& g = R.grid;
  os << "resolution: levels=" << R.levels.size() << "\n";
  for (size_t s = 0; s < R.levels.size(); ++s) {
    os << "  step " << s << ": generators";
    std::map<Obj, int> counts;
    for (const Obj& d : R.levels[s].P.degrees) counts[d] += 1;
    if (counts.empty()) os << " none";
    for (const auto& [d, c] : counts) os << " " << obj_to_string(d) << "x" << c;
    os << "\n";
  }
  os << "homology:\n";
  for (int s = 0; s <= table.smax; ++s) {
    os << "  s=" << s << ":";
    bool any = false;
    for (int idx = 0; idx < g.size(); ++idx) {
      if (table.rows[s][idx] == 0) continue;
      os << " " << obj_to_string(g.objects[idx]) << "=" << table.rows[s][idx];
      any = true;
    }
    if (!any) os << " none";
    os << "\n";
  }
  EulerReport eu = euler_check(R);
  os << "euler: " << (eu.ok ? "OK" : "MISMATCH") << "\n";
  DegreeReport rep = degree_report_from(table);
  os << "degrees: gd=" << rep.gd << " prd=" << rep.prd << " reg=" << reg_str(rep.reg)
     << " boundary=" << (rep.boundary_flag ? "flagged" : "clear") << "\n";
}

ordered_json render_resolve_json(const PointwiseModule& V, const Resolution& R,
                                 const HomologyTable& table) {
  ordered_json out;
  ordered_json steps = ordered_json::array();
  for (size_t s = 0; s < R.levels.size(); ++s) {
    ordered_json step;
    ordered_json degs = ordered_json::array();
    for (const Obj& d : R.levels[s].P.degrees) degs.push_back(ordered_json(d));
    step["generators"] = degs;
    step["fibers"] = R.levels[s].P.dims;
    steps.push_back(step);
  }
  out["steps"] = steps;
  ordered_json rows = ordered_json::array();
  for (int s = 0; s <= table.smax; ++s) rows.push_back(table.rows[s]);
  out["homology"] = rows;
  out["euler_ok"] = euler_check(R).ok;
  out["degrees"] = degrees_json(degree_report_from(table));
  out["dims"] = V.dims;
  return out;
}

void walk_tree_text(const TreeNode& node, std::ostream& os) {
  os << "node path=";
  if (node.path.empty()) {
    os << "root";
  } else {
    for (size_t k = 0; k < node.path.size(); ++k) {
      if (k) os << '.';
      os << node.path[k] + 1;
    }
  }
  os << " level=" << node.level << " tsum=" << node.torsion.tsum
     << " singular=" << coord_set_str(node.singular) << " dim=" << node.module.total_dim()
     << " reg=" << reg_str(node.degrees.reg) << "\n";
  for (const TreeNode& ch : node.children) {
    os << "edge drop=" << node.torsion.tsum - ch.torsion.tsum << " via=" << ch.path.back() + 1
       << "\n";
    walk_tree_text(ch, os);
  }
}

ordered_json walk_tree_json(const TreeNode& node) {
  ordered_json out;
  ordered_json path = ordered_json::array();
  for (int c : node.path) path.push_back(c + 1);
  out["path"] = path;
  out["level"] = node.level;
  out["tsum"] = node.torsion.tsum;
  out["t"] = node.torsion.t;
  ordered_json sing = ordered_json::array();
  for (int i : node.singular) sing.push_back(i + 1);
  out["singular"] = sing;
  out["dim"] = node.module.total_dim();
  out["degrees"] = degrees_json(node.degrees);
  ordered_json kids = ordered_json::array();
  for (const TreeNode& ch : node.children) kids.push_back(walk_tree_json(ch));
  out["children"] = kids;
  return out;
}

const char* verdict_str(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    default: return "SKIPPED(boundary)";
  }
}

void render_verify_text(const VerifyReport& rep, std::ostream& os) {
  for (const auto& c : rep.cases) {
    os << c.label << "\n";
    for (const auto& line : c.checks)
      os << "  " << verdict_str(line.verdict) << " " << line.name
         << (line.detail.empty() ? "" : " " + line.detail) << "\n";
  }
  os << "summary: cases=" << rep.cases.size() << " pass=" << rep.pass << " fail=" << rep.fail
     << " skipped=" << rep.skip << "\n";
}

ordered_json render_verify_json(const VerifyReport& rep) {
  ordered_json out;
  ordered_json cases = ordered_json::array();
  for (const auto& c : rep.cases) {
    ordered_json cj;
    cj["label"] = c.label;
    ordered_json checks = ordered_json::array();
    for (const auto& line : c.checks) {
      ordered_json lj;
      lj["name"] = line.name;
      lj["verdict"] = verdict_str(line.verdict);
      lj["detail"] = line.detail;
      checks.push_back(lj);
    }
    cj["checks"] = checks;
    cases.push_back(cj);
  }
  out["cases"] = cases;
  out["pass"] = rep.pass;
  out["fail"] = rep.fail;
  out["skipped"] = rep.skip;
  return out;
}

void emit(const ordered_json& j, std::ostream& os) { os << j.dump(2) << "\n"; }

Obj parse_bounds_flag(const std::string& text, int m) {
  Obj bounds;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      bounds.push_back(std::stoi(part));
    } catch (const std::exception&) {
      throw std::invalid_argument("--bounds expects comma-separated integers");
    }
  }
  if (static_cast<int>(bounds.size()) != m)
    throw std::invalid_argument("--bounds must have exactly m entries");
  for (int b : bounds)
    if (b < 0) throw std::invalid_argument("bounds must be non-negative");
  return bounds;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finitely presented modules over products of injection categories"};
  app.require_subcommand(1);

  std::string file;
  int smax = 2;
  std::string format = "text";
  auto add_common = [&](CLI::App* cmd, bool with_file) {
    if (with_file) cmd->add_option("file", file, "presentation file (JSON)")->required();
    cmd->add_option("--smax", smax, "top homological index")->check(CLI::NonNegativeNumber);
    cmd->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));
  };

  CLI::App* cmd_analyze = app.add_subcommand("analyze", "dims, homology, degrees, torsion");
  add_common(cmd_analyze, true);

  CLI::App* cmd_resolve = app.add_subcommand("resolve", "free resolution and homology table");
  add_common(cmd_resolve, true);

  CLI::App* cmd_tree = app.add_subcommand("tree", "recursive quotient tree");
  add_common(cmd_tree, true);
  int level_cap = -1;
  cmd_tree->add_option("--level-cap", level_cap, "maximum tree depth (default tsum+m+2)");

  CLI::App* cmd_verify = app.add_subcommand("verify", "run the property suite");
  bool vrandom = false;
  u64 vseed = 1;
  int vcount = 10;
  int vm = 1;
  std::string vbounds;
  u32 vfield = 3;
  cmd_verify->add_flag("--random", vrandom, "verify seeded random modules");
  cmd_verify->add_option("--seed", vseed, "base seed");
  cmd_verify->add_option("--count", vcount, "number of random cases")->check(CLI::PositiveNumber);
  cmd_verify->add_option("--m", vm, "number of coordinates")->check(CLI::PositiveNumber);
  cmd_verify->add_option("--bounds", vbounds, "comma-separated grid bounds");
  cmd_verify->add_option("--field", vfield, "prime field");
  cmd_verify->add_option("file", file, "presentation file (JSON)");
  cmd_verify->add_option("--smax", smax, "top homological index")->check(CLI::NonNegativeNumber);
  cmd_verify->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (cmd_analyze->parsed()) {
      AnalyzeData a = analyze(load_presentation(file), smax);
      if (format == "json")
        emit(render_analyze_json(a), std::cout);
      else
        render_analyze_text(a, std::cout);
      return 0;
    }
    if (cmd_resolve->parsed()) {
      Presentation P = load_presentation(file);
      PointwiseModule V = evaluate_presentation(P);
      Resolution R = resolve(V, smax + 2);
      HomologyTable table = homology_table(R, h0(V), smax);
      if (format == "json")
        emit(render_resolve_json(V, R, table), std::cout);
      else
        render_resolve_text(R, table, std::cout);
      return euler_check(R).ok ? 0 : 1;
    }
    if (cmd_tree->parsed()) {
      Presentation P = load_presentation(file);
      for (int b : P.bounds)
        if (b < 1) throw std::invalid_argument("tree requires all bounds >= 1");
      PointwiseModule V = evaluate_presentation(P);
      TorsionVector tv = torsion_vector(V);
      int cap = level_cap >= 0 ? level_cap : std::max(tv.tsum + P.m + 2, 0);
      TorsionTree t = build_tree(V, cap, smax);
      if (format == "json") {
        ordered_json out;
        out["nodes"] = t.node_count;
        out["depth"] = t.depth;
        out["terminated"] = t.terminated;
        out["level_cap"] = cap;
        out["root"] = walk_tree_json(t.root);
        emit(out, std::cout);
      } else {
        std::cout << "tree: nodes=" << t.node_count << " depth=" << t.depth
                  << " terminated=" << (t.terminated ? "yes" : "no") << " level_cap=" << cap
                  << "\n";
        walk_tree_text(t.root, std::cout);
      }
      return t.terminated ? 0 : 1;
    }
    if (cmd_verify->parsed()) {
      VerifyReport rep;
      if (vrandom) {
        if (vbounds.empty()) throw std::invalid_argument("--bounds is required with --random");
        RandomVerifyConfig cfg;
        cfg.m = vm;
        cfg.bounds = parse_bounds_flag(vbounds, vm);
        cfg.p = vfield;
        cfg.count = vcount;
        cfg.seed = vseed;
        cfg.smax = smax;
        if (!is_prime(cfg.p)) throw std::invalid_argument("field must be prime");
        rep = run_verify_random(cfg);
      } else {
        if (file.empty())
          throw std::invalid_argument("verify needs --random or a presentation file");
        rep = run_verify_presentation(load_presentation(file), smax);
      }
      if (format == "json")
        emit(render_verify_json(rep), std::cout);
      else
        render_verify_text(rep, std::cout);
      return rep.fail == 0 ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
