// tfc: validate complexes, enumerate cells and decompositions, compute
// homology, and run the named checks.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "tfc/checks.hpp"

#ifndef TFC_CORPUS_MANIFEST
#define TFC_CORPUS_MANIFEST "corpus/manifest.json"
#endif

namespace {

using tfc::json;

struct Global {
  bool as_json = false;
  std::optional<std::size_t> budget;
  std::string out;
};

struct Output {
  std::string text;
  int code = 0;
};

void emit(const Global& g, const std::string& s) {
  if (g.out.empty()) {
    std::cout << s;
    return;
  }
  std::ofstream f(g.out);
  if (!f) throw tfc::InputError("cannot write '" + g.out + "'");
  f << s;
}

tfc::Complex load_target(const std::string& t) {
  if (t.size() > 5 && t.substr(t.size() - 5) == ".json") return tfc::read_complex(t);
  return tfc::build(tfc::parse_spec(t));
}

std::string hex(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

json run_report(const std::string& command, const std::string& input, std::uint64_t hash, tfc::Verdict v, json details,
                double ms) {
  return json{{"command", command},
              {"inputs", json::array({{{"label", input}, {"hash", hex(hash)}}})},
              {"verdict", tfc::verdict_name(v)},
              {"details", std::move(details)},
              {"timing", {{"ms", ms}}}};
}

Output cmd_validate(const Global& g, const std::string& file, bool deep) {
  auto t0 = std::chrono::steady_clock::now();
  tfc::Complex c = load_target(file);
  tfc::ValidateOptions opt;
  opt.deep = deep;
  if (g.budget) opt.max_cells = *g.budget;
  auto r = tfc::validate(c, opt);
  auto v = r.valid ? tfc::Verdict::pass : tfc::Verdict::fail;
  if (g.as_json) {
    auto j = run_report("validate", file, tfc::complex_hash(c), v, tfc::validation_to_json(r), ms_since(t0));
    return {j.dump(2) + "\n", tfc::exit_code(v)};
  }
  std::ostringstream os;
  os << file << ": " << (r.valid ? "valid" : "invalid") << "\n";
  for (const auto& d : r.dims) {
    if (!d.acyclic) {
      os << "  dimension " << d.dim << ": cycle";
      for (const auto& a : d.cycle) os << ' ' << a;
      os << "\n";
    }
    for (const auto& a : d.empty_boundary) os << "  dimension " << d.dim << ": empty boundary at " << a << "\n";
  }
  if (!r.atom_cells.ok) os << "  atom cells: " << r.atom_cells.detail << "\n";
  for (const auto& e : r.extra) os << "  " << e.name << ": " << (e.ok ? "ok" : "fail " + e.detail) << "\n";
  return {os.str(), tfc::exit_code(v)};
}

Output cmd_cells(const Global& g, const std::string& file, bool list) {
  auto t0 = std::chrono::steady_clock::now();
  tfc::Complex c = load_target(file);
  tfc::CellTable t(c, {g.budget.value_or(2'000'000), tfc::Traversal::fifo});
  std::vector<std::size_t> per_dim(static_cast<std::size_t>(std::max(c.dim() + 1, 0)), 0);
  for (const auto& x : t.cells()) ++per_dim[static_cast<std::size_t>(x.dim())];
  json details{{"total", t.size()}, {"by_dimension", per_dim}, {"compositions", t.compositions().size()}};
  if (list) {
    json cells = json::array();
    for (const auto& x : t.cells()) cells.push_back(tfc::cell_to_json(c, x));
    details["cells"] = std::move(cells);
  }
  if (g.as_json) {
    auto j = run_report("cells", file, tfc::complex_hash(c), tfc::Verdict::pass, details, ms_since(t0));
    return {j.dump(2) + "\n", 0};
  }
  std::ostringstream os;
  os << t.size() << " cells";
  for (std::size_t d = 0; d < per_dim.size(); ++d) os << (d ? " + " : ": ") << per_dim[d];
  os << "\n";
  auto upto = t.counts_up_to_dim();
  os << "up to dimension k:";
  for (auto n : upto) os << ' ' << n;
  os << "\n";
  if (list)
    for (const auto& x : t.cells()) os << "  " << tfc::cell_label(c, x) << "\n";
  return {os.str(), 0};
}

Output cmd_sd(const Global& g, const std::string& file, const std::string& cell, const std::vector<int>& restrict,
              bool with_bottom) {
  tfc::Complex c = load_target(file);
  tfc::CellTable t(c);
  tfc::DecompSpace s(t, g.budget.value_or(5'000'000));
  auto ids = tfc::select_cells(t, cell);
  std::optional<tfc::DimSet> mask;
  if (!restrict.empty()) mask = tfc::DimSet(restrict.begin(), restrict.end());
  auto sd = tfc::enumerate_sd(s, ids.front(), mask, with_bottom);
  auto j = tfc::sd_to_json(s, sd);
  if (g.as_json) return {j.dump(2) + "\n", 0};
  std::ostringstream os;
  os << sd.size() << " elements\n";
  for (std::size_t i = 0; i < sd.size(); ++i) os << "  " << i << ": " << tfc::to_string(sd.terms[i]) << "\n";
  os << "order:";
  for (const auto& e : j["order"]) os << " " << e[0] << "<" << e[1];
  os << "\n";
  return {os.str(), 0};
}

Output cmd_homology(const Global& g, const std::string& file, bool no_core) {
  auto t0 = std::chrono::steady_clock::now();
  json in = tfc::read_json_file(file);
  auto p = tfc::poset_from_json(in);
  auto h = tfc::homology(p, {!no_core, g.budget.value_or(5'000'000)});
  if (g.as_json) {
    auto j = run_report("homology", file, tfc::fnv1a(in.dump()), tfc::Verdict::pass, tfc::homology_to_json(h), ms_since(t0));
    return {j.dump(2) + "\n", 0};
  }
  return {h.describe() + "\n", 0};
}

Output cmd_check(const Global& g, const std::string& name, const std::string& target, const std::string& manifest,
                 tfc::CheckOptions opt) {
  auto t0 = std::chrono::steady_clock::now();
  if (g.budget) {
    opt.budget = *g.budget;
    opt.max_cells = *g.budget;
  }
  std::vector<tfc::Target> targets;
  if (tfc::check_uses_targets(name)) targets = tfc::resolve_targets(target, manifest);
  auto r = tfc::run_check(name, targets, opt);
  auto j = tfc::report_to_json(r, ms_since(t0));
  if (g.as_json) return {j.dump(2) + "\n", tfc::exit_code(r.verdict)};
  std::ostringstream os;
  os << "check " << r.name << ": " << tfc::verdict_name(r.verdict) << "\n";
  os << "  claim: " << r.claim << "\n";
  for (auto it = j["details"].begin(); it != j["details"].end(); ++it) {
    if (it.key() == "targets") continue;
    os << "  " << it.key() << ": " << it.value().dump() << "\n";
  }
  if (j["details"].contains("targets")) {
    std::size_t n = 0;
    for (const auto& d : j["details"]["targets"]) {
      ++n;
      if (d["verdict"] != "pass") os << "  " << d["target"].get<std::string>() << ": " << d.dump() << "\n";
    }
    os << "  targets: " << n << "\n";
  }
  return {os.str(), tfc::exit_code(r.verdict)};
}

Output cmd_gen(const std::string& kind, const std::string& param, bool boundary, const tfc::CorpusParams& cp) {
  if (kind == "corpus") return {tfc::manifest_to_json(tfc::default_corpus(cp)).dump(2) + "\n", 0};
  tfc::GeneratorSpec s = tfc::parse_spec(kind + ":" + param);
  s.boundary = boundary;
  return {tfc::complex_to_json(tfc::build(s)).dump(2) + "\n", 0};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Torsion-free complexes: cells, decompositions and their topology"};
  app.require_subcommand(1);
  app.fallthrough();
  Global g;
  app.add_flag("--json", g.as_json, "Machine-readable output");
  app.add_option("--budget", g.budget, "Cap on enumerated cells / decomposition nodes");
  app.add_option("-o,--output", g.out, "Write output to a file");

  std::string file;
  bool deep = false;
  auto* validate = app.add_subcommand("validate", "Check the axioms of a complex");
  validate->add_option("complex", file, "Complex JSON or generator spec")->required();
  validate->add_flag("--deep", deep, "Also check hypercancellativity and Theta-regularity");

  bool list = false;
  auto* cells = app.add_subcommand("cells", "Enumerate the cells of the free category");
  cells->add_option("complex", file, "Complex JSON or generator spec")->required();
  cells->add_flag("--list", list, "List every cell");

  std::string cell = "big";
  std::vector<int> restrict;
  bool with_bottom = false;
  auto* sd = app.add_subcommand("sd", "Poset of decompositions of a cell");
  sd->add_option("complex", file, "Complex JSON or generator spec")->required();
  sd->add_option("--cell", cell, "Cell as JSON, or 'big'");
  sd->add_option("--levels", restrict, "Levels allowed to split (default: all)")->delimiter(',');
  sd->add_flag("--with-bottom", with_bottom, "Keep the trivial decomposition");

  bool no_core = false;
  auto* hom = app.add_subcommand("homology", "Reduced integral homology of a poset");
  hom->add_option("poset", file, "Poset JSON")->required();
  hom->add_flag("--no-core", no_core, "Skip beat-point reduction");

  std::string name, target = "corpus", manifest = TFC_CORPUS_MANIFEST;
  tfc::CheckOptions copt;
  std::optional<std::string> check_cell;
  std::optional<int> d;
  auto* check = app.add_subcommand("check", "Run a named check");
  check->add_option("name", name, "Check name")->required()->check(CLI::IsMember(tfc::check_names()));
  check->add_option("target,--target", target, "Target: corpus, complex JSON, manifest JSON or generator spec");
  check->add_option("--manifest", manifest, "Corpus manifest");
  check->add_option("--cell", check_cell, "Restrict to one cell (JSON or 'big')");
  check->add_option("--d", d, "Sphere dimension parameter");
  check->add_option("--max-carrier", copt.max_carrier, "Largest preorder carrier");
  check->add_option("--shape-budget", copt.shape_budget, "Largest point shape, in atoms");

  std::string kind, param;
  bool boundary = false;
  tfc::CorpusParams cp;
  auto* gen = app.add_subcommand("gen", "Emit a generated complex, or the corpus manifest");
  gen->add_option("kind", kind, "globe, theta, oriental, cube or corpus")
      ->required()
      ->check(CLI::IsMember({"globe", "theta", "oriental", "cube", "corpus"}));
  gen->add_option("param", param, "Dimension, or a term such as [[],[]]");
  gen->add_flag("--boundary", boundary, "Drop the top-dimensional atoms");
  gen->add_option("--theta-atoms", cp.theta_atoms, "Corpus: largest term, in atoms");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    Output o;
    if (*validate) o = cmd_validate(g, file, deep);
    else if (*cells) o = cmd_cells(g, file, list);
    else if (*sd) o = cmd_sd(g, file, cell, restrict, with_bottom);
    else if (*hom) o = cmd_homology(g, file, no_core);
    else if (*check) {
      copt.cell = check_cell;
      copt.d = d;
      o = cmd_check(g, name, target, manifest, copt);
    } else if (*gen) {
      if (kind != "corpus" && param.empty()) throw tfc::InputError("gen " + kind + " needs a parameter");
      o = cmd_gen(kind, param, boundary, cp);
    }
    emit(g, o.text);
    return o.code;
  } catch (const tfc::BudgetError& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
