// qpers: command-line front end.
//
// Exit codes: 0 success, 1 domain failure on valid input, 2 input error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qpers/errors.hpp"
#include "qpers/gmodule.hpp"
#include "qpers/io.hpp"
#include "qpers/preradical.hpp"
#include "qpers/report.hpp"
#include "qpers/simplicial.hpp"

namespace {

using namespace qpers;

struct Options {
  bool json = false;
  std::size_t path_cap = kDefaultPathCap;
  std::optional<std::int64_t> field_override;
  bool force = false;

  std::string file;
  bool extended = false;
  std::vector<std::string> sources;
  std::string expr;
  std::string at;
  int k = 0;
  std::string target;
  std::string assign_file;
  std::string out_file;

  std::size_t idx_a = 0, idx_b = 0;
  std::string grid_u, grid_v;
};

// Reads and digests a representation file, applying --field-override.
Representation load_rep(const Options& o, Report& report) {
  std::string text = read_file(o.file);
  report.set_digest(fnv1a_hex(text));
  if (!o.field_override) return parse_representation(text);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("malformed JSON: " + std::string(e.what()), e.byte);
  }
  if (doc.is_object() && doc.contains("field") && doc["field"] != *o.field_override && !o.force)
    throw Error("file declares field " + doc["field"].dump() + " but --field-override is " +
                    std::to_string(*o.field_override) + " (use --force)",
                true);
  if (doc.is_object()) doc["field"] = *o.field_override;
  return parse_representation(doc.dump());
}

GraphFiltration load_filtration(const Options& o, Report& report) {
  std::string text = read_file(o.file);
  report.set_digest(fnv1a_hex(text));
  GraphFiltration chi = parse_filtration(text);
  if (o.field_override) {
    if (chi.field.characteristic() != *o.field_override && !o.force)
      throw Error("file declares field " + std::to_string(chi.field.characteristic()) + " but --field-override is " +
                      std::to_string(*o.field_override) + " (use --force)",
                  true);
    try {
      chi.field = PrimeField(*o.field_override);
    } catch (const std::invalid_argument& e) {
      throw Error(e.what(), true);
    }
  }
  return chi;
}

// Commutative representations are flagged; others are used as they are.
Representation maybe_validated(const Representation& r) {
  if (!validate_representation(r).ok()) {
    if (!check_dag(r.quiver())) throw CycleError("representation quiver contains a directed cycle");
    return r;
  }
  return validated(r);
}

int cmd_validate(const Options& o, Report& report) {
  const Representation r = load_rep(o, report);
  report.set("vertices", r.quiver().vertex_count());
  report.set("edges", r.quiver().edges().size());
  const ValidationReport v = validate_representation(r);
  report.set("is_dag", v.is_dag);
  if (!v.is_dag) {
    report.set("valid", false);
    report.set("error", "quiver contains a directed cycle");
    return 1;
  }
  report.set("commutative", !v.violation.has_value());
  if (v.violation) {
    const auto& w = *v.violation;
    report.set("valid", false);
    report.set("witness_src", w.first.src);
    report.set("witness_dst", w.first.dst);
    report.set("witness_path_1", describe_path(r.quiver(), w.first.src, w.first.edges));
    report.set("witness_path_2", describe_path(r.quiver(), w.second.src, w.second.edges));
    return 1;
  }
  report.set("valid", true);
  return 0;
}

int cmd_persistence(const Options& o, Report& report) {
  const Representation r = validated(load_rep(o, report));
  const LimitData lim = limit(r);
  const ColimitData colim = colimit(r);
  const Subspace p = image(r.field(), induced_phi(r, lim, colim));
  report.set("lim_dim", lim.dim());
  report.set("colim_dim", colim.dim());
  report.set("persistence_dim", p.dim());
  report.set("persistence_basis", subspace_rows(p));
  int status = 0;
  if (o.extended) {
    const Subspace ext = extended_alpha_persistence(r);
    report.set_subspace("extended", ext);
    report.set("extended_agrees", ext == p);
    if (!(ext == p)) status = 1;
  }
  if (!o.sources.empty()) report.set_subspace("sources", source_subset_persistence(r, o.sources));
  return status;
}

int cmd_prerad(const Options& o, Report& report) {
  const Representation r = maybe_validated(load_rep(o, report));
  const PreradicalExpr e = parse_expr(o.expr);
  report.set("expr", e.to_string());
  report.set("at", o.at);
  report.set("commutative", r.is_commutative());
  report.set_subspace("value", eval_expr(r, e, o.at, o.path_cap));
  const AssignmentReport check = check_assignment(r, eval_assignment(r, e, o.path_cap));
  report.set("compatible", check.ok());
  if (!check.ok()) report.set("violating_edges", check.violating_edges);
  return 0;
}

int cmd_homology(const Options& o, Report& report) {
  const GraphFiltration chi = load_filtration(o, report);
  validate_filtration(chi);
  report.set("k", o.k);
  for (const auto& v : chi.quiver.vertices()) {
    const SimplicialComplex& x = chi.complexes.at(v);
    const HomologyBasis h = homology(chi.field, x, o.k);
    report.set("H" + std::to_string(o.k) + "[" + v + "]", h.dim());
    report.set("Z" + std::to_string(o.k) + "[" + v + "]", h.cycle_basis.dim());
    report.set("B" + std::to_string(o.k) + "[" + v + "]", h.boundary_basis.dim());
  }
  return 0;
}

int cmd_filtration_module(const Options& o, Report& report, bool& raw_output) {
  const Representation m = filtration_to_gmodule(load_filtration(o, report), o.k);
  const std::string doc = representation_to_json(m);
  if (o.out_file.empty()) {
    raw_output = true;
    std::cout << doc;
    return 0;
  }
  std::ofstream out(o.out_file, std::ios::binary);
  if (!(out << doc)) throw Error("cannot write '" + o.out_file + "'", true);
  report.set("written", o.out_file);
  report.set("module_digest", fnv1a_hex(doc));
  return 0;
}

int cmd_filtration_std(const Options& o, Report& report, bool group) {
  const GraphFiltration chi = load_filtration(o, report);
  const auto d = group ? persistence_group_dim(chi, o.idx_a, o.idx_b, o.k) : standard_persistence(chi, o.idx_a, o.idx_b, o.k);
  report.set("k", o.k);
  report.set(group ? "j" : "i", o.idx_a);
  report.set(group ? "t" : "p", o.idx_b);
  report.set(group ? "persistence_group_dim" : "standard_persistence", d);
  return 0;
}

int cmd_filtration_rank(const Options& o, Report& report) {
  const GraphFiltration chi = load_filtration(o, report);
  const auto d = rank_invariant(chi, o.grid_u, o.grid_v, o.k);
  report.set("k", o.k);
  report.set("u", o.grid_u);
  report.set("v", o.grid_v);
  report.set("rank_invariant", d);
  return 0;
}

int cmd_flow(const Options& o, Report& report) {
  if (o.assign_file.empty() == o.expr.empty()) throw Error("flow needs exactly one of --assign and --expr", true);
  std::string digest_input = read_file(o.file);
  std::map<std::string, FlowInput> inputs;
  const Representation r = maybe_validated(load_rep(o, report));
  if (!o.assign_file.empty()) {
    const std::string assign = read_file(o.assign_file);
    digest_input += assign;
    inputs = parse_assignment(assign, r);
  } else {
    const PreradicalExpr e = parse_expr(o.expr);
    const Quiver& q = r.quiver();
    for (std::size_t ei : q.in_edges(q.vertex_index(o.target))) inputs.emplace(q.edges()[ei].src, e);
  }
  report.set_digest(fnv1a_hex(digest_input));
  const FlowResult res = flow_receive(r, o.target, inputs, o.path_cap);
  report.set("target", o.target);
  report.set_subspace("received", res.received);
  if (res.bound) {
    report.set_subspace("bound", *res.bound);
    report.set("within_bound", *res.within_bound);
  } else {
    report.set("within_bound", "n/a");
  }
  report.set_subspace("source_info", source_info(r, o.target, o.path_cap));
  if (!res.warnings.empty()) {
    report.set("warnings", res.warnings);
    for (const auto& w : res.warnings) std::cerr << "warning: " << w << "\n";
  }
  return 0;
}

std::string echo(int argc, char** argv) {
  std::string out;
  for (int i = 1; i < argc; ++i) {
    if (i > 1) out += ' ';
    out += argv[i];
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Persistence of quiver representations over GF(p)", "qpers"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", o.json, "Print the report as JSON");
  app.add_option("--path-cap", o.path_cap, "Maximum number of enumerated paths")->check(CLI::PositiveNumber);
  app.add_option("--field-override", o.field_override, "Work over GF(p) regardless of the file");
  app.add_flag("--force", o.force, "Allow --field-override to differ from the file");

  auto* validate = app.add_subcommand("validate", "Structural and commutativity check");
  validate->add_option("file", o.file)->required();

  auto* pers = app.add_subcommand("persistence", "lim, colim and the image of lim -> colim");
  pers->add_option("file", o.file)->required();
  pers->add_flag("--extended", o.extended, "Cross-check via alpha on the extended diagram");
  pers->add_option("--sources", o.sources, "Restrict to these sources")->delimiter(',');

  auto* prerad = app.add_subcommand("prerad", "Evaluate a preradical expression");
  prerad->add_option("file", o.file)->required();
  prerad->add_option("--expr", o.expr)->required();
  prerad->add_option("--at", o.at)->required();

  auto* hom = app.add_subcommand("homology", "Homology of every complex in a filtration file");
  hom->add_option("file", o.file)->required();
  hom->add_option("--k", o.k)->check(CLI::NonNegativeNumber);

  auto* filt = app.add_subcommand("filtration", "Persistence of a graph filtration");
  filt->add_option("file", o.file)->required();
  filt->add_option("--k", o.k)->check(CLI::NonNegativeNumber);
  filt->require_subcommand(1);
  auto* f_module = filt->add_subcommand("module", "Emit the H_k representation");
  f_module->add_option("--out", o.out_file);
  auto* f_std = filt->add_subcommand("std", "Standard persistence on a chain");
  f_std->add_option("i", o.idx_a)->required();
  f_std->add_option("p", o.idx_b)->required();
  auto* f_rank = filt->add_subcommand("rank", "Rank invariant on a grid");
  f_rank->add_option("u", o.grid_u)->required();
  f_rank->add_option("v", o.grid_v)->required();
  auto* f_group = filt->add_subcommand("group", "Persistence group H_k^t(X_j)");
  f_group->add_option("j", o.idx_a)->required();
  f_group->add_option("t", o.idx_b)->required();
  for (auto* sub : {f_module, f_std, f_rank, f_group}) sub->fallthrough();

  auto* flow = app.add_subcommand("flow", "Information received at a vertex");
  flow->add_option("file", o.file)->required();
  flow->add_option("--target", o.target)->required();
  auto* assign_opt = flow->add_option("--assign", o.assign_file, "Per-source subspaces or expressions (JSON)");
  auto* expr_opt = flow->add_option("--expr", o.expr, "Expression used at every predecessor");
  assign_opt->excludes(expr_opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  Report report(echo(argc, argv));
  bool raw_output = false;
  int status = 0;
  try {
    if (*validate) status = cmd_validate(o, report);
    else if (*pers) status = cmd_persistence(o, report);
    else if (*prerad) status = cmd_prerad(o, report);
    else if (*hom) status = cmd_homology(o, report);
    else if (*f_module) status = cmd_filtration_module(o, report, raw_output);
    else if (*f_std) status = cmd_filtration_std(o, report, false);
    else if (*f_group) status = cmd_filtration_std(o, report, true);
    else if (*f_rank) status = cmd_filtration_rank(o, report);
    else if (*flow) status = cmd_flow(o, report);
  } catch (const CommutativityError& e) {
    status = 1;
    report.set("error", e.what());
    report.set("witness_path_1", e.src() + " via [" + CLI::detail::join(e.first_path(), ",") + "]");
    report.set("witness_path_2", e.src() + " via [" + CLI::detail::join(e.second_path(), ",") + "]");
  } catch (const Error& e) {
    status = e.input_error() ? 2 : 1;
    report.set("error", e.what());
  } catch (const std::invalid_argument& e) {
    status = 2;
    report.set("error", e.what());
  } catch (const std::exception& e) {
    status = 1;
    report.set("error", std::string("internal: ") + e.what());
  }
  if (raw_output && status == 0) return 0;
  report.set_exit_status(status);
  std::cout << (o.json ? report.json() : report.text());
  if (status != 0) std::cerr << "qpers: exit " << status << "\n";
  return status;
}
