// Command-line front end: analyze | rectangle | maxcut | generate.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "matcut/budget.hpp"
#include "matcut/discrepancy.hpp"
#include "matcut/errors.hpp"
#include "matcut/gamma2.hpp"
#include "matcut/generators.hpp"
#include "matcut/graph_structure.hpp"
#include "matcut/io.hpp"
#include "matcut/linalg.hpp"
#include "matcut/maxcut.hpp"
#include "matcut/rectangle.hpp"
#include "matcut/report.hpp"

namespace {

using namespace matcut;

struct CommonOptions {
  std::uint64_t seed = 0;
  std::string budget_name = "default";
  std::string out_path;
  bool no_timestamps = false;
};

std::string now_iso8601() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%FT%TZ", std::gmtime(&t));
  return buf;
}

void stamp_run(RunReport& report, const std::string& command, const CommonOptions& opts) {
  report.set("run", "command", command);
  report.set_int("run", "seed", static_cast<long long>(opts.seed));
  report.set("run", "budget", opts.budget_name);
  if (!opts.no_timestamps) report.set("run", "started", now_iso8601());
}

void emit(const RunReport& report, const CommonOptions& opts) {
  const std::string text = report.serialize();
  if (opts.out_path.empty()) {
    std::cout << text;
  } else {
    io::write_file_atomic(opts.out_path, text);
  }
}

void add_common(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--seed", opts.seed, "random seed (default 0)");
  cmd->add_option("--budget", opts.budget_name, "effort preset: fast|default|thorough")
      ->check(CLI::IsMember({"fast", "default", "thorough"}));
  cmd->add_option("-o,--out", opts.out_path, "write the report to this file instead of stdout");
  cmd->add_flag("--no-timestamps", opts.no_timestamps, "omit wall-clock fields (reproducible output)");
}

int run_analyze(const std::string& input, const CommonOptions& opts) {
  const Budget budget = Budget::from_name(opts.budget_name);
  const io::MatrixFile file = io::parse_matrix(io::read_file(io::resolve_input_path(input)));
  if (file.is_integer)
    throw ContractViolation("analyze expects a Boolean matrix, got kind=int");
  const BooleanMatrix& m = file.boolean;

  RunReport report;
  stamp_run(report, "analyze", opts);
  report.set("run", "input", input);
  report.set_int("matrix", "rows", m.rows());
  report.set_int("matrix", "cols", m.cols());
  report.set_int("matrix", "ones", m.ones());
  report.set_double("matrix", "density", m.density());

  if (!m.all_zero()) {
    const gamma2::Gamma2Bracket bracket = gamma2::gamma2_bracket(m, budget, opts.seed);
    report.set_double("gamma2", "lower", bracket.lower);
    report.set_double("gamma2", "upper", bracket.upper);
    report.set("gamma2", "lower-route", bracket.lower_route);
    report.set("gamma2", "upper-route", bracket.upper_route);
    report.set_double("gamma2", "normalized-trace", bracket.normalized_trace);
    report.set_int("gamma2", "rank", bracket.rank);
    report.set_double("gamma2", "witness-product", bracket.upper_witness.product_norm());
    report.set_double("gamma2", "witness-error", bracket.upper_witness.reconstruction_error);
  } else {
    report.set("gamma2", "note", "all-zero matrix, gamma2 = 0");
  }
  report.set_double("matrix", "trace-norm", linalg::trace_norm(m.to_real()));

  const graphs::DegeneracyReport deg = graphs::degeneracy_order(m);
  report.set_int("structure", "degeneracy", deg.degeneracy);
  const auto c4 = graphs::find_c4(m);
  report.set_int("structure", "c4-free", c4 ? 0 : 1);
  if (c4)
    report.set("structure", "c4-witness",
               std::to_string(c4->row1) + "," + std::to_string(c4->row2) + "x" +
                   std::to_string(c4->col1) + "," + std::to_string(c4->col2));
  emit(report, opts);
  return kExitOk;
}

int run_rectangle(const std::string& input, const std::string& color_pref,
                  const std::string& selection_path, const CommonOptions& opts) {
  const Budget budget = Budget::from_name(opts.budget_name);
  const io::MatrixFile file = io::parse_matrix(io::read_file(io::resolve_input_path(input)));

  RunReport report;
  stamp_run(report, "rectangle", opts);
  report.set("run", "input", input);

  SubmatrixSelection selection;
  int color = 0;
  bool verified = false;
  if (file.is_integer) {
    const rect::ConstantRectangle found = rect::constant_submatrix_integer(file.integer, budget);
    selection = found.selection;
    verified = true;
    report.set("rectangle", "kind", "constant");
    report.set_int("rectangle", "value", found.value);
  } else {
    const BooleanMatrix& m = file.boolean;
    rect::MonoRectangle mono;
    if (color_pref == "zeros") {
      mono.color = 0;
      mono.details = rect::find_all_zeros_rectangle(m, budget);
      mono.selection = mono.details.selection;
    } else if (color_pref == "ones") {
      mono.color = 1;
      mono.details = rect::find_allones_rectangle(m, budget);
      mono.selection = mono.details.selection;
    } else {
      mono = rect::find_mono_rectangle(m, budget);
    }
    selection = mono.selection;
    color = mono.color;
    verified = true;
    report.set("rectangle", "kind", "monochromatic");
    report.set_int("rectangle", "color", color);
    report.set_int("rectangle", "decrements", mono.details.decrements);
    report.set_int("rectangle", "from-fallback", mono.details.from_fallback ? 1 : 0);
    report.set_double("rectangle", "side-ratio",
                      static_cast<double>(selection.min_side()) /
                          static_cast<double>(std::min(m.rows(), m.cols())));
  }
  report.set_int("rectangle", "height", selection.height());
  report.set_int("rectangle", "width", selection.width());
  report.set_int("rectangle", "side", selection.min_side());
  report.set_int("rectangle", "verified", verified ? 1 : 0);
  if (!selection_path.empty()) {
    io::write_file_atomic(selection_path, io::write_selection(selection, color, verified));
    report.set("rectangle", "selection-file", selection_path);
  }
  emit(report, opts);
  return kExitOk;
}

int run_maxcut(const std::string& input, const std::string& mode, int trials, bool clique,
               const CommonOptions& opts) {
  const Budget budget = Budget::from_name(opts.budget_name);
  bool had_duplicates = false;
  const mc::Graph g = io::parse_graph(io::read_file(io::resolve_input_path(input)), &had_duplicates);
  if (had_duplicates) std::cerr << "warning: duplicate edges dropped on read\n";

  RunReport report;
  stamp_run(report, "maxcut", opts);
  report.set("run", "input", input);
  report.set_int("graph", "n", g.n);
  report.set_int("graph", "m", g.m());
  report.set_double("graph", "edwards-bound", mc::edwards_bound(g.m()));
  report.set_double("graph", "energy", mc::graph_energy(g));

  mc::CutReport cut;
  if (mode == "exact") {
    if (g.n > 24)
      throw ContractViolation("exact mode handles at most 24 vertices; use --mode local");
    cut = mc::maxcut_exact(g);
  } else if (mode == "local") {
    cut = mc::maxcut_local_search(g, budget.local_restarts, opts.seed);
  } else {  // spectral
    const std::vector<int> active = g.vertices_with_edges();
    if (active.empty()) throw ContractViolation("spectral mode needs at least one edge");
    const mc::Graph h = g.induced(active);
    const mc::RoundingEmbedding emb = mc::spectral_embedding(h);
    const int used = trials > 0 ? trials : budget.maxcut_trials;
    const mc::RoundingResult rounding = mc::hyperplane_round_surplus(emb, h, used, opts.seed);
    report.set_double("rounding", "closed-form-expectation", rounding.closed_form_expectation);
    report.set_double("rounding", "mean-cut", rounding.mean_cut);
    report.set_double("rounding", "sample-std", rounding.sample_std);
    report.set_int("rounding", "trials", used);
    cut = rounding.best;
    // Pad the partition back to the full vertex set.
    std::vector<std::uint8_t> full(static_cast<std::size_t>(g.n), 0);
    for (std::size_t i = 0; i < active.size(); ++i)
      full[static_cast<std::size_t>(active[i])] = cut.partition[i];
    cut.partition = std::move(full);
    cut.cut_size = 0;
    for (const auto& [a, b] : g.edges)
      if (cut.partition[static_cast<std::size_t>(a)] != cut.partition[static_cast<std::size_t>(b)])
        ++cut.cut_size;
    cut.surplus = static_cast<double>(cut.cut_size) - static_cast<double>(g.m()) / 2.0;
  }
  mc::verify_cut(g, cut);
  report.set("cut", "method", cut.method);
  report.set_int("cut", "size", cut.cut_size);
  report.set_double("cut", "surplus", cut.surplus);

  if (clique) {
    const mc::InverseMaxcutReport inv = mc::inverse_maxcut_clique(g, budget, opts.seed);
    report.set_int("clique", "size", static_cast<long long>(inv.clique.size()));
    std::string members;
    for (int v : inv.clique) members += (members.empty() ? "" : " ") + std::to_string(v);
    report.set("clique", "members", members);
    report.set_double("clique", "alpha-hat", inv.alpha_hat);
    report.set_double("clique", "energy", inv.energy);
    report.set_double("clique", "epsilon", inv.epsilon);
    report.set_int("clique", "epsilon-clamped", inv.epsilon_clamped ? 1 : 0);
    report.set_int("clique", "kept-side", inv.kept_side);
    report.set_int("clique", "allones-side", inv.allones_side);
    report.set_int("clique", "used-fallback", inv.used_fallback ? 1 : 0);
  }
  emit(report, opts);
  return kExitOk;
}

int run_generate(CLI::App* cmd, const CommonOptions& opts, const std::string& kind,
                 const std::vector<int>& sizes, int q, int p, int ell, int k, int rows, int cols,
                 double density, const std::string& out_path) {
  (void)cmd;
  if (out_path.empty()) throw ContractViolation("generate requires --out");

  RunReport params;
  CommonOptions sidecar_opts = opts;
  sidecar_opts.no_timestamps = true;  // sidecars must regenerate byte-identically
  stamp_run(params, "generate", sidecar_opts);
  params.set("generate", "kind", kind);

  std::string payload;
  if (kind == "point-line" || kind == "point-line-plain") {
    gen::PointLineParams pl{q, p, kind == "point-line"};
    payload = io::write_matrix(gen::gen_point_line(pl));
    params.set_int("generate", "q", q);
    params.set_int("generate", "p", p);
    params.set_int("generate", "modular", pl.modular ? 1 : 0);
  } else if (kind == "tight-example") {
    const gen::TightExample t = gen::gen_tight_example({ell, k, opts.seed});
    payload = io::write_matrix(t.matrix);
    // The characteristic-vector factors are 0/1 matrices; persist the
    // certificate next to the instance.
    io::write_file_atomic(out_path + ".left",
                          io::write_matrix(BooleanMatrix::from_real(t.factorization.left)));
    io::write_file_atomic(out_path + ".right",
                          io::write_matrix(BooleanMatrix::from_real(t.factorization.right)));
    params.set_int("generate", "ell", ell);
    params.set_int("generate", "k", k);
    params.set_int("generate", "ones", t.matrix.ones());
    params.set_double("generate", "certified-upper", t.factorization.product_norm());
    params.set("generate", "factor-files", out_path + ".left " + out_path + ".right");
  } else if (kind == "random") {
    payload = io::write_matrix(gen::gen_random_boolean(rows, cols, density, opts.seed));
    params.set_int("generate", "rows", rows);
    params.set_int("generate", "cols", cols);
    params.set_double("generate", "density", density);
  } else if (kind == "blowup") {
    if (sizes.empty()) throw ContractViolation("blowup requires --sizes");
    const gen::BlowupResult b = gen::gen_permutation_blowup(sizes, sizes, opts.seed);
    payload = io::write_matrix(b.matrix);
  } else if (kind == "complete") {
    if (sizes.size() != 1) throw ContractViolation("complete requires --sizes n");
    payload = io::write_graph(gen::gen_complete(sizes[0]));
  } else if (kind == "disjoint-cliques") {
    payload = io::write_graph(gen::gen_disjoint_cliques(sizes));
  } else if (kind == "bipartite-complete") {
    if (sizes.size() != 2) throw ContractViolation("bipartite-complete requires --sizes a b");
    payload = io::write_graph(gen::gen_bipartite_complete(sizes[0], sizes[1]));
  } else if (kind == "cycle") {
    if (sizes.size() != 1) throw ContractViolation("cycle requires --sizes n");
    payload = io::write_graph(gen::gen_cycle(sizes[0]));
  } else {
    throw ContractViolation("unknown kind '" + kind + "'");
  }
  if (!sizes.empty()) {
    std::string joined;
    for (int s : sizes) joined += (joined.empty() ? "" : " ") + std::to_string(s);
    params.set("generate", "sizes", joined);
  }

  io::write_file_atomic(out_path, payload);
  io::write_file_atomic(out_path + ".params", params.serialize());
  std::cout << "wrote " << out_path << " and " << out_path << ".params\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"matrix structure and MaxCut toolkit"};
  app.require_subcommand(1);

  CommonOptions analyze_opts, rect_opts, maxcut_opts, gen_opts;
  std::string analyze_input, rect_input, maxcut_input;
  std::string rect_color = "auto", rect_selection_out;
  std::string maxcut_mode = "exact";
  int maxcut_trials = 0;
  bool maxcut_clique = false;

  CLI::App* analyze = app.add_subcommand("analyze", "gamma2 bracket, density, degeneracy, C4 status");
  analyze->add_option("input", analyze_input, "matrix file")->required();
  add_common(analyze, analyze_opts);

  CLI::App* rectangle = app.add_subcommand("rectangle", "monochromatic/constant submatrix search");
  rectangle->add_option("input", rect_input, "matrix file")->required();
  rectangle->add_option("--color", rect_color, "auto|zeros|ones")
      ->check(CLI::IsMember({"auto", "zeros", "ones"}));
  rectangle->add_option("--selection-out", rect_selection_out, "write the selection to this file");
  add_common(rectangle, rect_opts);

  CLI::App* maxcut = app.add_subcommand("maxcut", "cut search, surplus, rounding, clique pipeline");
  maxcut->add_option("input", maxcut_input, "graph edge-list file")->required();
  maxcut->add_option("--mode", maxcut_mode, "exact|local|spectral")
      ->check(CLI::IsMember({"exact", "local", "spectral"}));
  maxcut->add_option("--trials", maxcut_trials, "rounding trials (spectral mode)");
  maxcut->add_flag("--clique", maxcut_clique, "run the inverse-MaxCut clique pipeline");
  add_common(maxcut, maxcut_opts);

  std::string gen_kind, gen_out;
  std::vector<int> gen_sizes;
  int gen_q = 2, gen_p = 3, gen_ell = 3, gen_k = 100, gen_rows = 8, gen_cols = 8;
  double gen_density = 0.5;
  CLI::App* generate = app.add_subcommand("generate", "write instance files with a params sidecar");
  generate->add_option("kind", gen_kind,
                       "point-line|point-line-plain|tight-example|random|blowup|complete|"
                       "disjoint-cliques|bipartite-complete|cycle")
      ->required();
  generate->add_option("--sizes", gen_sizes, "block/vertex sizes");
  generate->add_option("--q", gen_q, "point-line q");
  generate->add_option("--p", gen_p, "point-line p");
  generate->add_option("--ell", gen_ell, "tight-example subset size");
  generate->add_option("--k", gen_k, "tight-example ground-set size");
  generate->add_option("--rows", gen_rows, "random matrix rows");
  generate->add_option("--cols", gen_cols, "random matrix cols");
  generate->add_option("--density", gen_density, "random matrix density");
  add_common(generate, gen_opts);

  try {
    app.parse(argc, argv);
    if (analyze->parsed()) return run_analyze(analyze_input, analyze_opts);
    if (rectangle->parsed())
      return run_rectangle(rect_input, rect_color, rect_selection_out, rect_opts);
    if (maxcut->parsed())
      return run_maxcut(maxcut_input, maxcut_mode, maxcut_trials, maxcut_clique, maxcut_opts);
    if (generate->parsed())
      return run_generate(generate, gen_opts, gen_kind, gen_sizes, gen_q, gen_p, gen_ell, gen_k,
                          gen_rows, gen_cols, gen_density, gen_opts.out_path);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const matcut::PartialResult& e) {
    std::cerr << "error " << matcut::kExitPartial << ": " << e.what() << "\n";
    return matcut::kExitPartial;
  } catch (const std::exception& e) {
    const int code = matcut::exit_code_for(e);
    std::cerr << "error " << code << ": " << e.what() << "\n";
    return code;
  }
  return matcut::kExitUsage;
}
