#include "irrwalk/cli/run.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "irrwalk/cli/report.hpp"
#include "irrwalk/errors.hpp"

namespace irrwalk {

namespace {

struct Usage : InvalidArgument {
  using InvalidArgument::InvalidArgument;
};

// Allowed vertex-argument counts per subcommand.
const std::map<std::string, std::vector<std::size_t>>& subcommands() {
  static const std::map<std::string, std::vector<std::size_t>> table = {
      {"spectra", {0}},   {"amm", {0}},       {"cospectral", {2}}, {"pgst", {2}},
      {"basis", {0, 2}},  {"symmetry", {2}},  {"classify", {2}},   {"curve", {2}},
      {"torus", {2}},     {"caustics", {2}},  {"moments", {2}},    {"sup", {2}},
  };
  return table;
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

Graph load_graph(const RunConfig& c) {
  if (c.graph_path.empty() == c.graph_text.empty()) throw Usage("exactly one of --graph and --inline is required");
  std::string text;
  GraphFormat fmt = GraphFormat::edgelist;
  if (!c.graph_text.empty()) {
    text = c.graph_text;
  } else if (c.graph_path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else {
    std::ifstream in(c.graph_path);
    if (!in) throw Usage("cannot read graph file '" + c.graph_path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
    if (ends_with(c.graph_path, ".g6")) fmt = GraphFormat::graph6;
  }
  if (c.input_format) fmt = *c.input_format;
  return parse_graph(text, fmt);
}

void check_config(const RunConfig& c, const Graph& g) {
  const auto it = subcommands().find(c.subcommand);
  if (it == subcommands().end()) throw Usage("unknown subcommand '" + c.subcommand + "'");
  bool ok = false;
  for (std::size_t n : it->second) ok = ok || n == c.vertices.size();
  if (!ok)
    throw Usage(c.subcommand + " expects " + (it->second.size() == 2 ? "0 or 2" : std::to_string(it->second[0])) +
                " vertex arguments, got " + std::to_string(c.vertices.size()));
  for (std::size_t v : c.vertices)
    if (v >= g.n()) throw Usage("vertex " + std::to_string(v) + " out of range for a graph on " + std::to_string(g.n()) + " vertices");
  if (!(c.t_max > 0)) throw Usage("--t-max must be positive");
  if (!(c.dt > 0)) throw Usage("--dt must be positive");
  if (c.grid < 2) throw Usage("--grid must be at least 2");
  if (c.resolution < 4) throw Usage("--resolution must be at least 4");
  if (c.ell < 1) throw Usage("--ell must be positive");
  if (c.max_ell < 1) throw Usage("--max-ell must be positive");
  if (c.bits < 1) throw Usage("--bits must be positive");
  if (c.format != "csv" && c.format != "svg") throw Usage("--format must be csv or svg");
}

void emit_cloud(std::ostream& out, const RunConfig& c, const PointCloud& pc, const std::vector<PointCloud>& curves = {}) {
  if (c.format == "svg") {
    if (curves.empty())
      write_svg(out, {pc});
    else
      write_svg(out, {}, curves);
  } else {
    write_csv(out, pc);
  }
}

void execute(const RunConfig& c, const Graph& g, std::ostream& out) {
  ReportOptions ro{c.bits, c.approx};
  SplittingOptions so;
  so.max_field_degree = c.max_field_degree;
  MomentOptions mo;
  mo.work_ceiling = c.work_ceiling;
  const std::size_t a = c.vertices.empty() ? 0 : c.vertices[0], b = c.vertices.size() < 2 ? 0 : c.vertices[1];
  const SpectralDecomposition sd = spectral_decomposition(g, so);
  auto json = [&](const Json& j) { out << j.dump(2) << '\n'; };
  const std::string& s = c.subcommand;
  if (s == "spectra") {
    json(spectra_report(sd, ro));
  } else if (s == "amm") {
    json(amm_report(average_mixing_matrix(sd), ro));
  } else if (s == "cospectral") {
    json(cospectral_report(strong_cospectrality(sd, a, b)));
  } else if (s == "pgst") {
    json(pgst_report(decide_pgst(sd, a, b), ro));
  } else if (s == "basis") {
    json(basis_report(c.vertices.empty() ? frequency_basis(sd) : frequency_basis(sd, a, b), ro));
  } else if (s == "symmetry") {
    json(symmetry_report(a, b, frequency_basis(sd, a, b)));
  } else if (s == "classify") {
    json(classify_report(a, b, classify_entry(sd, a, b)));
  } else if (s == "moments") {
    json(moment_report(a, b, c.ell, even_moment(sd, a, b, c.ell, mo), ro));
  } else if (s == "sup") {
    json(supremum_report(a, b, supremum_estimate(sd, a, b, c.max_ell, mo), ro));
  } else if (s == "curve") {
    emit_cloud(out, c, sample_curve(sd, a, b, c.t_max, c.dt));
  } else if (s == "torus") {
    PointCloud pc = torus_image(TorusMap::for_entry(sd, a, b), c.grid);
    pc.graph_hash = graph_hash(g);
    emit_cloud(out, c, pc);
  } else if (s == "caustics") {
    Caustics cs = trace_caustics(TorusMap::for_entry(sd, a, b), c.resolution);
    PointCloud all;
    all.source = "caustics";
    for (const auto& img : cs.images) all.points.insert(all.points.end(), img.points.begin(), img.points.end());
    emit_cloud(out, c, all, cs.images);
  }
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    const Graph g = load_graph(config);
    check_config(config, g);
    if (config.out.empty()) {
      execute(config, g, out);
    } else {
      std::ostringstream buf;
      execute(config, g, buf);
      std::ofstream file(config.out, std::ios::binary);
      if (!file) throw Error("cannot write '" + config.out + "'");
      file << buf.str();
      if (!file) throw Error("write to '" + config.out + "' failed");
    }
    return exit_ok;
  } catch (const ResourceLimit& e) {
    err << "error: resource limit: " << e.what() << '\n';
    return exit_resource;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_failure;
  }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Exact analysis of continuous-time quantum walks on graphs"};
  app.require_subcommand(1, 1);
  std::string input_format;
  const std::map<std::string, std::string> help = {
      {"spectra", "eigenvalues, multiplicities and splitting field"},
      {"amm", "exact average mixing matrix"},
      {"cospectral", "strong cospectrality of a vertex pair"},
      {"pgst", "decide pretty good state transfer between a and b"},
      {"basis", "frequency basis of all eigenvalues, or of the support of a pair"},
      {"symmetry", "rotational symmetry order of the entry curve"},
      {"classify", "Periodic / AxisConfined / Generic"},
      {"curve", "sample U(t)_ab"},
      {"torus", "image of a regular torus grid"},
      {"caustics", "critical curves of the torus map (2-torus only)"},
      {"moments", "exact even moment of |U(t)_ab|"},
      {"sup", "bracketed lower bounds on sup |U(t)_ab|"},
  };
  for (const auto& [name, counts] : subcommands()) {
    CLI::App* sub = app.add_subcommand(name, help.at(name));
    sub->add_option("vertices", cfg.vertices, "vertex indices (0-based)");
    sub->add_option("--graph", cfg.graph_path, "graph file (edge list or .g6), '-' for stdin");
    sub->add_option("--inline", cfg.graph_text, "graph given inline");
    sub->add_option("--input-format", input_format, "edgelist or graph6")->check(CLI::IsMember({"edgelist", "graph6"}));
    sub->add_option("--t-max", cfg.t_max, "curve: final time");
    sub->add_option("--dt", cfg.dt, "curve: time step");
    sub->add_option("--grid", cfg.grid, "torus: points per axis");
    sub->add_option("--resolution", cfg.resolution, "caustics: grid resolution");
    sub->add_option("--ell", cfg.ell, "moments: ell");
    sub->add_option("--max-ell", cfg.max_ell, "sup: largest ell");
    sub->add_option("--bits", cfg.bits, "width 2^-bits of emitted enclosures");
    sub->add_option("--work-ceiling", cfg.work_ceiling, "moment enumeration guard")->envname("IRRWALK_WORK_CEILING");
    sub->add_option("--max-field-degree", cfg.max_field_degree, "splitting field degree guard");
    sub->add_option("--out", cfg.out, "output file (default stdout)");
    sub->add_option("--format", cfg.format, "point clouds: csv or svg");
    sub->add_flag("--approx", cfg.approx, "add decimal approximations to exact reports");
    sub->callback([&cfg, n = name] { cfg.subcommand = n; });
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // CLI11 reports help requests as "errors" with exit code 0.
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }
  if (!input_format.empty()) cfg.input_format = parse_graph_format(input_format);
  return run(cfg, out, err);
}

}  // namespace irrwalk
