#include "cli.hpp"

#include "ricciforge/ricciforge.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

namespace ricciforge::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Input {
  WeightedCellComplex complex;
  std::vector<std::string> names;
  bool image = false;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t next = s.find(sep, pos);
    out.push_back(s.substr(pos, next - pos));
    if (next == std::string::npos) return out;
    pos = next + 1;
  }
}

template <class T>
T parse_arg(const std::string& s, const std::string& spec) {
  T x{};
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw UsageError("bad parameter '" + s + "' in " + spec);
  }
  return x;
}

// gen:NAME[:ARG...] synthetic inputs.
WeightedCellComplex generate(const std::string& spec) {
  const auto parts = split(spec.substr(4), ':');
  const std::string& name = parts[0];
  const std::size_t nargs = parts.size() - 1;
  auto arg = [&]<class T>(std::size_t i, T fallback) {
    return i < nargs ? parse_arg<T>(parts[i + 1], spec) : fallback;
  };
  auto max_args = [&](std::size_t n) {
    if (nargs > n) throw UsageError("too many parameters in " + spec);
  };
  if (name == "triangle") return max_args(0), gen::filled_triangle();
  if (name == "tetrahedron") return max_args(0), gen::tetrahedron();
  if (name == "cube") return max_args(0), gen::cube_triangulated();
  if (name == "octahedron") return max_args(0), gen::octahedron();
  if (name == "icosahedron") return max_args(0), gen::icosahedron();
  if (name == "genus2") return max_args(0), gen::genus2_surface();
  if (name == "icosphere") return max_args(1), gen::icosphere(arg(0, 2));
  if (name == "perturbed-icosphere") {
    max_args(3);
    return gen::perturb_radially(gen::icosphere(arg(0, 2)), arg(1, 0.1), arg(2, std::uint64_t{7}));
  }
  if (name == "flat-torus") return max_args(2), gen::flat_torus_triangulated(arg(0, std::size_t{8}), arg(1, std::size_t{8}));
  if (name == "torus") {
    max_args(4);
    return gen::torus_of_revolution(arg(0, 2.0), arg(1, 1.0), arg(2, std::size_t{24}), arg(3, std::size_t{12}));
  }
  if (name == "grid2d") return max_args(2), gen::square_grid(arg(0, std::size_t{4}), arg(1, std::size_t{4}));
  if (name == "grid3d") {
    max_args(3);
    return gen::cube_grid(arg(0, std::size_t{3}), arg(1, std::size_t{3}), arg(2, std::size_t{3}));
  }
  if (name == "prism") return max_args(1), gen::capped_prism(arg(0, 20.0));
  throw UsageError("unknown generator '" + name + "'");
}

Input load_input(const std::string& spec, std::optional<double> height_scale, std::ostream& err) {
  Input in;
  if (spec.rfind("gen:", 0) == 0) {
    in.complex = generate(spec);
    return in;
  }
  const std::filesystem::path path(spec);
  const std::string ext = path.extension().string();
  if (ext == ".off" || ext == ".obj") {
    std::vector<std::string> warnings;
    in.complex = io::load_mesh(path, &warnings);
    for (const auto& w : warnings) err << "warning: " << w << '\n';
  } else if (ext == ".pgm") {
    in.complex = io::load_image_grid(path, height_scale).complex;
    in.image = true;
  } else if (ext == ".tsv" || ext == ".txt" || ext == ".graph") {
    auto g = io::load_graph(path);
    in.complex = std::move(g.complex);
    in.names = std::move(g.names);
  } else {
    throw UsageError("cannot infer input format from '" + spec + "' (use .off, .obj, .pgm, .tsv or gen:NAME)");
  }
  return in;
}

void apply_weights(Input& in, const std::string& weights) {
  if (weights == "combinatorial") {
    in.complex = in.complex.with_unit_weights();
  } else if (weights == "geometric") {
    in.complex = with_geometric_weights(in.complex);
  }
}

std::string summary_line(const CurvatureField& f) {
  const auto s = summarize(f);
  std::ostringstream out;
  out << "field method=" << f.method << " entity_dim=" << f.entity_dim << " count=" << s.count
      << " min=" << io::format_double(s.min) << " mean=" << io::format_double(s.mean)
      << " max=" << io::format_double(s.max) << " sum=" << io::format_double(s.sum);
  return out.str();
}

CurvatureField compute_field(const std::string& method, const WeightedCellComplex& c, bool dualize) {
  if (method == "wald-cell") {
    if (dualize) {
      const auto d = build_dual(c);
      const DistanceFn dist = d.complex.has_embedding() ? chord_metric(d.complex) : DistanceFn{};
      CurvatureField f;
      f.method = method;
      f.entity_dim = 2;
      for (std::size_t cell = 0; cell < d.complex.num_faces(); ++cell) {
        if (d.complex.face_vertices(cell).size() < 4) continue;
        f.ids.push_back(cell);
        f.values.push_back(dist ? cell_curvature_wald(d, cell, dist) : cell_curvature_wald(d.complex, cell));
      }
      f.metadata["dual"] = "true";
      return f;
    }
    return wald_cell_field(c);
  }
  const WeightedCellComplex g = dualize ? dual_graph(c) : c;
  CurvatureField f;
  if (method == "menger") f = menger_field(g);
  else if (method == "haantjes") f = haantjes_field(g);
  else if (method == "defect") f = defect_field(g);
  else if (method == "defect-density") f = defect_density_field(g);
  else if (method == "wald-vertex") f = wald_vertex_field(g);
  else if (method == "forman") f = forman_field(g, FormanVariant::Edge);
  else if (method == "forman-general") f = forman_field(g, FormanVariant::General);
  else if (method == "forman-grid2d") f = forman_field(g, FormanVariant::Grid2d);
  else if (method == "forman-grid3d") f = forman_field(g, FormanVariant::Grid3d);
  else if (method == "forman-mesh") f = forman_field(g, FormanVariant::Mesh);
  else if (method == "forman-graph") f = forman_field(g, FormanVariant::Graph);
  else throw UsageError("unknown method '" + method + "'");
  if (dualize) f.metadata["dual"] = "true";
  return f;
}

const std::vector<std::string> kCurvatureMethods = {
    "wald-cell",     "wald-vertex",   "menger",        "haantjes",     "defect",       "defect-density",
    "forman",        "forman-general", "forman-grid2d", "forman-grid3d", "forman-mesh", "forman-graph"};

struct CurvatureArgs {
  std::string method, input, output, format, weights = "input";
  bool dualize = false;
  std::optional<double> height_scale;
};

struct FlowArgs {
  std::string method, input, output, format, integrator = "euler", guard = "shrink", backend = "defect";
  bool normalized = false;
  std::size_t steps = 100;
  std::optional<double> dt, stop_spread;
};

struct CheckArgs {
  std::string input;
  bool gauss_bonnet = false, classify = false;
  std::optional<double> bonnet_myers;
  double factor = 1.1;
  double tol = 1e-9;
  std::string output;
  std::optional<double> height_scale;
};

void write_output(const std::string& path, const std::string& format, const std::string& json,
                  const std::string& csv) {
  if (path.empty()) return;
  const bool use_csv = format.empty() ? io::report_format_for(path) == io::ReportFormat::Csv : format == "csv";
  io::write_text(path, use_csv ? csv : json);
}

int cmd_curvature(const CurvatureArgs& a, std::ostream& out, std::ostream& err) {
  Input in = load_input(a.input, a.height_scale, err);
  apply_weights(in, a.weights);
  CurvatureField f = compute_field(a.method, in.complex, a.dualize);
  f.metadata["input"] = a.input;
  f.metadata["weights"] = a.weights;
  if (in.image) f.metadata["face_weight_offset"] = "1";
  write_output(a.output, a.format, io::field_to_json(f), io::field_to_csv(f));
  out << summary_line(f) << '\n';
  return kExitOk;
}

int cmd_flow(const FlowArgs& a, std::ostream& out, std::ostream& err) {
  static const std::map<std::string, FlowMethod> methods = {{"metric", FlowMethod::Metric},
                                                            {"metric-sym", FlowMethod::MetricSymmetric},
                                                            {"forman", FlowMethod::Forman},
                                                            {"forman-graph", FlowMethod::FormanGraph}};
  static const std::map<std::string, GuardPolicy> guards = {
      {"shrink", GuardPolicy::ShrinkStep}, {"clamp", GuardPolicy::Clamp}, {"abort", GuardPolicy::Abort}};
  static const std::map<std::string, VertexBackend> backends = {{"defect", VertexBackend::Defect},
                                                                {"defect-density", VertexBackend::DefectDensity},
                                                                {"wald-star", VertexBackend::WaldStar}};
  const FlowMethod method = methods.at(a.method);
  const bool forman = method == FlowMethod::Forman || method == FlowMethod::FormanGraph;
  FlowConfig cfg = forman ? forman_defaults(a.normalized) : FlowConfig{};
  cfg.method = method;
  cfg.normalized = a.normalized;
  if (a.dt) cfg.h = *a.dt;
  cfg.max_steps = a.steps;
  cfg.integrator = a.integrator == "rk4" ? Integrator::RK4 : Integrator::Euler;
  cfg.guard = guards.at(a.guard);
  cfg.backend = backends.at(a.backend);
  cfg.stop_spread = a.stop_spread;

  const Input in = load_input(a.input, std::nullopt, err);
  const FlowTrace trace = run_flow(in.complex, cfg);
  std::optional<ConvergenceReport> conv;
  if (trace.records.size() >= 10) conv = detect_convergence(trace);
  write_output(a.output, a.format, io::trace_to_json(trace, conv ? &*conv : nullptr),
               io::trace_to_csv(trace, in.complex));

  const auto& last = trace.records.back();
  out << "flow method=" << a.method << " normalized=" << (a.normalized ? "true" : "false")
      << " steps=" << trace.records.size() - 1 << " time=" << io::format_double(last.time)
      << " status=" << to_string(trace.status) << " spread0=" << io::format_double(trace.records.front().spread)
      << " spread=" << io::format_double(last.spread) << '\n';
  if (conv) {
    out << "convergence converged=" << (conv->converged ? "true" : "false")
        << " exponential=" << (conv->exponential ? "true" : "false") << " c1=" << io::format_double(conv->c1)
        << " c2=" << io::format_double(conv->c2) << " r_squared=" << io::format_double(conv->r_squared) << '\n';
  } else {
    out << "convergence skipped (fewer than 10 records)\n";
  }
  if (!trace.message.empty()) err << "note: " << trace.message << '\n';
  return kExitOk;
}

int cmd_check(const CheckArgs& a, std::ostream& out, std::ostream& err) {
  const Input in = load_input(a.input, a.height_scale, err);
  const auto& c = in.complex;
  bool pass = true;
  GeometryReport report;
  if (a.classify) {
    std::optional<CurvatureField> field;
    if (inspect(c).closed_surface && inspect(c).all_faces_triangles) field = defect_field(c);
    report = classify_geometry(c, field ? &*field : nullptr, a.tol);
    out << "classify chi=" << report.euler_characteristic << " type=" << to_string(report.by_euler);
    if (report.by_curvature) out << " by_defect=" << to_string(*report.by_curvature);
    out << '\n';
  } else {
    report = classify_geometry(c);
  }
  if (a.gauss_bonnet) {
    report.gauss_bonnet = gauss_bonnet(c, a.tol);
    const auto& g = *report.gauss_bonnet;
    pass = pass && g.pass;
    out << "gauss-bonnet total=" << io::format_double(g.total_defect) << " expected=" << io::format_double(g.expected)
        << " residual=" << io::format_double(g.residual) << " pass=" << (g.pass ? "true" : "false") << '\n';
  }
  if (a.bonnet_myers) {
    const CurvatureField field = defect_density_field(c);
    report.bonnet_myers = bonnet_myers_check(c, field, *a.bonnet_myers, a.factor);
    const auto& b = *report.bonnet_myers;
    pass = pass && b.pass;
    out << "bonnet-myers k0=" << io::format_double(b.k0) << " min_curvature=" << io::format_double(b.min_curvature)
        << " diameter=" << io::format_double(b.diameter) << " bound=" << io::format_double(b.bound)
        << " factor=" << io::format_double(b.tolerance_factor) << " pass=" << (b.pass ? "true" : "false") << '\n';
  }
  const std::string json = io::report_to_json(report);
  if (a.output.empty()) {
    out << json;
  } else {
    io::write_text(a.output, json);
  }
  return pass ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Discrete curvature of weighted cell complexes", "ricciforge"};
  app.require_subcommand(1);

  const std::string input_help =
      "Input: .off/.obj mesh, .pgm image, .tsv edge list, or gen:NAME[:ARGS] (triangle, tetrahedron, cube, "
      "octahedron, icosahedron, icosphere:N, perturbed-icosphere:N:AMOUNT:SEED, flat-torus:NX:NY, torus:R:r:NU:NV, "
      "grid2d:NX:NY, grid3d:NX:NY:NZ, genus2, prism:LENGTH)";

  CurvatureArgs ca;
  auto* curv = app.add_subcommand("curvature", "Compute a curvature field");
  curv->add_option("--method", ca.method, "Curvature method")->required()->check(CLI::IsMember(kCurvatureMethods));
  curv->add_option("--input", ca.input, input_help)->required();
  curv->add_option("--output", ca.output, "Write the field here (.json or .csv)");
  curv->add_option("--format", ca.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  curv->add_flag("--dualize", ca.dualize, "Work on the dual (graph, or dual complex for wald-cell)");
  curv->add_option("--weights", ca.weights, "Weights: as loaded, all 1, or lengths/areas")
      ->check(CLI::IsMember({"input", "combinatorial", "geometric"}));
  curv->add_option("--height-scale", ca.height_scale, "PGM height scale (default 1/maxval)")
      ->check(CLI::NonNegativeNumber);

  FlowArgs fa;
  auto* flow = app.add_subcommand("flow", "Run a Ricci flow and detect convergence");
  flow->add_option("--method", fa.method, "Flow")->required()->check(
      CLI::IsMember({"metric", "metric-sym", "forman", "forman-graph"}));
  flow->add_flag("--normalized", fa.normalized, "Subtract the mean curvature");
  flow->add_option("--steps", fa.steps, "Number of steps")->check(CLI::Range(std::size_t{1}, std::size_t{100000000}));
  flow->add_option("--dt", fa.dt, "Step size (default 0.1 metric, 1 forman)")->check(CLI::PositiveNumber);
  flow->add_option("--integrator", fa.integrator)->check(CLI::IsMember({"euler", "rk4"}));
  flow->add_option("--guard", fa.guard)->check(CLI::IsMember({"shrink", "clamp", "abort"}));
  flow->add_option("--backend", fa.backend, "Vertex curvature of metric flows")
      ->check(CLI::IsMember({"defect", "defect-density", "wald-star"}));
  flow->add_option("--stop-spread", fa.stop_spread, "Stop once max |K - mean| <= this")
      ->check(CLI::NonNegativeNumber);
  flow->add_option("--input", fa.input, input_help)->required();
  flow->add_option("--output", fa.output, "Write the trace here (.json or .csv)");
  flow->add_option("--format", fa.format, "Output format")->check(CLI::IsMember({"json", "csv"}));

  CheckArgs ka;
  auto* check = app.add_subcommand("check", "Gauss-Bonnet, Bonnet-Myers and prototype checks");
  check->add_option("--input", ka.input, input_help)->required();
  check->add_flag("--gauss-bonnet", ka.gauss_bonnet, "Sum of angle defects against 2 pi chi");
  check->add_option("--bonnet-myers", ka.bonnet_myers, "Diameter bound for curvature >= K0")
      ->check(CLI::PositiveNumber);
  check->add_option("--diameter-factor", ka.factor, "Allowed graph-metric overshoot of the bound")
      ->check(CLI::PositiveNumber);
  check->add_flag("--classify", ka.classify, "Prototype class from chi and angle defects");
  check->add_option("--tol", ka.tol, "Tolerance")->check(CLI::NonNegativeNumber);
  check->add_option("--output", ka.output, "Write the JSON report here instead of standard output");
  check->add_option("--height-scale", ka.height_scale)->check(CLI::NonNegativeNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n";
    const CLI::App* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
    err << sub->help();
    return kExitUsage;
  }

  try {
    if (curv->parsed()) return cmd_curvature(ca, out, err);
    if (flow->parsed()) return cmd_flow(fa, out, err);
    return cmd_check(ka, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitComputation;
  }
}

}  // namespace ricciforge::cli
