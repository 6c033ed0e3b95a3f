#include "schroeter/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "schroeter/serialize.hpp"
#include "schroeter/svg.hpp"
#include "schroeter/verify.hpp"

namespace schroeter {

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError:
    case ErrorKind::DuplicatePoints:
    case ErrorKind::FourCollinear:
    case ErrorKind::CompleteQuadrilateral:
    case ErrorKind::NotOnCurve:
    case ErrorKind::NotAffine:
    case ErrorKind::SingularCurve:
    case ErrorKind::OverconstrainedFit:
    case ErrorKind::TooDegenerate:
    case ErrorKind::OffChartCurve:
      return kExitInput;
    case ErrorKind::InvariantViolation:
      return kExitInvariant;
    default:
      return kExitDegenerate;
  }
}

namespace {

namespace fs = std::filesystem;

struct Streams {
  std::ostream& out;
  std::ostream& err;
};

[[noreturn]] void input_error(const std::string& what) { throw GeometryError(ErrorKind::ParseError, what); }

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) input_error("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json read_json(const fs::path& path) {
  try {
    return Json::parse(read_file(path));
  } catch (const Json::parse_error& e) {
    input_error(path.string() + ": " + e.what());
  }
}

// Relative seed names that do not exist are looked up in SCHROETER_SEED_DIR,
// with or without a .json suffix. An empty name selects default.json there.
fs::path resolve_seed(const std::string& name) {
  const char* dir = std::getenv("SCHROETER_SEED_DIR");
  if (name.empty()) {
    if (!dir) input_error("no seed given and SCHROETER_SEED_DIR is not set");
    return fs::path(dir) / "default.json";
  }
  fs::path p(name);
  if (fs::exists(p) || p.is_absolute() || !dir) return p;
  for (const fs::path& c : {fs::path(dir) / p, fs::path(dir) / (name + ".json")})
    if (fs::exists(c)) return c;
  return p;
}

void write_text(const std::string& path, const std::string& text, std::ostream& fallback) {
  if (path.empty() || path == "-") {
    fallback << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) input_error("cannot write " + path);
  f << text;
}

// Seed options shared by construct, verify and plot.
struct SeedArgs {
  std::string seed;
  std::string a, b;
  std::string points;

  void add_to(CLI::App* app) {
    app->add_option("--seed", seed, "seed JSON file (looked up in SCHROETER_SEED_DIR)");
    app->add_option("--a", a, "Weierstrass coefficient a of y^2 = x^3 + a x^2 + b x");
    app->add_option("--b", b, "Weierstrass coefficient b");
    app->add_option("--points", points,
                    "inline seed: six points \"x,y;...\" taken as three pairs, or three points on the "
                    "curve given by --a/--b");
  }

  SeedFile load() const {
    if (!points.empty()) {
      std::optional<WeierstrassCurve> w;
      if (!a.empty() || !b.empty()) {
        if (a.empty() || b.empty()) input_error("--a and --b go together");
        w = WeierstrassCurve(parse_rat(a), parse_rat(b));
      }
      auto pts = parse_point_list(points);
      if (w && pts.size() == 3) return SeedFile{seed_from_curve(*w, pts[0], pts[1], pts[2]), w};
      if (pts.size() != 6) input_error("inline seed needs six points (or three with --a/--b)");
      std::optional<Cubic> curve;
      if (w) curve = w->cubic();
      return SeedFile{validate_seed(PointPair(pts[0], pts[1]), PointPair(pts[2], pts[3]),
                                    PointPair(pts[4], pts[5]), curve),
                      w};
    }
    return seed_from_json(read_json(resolve_seed(seed)));
  }
};

struct RunArgs {
  std::size_t max_points = 512;
  std::size_t max_generations = 16;
  std::optional<std::uint64_t> shuffle;

  void add_to(CLI::App* app) {
    app->add_option("--max-points", max_points, "cap on emitted points")->capture_default_str();
    app->add_option("--max-generations", max_generations, "cap on construction rounds")->capture_default_str();
    app->add_option("--shuffle-seed", shuffle, "evaluate combinations in a shuffled order")
        ->group("");
  }

  RunOptions options() const { return RunOptions{max_points, max_generations, shuffle}; }
};

int cmd_construct(const SeedArgs& sa, const RunArgs& ra, const std::string& out_path,
                  const std::string& svg_path, const std::string& format, Streams io) {
  SeedFile sf = sa.load();
  auto t0 = std::chrono::steady_clock::now();
  ConstructionState state = run(sf.seed, ra.options());
  auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

  std::string text;
  if (format == "csv") {
    text = state_to_csv(state);
  } else {
    Json j = state_to_json(state, sf.weierstrass);
    j["seed"] = seed_to_json(sf.seed, sf.weierstrass);
    text = j.dump(2) + "\n";
  }
  write_text(out_path, text, io.out);
  if (!svg_path.empty()) {
    SvgResult svg = render_svg(state);
    for (const auto& w : svg.warnings) io.err << "plot: " << w << "\n";
    write_text(svg_path, svg.svg, io.out);
  }
  io.err << "construct: " << state.point_count() << " points, " << state.pairs.size() << " pairs, "
         << (state.closed ? "closed" : "open") << ", " << state.rounds << " rounds, curve "
         << to_string(state.curve_source) << ", " << static_cast<long>(ms) << " ms\n";
  return kExitOk;
}

int cmd_seed_from_curve(const std::string& a, const std::string& b, const std::string& points,
                        const std::string& out_path, Streams io) {
  WeierstrassCurve w(parse_rat(a), parse_rat(b));
  auto pts = parse_point_list(points);
  if (pts.size() != 3) input_error("seed-from-curve needs exactly three points");
  SeedConfig seed = seed_from_curve(w, pts[0], pts[1], pts[2]);
  write_text(out_path, seed_to_json(seed, w).dump(2) + "\n", io.out);
  return kExitOk;
}

std::vector<ProjPoint> load_fit_points(const std::string& file, const std::string& inline_points) {
  if (!inline_points.empty()) return parse_point_list(inline_points);
  if (file.empty()) input_error("fit needs a points file or --points");
  Json j = read_json(file);
  if (j.is_object() && j.contains("points")) j = j.at("points");
  if (!j.is_array()) input_error("points file must hold an array of points");
  std::vector<ProjPoint> pts;
  for (const auto& p : j) pts.push_back(point_from_json(p));
  return pts;
}

int cmd_fit(const std::string& file, const std::string& inline_points, const std::string& format, Streams io) {
  auto pts = load_fit_points(file, inline_points);
  if (pts.size() != 9) input_error("fit needs exactly 9 points, got " + std::to_string(pts.size()));
  Cubic c = fit_cubic_9(pts);
  if (format == "json") {
    io.out << to_json(c).dump() << "\n";
  } else {
    io.out << c.to_string() << "\n";
  }
  return kExitOk;
}

struct Loaded {
  ConstructionState state;
  std::optional<WeierstrassCurve> w;
};

Loaded load_state(const SeedArgs& sa, const RunArgs& ra, const std::string& run_file) {
  if (!run_file.empty()) {
    Json j = read_json(run_file);
    try {
      return Loaded{state_from_json(j), weierstrass_of_state_json(j)};
    } catch (const Json::exception& e) {
      input_error(run_file + ": " + e.what());
    }
  }
  SeedFile sf = sa.load();
  return Loaded{run(sf.seed, ra.options()), sf.weierstrass};
}

int cmd_verify(const SeedArgs& sa, const RunArgs& ra, const std::string& run_file, const std::string& suite,
               const std::string& out_path, Streams io) {
  Loaded l = load_state(sa, ra, run_file);
  VerifyReport report = verify_state(l.state, l.w, suite);
  write_text(out_path, report_to_json(report).dump(2) + "\n", io.out);
  const std::vector<std::string> all = suite_names();
  for (const auto& name : all) {
    std::size_t total = 0;
    for (auto o : {Outcome::Pass, Outcome::Fail, Outcome::HypothesisFailed, Outcome::Skipped})
      total += report.count(name, o);
    if (!total) continue;
    io.err << name << ": " << report.count(name, Outcome::Pass) << " pass, "
           << report.count(name, Outcome::Fail) << " fail, " << report.count(name, Outcome::HypothesisFailed)
           << " hypothesis-failed, " << report.count(name, Outcome::Skipped) << " skipped\n";
  }
  for (const auto& r : report.records) {
    if (r.outcome != Outcome::Fail) continue;
    std::string why = r.witness.contains("error") ? r.witness["error"].get<std::string>() : "check returned false";
    io.err << "FAIL " << r.suite << " / " << r.name << ": " << why << "\n";
  }
  return report.ok() ? kExitOk : kExitInvariant;
}

int cmd_plot(const SeedArgs& sa, const RunArgs& ra, const std::string& run_file, const std::string& svg_path,
             bool tangents, Streams io) {
  Loaded l = load_state(sa, ra, run_file);
  PlotOptions po;
  po.tangents = tangents;
  SvgResult svg = render_svg(l.state, po);
  for (const auto& w : svg.warnings) io.err << "plot: " << w << "\n";
  write_text(svg_path, svg.svg, io.out);
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Schroeter point constructions on plane cubics", "schroeter"};
  app.require_subcommand(1);

  SeedArgs seed_args;
  RunArgs run_args;
  std::string out_path, svg_path, format = "json", fit_format = "text", suite = "all", run_file, fit_file;
  bool tangents = false;

  auto* construct = app.add_subcommand("construct", "run the construction from a seed");
  seed_args.add_to(construct);
  run_args.add_to(construct);
  construct->add_option("--out", out_path, "output file (default: stdout)");
  construct->add_option("--svg", svg_path, "also write an SVG plot");
  construct->add_option("--format", format, "output format")->check(CLI::IsMember({"json", "csv"}));

  auto* sfc = app.add_subcommand("seed-from-curve", "build a seed from three points on a Weierstrass curve");
  std::string a, b, points;
  sfc->add_option("--a", a, "coefficient a")->required();
  sfc->add_option("--b", b, "coefficient b")->required();
  sfc->add_option("--points", points, "three points \"x,y;x,y;x,y\"")->required();
  sfc->add_option("--out", out_path, "output file (default: stdout)");

  auto* fit = app.add_subcommand("fit", "fit the cubic through nine points");
  fit->add_option("file", fit_file, "JSON array of points");
  fit->add_option("--points", points, "inline points \"x,y;...\"");
  fit->add_option("--format", fit_format, "output format")->check(CLI::IsMember({"json", "text", "csv"}));

  auto* verify = app.add_subcommand("verify", "check theorem instances on a construction");
  seed_args.add_to(verify);
  run_args.add_to(verify);
  verify->add_option("--run", run_file, "verify a construct output file instead of running a seed");
  std::vector<std::string> suites{"all"};
  for (const auto& s : suite_names()) suites.push_back(s);
  verify->add_option("--suite", suite, "suite to run")->check(CLI::IsMember(suites));
  verify->add_option("--out", out_path, "report file (default: stdout)");

  auto* plot = app.add_subcommand("plot", "render a construction as SVG");
  seed_args.add_to(plot);
  run_args.add_to(plot);
  plot->add_option("--run", run_file, "plot a construct output file");
  plot->add_option("--svg,--out", svg_path, "SVG file (default: stdout)");
  plot->add_flag("--tangents", tangents, "draw tangent segments");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  Streams io{out, err};
  try {
    if (*construct) return cmd_construct(seed_args, run_args, out_path, svg_path, format, io);
    if (*sfc) return cmd_seed_from_curve(a, b, points, out_path, io);
    if (*fit) return cmd_fit(fit_file, points, fit_format, io);
    if (*verify) return cmd_verify(seed_args, run_args, run_file, suite, out_path, io);
    if (*plot) return cmd_plot(seed_args, run_args, run_file, svg_path, tangents, io);
  } catch (const GeometryError& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const Json::exception& e) {
    err << "error: malformed input: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace schroeter
