#include "sgasket/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "sgasket/check.hpp"
#include "sgasket/code.hpp"
#include "sgasket/errors.hpp"
#include "sgasket/geodesic.hpp"
#include "sgasket/geometry.hpp"
#include "sgasket/json_io.hpp"
#include "sgasket/metric.hpp"
#include "sgasket/oracle.hpp"
#include "sgasket/svg.hpp"

namespace sgasket::cli {

namespace {

std::string decimal(const Rational& r) {
  std::ostringstream os;
  os << std::setprecision(6) << r.to_double();
  return os.str();
}

std::string decimal(double x) {
  std::ostringstream os;
  os << std::setprecision(10) << x;
  return os.str();
}

Json envelope(std::string command, const std::vector<Code>& inputs, Json result, bool exact) {
  Json out;
  out["command"] = std::move(command);
  Json codes = Json::array();
  for (const Code& c : inputs) codes.push_back(to_string(c));
  out["inputs"] = std::move(codes);
  out["result"] = std::move(result);
  out["exact"] = exact;
  return out;
}

Json distance_json(const DistanceResult& d) {
  Json r;
  r["distance"] = to_json(d.distance);
  r["split_index"] = d.split_index;
  r["sum_p"] = to_json(d.sum_p);
  r["sum_edge"] = to_json(d.sum_edge);
  r["route"] = std::string(to_string(d.route));
  return r;
}

// Shared state for all subcommands; CLI11 binds into these fields.
struct Args {
  std::string code_a;
  std::string code_b;
  bool json = false;
  std::size_t depth = 8;
  std::size_t level = 10;
  std::size_t samples = 100;
  std::uint64_t seed = 1;
  std::size_t threads = 0;
  std::string output;
};

int cmd_dist(const Args& args, std::ostream& out) {
  const Code a = parse_code(args.code_a);
  const Code b = parse_code(args.code_b);
  const DistanceResult d = distance(a, b);
  if (args.json) {
    out << envelope("dist", {a, b}, distance_json(d), true).dump() << '\n';
    return kSuccess;
  }
  out << d.distance.str() << " (≈" << decimal(d.distance) << "), k=" << d.split_index
      << ", route=" << to_string(d.route) << '\n'
      << "sum_p=" << d.sum_p.str() << " sum_edge=" << d.sum_edge.str() << '\n';
  return kSuccess;
}

int cmd_canon(const Args& args, std::ostream& out) {
  const Code c = parse_code(args.code_a);
  if (args.json) {
    Json r;
    r["canonical"] = to_string(c);
    r["junction"] = is_junction(c);
    out << envelope("canon", {c}, std::move(r), true).dump() << '\n';
  } else {
    out << to_string(c) << '\n';
  }
  return kSuccess;
}

int cmd_twin(const Args& args, std::ostream& out) {
  const Code c = parse_code(args.code_a);
  const Code t = twin(c);
  if (args.json) {
    Json r;
    r["twin"] = to_string(t);
    out << envelope("twin", {c}, std::move(r), true).dump() << '\n';
  } else {
    out << to_string(t) << '\n';
  }
  return kSuccess;
}

int cmd_coords(const Args& args, std::ostream& out) {
  const Code c = parse_code(args.code_a);
  const Barycentric bary = to_barycentric(c);
  const CartesianPoint xy = to_cartesian(bary);
  if (args.json) {
    Json r;
    r["barycentric"] = to_json(bary);
    r["cartesian"] = Json::array({xy.x, xy.y});
    out << envelope("coords", {c}, std::move(r), true).dump() << '\n';
  } else {
    out << "barycentric: (" << bary.b0.str() << ", " << bary.b1.str() << ", " << bary.b2.str() << ")\n"
        << "cartesian: (" << decimal(xy.x) << ", " << decimal(xy.y) << ")\n";
  }
  return kSuccess;
}

int cmd_geodesic(const Args& args, std::ostream& out) {
  const Code a = parse_code(args.code_a);
  const Code b = parse_code(args.code_b);
  const Geodesic g = geodesic(a, b, args.depth);
  if (args.json) {
    out << envelope("geodesic", {a, b}, Json::parse(to_json(g)), true).dump() << '\n';
  } else {
    out << to_json(g) << '\n';
  }
  return kSuccess;
}

int cmd_oracle(const Args& args, std::ostream& out) {
  const Code a = parse_code(args.code_a);
  const Code b = parse_code(args.code_b);
  const Rational approx = oracle_distance(a, b, args.level);
  const Rational exact = distance(a, b).distance;
  const Rational gap = abs(exact - approx);
  const Rational tol = oracle_tolerance(args.level);
  if (args.json) {
    Json r;
    r["level"] = args.level;
    r["oracle"] = to_json(approx);
    r["exact"] = to_json(exact);
    r["gap"] = to_json(gap);
    r["tolerance"] = to_json(tol);
    r["within_tolerance"] = gap <= tol;
    out << envelope("oracle", {a, b}, std::move(r), true).dump() << '\n';
  } else {
    out << "oracle(level " << args.level << ")=" << approx.str() << " exact=" << exact.str() << " gap=" << gap.str()
        << " (≈" << decimal(gap) << ") tolerance=" << tol.str() << (gap <= tol ? " ok" : " EXCEEDED") << '\n';
  }
  return kSuccess;
}

int cmd_check(const Args& args, std::ostream& out, std::ostream& err) {
  if (args.samples == 0) {
    err << "check: --samples must be at least 1\n";
    return kUsageError;
  }
  CheckOptions options;
  options.samples = args.samples;
  options.level = args.level;
  options.seed = args.seed;
  options.threads = args.threads;
  const CheckReport report = run_check(options);

  struct Column {
    const char* name;
    bool SampleOutcome::*flag;
  };
  const Column columns[] = {{"symmetry", &SampleOutcome::symmetric},
                            {"identity", &SampleOutcome::identity},
                            {"representation_independence", &SampleOutcome::representation_independent},
                            {"triangle_inequality", &SampleOutcome::triangle},
                            {"upper_bound", &SampleOutcome::upper_bound},
                            {"oracle_agreement", &SampleOutcome::oracle_agrees}};
  const std::size_t n = report.outcomes.size();

  if (args.json) {
    Json r;
    r["samples"] = n;
    r["level"] = args.level;
    r["seed"] = args.seed;
    for (const Column& col : columns) {
      r[col.name] = std::count_if(report.outcomes.begin(), report.outcomes.end(),
                                  [&](const SampleOutcome& s) { return s.*col.flag; });
    }
    r["passed"] = report.passed();
    Json failures = Json::array();
    for (const SampleOutcome& s : report.outcomes) {
      if (s.passed()) continue;
      Json f;
      f["index"] = s.index;
      f["a"] = to_string(s.a);
      f["b"] = to_string(s.b);
      f["c"] = to_string(s.c);
      failures.push_back(std::move(f));
    }
    r["failures"] = std::move(failures);
    out << envelope("check", {}, std::move(r), true).dump() << '\n';
  } else {
    out << "check: samples=" << n << " level=" << args.level << " seed=" << args.seed << '\n';
    for (const Column& col : columns) {
      const auto ok = std::count_if(report.outcomes.begin(), report.outcomes.end(),
                                    [&](const SampleOutcome& s) { return s.*col.flag; });
      out << "  " << col.name << ": " << ok << "/" << n << '\n';
    }
    for (const SampleOutcome& s : report.outcomes) {
      if (s.passed()) continue;
      out << "FAIL #" << s.index << " a=" << to_string(s.a) << " b=" << to_string(s.b) << " c=" << to_string(s.c)
          << " oracle_gap=" << s.oracle_gap.str() << '\n';
    }
    out << report.passed() << "/" << n << " passed\n";
  }
  return report.all_passed() ? kSuccess : kDomainFailure;
}

int cmd_plot(const Args& args, std::ostream& out, std::ostream& err) {
  const Code a = parse_code(args.code_a);
  const Code b = parse_code(args.code_b);
  const Geodesic g = geodesic(a, b, args.depth);
  const Rational exact = distance(a, b).distance;
  const std::string svg = render_svg(a, b, g, exact);

  std::ofstream file(args.output, std::ios::binary);
  if (!file || !(file << svg) || !file.flush()) {
    err << "plot: cannot write " << args.output << '\n';
    return kIoError;
  }
  if (args.json) {
    Json r;
    r["path"] = args.output;
    r["length"] = to_json(g.length);
    r["distance"] = to_json(exact);
    r["route"] = std::string(to_string(g.route));
    out << envelope("plot", {a, b}, std::move(r), true).dump() << '\n';
  } else {
    out << "wrote " << args.output << ": route=" << to_string(g.route) << " length=" << g.length.str()
        << " distance=" << exact.str() << '\n';
  }
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  Args args;
  CLI::App app{"Exact intrinsic distances on the Sierpinski gasket from code representations", "sgasket"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  auto add_json = [&args](CLI::App* cmd) { cmd->add_flag("--json", args.json, "Print a JSON envelope"); };

  CLI::App* dist = app.add_subcommand("dist", "Exact distance between two codes");
  dist->add_option("A", args.code_a, "First code, e.g. 000(2)")->required();
  dist->add_option("B", args.code_b, "Second code")->required();
  add_json(dist);

  CLI::App* canon = app.add_subcommand("canon", "Print the canonical form of a code");
  canon->add_option("CODE", args.code_a)->required();
  add_json(canon);

  CLI::App* twin_cmd = app.add_subcommand("twin", "Print the other representation of a junction point");
  twin_cmd->add_option("CODE", args.code_a)->required();
  add_json(twin_cmd);

  CLI::App* coords = app.add_subcommand("coords", "Exact barycentric and Cartesian coordinates");
  coords->add_option("CODE", args.code_a)->required();
  add_json(coords);

  CLI::App* geo = app.add_subcommand("geodesic", "Depth-truncated geodesic as JSON");
  geo->add_option("A", args.code_a)->required();
  geo->add_option("B", args.code_b)->required();
  geo->add_option("--depth", args.depth, "Truncation depth")->check(CLI::PositiveNumber);
  add_json(geo);

  CLI::App* oracle = app.add_subcommand("oracle", "Level-n graph approximation and gap to the exact distance");
  oracle->add_option("A", args.code_a)->required();
  oracle->add_option("B", args.code_b)->required();
  oracle->add_option("--level", args.level, "Graph level")->check(CLI::Range(std::size_t{1}, kMaxOracleLevel));
  add_json(oracle);

  CLI::App* check = app.add_subcommand("check", "Seeded sweep of metric properties against the graph oracle");
  check->add_option("--samples", args.samples, "Number of random pairs");
  check->add_option("--level", args.level, "Oracle graph level")->check(CLI::Range(std::size_t{1}, kMaxOracleLevel));
  check->add_option("--seed", args.seed, "Random seed");
  check->add_option("--threads", args.threads, "Worker threads (0 = hardware concurrency)");
  add_json(check);

  CLI::App* plot = app.add_subcommand("plot", "Render a geodesic over the gasket as SVG");
  plot->add_option("A", args.code_a)->required();
  plot->add_option("B", args.code_b)->required();
  plot->add_option("--depth", args.depth, "Geodesic depth")->check(CLI::PositiveNumber);
  plot->add_option("-o,--output", args.output, "Output SVG path")->required();
  add_json(plot);

  try {
    std::vector<std::string> reversed(argv.rbegin(), argv.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (dist->parsed()) return cmd_dist(args, out);
    if (canon->parsed()) return cmd_canon(args, out);
    if (twin_cmd->parsed()) return cmd_twin(args, out);
    if (coords->parsed()) return cmd_coords(args, out);
    if (geo->parsed()) return cmd_geodesic(args, out);
    if (oracle->parsed()) return cmd_oracle(args, out);
    if (check->parsed()) return cmd_check(args, out, err);
    if (plot->parsed()) return cmd_plot(args, out, err);
  } catch (const MalformedCode& e) {
    err << e.what() << '\n';
    return kUsageError;
  } catch (const DepthTooSmall& e) {
    err << e.what() << '\n';
    return kUsageError;
  } catch (const LevelTooLarge& e) {
    err << e.what() << '\n';
    return kUsageError;
  } catch (const Error& e) {
    err << e.what() << '\n';
    return kDomainFailure;
  }
  return kUsageError;
}

}  // namespace sgasket::cli
