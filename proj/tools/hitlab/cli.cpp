#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hitlab/analysis.hpp"
#include "hitlab/edge_list.hpp"
#include "hitlab/error.hpp"
#include "hitlab/generators.hpp"
#include "hitlab/invariants.hpp"
#include "hitlab/linalg.hpp"
#include "hitlab/unicycle.hpp"

namespace hitlab::cli {

using Json = nlohmann::ordered_json;

namespace {

struct CommandName {
  Command command;
  std::string_view name;
  std::string_view help;
};

constexpr CommandName kCommands[] = {
    {Command::Hit, "hit", "hitting time of one pair by the chosen methods"},
    {Command::AllPairs, "all-pairs", "hitting-time matrix over all ordered pairs"},
    {Command::Tau, "tau", "number of spanning trees"},
    {Command::Resist, "resist", "exact effective resistance"},
    {Command::Commute, "commute", "exact commute time"},
    {Command::Invariants, "invariants", "R and Z invariants by every route"},
    {Command::Verify, "verify", "full differential verification sweep"},
    {Command::Mc, "mc", "Monte Carlo estimate of one hitting time"},
    {Command::Bounds, "bounds", "hitting-time upper bounds with slack"},
};

}  // namespace

std::string_view to_string(Command command) {
  for (const auto& c : kCommands) {
    if (c.command == command) return c.name;
  }
  return "unknown";
}

InputGraph parse_graph_input(std::string_view source) {
  InputGraph in;
  if (source.find('\n') != std::string_view::npos) {
    in.graph = parse_edge_list(source);
    return in;
  }
  const auto colon = source.find(':');
  if (colon != std::string_view::npos) {
    const FamilySpec spec = parse_family_spec(source);
    NamedGraph named = generate_family(spec);
    in.graph = std::move(named.graph);
    in.family = std::move(named.family);
    in.labels = std::move(named.labels);
    return in;
  }
  std::ifstream file{std::string(source)};
  if (!file) throw Error(ErrorCode::ParseError, "cannot open '" + std::string(source) + "'");
  in.graph = read_edge_list(file);
  return in;
}

void validate(const RunConfig& config) {
  if (config.input_path.has_value() == config.family.has_value()) {
    throw Error(ErrorCode::InvalidParams, "give exactly one of --input and --family");
  }
  const bool needs_pair = config.command == Command::Hit || config.command == Command::Mc;
  if (needs_pair && (!config.x || !config.y)) {
    throw Error(ErrorCode::InvalidParams, std::string(to_string(config.command)) + " needs --x and --y");
  }
  if (config.x.has_value() != config.y.has_value()) {
    throw Error(ErrorCode::InvalidParams, "--x and --y go together");
  }
  if (config.command == Command::Hit && config.methods.empty()) {
    throw Error(ErrorCode::InvalidParams, "hit needs a nonempty --methods list");
  }
  if (config.walks == 0) throw Error(ErrorCode::InvalidParams, "--walks must be >= 1");
}

namespace {

std::string format_float(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.15g", value);
  return buffer;
}

Json float_json(double value) { return std::strtod(format_float(value).c_str(), nullptr); }

// One line of output: JSON object, CSV row, or text line.
struct Row {
  std::optional<Vertex> x;
  std::optional<Vertex> y;
  std::string method;
  std::string kind;
  std::string text;
  Json value;
  Json extra = Json::object();
  Json bounds = Json::array();
};

struct Check {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct Report {
  Json graph;
  std::vector<Row> rows;
  std::vector<Check> checks;
  bool exact_ok = true;
  bool monte_carlo_ok = true;
  double float_max_rel_err = 0.0;
  bool has_checks = false;
};

Row exact_row(Vertex x, Vertex y, std::string method, const BigRational& value) {
  Row row{x, y, std::move(method), "exact", to_fraction_string(value), to_fraction_string(value)};
  return row;
}

Row float_row(Vertex x, Vertex y, std::string method, double value) {
  return Row{x, y, std::move(method), "float", format_float(value), float_json(value)};
}

Row count_row(std::optional<Vertex> x, std::optional<Vertex> y, std::string method, const BigInt& value) {
  return Row{x, y, std::move(method), "exact", value.get_str(), value.get_str()};
}

Row mc_row(Vertex x, Vertex y, const MonteCarloResult& mc, std::uint64_t seed) {
  Row row{x, y, "mc", "mc", format_float(mc.mean), float_json(mc.mean)};
  row.extra["stderr"] = float_json(mc.standard_error);
  row.extra["walks"] = mc.walks;
  row.extra["seed"] = seed;
  row.extra["rng"] = std::string(mc.rng);
  return row;
}

Json bounds_json(const BoundReport& report) {
  Json out = Json::array();
  for (const auto& c : report.checks) {
    Json b = {{"name", c.name}, {"applicable", c.applicable}};
    if (c.applicable) {
      b["bound"] = to_fraction_string(c.bound);
      b["slack"] = to_fraction_string(c.slack);
    }
    b["satisfied"] = c.satisfied;
    out.push_back(std::move(b));
  }
  return out;
}

void add_hit_report(Report& report, const HitReport& hit, std::uint64_t seed) {
  for (const auto& [method, value] : hit.exact) {
    report.rows.push_back(exact_row(hit.x, hit.y, std::string(to_string(method)), value));
  }
  for (const auto& [method, value] : hit.floating) {
    report.rows.push_back(float_row(hit.x, hit.y, std::string(to_string(method)), value));
  }
  if (hit.monte_carlo) report.rows.push_back(mc_row(hit.x, hit.y, *hit.monte_carlo, seed));
  report.exact_ok = report.exact_ok && hit.exact_agree;
  report.monte_carlo_ok = report.monte_carlo_ok && hit.monte_carlo_ok;
  report.float_max_rel_err = std::max(report.float_max_rel_err, hit.float_max_rel_err);
}

std::vector<std::pair<Vertex, Vertex>> selected_pairs(const RunConfig& config, const Graph& g,
                                                      bool ordered) {
  if (config.x) return {{*config.x, *config.y}};
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex x = 0; x < g.vertex_count(); ++x) {
    for (Vertex y = ordered ? 0 : x + 1; y < g.vertex_count(); ++y) {
      if (ordered || x != y) out.emplace_back(x, y);
    }
  }
  return out;
}

MonteCarloOptions mc_options(const RunConfig& config) {
  MonteCarloOptions options;
  options.walks = config.walks;
  options.seed = config.seed;
  return options;
}

void check(Report& report, std::string name, bool passed, std::string detail = {}) {
  report.checks.push_back(Check{std::move(name), passed, std::move(detail)});
}

std::string pair_text(Vertex x, Vertex y) {
  return "(" + std::to_string(x) + "," + std::to_string(y) + ")";
}

void run_verify(const InputGraph& in, const RunConfig& config, Report& report) {
  const Graph& g = in.graph;
  const std::size_t n = g.vertex_count();
  report.has_checks = true;
  HittingEngine engine(g, config.cap);

  ReportOptions options;
  options.methods = {HitMethod::Oracle, HitMethod::Spanning, HitMethod::Rz, HitMethod::Tetali,
                     HitMethod::Spectral, HitMethod::Green};
  std::string exact_detail;
  bool diagonal_ok = true;
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = 0; y < n; ++y) {
      const HitReport hit = make_hit_report(engine, x, y, options);
      add_hit_report(report, hit, config.seed);
      if (!hit.exact_agree && exact_detail.empty()) exact_detail = "first disagreement at " + pair_text(x, y);
      if (x == y) {
        for (const auto& [m, v] : hit.exact) diagonal_ok = diagonal_ok && v == 0;
        for (const auto& [m, v] : hit.floating) diagonal_ok = diagonal_ok && std::abs(v) <= 1e-10;
      }
    }
  }
  check(report, "exact_agreement", report.exact_ok, exact_detail);
  check(report, "float_agreement", report.float_max_rel_err <= kFloatRelTolerance,
        "max relative error " + format_float(report.float_max_rel_err));
  check(report, "zero_diagonal", diagonal_ok);

  bool bounds_ok = true;
  std::string bounds_detail;
  for (auto& row : report.rows) {
    if (row.method != "oracle") continue;
    const BoundReport bounds = verify_bounds(engine, *row.x, *row.y);
    row.bounds = bounds_json(bounds);
    if (!bounds.all_satisfied()) {
      bounds_ok = false;
      if (bounds_detail.empty()) bounds_detail = "violated at " + pair_text(*row.x, *row.y);
    }
  }
  check(report, "bounds", bounds_ok, bounds_detail);

  bool commute_ok = true;
  bool edge_commute_ok = true;
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = x + 1; y < n; ++y) {
      const BigRational kappa = engine.commute(x, y);
      commute_ok = commute_ok && engine.oracle(x, y) + engine.oracle(y, x) == kappa;
      if (g.adjacent(x, y)) edge_commute_ok = edge_commute_ok && kappa <= static_cast<long>(g.volume());
    }
  }
  check(report, "commute_identity", commute_ok);
  check(report, "commute_edge_bound", edge_commute_ok);

  bool triangle_ok = true;
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = 0; y < n; ++y) {
      for (Vertex z = 0; z < n; ++z) {
        triangle_ok = triangle_ok && engine.resistance(x, z) <= engine.resistance(x, y) + engine.resistance(y, z);
      }
    }
  }
  check(report, "resistance_triangle", triangle_ok);

  {
    InvariantEngine& inv = engine.invariants();
    const VertexMask all = inv.all();
    const BigInt vol = static_cast<long>(g.volume());
    const BigInt expected_z = vol * vol * engine.tau_graph();
    bool ok = inv.r_completion(all) == 0 && inv.r_recursive(all) == 0 && inv.z_recursive(all) == expected_z &&
              inv.z_pathsum(all) == expected_z;
    for (Vertex x = 0; x < n && ok; ++x) {
      for (Vertex y = 0; y < n && ok; ++y) {
        if (x != y) ok = check_tree_count_identity(g, x, y, config.cap).holds();
      }
    }
    check(report, "invariant_identities", ok, "R(G,d)=0, Z(G,d)=vol^2 tau, tree-count identity");
  }

  {
    bool ok = true;
    std::size_t bridges = 0;
    for (const auto& [u, v] : g.edges()) {
      if (!g.is_bridge(u, v)) continue;
      ++bridges;
      ok = ok && hit_cut_edge(g, u, v) == engine.oracle(u, v) && hit_cut_edge(g, v, u) == engine.oracle(v, u);
    }
    check(report, "cut_edge_identity", ok, std::to_string(bridges) + " bridge(s)");
  }

  if (g.edge_count() + 1 == n) {
    bool ok = true;
    for (Vertex a = 0; a < n; ++a) {
      for (Vertex b = 0; b < n; ++b) ok = ok && BigRational(hit_tree_closed(g, a, b)) == engine.oracle(a, b);
    }
    check(report, "tree_closed_form", ok);
  }
  if (g.edge_count() == n) {
    const UnicycleDescriptor u = describe_unicycle(g);
    bool ok = true;
    for (Vertex a = 0; a < n; ++a) {
      for (Vertex b = 0; b < n; ++b) ok = ok && hit_unicycle_closed(u, a, b) == engine.oracle(a, b);
    }
    check(report, "unicycle_closed_form", ok);
  }
  if (in.family) {
    const FamilySpec spec = parse_family_spec(*in.family);
    if (spec.family == Family::Lollipop && spec.sizes[0] == spec.sizes[1] && spec.sizes[0] >= 2) {
      const std::size_t big_n = spec.sizes[0];
      const BigInt closed = hit_lollipop_closed(static_cast<std::int64_t>(big_n));
      check(report, "lollipop_closed_form", BigRational(closed) == engine.oracle(0, 2 * big_n - 1),
            "N^3+N-1 = " + closed.get_str());
    }
  }

  const ReversibilityReport rev = reversibility_report(g, config.cap);
  check(report, "reversibility_criterion", rev.consistent(),
        rev.reversible ? "reversible" : "not reversible");
}

void emit(const Report& report, const InputGraph& in, OutputFormat format, std::ostream& out) {
  auto label = [&](Vertex v) -> std::optional<std::string> {
    if (v < in.labels.size()) return in.labels[v];
    return std::nullopt;
  };
  if (format == OutputFormat::Json) {
    Json doc;
    doc["graph"] = report.graph;
    Json results = Json::array();
    for (const auto& row : report.rows) {
      Json r = Json::object();
      if (row.x) {
        r["x"] = *row.x;
        if (auto l = label(*row.x)) r["x_label"] = *l;
      }
      if (row.y) {
        r["y"] = *row.y;
        if (auto l = label(*row.y)) r["y_label"] = *l;
      }
      r["method"] = row.method;
      r["value"] = row.value;
      r["kind"] = row.kind;
      for (const auto& [key, value] : row.extra.items()) r[key] = value;
      r["bounds"] = row.bounds;
      results.push_back(std::move(r));
    }
    doc["results"] = std::move(results);
    doc["agreement"] = {{"exact_ok", report.exact_ok}, {"float_max_rel_err", float_json(report.float_max_rel_err)}};
    if (report.has_checks) {
      Json checks = Json::array();
      for (const auto& c : report.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
      doc["checks"] = std::move(checks);
    }
    out << doc.dump(2) << '\n';
    return;
  }
  auto vertex_text = [](std::optional<Vertex> v) { return v ? std::to_string(*v) : std::string(); };
  if (format == OutputFormat::Csv) {
    out << "x,y,method,kind,value\n";
    for (const auto& row : report.rows) {
      out << vertex_text(row.x) << ',' << vertex_text(row.y) << ',' << row.method << ',' << row.kind << ','
          << row.text << '\n';
    }
    for (const auto& c : report.checks) out << ",,check:" << c.name << ",check," << (c.passed ? "pass" : "FAIL") << '\n';
    return;
  }
  out << "graph n=" << report.graph["n"].get<std::size_t>() << " m=" << report.graph["m"].get<std::size_t>();
  if (report.graph.contains("family")) out << " family=" << report.graph["family"].get<std::string>();
  out << '\n';
  for (const auto& row : report.rows) {
    if (row.x) {
      out << "H(" << *row.x;
      if (auto l = label(*row.x)) out << ' ' << *l;
      out << " -> " << *row.y;
      if (auto l = label(*row.y)) out << ' ' << *l;
      out << ") ";
    }
    out << row.method << " [" << row.kind << "] = " << row.text;
    if (row.extra.contains("stderr")) out << " +- " << format_float(row.extra["stderr"].get<double>());
    out << '\n';
  }
  for (const auto& c : report.checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) out << " (" << c.detail << ')';
    out << '\n';
  }
  out << "exact_ok=" << (report.exact_ok ? "true" : "false")
      << " float_max_rel_err=" << format_float(report.float_max_rel_err) << '\n';
}

int execute(const RunConfig& config, const InputGraph& in, Report& report) {
  const Graph& g = in.graph;
  if (config.x) {
    require_vertex(g, *config.x);
    require_vertex(g, *config.y);
  }
  switch (config.command) {
    case Command::Hit: {
      HittingEngine engine(g, config.cap);
      add_hit_report(report, make_hit_report(engine, *config.x, *config.y, {config.methods, mc_options(config)}),
                     config.seed);
      break;
    }
    case Command::AllPairs: {
      HittingEngine engine(g, config.cap);
      ReportOptions options{config.methods.empty() ? std::vector{HitMethod::Oracle} : config.methods,
                            mc_options(config)};
      for (const auto& [x, y] : selected_pairs(config, g, true)) {
        add_hit_report(report, make_hit_report(engine, x, y, options), config.seed);
      }
      break;
    }
    case Command::Tau:
      report.rows.push_back(count_row(std::nullopt, std::nullopt, "matrix_tree", tau(g)));
      break;
    case Command::Resist:
    case Command::Commute: {
      HittingEngine engine(g, config.cap);
      const bool resist = config.command == Command::Resist;
      for (const auto& [x, y] : selected_pairs(config, g, false)) {
        report.rows.push_back(exact_row(x, y, resist ? "resistance" : "commute",
                                        resist ? engine.resistance(x, y) : engine.commute(x, y)));
      }
      break;
    }
    case Command::Invariants: {
      const WeightedGraph wg =
          config.weights ? make_weighted(g, *config.weights) : with_degree_weights(g);
      const InvariantSummary summary = compute_invariants(wg, config.cap);
      for (const auto* group : {&summary.r, &summary.z}) {
        const char* name = group == &summary.r ? "R" : "Z";
        for (const auto& value : *group) {
          Row row = count_row(std::nullopt, std::nullopt, std::string(name) + ":" + std::string(to_string(value.method)),
                              value.value);
          row.extra["invariant"] = name;
          report.rows.push_back(std::move(row));
        }
      }
      report.exact_ok = summary.agree();
      break;
    }
    case Command::Verify:
      run_verify(in, config, report);
      break;
    case Command::Mc: {
      require_connected(g);
      const MonteCarloResult mc = hit_montecarlo(g, *config.x, *config.y, mc_options(config));
      report.rows.push_back(mc_row(*config.x, *config.y, mc, config.seed));
      break;
    }
    case Command::Bounds: {
      HittingEngine engine(g, config.cap);
      report.has_checks = true;
      bool ok = true;
      for (const auto& [x, y] : selected_pairs(config, g, true)) {
        const BoundReport bounds = verify_bounds(engine, x, y);
        Row row = exact_row(x, y, "oracle", bounds.hitting_time);
        row.bounds = bounds_json(bounds);
        report.rows.push_back(std::move(row));
        ok = ok && bounds.all_satisfied();
      }
      check(report, "bounds", ok);
      break;
    }
  }
  const bool checks_ok = std::all_of(report.checks.begin(), report.checks.end(), [](const Check& c) { return c.passed; });
  const bool float_ok = report.float_max_rel_err <= kFloatRelTolerance;
  return report.exact_ok && float_ok && checks_ok && report.monte_carlo_ok ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    validate(config);
    const InputGraph in = parse_graph_input(config.family ? *config.family : *config.input_path);
    Report report;
    report.graph = {{"n", in.graph.vertex_count()}, {"m", in.graph.edge_count()}};
    if (in.family) report.graph["family"] = *in.family;
    const int code = execute(config, in, report);
    emit(report, in, config.format, out);
    return code;
  } catch (const Error& e) {
    err << "hitlab: " << e.what() << '\n';
    return e.code() == ErrorCode::SizeCapExceeded ? kExitSizeCap : kExitInputError;
  } catch (const std::exception& e) {
    err << "hitlab: " << e.what() << '\n';
    return kExitInputError;
  }
}

namespace {

std::size_t cap_from_environment() {
  const char* raw = std::getenv("HITLAB_CAP");
  if (raw == nullptr || *raw == '\0') return kDefaultEnumerationCap;
  char* end = nullptr;
  const unsigned long long value = std::strtoull(raw, &end, 10);
  if (*end != '\0' || value == 0) {
    throw Error(ErrorCode::InvalidParams, std::string("HITLAB_CAP must be a positive integer, got '") + raw + "'");
  }
  return static_cast<std::size_t>(value);
}

std::vector<Weight> parse_weights(const std::string& text) {
  std::vector<Weight> weights;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    try {
      std::size_t used = 0;
      weights.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::InvalidParams, "bad weight '" + item + "'");
    }
  }
  return weights;
}

}  // namespace

std::optional<RunConfig> parse_command_line(int argc, const char* const* argv, std::ostream& out) {
  CLI::App app{"hitlab: exact hitting times of simple random walks on graphs"};
  app.require_subcommand(1);

  std::string input;
  std::string family;
  long long x = -1;
  long long y = -1;
  std::vector<std::string> methods;
  std::size_t cap = 0;
  std::size_t walks = 100000;
  std::uint64_t seed = 1;
  std::string format = "json";
  std::string weights;

  for (const auto& c : kCommands) {
    CLI::App* sub = app.add_subcommand(std::string(c.name), std::string(c.help));
    sub->add_option("-i,--input", input, "edge-list file");
    sub->add_option("-f,--family", family, "family spec, e.g. lollipop:5,5 or random:n=8,seed=42");
    sub->add_option("--x", x, "source vertex");
    sub->add_option("--y", y, "target vertex");
    sub->add_option("--methods", methods, "oracle,spanning,rz,tetali,spectral,green,mc")->delimiter(',');
    sub->add_option("--cap", cap, "path-enumeration vertex cap (default 14, or HITLAB_CAP)");
    sub->add_option("--walks", walks, "Monte Carlo walks");
    sub->add_option("--seed", seed, "Monte Carlo seed");
    sub->add_option("--format", format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
    if (c.command == Command::Invariants) sub->add_option("--weights", weights, "comma-separated vertex weights");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw Error(ErrorCode::InvalidParams, e.what());
  }

  RunConfig config;
  for (const auto& c : kCommands) {
    if (app.got_subcommand(std::string(c.name))) config.command = c.command;
  }
  if (!input.empty()) config.input_path = input;
  if (!family.empty()) config.family = family;
  if (x < -1 || y < -1) throw Error(ErrorCode::InvalidParams, "vertices are non-negative");
  if (x >= 0) config.x = static_cast<Vertex>(x);
  if (y >= 0) config.y = static_cast<Vertex>(y);
  for (const auto& m : methods) config.methods.push_back(parse_hit_method(m));
  config.cap = cap != 0 ? cap : cap_from_environment();
  config.walks = walks;
  config.seed = seed;
  config.format = format == "csv" ? OutputFormat::Csv : format == "text" ? OutputFormat::Text : OutputFormat::Json;
  if (!weights.empty()) config.weights = parse_weights(weights);
  return config;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::optional<RunConfig> config;
  try {
    config = parse_command_line(argc, argv, out);
  } catch (const Error& e) {
    err << "hitlab: " << e.what() << '\n';
    return kExitInputError;
  }
  if (!config) return kExitOk;
  return run(*config, out, err);
}

}  // namespace hitlab::cli
