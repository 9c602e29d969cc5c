#include "hitlab/generators.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "hitlab/error.hpp"
#include "hitlab/random.hpp"

namespace hitlab {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw Error(ErrorCode::InvalidParams, message);
}

std::size_t size_param(const FamilySpec& spec, std::size_t index, std::string_view family) {
  require(spec.sizes.size() > index,
          std::string(family) + " needs " + std::to_string(index + 1) + " size parameter(s)");
  return spec.sizes[index];
}

std::uint64_t seed_param(const FamilySpec& spec, std::string_view family) {
  require(spec.seed.has_value(), std::string(family) + " requires a seed");
  return *spec.seed;
}

struct FamilyName {
  Family family;
  std::string_view name;
};

constexpr FamilyName kFamilyNames[] = {
    {Family::Path, "path"},
    {Family::Cycle, "cycle"},
    {Family::Complete, "complete"},
    {Family::Star, "star"},
    {Family::Lollipop, "lollipop"},
    {Family::RandomTree, "random_tree"},
    {Family::RandomConnected, "random"},
    {Family::RandomUnicyclic, "random_unicyclic"},
};

}  // namespace

std::string_view to_string(Family family) {
  for (const auto& entry : kFamilyNames) {
    if (entry.family == family) return entry.name;
  }
  return "unknown";
}

Graph path_graph(std::size_t n) {
  require(n >= 1, "path needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return from_edge_list(edges, n);
}

Graph cycle_graph(std::size_t n) {
  require(n >= 3, "cycle needs n >= 3");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return from_edge_list(edges, n);
}

Graph complete_graph(std::size_t n) {
  require(n >= 1, "complete needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return from_edge_list(edges, n);
}

Graph star_graph(std::size_t n) {
  require(n >= 1, "star needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(0, v);
  return from_edge_list(edges, n);
}

Graph lollipop_graph(std::size_t m, std::size_t n) {
  require(m >= 1, "lollipop needs m >= 1");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < m; ++u) {
    for (Vertex v = u + 1; v < m; ++v) edges.emplace_back(u, v);
  }
  if (n > 0) edges.emplace_back(m - 1, m);
  for (Vertex v = m; v + 1 < m + n; ++v) edges.emplace_back(v, v + 1);
  return from_edge_list(edges, m + n);
}

Graph random_tree(std::size_t n, std::uint64_t seed) {
  require(n >= 1, "random_tree needs n >= 1");
  if (n == 1) return from_edge_list({}, 1);
  Rng rng(seed);
  std::vector<Vertex> pruefer(n - 2);
  for (auto& v : pruefer) v = static_cast<Vertex>(uniform_below(rng, n));
  std::vector<std::size_t> remaining(n, 1);
  for (Vertex v : pruefer) ++remaining[v];
  std::vector<Edge> edges;
  for (Vertex v : pruefer) {
    const auto leaf = static_cast<Vertex>(
        std::find(remaining.begin(), remaining.end(), std::size_t{1}) - remaining.begin());
    edges.emplace_back(std::min(leaf, v), std::max(leaf, v));
    remaining[leaf] = 0;
    --remaining[v];
  }
  std::vector<Vertex> last;
  for (Vertex v = 0; v < n; ++v) {
    if (remaining[v] == 1) last.push_back(v);
  }
  edges.emplace_back(last[0], last[1]);
  return from_edge_list(edges, n);
}

Graph random_connected(std::size_t n, std::uint64_t seed, double p) {
  require(p >= 0.0 && p <= 1.0, "edge probability must be in [0,1]");
  Graph tree = random_tree(n, seed);
  Rng rng(derive_seed(seed, 1));
  auto edges = tree.edges();
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!tree.adjacent(u, v) && uniform_unit(rng) < p) edges.emplace_back(u, v);
    }
  }
  return from_edge_list(edges, n);
}

Graph random_unicyclic(std::size_t n, std::uint64_t seed) {
  require(n >= 3, "random_unicyclic needs n >= 3");
  Graph tree = random_tree(n, seed);
  std::vector<Edge> chords;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!tree.adjacent(u, v)) chords.emplace_back(u, v);
    }
  }
  Rng rng(derive_seed(seed, 2));
  auto edges = tree.edges();
  edges.push_back(chords[uniform_below(rng, chords.size())]);
  return from_edge_list(edges, n);
}

NamedGraph generate_family(const FamilySpec& spec) {
  NamedGraph out;
  out.family = format_family_spec(spec);
  switch (spec.family) {
    case Family::Path: out.graph = path_graph(size_param(spec, 0, "path")); break;
    case Family::Cycle: out.graph = cycle_graph(size_param(spec, 0, "cycle")); break;
    case Family::Complete: out.graph = complete_graph(size_param(spec, 0, "complete")); break;
    case Family::Star: out.graph = star_graph(size_param(spec, 0, "star")); break;
    case Family::Lollipop: {
      const std::size_t m = size_param(spec, 0, "lollipop");
      const std::size_t n = size_param(spec, 1, "lollipop");
      out.graph = lollipop_graph(m, n);
      for (std::size_t i = 1; i <= m; ++i) out.labels.push_back("x_" + std::to_string(i));
      for (std::size_t i = 1; i <= n; ++i) out.labels.push_back("y_" + std::to_string(i));
      break;
    }
    case Family::RandomTree:
      out.graph = random_tree(size_param(spec, 0, "random_tree"), seed_param(spec, "random_tree"));
      break;
    case Family::RandomConnected:
      out.graph = random_connected(size_param(spec, 0, "random"), seed_param(spec, "random"),
                                   spec.edge_probability);
      break;
    case Family::RandomUnicyclic:
      out.graph = random_unicyclic(size_param(spec, 0, "random_unicyclic"),
                                   seed_param(spec, "random_unicyclic"));
      break;
  }
  return out;
}

namespace {

[[noreturn]] void bad_spec(std::string_view text, const std::string& why) {
  throw Error(ErrorCode::ParseError, "family spec '" + std::string(text) + "': " + why);
}

template <class T>
T parse_number(std::string_view text, std::string_view whole) {
  T value{};
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || end != text.data() + text.size()) {
    bad_spec(whole, "bad number '" + std::string(text) + "'");
  }
  return value;
}

double parse_probability(std::string_view text, std::string_view whole) {
  try {
    std::size_t used = 0;
    const std::string s(text);
    const double p = std::stod(s, &used);
    if (used != s.size()) bad_spec(whole, "bad probability '" + s + "'");
    return p;
  } catch (const std::logic_error&) {
    bad_spec(whole, "bad probability '" + std::string(text) + "'");
  }
}

}  // namespace

FamilySpec parse_family_spec(std::string_view text) {
  const auto colon = text.find(':');
  const std::string_view name = text.substr(0, colon);
  FamilySpec spec;
  bool known = false;
  for (const auto& entry : kFamilyNames) {
    if (entry.name == name) {
      spec.family = entry.family;
      known = true;
    }
  }
  if (name == "random_connected") {
    spec.family = Family::RandomConnected;
    known = true;
  }
  if (!known) bad_spec(text, "unknown family '" + std::string(name) + "'");
  if (colon == std::string_view::npos) bad_spec(text, "missing parameters");

  std::string_view rest = text.substr(colon + 1);
  std::optional<std::size_t> keyed_m;
  std::optional<std::size_t> keyed_n;
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const std::string_view item = rest.substr(0, comma);
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    if (item.empty()) bad_spec(text, "empty parameter");
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) {
      spec.sizes.push_back(parse_number<std::size_t>(item, text));
      continue;
    }
    const std::string_view key = item.substr(0, eq);
    const std::string_view value = item.substr(eq + 1);
    if (key == "n") {
      keyed_n = parse_number<std::size_t>(value, text);
    } else if (key == "m") {
      keyed_m = parse_number<std::size_t>(value, text);
    } else if (key == "seed") {
      spec.seed = parse_number<std::uint64_t>(value, text);
    } else if (key == "p") {
      spec.edge_probability = parse_probability(value, text);
    } else {
      bad_spec(text, "unknown key '" + std::string(key) + "'");
    }
  }
  if (spec.family == Family::Lollipop) {
    if (keyed_m) spec.sizes.insert(spec.sizes.begin(), *keyed_m);
    if (keyed_n) spec.sizes.push_back(*keyed_n);
  } else if (keyed_n) {
    spec.sizes.insert(spec.sizes.begin(), *keyed_n);
  }
  if (spec.sizes.empty()) bad_spec(text, "missing size");
  return spec;
}

std::string format_family_spec(const FamilySpec& spec) {
  std::ostringstream out;
  out << to_string(spec.family) << ':';
  const bool random = spec.family == Family::RandomTree || spec.family == Family::RandomConnected ||
                      spec.family == Family::RandomUnicyclic;
  if (random) {
    out << "n=" << (spec.sizes.empty() ? 0 : spec.sizes[0]);
    if (spec.seed) out << ",seed=" << *spec.seed;
    if (spec.family == Family::RandomConnected) out << ",p=" << spec.edge_probability;
  } else {
    for (std::size_t i = 0; i < spec.sizes.size(); ++i) out << (i ? "," : "") << spec.sizes[i];
  }
  return out.str();
}

}  // namespace hitlab
