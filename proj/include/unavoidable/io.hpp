#pragma once

#include <charconv>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "unavoidable/certificates.hpp"
#include "unavoidable/errors.hpp"
#include "unavoidable/generation.hpp"
#include "unavoidable/graph.hpp"
#include "unavoidable/trees.hpp"

namespace unavoidable {

// ---------------------------------------------------------------------------
// Edge-list and hosted-tree text formats
//
//   # comment
//   <vertex count>
//   <u> <v>          one edge per line, 0-based
//   tree             hosted-tree files only
//   <parent of 0>    one line per vertex, '-' for the root
//   ...

namespace detail {

struct Line {
  std::size_t number;
  std::string_view text;
};

inline std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// Nonempty lines with comments stripped.
inline std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (!line.empty()) out.push_back({number, line});
  }
  return out;
}

inline std::vector<std::string_view> tokens(std::string_view s) {
  std::vector<std::string_view> out;
  while (true) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string_view::npos) break;
    s = s.substr(b);
    const auto e = s.find_first_of(" \t");
    out.push_back(s.substr(0, e));
    if (e == std::string_view::npos) break;
    s = s.substr(e);
  }
  return out;
}

inline std::uint64_t parse_index(std::string_view tok, std::size_t line) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw parse_error(line, "expected a nonnegative integer, got '" + std::string(tok) + "'");
  return value;
}

// Parses the count and edge lines; stops at a "tree" line and returns its position.
inline std::pair<Graph, std::size_t> parse_graph_lines(const std::vector<Line>& lines) {
  if (lines.empty()) throw parse_error(0, "missing vertex count");
  auto head = tokens(lines[0].text);
  if (head.size() != 1) throw parse_error(lines[0].number, "first line must hold only the vertex count");
  const auto n = parse_index(head[0], lines[0].number);
  if (n > default_vertex_limit) throw parse_error(lines[0].number, "vertex count too large");
  Graph g(n);
  std::size_t i = 1;
  for (; i < lines.size(); ++i) {
    if (lines[i].text == "tree") break;
    auto tok = tokens(lines[i].text);
    if (tok.size() != 2) throw parse_error(lines[i].number, "expected two vertex indices");
    const auto u = parse_index(tok[0], lines[i].number);
    const auto v = parse_index(tok[1], lines[i].number);
    if (u >= n || v >= n) throw parse_error(lines[i].number, "endpoint out of range");
    if (u == v) throw parse_error(lines[i].number, "self-loop");
    g.add_edge(u, v);
  }
  return {std::move(g), i};
}

}  // namespace detail

inline Graph parse_edge_list(std::string_view text) {
  const auto lines = detail::content_lines(text);
  auto [g, stop] = detail::parse_graph_lines(lines);
  if (stop < lines.size()) throw parse_error(lines[stop].number, "unexpected tree section");
  return g;
}

inline std::string emit_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

inline HostedTree parse_hosted_tree(std::string_view text) {
  const auto lines = detail::content_lines(text);
  auto [g, stop] = detail::parse_graph_lines(lines);
  if (stop == lines.size()) throw parse_error(lines.empty() ? 0 : lines.back().number, "missing tree section");
  const std::size_t n = g.vertex_count();
  if (lines.size() - stop - 1 != n)
    throw parse_error(lines[stop].number, "tree section must list one parent per vertex (" +
                                              std::to_string(n) + ")");
  std::vector<std::optional<vertex_t>> parent(n);
  for (std::size_t v = 0; v < n; ++v) {
    const auto& line = lines[stop + 1 + v];
    if (line.text == "-") continue;
    const auto p = detail::parse_index(line.text, line.number);
    if (p >= n) throw parse_error(line.number, "parent out of range");
    parent[v] = p;
  }
  try {
    return HostedTree(std::move(g), RootedTree::from_parents(std::move(parent)));
  } catch (const std::invalid_argument& e) {
    throw parse_error(lines[stop].number, e.what());
  }
}

inline std::string emit_hosted_tree(const HostedTree& ht) {
  std::string out = emit_edge_list(ht.host());
  out += "tree\n";
  for (const auto& p : ht.tree().parents()) out += p ? std::to_string(*p) + "\n" : "-\n";
  return out;
}

/// Accepts either format and returns the graph (the tree section is ignored).
inline Graph parse_any_graph(std::string_view text) {
  const auto lines = detail::content_lines(text);
  return detail::parse_graph_lines(lines).first;
}

// ---------------------------------------------------------------------------
// Certificate documents

using ordered_json = nlohmann::ordered_json;

inline ordered_json stages_to_json(const std::vector<StageRecord>& stages) {
  ordered_json arr = ordered_json::array();
  for (const auto& s : stages) arr.push_back({{"stage", s.stage}, {"detail", s.detail}});
  return arr;
}

inline ordered_json certificate_to_json(const Certificate& cert,
                                        const std::vector<StageRecord>& stages = {}) {
  ordered_json j;
  j["kind"] = kind_name(cert);
  if (const auto* c = std::get_if<CliqueCert>(&cert)) {
    j["vertices"] = c->vertices;
  } else if (const auto* b = std::get_if<BicliqueCert>(&cert)) {
    j["side_a"] = b->side_a;
    j["side_b"] = b->side_b;
  } else {
    const auto& t = std::get<InducedTreeCert>(cert);
    j["shape"] = std::vector<std::size_t>(t.shape.entries().begin(), t.shape.entries().end());
    j["map"] = t.map;
  }
  j["stages"] = stages_to_json(stages);
  return j;
}

inline Certificate certificate_from_json(const ordered_json& j) {
  try {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "clique") return CliqueCert{j.at("vertices").get<VertexSet>()};
    if (kind == "biclique")
      return BicliqueCert{j.at("side_a").get<VertexSet>(), j.at("side_b").get<VertexSet>()};
    if (kind == "induced_tree")
      return InducedTreeCert{BranchingVector(j.at("shape").get<std::vector<std::size_t>>()),
                             j.at("map").get<std::vector<vertex_t>>()};
    throw std::invalid_argument("unknown certificate kind '" + kind + "'");
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed certificate: ") + e.what());
  }
}

inline ordered_json pipeline_to_json(const PipelineResult& r) {
  if (const auto* f = std::get_if<PipelineFound>(&r)) return certificate_to_json(f->certificate, f->stages);
  const auto& ins = std::get<PipelineInsufficient>(r);
  ordered_json j;
  j["kind"] = "insufficient";
  j["stage"] = ins.stage;
  j["reason"] = ins.reason;
  j["stages"] = stages_to_json(ins.stages);
  return j;
}

// ---------------------------------------------------------------------------
// Seeded instance generation
//
// Scheme "splitmix64-v1": one SplitMix64 stream seeded with the config seed;
// candidate pairs (u, v), u < v, are visited in lexicographic order and each
// consumes one 64-bit draw x. The pair becomes an edge iff
// x * den < num * 2^64, i.e. with probability exactly num/den.

inline constexpr const char* generator_scheme = "splitmix64-v1";

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

struct Rational {
  std::uint64_t num = 0;
  std::uint64_t den = 1;
};

/// "a/b", a decimal such as "0.25", or an integer; must lie in [0, 1].
inline Rational parse_rational(const std::string& text) {
  auto number = [&text](std::string_view s) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
      throw std::invalid_argument("malformed probability '" + text + "'");
    return v;
  };
  Rational r;
  if (auto slash = text.find('/'); slash != std::string::npos) {
    r = {number(std::string_view(text).substr(0, slash)), number(std::string_view(text).substr(slash + 1))};
  } else if (auto dot = text.find('.'); dot != std::string::npos) {
    std::string_view frac = std::string_view(text).substr(dot + 1);
    if (frac.size() > 18) throw std::invalid_argument("too many decimal places in '" + text + "'");
    std::uint64_t scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    const std::uint64_t whole = dot == 0 ? 0 : number(std::string_view(text).substr(0, dot));
    r = {whole * scale + (frac.empty() ? 0 : number(frac)), scale};
  } else {
    r = {number(text), 1};
  }
  if (r.den == 0 || r.num > r.den) throw std::invalid_argument("probability '" + text + "' outside [0, 1]");
  return r;
}

__extension__ using uint128 = unsigned __int128;

inline bool draw(SplitMix64& rng, const Rational& p) {
  const uint128 x = rng.next();
  return x * p.den < (static_cast<uint128>(p.num) << 64);
}

enum class NoiseMode { none, ancestor_descendant_only, arbitrary };

inline NoiseMode parse_noise_mode(const std::string& s) {
  if (s == "none") return NoiseMode::none;
  if (s == "ancestor_descendant_only" || s == "ancestor-descendant") return NoiseMode::ancestor_descendant_only;
  if (s == "arbitrary") return NoiseMode::arbitrary;
  throw std::invalid_argument("unknown noise mode '" + s + "'");
}

struct GeneratorConfig {
  BranchingVector branching;
  NoiseMode noise = NoiseMode::none;
  Rational edge_probability;
  std::uint64_t seed = 0;
};

/// build_k_tree(branching) as spanning tree plus seeded non-tree edges.
inline HostedTree generate_hosted_tree(const GeneratorConfig& cfg) {
  RootedTree tree = build_k_tree(cfg.branching);
  Graph host = tree.as_graph();
  if (cfg.noise != NoiseMode::none) {
    SplitMix64 rng(cfg.seed);
    for (vertex_t u = 0; u < tree.size(); ++u)
      for (vertex_t v = u + 1; v < tree.size(); ++v) {
        if (tree.parent(v) == u) continue;
        if (cfg.noise == NoiseMode::ancestor_descendant_only && !tree.is_ancestor(u, v)) continue;
        if (draw(rng, cfg.edge_probability)) host.add_edge(u, v);
      }
  }
  return HostedTree(std::move(host), std::move(tree));
}

/// G(n, p) under the same scheme.
inline Graph generate_random_graph(std::size_t n, const Rational& p, std::uint64_t seed) {
  SplitMix64 rng(seed);
  Graph g(n);
  for (vertex_t u = 0; u < n; ++u)
    for (vertex_t v = u + 1; v < n; ++v)
      if (draw(rng, p)) g.add_edge(u, v);
  return g;
}

}  // namespace unavoidable
