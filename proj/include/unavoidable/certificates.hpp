#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "unavoidable/graph.hpp"
#include "unavoidable/trees.hpp"

namespace unavoidable {

struct CliqueCert {
  VertexSet vertices;
};

// Induced K_{n,n}: both sides independent, complete to each other.
struct BicliqueCert {
  VertexSet side_a;
  VertexSet side_b;
};

// map[i] is the host vertex of vertex i of build_k_tree(shape).
struct InducedTreeCert {
  BranchingVector shape;
  std::vector<vertex_t> map;
};

using Certificate = std::variant<CliqueCert, BicliqueCert, InducedTreeCert>;

inline const char* kind_name(const Certificate& c) {
  switch (c.index()) {
    case 0: return "clique";
    case 1: return "biclique";
    default: return "induced_tree";
  }
}

struct Verdict {
  bool valid = true;
  std::string reason;
  std::optional<Edge> pair;  // first offending host pair, when there is one

  explicit operator bool() const noexcept { return valid; }
};

namespace detail {

inline Verdict invalid(std::string reason, std::optional<Edge> pair = std::nullopt) {
  return {false, std::move(reason), pair};
}

inline void check_in_range(const Graph& g, const std::vector<vertex_t>& vs) {
  for (vertex_t v : vs)
    if (v >= g.vertex_count())
      throw std::invalid_argument("certificate vertex " + std::to_string(v) + " out of range");
}

inline std::optional<Edge> first_duplicate(std::vector<vertex_t> vs) {
  std::sort(vs.begin(), vs.end());
  for (std::size_t i = 1; i < vs.size(); ++i)
    if (vs[i] == vs[i - 1]) return Edge{vs[i], vs[i]};
  return std::nullopt;
}

}  // namespace detail

/// Checks a certificate against g, looking only at pairs of certificate
/// vertices.
inline Verdict verify_certificate(const Graph& g, const Certificate& cert) {
  if (const auto* c = std::get_if<CliqueCert>(&cert)) {
    detail::check_in_range(g, c->vertices);
    if (c->vertices.empty()) return detail::invalid("empty clique");
    if (auto d = detail::first_duplicate(c->vertices)) return detail::invalid("repeated vertex", d);
    for (std::size_t i = 0; i < c->vertices.size(); ++i)
      for (std::size_t j = i + 1; j < c->vertices.size(); ++j)
        if (!g.has_edge(c->vertices[i], c->vertices[j]))
          return detail::invalid("clique pair not adjacent", Edge{c->vertices[i], c->vertices[j]});
    return {};
  }
  if (const auto* b = std::get_if<BicliqueCert>(&cert)) {
    detail::check_in_range(g, b->side_a);
    detail::check_in_range(g, b->side_b);
    if (b->side_a.size() != b->side_b.size()) return detail::invalid("sides differ in size");
    if (b->side_a.empty()) return detail::invalid("empty sides");
    std::vector<vertex_t> all = b->side_a;
    all.insert(all.end(), b->side_b.begin(), b->side_b.end());
    if (auto d = detail::first_duplicate(all)) return detail::invalid("sides overlap", d);
    for (const auto* side : {&b->side_a, &b->side_b})
      for (std::size_t i = 0; i < side->size(); ++i)
        for (std::size_t j = i + 1; j < side->size(); ++j)
          if (g.has_edge((*side)[i], (*side)[j]))
            return detail::invalid("edge inside a side", Edge{(*side)[i], (*side)[j]});
    for (vertex_t u : b->side_a)
      for (vertex_t v : b->side_b)
        if (!g.has_edge(u, v)) return detail::invalid("cross pair not adjacent", Edge{u, v});
    return {};
  }
  const auto& t = std::get<InducedTreeCert>(cert);
  detail::check_in_range(g, t.map);
  const RootedTree pattern = build_k_tree(t.shape);
  if (t.map.size() != pattern.size()) return detail::invalid("map does not cover the tree");
  if (auto d = detail::first_duplicate(t.map)) return detail::invalid("map not injective", d);
  const Graph pg = pattern.as_graph();
  for (vertex_t u = 0; u < t.map.size(); ++u)
    for (vertex_t v = u + 1; v < t.map.size(); ++v)
      if (pg.has_edge(u, v) != g.has_edge(t.map[u], t.map[v]))
        return detail::invalid(pg.has_edge(u, v) ? "tree edge missing in host"
                                                 : "extra host edge between tree vertices",
                               Edge{t.map[u], t.map[v]});
  return {};
}

/// Rewrites every vertex through `to_outer` (an inner-to-outer relabelling).
inline Certificate relabel(const Certificate& cert, const std::vector<vertex_t>& to_outer) {
  auto apply = [&to_outer](std::vector<vertex_t> vs, bool sort) {
    for (auto& v : vs) v = to_outer.at(v);
    if (sort) std::sort(vs.begin(), vs.end());
    return vs;
  };
  if (const auto* c = std::get_if<CliqueCert>(&cert)) return CliqueCert{apply(c->vertices, true)};
  if (const auto* b = std::get_if<BicliqueCert>(&cert)) {
    BicliqueCert out{apply(b->side_a, true), apply(b->side_b, true)};
    if (out.side_b.front() < out.side_a.front()) std::swap(out.side_a, out.side_b);
    return out;
  }
  const auto& t = std::get<InducedTreeCert>(cert);
  return InducedTreeCert{t.shape, apply(t.map, false)};
}

}  // namespace unavoidable
