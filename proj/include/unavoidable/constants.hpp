#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "unavoidable/big_count.hpp"
#include "unavoidable/errors.hpp"
#include "unavoidable/trees.hpp"

namespace unavoidable {

// ---------------------------------------------------------------------------
// Ramsey numbers

struct RamseyValue {
  enum class Kind { exact, upper_bound };

  Kind kind = Kind::upper_bound;
  BigCount value;
  // closed-form | exhaustive | table | binomial-bound
  std::string source;

  bool exact() const noexcept { return kind == Kind::exact; }
};

namespace detail {

using Rows = std::vector<std::uint32_t>;

inline bool has_clique(std::uint32_t cand, std::size_t k, const Rows& rows) {
  if (k == 0) return true;
  while (cand) {
    if (static_cast<std::size_t>(std::popcount(cand)) < k) return false;
    const int v = std::countr_zero(cand);
    cand &= cand - 1;
    if (has_clique(cand & rows[v], k - 1, rows)) return true;
  }
  return false;
}

}  // namespace detail

/// Outcome of growing all labelled graphs that avoid both an independent
/// p-set and a q-clique, one vertex at a time.
struct RamseySearch {
  // good_graphs[v] = number of labelled good graphs on v vertices.
  std::vector<std::uint64_t> good_graphs;
  // Smallest vertex count with no good graph, if reached.
  std::optional<std::size_t> ramsey;
};

/// Every good graph restricts to a good graph on its first v - 1 vertices, so
/// extending each good graph on v - 1 vertices by every possible
/// neighbourhood of a new vertex enumerates all good graphs on v vertices.
inline RamseySearch ramsey_exhaustive(std::size_t p, std::size_t q, std::size_t max_vertices = 12,
                                      std::size_t max_level_size = 4'000'000) {
  if (p == 0 || q == 0) throw std::invalid_argument("Ramsey arguments must be positive");
  if (max_vertices > 31) throw std::invalid_argument("exhaustive Ramsey search is limited to 31 vertices");
  RamseySearch out;
  out.good_graphs.push_back(1);  // the empty graph
  std::vector<detail::Rows> level{detail::Rows{}};
  for (std::size_t v = 0; v < max_vertices; ++v) {
    std::vector<detail::Rows> next;
    const std::uint32_t full = v == 0 ? 0u : ((1u << v) - 1u);
    for (const auto& rows : level) {
      detail::Rows comp(v);
      for (std::size_t i = 0; i < v; ++i) comp[i] = ~rows[i] & full & ~(1u << i);
      for (std::uint32_t nb = 0; nb <= full; ++nb) {
        // new vertex v: a q-clique through it needs a (q-1)-clique in nb,
        // an independent p-set through it a (p-1)-set among non-neighbours.
        if (detail::has_clique(nb, q - 1, rows)) continue;
        if (detail::has_clique(~nb & full, p - 1, comp)) continue;
        detail::Rows grown = rows;
        for (std::size_t i = 0; i < v; ++i)
          if (nb >> i & 1u) grown[i] |= 1u << v;
        grown.push_back(nb);
        next.push_back(std::move(grown));
        if (next.size() > max_level_size) return out;
        if (nb == full) break;
      }
    }
    out.good_graphs.push_back(next.size());
    if (next.empty()) {
      out.ramsey = v + 1;
      return out;
    }
    level = std::move(next);
  }
  return out;
}

/// Published exact values used when brute force is out of reach.
inline std::optional<std::size_t> known_ramsey(std::size_t p, std::size_t q) {
  static const std::map<std::pair<std::size_t, std::size_t>, std::size_t> table{
      {{3, 3}, 6},  {{3, 4}, 9},  {{3, 5}, 14}, {{3, 6}, 18}, {{3, 7}, 23},
      {{3, 8}, 28}, {{3, 9}, 36}, {{4, 4}, 18}, {{4, 5}, 25}};
  if (p > q) std::swap(p, q);
  auto it = table.find({p, q});
  if (it == table.end()) return std::nullopt;
  return it->second;
}

// Table entries up to this value are confirmed by ramsey_exhaustive.
inline constexpr std::size_t exhaustive_ramsey_limit = 9;

/// binom(n, k) with k small.
inline BigCount binomial(const BigCount& n, std::size_t k) {
  if (BigCount(k) > n) return 0;
  BigCount r = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

inline BigCount ramsey_binomial_bound(const BigCount& p, const BigCount& q) {
  BigCount lo = p < q ? p : q;
  if (lo > BigCount(1'000'000)) throw capacity_error("Ramsey bound argument too large");
  return binomial(p + q - 2, static_cast<std::size_t>(lo - 1));
}

/// R(p, q) with p and q possibly huge; exact where closed forms, brute force
/// or the known table apply, otherwise the binomial upper bound.
inline RamseyValue ramsey_number(const BigCount& p, const BigCount& q) {
  using Kind = RamseyValue::Kind;
  if (p < 1 || q < 1) throw std::invalid_argument("Ramsey arguments must be positive");
  if (p == 1 || q == 1) return {Kind::exact, 1, "closed-form"};
  if (p == 2) return {Kind::exact, q, "closed-form"};
  if (q == 2) return {Kind::exact, p, "closed-form"};
  if (p <= 64 && q <= 64) {
    const auto ps = static_cast<std::size_t>(p), qs = static_cast<std::size_t>(q);
    if (auto known = known_ramsey(ps, qs)) {
      if (*known > exhaustive_ramsey_limit) return {Kind::exact, *known, "table"};
      static std::mutex mu;
      static std::map<std::pair<std::size_t, std::size_t>, std::size_t> confirmed;
      std::lock_guard lock(mu);
      auto key = std::minmax(ps, qs);
      auto it = confirmed.find(key);
      if (it == confirmed.end()) {
        auto search = ramsey_exhaustive(ps, qs, *known);
        if (search.ramsey != *known)
          throw consistency_error("exhaustive search disagrees with known R(" + std::to_string(ps) +
                                  "," + std::to_string(qs) + ")");
        it = confirmed.emplace(key, *known).first;
      }
      return {Kind::exact, it->second, "exhaustive"};
    }
  }
  return {Kind::upper_bound, ramsey_binomial_bound(p, q), "binomial-bound"};
}

inline RamseyValue ramsey_number(std::size_t p, std::size_t q) {
  return ramsey_number(BigCount(p), BigCount(q));
}

// ---------------------------------------------------------------------------
// Tower constants

/// K * 2^(K choose 2): branching that survives majority cleaning of every
/// non-consecutive generation pair of a K-tree.
inline BigCount compute_M_of_K(std::size_t k) {
  if (k == 0) throw std::invalid_argument("K must be positive");
  BigCount m = k;
  m <<= static_cast<unsigned>(k * (k - 1) / 2);
  return m;
}

/// Stand-in for the bound C(a, b) on disjoint pairwise-touching families that
/// force a K_{b,b} subgraph. No formula for it is fixed here, so callers pick
/// one and every result carries its name.
struct CBound {
  std::string name;
  std::function<BigCount(const BigCount&, const BigCount&)> fn;
};

inline CBound default_c_bound() {
  return {"placeholder-product", [](const BigCount& a, const BigCount& b) { return a * b; }};
}

struct NTrace {
  std::size_t m = 0;
  std::string c_bound;
  RamseyValue r_mm;
  std::vector<BigCount> ks;  // k_1 .. k_m

  const BigCount& n() const { return ks.back(); }
};

inline constexpr std::size_t default_bit_limit = std::size_t{1} << 22;

/// k_1 = R(m, m); k_t = U(S(k_{t-1}, ..., k_1), m) with
/// U(k, p) = R(p, C(k, R(p, p))). N(m) = k_m.
inline NTrace compute_N_of_M(std::size_t m, const CBound& c_bound = default_c_bound(),
                             std::size_t bit_limit = default_bit_limit) {
  if (m == 0) throw std::invalid_argument("M must be positive");
  NTrace trace;
  trace.m = m;
  trace.c_bound = c_bound.name;
  trace.r_mm = ramsey_number(m, m);
  trace.ks.push_back(trace.r_mm.value);
  while (trace.ks.size() < m) {
    std::vector<BigCount> reversed(trace.ks.rbegin(), trace.ks.rend());
    const BigCount s = tree_size(std::span<const BigCount>(reversed));
    const BigCount c = c_bound.fn(s, trace.r_mm.value);
    if (c < 1) throw consistency_error("c_bound returned a non-positive value");
    BigCount next = ramsey_number(BigCount(m), c).value;
    if (boost::multiprecision::msb(next) + 1 > bit_limit)
      throw capacity_error("k_" + std::to_string(trace.ks.size() + 1) + " exceeds " +
                           std::to_string(bit_limit) + " bits");
    if (next < trace.ks.back())
      throw consistency_error("k_" + std::to_string(trace.ks.size() + 1) + " < k_" +
                              std::to_string(trace.ks.size()) + ": sequence not monotone");
    trace.ks.push_back(std::move(next));
  }
  return trace;
}

}  // namespace unavoidable
