#pragma once

// Distance-d Johnson graph structure: adjacency between equal-size hands,
// cliques induced by excluding a hand, card-exchange arcs, and whole-graph
// statistics (vertex count, degree, diameter, maximal clique sizes).

#include <algorithm>
#include <cstdint>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

#include "cardcodes/deck.hpp"

namespace cardcodes {

/// The graph J^d(n,m): vertices are the m-card hands from a deck of n cards,
/// and two hands are adjacent when they share at least m−d cards.
struct GraphSpec {
  int n = 0;
  int m = 0;
  int d = 0;
};

namespace detail {

inline void require_spec(const GraphSpec& spec) {
  require_deck(spec.n);
  if (!(0 <= spec.d && spec.d <= spec.m && spec.m <= spec.n))
    throw std::invalid_argument("graph requires 0 <= d <= m <= n, got d=" +
                                std::to_string(spec.d) + " m=" + std::to_string(spec.m) +
                                " n=" + std::to_string(spec.n));
}

inline void require_vertex(const GraphSpec& spec, Hand v) {
  if (v.size() != spec.m || !v.subset_of(Hand{deck_mask(spec.n)}))
    throw std::invalid_argument("invalid vertex: " + format_hand(v) + " is not an " +
                                std::to_string(spec.m) + "-card hand from a deck of " +
                                std::to_string(spec.n));
}

}  // namespace detail

inline GraphSpec make_graph_spec(int n, int m, int d) {
  GraphSpec spec{n, m, d};
  detail::require_spec(spec);
  return spec;
}

/// All vertices of the graph in canonical (lexicographic) order.
inline std::vector<Hand> vertices(const GraphSpec& spec) {
  detail::require_spec(spec);
  return enumerate_hands(spec.n, spec.m);
}

/// True iff the two distinct vertices share at least m−d cards.
inline bool adjacent(const GraphSpec& spec, Hand a, Hand a2) {
  detail::require_spec(spec);
  detail::require_vertex(spec, a);
  detail::require_vertex(spec, a2);
  if (a == a2) return false;
  return intersection_size(a, a2) >= spec.m - spec.d;
}

/// One edge of a card-exchange walk: from `from`, card `out_card` leaves the
/// hand and card `in_card` enters it.
struct Arc {
  Hand from;
  Card in_card = 0;
  Card out_card = 0;
};

/// Exchange one card: remove j (present) and add i (absent).
inline Hand shift(Hand a, Card i, Card j) {
  if (i < 0 || i >= kMaxDeck || j < 0 || j >= kMaxDeck || a.contains(i) || !a.contains(j))
    throw std::invalid_argument("invalid arc: need i notin hand and j in hand (i=" +
                                std::to_string(i) + ", j=" + std::to_string(j) + ", hand=" +
                                format_hand(a) + ")");
  return a.without(j).with(i);
}

inline Hand apply_arc(const Arc& arc) { return shift(arc.from, arc.in_card, arc.out_card); }

/// A walk of single-card exchanges from one hand to another of the same size,
/// pairing the leaving cards with the entering cards in ascending order. Every
/// intermediate hand stays inside `from | to`, so a walk between two hands that
/// avoid some excluded set never touches that set. The walk has |from \ to|
/// arcs, which is at most d whenever the endpoints are adjacent in J^d.
inline std::vector<Arc> shift_path(Hand from, Hand to) {
  if (from.size() != to.size())
    throw std::invalid_argument("card-exchange walks connect hands of equal size");
  const std::vector<Card> outs = Hand{from.bits & ~to.bits}.cards();
  const std::vector<Card> ins = Hand{to.bits & ~from.bits}.cards();
  std::vector<Arc> arcs;
  arcs.reserve(outs.size());
  Hand cur = from;
  for (std::size_t k = 0; k < outs.size(); ++k) {
    arcs.push_back(Arc{cur, ins[k], outs[k]});
    cur = shift(cur, ins[k], outs[k]);
  }
  return arcs;
}

/// All m-card hands drawn from the cards outside `excluded`, in canonical
/// order. When the deck minus `excluded` has exactly m+d cards these hands are
/// pairwise adjacent in J^d(n,m), i.e. they form a clique.
inline std::vector<Hand> clique_of(const GraphSpec& spec, Hand excluded) {
  detail::require_spec(spec);
  return enumerate_subsets(complement(excluded, spec.n), spec.m);
}

/// A two-arc walk that keeps the sum of the hand constant modulo n.
struct ZeroSumPath {
  Hand target;
  std::vector<Arc> arcs;  // exactly two arcs
};

/// Looks for the smallest i in [1, floor((gap-1)/2)], gap = z2−z1 (mod n), such
/// that both z1+i and z2−i (mod n) avoid the hand and the forbidden set; if one
/// exists, returns the walk replacing z1 by z1+i and z2 by z2−i. The sum of the
/// hand modulo n is unchanged, and the result still avoids `forbidden`. Only
/// the arc from z1 towards z2 is scanned; see zero_sum_two_arc_bidir for the
/// variant that also tries the wrap-around direction.
inline std::optional<ZeroSumPath> zero_sum_two_arc(Hand a, Card z1, Card z2, Hand forbidden,
                                                   int n) {
  detail::require_deck(n);
  const Hand deck{deck_mask(n)};
  if (!a.subset_of(deck) || !forbidden.subset_of(deck))
    throw std::invalid_argument("invalid arguments: hands must lie inside the deck");
  if (z1 == z2 || !a.contains(z1) || !a.contains(z2))
    throw std::invalid_argument("invalid arguments: z1 and z2 must be distinct cards of the hand");
  if (!(a & forbidden).empty())
    throw std::invalid_argument("invalid arguments: the hand intersects the forbidden set");
  const Hand blocked = a | forbidden;
  const int gap = ((z2 - z1) % n + n) % n;
  for (int i = 1; 2 * i <= gap - 1; ++i) {
    const Card p = static_cast<Card>((z1 + i) % n);
    const Card q = static_cast<Card>(((z2 - i) % n + n) % n);
    if (blocked.contains(p) || blocked.contains(q)) continue;
    ZeroSumPath path;
    path.arcs.push_back(Arc{a, p, z1});
    const Hand mid = shift(a, p, z1);
    path.arcs.push_back(Arc{mid, q, z2});
    path.target = shift(mid, q, z2);
    return path;
  }
  return std::nullopt;
}

/// Two-sided variant: scans the arc from z1 towards z2 first and, failing
/// that, the wrap-around arc from z2 towards z1.
inline std::optional<ZeroSumPath> zero_sum_two_arc_bidir(Hand a, Card z1, Card z2, Hand forbidden,
                                                         int n) {
  if (auto path = zero_sum_two_arc(a, z1, z2, forbidden, n)) return path;
  return zero_sum_two_arc(a, z2, z1, forbidden, n);
}

struct GraphStats {
  std::uint64_t vertex_count = 0;
  std::optional<std::uint64_t> degree;  // every vertex has this degree (reported for d=1)
  std::optional<int> diameter;          // absent when the graph is disconnected
  std::vector<int> max_clique_sizes;    // maximal clique sizes (reported for d=1)
};

namespace detail {

/// Largest distance from the first vertex; the graph is vertex-transitive, so
/// this equals the diameter. Returns nullopt if some vertex is unreachable.
inline std::optional<int> eccentricity_of_first_vertex(const GraphSpec& spec) {
  const std::vector<Hand> verts = vertices(spec);
  std::vector<int> dist(verts.size(), -1);
  std::queue<std::size_t> frontier;
  dist[0] = 0;
  frontier.push(0);
  int radius = 0;
  const int threshold = spec.m - spec.d;
  while (!frontier.empty()) {
    const std::size_t u = frontier.front();
    frontier.pop();
    for (std::size_t v = 0; v < verts.size(); ++v) {
      if (dist[v] >= 0 || u == v) continue;
      if (intersection_size(verts[u], verts[v]) < threshold) continue;
      dist[v] = dist[u] + 1;
      radius = std::max(radius, dist[v]);
      frontier.push(v);
    }
  }
  for (int dv : dist)
    if (dv < 0) return std::nullopt;
  return radius;
}

}  // namespace detail

inline GraphStats graph_stats(const GraphSpec& spec) {
  detail::require_spec(spec);
  GraphStats st;
  st.vertex_count = binomial(spec.n, spec.m);
  const int side = std::min(spec.m, spec.n - spec.m);
  if (spec.d == 1) {
    st.degree = static_cast<std::uint64_t>(spec.m) * static_cast<std::uint64_t>(spec.n - spec.m);
    st.diameter = side;
    if (st.vertex_count == 1) {
      st.max_clique_sizes = {1};
    } else {
      st.max_clique_sizes.push_back(spec.n - spec.m + 1);
      if (spec.m + 1 != spec.n - spec.m + 1) st.max_clique_sizes.push_back(spec.m + 1);
    }
  } else if (spec.d == 0) {
    if (st.vertex_count <= 1) st.diameter = 0;  // otherwise edgeless: no finite diameter
  } else if (st.vertex_count == 1) {
    st.diameter = 0;
  } else if (spec.d >= side) {
    st.diameter = 1;  // complete graph
  } else {
    st.diameter = detail::eccentricity_of_first_vertex(spec);
  }
  return st;
}

}  // namespace cardcodes
