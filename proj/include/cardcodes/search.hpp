#pragma once

// Exhaustive backtracking over message assignments for the sender's hand
// graph: decides existence (returning a verified coloring), non-existence
// (only after exhausting the space), and exact chromatic values by sweeping
// the message budget. A separate partition enumerator provides an
// independent oracle for the very smallest instances.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cardcodes/coloring.hpp"
#include "cardcodes/deck.hpp"
#include "cardcodes/johnson.hpp"
#include "cardcodes/verify.hpp"

namespace cardcodes {

enum class Informativeness {
  None,
  /// Hands within announcement distance must announce differently.
  Proper,
  /// No receiver clique may be monochrome.
  MinInformative,
};

enum class Safety {
  None,
  /// Safety against an observer holding no cards (c treated as 0).
  WeakSafe,
  /// Safety against the signature's eavesdropper hand size.
  Safe,
};

struct Constraints {
  Informativeness informativeness = Informativeness::None;
  Safety safety = Safety::None;
  /// Maximum number of distinct messages the announcement may use (>= 1).
  int k = 1;
  /// When set, the finished coloring's nonempty class sizes must equal this
  /// multiset exactly (parts >= 1, at most k parts, summing to C(n,a)).
  std::optional<std::vector<int>> size_profile;
  /// Wall-clock budget in seconds; nullopt searches without a limit. A
  /// non-positive budget reports Timeout immediately.
  std::optional<double> timeout_seconds = 600.0;
  /// Pin interchangeable message names up front: for proper searches a
  /// greedy lexicographic clique is pre-colored with distinct messages
  /// (every proper coloring gives a clique all-distinct messages, so names
  /// can be chosen to match); otherwise the first hand is pinned to message
  /// 0. Never changes satisfiability, only the work needed to decide it.
  bool symmetry_breaking = true;
  /// Prune branches in which some card occurring in a message class can no
  /// longer be covered by a second member of that class. Admissible whenever
  /// full safety is requested with c >= 1 and a >= 2 (it is ignored
  /// otherwise): a safe announcement never leaves a card covered exactly
  /// once within a class.
  bool coverage_pruning = true;
};

enum class SearchOutcome { Sat, Unsat, Timeout };

inline std::string to_string(SearchOutcome outcome) {
  switch (outcome) {
    case SearchOutcome::Sat: return "sat";
    case SearchOutcome::Unsat: return "unsat";
    case SearchOutcome::Timeout: return "timeout";
  }
  return "unknown";
}

struct SearchResult {
  SearchOutcome outcome = SearchOutcome::Unsat;
  /// Present exactly when outcome == Sat; always re-verified against the
  /// requested constraints before being returned.
  std::optional<Coloring> coloring;
  /// Number of (hand, message) assignments attempted.
  std::uint64_t nodes_explored = 0;
  double elapsed_seconds = 0.0;
};

namespace detail {

/// Depth-first search state. Hands are branched on in canonical
/// (lexicographic) order, messages tried ascending, so results are
/// reproducible run to run.
struct ColoringSearch {
  // Problem shape.
  int n = 0;
  int a = 0;
  int k = 0;
  bool want_proper = false;
  bool want_min = false;
  bool safety_active = false;
  int safety_c = 0;  // eavesdropper hand size used for safety bookkeeping
  bool coverage_active = false;
  Signature verify_sig;  // exact leaf verification (informativeness)
  Signature safety_sig;  // exact leaf verification (safety; c possibly zeroed)

  std::vector<Hand> verts;
  int V = 0;

  // Properness: later-indexed neighbours of each hand.
  std::vector<std::vector<int>> nbr_later;

  // Minimal informativeness: receiver cliques and per-clique message counts.
  std::vector<std::vector<int>> clique_members;   // clique -> vertex ids
  std::vector<std::vector<int>> vert_cliques;     // vertex -> clique ids
  std::vector<int> clique_assigned;               // assigned members
  std::vector<int> clique_distinct;               // distinct messages present
  std::vector<std::vector<int>> clique_color_cnt;  // [clique][message]

  // Safety bookkeeping per (observer hand, message): how many class members
  // avoid the observer, and how many of those contain each card.
  std::vector<Hand> c_hands;
  std::vector<int> member_count;  // [c][m]
  std::vector<int> card_count;    // [c][m][card]

  // Coverage pruning: how many members of each class contain each card.
  std::vector<int> cover;  // [m][card]

  // Profile: desired class sizes, sorted descending and zero-padded to k.
  std::optional<std::vector<int>> profile_desc;

  // Assignment state.
  std::vector<std::uint64_t> allowed;  // candidate message bits per vertex
  std::vector<int> color_of;           // -1 while unassigned
  std::vector<int> class_size;

  struct MaskChange {
    int vert;
    std::uint64_t old_mask;
  };
  std::vector<MaskChange> trail;

  // Outcome bookkeeping.
  std::uint64_t nodes = 0;
  bool timed_out = false;
  std::optional<std::chrono::steady_clock::time_point> deadline;
  std::vector<std::uint64_t> found_ids;
  bool found = false;

  // Scratch buffers reused across nodes.
  std::vector<std::uint64_t> future_cover;    // [card] -> messages reachable
  std::vector<std::uint64_t> future_avoid;    // [c][card] -> same, members avoiding c
  std::vector<int> sizes_scratch;

  int mc_index(int ci, int m) const { return ci * k + m; }
  int cc_index(int ci, int m, int card) const { return (ci * k + m) * n + card; }

  void build(const Signature& sig, const Constraints& cons) {
    n = sig.n();
    a = sig.a;
    k = cons.k;
    want_proper = cons.informativeness == Informativeness::Proper;
    want_min = cons.informativeness == Informativeness::MinInformative;
    verify_sig = sig;
    safety_active = cons.safety != Safety::None;
    safety_c = cons.safety == Safety::Safe ? sig.c : 0;
    safety_sig = make_signature(sig.a, sig.b + (sig.c - safety_c), safety_c, sig.r);
    coverage_active =
        cons.coverage_pruning && safety_active && safety_c >= 1 && a >= 2;

    verts = enumerate_hands(n, a);
    V = static_cast<int>(verts.size());
    color_of.assign(V, -1);
    class_size.assign(k, 0);
    allowed.assign(V, k >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << k) - 1));

    if (want_proper) {
      const GraphSpec gs = make_graph_spec(n, a, sig.d());
      nbr_later.assign(V, {});
      for (int i = 0; i < V; ++i)
        for (int j = i + 1; j < V; ++j)
          if (adjacent(gs, verts[i], verts[j])) nbr_later[i].push_back(j);
    }

    if (want_min) {
      const int b = sig.b;
      vert_cliques.assign(V, {});
      for (const Hand& bh : enumerate_hands(n, b)) {
        std::vector<int> members;
        for (const Hand& h : enumerate_subsets(complement(bh, n), a))
          members.push_back(static_cast<int>(hand_rank(h, n)));
        const int id = static_cast<int>(clique_members.size());
        for (int v : members) vert_cliques[v].push_back(id);
        clique_members.push_back(std::move(members));
      }
      clique_assigned.assign(clique_members.size(), 0);
      clique_distinct.assign(clique_members.size(), 0);
      clique_color_cnt.assign(clique_members.size(), std::vector<int>(k, 0));
    }

    if (safety_active) {
      c_hands = enumerate_hands(n, safety_c);
      member_count.assign(c_hands.size() * k, 0);
      card_count.assign(c_hands.size() * k * n, 0);
      future_avoid.assign(c_hands.size() * n, 0);
    }
    if (coverage_active) cover.assign(static_cast<std::size_t>(k) * n, 0);

    if (cons.size_profile) {
      std::vector<int> prof = *cons.size_profile;
      std::sort(prof.begin(), prof.end(), std::greater<int>());
      prof.resize(k, 0);
      profile_desc = std::move(prof);
    }

    if (cons.symmetry_breaking && V > 0) {
      if (want_proper) {
        // Greedy lexicographic clique: all its hands must announce distinct
        // messages, so pin them to 0, 1, 2, ... in order.
        const GraphSpec gs = make_graph_spec(n, a, sig.d());
        std::vector<int> clique{0};
        for (int j = 1; j < V; ++j) {
          bool all = true;
          for (int v : clique)
            if (!adjacent(gs, verts[v], verts[j])) {
              all = false;
              break;
            }
          if (all) clique.push_back(j);
        }
        for (std::size_t pos = 0; pos < clique.size(); ++pos)
          allowed[clique[pos]] =
              static_cast<int>(pos) < k ? (std::uint64_t{1} << pos) : 0;
      } else {
        allowed[0] = 1;
      }
    }

    if (cons.timeout_seconds) {
      deadline = std::chrono::steady_clock::now() +
                 std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                     std::chrono::duration<double>(*cons.timeout_seconds));
      if (*cons.timeout_seconds <= 0.0) timed_out = true;
    }

    future_cover.assign(n, 0);
    sizes_scratch.assign(k, 0);
  }

  bool profile_dominated(int grow_class) {
    // Sorted class sizes must stay pointwise below the sorted profile, or no
    // completion can realize the profile multiset (classes only grow, and
    // matching classes to profile parts is a threshold matching).
    sizes_scratch.assign(class_size.begin(), class_size.end());
    if (grow_class >= 0) ++sizes_scratch[grow_class];
    std::sort(sizes_scratch.begin(), sizes_scratch.end(), std::greater<int>());
    for (int i = 0; i < k; ++i)
      if (sizes_scratch[i] > (*profile_desc)[i]) return false;
    return true;
  }

  void apply_counts(int i, int m) {
    color_of[i] = m;
    ++class_size[m];
    const Hand v = verts[i];
    if (want_min) {
      for (int cl : vert_cliques[i]) {
        ++clique_assigned[cl];
        if (clique_color_cnt[cl][m]++ == 0) ++clique_distinct[cl];
      }
    }
    if (safety_active) {
      for (std::size_t ci = 0; ci < c_hands.size(); ++ci) {
        if (!(v & c_hands[ci]).empty()) continue;
        ++member_count[mc_index(static_cast<int>(ci), m)];
        for (Card z : v.cards()) ++card_count[cc_index(static_cast<int>(ci), m, z)];
      }
    }
    if (coverage_active)
      for (Card z : v.cards()) ++cover[static_cast<std::size_t>(m) * n + z];
  }

  void revert_counts(int i, int m) {
    const Hand v = verts[i];
    if (coverage_active)
      for (Card z : v.cards()) --cover[static_cast<std::size_t>(m) * n + z];
    if (safety_active) {
      for (std::size_t ci = 0; ci < c_hands.size(); ++ci) {
        if (!(v & c_hands[ci]).empty()) continue;
        --member_count[mc_index(static_cast<int>(ci), m)];
        for (Card z : v.cards()) --card_count[cc_index(static_cast<int>(ci), m, z)];
      }
    }
    if (want_min) {
      for (int cl : vert_cliques[i]) {
        --clique_assigned[cl];
        if (--clique_color_cnt[cl][m] == 0) --clique_distinct[cl];
      }
    }
    --class_size[m];
    color_of[i] = -1;
  }

  bool shrink_mask(int u, std::uint64_t bit) {
    if (allowed[u] & bit) {
      trail.push_back({u, allowed[u]});
      allowed[u] &= ~bit;
      if (allowed[u] == 0) return false;
    }
    return true;
  }

  bool propagate(int i, int m) {
    if (profile_desc && !profile_dominated(-1)) return false;

    if (want_proper)
      for (int u : nbr_later[i])
        if (!shrink_mask(u, std::uint64_t{1} << m)) return false;

    if (want_min) {
      for (int cl : vert_cliques[i]) {
        const int size = static_cast<int>(clique_members[cl].size());
        if (clique_distinct[cl] > 1) continue;
        if (clique_assigned[cl] == size) return false;  // clique monochrome
        if (clique_assigned[cl] == size - 1) {
          // One member left and all others share this message: that member
          // must announce something else.
          for (int u : clique_members[cl])
            if (color_of[u] < 0) {
              if (!shrink_mask(u, std::uint64_t{1} << m)) return false;
              break;
            }
        }
      }
    }

    if (coverage_active || safety_active) {
      // One pass over the unassigned suffix collects, per card, the set of
      // messages some future hand containing that card could still take --
      // overall and (for safety) restricted to hands avoiding each observer.
      std::uint64_t future_or = 0;
      std::fill(future_cover.begin(), future_cover.end(), 0);
      if (safety_active)
        std::fill(future_avoid.begin(), future_avoid.end(), 0);
      for (int u = i + 1; u < V; ++u) {
        const std::uint64_t mask = allowed[u];
        future_or |= mask;
        for (Card z : verts[u].cards()) future_cover[z] |= mask;
        if (safety_active) {
          for (std::size_t ci = 0; ci < c_hands.size(); ++ci) {
            if (!(verts[u] & c_hands[ci]).empty()) continue;
            for (Card z : verts[u].cards())
              future_avoid[ci * n + z] |= mask;
          }
        }
      }

      if (coverage_active) {
        for (int m2 = 0; m2 < k; ++m2) {
          const std::uint64_t bit = std::uint64_t{1} << m2;
          for (Card z = 0; z < n; ++z)
            if (cover[static_cast<std::size_t>(m2) * n + z] == 1 &&
                !(future_cover[z] & bit))
              return false;
        }
      }

      if (safety_active) {
        for (int m2 = 0; m2 < k; ++m2) {
          const std::uint64_t bit = std::uint64_t{1} << m2;
          const bool frozen = !(future_or & bit) ||
                              (profile_desc && !profile_dominated(m2));
          for (std::size_t ci = 0; ci < c_hands.size(); ++ci) {
            const int members = member_count[mc_index(static_cast<int>(ci), m2)];
            if (members == 0) continue;
            const std::uint64_t ch = c_hands[ci].bits;
            for (Card z = 0; z < n; ++z) {
              if (ch & (std::uint64_t{1} << z)) continue;
              const int cnt = card_count[cc_index(static_cast<int>(ci), m2, z)];
              // Every card the observer lacks must eventually occur in some
              // member she considers possible.
              if (cnt == 0 && !(future_avoid[ci * n + z] & bit)) return false;
              // Once the class cannot change, no such card may occur in all
              // of them, or the observer would learn the sender holds it.
              if (frozen && cnt == members) return false;
            }
          }
        }
      }
    }

    return true;
  }

  bool leaf() {
    if (profile_desc) {
      sizes_scratch.assign(class_size.begin(), class_size.end());
      std::sort(sizes_scratch.begin(), sizes_scratch.end(), std::greater<int>());
      if (sizes_scratch != *profile_desc) return false;
    }
    std::vector<std::uint64_t> ids(color_of.begin(), color_of.end());
    const Coloring col = make_coloring(n, a, ids);
    if (want_proper && !check_informative(col, verify_sig).verdict) return false;
    if (want_min && !check_min_informative(col, verify_sig).verdict) return false;
    if (safety_active && !check_safe(col, safety_sig).verdict) return false;
    found_ids = std::move(ids);
    found = true;
    return true;
  }

  void check_deadline() {
    if (deadline && std::chrono::steady_clock::now() >= *deadline) timed_out = true;
  }

  bool dfs(int i) {
    if (timed_out) return false;
    if (i == V) return leaf();
    const std::uint64_t candidates = allowed[i];
    for (int m = 0; m < k; ++m) {
      if (!(candidates & (std::uint64_t{1} << m))) continue;
      ++nodes;
      if ((nodes & 1023) == 0) {
        check_deadline();
        if (timed_out) return false;
      }
      const std::size_t mark = trail.size();
      apply_counts(i, m);
      if (propagate(i, m) && dfs(i + 1)) return true;
      while (trail.size() > mark) {
        allowed[trail.back().vert] = trail.back().old_mask;
        trail.pop_back();
      }
      revert_counts(i, m);
      if (timed_out) return false;
    }
    return false;
  }
};

inline void require_constraints(const Signature& sig, const Constraints& cons) {
  if (cons.k < 1) throw std::invalid_argument("the message budget k must be at least 1");
  if (cons.k > 64) throw std::invalid_argument("message budgets above 64 are unsupported");
  if (cons.informativeness == Informativeness::MinInformative && sig.d() < 1)
    throw std::invalid_argument(
        "minimal informativeness is undefined for c+r = 0 (the receiver already knows the deal)");
  if (cons.size_profile) {
    const auto& prof = *cons.size_profile;
    if (prof.empty() || static_cast<int>(prof.size()) > cons.k)
      throw std::invalid_argument("size profile must have between 1 and k parts");
    std::uint64_t sum = 0;
    for (int part : prof) {
      if (part < 1) throw std::invalid_argument("size profile parts must be positive");
      sum += static_cast<std::uint64_t>(part);
    }
    if (sum != binomial(sig.n(), sig.a))
      throw std::invalid_argument("size profile must sum to the number of possible hands");
  }
}

}  // namespace detail

/// Decide whether an announcement satisfying `cons` exists for `sig`.
/// Deterministic: hands are branched in canonical order and messages tried
/// ascending, so the returned coloring (when Sat) is a function of the
/// inputs alone. Unsat is reported only after the space is exhausted; when
/// the time budget runs out first the outcome is Timeout.
inline SearchResult find_coloring(const Signature& sig, const Constraints& cons) {
  detail::require_constraints(sig, cons);
  const auto start = std::chrono::steady_clock::now();
  detail::ColoringSearch engine;
  engine.build(sig, cons);
  const bool sat = engine.dfs(0);
  SearchResult result;
  result.nodes_explored = engine.nodes;
  result.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (sat) {
    result.outcome = SearchOutcome::Sat;
    result.coloring = make_coloring(engine.n, engine.a, engine.found_ids);
  } else if (engine.timed_out) {
    result.outcome = SearchOutcome::Timeout;
  } else {
    result.outcome = SearchOutcome::Unsat;
  }
  return result;
}

struct ChromaticSweep {
  /// Smallest message budget admitting a coloring, when established by Unsat
  /// at every smaller budget and Sat at this one; nullopt otherwise.
  std::optional<int> chromatic;
  /// True when the sweep stopped early because some budget timed out.
  bool timed_out = false;
  std::uint64_t nodes_explored = 0;
};

/// Sweep budgets 1..k_max under `base` (its k and size_profile must be
/// unset/ignored): the graph's n, m, d are searched as a signature with
/// eavesdropper size d and no undealt cards.
inline ChromaticSweep chromatic_number_exact(const GraphSpec& spec, const Constraints& base,
                                             int k_max) {
  if (base.size_profile)
    throw std::invalid_argument("chromatic sweeps do not accept a size profile");
  if (k_max < 1) throw std::invalid_argument("k_max must be at least 1");
  const int b = spec.n - spec.m - spec.d;
  if (b < 0)
    throw std::invalid_argument("no receiver hand fits: n - m - d is negative");
  const Signature sig = make_signature(spec.m, b, spec.d, 0);
  ChromaticSweep sweep;
  for (int k = 1; k <= k_max; ++k) {
    Constraints cons = base;
    cons.k = k;
    const SearchResult res = find_coloring(sig, cons);
    sweep.nodes_explored += res.nodes_explored;
    if (res.outcome == SearchOutcome::Sat) {
      sweep.chromatic = k;
      return sweep;
    }
    if (res.outcome == SearchOutcome::Timeout) {
      sweep.timed_out = true;
      return sweep;
    }
  }
  return sweep;
}

enum class PartitionPredicate { ProperAndSafe };

struct PartitionCheck {
  bool exists = false;
  std::uint64_t count = 0;
  std::uint64_t total_partitions = 0;
};

/// Independent small-instance oracle: enumerate every set partition of the
/// sender-hand set as a candidate coloring and count those satisfying the
/// predicate. Limited to at most 12 hands (Bell-number growth).
inline PartitionCheck exhaustive_partition_check(const Signature& sig,
                                                 PartitionPredicate pred) {
  if (pred != PartitionPredicate::ProperAndSafe)
    throw std::invalid_argument("unsupported partition predicate");
  const std::uint64_t vcount = binomial(sig.n(), sig.a);
  if (vcount > 12)
    throw std::invalid_argument("instance-too-large: partition enumeration needs C(n,a) <= 12");
  const int n = sig.n();
  const auto verts = enumerate_hands(n, sig.a);
  const int V = static_cast<int>(verts.size());
  const GraphSpec gs = make_graph_spec(n, sig.a, sig.d());
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < V; ++i)
    for (int j = i + 1; j < V; ++j)
      if (adjacent(gs, verts[i], verts[j])) edges.emplace_back(i, j);

  PartitionCheck out;
  std::vector<std::uint64_t> rgs(V, 0);
  std::vector<std::uint64_t> max_prefix(V, 0);  // max id over positions < i
  while (true) {
    ++out.total_partitions;
    bool proper = true;
    for (const auto& [i, j] : edges)
      if (rgs[i] == rgs[j]) {
        proper = false;
        break;
      }
    if (proper) {
      const Coloring col = make_coloring(n, sig.a, rgs);
      if (check_safe(col, sig).verdict) ++out.count;
    }

    // Advance to the next restricted-growth string.
    int pos = V - 1;
    while (pos > 0 && rgs[pos] > max_prefix[pos]) --pos;
    if (pos == 0) break;
    ++rgs[pos];
    for (int t = pos + 1; t < V; ++t) {
      max_prefix[t] = std::max(max_prefix[t - 1], rgs[t - 1]);
      rgs[t] = 0;
    }
  }
  out.exists = out.count > 0;
  return out;
}

}  // namespace cardcodes
