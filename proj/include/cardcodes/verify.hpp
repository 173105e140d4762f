#pragma once

// The protocol predicates: informative (proper coloring), minimally
// informative (no monochrome receiver clique), safe (no card deducible by the
// eavesdropper), the intersection/union reformulation of safety, and the
// analytic impossibility bounds. All checks return witness-bearing reports.

#include <algorithm>
#include <cstdint>
#include <exception>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include "cardcodes/coloring.hpp"
#include "cardcodes/deck.hpp"
#include "cardcodes/protocols.hpp"

namespace cardcodes {

/// How the eavesdropper pins a card down: every consistent sender hand
/// contains it, or every one excludes it.
enum class Direction { AllContain, AllExclude };

inline std::string to_string(Direction d) {
  return d == Direction::AllContain ? "all-contain" : "all-exclude";
}

/// Two adjacent hands announce the same message.
struct ProperViolation {
  Hand a;
  Hand a2;
  MessageId msg = 0;
  friend bool operator==(const ProperViolation&, const ProperViolation&) = default;
};

/// Every sender hand the receiver considers possible announces the same message.
struct MonochromeClique {
  Hand b;
  MessageId msg = 0;
  friend bool operator==(const MonochromeClique&, const MonochromeClique&) = default;
};

/// Hearing msg with hand c, the eavesdropper decides card y either way.
struct SafetyViolation {
  Hand c;
  Card y = 0;
  MessageId msg = 0;
  Direction direction = Direction::AllContain;
  friend bool operator==(const SafetyViolation&, const SafetyViolation&) = default;
};

/// Card y lies in the intersection of all class-msg hands avoiding c.
struct CA2Violation {
  Hand c;
  Card y = 0;
  MessageId msg = 0;
  friend bool operator==(const CA2Violation&, const CA2Violation&) = default;
};

/// Card y outside c is missed by the union of all class-msg hands avoiding c.
struct CA3Violation {
  Hand c;
  Card y = 0;
  MessageId msg = 0;
  friend bool operator==(const CA3Violation&, const CA3Violation&) = default;
};

using Witness =
    std::variant<ProperViolation, MonochromeClique, SafetyViolation, CA2Violation, CA3Violation>;

struct Report {
  bool verdict = true;
  std::vector<Witness> witnesses;
  std::uint64_t checked_count = 0;
};

struct VerifyOptions {
  /// Report every witness instead of the canonical first one per failing site.
  bool all_witnesses = false;
  /// Worker threads; results are identical for any value.
  int jobs = 1;
};

inline std::string witness_to_string(const Witness& w) {
  struct Printer {
    std::string operator()(const ProperViolation& v) const {
      return "ProperViolation a=" + format_hand(v.a) + " a2=" + format_hand(v.a2) +
             " M=" + std::to_string(v.msg);
    }
    std::string operator()(const MonochromeClique& v) const {
      return "MonochromeClique b=" + format_hand(v.b) + " M=" + std::to_string(v.msg);
    }
    std::string operator()(const SafetyViolation& v) const {
      return "SafetyViolation c=" + format_hand(v.c) + " y=" + std::to_string(v.y) +
             " M=" + std::to_string(v.msg) + " direction=" + to_string(v.direction);
    }
    std::string operator()(const CA2Violation& v) const {
      return "CA2Violation c=" + format_hand(v.c) + " y=" + std::to_string(v.y) +
             " M=" + std::to_string(v.msg);
    }
    std::string operator()(const CA3Violation& v) const {
      return "CA3Violation c=" + format_hand(v.c) + " y=" + std::to_string(v.y) +
             " M=" + std::to_string(v.msg);
    }
  };
  return std::visit(Printer{}, w);
}

namespace detail {

/// Runs work(lo, hi, local) over [0, total) split into contiguous chunks, one
/// local accumulator each, and returns the locals in chunk order. Chunk
/// boundaries depend only on `total` and the number of chunks, and callers
/// merge in chunk order, so results are independent of scheduling.
template <class Local, class WorkFn>
std::vector<Local> parallel_chunks(std::uint64_t total, int jobs, const WorkFn& work) {
  const std::uint64_t want = jobs < 1 ? 1 : static_cast<std::uint64_t>(jobs);
  const std::uint64_t chunks = std::max<std::uint64_t>(1, std::min(want, total));
  std::vector<Local> locals(chunks);
  if (chunks == 1) {
    work(0, total, locals[0]);
    return locals;
  }
  std::vector<std::thread> threads;
  std::vector<std::exception_ptr> errors(chunks);
  threads.reserve(chunks);
  for (std::uint64_t i = 0; i < chunks; ++i) {
    const std::uint64_t lo = total * i / chunks;
    const std::uint64_t hi = total * (i + 1) / chunks;
    threads.emplace_back([&, i, lo, hi] {
      try {
        work(lo, hi, locals[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (const auto& err : errors)
    if (err) std::rethrow_exception(err);
  return locals;
}

/// Class members (hands per message id) in canonical hand order.
inline std::vector<std::vector<Hand>> class_table(const Coloring& col) {
  std::vector<std::vector<Hand>> table(col.message_count);
  const auto hands = enumerate_hands(col.n, col.a);
  for (std::size_t i = 0; i < hands.size(); ++i) table[col.ids[i]].push_back(hands[i]);
  return table;
}

struct CheckLocal {
  std::vector<Witness> witnesses;
  std::uint64_t checked = 0;
};

inline Report merge_locals(std::vector<CheckLocal> locals) {
  Report rep;
  for (auto& local : locals) {
    rep.checked_count += local.checked;
    rep.witnesses.insert(rep.witnesses.end(), local.witnesses.begin(), local.witnesses.end());
  }
  rep.verdict = rep.witnesses.empty();
  return rep;
}

}  // namespace detail

/// The receiver can always reconstruct the sender's exact hand iff no two
/// hands at distance <= c+r announce the same message.
inline Report check_informative(const Coloring& col, const Signature& sig,
                                const VerifyOptions& opt = {}) {
  detail::require_match(col, sig);
  const int n = col.n;
  const int a = col.a;
  const int threshold = a - (sig.c + sig.r);
  const auto hands = enumerate_hands(n, a);

  struct Local {
    std::vector<ProperViolation> firsts;  // lex-first offending pair per message
    std::vector<Witness> all;
    std::uint64_t checked = 0;
  };
  const auto locals = detail::parallel_chunks<Local>(
      hands.size(), opt.jobs, [&](std::uint64_t lo, std::uint64_t hi, Local& local) {
        std::vector<bool> found(col.message_count, false);
        std::vector<ProperViolation> firsts(col.message_count);
        for (std::uint64_t i = lo; i < hi; ++i) {
          for (std::uint64_t j = i + 1; j < hands.size(); ++j) {
            if (intersection_size(hands[i], hands[j]) < threshold) continue;
            ++local.checked;
            if (col.ids[i] != col.ids[j]) continue;
            const ProperViolation v{hands[i], hands[j], col.ids[i]};
            if (opt.all_witnesses) {
              local.all.push_back(v);
            } else if (!found[v.msg]) {
              found[v.msg] = true;
              firsts[v.msg] = v;
            }
          }
        }
        for (MessageId m = 0; m < col.message_count; ++m)
          if (found[m]) local.firsts.push_back(firsts[m]);
      });

  Report rep;
  if (opt.all_witnesses) {
    std::vector<detail::CheckLocal> plain;
    for (const auto& local : locals) plain.push_back({local.all, local.checked});
    return detail::merge_locals(std::move(plain));
  }
  std::vector<std::optional<ProperViolation>> best(col.message_count);
  for (const auto& local : locals) {
    rep.checked_count += local.checked;
    for (const auto& v : local.firsts) {
      auto& slot = best[v.msg];
      // Chunks are visited in index order, so the first chunk holding a
      // violation for this message holds the lexicographically first one.
      if (!slot) slot = v;
    }
  }
  for (const auto& slot : best)
    if (slot) rep.witnesses.push_back(*slot);
  rep.verdict = rep.witnesses.empty();
  return rep;
}

/// The receiver can always name a (c+r)-card set meeting the sender's hand
/// iff no receiver clique is monochrome.
inline Report check_min_informative(const Coloring& col, const Signature& sig,
                                    const VerifyOptions& opt = {}) {
  detail::require_match(col, sig);
  if (sig.c + sig.r < 1)
    throw std::invalid_argument(
        "minimal informativeness is undefined for c+r = 0 (the receiver already knows the deal)");
  const int n = col.n;
  const auto b_hands = enumerate_hands(n, sig.b);

  const auto locals = detail::parallel_chunks<detail::CheckLocal>(
      b_hands.size(), opt.jobs, [&](std::uint64_t lo, std::uint64_t hi, detail::CheckLocal& local) {
        std::vector<bool> reported(col.message_count, false);
        for (std::uint64_t bi = lo; bi < hi; ++bi) {
          const Hand b = b_hands[bi];
          ++local.checked;
          const auto clique = enumerate_subsets(complement(b, n), col.a);
          const MessageId first = col.ids[hand_rank(clique.front(), n)];
          bool mixed = false;
          for (const Hand& member : clique) {
            if (col.ids[hand_rank(member, n)] != first) {
              mixed = true;
              break;
            }
          }
          if (mixed) continue;
          if (opt.all_witnesses || !reported[first]) {
            reported[first] = true;
            local.witnesses.push_back(MonochromeClique{b, first});
          }
        }
      });

  // Without all_witnesses each chunk kept the first failing clique per
  // message; keep the overall first per message across chunks.
  if (!opt.all_witnesses) {
    Report rep;
    std::vector<bool> reported(col.message_count, false);
    for (const auto& local : locals) {
      rep.checked_count += local.checked;
      for (const auto& w : local.witnesses) {
        const auto& v = std::get<MonochromeClique>(w);
        if (!reported[v.msg]) {
          reported[v.msg] = true;
          rep.witnesses.push_back(w);
        }
      }
    }
    rep.verdict = rep.witnesses.empty();
    return rep;
  }
  return detail::merge_locals(locals);
}

namespace detail {

/// Safety scan for one eavesdropper hand size. Witnesses appear in scan
/// order: c-hands canonical, then message ids ascending, then cards ascending.
inline Report check_safe_hand_size(const Coloring& col, int c_size, const VerifyOptions& opt) {
  const int n = col.n;
  const auto c_hands = enumerate_hands(n, c_size);
  const auto table = class_table(col);

  const auto locals = parallel_chunks<CheckLocal>(
      c_hands.size(), opt.jobs, [&](std::uint64_t lo, std::uint64_t hi, CheckLocal& local) {
        std::vector<Hand> avoiding;
        for (std::uint64_t ci = lo; ci < hi; ++ci) {
          const Hand c = c_hands[ci];
          for (MessageId msg = 0; msg < col.message_count; ++msg) {
            avoiding.clear();
            for (const Hand& member : table[msg])
              if (member.disjoint_with(c)) avoiding.push_back(member);
            if (avoiding.empty()) continue;  // message impossible for this hand
            bool reported_here = false;
            for (Card y = 0; y < n; ++y) {
              if (c.contains(y)) continue;
              ++local.checked;
              bool has_contain = false;
              bool has_exclude = false;
              for (const Hand& member : avoiding) {
                (member.contains(y) ? has_contain : has_exclude) = true;
                if (has_contain && has_exclude) break;
              }
              if (has_contain && has_exclude) continue;
              if (!opt.all_witnesses && reported_here) continue;
              reported_here = true;
              local.witnesses.push_back(SafetyViolation{
                  c, y, msg, has_contain ? Direction::AllContain : Direction::AllExclude});
            }
          }
        }
      });
  return merge_locals(locals);
}

}  // namespace detail

/// No matter which hand the eavesdropper holds and which message she hears,
/// she cannot decide for any card outside her hand whether the sender holds
/// it. The eavesdropper hand size is sig.c (c = 0 means the single empty
/// hand); undealt cards play no role in the predicate.
inline Report check_safe(const Coloring& col, const Signature& sig,
                         const VerifyOptions& opt = {}) {
  detail::require_match(col, sig);
  return detail::check_safe_hand_size(col, sig.c, opt);
}

/// Intersection/union reformulation of safety: for every eavesdropper hand c
/// and message with a nonempty set X of announcing hands avoiding c, the
/// members of X must have empty intersection and must jointly cover every
/// card outside c.
inline Report check_ca2_ca3(const Coloring& col, const Signature& sig,
                            const VerifyOptions& opt = {}) {
  detail::require_match(col, sig);
  const int n = col.n;
  const std::uint64_t deck = deck_mask(n);
  const auto c_hands = enumerate_hands(n, sig.c);
  const auto table = detail::class_table(col);

  const auto locals = detail::parallel_chunks<detail::CheckLocal>(
      c_hands.size(), opt.jobs, [&](std::uint64_t lo, std::uint64_t hi, detail::CheckLocal& local) {
        for (std::uint64_t ci = lo; ci < hi; ++ci) {
          const Hand c = c_hands[ci];
          for (MessageId msg = 0; msg < col.message_count; ++msg) {
            std::uint64_t meet = deck;
            std::uint64_t join = 0;
            bool nonempty = false;
            for (const Hand& member : table[msg]) {
              if (!member.disjoint_with(c)) continue;
              nonempty = true;
              meet &= member.bits;
              join |= member.bits;
            }
            if (!nonempty) continue;
            ++local.checked;
            if (meet != 0) {
              for (Card y : Hand{meet}.cards()) {
                local.witnesses.push_back(CA2Violation{c, y, msg});
                if (!opt.all_witnesses) break;
              }
            }
            const std::uint64_t uncovered = (deck & ~c.bits) & ~join;
            if (uncovered != 0) {
              for (Card y : Hand{uncovered}.cards()) {
                local.witnesses.push_back(CA3Violation{c, y, msg});
                if (!opt.all_witnesses) break;
              }
            }
          }
        }
      });
  return detail::merge_locals(locals);
}

/// Re-computes the fact a witness claims, directly against the coloring.
inline bool validate_witness(const Coloring& col, const Signature& sig, const Witness& w) {
  const int n = col.n;
  const auto avoiding_members = [&](Hand c, MessageId msg) {
    std::vector<Hand> out;
    for (const Hand& member : class_members(col, msg))
      if (member.disjoint_with(c)) out.push_back(member);
    return out;
  };

  if (const auto* v = std::get_if<ProperViolation>(&w)) {
    if (v->a.size() != col.a || v->a2.size() != col.a || v->a == v->a2) return false;
    if (intersection_size(v->a, v->a2) < col.a - (sig.c + sig.r)) return false;
    return id_of(col, v->a) == v->msg && id_of(col, v->a2) == v->msg;
  }
  if (const auto* v = std::get_if<MonochromeClique>(&w)) {
    if (v->b.size() != sig.b) return false;
    for (const Hand& member : enumerate_subsets(complement(v->b, n), col.a))
      if (id_of(col, member) != v->msg) return false;
    return true;
  }
  if (const auto* v = std::get_if<SafetyViolation>(&w)) {
    if (v->c.size() != sig.c || v->y < 0 || v->y >= n || v->c.contains(v->y)) return false;
    const auto members = avoiding_members(v->c, v->msg);
    if (members.empty()) return false;
    for (const Hand& member : members) {
      const bool holds = member.contains(v->y);
      if (v->direction == Direction::AllContain && !holds) return false;
      if (v->direction == Direction::AllExclude && holds) return false;
    }
    return true;
  }
  if (const auto* v = std::get_if<CA2Violation>(&w)) {
    if (v->c.size() != sig.c) return false;
    const auto members = avoiding_members(v->c, v->msg);
    if (members.empty()) return false;
    for (const Hand& member : members)
      if (!member.contains(v->y)) return false;
    return true;
  }
  const auto& v = std::get<CA3Violation>(w);
  if (v.c.size() != sig.c || v.y < 0 || v.y >= n || v.c.contains(v.y)) return false;
  const auto members = avoiding_members(v.c, v.msg);
  if (members.empty()) return false;
  for (const Hand& member : members)
    if (member.contains(v.y)) return false;
  return true;
}

/// Closed-form impossibility rules for informative-and-safe protocols. The
/// rules are necessary conditions only, so the answer is never "possible".
enum class Solvability { Impossible, Unknown };

struct SolvabilityReport {
  Solvability informative_safe_possible = Solvability::Unknown;
  std::vector<std::string> reasons;
};

inline SolvabilityReport check_solvability_bounds(const Signature& sig) {
  SolvabilityReport rep;
  if (sig.c >= sig.b)
    rep.reasons.push_back("the eavesdropper's hand is at least as large as the receiver's (c >= b)");
  const int side = std::min(sig.a, sig.n() - sig.a);
  if (sig.c >= 1 && sig.c + sig.r >= side - 1)
    rep.reasons.push_back("c+r >= min{a, n-a} - 1 with a nonempty eavesdropper hand");
  if (sig.a == 1 && sig.c >= 1)
    rep.reasons.push_back(
        "a one-card sender hand forces a constant announcement under safety (a = 1)");
  if (!rep.reasons.empty()) rep.informative_safe_possible = Solvability::Impossible;
  return rep;
}

}  // namespace cardcodes
