#pragma once

// Concrete announcement protocols as colorings: modular card sum, parity,
// tuples of elementary symmetric polynomials over a prime field, the
// complement (duality) transform, the message-count reduction, and a set of
// built-in reference colorings.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cardcodes/coloring.hpp"
#include "cardcodes/deck.hpp"

namespace cardcodes {

/// Sum of the cards modulo the deck size.
inline std::uint64_t chi_modn(int n, Hand a_hand) {
  detail::require_deck(n);
  if (!a_hand.subset_of(Hand{deck_mask(n)}))
    throw std::invalid_argument("hand " + format_hand(a_hand) + " is outside the deck of size " +
                                std::to_string(n));
  std::uint64_t sum = 0;
  for (Card c : a_hand.cards()) sum += static_cast<std::uint64_t>(c);
  return sum % static_cast<std::uint64_t>(n);
}

/// Parity of the sum of the cards.
inline std::uint64_t chi_2(Hand a_hand) {
  std::uint64_t sum = 0;
  for (Card c : a_hand.cards()) sum += static_cast<std::uint64_t>(c);
  return sum % 2;
}

/// A prime modulus q >= n together with one distinct field element per card.
struct FieldWeights {
  int q = 2;
  std::vector<int> w;
};

namespace detail {

inline bool is_prime(int q) {
  if (q < 2) return false;
  for (int f = 2; static_cast<long long>(f) * f <= q; ++f)
    if (q % f == 0) return false;
  return true;
}

inline int least_prime_at_least(int n) {
  int q = n < 2 ? 2 : n;
  while (!is_prime(q)) ++q;
  return q;
}

}  // namespace detail

/// Weights for a deck of n cards; q = 0 picks the least prime >= n, an empty
/// weight list defaults to w_i = i.
inline FieldWeights make_field_weights(int n, int q = 0, std::vector<int> w = {}) {
  detail::require_deck(n);
  if (q == 0) q = detail::least_prime_at_least(n);
  if (!detail::is_prime(q) || q < n)
    throw std::invalid_argument("invalid field: modulus " + std::to_string(q) +
                                " must be a prime >= " + std::to_string(n));
  if (w.empty())
    for (int i = 0; i < n; ++i) w.push_back(i);
  if (static_cast<int>(w.size()) != n)
    throw std::invalid_argument("invalid field: need one weight per card");
  std::vector<bool> used(static_cast<std::size_t>(q), false);
  for (int wi : w) {
    if (wi < 0 || wi >= q)
      throw std::invalid_argument("invalid field: weight " + std::to_string(wi) +
                                  " outside [0, " + std::to_string(q) + ")");
    if (used[static_cast<std::size_t>(wi)])
      throw std::invalid_argument("invalid field: weights must be distinct");
    used[static_cast<std::size_t>(wi)] = true;
  }
  return FieldWeights{q, std::move(w)};
}

/// The first d elementary symmetric polynomials of the hand's weights, each
/// reduced modulo q.
inline std::vector<int> chi_gf_vector(const FieldWeights& weights, int d, Hand a_hand) {
  if (d < 1) throw std::invalid_argument("the message vector needs at least one coordinate");
  const std::uint64_t q = static_cast<std::uint64_t>(weights.q);
  std::vector<std::uint64_t> e(static_cast<std::size_t>(d) + 1, 0);
  e[0] = 1;
  for (Card c : a_hand.cards()) {
    if (c >= static_cast<int>(weights.w.size()))
      throw std::invalid_argument("card " + std::to_string(c) + " has no field weight");
    const std::uint64_t wc = static_cast<std::uint64_t>(weights.w[static_cast<std::size_t>(c)]);
    for (int k = d; k >= 1; --k)
      e[static_cast<std::size_t>(k)] =
          (e[static_cast<std::size_t>(k)] + e[static_cast<std::size_t>(k - 1)] * wc) % q;
  }
  std::vector<int> sigma;
  sigma.reserve(static_cast<std::size_t>(d));
  for (int k = 1; k <= d; ++k) sigma.push_back(static_cast<int>(e[static_cast<std::size_t>(k)]));
  return sigma;
}

/// The message vector flattened to a single integer, base q, first coordinate
/// most significant.
inline std::uint64_t chi_gf(const FieldWeights& weights, int d, Hand a_hand) {
  const std::vector<int> sigma = chi_gf_vector(weights, d, a_hand);
  std::uint64_t value = 0;
  for (int coord : sigma) {
    const unsigned __int128 wide =
        static_cast<unsigned __int128>(value) * static_cast<unsigned __int128>(weights.q) +
        static_cast<unsigned __int128>(coord);
    if (wide > ~static_cast<std::uint64_t>(0))
      throw std::overflow_error("message space q^d does not fit in 64 bits");
    value = static_cast<std::uint64_t>(wide);
  }
  return value;
}

/// Materializes any total function on a-hands into a normalized coloring.
template <class Fn>
Coloring tabulate(const Signature& sig, Fn&& fn, std::string note = "") {
  const auto hands = enumerate_hands(sig.n(), sig.a);
  std::vector<std::uint64_t> raw;
  raw.reserve(hands.size());
  for (Hand h : hands) raw.push_back(static_cast<std::uint64_t>(fn(h)));
  return make_coloring(sig.n(), sig.a, raw, std::move(note));
}

inline Coloring tabulate_chi_modn(const Signature& sig) {
  const int n = sig.n();
  return tabulate(
      sig, [n](Hand h) { return chi_modn(n, h); },
      "sum of cards modulo " + std::to_string(n));
}

inline Coloring tabulate_chi_2(const Signature& sig) {
  return tabulate(
      sig, [](Hand h) { return chi_2(h); }, "parity of the card sum");
}

inline Coloring tabulate_chi_gf(const Signature& sig, int d,
                                std::optional<FieldWeights> weights = std::nullopt) {
  const FieldWeights fw = weights ? std::move(*weights) : make_field_weights(sig.n());
  Coloring col = tabulate(
      sig, [&fw, d](Hand h) { return chi_gf(fw, d, h); },
      "first " + std::to_string(d) + " elementary symmetric polynomials of the card weights mod " +
          std::to_string(fw.q));
  const auto hands = enumerate_hands(sig.n(), sig.a);
  col.source_vectors.reserve(hands.size());
  for (Hand h : hands) col.source_vectors.push_back(chi_gf_vector(fw, d, h));
  return col;
}

/// Maps each (n-a)-hand to the color of its complement. The complement is a
/// bijection between hand sets, so ids stay normalized. No signature checks;
/// see dual_protocol for the checked transform.
inline Coloring complement_coloring(const Coloring& col) {
  const int n = col.n;
  const int m = n - col.a;
  Coloring out;
  out.n = n;
  out.a = m;
  out.message_count = col.message_count;
  const auto hands = enumerate_hands(n, m);
  out.ids.reserve(hands.size());
  for (Hand h : hands) out.ids.push_back(col.ids[hand_rank(complement(h, n), n)]);
  out.note = "complement transform of: " + (col.note.empty() ? "(unnamed)" : col.note);
  return out;
}

namespace detail {

inline void require_match(const Coloring& col, const Signature& sig) {
  if (col.n != sig.n() || col.a != sig.a)
    throw std::invalid_argument("coloring (n=" + std::to_string(col.n) + ", a=" +
                                std::to_string(col.a) + ") does not match signature " +
                                format_signature(sig));
}

}  // namespace detail

/// Complement transform with its target signature (b+1, a-1, c, r). Only
/// defined for c+r = 1. Informativeness always carries over (complementation
/// is a graph isomorphism), and safety carries over when the extra card is
/// undealt (r = 1). When an eavesdropper holds it (c = 1) safety does NOT
/// transfer in general: the complement of the safe sum protocol on seven
/// cards leaks, because a class member containing the eavesdropper's card
/// and a fresh card need not exist (see the safety tests for the witness).
inline std::pair<Coloring, Signature> dual_protocol(const Coloring& col, const Signature& sig) {
  detail::require_match(col, sig);
  if (sig.c + sig.r != 1)
    throw std::invalid_argument("the duality transform is out of scope unless c+r = 1");
  const Signature dual_sig = make_signature(sig.b + 1, sig.a - 1, sig.c, sig.r);
  return {complement_coloring(col), dual_sig};
}

/// Folds the message ids modulo ceil(m / (p-1)), p = C(a+c+r, a): the number
/// of messages an announcement needs drops to that many while staying good
/// enough for the receiver to locate one card of the sender's hand.
inline Coloring reduce_protocol(const Coloring& col, const Signature& sig) {
  detail::require_match(col, sig);
  if (sig.c + sig.r < 1)
    throw std::invalid_argument("message reduction is undefined for c+r = 0");
  const std::uint64_t p = binomial(sig.a + sig.c + sig.r, sig.a);
  const std::uint64_t m = col.message_count;
  const std::uint64_t modulus = (m + p - 2) / (p - 1);
  Coloring out;
  out.n = col.n;
  out.a = col.a;
  out.message_count = static_cast<MessageId>(modulus);
  out.ids.reserve(col.ids.size());
  out.source_values.reserve(col.ids.size());
  for (MessageId id : col.ids) {
    out.ids.push_back(static_cast<MessageId>(id % modulus));
    out.source_values.push_back(id);
  }
  out.note = "message ids folded modulo " + std::to_string(modulus) + " from: " +
             (col.note.empty() ? "(unnamed)" : col.note);
  return out;
}

/// A named reference coloring with the signature it is stated for.
struct Fixture {
  std::string name;
  Signature sig;
  Coloring coloring;
  std::string note;
};

namespace detail {

/// Builds a coloring from per-class lists of digit-string hands ("013" means
/// {0,1,3}); validates that every hand appears exactly once.
inline Coloring coloring_from_classes(int n, int a,
                                      const std::vector<std::vector<const char*>>& classes,
                                      std::string note) {
  const std::uint64_t expected = binomial(n, a);
  constexpr MessageId kUnset = ~static_cast<MessageId>(0);
  std::vector<std::uint64_t> raw(expected, kUnset);
  for (std::size_t k = 0; k < classes.size(); ++k) {
    for (const char* token : classes[k]) {
      Hand h;
      for (const char* p = token; *p; ++p) {
        if (*p < '0' || *p > '9') throw std::logic_error("bad hand token in built-in coloring");
        h = h.with(static_cast<Card>(*p - '0'));
      }
      if (h.size() != a) throw std::logic_error("bad hand size in built-in coloring");
      const std::uint64_t rank = hand_rank(h, n);
      if (raw[rank] != kUnset)
        throw std::logic_error("hand listed twice in built-in coloring: " + std::string(token));
      raw[rank] = static_cast<std::uint64_t>(k);
    }
  }
  for (std::uint64_t v : raw)
    if (v == kUnset) throw std::logic_error("built-in coloring does not cover every hand");
  return make_coloring(n, a, raw, std::move(note));
}

}  // namespace detail

inline std::vector<std::string> fixture_names() {
  return {"six_chi", "six_chi1", "six_chi2", "two_msg_331", "j42_safe"};
}

/// The built-in reference colorings, transcribed hand-for-hand.
inline Fixture builtin_fixture(const std::string& name) {
  if (name == "six_chi") {
    return Fixture{
        name, make_signature(3, 3, 1, 0),
        detail::coloring_from_classes(
            7, 3,
            {{"012", "034", "056", "135", "146", "236", "245"},
             {"016", "024", "035", "123", "145", "256", "346"},
             {"015", "023", "046", "124", "136", "345"},
             {"013", "026", "045", "125", "234", "356"},
             {"014", "025", "036", "126", "456"},
             {"134", "156", "235", "246"}},
            "six-message coloring; informative but not safe for one eavesdropper card"),
        "class sizes 7,7,6,6,5,4; source listing verified complete (35 hands, each once)"};
  }
  if (name == "six_chi1") {
    return Fixture{
        name, make_signature(3, 3, 0, 1),
        detail::coloring_from_classes(
            7, 3,
            {{"034", "056", "135", "146", "236", "245"},
             {"016", "024", "035", "123", "145", "256", "346"},
             {"015", "023", "046", "124", "136", "345"},
             {"013", "026", "045", "125", "234", "356"},
             {"014", "025", "036", "126", "456"},
             {"012", "134", "156", "235", "246"}},
            "six-message coloring; informative, safe only when the eavesdropper holds no card"),
        "same classes as six_chi except hand 012 moves from class 0 to class 5"};
  }
  if (name == "six_chi2") {
    return Fixture{
        name, make_signature(3, 3, 1, 0),
        detail::coloring_from_classes(
            7, 3,
            {{"013", "026", "045", "124", "156", "235", "346"},
             {"015", "023", "046", "126", "134", "245", "356"},
             {"016", "024", "035", "123", "145", "256"},
             {"012", "036", "135", "234", "456"},
             {"034", "056", "125", "146", "236"},
             {"014", "025", "136", "246", "345"}},
            "six-message coloring, informative and safe for one eavesdropper card"),
        "class sizes 7,7,6,5,5,5"};
  }
  if (name == "two_msg_331") {
    return Fixture{
        name, make_signature(3, 3, 1, 0),
        detail::coloring_from_classes(
            7, 3,
            {{"012", "013", "014", "015", "016", "023", "024", "025", "036", "046", "056",
              "126", "134", "135", "234", "236", "245", "246", "345", "356", "456"},
             {"026", "034", "035", "045", "123", "124", "125", "136", "145", "146", "156",
              "235", "256", "346"}},
            "two-message coloring, minimally informative and safe for one eavesdropper card"),
        "class sizes 21,14"};
  }
  if (name == "j42_safe") {
    return Fixture{name, make_signature(2, 1, 0, 1),
                   detail::coloring_from_classes(
                       4, 2, {{"01", "23"}, {"02", "13"}, {"03", "12"}},
                       "three perfect-matching classes; informative and safe with no "
                       "eavesdropper card and one card left undealt"),
                   "pairs of complementary hands as classes"};
  }
  throw std::invalid_argument("unknown built-in coloring '" + name +
                              "'; available: six_chi, six_chi1, six_chi2, two_msg_331, j42_safe");
}

}  // namespace cardcodes
