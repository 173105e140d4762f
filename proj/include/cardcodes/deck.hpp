#pragma once
// Decks, hands, signatures and deals: the ground set {0..n-1} and the
// fixed-size subsets that every other header builds on.
//
// A hand is stored as a 64-bit membership mask, so the deck size is capped
// at 64 cards.  All functions are pure and all types are immutable values;
// they are safe to use from any number of threads without coordination.

#include <bit>
#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace cardcodes {

/// A card: one element of the deck {0, ..., n-1}.
using Card = int;

/// Largest deck representable by the bit-membership hand encoding.
inline constexpr int kMaxDeck = 64;

/// Bitmask of the full deck {0..n-1}.
constexpr std::uint64_t deck_mask(int n) {
  assert(0 <= n && n <= kMaxDeck);
  return n == kMaxDeck ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

/// A set of cards, encoded as a bit-membership mask (bit i <=> card i).
struct Hand {
  std::uint64_t bits = 0;

  constexpr Hand() = default;
  constexpr explicit Hand(std::uint64_t mask) : bits(mask) {}

  /// Convenience constructor: Hand::of({0, 1, 3}).
  static constexpr Hand of(std::initializer_list<Card> cards) {
    std::uint64_t mask = 0;
    for (Card c : cards) {
      assert(0 <= c && c < kMaxDeck);
      mask |= std::uint64_t{1} << c;
    }
    return Hand{mask};
  }

  constexpr bool contains(Card c) const { return c >= 0 && c < kMaxDeck && (bits >> c & 1u); }
  constexpr int size() const { return std::popcount(bits); }
  constexpr bool empty() const { return bits == 0; }

  constexpr Hand with(Card c) const {
    assert(0 <= c && c < kMaxDeck);
    return Hand{bits | std::uint64_t{1} << c};
  }
  constexpr Hand without(Card c) const {
    assert(0 <= c && c < kMaxDeck);
    return Hand{bits & ~(std::uint64_t{1} << c)};
  }

  constexpr bool subset_of(Hand other) const { return (bits & ~other.bits) == 0; }
  constexpr bool disjoint_with(Hand other) const { return (bits & other.bits) == 0; }

  /// Smallest card in the hand; the hand must be non-empty.
  constexpr Card lowest() const {
    assert(!empty());
    return std::countr_zero(bits);
  }

  /// Members in ascending order.
  std::vector<Card> cards() const {
    std::vector<Card> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint64_t t = bits; t != 0; t &= t - 1) out.push_back(std::countr_zero(t));
    return out;
  }

  friend constexpr Hand operator&(Hand x, Hand y) { return Hand{x.bits & y.bits}; }
  friend constexpr Hand operator|(Hand x, Hand y) { return Hand{x.bits | y.bits}; }
  friend constexpr Hand operator^(Hand x, Hand y) { return Hand{x.bits ^ y.bits}; }
  friend constexpr bool operator==(Hand x, Hand y) { return x.bits == y.bits; }
  friend constexpr bool operator!=(Hand x, Hand y) { return x.bits != y.bits; }
};

/// Number of cards the two hands share.
constexpr int intersection_size(Hand x, Hand y) { return std::popcount(x.bits & y.bits); }

/// C(n, k), exact in 64 bits for every n <= 64.
constexpr std::uint64_t binomial(int n, int k) {
  assert(0 <= n && n <= kMaxDeck);
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 res = 1;
  for (int i = 1; i <= k; ++i) {
    res = res * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
  }
  return static_cast<std::uint64_t>(res);
}

namespace detail {
inline void require_deck(int n) {
  if (n < 0 || n > kMaxDeck)
    throw std::invalid_argument("deck size must be between 0 and 64, got " + std::to_string(n));
}
}  // namespace detail

/// All m-subsets of the cards in `ground`, ordered lexicographically by their
/// sorted card lists (the canonical hand order used throughout).
inline std::vector<Hand> enumerate_subsets(Hand ground, int m) {
  if (m < 0) throw std::invalid_argument("subset size must be non-negative");
  const std::vector<Card> pool = ground.cards();
  const int p = static_cast<int>(pool.size());
  std::vector<Hand> out;
  if (m > p) return out;
  out.reserve(static_cast<std::size_t>(binomial(p, m)));
  std::vector<int> idx(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    Hand h;
    for (int i : idx) h = h.with(pool[static_cast<std::size_t>(i)]);
    out.push_back(h);
    // advance to the next index combination in lexicographic order
    int i = m - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == p - m + i) --i;
    if (i < 0) break;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < m; ++j)
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

/// All C(n, m) m-subsets of {0..n-1} in canonical (lexicographic) order.
inline std::vector<Hand> enumerate_hands(int n, int m) {
  detail::require_deck(n);
  if (m < 0 || m > n)
    throw std::invalid_argument("cannot enumerate " + std::to_string(m) + "-card hands from a deck of " +
                                std::to_string(n));
  return enumerate_subsets(Hand{deck_mask(n)}, m);
}

/// Position of `h` in enumerate_hands(n, h.size()).
inline std::uint64_t hand_rank(Hand h, int n) {
  detail::require_deck(n);
  assert(h.subset_of(Hand{deck_mask(n)}));
  const int m = h.size();
  std::uint64_t rank = 0;
  int i = 0;      // members placed so far
  int prev = -1;  // previous member
  for (Card c : h.cards()) {
    for (Card skipped = prev + 1; skipped < c; ++skipped)
      rank += binomial(n - 1 - skipped, m - 1 - i);
    prev = c;
    ++i;
  }
  return rank;
}

/// {0..n-1} minus h.
inline Hand complement(Hand h, int n) {
  detail::require_deck(n);
  if (!h.subset_of(Hand{deck_mask(n)}))
    throw std::invalid_argument("hand has members outside the deck of size " + std::to_string(n));
  return Hand{deck_mask(n) & ~h.bits};
}

/// Text form of a hand: ascending comma-separated cards, "-" when empty.
inline std::string format_hand(Hand h) {
  if (h.empty()) return "-";
  std::string out;
  for (Card c : h.cards()) {
    if (!out.empty()) out += ',';
    out += std::to_string(c);
  }
  return out;
}

/// Parses the text form produced by format_hand; cards must be ascending and < n.
inline Hand parse_hand(const std::string& text, int n) {
  detail::require_deck(n);
  if (text == "-") return Hand{};
  if (text.empty()) throw std::invalid_argument("empty hand text (use \"-\" for the empty hand)");
  Hand h;
  int prev = -1;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t start = pos;
    while (pos < text.size() && text[pos] != ',') ++pos;
    const std::string tok = text.substr(start, pos - start);
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("bad card '" + tok + "' in hand '" + text + "'");
    long value = std::stol(tok);
    if (value >= n)
      throw std::invalid_argument("card " + tok + " outside the deck of size " + std::to_string(n));
    if (value <= prev)
      throw std::invalid_argument("cards must be strictly ascending in hand '" + text + "'");
    prev = static_cast<int>(value);
    h = h.with(static_cast<Card>(value));
    if (pos < text.size()) {
      ++pos;  // skip ','
      if (pos == text.size()) throw std::invalid_argument("trailing ',' in hand '" + text + "'");
    }
  }
  return h;
}

/// Public hand sizes (a, b, c) plus the count r of undealt cards; n = a+b+c+r.
struct Signature {
  int a = 1;
  int b = 1;
  int c = 0;
  int r = 0;

  constexpr int n() const { return a + b + c + r; }
  /// Cards dealt to neither A nor B: the distance parameter of A's announcement graph.
  constexpr int d() const { return c + r; }
};

inline Signature make_signature(int a, int b, int c, int r) {
  if (a < 1 || b < 1)
    throw std::invalid_argument("both main hands need at least one card (a=" + std::to_string(a) +
                                ", b=" + std::to_string(b) + ")");
  if (c < 0 || r < 0)
    throw std::invalid_argument("negative hand sizes are not allowed");
  if (a + b + c + r > kMaxDeck)
    throw std::invalid_argument("deck size " + std::to_string(a + b + c + r) + " exceeds the 64-card cap");
  return Signature{a, b, c, r};
}

inline std::string format_signature(const Signature& s) {
  return std::to_string(s.a) + ',' + std::to_string(s.b) + ',' + std::to_string(s.c) + ',' +
         std::to_string(s.r);
}

/// Parses "a,b,c,r".
inline Signature parse_signature(const std::string& text) {
  int parts[4];
  std::size_t pos = 0;
  for (int i = 0; i < 4; ++i) {
    std::size_t start = pos;
    while (pos < text.size() && text[pos] != ',') ++pos;
    const std::string tok = text.substr(start, pos - start);
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("bad signature '" + text + "' (expected a,b,c,r)");
    parts[i] = static_cast<int>(std::stol(tok));
    if (pos < text.size())
      ++pos;
    else if (i < 3)
      throw std::invalid_argument("bad signature '" + text + "' (expected four fields)");
  }
  if (pos != text.size() && pos != text.size() + 1)
    throw std::invalid_argument("trailing characters in signature '" + text + "'");
  return make_signature(parts[0], parts[1], parts[2], parts[3]);
}

/// One dealt round: A's, B's and C's hands.
struct Deal {
  Hand a;
  Hand b;
  Hand c;
};

/// True iff the hands are pairwise disjoint, sized (a, b, c), and within the deck.
inline bool deal_valid(const Signature& sig, const Deal& d) {
  const Hand deck{deck_mask(sig.n())};
  if (!d.a.subset_of(deck) || !d.b.subset_of(deck) || !d.c.subset_of(deck)) return false;
  if (d.a.size() != sig.a || d.b.size() != sig.b || d.c.size() != sig.c) return false;
  return d.a.disjoint_with(d.b) && d.a.disjoint_with(d.c) && d.b.disjoint_with(d.c);
}

/// Every valid deal for the signature, in canonical nested order
/// (A's hand, then B's from the remaining cards, then C's).
inline std::vector<Deal> enumerate_deals(const Signature& sig) {
  std::vector<Deal> out;
  out.reserve(static_cast<std::size_t>(binomial(sig.n(), sig.a) * binomial(sig.n() - sig.a, sig.b) *
                                       binomial(sig.n() - sig.a - sig.b, sig.c)));
  for (Hand a : enumerate_hands(sig.n(), sig.a)) {
    const Hand rest_a = complement(a, sig.n());
    for (Hand b : enumerate_subsets(rest_a, sig.b)) {
      const Hand rest_ab = Hand{rest_a.bits & ~b.bits};
      for (Hand c : enumerate_subsets(rest_ab, sig.c)) out.push_back(Deal{a, b, c});
    }
  }
  return out;
}

}  // namespace cardcodes
