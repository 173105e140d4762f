#pragma once

// Receiver-side decoding: given the receiver's own hand and the announced
// message, recover the sender's exact hand (full decoding, for colorings in
// which every hand compatible with the receiver's view announces something
// different) or a small set guaranteed to meet the sender's hand (minimal
// decoding, for colorings that only promise no compatible clique is
// monochrome).

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cardcodes/coloring.hpp"
#include "cardcodes/deck.hpp"
#include "cardcodes/protocols.hpp"

namespace cardcodes {

enum class DecodeErrorCode {
  /// No hand disjoint from the receiver's announces this message.
  InconsistentAnnouncement,
  /// Several hands disjoint from the receiver's announce this message, so the
  /// sender's hand cannot be pinned down.
  Ambiguous,
  /// Every hand disjoint from the receiver's announces this message, so no
  /// small set is guaranteed to meet the sender's hand.
  NotMinimallyInformativeHere,
};

inline std::string to_string(DecodeErrorCode code) {
  switch (code) {
    case DecodeErrorCode::InconsistentAnnouncement: return "inconsistent-announcement";
    case DecodeErrorCode::Ambiguous: return "ambiguous";
    case DecodeErrorCode::NotMinimallyInformativeHere: return "not-minimally-informative-here";
  }
  return "unknown-decode-error";
}

/// Decoding failure with a machine-readable code; the `what()` text is a
/// human-readable sentence that embeds the code string.
class DecodeError : public std::runtime_error {
 public:
  DecodeError(DecodeErrorCode code, const std::string& detail)
      : std::runtime_error(to_string(code) + ": " + detail), code_(code) {}

  DecodeErrorCode code() const noexcept { return code_; }

 private:
  DecodeErrorCode code_;
};

namespace detail {

inline void require_receiver_hand(const Hand& b_hand, const Signature& sig) {
  if (static_cast<int>(b_hand.size()) != sig.b)
    throw std::invalid_argument("receiver hand " + format_hand(b_hand) + " has " +
                                std::to_string(b_hand.size()) + " cards; signature " +
                                format_signature(sig) + " requires " + std::to_string(sig.b));
  if ((b_hand.bits & ~deck_mask(sig.n())) != 0)
    throw std::invalid_argument("receiver hand " + format_hand(b_hand) +
                                " uses cards outside the deck of size " +
                                std::to_string(sig.n()));
}

/// All sender hands the receiver considers possible after hearing `msg`:
/// hands of the announced size drawn from the cards the receiver cannot see.
inline std::vector<Hand> message_carriers(const Hand& b_hand, MessageId msg, const Coloring& col,
                                          const Signature& sig) {
  const Hand pool = complement(b_hand, sig.n());
  std::vector<Hand> carriers;
  for (const Hand& h : enumerate_subsets(pool, sig.a))
    if (id_of(col, h) == msg) carriers.push_back(h);
  return carriers;
}

}  // namespace detail

/// The unique hand outside `b_hand` that announces `msg`. Throws DecodeError
/// (InconsistentAnnouncement) when no such hand exists and (Ambiguous) when
/// several do; the latter means the coloring is not informative at this
/// receiver hand.
inline Hand decode_full(const Hand& b_hand, MessageId msg, const Coloring& col,
                        const Signature& sig) {
  detail::require_match(col, sig);
  detail::require_receiver_hand(b_hand, sig);
  const auto carriers = detail::message_carriers(b_hand, msg, col, sig);
  if (carriers.empty())
    throw DecodeError(DecodeErrorCode::InconsistentAnnouncement,
                      "no hand outside " + format_hand(b_hand) + " announces message " +
                          std::to_string(msg));
  if (carriers.size() > 1)
    throw DecodeError(DecodeErrorCode::Ambiguous,
                      std::to_string(carriers.size()) + " hands outside " + format_hand(b_hand) +
                          " announce message " + std::to_string(msg));
  return carriers.front();
}

/// The lexicographically smallest set of c+r unseen cards that meets every
/// hand outside `b_hand` announcing `msg`; the sender's hand is one of those,
/// so the result is guaranteed to contain a card the sender holds. Throws
/// DecodeError (InconsistentAnnouncement) when no hand announces `msg`, and
/// (NotMinimallyInformativeHere) when every unseen hand does — then no set of
/// that size can meet them all.
inline Hand decode_min(const Hand& b_hand, MessageId msg, const Coloring& col,
                       const Signature& sig) {
  detail::require_match(col, sig);
  detail::require_receiver_hand(b_hand, sig);
  if (sig.d() < 1)
    throw std::invalid_argument("minimal decoding needs c + r >= 1 unseen non-receiver cards");
  const auto carriers = detail::message_carriers(b_hand, msg, col, sig);
  if (carriers.empty())
    throw DecodeError(DecodeErrorCode::InconsistentAnnouncement,
                      "no hand outside " + format_hand(b_hand) + " announces message " +
                          std::to_string(msg));
  const Hand pool = complement(b_hand, sig.n());
  for (const Hand& s : enumerate_subsets(pool, sig.d())) {
    bool meets_all = true;
    for (const Hand& h : carriers) {
      if ((h & s).empty()) {
        meets_all = false;
        break;
      }
    }
    if (meets_all) return s;
  }
  throw DecodeError(DecodeErrorCode::NotMinimallyInformativeHere,
                    "every hand outside " + format_hand(b_hand) + " announces message " +
                        std::to_string(msg));
}

/// The one card named by minimal decoding when exactly one non-receiver card
/// is unseen (c + r = 1); a member of the sender's hand whenever the coloring
/// passes the minimal-informativeness check.
inline Card learned_card(const Hand& b_hand, MessageId msg, const Coloring& col,
                         const Signature& sig) {
  if (sig.d() != 1)
    throw std::invalid_argument("a single learned card requires c + r = 1, got c+r = " +
                                std::to_string(sig.d()));
  return decode_min(b_hand, msg, col, sig).lowest();
}

}  // namespace cardcodes
