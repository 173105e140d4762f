#pragma once

// Message assignments over all a-card hands (vertex colorings): normalization
// to contiguous message ids, class bookkeeping, and the coloring text format.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cardcodes/deck.hpp"

namespace cardcodes {

using MessageId = std::uint32_t;

/// A total assignment of messages to all a-card hands from a deck of n cards.
/// Ids are normalized: exactly {0..message_count-1} are used. The entry for a
/// hand sits at the hand's canonical (lexicographic) rank.
struct Coloring {
  int n = 0;
  int a = 0;
  std::vector<MessageId> ids;
  MessageId message_count = 0;
  /// Raw per-hand values seen before id normalization (empty when the source
  /// already used contiguous ids).
  std::vector<std::uint64_t> source_values;
  /// Per-hand message vectors for protocols whose messages are tuples of
  /// field elements (empty otherwise).
  std::vector<std::vector<int>> source_vectors;
  /// Free-form description of how the coloring was produced.
  std::string note;
};

/// Builds a normalized coloring from one raw value per hand (canonical hand
/// order). Distinct raw values are mapped order-preservingly onto 0..k-1; the
/// raw values are kept in source_values unless they were already normalized.
inline Coloring make_coloring(int n, int a, const std::vector<std::uint64_t>& raw,
                              std::string note = "") {
  detail::require_deck(n);
  if (a < 0 || a > n) throw std::invalid_argument("hand size must satisfy 0 <= a <= n");
  if (raw.size() != binomial(n, a))
    throw std::invalid_argument("coloring needs one value per hand: expected " +
                                std::to_string(binomial(n, a)) + ", got " +
                                std::to_string(raw.size()));
  std::vector<std::uint64_t> distinct = raw;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  std::map<std::uint64_t, MessageId> dense;
  for (std::size_t i = 0; i < distinct.size(); ++i)
    dense[distinct[i]] = static_cast<MessageId>(i);

  Coloring col;
  col.n = n;
  col.a = a;
  col.message_count = static_cast<MessageId>(distinct.size());
  col.ids.reserve(raw.size());
  bool already_normal = true;
  for (std::uint64_t v : raw) {
    const MessageId id = dense.at(v);
    col.ids.push_back(id);
    already_normal = already_normal && v == id;
  }
  if (!already_normal) col.source_values = raw;
  col.note = std::move(note);
  return col;
}

inline MessageId id_of(const Coloring& col, Hand h) {
  if (h.size() != col.a)
    throw std::invalid_argument("hand " + format_hand(h) + " does not have " +
                                std::to_string(col.a) + " cards");
  return col.ids[hand_rank(h, col.n)];
}

inline std::vector<std::uint64_t> class_sizes(const Coloring& col) {
  std::vector<std::uint64_t> sizes(col.message_count, 0);
  for (MessageId id : col.ids) ++sizes[id];
  return sizes;
}

inline std::vector<Hand> class_members(const Coloring& col, MessageId msg) {
  std::vector<Hand> members;
  const auto hands = enumerate_hands(col.n, col.a);
  for (std::size_t i = 0; i < hands.size(); ++i)
    if (col.ids[i] == msg) members.push_back(hands[i]);
  return members;
}

inline std::string write_coloring(const Coloring& col) {
  std::ostringstream out;
  out << "# cardcodes-coloring v1\n";
  out << "n=" << col.n << " a=" << col.a << "\n";
  const auto hands = enumerate_hands(col.n, col.a);
  for (std::size_t i = 0; i < hands.size(); ++i)
    out << format_hand(hands[i]) << ' ' << col.ids[i] << '\n';
  return out.str();
}

inline Coloring read_coloring(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != "# cardcodes-coloring v1")
    throw std::invalid_argument("coloring file must start with '# cardcodes-coloring v1'");
  if (!std::getline(in, line))
    throw std::invalid_argument("coloring file is missing the 'n=<int> a=<int>' line");
  int n = -1, a = -1;
  {
    std::istringstream header(line);
    std::string n_part, a_part;
    if (!(header >> n_part >> a_part) || (header >> std::ws, !header.eof()) ||
        n_part.rfind("n=", 0) != 0 || a_part.rfind("a=", 0) != 0)
      throw std::invalid_argument("bad dimension line '" + line + "'");
    try {
      std::size_t used = 0;
      n = std::stoi(n_part.substr(2), &used);
      if (used != n_part.size() - 2) throw std::invalid_argument("");
      a = std::stoi(a_part.substr(2), &used);
      if (used != a_part.size() - 2) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw std::invalid_argument("bad dimension line '" + line + "'");
    }
  }
  detail::require_deck(n);
  if (a < 0 || a > n) throw std::invalid_argument("bad dimension line '" + line + "'");

  const std::uint64_t expected = binomial(n, a);
  std::vector<std::uint64_t> raw(expected, 0);
  std::vector<bool> seen(expected, false);
  std::uint64_t rows = 0;
  while (std::getline(in, line)) {
    if (line.empty() && in.eof()) break;  // tolerate one trailing newline
    std::istringstream row(line);
    std::string hand_text, id_text;
    if (!(row >> hand_text >> id_text) || (row >> std::ws, !row.eof()))
      throw std::invalid_argument("bad coloring row '" + line + "'");
    const Hand h = parse_hand(hand_text, n);
    if (h.size() != a)
      throw std::invalid_argument("hand " + hand_text + " does not have " + std::to_string(a) +
                                  " cards");
    std::uint64_t id = 0;
    try {
      std::size_t used = 0;
      id = std::stoull(id_text, &used);
      if (used != id_text.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw std::invalid_argument("bad message id '" + id_text + "'");
    }
    if (id >= (1ULL << 31)) throw std::invalid_argument("message id " + id_text + " is too large");
    const std::uint64_t rank = hand_rank(h, n);
    if (seen[rank]) throw std::invalid_argument("duplicate hand " + hand_text);
    seen[rank] = true;
    raw[rank] = id;
    ++rows;
  }
  if (rows != expected)
    throw std::invalid_argument("coloring lists " + std::to_string(rows) + " hands, expected " +
                                std::to_string(expected));
  return make_coloring(n, a, raw);
}

inline void save_coloring(const Coloring& col, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write coloring file '" + path + "'");
  out << write_coloring(col);
  if (!out.flush()) throw std::runtime_error("failed writing coloring file '" + path + "'");
}

inline Coloring load_coloring(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read coloring file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return read_coloring(buf.str());
}

}  // namespace cardcodes
