// Searches for a two-message protocol on seven cards from scratch, then
// re-verifies the find and prints its color classes.

#include <iostream>

#include "cardcodes/search.hpp"
#include "cardcodes/verify.hpp"

int main() {
  using namespace cardcodes;

  const Signature sig = make_signature(3, 3, 1, 0);
  Constraints cons;
  cons.informativeness = Informativeness::MinInformative;
  cons.safety = Safety::Safe;
  cons.k = 2;

  const SearchResult res = find_coloring(sig, cons);
  std::cout << "search outcome: " << to_string(res.outcome) << " after " << res.nodes_explored
            << " nodes (" << res.elapsed_seconds << "s)\n";
  if (res.outcome != SearchOutcome::Sat) return 1;

  const Coloring& col = *res.coloring;
  for (MessageId m = 0; m < col.message_count; ++m) {
    std::cout << "message " << m << ":";
    for (Hand h : class_members(col, m)) std::cout << " " << format_hand(h);
    std::cout << "\n";
  }

  const bool min_ok = check_min_informative(col, sig).verdict;
  const bool safe_ok = check_safe(col, sig).verdict;
  std::cout << "re-verified: min-informative=" << (min_ok ? "true" : "false")
            << " safe=" << (safe_ok ? "true" : "false") << "\n";
  return min_ok && safe_ok ? 0 : 1;
}
