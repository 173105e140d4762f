// Walks one seven-card deal through the two-message protocol: the sender
// announces, the receiver decodes a card, and the eavesdropper's view stays
// ambiguous for every card she does not hold.

#include <iostream>

#include "cardcodes/decode.hpp"
#include "cardcodes/protocols.hpp"
#include "cardcodes/verify.hpp"

int main() {
  using namespace cardcodes;

  const Fixture fx = builtin_fixture("two_msg_331");
  const Signature sig = fx.sig;  // 3,3,1,0: seven cards, one with the eavesdropper
  std::cout << "protocol: " << fx.name << " on signature " << format_signature(sig) << " ("
            << fx.coloring.message_count << " messages)\n";

  const Hand alice = Hand::of({1, 2, 5});
  const Hand bob = Hand::of({0, 4, 6});
  const Hand cath = Hand::of({3});
  std::cout << "deal: A=" << format_hand(alice) << "  B=" << format_hand(bob)
            << "  C=" << format_hand(cath) << "\n";

  const MessageId msg = id_of(fx.coloring, alice);
  std::cout << "A announces message " << msg << "\n";

  // B cannot name A's whole hand from two messages, but always learns a
  // small set guaranteed to meet it -- here a single card.
  const Hand met = decode_min(bob, msg, fx.coloring, sig);
  std::cout << "B deduces that A holds a card of " << format_hand(met) << " -> card "
            << static_cast<int>(learned_card(bob, msg, fx.coloring, sig)) << "\n";

  // C sees the same message but, for every card she does not hold, both
  // worlds stay open: some consistent hand contains it, another avoids it.
  std::cout << "C (holding " << format_hand(cath) << ") considers:";
  for (Hand h : class_members(fx.coloring, msg))
    if (h.disjoint_with(cath)) std::cout << " " << format_hand(h);
  std::cout << "\n";

  const Report safe = check_safe(fx.coloring, sig);
  std::cout << "safety check over all eavesdropper hands: "
            << (safe.verdict ? "passes" : "fails") << " (" << safe.checked_count
            << " class inspections)\n";
  return safe.verdict ? 0 : 1;
}
