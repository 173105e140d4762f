#include <catch2/catch_amalgamated.hpp>

#include "cardcodes/deck.hpp"

using namespace cardcodes;

TEST_CASE("hand enumeration is lexicographic on sorted card lists", "[deck]") {
  const auto hands = enumerate_hands(4, 2);
  REQUIRE(hands.size() == 6);
  CHECK(hands[0] == Hand::of({0, 1}));
  CHECK(hands[1] == Hand::of({0, 2}));
  CHECK(hands[2] == Hand::of({0, 3}));
  CHECK(hands[3] == Hand::of({1, 2}));
  CHECK(hands[4] == Hand::of({1, 3}));
  CHECK(hands[5] == Hand::of({2, 3}));

  CHECK(enumerate_hands(7, 3).size() == 35);

  const auto empties = enumerate_hands(3, 0);
  REQUIRE(empties.size() == 1);
  CHECK(empties[0].empty());
}

TEST_CASE("hand enumeration counts, uniqueness and order for all small decks", "[deck]") {
  for (int n = 0; n <= 10; ++n) {
    for (int m = 0; m <= n; ++m) {
      const auto hands = enumerate_hands(n, m);
      REQUIRE(hands.size() == binomial(n, m));
      for (std::size_t i = 0; i + 1 < hands.size(); ++i) {
        CHECK(hands[i].cards() < hands[i + 1].cards());  // strict lexicographic order
      }
      for (std::size_t i = 0; i < hands.size(); ++i) {
        CHECK(hands[i].size() == m);
        CHECK(hand_rank(hands[i], n) == i);
      }
    }
  }
}

TEST_CASE("enumeration rejects impossible dimensions", "[deck]") {
  CHECK_THROWS_AS(enumerate_hands(3, 4), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_hands(-1, 0), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_hands(65, 1), std::invalid_argument);
}

TEST_CASE("complement flips a hand within the deck", "[deck]") {
  CHECK(complement(Hand::of({4, 5, 6}), 7) == Hand::of({0, 1, 2, 3}));
  CHECK(complement(Hand{}, 5) == Hand::of({0, 1, 2, 3, 4}));
  for (int n = 1; n <= 9; ++n) {
    for (Hand h : enumerate_hands(n, n / 2)) {
      CHECK(complement(complement(h, n), n) == h);
      CHECK(h.size() + complement(h, n).size() == n);
    }
  }
  CHECK_THROWS_AS(complement(Hand::of({7}), 7), std::invalid_argument);
}

TEST_CASE("signatures validate their fields", "[deck]") {
  CHECK(make_signature(3, 3, 1, 0).n() == 7);
  CHECK(make_signature(3, 3, 0, 1).n() == 7);
  CHECK(make_signature(1, 1, 0, 0).n() == 2);
  CHECK(make_signature(3, 3, 1, 0).d() == 1);
  CHECK_THROWS_AS(make_signature(0, 3, 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(make_signature(3, 0, 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(make_signature(3, 3, -1, 0), std::invalid_argument);
  CHECK_THROWS_AS(make_signature(40, 30, 0, 0), std::invalid_argument);
}

TEST_CASE("signature text form round-trips", "[deck]") {
  const Signature s = parse_signature("3,3,1,0");
  CHECK(s.a == 3);
  CHECK(s.b == 3);
  CHECK(s.c == 1);
  CHECK(s.r == 0);
  CHECK(format_signature(s) == "3,3,1,0");
  CHECK_THROWS_AS(parse_signature("3,3,1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_signature("3,3,x,0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_signature(""), std::invalid_argument);
}

TEST_CASE("hand text form round-trips and rejects malformed input", "[deck]") {
  CHECK(format_hand(Hand::of({0, 1, 3})) == "0,1,3");
  CHECK(format_hand(Hand{}) == "-");
  CHECK(parse_hand("0,1,3", 7) == Hand::of({0, 1, 3}));
  CHECK(parse_hand("-", 7) == Hand{});
  for (Hand h : enumerate_hands(9, 4)) CHECK(parse_hand(format_hand(h), 9) == h);
  CHECK_THROWS_AS(parse_hand("", 7), std::invalid_argument);
  CHECK_THROWS_AS(parse_hand("0,0,1", 7), std::invalid_argument);
  CHECK_THROWS_AS(parse_hand("3,1", 7), std::invalid_argument);
  CHECK_THROWS_AS(parse_hand("0,7", 7), std::invalid_argument);
  CHECK_THROWS_AS(parse_hand("0,1,", 7), std::invalid_argument);
  CHECK_THROWS_AS(parse_hand("0;1", 7), std::invalid_argument);
}

TEST_CASE("deal validity checks sizes and disjointness", "[deck]") {
  const Signature sig = make_signature(3, 3, 1, 0);
  CHECK(deal_valid(sig, Deal{Hand::of({0, 1, 2}), Hand::of({3, 4, 5}), Hand::of({6})}));
  CHECK_FALSE(deal_valid(sig, Deal{Hand::of({0, 1, 2}), Hand::of({2, 4, 5}), Hand::of({6})}));

  const Signature with_leftover = make_signature(3, 3, 1, 1);
  CHECK(deal_valid(with_leftover, Deal{Hand::of({0, 1, 2}), Hand::of({3, 4, 5}), Hand::of({6})}));
  CHECK(deal_valid(with_leftover, Deal{Hand::of({0, 1, 2}), Hand::of({3, 4, 5}), Hand::of({7})}));
  CHECK_FALSE(deal_valid(with_leftover, Deal{Hand::of({0, 1, 2}), Hand::of({3, 4, 5}), Hand::of({8})}));
  CHECK_FALSE(deal_valid(sig, Deal{Hand::of({0, 1}), Hand::of({3, 4, 5}), Hand::of({6})}));
}

TEST_CASE("deal enumeration covers exactly the valid deals", "[deck]") {
  const Signature sig = make_signature(3, 3, 1, 0);
  const auto deals = enumerate_deals(sig);
  CHECK(deals.size() == binomial(7, 3) * binomial(4, 3) * binomial(1, 1));
  CHECK(deals.size() == 140);
  for (const Deal& d : deals) CHECK(deal_valid(sig, d));

  const Signature weak = make_signature(2, 1, 0, 1);
  const auto weak_deals = enumerate_deals(weak);
  CHECK(weak_deals.size() == binomial(4, 2) * binomial(2, 1));
  for (const Deal& d : weak_deals) {
    CHECK(deal_valid(weak, d));
    CHECK((d.a | d.b | d.c).size() == weak.n() - weak.r);
  }
}

TEST_CASE("binomial coefficients are exact", "[deck]") {
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(7, 3) == 35);
  CHECK(binomial(12, 6) == 924);
  CHECK(binomial(5, 9) == 0);
  CHECK(binomial(64, 32) == 1832624140942590534ULL);
}
