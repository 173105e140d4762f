#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "cardcodes/johnson.hpp"
#include "cardcodes/protocols.hpp"

using namespace cardcodes;

TEST_CASE("modular sum protocol on small hands", "[protocols]") {
  CHECK(chi_modn(6, Hand::of({0, 1, 3})) == 4);
  CHECK(chi_modn(7, Hand::of({0, 1, 2})) == 3);
  CHECK(chi_modn(7, Hand{}) == 0);
  CHECK_THROWS_AS(chi_modn(6, Hand::of({0, 6})), std::invalid_argument);
}

TEST_CASE("parity protocol on small hands", "[protocols]") {
  CHECK(chi_2(Hand::of({0, 1, 3})) == 0);
  CHECK(chi_2(Hand::of({0, 2, 4})) == 0);
  CHECK(chi_2(Hand::of({1, 2, 4})) == 1);
  for (Card x = 0; x < 10; ++x) CHECK(chi_2(Hand::of({x})) == static_cast<std::uint64_t>(x % 2));
}

TEST_CASE("modular sum colors every distance-1 graph properly", "[protocols]") {
  for (int n = 2; n <= 12; ++n) {
    for (int a = 1; a < n; ++a) {
      const auto hands = enumerate_hands(n, a);
      std::vector<std::uint64_t> value(hands.size());
      for (std::size_t i = 0; i < hands.size(); ++i) value[i] = chi_modn(n, hands[i]);
      for (std::size_t i = 0; i < hands.size(); ++i)
        for (std::size_t j = i + 1; j < hands.size(); ++j)
          if (intersection_size(hands[i], hands[j]) >= a - 1) CHECK(value[i] != value[j]);
    }
  }
}

TEST_CASE("field weights validate their parameters", "[protocols]") {
  const FieldWeights fw = make_field_weights(7);
  CHECK(fw.q == 7);
  CHECK(fw.w == std::vector<int>{0, 1, 2, 3, 4, 5, 6});
  CHECK(make_field_weights(8).q == 11);
  CHECK(make_field_weights(7, 13).q == 13);
  CHECK_THROWS_AS(make_field_weights(7, 6), std::invalid_argument);   // not prime
  CHECK_THROWS_AS(make_field_weights(7, 5), std::invalid_argument);   // below deck size
  CHECK_THROWS_AS(make_field_weights(7, 7, {0, 1, 2, 3, 4, 5, 5}), std::invalid_argument);
  CHECK_THROWS_AS(make_field_weights(7, 7, {0, 1, 2, 3, 4, 5, 7}), std::invalid_argument);
  CHECK_THROWS_AS(make_field_weights(7, 7, {0, 1}), std::invalid_argument);
}

TEST_CASE("symmetric polynomial messages match direct evaluation", "[protocols]") {
  const FieldWeights fw = make_field_weights(7);
  CHECK(chi_gf_vector(fw, 2, Hand::of({0, 1, 4})) == std::vector<int>{5, 4});
  CHECK(chi_gf_vector(fw, 2, Hand::of({0, 2, 3})) == std::vector<int>{5, 6});
  CHECK(chi_gf(fw, 2, Hand::of({0, 1, 4})) == 5 * 7 + 4);
  CHECK(chi_gf(fw, 2, Hand::of({0, 2, 3})) == 5 * 7 + 6);

  // One coordinate is the plain sum of the cards modulo q.
  for (int n = 4; n <= 9; ++n) {
    const FieldWeights w = make_field_weights(n);
    for (Hand h : enumerate_hands(n, 3)) {
      std::uint64_t sum = 0;
      for (Card c : h.cards()) sum += static_cast<std::uint64_t>(c);
      CHECK(chi_gf(w, 1, h) == sum % static_cast<std::uint64_t>(w.q));
    }
  }
}

TEST_CASE("symmetric polynomial messages separate close hands", "[protocols]") {
  for (int n = 4; n <= 8; ++n) {
    const FieldWeights fw = make_field_weights(n);
    for (int a = 1; a < n; ++a) {
      const int dmax = std::min(a, n - a) - 1;
      for (int d = 1; d <= dmax; ++d) {
        const auto hands = enumerate_hands(n, a);
        std::vector<std::uint64_t> value(hands.size());
        for (std::size_t i = 0; i < hands.size(); ++i) value[i] = chi_gf(fw, d, hands[i]);
        for (std::size_t i = 0; i < hands.size(); ++i)
          for (std::size_t j = i + 1; j < hands.size(); ++j)
            if (intersection_size(hands[i], hands[j]) >= a - d) CHECK(value[i] != value[j]);
      }
    }
  }
}

TEST_CASE("message counts stay within the field bound", "[protocols]") {
  const Signature sig = make_signature(3, 2, 2, 0);
  const Coloring col = tabulate_chi_gf(sig, 2);
  const int q = make_field_weights(sig.n()).q;
  CHECK(col.message_count <= q * q);
  CHECK(static_cast<std::uint64_t>(q) * q <= 4ULL * sig.n() * sig.n());  // q <= 2n
  CHECK(col.message_count <= 49);
  CHECK(col.source_vectors.size() == col.ids.size());
}

TEST_CASE("adding one to every card adds the hand size to the message", "[protocols]") {
  for (int n = 3; n <= 10; ++n) {
    for (int a = 1; a < n; ++a) {
      for (Hand h : enumerate_hands(n, a)) {
        Hand shifted;
        for (Card c : h.cards()) shifted = shifted.with((c + 1) % n);
        CHECK(chi_modn(n, shifted) ==
              (chi_modn(n, h) + static_cast<std::uint64_t>(a)) % static_cast<std::uint64_t>(n));
      }
    }
  }
}

TEST_CASE("every message is reachable by a nearly-consecutive hand", "[protocols]") {
  // For 2 <= a <= n/2, any start x1 and target message M admit a hand with at
  // least a-1 consecutive cards beginning at x1 or x1+1 whose card sum is M.
  for (int n = 4; n <= 12; ++n) {
    for (int a = 2; 2 * a <= n; ++a) {
      for (int x1 = 0; x1 < n; ++x1) {
        std::set<std::uint64_t> sums;
        for (int r = a - 1; r <= 2 * a - 2; ++r) {
          Hand h;
          for (int t = 0; t <= a - 2; ++t) h = h.with((x1 + t) % n);
          h = h.with((x1 + r) % n);
          REQUIRE(h.size() == a);
          sums.insert(chi_modn(n, h));
        }
        for (int r = 2 * a - 1; r <= n + a - 2; ++r) {
          Hand h;
          for (int t = 0; t <= a - 2; ++t) h = h.with((x1 + 1 + t) % n);
          h = h.with((x1 + r - a + 1) % n);
          REQUIRE(h.size() == a);
          sums.insert(chi_modn(n, h));
        }
        CHECK(sums.size() == static_cast<std::size_t>(n));
      }
    }
  }
}

TEST_CASE("tabulation produces normalized colorings", "[protocols]") {
  const Coloring modn = tabulate_chi_modn(make_signature(3, 3, 1, 0));
  CHECK(modn.message_count == 7);
  CHECK(modn.ids.size() == 35);
  CHECK(id_of(modn, Hand::of({0, 1, 3})) == 4);
  CHECK(modn.source_values.empty());  // sums already form contiguous ids

  CHECK(tabulate_chi_2(make_signature(3, 2, 1, 1)).message_count == 2);

  const Coloring sparse = make_coloring(4, 2, {5, 3, 3, 9, 5, 7});
  CHECK(sparse.message_count == 4);
  CHECK(sparse.ids == std::vector<MessageId>{1, 0, 0, 3, 1, 2});
  CHECK(sparse.source_values == std::vector<std::uint64_t>{5, 3, 3, 9, 5, 7});

  CHECK_THROWS_AS(make_coloring(4, 2, {0, 1}), std::invalid_argument);
}

TEST_CASE("duality complements hands and swaps the signature roles", "[protocols]") {
  const Signature sig = make_signature(3, 3, 1, 0);
  const Coloring modn = tabulate_chi_modn(sig);
  const auto [dual, dual_sig] = dual_protocol(modn, sig);
  CHECK(format_signature(dual_sig) == "4,2,1,0");
  CHECK(dual.a == 4);
  CHECK(id_of(dual, Hand::of({0, 1, 2, 3})) == 1);  // complement {4,5,6} sums to 15 = 1 mod 7
  for (Hand h : enumerate_hands(7, 4))
    CHECK(id_of(dual, h) == id_of(modn, complement(h, 7)));

  const auto [back, back_sig] = dual_protocol(dual, dual_sig);
  CHECK(format_signature(back_sig) == format_signature(sig));
  CHECK(back.ids == modn.ids);
  CHECK(back.message_count == modn.message_count);

  CHECK_THROWS_AS(dual_protocol(tabulate_chi_modn(make_signature(3, 2, 2, 0)),
                                make_signature(3, 2, 2, 0)),
                  std::invalid_argument);
  CHECK_THROWS_AS(dual_protocol(tabulate_chi_modn(make_signature(3, 3, 0, 0)),
                                make_signature(3, 3, 0, 0)),
                  std::invalid_argument);
}

TEST_CASE("message reduction folds ids to the guaranteed count", "[protocols]") {
  const Signature sig = make_signature(3, 3, 1, 0);
  const Coloring modn = tabulate_chi_modn(sig);
  const Coloring reduced = reduce_protocol(modn, sig);
  CHECK(reduced.message_count == 3);  // ceil(7 / (C(4,3)-1))
  CHECK(id_of(reduced, Hand::of({0, 1, 3})) == 1);
  CHECK(reduced.source_values.size() == reduced.ids.size());
  for (std::size_t i = 0; i < reduced.ids.size(); ++i)
    CHECK(reduced.ids[i] == modn.ids[i] % 3);

  const Coloring parity = tabulate_chi_2(sig);
  CHECK(reduce_protocol(parity, sig).message_count == 1);  // 2 messages <= p-1 = 3

  CHECK_THROWS_AS(reduce_protocol(tabulate_chi_modn(make_signature(3, 3, 0, 0)),
                                  make_signature(3, 3, 0, 0)),
                  std::invalid_argument);
}

TEST_CASE("built-in colorings load with their documented shapes", "[protocols]") {
  CHECK(fixture_names().size() == 5);
  for (const std::string& name : fixture_names()) {
    const Fixture f = builtin_fixture(name);
    CHECK(f.name == name);
    CHECK(f.coloring.n == f.sig.n());
    CHECK(f.coloring.a == f.sig.a);
    CHECK(f.coloring.ids.size() == binomial(f.sig.n(), f.sig.a));
  }

  auto sorted_sizes = [](const Coloring& col) {
    auto s = class_sizes(col);
    std::sort(s.begin(), s.end());
    return s;
  };
  CHECK(sorted_sizes(builtin_fixture("six_chi").coloring) ==
        std::vector<std::uint64_t>{4, 5, 6, 6, 7, 7});
  CHECK(sorted_sizes(builtin_fixture("six_chi1").coloring) ==
        std::vector<std::uint64_t>{5, 5, 6, 6, 6, 7});
  CHECK(sorted_sizes(builtin_fixture("six_chi2").coloring) ==
        std::vector<std::uint64_t>{5, 5, 5, 6, 7, 7});
  CHECK(class_sizes(builtin_fixture("two_msg_331").coloring) ==
        std::vector<std::uint64_t>{21, 14});
  CHECK(class_sizes(builtin_fixture("j42_safe").coloring) ==
        std::vector<std::uint64_t>{2, 2, 2});

  const Coloring chi = builtin_fixture("six_chi").coloring;
  const Coloring chi1 = builtin_fixture("six_chi1").coloring;
  CHECK(id_of(chi, Hand::of({0, 1, 2})) == 0);
  CHECK(id_of(chi1, Hand::of({0, 1, 2})) == 5);
  int differing = 0;
  for (std::size_t i = 0; i < chi.ids.size(); ++i)
    if (chi.ids[i] != chi1.ids[i]) ++differing;
  CHECK(differing == 1);

  CHECK(format_signature(builtin_fixture("j42_safe").sig) == "2,1,0,1");
  CHECK(format_signature(builtin_fixture("six_chi1").sig) == "3,3,0,1");
  CHECK_THROWS_AS(builtin_fixture("nope"), std::invalid_argument);
}

TEST_CASE("coloring files round-trip bit-exactly", "[protocols]") {
  const std::string golden =
      "# cardcodes-coloring v1\n"
      "n=4 a=2\n"
      "0,1 0\n"
      "0,2 1\n"
      "0,3 2\n"
      "1,2 2\n"
      "1,3 1\n"
      "2,3 0\n";
  CHECK(write_coloring(builtin_fixture("j42_safe").coloring) == golden);
  CHECK(read_coloring(golden).ids == builtin_fixture("j42_safe").coloring.ids);

  for (const std::string& name : fixture_names()) {
    const Coloring col = builtin_fixture(name).coloring;
    const Coloring back = read_coloring(write_coloring(col));
    CHECK(back.ids == col.ids);
    CHECK(back.message_count == col.message_count);
    CHECK(write_coloring(back) == write_coloring(col));
  }
}

TEST_CASE("coloring parser accepts reordered rows and normalizes sparse ids", "[protocols]") {
  const Coloring shuffled = read_coloring(
      "# cardcodes-coloring v1\n"
      "n=4 a=2\n"
      "2,3 8\n"
      "0,1 0\n"
      "0,3 4\n"
      "0,2 0\n"
      "1,3 8\n"
      "1,2 4\n");
  CHECK(shuffled.message_count == 3);
  CHECK(shuffled.ids == std::vector<MessageId>{0, 0, 1, 1, 2, 2});
  CHECK(shuffled.source_values == std::vector<std::uint64_t>{0, 0, 4, 4, 8, 8});
}

TEST_CASE("coloring parser rejects malformed input", "[protocols]") {
  const std::string good =
      "# cardcodes-coloring v1\n"
      "n=4 a=2\n"
      "0,1 0\n0,2 1\n0,3 2\n1,2 2\n1,3 1\n2,3 0\n";
  CHECK_NOTHROW(read_coloring(good));
  CHECK_THROWS_AS(read_coloring("junk\n"), std::invalid_argument);
  CHECK_THROWS_AS(read_coloring("# cardcodes-coloring v1\n"), std::invalid_argument);
  CHECK_THROWS_AS(read_coloring("# cardcodes-coloring v1\nn=4 b=2\n"), std::invalid_argument);
  CHECK_THROWS_AS(read_coloring("# cardcodes-coloring v1\nn=4 a=2 x\n"), std::invalid_argument);
  // missing hand
  CHECK_THROWS_AS(read_coloring("# cardcodes-coloring v1\nn=4 a=2\n0,1 0\n"),
                  std::invalid_argument);
  // duplicate hand
  CHECK_THROWS_AS(read_coloring("# cardcodes-coloring v1\nn=4 a=2\n"
                                "0,1 0\n0,1 1\n0,3 2\n1,2 2\n1,3 1\n2,3 0\n"),
                  std::invalid_argument);
  // trailing garbage
  CHECK_THROWS_AS(read_coloring(good + "extra\n"), std::invalid_argument);
  CHECK_THROWS_AS(read_coloring(good + "0,1 0\n"), std::invalid_argument);
  // oversized and malformed message ids
  CHECK_THROWS_AS(read_coloring("# cardcodes-coloring v1\nn=4 a=2\n"
                                "0,1 2147483648\n0,2 1\n0,3 2\n1,2 2\n1,3 1\n2,3 0\n"),
                  std::invalid_argument);
  CHECK_THROWS_AS(read_coloring("# cardcodes-coloring v1\nn=4 a=2\n"
                                "0,1 x\n0,2 1\n0,3 2\n1,2 2\n1,3 1\n2,3 0\n"),
                  std::invalid_argument);
  // wrong hand size
  CHECK_THROWS_AS(read_coloring("# cardcodes-coloring v1\nn=4 a=2\n"
                                "0,1,2 0\n0,2 1\n0,3 2\n1,2 2\n1,3 1\n2,3 0\n"),
                  std::invalid_argument);
}

TEST_CASE("complement transform works for any signature", "[protocols]") {
  const Signature sig = make_signature(3, 2, 2, 0);
  const Coloring col = tabulate_chi_modn(sig);
  const Coloring comp = complement_coloring(col);
  CHECK(comp.a == 4);
  CHECK(comp.message_count == col.message_count);
  for (Hand h : enumerate_hands(7, 4)) CHECK(id_of(comp, h) == id_of(col, complement(h, 7)));
}
