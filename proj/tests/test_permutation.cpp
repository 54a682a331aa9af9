#include <doctest.h>

#include <set>
#include <stdexcept>
#include <vector>

#include "cycinv/permutation.hpp"
#include "oracles.hpp"

using cycinv::Cycle;
using cycinv::Permutation;
using cycinv::i64;

TEST_CASE("permutation construction validates the image") {
  const Permutation p({2, 3, 1, 5, 4});
  CHECK(p.size() == 5);
  CHECK(p(1) == 2);
  CHECK(p(3) == 1);
  CHECK(p(5) == 4);
  CHECK(Permutation::identity(4)(3) == 3);
  CHECK(Permutation::identity(1).size() == 1);

  CHECK_THROWS_AS(Permutation({1, 1, 3}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({0, 2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({2, 3, 4}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation(std::vector<int>{}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::identity(0), std::invalid_argument);
}

TEST_CASE("cycle canonicalizes to minimum-first rotation") {
  const Cycle c({3, 1, 2});
  CHECK(c.elements() == std::vector<int>{1, 2, 3});
  CHECK(c.min() == 1);
  CHECK(c.size() == 3);
  CHECK(c.contains(2));
  CHECK_FALSE(c.contains(4));
  CHECK(c.next(3) == 1);
  CHECK(c.prev(1) == 3);
  CHECK(Cycle({5}) == Cycle({5}));
  CHECK(Cycle({4, 9, 6}).elements() == std::vector<int>{4, 9, 6});

  CHECK_THROWS_AS(Cycle({}), std::invalid_argument);
  CHECK_THROWS_AS(Cycle({1, 2, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Cycle({0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(c.next(7), std::invalid_argument);
}

TEST_CASE("cycle decomposition partitions the ground set in canonical order") {
  const Permutation p({2, 3, 1, 5, 4, 6});
  const auto dec = cycinv::cycle_decomposition(p);
  REQUIRE(dec.cycles.size() == 3);
  CHECK(dec.cycles[0].elements() == std::vector<int>{1, 2, 3});
  CHECK(dec.cycles[1].elements() == std::vector<int>{4, 5});
  CHECK(dec.cycles[2].elements() == std::vector<int>{6});
  CHECK(dec.cycle_containing(5).min() == 4);
  CHECK(cycinv::cycle_through(p, 2).elements() == std::vector<int>{1, 2, 3});
  CHECK_THROWS_AS(dec.cycle_containing(9), std::invalid_argument);
}

TEST_CASE("cycle count and sign agree with independent oracles") {
  for (int n = 1; n <= 6; ++n) {
    cycinv::for_each_permutation(n, [&](const Permutation& p) {
      CHECK(cycinv::cycle_count(p) == oracle::cycle_count(p));
      CHECK(cycinv::sign(p) == oracle::sign(p));
    });
  }
  CHECK(cycinv::sign(Permutation::identity(7)) == +1);
  CHECK(cycinv::sign(Permutation({2, 1})) == -1);
  CHECK(cycinv::cycle_count(Permutation({2, 3, 1, 5, 4})) == 2);
}

TEST_CASE("left multiplication by a transposition merges or splits one cycle pair") {
  const Permutation p({2, 3, 1});
  const Permutation q = cycinv::left_multiply_transposition(1, 2, p);
  CHECK(q == Permutation({1, 3, 2}));

  for (int n = 2; n <= 5; ++n) {
    cycinv::for_each_permutation(n, [&](const Permutation& r) {
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
          const Permutation s = cycinv::left_multiply_transposition(i, j, r);
          for (int x = 1; x <= n; ++x) {
            const int y = r(x);
            const int expected = y == i ? j : (y == j ? i : y);
            CHECK(s(x) == expected);
          }
          CHECK(cycinv::sign(s) == -cycinv::sign(r));
          const int delta = cycinv::cycle_count(s) - cycinv::cycle_count(r);
          CHECK((delta == 1 || delta == -1));
          CHECK(cycinv::left_multiply_transposition(i, j, s) == r);
        }
    });
  }
  CHECK_THROWS_AS(cycinv::left_multiply_transposition(2, 2, p), std::invalid_argument);
  CHECK_THROWS_AS(cycinv::left_multiply_transposition(1, 4, p), std::invalid_argument);
}

TEST_CASE("cycle notation formats canonically and round-trips") {
  const Permutation p({2, 3, 1, 5, 4, 6});
  CHECK(cycinv::format_cycles(p) == "(1,2,3)(4,5)(6)");
  CHECK(cycinv::format_cycle(Cycle({5, 2, 9})) == "(2,9,5)");
  CHECK(cycinv::parse_cycle_notation("(1,2,3)(4,5)(6)", 6) == p);
  CHECK(cycinv::parse_cycle_notation("(3,1,2)(5,4)(6)", 6) == p);
  CHECK(cycinv::parse_cycle("(3,1,2)").elements() == std::vector<int>{1, 2, 3});

  for (int n = 1; n <= 5; ++n) {
    cycinv::for_each_permutation(n, [&](const Permutation& q) {
      CHECK(cycinv::parse_cycle_notation(cycinv::format_cycles(q), n) == q);
      std::vector<std::vector<int>> raw;
      for (const Cycle& c : cycinv::cycle_decomposition(q).cycles) raw.push_back(c.elements());
      CHECK(oracle::apply_cycles(raw, n) == q);
    });
  }
}

TEST_CASE("cycle notation parser rejects malformed text") {
  CHECK_THROWS_AS(cycinv::parse_cycle_notation("", 2), std::invalid_argument);
  CHECK_THROWS_AS(cycinv::parse_cycle_notation("(1,2", 2), std::invalid_argument);
  CHECK_THROWS_AS(cycinv::parse_cycle_notation("(1,2))", 2), std::invalid_argument);
  CHECK_THROWS_AS(cycinv::parse_cycle_notation("(1)(1)", 2), std::invalid_argument);
  CHECK_THROWS_AS(cycinv::parse_cycle_notation("(1)", 2), std::invalid_argument);
  CHECK_THROWS_AS(cycinv::parse_cycle_notation("(1,3)", 2), std::invalid_argument);
  CHECK_THROWS_AS(cycinv::parse_cycle_notation("(0,1)", 2), std::invalid_argument);
  CHECK_THROWS_AS(cycinv::parse_cycle_notation("(1, 2)", 2), std::invalid_argument);
  CHECK_THROWS_AS(cycinv::parse_cycle_notation("(1)(2) ", 2), std::invalid_argument);
  CHECK_THROWS_AS(cycinv::parse_cycle_notation("(1,2)x", 2), std::invalid_argument);
  CHECK_THROWS_AS(cycinv::parse_cycle_notation("()", 1), std::invalid_argument);
}

TEST_CASE("enumeration is lexicographic, complete, and capped") {
  std::vector<Permutation> seen;
  cycinv::for_each_permutation(3, [&](const Permutation& p) { seen.push_back(p); });
  REQUIRE(seen.size() == 6);
  CHECK(seen.front() == Permutation({1, 2, 3}));
  CHECK(seen[1] == Permutation({1, 3, 2}));
  CHECK(seen.back() == Permutation({3, 2, 1}));
  for (size_t t = 1; t < seen.size(); ++t) CHECK(seen[t - 1] < seen[t]);

  for (int n = 1; n <= 6; ++n) {
    i64 count = 0;
    std::set<std::vector<int>> distinct;
    cycinv::for_each_permutation(n, [&](const Permutation& p) {
      ++count;
      distinct.insert(p.image());
    });
    CHECK(count == cycinv::count_permutations(n));
    CHECK(static_cast<i64>(distinct.size()) == count);
  }

  CHECK(cycinv::all_permutations(4).size() == 24);
  CHECK_THROWS_AS(cycinv::for_each_permutation(11, [](const Permutation&) {}),
                  std::domain_error);
  CHECK_THROWS_AS(cycinv::for_each_permutation(6, [](const Permutation&) {}, 5),
                  std::domain_error);
}

TEST_CASE("count_permutations covers the exact 64-bit range") {
  CHECK(cycinv::count_permutations(1) == 1);
  CHECK(cycinv::count_permutations(5) == 120);
  CHECK(cycinv::count_permutations(20) == 2432902008176640000LL);
  CHECK_THROWS_AS(cycinv::count_permutations(21), std::domain_error);
}
