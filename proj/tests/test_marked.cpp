#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "cycinv/marked.hpp"
#include "cycinv/stirling.hpp"
#include "oracles.hpp"

using cycinv::Cycle;
using cycinv::MarkedPermutation;
using cycinv::Permutation;
using cycinv::i64;

namespace {

MarkedPermutation parse(const char* text, int n) { return cycinv::parse_marked(text, n); }

}  // namespace

TEST_CASE("marked permutation requires the mark to be a cycle of the permutation") {
  const Permutation p({2, 3, 1, 4});
  CHECK_NOTHROW(MarkedPermutation(p, Cycle({1, 2, 3})));
  CHECK_NOTHROW(MarkedPermutation(p, Cycle({4})));
  CHECK_THROWS_AS(MarkedPermutation(p, Cycle({1, 2})), std::invalid_argument);
  CHECK_THROWS_AS(MarkedPermutation(p, Cycle({1, 3, 2})), std::invalid_argument);
  CHECK_THROWS_AS(MarkedPermutation(p, Cycle({5})), std::invalid_argument);
}

TEST_CASE("domain size equals the weighted stirling sum") {
  CHECK(cycinv::marked_count(2) == 3);
  CHECK(cycinv::marked_count(3) == 11);
  CHECK(cycinv::marked_count(4) == 50);
  CHECK(cycinv::marked_count(5) == 274);

  for (int n = 1; n <= 6; ++n) {
    i64 by_cycles = 0;
    cycinv::for_each_permutation(
        n, [&](const Permutation& p) { by_cycles += oracle::cycle_count(p); });
    CHECK(cycinv::marked_count(n) == by_cycles);

    i64 visited = 0;
    cycinv::for_each_marked(n, [&](const MarkedPermutation&) { ++visited; });
    CHECK(visited == cycinv::marked_count(n));
  }
}

TEST_CASE("signed cycle sum matches the closed form and an independent tally") {
  CHECK(cycinv::signed_cycle_sum(2) == 1);
  CHECK(cycinv::signed_cycle_sum(3) == -1);
  CHECK(cycinv::signed_cycle_sum(4) == 2);
  CHECK(cycinv::signed_cycle_sum(5) == -6);
  for (int n = 2; n <= 7; ++n) {
    const i64 rhs = (n % 2 == 0 ? 1 : -1) * cycinv::factorial(n - 2);
    CHECK(cycinv::signed_cycle_sum(n) == rhs);
  }
  for (int n = 2; n <= 5; ++n) {
    i64 tally = 0;
    cycinv::for_each_permutation(n, [&](const Permutation& p) {
      tally += static_cast<i64>(oracle::sign(p)) * oracle::cycle_count(p);
    });
    CHECK(cycinv::signed_cycle_sum(n) == tally);
  }
  CHECK_THROWS_AS(cycinv::signed_cycle_sum(1), std::domain_error);
}

TEST_CASE("phi pairs specific elements as expected") {
  const MarkedPermutation whole = parse("(1,2,3) | C=(1,2,3)", 3);
  const MarkedPermutation split = parse("(1,3)(2) | C=(1,3)", 3);
  CHECK(cycinv::phi(whole) == split);
  CHECK(cycinv::phi(split) == whole);

  const MarkedPermutation case1 = parse("(1,2)(3)(4) | C=(1,2)", 4);
  const MarkedPermutation case1_image = parse("(1,2)(3,4) | C=(1,2)", 4);
  CHECK(cycinv::phi(case1) == case1_image);
  CHECK(cycinv::phi(case1_image) == case1);

  const MarkedPermutation merge = parse("(1)(2) | C=(1)", 2);
  CHECK(cycinv::phi(merge) == parse("(1,2) | C=(1,2)", 2));

  const MarkedPermutation fixed = parse("(1)(2,3) | C=(2,3)", 3);
  CHECK(cycinv::phi(fixed) == fixed);
  CHECK(cycinv::is_phi_fixed(fixed));
  CHECK_FALSE(cycinv::is_phi_fixed(parse("(1)(2) | C=(1)", 2)));
  CHECK_FALSE(cycinv::is_phi_fixed(parse("(1)(2,3) | C=(1)", 3)));

  CHECK_THROWS_AS(cycinv::phi(MarkedPermutation(Permutation::identity(1), Cycle({1}))),
                  std::domain_error);
}

TEST_CASE("phi is a sign-reversing involution with the predicted fixed set") {
  for (int n = 2; n <= 6; ++n) {
    i64 fixed_count = 0;
    i64 signed_total = 0;
    cycinv::for_each_marked(n, [&](const MarkedPermutation& mp) {
      const int s = oracle::sign(mp.perm());
      signed_total += s;
      const MarkedPermutation image = cycinv::phi(mp);
      CHECK(cycinv::phi(image) == mp);
      if (image == mp) {
        ++fixed_count;
        CHECK(cycinv::is_phi_fixed(mp));
        CHECK(s == (n % 2 == 0 ? 1 : -1));
      } else {
        CHECK_FALSE(cycinv::is_phi_fixed(mp));
        CHECK(oracle::sign(image.perm()) == -s);
      }
    });
    CHECK(fixed_count == cycinv::factorial(n - 2));
    CHECK(signed_total == (n % 2 == 0 ? 1 : -1) * cycinv::factorial(n - 2));
  }
}

TEST_CASE("marked text form round-trips") {
  CHECK(cycinv::format_marked(parse("(1,2)(3) | C=(1,2)", 3)) == "(1,2)(3) | C=(1,2)");
  CHECK(cycinv::format_marked(parse("(2,3,1)(4)|C=(4)", 4)) == "(1,2,3)(4) | C=(4)");
  cycinv::for_each_marked(4, [&](const MarkedPermutation& mp) {
    CHECK(cycinv::parse_marked(cycinv::format_marked(mp), 4) == mp);
  });

  CHECK_THROWS_AS(parse("(1,2)(3)", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse("(1,2)(3) | (1,2)", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse("(1,2)(3) | C=(1,3)", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse("(1,2)(3) | C=(4)", 3), std::invalid_argument);
}
