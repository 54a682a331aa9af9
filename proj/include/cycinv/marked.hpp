#pragma once

#include <string>
#include <string_view>

#include "cycinv/permutation.hpp"

namespace cycinv {

/// A permutation together with one distinguished ("marked") cycle.
/// The sign of a marked permutation is sgn(perm).
class MarkedPermutation {
 public:
  /// Throws std::invalid_argument unless marked is a cycle of perm.
  MarkedPermutation(Permutation perm, Cycle marked);

  const Permutation& perm() const { return perm_; }
  const Cycle& marked() const { return marked_; }
  int size() const { return perm_.size(); }

  bool operator==(const MarkedPermutation&) const = default;

 private:
  Permutation perm_;
  Cycle marked_;
};

/// The sign-reversing involution on marked permutations of [n], n >= 2.
///
/// If the marked cycle C leaves at least two integers uncovered, multiply by
/// the transposition of the two smallest such integers; C is untouched.
/// Otherwise C covers n-1 or n integers: when 1 is outside C the input is a
/// fixed point; when 1 is inside, toggle between (a0)(1,a1,...,a_{n-2}) and
/// (1,a0,a1,...,a_{n-2}), re-marking the cycle that contains 1.
MarkedPermutation phi(const MarkedPermutation& mp);

/// True iff phi fixes mp: 1 is a 1-cycle and the other n-1 integers form the
/// marked cycle.
bool is_phi_fixed(const MarkedPermutation& mp);

/// Number of marked permutations of [n]: sum over i of c(n,i)*i.
i64 marked_count(int n);

/// Sum of sgn(perm) over all marked permutations of [n]; equals
/// (-1)^n * (n-2)!. Requires n >= 2.
i64 signed_cycle_sum(int n, int cap = kDefaultEnumerationCap);

/// "(1,2)(3) | C=(1,2)"
std::string format_marked(const MarkedPermutation& mp);
MarkedPermutation parse_marked(std::string_view text, int n);

/// Calls fn with every (perm, cycle) pair exactly once. Permutations come in
/// lexicographic image order; cycles of each permutation in canonical order.
template <typename F>
void for_each_marked(int n, F&& fn, int cap = kDefaultEnumerationCap) {
  for_each_permutation(
      n,
      [&](const Permutation& p) {
        for (Cycle& c : cycle_decomposition(p).cycles)
          fn(MarkedPermutation(p, std::move(c)));
      },
      cap);
}

}  // namespace cycinv
