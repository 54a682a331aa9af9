#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cycinv {

using i64 = std::int64_t;

/// Largest n accepted by the exhaustive enumerators (n! elements).
inline constexpr int kDefaultEnumerationCap = 10;

/// A bijection on [n] = {1,...,n}, stored as its image sequence.
/// All element arguments and results are 1-based.
class Permutation {
 public:
  /// image[x-1] = pi(x). Throws std::invalid_argument unless image is a
  /// bijection of [n] with n >= 1.
  explicit Permutation(std::vector<int> image);

  static Permutation identity(int n);

  int size() const { return static_cast<int>(image_.size()); }

  /// pi(x) for x in [n].
  int operator()(int x) const { return image_[static_cast<size_t>(x) - 1]; }

  const std::vector<int>& image() const { return image_; }

  bool operator==(const Permutation&) const = default;
  bool operator<(const Permutation& rhs) const { return image_ < rhs.image_; }

 private:
  std::vector<int> image_;
};

/// One cycle (a1,...,am) of a permutation, canonically rotated so the
/// minimum element comes first. Each element maps to its successor,
/// cyclically.
class Cycle {
 public:
  /// Accepts any rotation; canonicalizes. Throws std::invalid_argument on
  /// an empty sequence, duplicates, or non-positive elements.
  explicit Cycle(std::vector<int> elements);

  const std::vector<int>& elements() const { return elems_; }
  int size() const { return static_cast<int>(elems_.size()); }
  int min() const { return elems_.front(); }
  bool contains(int x) const;

  /// Successor of x within the cycle. Throws std::invalid_argument if x is
  /// not an element.
  int next(int x) const;
  /// Predecessor of x within the cycle.
  int prev(int x) const;

  bool operator==(const Cycle&) const = default;

 private:
  std::vector<int> elems_;
};

/// All cycles of a permutation, sorted by minimum element; they partition [n].
struct CycleDecomposition {
  std::vector<Cycle> cycles;

  const Cycle& cycle_containing(int x) const;
};

CycleDecomposition cycle_decomposition(const Permutation& p);

/// The cycle of p containing x (canonical rotation).
Cycle cycle_through(const Permutation& p, int x);

/// Number of cycles of p, counting fixed points.
int cycle_count(const Permutation& p);

/// sgn(p) = (-1)^(n - cyc(p)), +1 or -1.
int sign(const Permutation& p);

/// tau_{ij} * p, the composition x -> tau_{ij}(p(x)). Requires i != j.
/// Merges or splits exactly one pair of cycles, so the sign always flips.
Permutation left_multiply_transposition(int i, int j, const Permutation& p);

/// Parses cycle notation, grammar: ( '(' int (',' int)* ')' )+ with no
/// whitespace. Every element of [n] must appear exactly once; fixed points
/// are written as 1-cycles.
Permutation parse_cycle_notation(std::string_view text, int n);

/// Parses one parenthesized group "(a,b,c)" into a Cycle.
Cycle parse_cycle(std::string_view text);

std::string format_cycle(const Cycle& c);
std::string format_cycles(const CycleDecomposition& d);
/// Canonical cycle-notation string of p; round-trips with
/// parse_cycle_notation.
std::string format_cycles(const Permutation& p);

i64 count_permutations(int n);  // n!, n <= 20

/// Calls fn with each of the n! permutations of [n] exactly once, in
/// lexicographic order of the image sequence. Throws std::domain_error if
/// n exceeds the cap.
template <typename F>
void for_each_permutation(int n, F&& fn, int cap = kDefaultEnumerationCap) {
  if (n < 1) throw std::invalid_argument("for_each_permutation: n must be >= 1");
  if (n > cap)
    throw std::domain_error("for_each_permutation: n exceeds enumeration cap " +
                            std::to_string(cap));
  std::vector<int> image(static_cast<size_t>(n));
  std::iota(image.begin(), image.end(), 1);
  do {
    fn(Permutation(image));
  } while (std::next_permutation(image.begin(), image.end()));
}

std::vector<Permutation> all_permutations(int n, int cap = kDefaultEnumerationCap);

}  // namespace cycinv
