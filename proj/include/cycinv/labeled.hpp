#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cycinv/permutation.hpp"

namespace cycinv {

/// Label assignment for the non-marked cycles, keyed by each cycle's minimum
/// element, kept sorted by key. Values lie in [k].
using LabelMap = std::vector<std::pair<int, int>>;

/// Label of the cycle whose minimum is key; throws if absent.
int label_for(const LabelMap& labels, int key);

/// A permutation of [n] with a marked cycle and a label in [k] on every
/// other cycle. The sign of a configuration is sgn(perm).
class LabeledConfiguration {
 public:
  /// Validates: marked is a cycle of perm, 1 <= k <= n-1, and labels is
  /// exactly one entry per non-marked cycle (keyed by its minimum) with
  /// values in [k]. Throws std::invalid_argument otherwise.
  LabeledConfiguration(Permutation perm, Cycle marked, int k, LabelMap labels);

  const Permutation& perm() const { return perm_; }
  const Cycle& marked() const { return marked_; }
  int k() const { return k_; }
  const LabelMap& labels() const { return labels_; }
  int size() const { return perm_.size(); }

  bool operator==(const LabeledConfiguration&) const = default;

 private:
  Permutation perm_;
  Cycle marked_;
  int k_;
  LabelMap labels_;
};

/// Out-degree-1 digraph on [n] encoding a configuration whose non-marked
/// cycles are all 1-cycles: vertices of the designated cycle follow the
/// permutation, every other vertex points at its label (a value in [k]).
struct FunctionalDigraph {
  int n = 0;
  int k = 0;
  std::vector<int> out;         // 1-based; out[0] unused
  std::vector<int> designated;  // sorted vertex set of the marked cycle

  bool is_designated(int v) const;
};

/// Least pair i < j (lexicographically) of integers in non-marked cycles
/// whose cycles carry equal labels; the two may share a cycle. Empty exactly
/// when every non-marked cycle is a 1-cycle and all labels are distinct.
std::optional<std::pair<int, int>> find_case1_pair(const LabeledConfiguration& cfg);

/// Multiplies by tau_{ij} and re-labels: cycles avoiding i and j keep their
/// labels, every result cycle containing i or j gets the common label of the
/// pair's cycles. Requires (i,j) as produced by find_case1_pair.
LabeledConfiguration apply_case1(const LabeledConfiguration& cfg, int i, int j);

/// Requires find_case1_pair(cfg) empty.
FunctionalDigraph build_digraph(const LabeledConfiguration& cfg);

/// Inverse of build_digraph, using the explicitly tracked designated set.
LabeledConfiguration config_from_digraph(const FunctionalDigraph& d);

/// A designated vertex i is free when i <= k and no vertex outside the
/// designated cycle points at it. Throws if i is not designated.
bool is_free(const FunctionalDigraph& d, int i);

/// Pivot trail (m1,...,ml) of the surgery branch: m1 = min(C), and each
/// later entry is the pivot of one further reversible surgery step (see
/// maximal_free_chain). In the common case the entries are exactly the
/// run of i-th smallest integers of C with every entry after the first
/// free. Never empty.
struct FreeChain {
  std::vector<int> elements;

  int length() const { return static_cast<int>(elements.size()); }
};

/// The chain that decides the pivot. At any digraph the two candidate
/// surgery sites are c = min(C) and the cycle successor s of c (the latter
/// only when s <= k); a step at a site counts only if the site is again a
/// candidate of the resulting digraph. Starting from d, repeatedly take the
/// one admissible step that does not undo the previous step, recording each
/// pivot; the first step must use s. The walk ends when no admissible step
/// remains or a digraph repeats. Requires the designated cycle to contain
/// an integer in [k] (which forces min(C) <= k, so the chain starts in [k]).
FreeChain maximal_free_chain(const FunctionalDigraph& d);

/// m1 when the chain length is odd, m2 when even.
int select_pivot(const FreeChain& chain);

/// The edge surgery at the pivot: when the pivot is free its predecessor on
/// the cycle is expelled (shrinking the designated cycle by one); when not
/// free, the unique outside vertex pointing at the pivot is spliced in just
/// before it (growing the cycle by one).
FunctionalDigraph rewire_at_pivot(FunctionalDigraph d, int pivot);

/// Case 2-b of the involution: digraph, maximal free chain, pivot, surgery,
/// read-back. Requires find_case1_pair empty and the marked cycle to meet [k].
LabeledConfiguration apply_case2(const LabeledConfiguration& cfg);

/// The sign-reversing involution on configurations: a label-collision pair
/// triggers the transposition branch; otherwise a marked cycle disjoint from
/// [k] is a fixed point; otherwise the pivot surgery applies.
LabeledConfiguration psi(const LabeledConfiguration& cfg);

/// True iff 1..k are 1-cycles with pairwise-distinct labels and k+1..n form
/// the marked (n-k)-cycle; these are exactly the fixed points of psi.
bool is_fix(const LabeledConfiguration& cfg);

/// |P(n,k)| = sum over i of c(n,i)*i*k^(i-1). Throws std::overflow_error if
/// the exact count does not fit 64 bits.
i64 configuration_count(int n, int k);

/// Sum of sgn(perm) over all configurations; equals
/// (-1)^(n-k-1) * k! * (n-k-1)!.
i64 signed_sum(int n, int k, int cap = kDefaultEnumerationCap);

/// "(1,2)(3)(4) | C=(1,2) | f: 3->1, 4->2"
std::string format_configuration(const LabeledConfiguration& cfg);
LabeledConfiguration parse_configuration(std::string_view text, int n, int k);

/// Graphviz rendering: one node and one out-edge per vertex, designated-cycle
/// edges set in bold.
std::string to_dot(const FunctionalDigraph& d);

/// Calls fn with every configuration exactly once: permutations in
/// lexicographic order, marked cycles in canonical order, label tuples in
/// lexicographic order over keys sorted ascending.
template <typename F>
void for_each_configuration(int n, int k, F&& fn, int cap = kDefaultEnumerationCap) {
  if (k < 1 || k > n - 1)
    throw std::invalid_argument("for_each_configuration: k must satisfy 1 <= k <= n-1");
  for_each_permutation(
      n,
      [&](const Permutation& p) {
        const CycleDecomposition dec = cycle_decomposition(p);
        for (size_t mi = 0; mi < dec.cycles.size(); ++mi) {
          LabelMap labels;
          labels.reserve(dec.cycles.size() - 1);
          for (size_t t = 0; t < dec.cycles.size(); ++t)
            if (t != mi) labels.emplace_back(dec.cycles[t].min(), 1);
          for (;;) {
            fn(LabeledConfiguration(p, dec.cycles[mi], k, labels));
            // Odometer over label values, last key fastest.
            int pos = static_cast<int>(labels.size()) - 1;
            while (pos >= 0 && labels[static_cast<size_t>(pos)].second == k) {
              labels[static_cast<size_t>(pos)].second = 1;
              --pos;
            }
            if (pos < 0) break;
            ++labels[static_cast<size_t>(pos)].second;
          }
        }
      },
      cap);
}

}  // namespace cycinv
