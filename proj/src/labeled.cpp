#include "cycinv/labeled.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>

#include "cycinv/stirling.hpp"

namespace cycinv {

int label_for(const LabelMap& labels, int key) {
  for (const auto& [k, v] : labels)
    if (k == key) return v;
  throw std::invalid_argument("label_for: no label keyed by " + std::to_string(key));
}

LabeledConfiguration::LabeledConfiguration(Permutation perm, Cycle marked, int k, LabelMap labels)
    : perm_(std::move(perm)), marked_(std::move(marked)), k_(k), labels_(std::move(labels)) {
  const int n = perm_.size();
  if (k_ < 1 || k_ > n - 1)
    throw std::invalid_argument("LabeledConfiguration: k must satisfy 1 <= k <= n-1");
  const auto& e = marked_.elements();
  std::vector<char> visited(static_cast<size_t>(n) + 1, 0);
  for (size_t t = 0; t < e.size(); ++t) {
    if (e[t] > n)
      throw std::invalid_argument("LabeledConfiguration: marked cycle element out of range");
    if (perm_(e[t]) != e[(t + 1) % e.size()])
      throw std::invalid_argument("LabeledConfiguration: marked sequence is not a cycle of perm");
    visited[static_cast<size_t>(e[t])] = 1;
  }
  // Ascending scan visits each non-marked cycle at its minimum, which must be
  // the next label key.
  size_t li = 0;
  for (int v = 1; v <= n; ++v) {
    if (visited[static_cast<size_t>(v)]) continue;
    if (li >= labels_.size() || labels_[li].first != v)
      throw std::invalid_argument(
          "LabeledConfiguration: label keys must be the non-marked cycle minima in ascending "
          "order");
    if (labels_[li].second < 1 || labels_[li].second > k_)
      throw std::invalid_argument("LabeledConfiguration: label value out of range [1,k]");
    ++li;
    int x = v;
    do {
      visited[static_cast<size_t>(x)] = 1;
      x = perm_(x);
    } while (x != v);
  }
  if (li != labels_.size())
    throw std::invalid_argument("LabeledConfiguration: superfluous label entries");
}

bool FunctionalDigraph::is_designated(int v) const {
  return std::binary_search(designated.begin(), designated.end(), v);
}

std::optional<std::pair<int, int>> find_case1_pair(const LabeledConfiguration& cfg) {
  const int n = cfg.size();
  // elem_label[v] = label of v's non-marked cycle, 0 for marked vertices.
  std::vector<int> elem_label(static_cast<size_t>(n) + 1, 0);
  std::vector<char> visited(static_cast<size_t>(n) + 1, 0);
  for (int e : cfg.marked().elements()) visited[static_cast<size_t>(e)] = 1;
  size_t li = 0;
  for (int v = 1; v <= n; ++v) {
    if (visited[static_cast<size_t>(v)]) continue;
    assert(cfg.labels()[li].first == v);
    const int lab = cfg.labels()[li++].second;
    int x = v;
    do {
      visited[static_cast<size_t>(x)] = 1;
      elem_label[static_cast<size_t>(x)] = lab;
      x = cfg.perm()(x);
    } while (x != v);
  }
  for (int i = 1; i <= n; ++i) {
    if (elem_label[static_cast<size_t>(i)] == 0) continue;
    for (int j = i + 1; j <= n; ++j)
      if (elem_label[static_cast<size_t>(j)] == elem_label[static_cast<size_t>(i)])
        return std::make_pair(i, j);
  }
  return std::nullopt;
}

LabeledConfiguration apply_case1(const LabeledConfiguration& cfg, int i, int j) {
  const Cycle& marked = cfg.marked();
  if (marked.contains(i) || marked.contains(j))
    throw std::logic_error("apply_case1: pair must lie outside the marked cycle");
  const CycleDecomposition old_dec = cycle_decomposition(cfg.perm());
  const int shared = label_for(cfg.labels(), old_dec.cycle_containing(i).min());
  if (label_for(cfg.labels(), old_dec.cycle_containing(j).min()) != shared)
    throw std::logic_error("apply_case1: pair labels differ");

  Permutation moved = left_multiply_transposition(i, j, cfg.perm());
  LabelMap labels;
  for (const Cycle& d : cycle_decomposition(moved).cycles) {
    if (d.min() == marked.min()) continue;  // the marked cycle, untouched by tau
    if (d.contains(i) || d.contains(j))
      labels.emplace_back(d.min(), shared);
    else
      labels.emplace_back(d.min(), label_for(cfg.labels(), d.min()));
  }
  return LabeledConfiguration(std::move(moved), marked, cfg.k(), std::move(labels));
}

namespace {

// Digraph construction without the case-1 re-check; callers have verified it.
FunctionalDigraph digraph_for_case2(const LabeledConfiguration& cfg) {
  FunctionalDigraph d;
  d.n = cfg.size();
  d.k = cfg.k();
  d.out.assign(static_cast<size_t>(d.n) + 1, 0);
  d.designated = cfg.marked().elements();
  std::sort(d.designated.begin(), d.designated.end());
  for (int x : cfg.marked().elements()) d.out[static_cast<size_t>(x)] = cfg.perm()(x);
  // Every non-marked cycle is a 1-cycle here, so label keys are vertices.
  for (const auto& [v, lab] : cfg.labels()) d.out[static_cast<size_t>(v)] = lab;
  return d;
}

}  // namespace

FunctionalDigraph build_digraph(const LabeledConfiguration& cfg) {
  if (find_case1_pair(cfg))
    throw std::domain_error("build_digraph: configuration has a label-collision pair (case 1)");
  return digraph_for_case2(cfg);
}

LabeledConfiguration config_from_digraph(const FunctionalDigraph& d) {
  if (d.designated.empty())
    throw std::invalid_argument("config_from_digraph: designated set is empty");
  std::vector<int> image(static_cast<size_t>(d.n));
  for (int v = 1; v <= d.n; ++v)
    image[static_cast<size_t>(v) - 1] = d.is_designated(v) ? d.out[static_cast<size_t>(v)] : v;
  Permutation p(std::move(image));
  Cycle marked = cycle_through(p, d.designated.front());
  if (marked.size() != static_cast<int>(d.designated.size()))
    throw std::invalid_argument("config_from_digraph: designated set is not a single cycle");
  LabelMap labels;
  for (int v = 1; v <= d.n; ++v)
    if (!d.is_designated(v)) labels.emplace_back(v, d.out[static_cast<size_t>(v)]);
  return LabeledConfiguration(std::move(p), std::move(marked), d.k, std::move(labels));
}

bool is_free(const FunctionalDigraph& d, int i) {
  if (!d.is_designated(i))
    throw std::invalid_argument("is_free: " + std::to_string(i) +
                                " is not on the designated cycle");
  if (i > d.k) return false;
  for (int v = 1; v <= d.n; ++v)
    if (d.out[static_cast<size_t>(v)] == i && !d.is_designated(v)) return false;
  return true;
}

namespace {

// The candidate surgery sites of a digraph: c = min(C) and, when it lies in
// [k], the cycle successor of c. A surgery step is admissible only if its
// pivot is again a candidate site of the digraph it produces, so that the
// step can be recognized (and undone) from the other side.
bool pivot_is_candidate(const FunctionalDigraph& d, int pivot) {
  const int c = d.designated.front();
  if (pivot == c) return true;
  if (d.designated.size() < 2) return false;
  const int s = d.out[static_cast<size_t>(c)];
  return pivot == s && s <= d.k;
}

bool same_digraph(const FunctionalDigraph& a, const FunctionalDigraph& b) {
  return a.out == b.out && a.designated == b.designated;
}

}  // namespace

FreeChain maximal_free_chain(const FunctionalDigraph& d) {
  if (d.designated.empty() || d.designated.front() > d.k)
    throw std::domain_error("maximal_free_chain: designated cycle contains no integer in [k]");
  std::vector<int> chain{d.designated.front()};
  std::vector<FunctionalDigraph> visited{d};
  FunctionalDigraph cur = d;
  int arrival = 0;  // pivot of the step that produced cur; 0 before any step
  for (;;) {
    const int c = cur.designated.front();
    int pivot = 0;
    if (arrival == 0 || arrival == c) {
      // Continue along the successor edge; stepping at c would undo the
      // previous step (or, initially, the first step must use the successor).
      if (cur.designated.size() >= 2) {
        const int s = cur.out[static_cast<size_t>(c)];
        if (s <= cur.k) pivot = s;
      }
    } else {
      pivot = c;  // we arrived along the successor edge, so continue at c
    }
    if (pivot == 0) break;
    FunctionalDigraph next = rewire_at_pivot(cur, pivot);
    if (!pivot_is_candidate(next, pivot)) break;
    bool seen = false;
    for (const FunctionalDigraph& v : visited) seen = seen || same_digraph(v, next);
    if (seen) break;
    chain.push_back(pivot);
    visited.push_back(next);
    arrival = pivot;
    cur = std::move(next);
  }
  return FreeChain{std::move(chain)};
}

int select_pivot(const FreeChain& chain) {
  if (chain.elements.empty()) throw std::invalid_argument("select_pivot: empty chain");
  return chain.length() % 2 == 1 ? chain.elements[0] : chain.elements[1];
}

FunctionalDigraph rewire_at_pivot(FunctionalDigraph d, int pivot) {
  if (!d.is_designated(pivot))
    throw std::invalid_argument("rewire_at_pivot: pivot must be on the designated cycle");
  auto designated_pred = [&d](int target) {
    for (int v : d.designated)
      if (d.out[static_cast<size_t>(v)] == target) return v;
    throw std::logic_error("rewire_at_pivot: designated cycle is broken");
  };
  if (is_free(d, pivot)) {
    // v -> u -> pivot becomes v -> pivot; u drops off the cycle and its
    // surviving edge u -> pivot is reinterpreted as the label of (u).
    const int u = designated_pred(pivot);
    if (u == pivot) throw std::logic_error("rewire_at_pivot: free pivot on a 1-cycle");
    const int v = designated_pred(u);
    d.out[static_cast<size_t>(v)] = pivot;
    d.designated.erase(std::find(d.designated.begin(), d.designated.end(), u));
  } else {
    // The unique outside u pointing at the pivot is spliced in before it:
    // v -> pivot becomes v -> u, and u -> pivot becomes a cycle edge.
    int u = 0, hits = 0;
    for (int w = 1; w <= d.n; ++w)
      if (d.out[static_cast<size_t>(w)] == pivot && !d.is_designated(w)) {
        u = w;
        ++hits;
      }
    if (hits != 1)
      throw std::logic_error(
          "rewire_at_pivot: expected exactly one outside edge into a non-free pivot, found " +
          std::to_string(hits));
    const int v = designated_pred(pivot);
    d.out[static_cast<size_t>(v)] = u;
    d.designated.insert(std::lower_bound(d.designated.begin(), d.designated.end(), u), u);
  }
  return d;
}

LabeledConfiguration apply_case2(const LabeledConfiguration& cfg) {
  if (find_case1_pair(cfg))
    throw std::domain_error("apply_case2: a label-collision pair exists (case 1 applies)");
  if (cfg.marked().min() > cfg.k())
    throw std::domain_error("apply_case2: marked cycle avoids [k] (fixed point)");
  FunctionalDigraph d = digraph_for_case2(cfg);
  const int pivot = select_pivot(maximal_free_chain(d));
  return config_from_digraph(rewire_at_pivot(std::move(d), pivot));
}

LabeledConfiguration psi(const LabeledConfiguration& cfg) {
  if (const auto pair = find_case1_pair(cfg)) return apply_case1(cfg, pair->first, pair->second);
  // min(C) <= k is exactly "C meets [k]".
  if (cfg.marked().min() > cfg.k()) return cfg;
  FunctionalDigraph d = digraph_for_case2(cfg);
  const int pivot = select_pivot(maximal_free_chain(d));
  return config_from_digraph(rewire_at_pivot(std::move(d), pivot));
}

bool is_fix(const LabeledConfiguration& cfg) {
  const int n = cfg.size();
  const int k = cfg.k();
  if (cfg.marked().size() != n - k || cfg.marked().min() <= k) return false;
  for (int i = 1; i <= k; ++i)
    if (cfg.perm()(i) != i) return false;
  // Labels all distinct: k values in [k], so distinct means a bijection.
  std::vector<char> used(static_cast<size_t>(k) + 1, 0);
  for (const auto& [key, lab] : cfg.labels()) {
    (void)key;
    if (used[static_cast<size_t>(lab)]) return false;
    used[static_cast<size_t>(lab)] = 1;
  }
  return true;
}

i64 configuration_count(int n, int k) {
  if (k < 1 || k > n - 1)
    throw std::invalid_argument("configuration_count: k must satisfy 1 <= k <= n-1");
  i64 total = 0;
  for (int i = 1; i <= n; ++i) {
    i64 term = 0;
    i64 power = 1;
    bool overflow = __builtin_mul_overflow(stirling_cycle(n, i), static_cast<i64>(i), &term);
    for (int t = 1; t < i && !overflow; ++t)
      overflow = __builtin_mul_overflow(power, static_cast<i64>(k), &power);
    if (overflow || __builtin_mul_overflow(term, power, &term) ||
        __builtin_add_overflow(total, term, &total))
      throw std::overflow_error("configuration_count: exact count exceeds 64 bits");
  }
  return total;
}

i64 signed_sum(int n, int k, int cap) {
  if (k < 1 || k > n - 1)
    throw std::invalid_argument("signed_sum: k must satisfy 1 <= k <= n-1");
  i64 sum = 0;
  for_each_configuration(
      n, k, [&](const LabeledConfiguration& cfg) { sum += sign(cfg.perm()); }, cap);
  return sum;
}

std::string format_configuration(const LabeledConfiguration& cfg) {
  std::ostringstream out;
  out << format_cycles(cfg.perm()) << " | C=" << format_cycle(cfg.marked()) << " | f:";
  bool first = true;
  for (const auto& [key, lab] : cfg.labels()) {
    out << (first ? " " : ", ") << key << "->" << lab;
    first = false;
  }
  return out.str();
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

}  // namespace

LabeledConfiguration parse_configuration(std::string_view text, int n, int k) {
  const size_t bar1 = text.find('|');
  const size_t bar2 = bar1 == std::string_view::npos ? bar1 : text.find('|', bar1 + 1);
  if (bar2 == std::string_view::npos)
    throw std::invalid_argument(
        "parse_configuration: expected \"<cycles> | C=<cycle> | f: key->label, ...\"");
  std::string_view perm_part = trim(text.substr(0, bar1));
  std::string_view mark_part = trim(text.substr(bar1 + 1, bar2 - bar1 - 1));
  std::string_view label_part = trim(text.substr(bar2 + 1));
  if (mark_part.substr(0, 2) != "C=")
    throw std::invalid_argument("parse_configuration: expected \"C=\" after the first '|'");
  if (label_part.substr(0, 2) != "f:")
    throw std::invalid_argument("parse_configuration: expected \"f:\" after the second '|'");
  Permutation p = parse_cycle_notation(perm_part, n);
  Cycle marked = parse_cycle(trim(mark_part.substr(2)));
  label_part = trim(label_part.substr(2));

  LabelMap labels;
  while (!label_part.empty()) {
    const size_t comma = label_part.find(',');
    std::string_view entry = trim(label_part.substr(0, comma));
    const size_t arrow = entry.find("->");
    if (arrow == std::string_view::npos)
      throw std::invalid_argument("parse_configuration: label entries must look like key->value");
    int key = 0, value = 0;
    try {
      key = std::stoi(std::string(trim(entry.substr(0, arrow))));
      value = std::stoi(std::string(trim(entry.substr(arrow + 2))));
    } catch (const std::exception&) {
      throw std::invalid_argument("parse_configuration: bad integer in label entry \"" +
                                  std::string(entry) + "\"");
    }
    labels.emplace_back(key, value);
    if (comma == std::string_view::npos) break;
    label_part = trim(label_part.substr(comma + 1));
    if (label_part.empty())
      throw std::invalid_argument("parse_configuration: trailing comma in label list");
  }
  std::sort(labels.begin(), labels.end());
  return LabeledConfiguration(std::move(p), std::move(marked), k, std::move(labels));
}

std::string to_dot(const FunctionalDigraph& d) {
  std::ostringstream out;
  out << "digraph D {\n  rankdir=LR;\n";
  for (int v = 1; v <= d.n; ++v) out << "  " << v << ";\n";
  for (int v = 1; v <= d.n; ++v) {
    out << "  " << v << " -> " << d.out[static_cast<size_t>(v)];
    if (d.is_designated(v)) out << " [style=bold]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace cycinv
