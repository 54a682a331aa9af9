#include "cycinv/marked.hpp"

#include <stdexcept>

#include "cycinv/stirling.hpp"

namespace cycinv {

MarkedPermutation::MarkedPermutation(Permutation perm, Cycle marked)
    : perm_(std::move(perm)), marked_(std::move(marked)) {
  const auto& e = marked_.elements();
  for (size_t t = 0; t < e.size(); ++t) {
    if (e[t] > perm_.size())
      throw std::invalid_argument("MarkedPermutation: marked cycle element out of range");
    if (perm_(e[t]) != e[(t + 1) % e.size()])
      throw std::invalid_argument("MarkedPermutation: marked sequence is not a cycle of perm");
  }
}

namespace {

void require_phi_domain(const MarkedPermutation& mp) {
  if (mp.size() < 2)
    throw std::domain_error("phi: defined for n >= 2 only");
}

}  // namespace

MarkedPermutation phi(const MarkedPermutation& mp) {
  require_phi_domain(mp);
  const int n = mp.size();
  const Cycle& c = mp.marked();
  const Permutation& p = mp.perm();

  if (c.size() <= n - 2) {
    // Two smallest integers outside C; tau_{ij} acts on cycles disjoint
    // from C, so the mark survives unchanged.
    int i = 0, j = 0;
    for (int x = 1; x <= n && j == 0; ++x) {
      if (c.contains(x)) continue;
      if (i == 0)
        i = x;
      else
        j = x;
    }
    return MarkedPermutation(left_multiply_transposition(i, j, p), c);
  }

  if (!c.contains(1)) return mp;  // fixed point

  std::vector<int> image = p.image();
  if (c.size() == n) {
    // (1,a0,a1,...,a_{n-2})  ->  (a0)(1,a1,...,a_{n-2})
    const int a0 = p(1);
    image[0] = p(a0);
    image[static_cast<size_t>(a0) - 1] = a0;
  } else {
    // (a0)(1,a1,...,a_{n-2})  ->  (1,a0,a1,...,a_{n-2});
    // a0 is the single integer outside C, necessarily a fixed point.
    int a0 = 0;
    for (int x = 1; x <= n; ++x)
      if (!c.contains(x)) {
        a0 = x;
        break;
      }
    image[static_cast<size_t>(a0) - 1] = p(1);
    image[0] = a0;
  }
  Permutation moved(std::move(image));
  Cycle remarked = cycle_through(moved, 1);
  return MarkedPermutation(std::move(moved), std::move(remarked));
}

bool is_phi_fixed(const MarkedPermutation& mp) {
  require_phi_domain(mp);
  return mp.marked().size() == mp.size() - 1 && !mp.marked().contains(1);
}

i64 marked_count(int n) {
  i64 total = 0;
  for (int i = 1; i <= n; ++i) total += stirling_cycle(n, i) * i;
  return total;
}

i64 signed_cycle_sum(int n, int cap) {
  if (n < 2) throw std::domain_error("signed_cycle_sum: defined for n >= 2 only");
  i64 sum = 0;
  // Each permutation contributes sgn(p) once per cycle that can carry the mark.
  for_each_permutation(
      n, [&](const Permutation& p) { sum += static_cast<i64>(sign(p)) * cycle_count(p); }, cap);
  return sum;
}

std::string format_marked(const MarkedPermutation& mp) {
  return format_cycles(mp.perm()) + " | C=" + format_cycle(mp.marked());
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

}  // namespace

MarkedPermutation parse_marked(std::string_view text, int n) {
  const size_t bar = text.find('|');
  if (bar == std::string_view::npos)
    throw std::invalid_argument("parse_marked: expected \"<cycles> | C=<cycle>\"");
  std::string_view perm_part = trim(text.substr(0, bar));
  std::string_view mark_part = trim(text.substr(bar + 1));
  if (mark_part.substr(0, 2) != "C=")
    throw std::invalid_argument("parse_marked: expected \"C=\" after '|'");
  mark_part.remove_prefix(2);
  Permutation p = parse_cycle_notation(perm_part, n);
  Cycle c = parse_cycle(trim(mark_part));
  return MarkedPermutation(std::move(p), std::move(c));
}

}  // namespace cycinv
