#include "cycinv/permutation.hpp"

#include <charconv>
#include <sstream>

namespace cycinv {

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  const int n = static_cast<int>(image_.size());
  if (n < 1) throw std::invalid_argument("Permutation: ground set must be non-empty");
  std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
  for (int v : image_) {
    if (v < 1 || v > n)
      throw std::invalid_argument("Permutation: image value " + std::to_string(v) +
                                  " out of range [1," + std::to_string(n) + "]");
    if (seen[static_cast<size_t>(v)])
      throw std::invalid_argument("Permutation: image value " + std::to_string(v) +
                                  " appears twice");
    seen[static_cast<size_t>(v)] = 1;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 1) throw std::invalid_argument("Permutation::identity: n must be >= 1");
  std::vector<int> image(static_cast<size_t>(n));
  std::iota(image.begin(), image.end(), 1);
  return Permutation(std::move(image));
}

Cycle::Cycle(std::vector<int> elements) : elems_(std::move(elements)) {
  if (elems_.empty()) throw std::invalid_argument("Cycle: must be non-empty");
  auto min_it = elems_.begin();
  for (auto it = elems_.begin(); it != elems_.end(); ++it) {
    if (*it < 1) throw std::invalid_argument("Cycle: elements must be positive");
    if (*it < *min_it) min_it = it;
  }
  std::rotate(elems_.begin(), min_it, elems_.end());
  for (size_t a = 0; a < elems_.size(); ++a)
    for (size_t b = a + 1; b < elems_.size(); ++b)
      if (elems_[a] == elems_[b])
        throw std::invalid_argument("Cycle: duplicate element " + std::to_string(elems_[a]));
}

bool Cycle::contains(int x) const {
  return std::find(elems_.begin(), elems_.end(), x) != elems_.end();
}

int Cycle::next(int x) const {
  auto it = std::find(elems_.begin(), elems_.end(), x);
  if (it == elems_.end())
    throw std::invalid_argument("Cycle::next: " + std::to_string(x) + " not in cycle");
  ++it;
  return it == elems_.end() ? elems_.front() : *it;
}

int Cycle::prev(int x) const {
  auto it = std::find(elems_.begin(), elems_.end(), x);
  if (it == elems_.end())
    throw std::invalid_argument("Cycle::prev: " + std::to_string(x) + " not in cycle");
  return it == elems_.begin() ? elems_.back() : *(it - 1);
}

const Cycle& CycleDecomposition::cycle_containing(int x) const {
  for (const Cycle& c : cycles)
    if (c.contains(x)) return c;
  throw std::invalid_argument("cycle_containing: element " + std::to_string(x) +
                              " not covered by decomposition");
}

CycleDecomposition cycle_decomposition(const Permutation& p) {
  const int n = p.size();
  CycleDecomposition dec;
  std::vector<char> visited(static_cast<size_t>(n) + 1, 0);
  // Visiting start points in ascending order makes every cycle min-first and
  // the cycle list sorted by minimum, i.e. the canonical form.
  for (int start = 1; start <= n; ++start) {
    if (visited[static_cast<size_t>(start)]) continue;
    std::vector<int> orbit;
    int x = start;
    do {
      visited[static_cast<size_t>(x)] = 1;
      orbit.push_back(x);
      x = p(x);
    } while (x != start);
    dec.cycles.emplace_back(std::move(orbit));
  }
  return dec;
}

Cycle cycle_through(const Permutation& p, int x) {
  if (x < 1 || x > p.size())
    throw std::invalid_argument("cycle_through: element out of range");
  std::vector<int> orbit;
  int y = x;
  do {
    orbit.push_back(y);
    y = p(y);
  } while (y != x);
  return Cycle(std::move(orbit));
}

int cycle_count(const Permutation& p) {
  const int n = p.size();
  std::vector<char> visited(static_cast<size_t>(n) + 1, 0);
  int count = 0;
  for (int start = 1; start <= n; ++start) {
    if (visited[static_cast<size_t>(start)]) continue;
    ++count;
    int x = start;
    do {
      visited[static_cast<size_t>(x)] = 1;
      x = p(x);
    } while (x != start);
  }
  return count;
}

int sign(const Permutation& p) {
  return (p.size() - cycle_count(p)) % 2 == 0 ? +1 : -1;
}

Permutation left_multiply_transposition(int i, int j, const Permutation& p) {
  const int n = p.size();
  if (i == j) throw std::invalid_argument("left_multiply_transposition: i and j must differ");
  if (i < 1 || i > n || j < 1 || j > n)
    throw std::invalid_argument("left_multiply_transposition: element out of range [1," +
                                std::to_string(n) + "]");
  std::vector<int> image = p.image();
  for (int& v : image) {
    if (v == i)
      v = j;
    else if (v == j)
      v = i;
  }
  return Permutation(std::move(image));
}

namespace {

[[noreturn]] void malformed(std::string_view text, size_t pos, const std::string& why) {
  throw std::invalid_argument("malformed cycle notation at position " + std::to_string(pos) +
                              ": " + why + " in \"" + std::string(text) + "\"");
}

int parse_uint_at(std::string_view text, size_t& pos) {
  size_t start = pos;
  while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
  if (pos == start) malformed(text, pos, "expected an integer");
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data() + start, text.data() + pos, value);
  if (ec != std::errc() || ptr != text.data() + pos)
    malformed(text, start, "integer out of machine range");
  return value;
}

}  // namespace

Permutation parse_cycle_notation(std::string_view text, int n) {
  if (n < 1) throw std::invalid_argument("parse_cycle_notation: n must be >= 1");
  std::vector<int> image(static_cast<size_t>(n), 0);
  std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
  size_t pos = 0;
  if (text.empty()) malformed(text, 0, "empty input");
  while (pos < text.size()) {
    if (text[pos] != '(') malformed(text, pos, "expected '('");
    ++pos;
    std::vector<int> group;
    for (;;) {
      int v = parse_uint_at(text, pos);
      if (v < 1 || v > n)
        throw std::invalid_argument("parse_cycle_notation: element " + std::to_string(v) +
                                    " out of range [1," + std::to_string(n) + "]");
      if (seen[static_cast<size_t>(v)])
        throw std::invalid_argument("parse_cycle_notation: duplicate element " +
                                    std::to_string(v));
      seen[static_cast<size_t>(v)] = 1;
      group.push_back(v);
      if (pos >= text.size()) malformed(text, pos, "unterminated cycle");
      if (text[pos] == ',') {
        ++pos;
        continue;
      }
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      malformed(text, pos, "expected ',' or ')'");
    }
    for (size_t t = 0; t < group.size(); ++t)
      image[static_cast<size_t>(group[t]) - 1] = group[(t + 1) % group.size()];
  }
  for (int v = 1; v <= n; ++v)
    if (!seen[static_cast<size_t>(v)])
      throw std::invalid_argument("parse_cycle_notation: missing element " + std::to_string(v) +
                                  " (fixed points must be written as 1-cycles)");
  return Permutation(std::move(image));
}

Cycle parse_cycle(std::string_view text) {
  size_t pos = 0;
  if (text.empty() || text[0] != '(') malformed(text, 0, "expected '('");
  ++pos;
  std::vector<int> group;
  for (;;) {
    int v = parse_uint_at(text, pos);
    if (v < 1) malformed(text, pos, "elements must be positive");
    group.push_back(v);
    if (pos >= text.size()) malformed(text, pos, "unterminated cycle");
    if (text[pos] == ',') {
      ++pos;
      continue;
    }
    if (text[pos] == ')') {
      ++pos;
      break;
    }
    malformed(text, pos, "expected ',' or ')'");
  }
  if (pos != text.size()) malformed(text, pos, "trailing characters");
  return Cycle(std::move(group));
}

std::string format_cycle(const Cycle& c) {
  std::ostringstream out;
  out << '(';
  const auto& e = c.elements();
  for (size_t t = 0; t < e.size(); ++t) {
    if (t) out << ',';
    out << e[t];
  }
  out << ')';
  return out.str();
}

std::string format_cycles(const CycleDecomposition& d) {
  std::string out;
  for (const Cycle& c : d.cycles) out += format_cycle(c);
  return out;
}

std::string format_cycles(const Permutation& p) { return format_cycles(cycle_decomposition(p)); }

i64 count_permutations(int n) {
  if (n < 1 || n > 20)
    throw std::domain_error("count_permutations: n! exceeds 64-bit range beyond n=20");
  i64 f = 1;
  for (int m = 2; m <= n; ++m) f *= m;
  return f;
}

std::vector<Permutation> all_permutations(int n, int cap) {
  std::vector<Permutation> out;
  for_each_permutation(n, [&](const Permutation& p) { out.push_back(p); }, cap);
  return out;
}

}  // namespace cycinv
