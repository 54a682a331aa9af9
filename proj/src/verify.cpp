#include "cycinv/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "cycinv/stirling.hpp"

namespace cycinv {

namespace {

class Stopwatch {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

int parity_sign(int exponent) { return exponent % 2 == 0 ? +1 : -1; }

using int128 = __int128;

std::string int128_to_string(int128 v) {
  if (v == 0) return "0";
  const bool negative = v < 0;
  unsigned __int128 mag =
      negative ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
  std::string digits;
  while (mag != 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(mag % 10)));
    mag /= 10;
  }
  if (negative) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

std::string row_to_string(const std::vector<i64>& row) {
  std::string out = "[";
  for (size_t t = 0; t < row.size(); ++t) {
    if (t) out += ",";
    out += std::to_string(row[t]);
  }
  out += "]";
  return out;
}

// Shared engine behind the phi- and psi-shaped involution checks: walks the
// domain in enumeration order, verifies the pointwise properties (map twice
// is the identity, sign flips when moved, moved iff outside the predicate
// set, fixed elements carry the expected sign) and the aggregates (fixed
// count, signed sum). The witness is the first element violating a pointwise
// property.
template <typename Element, typename Enumerate, typename Map, typename FixedPred, typename Sign,
          typename Format>
VerificationReport involution_report(std::string name, std::map<std::string, i64> params,
                                     i64 expected_sum, i64 expected_fixed, int expected_fixed_sign,
                                     Enumerate&& enumerate, Map&& map, FixedPred&& fixed_pred,
                                     Sign&& sign_of, Format&& format) {
  VerificationReport r;
  r.name = std::move(name);
  r.params = std::move(params);
  const Stopwatch clock;

  i64 domain = 0;
  i64 fixed_count = 0;
  i64 sum = 0;
  std::string pointwise = "ok";
  enumerate([&](const Element& x) {
    const i64 index = domain++;
    const int sx = sign_of(x);
    sum += sx;
    const Element y = map(x);
    const bool moved = !(y == x);
    if (!moved) ++fixed_count;
    if (pointwise != "ok") return;  // witness already recorded; keep tallying
    std::string fail;
    if (moved) {
      if (fixed_pred(x))
        fail = "predicate marks a moving element as fixed";
      else if (sign_of(y) != -sx)
        fail = "sign did not flip";
      else if (!(map(y) == x))
        fail = "map applied twice is not the identity";
    } else {
      if (!fixed_pred(x))
        fail = "map fixes an element outside the predicate set";
      else if (sx != expected_fixed_sign)
        fail = "fixed point has the wrong sign";
    }
    if (!fail.empty()) {
      pointwise = fail + " at index " + std::to_string(index);
      r.witness = format(x);
    }
  });

  r.expected = "sum=" + std::to_string(expected_sum) + " fixed=" + std::to_string(expected_fixed) +
               " pointwise=ok";
  r.actual =
      "sum=" + std::to_string(sum) + " fixed=" + std::to_string(fixed_count) + " pointwise=" +
      pointwise;
  r.counts = {{"domain", domain}, {"fixed_points", fixed_count}, {"signed_sum", sum}};
  r.passed = r.expected == r.actual && r.witness.empty();
  r.elapsed_ms = clock.ms();
  return r;
}

VerificationReport phi_shaped_report(const std::string& name, int n, const MarkedMap& map,
                                     int cap) {
  if (n < 2) throw std::domain_error(name + ": requires n >= 2");
  return involution_report<MarkedPermutation>(
      name, {{"n", n}}, static_cast<i64>(parity_sign(n)) * factorial(n - 2), factorial(n - 2),
      parity_sign(n), [n, cap](auto&& fn) { for_each_marked(n, fn, cap); }, map,
      [](const MarkedPermutation& mp) { return is_phi_fixed(mp); },
      [](const MarkedPermutation& mp) { return sign(mp.perm()); },
      [](const MarkedPermutation& mp) { return format_marked(mp); });
}

VerificationReport psi_shaped_report(const std::string& name, int n, int k, const ConfigMap& map,
                                     int cap) {
  if (n < 2 || k < 1 || k > n - 1)
    throw std::invalid_argument(name + ": requires n >= 2 and 1 <= k <= n-1");
  const i64 fixed = factorial(k) * factorial(n - k - 1);
  return involution_report<LabeledConfiguration>(
      name, {{"k", k}, {"n", n}}, static_cast<i64>(parity_sign(n - k - 1)) * fixed, fixed,
      parity_sign(n - k - 1), [n, k, cap](auto&& fn) { for_each_configuration(n, k, fn, cap); },
      map, [](const LabeledConfiguration& cfg) { return is_fix(cfg); },
      [](const LabeledConfiguration& cfg) { return sign(cfg.perm()); },
      [](const LabeledConfiguration& cfg) { return format_configuration(cfg); });
}

}  // namespace

nlohmann::json to_json(const VerificationReport& report) {
  return nlohmann::json{{"name", report.name},       {"params", report.params},
                        {"expected", report.expected}, {"actual", report.actual},
                        {"passed", report.passed},   {"elapsed_ms", report.elapsed_ms},
                        {"counts", report.counts},   {"witness", report.witness}};
}

nlohmann::json to_json(const std::vector<VerificationReport>& reports) {
  nlohmann::json array = nlohmann::json::array();
  for (const auto& report : reports) array.push_back(to_json(report));
  return array;
}

namespace {

std::string render_params(const std::map<std::string, i64>& params) {
  std::string out;
  // n first, then k, then anything else.
  for (const char* key : {"n", "k"}) {
    auto it = params.find(key);
    if (it != params.end()) out += std::string(out.empty() ? "" : " ") + key + "=" +
                                   std::to_string(it->second);
  }
  for (const auto& [key, value] : params)
    if (key != "n" && key != "k")
      out += std::string(out.empty() ? "" : " ") + key + "=" + std::to_string(value);
  return out;
}

std::string clip(const std::string& s, size_t width) {
  if (s.size() <= width) return s;
  return s.substr(0, width - 2) + "..";
}

}  // namespace

std::string format_report_table(const std::vector<VerificationReport>& reports) {
  constexpr size_t kValueWidth = 34;
  size_t name_w = 5, params_w = 6, exp_w = 8, act_w = 6;
  std::vector<std::array<std::string, 4>> rows;
  rows.reserve(reports.size());
  for (const auto& r : reports) {
    rows.push_back({r.name, render_params(r.params), clip(r.expected, kValueWidth),
                    clip(r.actual, kValueWidth)});
    name_w = std::max(name_w, rows.back()[0].size());
    params_w = std::max(params_w, rows.back()[1].size());
    exp_w = std::max(exp_w, rows.back()[2].size());
    act_w = std::max(act_w, rows.back()[3].size());
  }
  std::ostringstream out;
  out << std::left << std::setw(static_cast<int>(name_w + 2)) << "check"
      << std::setw(static_cast<int>(params_w + 2)) << "params"
      << std::setw(static_cast<int>(exp_w + 2)) << "expected"
      << std::setw(static_cast<int>(act_w + 2)) << "actual"
      << std::setw(8) << "result" << "time\n";
  for (size_t t = 0; t < reports.size(); ++t) {
    std::ostringstream time;
    time << std::fixed << std::setprecision(1) << reports[t].elapsed_ms << "ms";
    out << std::left << std::setw(static_cast<int>(name_w + 2)) << rows[t][0]
        << std::setw(static_cast<int>(params_w + 2)) << rows[t][1]
        << std::setw(static_cast<int>(exp_w + 2)) << rows[t][2]
        << std::setw(static_cast<int>(act_w + 2)) << rows[t][3]
        << std::setw(8) << (reports[t].passed ? "PASS" : "FAIL") << time.str() << "\n";
    if (!reports[t].passed && !reports[t].witness.empty())
      out << "  witness: " << reports[t].witness << "\n";
  }
  return out.str();
}

VerificationReport check_theorem1(int n, int cap) {
  if (n < 2) throw std::domain_error("check_theorem1: requires n >= 2");
  VerificationReport r;
  r.name = "theorem1";
  r.params = {{"n", n}};
  const Stopwatch clock;
  i64 even_total = 0, odd_total = 0, perms = 0;
  for_each_permutation(
      n,
      [&](const Permutation& p) {
        ++perms;
        const int cycles = cycle_count(p);
        if ((n - cycles) % 2 == 0)
          even_total += cycles;
        else
          odd_total += cycles;
      },
      cap);
  const i64 diff = even_total - odd_total;
  const i64 rhs = static_cast<i64>(parity_sign(n)) * factorial(n - 2);
  r.expected = std::to_string(rhs);
  r.actual = std::to_string(diff);
  r.passed = diff == rhs;
  r.counts = {{"even_total_cycles", even_total},
              {"odd_total_cycles", odd_total},
              {"permutations", perms}};
  r.elapsed_ms = clock.ms();
  return r;
}

VerificationReport check_eq2(int n) {
  VerificationReport r;
  r.name = "eq2";
  r.params = {{"n", n}};
  const Stopwatch clock;
  const std::vector<i64> row = stirling_row(n);
  const std::vector<i64> coeffs = rising_factorial_coefficients(n);
  r.expected = row_to_string(row);
  r.actual = row_to_string(coeffs);
  r.passed = row == coeffs;
  i64 row_sum = 0;
  for (i64 v : row) row_sum += v;
  r.counts = {{"row_sum", row_sum}};
  r.elapsed_ms = clock.ms();
  return r;
}

VerificationReport check_eq4(int n, int k) {
  if (n < 2 || n > kStirlingMaxN)
    throw std::domain_error("check_eq4: n must be in [2," + std::to_string(kStirlingMaxN) + "]");
  if (k < 1 || k > n - 1)
    throw std::invalid_argument("check_eq4: k must satisfy 1 <= k <= n-1");
  VerificationReport r;
  r.name = "eq4";
  r.params = {{"k", k}, {"n", n}};
  const Stopwatch clock;
  // Horner evaluation of sum_i c(n,i)*i*x^(i-1) at x = -k. Intermediate
  // values exceed 64 bits near n = 20, hence 128-bit accumulation.
  int128 lhs = 0;
  for (int i = n; i >= 1; --i) {
    bool overflow = __builtin_mul_overflow(lhs, static_cast<int128>(-k), &lhs);
    overflow = overflow || __builtin_add_overflow(
                               lhs, static_cast<int128>(stirling_cycle(n, i)) * i, &lhs);
    if (overflow) throw std::overflow_error("check_eq4: 128-bit overflow");
  }
  const i64 rhs = static_cast<i64>(parity_sign(k)) * factorial(k) * factorial(n - k - 1);
  r.expected = std::to_string(rhs);
  r.actual = int128_to_string(lhs);
  r.passed = lhs == static_cast<int128>(rhs);
  r.elapsed_ms = clock.ms();
  return r;
}

VerificationReport check_involution(InvolutionSpace space, int n, int k, int cap) {
  if (space == InvolutionSpace::phi)
    return phi_shaped_report("phi-involution", n,
                             [](const MarkedPermutation& mp) { return phi(mp); }, cap);
  return psi_shaped_report("psi-involution", n, k,
                           [](const LabeledConfiguration& cfg) { return psi(cfg); }, cap);
}

VerificationReport check_involution_with(const std::string& name, int n, const MarkedMap& map,
                                         int cap) {
  return phi_shaped_report(name, n, map, cap);
}

VerificationReport check_involution_with(const std::string& name, int n, int k,
                                         const ConfigMap& map, int cap) {
  return psi_shaped_report(name, n, k, map, cap);
}

std::vector<VerificationReport> run_suite(const SuiteOptions& options, const ReportSink& sink) {
  if (options.max_n < 2) throw std::invalid_argument("run_suite: max_n must be >= 2");
  if (options.max_n > options.enumeration_cap)
    throw std::domain_error("run_suite: max_n exceeds the enumeration cap");
  std::vector<VerificationReport> reports;
  auto emit = [&](VerificationReport r) {
    if (sink) sink(r);
    reports.push_back(std::move(r));
  };
  for (int n = 2; n <= options.max_n; ++n) emit(check_theorem1(n, options.enumeration_cap));
  for (int n = 1; n <= std::min(2 * options.max_n, kStirlingMaxN); ++n) emit(check_eq2(n));
  const int psi_cap = std::min(options.max_n, options.psi_max_n);
  for (int n = 2; n <= psi_cap; ++n)
    for (int k = 1; k <= n - 1; ++k) emit(check_eq4(n, k));
  for (int n = 2; n <= options.max_n; ++n)
    emit(check_involution(InvolutionSpace::phi, n, 0, options.enumeration_cap));
  for (int n = 2; n <= psi_cap; ++n)
    for (int k = 1; k <= n - 1; ++k)
      emit(check_involution(InvolutionSpace::psi, n, k, options.enumeration_cap));
  return reports;
}

bool all_passed(const std::vector<VerificationReport>& reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const VerificationReport& r) { return r.passed; });
}

}  // namespace cycinv
