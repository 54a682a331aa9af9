#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "cycinv/labeled.hpp"
#include "cycinv/marked.hpp"

namespace cycinv {

/// Outcome of one exhaustive check. Every comparison behind a report is an
/// exact integer equality; witness is non-empty only on failure and names the
/// first violating element in enumeration order, in its text format.
struct VerificationReport {
  std::string name;
  std::map<std::string, i64> params;
  std::string expected;
  std::string actual;
  bool passed = false;
  double elapsed_ms = 0.0;
  std::map<std::string, i64> counts;
  std::string witness;
};

nlohmann::json to_json(const VerificationReport& report);
nlohmann::json to_json(const std::vector<VerificationReport>& reports);
std::string format_report_table(const std::vector<VerificationReport>& reports);

/// Total cycle count of even minus odd permutations of [n] equals
/// (-1)^n * (n-2)!, by full enumeration. Requires 2 <= n <= cap.
VerificationReport check_theorem1(int n, int cap = kDefaultEnumerationCap);

/// The coefficients of x(x+1)...(x+n-1) equal the Stirling row c(n,.).
/// Requires 1 <= n <= 20.
VerificationReport check_eq2(int n);

/// sum over i of c(n,i)*i*(-k)^(i-1) equals (-1)^k * k! * (n-k-1)!,
/// evaluated in 128-bit arithmetic from the Stirling table.
VerificationReport check_eq4(int n, int k);

enum class InvolutionSpace { phi, psi };

/// Exhaustively verifies, over the whole domain: the map composed with
/// itself is the identity, the sign flips at every non-fixed element, the
/// fixed set coincides with the defining predicate, the fixed-point count
/// and common sign match, and the signed sum equals its closed form.
VerificationReport check_involution(InvolutionSpace space, int n, int k = 0,
                                    int cap = kDefaultEnumerationCap);

using MarkedMap = std::function<MarkedPermutation(const MarkedPermutation&)>;
using ConfigMap = std::function<LabeledConfiguration(const LabeledConfiguration&)>;

/// Same checks as check_involution, but over a caller-supplied map. Used to
/// demonstrate that near-miss maps (e.g. a wrong pivot rule) are detected.
VerificationReport check_involution_with(const std::string& name, int n, const MarkedMap& map,
                                         int cap = kDefaultEnumerationCap);
VerificationReport check_involution_with(const std::string& name, int n, int k,
                                         const ConfigMap& map, int cap = kDefaultEnumerationCap);

struct SuiteOptions {
  int max_n = 8;      // theorem1 and the phi checks run for 2..max_n
  int psi_max_n = 7;  // eq4 and the psi checks run for n up to min(max_n, psi_max_n)
  int enumeration_cap = kDefaultEnumerationCap;
};

using ReportSink = std::function<void(const VerificationReport&)>;

/// Runs the full battery in a fixed order, forwarding each report to the
/// sink as it completes. The suite passes iff every report does.
std::vector<VerificationReport> run_suite(const SuiteOptions& options,
                                          const ReportSink& sink = {});

bool all_passed(const std::vector<VerificationReport>& reports);

}  // namespace cycinv
