#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cycinv/labeled.hpp"
#include "cycinv/marked.hpp"
#include "cycinv/permutation.hpp"
#include "cycinv/stirling.hpp"
#include "cycinv/verify.hpp"

namespace {

using cycinv::i64;

struct VerifyOptions {
  bool all = false;
  bool theorem1 = false;
  bool eq2 = false;
  bool eq4 = false;
  bool phi = false;
  bool psi = false;
  int n = 0;
  int k = 0;
  bool has_n = false;
  bool has_k = false;
  int max_n = 8;
  int psi_max_n = 7;
  int cap = cycinv::kDefaultEnumerationCap;
  std::string format = "table";
  std::string out_path;
};

struct TraceOptions {
  bool phi = false;
  bool psi = false;
  int n = 0;
  int k = 0;
  bool has_k = false;
  std::string format = "table";
  std::string out_path;
  std::string element;
};

struct TableOptions {
  bool stirling = false;
  bool eq4 = false;
  int n = 0;
  int max_n = 0;
  std::string format = "table";
  std::string out_path;
};

int parity_sign(int exponent) { return exponent % 2 == 0 ? +1 : -1; }

std::string sign_text(int s) { return s > 0 ? "+1" : "-1"; }

void write_out(const std::string& path, const std::string& payload) {
  std::ofstream file(path);
  if (!file) throw std::runtime_error("cannot open output file: " + path);
  file << payload;
}

std::string load_element(const std::string& raw) {
  if (raw.empty() || raw[0] != '@') return raw;
  const std::string path = raw.substr(1);
  std::ifstream file(path);
  if (!file) throw std::runtime_error("cannot open element file: " + path);
  std::ostringstream buf;
  buf << file.rdbuf();
  std::string text = buf.str();
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
  return text;
}

int run_verify(const VerifyOptions& o) {
  const bool single = o.theorem1 || o.eq2 || o.eq4 || o.phi || o.psi;
  if (!o.all && !single)
    throw std::invalid_argument(
        "verify: select --all or at least one of --theorem1 --eq2 --eq4 --phi --psi");
  if (single && !o.has_n) throw std::invalid_argument("verify: single checks require --n");
  if (o.has_n && o.n < 1) throw std::invalid_argument("verify: --n must be >= 1");
  if ((o.eq4 || o.psi) && !o.has_k)
    throw std::invalid_argument("verify: --eq4 and --psi require --k");
  if (o.has_k && (o.k < 1 || o.k > o.n - 1))
    throw std::invalid_argument("verify: --k must satisfy 1 <= k <= n-1");
  if ((o.theorem1 || o.phi) && o.n < 2)
    throw std::invalid_argument("verify: --theorem1 and --phi require --n >= 2");

  std::vector<cycinv::VerificationReport> reports;
  if (o.all) {
    cycinv::SuiteOptions suite;
    suite.max_n = o.max_n;
    suite.psi_max_n = o.psi_max_n;
    suite.enumeration_cap = o.cap;
    reports = cycinv::run_suite(suite);
  } else {
    if (o.theorem1) reports.push_back(cycinv::check_theorem1(o.n, o.cap));
    if (o.eq2) reports.push_back(cycinv::check_eq2(o.n));
    if (o.eq4) reports.push_back(cycinv::check_eq4(o.n, o.k));
    if (o.phi)
      reports.push_back(cycinv::check_involution(cycinv::InvolutionSpace::phi, o.n, 0, o.cap));
    if (o.psi)
      reports.push_back(cycinv::check_involution(cycinv::InvolutionSpace::psi, o.n, o.k, o.cap));
  }

  if (o.format == "json") {
    std::cout << cycinv::to_json(reports).dump(2) << '\n';
  } else {
    std::cout << cycinv::format_report_table(reports);
    size_t passed = 0;
    for (const auto& r : reports) passed += r.passed ? 1 : 0;
    std::cout << passed << "/" << reports.size() << " checks passed\n";
  }
  if (!o.out_path.empty()) write_out(o.out_path, cycinv::to_json(reports).dump(2) + "\n");
  return cycinv::all_passed(reports) ? 0 : 1;
}

std::string chain_text(const std::vector<int>& elements) {
  std::string out = "(";
  for (size_t t = 0; t < elements.size(); ++t) {
    if (t) out += ",";
    out += std::to_string(elements[t]);
  }
  return out + ")";
}

void emit_trace_line(std::ostream& os, const std::string& key, const std::string& value) {
  os << key;
  for (size_t t = key.size(); t < 14; ++t) os << ' ';
  os << value << '\n';
}

int run_trace(const TraceOptions& o) {
  if (o.phi == o.psi)
    throw std::invalid_argument("trace: select exactly one of --phi or --psi");
  if (o.n < 1) throw std::invalid_argument("trace: --n must be >= 1");
  if (o.phi && o.has_k) throw std::invalid_argument("trace: --k does not apply to --phi");
  if (o.psi && !o.has_k) throw std::invalid_argument("trace: --psi requires --k");
  if (o.psi && (o.k < 1 || o.k > o.n - 1))
    throw std::invalid_argument("trace: --k must satisfy 1 <= k <= n-1");
  if (o.phi && o.format == "dot")
    throw std::invalid_argument("trace: dot output applies only to --psi");

  const std::string text = load_element(o.element);
  std::ostringstream os;
  nlohmann::json j;

  if (o.phi) {
    const cycinv::MarkedPermutation input = cycinv::parse_marked(text, o.n);
    const int n = input.size();
    const int input_sign = cycinv::sign(input.perm());
    j["space"] = "phi";
    j["n"] = n;
    j["input"] = cycinv::format_marked(input);
    j["input_sign"] = input_sign;
    emit_trace_line(os, "space", "phi");
    emit_trace_line(os, "input", cycinv::format_marked(input));
    emit_trace_line(os, "sign", sign_text(input_sign));
    if (cycinv::is_phi_fixed(input)) {
      j["branch"] = "case 2 fixed point";
      emit_trace_line(os, "branch", "case 2 fixed point");
    } else {
      if (input.marked().size() <= n - 2) {
        int first = 0, second = 0;
        for (int x = 1; x <= n && second == 0; ++x) {
          if (input.marked().contains(x)) continue;
          (first == 0 ? first : second) = x;
        }
        const std::string pair = "(" + std::to_string(first) + "," + std::to_string(second) + ")";
        j["branch"] = "case 1";
        j["pair"] = {first, second};
        emit_trace_line(os, "branch", "case 1");
        emit_trace_line(os, "pair", pair);
      } else {
        const std::string branch =
            input.marked().size() == n ? "case 2 toggle (split)" : "case 2 toggle (merge)";
        j["branch"] = branch;
        emit_trace_line(os, "branch", branch);
      }
      const cycinv::MarkedPermutation output = cycinv::phi(input);
      const int output_sign = cycinv::sign(output.perm());
      j["output"] = cycinv::format_marked(output);
      j["output_sign"] = output_sign;
      j["round_trip"] = cycinv::phi(output) == input;
      emit_trace_line(os, "output", cycinv::format_marked(output));
      emit_trace_line(os, "sign", sign_text(output_sign));
      emit_trace_line(os, "round trip", cycinv::phi(output) == input ? "ok" : "BROKEN");
    }
  } else {
    const cycinv::LabeledConfiguration input = cycinv::parse_configuration(text, o.n, o.k);
    const int input_sign = cycinv::sign(input.perm());
    const auto pair = cycinv::find_case1_pair(input);
    if (o.format == "dot") {
      if (pair)
        throw std::invalid_argument(
            "trace: dot output requires a configuration with no equal-label pair");
      const std::string dot = cycinv::to_dot(cycinv::build_digraph(input));
      std::cout << dot;
      if (!o.out_path.empty()) write_out(o.out_path, dot);
      return 0;
    }
    j["space"] = "psi";
    j["n"] = o.n;
    j["k"] = o.k;
    j["input"] = cycinv::format_configuration(input);
    j["input_sign"] = input_sign;
    emit_trace_line(os, "space", "psi");
    emit_trace_line(os, "input", cycinv::format_configuration(input));
    emit_trace_line(os, "sign", sign_text(input_sign));
    if (cycinv::is_fix(input)) {
      j["branch"] = "case 2 fixed point";
      emit_trace_line(os, "branch", "case 2 fixed point");
    } else {
      if (pair) {
        const auto [i, jx] = *pair;
        j["branch"] = "case 1";
        j["pair"] = {i, jx};
        emit_trace_line(os, "branch", "case 1");
        emit_trace_line(os, "pair", "(" + std::to_string(i) + "," + std::to_string(jx) + ")");
      } else {
        const cycinv::FunctionalDigraph d = cycinv::build_digraph(input);
        const cycinv::FreeChain chain = cycinv::maximal_free_chain(d);
        const int pivot = cycinv::select_pivot(chain);
        const bool pivot_free = cycinv::is_free(d, pivot);
        j["branch"] = "case 2 surgery";
        j["chain"] = chain.elements;
        j["pivot"] = pivot;
        j["pivot_free"] = pivot_free;
        emit_trace_line(os, "branch", "case 2 surgery");
        emit_trace_line(os, "free chain", chain_text(chain.elements));
        emit_trace_line(os, "pivot",
                        std::to_string(pivot) + (pivot_free ? " (free)" : " (not free)"));
      }
      const cycinv::LabeledConfiguration output = cycinv::psi(input);
      const int output_sign = cycinv::sign(output.perm());
      j["output"] = cycinv::format_configuration(output);
      j["output_sign"] = output_sign;
      j["round_trip"] = cycinv::psi(output) == input;
      emit_trace_line(os, "output", cycinv::format_configuration(output));
      emit_trace_line(os, "sign", sign_text(output_sign));
      emit_trace_line(os, "round trip", cycinv::psi(output) == input ? "ok" : "BROKEN");
    }
  }

  const std::string rendered = o.format == "json" ? j.dump(2) + "\n" : os.str();
  std::cout << rendered;
  if (!o.out_path.empty()) write_out(o.out_path, rendered);
  return 0;
}

int run_table(const TableOptions& o) {
  if (o.stirling == o.eq4)
    throw std::invalid_argument("table: select exactly one of --stirling or --eq4");
  std::ostringstream os;
  nlohmann::json j;
  if (o.stirling) {
    if (o.max_n < 1 || o.max_n > cycinv::kStirlingMaxN)
      throw std::invalid_argument("table: --max-n must be in [1," +
                                  std::to_string(cycinv::kStirlingMaxN) + "]");
    nlohmann::json rows = nlohmann::json::array();
    for (int n = 1; n <= o.max_n; ++n) {
      const std::vector<i64> row = cycinv::stirling_row(n);
      std::string line = "[";
      for (int i = 1; i <= n; ++i) {
        if (i > 1) line += ",";
        line += std::to_string(row[static_cast<size_t>(i)]);
      }
      line += "]";
      os << "n=" << n << ": " << line << '\n';
      rows.push_back(std::vector<i64>(row.begin() + 1, row.end()));
    }
    j["stirling"] = rows;
  } else {
    if (o.n < 2 || o.n > cycinv::kStirlingMaxN)
      throw std::invalid_argument("table: --eq4 requires --n in [2," +
                                  std::to_string(cycinv::kStirlingMaxN) + "]");
    nlohmann::json rows = nlohmann::json::array();
    for (int k = 1; k <= o.n - 1; ++k) {
      const i64 value =
          static_cast<i64>(parity_sign(k)) * cycinv::factorial(k) * cycinv::factorial(o.n - k - 1);
      os << "k=" << k << ": " << value << '\n';
      rows.push_back(nlohmann::json{{"k", k}, {"value", value}});
    }
    j["n"] = o.n;
    j["eq4_rhs"] = rows;
  }
  const std::string rendered = o.format == "json" ? j.dump(2) + "\n" : os.str();
  std::cout << rendered;
  if (!o.out_path.empty()) write_out(o.out_path, rendered);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of cycle-count identities via two sign-reversing involutions"};
  app.require_subcommand(1);

  VerifyOptions vo;
  CLI::App* verify = app.add_subcommand("verify", "Run identity and involution checks");
  CLI::Option* all_opt = verify->add_flag("--all", vo.all, "Run the full default suite");
  CLI::Option* t1_opt = verify->add_flag("--theorem1", vo.theorem1, "Even/odd total cycle counts");
  CLI::Option* e2_opt =
      verify->add_flag("--eq2", vo.eq2, "Stirling row vs rising factorial coefficients");
  CLI::Option* e4_opt = verify->add_flag("--eq4", vo.eq4, "Signed Stirling derivative identity");
  CLI::Option* ph_opt = verify->add_flag("--phi", vo.phi, "Involution on marked permutations");
  CLI::Option* ps_opt = verify->add_flag("--psi", vo.psi, "Involution on labeled configurations");
  CLI::Option* n_opt = verify->add_option("--n", vo.n, "Size parameter for single checks");
  CLI::Option* k_opt = verify->add_option("--k", vo.k, "Label bound for --eq4 and --psi");
  verify->add_option("--max-n", vo.max_n, "Suite bound for --all")->default_val(8);
  verify->add_option("--psi-max-n", vo.psi_max_n, "Suite bound for psi and eq4 grids")
      ->default_val(7);
  verify->add_option("--cap", vo.cap, "Enumeration cap override")
      ->default_val(cycinv::kDefaultEnumerationCap);
  verify->add_option("--format", vo.format, "Output format")
      ->check(CLI::IsMember({"table", "json"}));
  verify->add_option("--out", vo.out_path, "Write the JSON report array to a file");
  all_opt->excludes(t1_opt)->excludes(e2_opt)->excludes(e4_opt)->excludes(ph_opt)->excludes(
      ps_opt);

  TraceOptions to;
  CLI::App* trace = app.add_subcommand("trace", "Trace one involution step on one element");
  trace->add_flag("--phi", to.phi, "Trace the marked-permutation involution");
  trace->add_flag("--psi", to.psi, "Trace the labeled-configuration involution");
  trace->add_option("--n", to.n, "Ground-set size")->required();
  CLI::Option* tk_opt = trace->add_option("--k", to.k, "Label bound (psi only)");
  trace->add_option("--format", to.format, "Output format")
      ->check(CLI::IsMember({"table", "json", "dot"}));
  trace->add_option("--out", to.out_path, "Also write the rendering to a file");
  trace->add_option("element", to.element, "Element text, or @path to read it from a file")
      ->required();

  TableOptions tb;
  CLI::App* table = app.add_subcommand("table", "Print reference tables");
  table->add_flag("--stirling", tb.stirling, "Stirling cycle-number triangle");
  table->add_flag("--eq4", tb.eq4, "Right side (-1)^k k!(n-k-1)! for one n");
  table->add_option("--n", tb.n, "Row parameter for --eq4");
  table->add_option("--max-n", tb.max_n, "Triangle bound for --stirling");
  table->add_option("--format", tb.format, "Output format")
      ->check(CLI::IsMember({"table", "json"}));
  table->add_option("--out", tb.out_path, "Also write the rendering to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  vo.has_n = n_opt->count() > 0;
  vo.has_k = k_opt->count() > 0;
  to.has_k = tk_opt->count() > 0;

  try {
    if (app.got_subcommand(verify)) return run_verify(vo);
    if (app.got_subcommand(trace)) return run_trace(to);
    return run_table(tb);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
