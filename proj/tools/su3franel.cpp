// Command-line front end: exact multiplicity tables, eigenpolynomial
// coefficients, identity-verification suites, and the Franel-combination
// fitting solver, with deterministic JSON or CSV output.

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "su3franel/calogero.hpp"
#include "su3franel/exact_arith.hpp"
#include "su3franel/identities.hpp"
#include "su3franel/laurent.hpp"
#include "su3franel/symfunc.hpp"
#include "su3franel/weights.hpp"

namespace {

using nlohmann::json;
using namespace su3franel;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsageError = 2;

// Arguments that parsed syntactically but fail a semantic precondition.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CommonFlags {
  std::string format = "json";
  std::string output;
};

void add_common_flags(CLI::App* cmd, CommonFlags* flags) {
  cmd->add_option("--format", flags->format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  cmd->add_option("--output", flags->output,
                  "Write the result to this file instead of standard output");
}

std::string integer_str(const Integer& v) { return v.get_str(); }

// "a/b" with the denominator omitted when it is 1.
std::string rational_str(const Rational& v) {
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

std::string render_record(const std::string& command,
                          const std::map<std::string, std::string>& parameters,
                          json payload, const std::string& status) {
  json record;
  record["command"] = command;
  record["parameters"] = parameters;
  record["payload"] = std::move(payload);
  record["status"] = status;
  return record.dump(2) + "\n";
}

int write_out(const std::string& text, const CommonFlags& flags) {
  if (flags.output.empty()) {
    std::cout << text;
    return kExitOk;
  }
  std::ofstream file(flags.output, std::ios::binary);
  file << text;
  file.close();
  if (!file) {
    std::cerr << "su3franel: cannot write output file: " << flags.output
              << "\n";
    return kExitUsageError;
  }
  return kExitOk;
}

// ---- argument micro-parsers -------------------------------------------------

bool parse_long(const std::string& text, long* out) {
  if (text.empty()) return false;
  std::size_t pos = 0;
  try {
    *out = std::stol(text, &pos);
  } catch (const std::exception&) {
    return false;
  }
  return pos == text.size();
}

// Strict "P" or "P/Q" with integral parts and a nonzero denominator.
Rational parse_rational_literal(const std::string& text) {
  const std::size_t slash = text.find('/');
  const std::string num_part = text.substr(0, slash);
  auto is_integer = [](const std::string& s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t i = (allow_sign && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  if (!is_integer(num_part, true))
    throw UsageError("malformed rational literal: " + text);
  Integer num(num_part);
  Integer den = 1;
  if (slash != std::string::npos) {
    const std::string den_part = text.substr(slash + 1);
    if (!is_integer(den_part, false))
      throw UsageError("malformed rational literal: " + text);
    den = Integer(den_part);
    if (den == 0) throw UsageError("zero denominator in rational: " + text);
  }
  return make_rational(num, den);
}

Weight parse_weight_pair(const std::string& text) {
  const std::size_t comma = text.find(',');
  long p = 0;
  long q = 0;
  if (comma == std::string::npos || !parse_long(text.substr(0, comma), &p) ||
      !parse_long(text.substr(comma + 1), &q) || p < 0 || q < 0)
    throw UsageError("malformed weight, expected \"p,q\" with p, q >= 0: " +
                     text);
  return Weight(static_cast<int>(p), static_cast<int>(q));
}

std::vector<long> parse_shift_range(const std::string& text) {
  const std::size_t dots = text.find("..");
  long lo = 0;
  long hi = 0;
  if (dots == std::string::npos || !parse_long(text.substr(0, dots), &lo) ||
      !parse_long(text.substr(dots + 2), &hi) || lo > hi)
    throw UsageError("malformed shift range, expected \"a..b\" with a <= b: " +
                     text);
  std::vector<long> shifts;
  for (long s = lo; s <= hi; ++s) shifts.push_back(s);
  return shifts;
}

// Preset grammar: optional positive integer scale, then zero or more (n+k)
// factors, optionally joined by '*'.  Examples: "1", "6", "6(n+1)",
// "12*(n+1)*(n+2)".
RatPoly parse_prefactor_preset(const std::string& text) {
  const auto fail = [&]() -> RatPoly {
    throw UsageError("malformed prefactor preset: " + text);
  };
  if (text.empty()) return fail();
  std::size_t i = 0;
  RatPoly poly = npoly({1});
  bool saw_anything = false;
  if (std::isdigit(static_cast<unsigned char>(text[0]))) {
    std::size_t j = 0;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])))
      ++j;
    poly = RatPoly(Rational(Integer(text.substr(0, j))));
    i = j;
    saw_anything = true;
  }
  while (i < text.size()) {
    if (text[i] == '*') {
      ++i;
      if (i >= text.size()) return fail();
    }
    if (text[i] != '(') return fail();
    const std::size_t close = text.find(')', i);
    if (close == std::string::npos) return fail();
    const std::string body = text.substr(i + 1, close - i - 1);
    if (body.empty() || body[0] != 'n') return fail();
    long k = 0;
    if (body.size() > 1) {
      if (body[1] != '+' && body[1] != '-') return fail();
      if (!parse_long(body.substr(1), &k)) return fail();
    }
    poly = poly * nplus(k);
    i = close + 1;
    saw_anything = true;
  }
  if (!saw_anything) return fail();
  return poly;
}

// ---- command payload builders ----------------------------------------------

struct CommandResult {
  std::string text;
  int exit_code = kExitOk;
};

CommandResult run_franel(long max_n, const CommonFlags& flags) {
  if (max_n < 0) throw UsageError("--max must be >= 0");
  if (flags.format == "csv") {
    std::ostringstream out;
    for (long n = 0; n <= max_n; ++n)
      out << n << "," << integer_str(franel(static_cast<unsigned long>(n)))
          << "\n";
    return {out.str(), kExitOk};
  }
  json values = json::array();
  for (long n = 0; n <= max_n; ++n)
    values.push_back(
        {{"franel", integer_str(franel(static_cast<unsigned long>(n)))},
         {"n", n}});
  return {render_record("franel", {{"max", std::to_string(max_n)}},
                        json{{"values", std::move(values)}}, "ok"),
          kExitOk};
}

CommandResult run_mult(long n, const std::string& basis,
                       const CommonFlags& flags) {
  if (n < 0) throw UsageError("--n must be >= 0");
  std::vector<std::pair<Weight, Integer>> rows;
  if (basis == "monomial") {
    for (const Weight& w : dominant_weights_in_power(static_cast<int>(n))) {
      Integer m = weight_multiplicity(w, static_cast<int>(n));
      if (m != 0) rows.emplace_back(w, std::move(m));
    }
  } else {
    // The irreducible solve cross-checks itself against the
    // character-peeling oracle before anything is emitted.
    const SymFn b =
        irrep_multiplicities(static_cast<int>(n), Validation::On);
    for (const auto& [w, c] : b.coeffs)
      if (c != 0) rows.emplace_back(w, c);
  }
  if (flags.format == "csv") {
    std::ostringstream out;
    for (const auto& [w, c] : rows)
      out << w.p << "," << w.q << "," << integer_str(c) << "\n";
    return {out.str(), kExitOk};
  }
  json entries = json::array();
  for (const auto& [w, c] : rows)
    entries.push_back(
        {{"multiplicity", integer_str(c)}, {"p", w.p}, {"q", w.q}});
  return {render_record(
              "mult",
              {{"basis", basis}, {"n", std::to_string(n)}},
              json{{"entries", std::move(entries)}}, "ok"),
          kExitOk};
}

CommandResult run_gegenbauer(const std::string& kappa_text, long m1, long m2,
                             const CommonFlags& flags) {
  if (m1 < 0 || m2 < 0) throw UsageError("--m1 and --m2 must be >= 0");
  const Rational kappa = parse_rational_literal(kappa_text);
  const std::map<std::string, std::string> parameters = {
      {"kappa", rational_str(kappa)},
      {"m1", std::to_string(m1)},
      {"m2", std::to_string(m2)}};
  ZPoly poly;
  try {
    poly = gegenbauer(Coupling{kappa},
                      Weight(static_cast<int>(m1), static_cast<int>(m2)));
  } catch (const ResonanceError& e) {
    std::cerr << "su3franel: " << e.what() << "\n";
    if (flags.format == "csv")
      return {std::string("resonance\n"), kExitVerificationFailure};
    return {render_record("gegenbauer", parameters,
                          json{{"error", std::string(e.what())}},
                          "verification-failure"),
            kExitVerificationFailure};
  }
  // Exponent pairs in lexicographically descending order.
  if (flags.format == "csv") {
    std::ostringstream out;
    for (auto it = poly.terms().rbegin(); it != poly.terms().rend(); ++it)
      out << it->first.first << "," << it->first.second << ","
          << rational_str(it->second) << "\n";
    return {out.str(), kExitOk};
  }
  json terms = json::array();
  for (auto it = poly.terms().rbegin(); it != poly.terms().rend(); ++it)
    terms.push_back({{"coefficient", rational_str(it->second)},
                     {"z1", it->first.first},
                     {"z2", it->first.second}});
  return {render_record("gegenbauer", parameters,
                        json{{"terms", std::move(terms)}}, "ok"),
          kExitOk};
}

struct CheckLine {
  std::string name;
  unsigned long n = 0;
  bool pass = false;
};

void run_suite(const std::string& suite, unsigned long n_max,
               std::vector<CheckLine>* lines) {
  if (suite == "hamiltonian") {
    for (unsigned long n = 0; n <= n_max; ++n)
      lines->push_back({"hamiltonian", n, verify_hamiltonian_identity(n)});
  } else if (suite == "coefficients") {
    for (unsigned long n = 0; n <= n_max; ++n) {
      lines->push_back({"coefficient-relation-0-0", n,
                        check_coefficient_relation(Weight(0, 0), n)});
      lines->push_back({"coefficient-relation-3-0", n,
                        check_coefficient_relation(Weight(3, 0), n)});
    }
  } else if (suite == "franel-expressions") {
    for (const auto& expr : franel_expression_catalog()) {
      std::ostringstream name;
      name << "franel-expression-" << expr.weight.p << "-" << expr.weight.q;
      lines->push_back(
          {name.str(), n_max, verify_franel_expression(expr, n_max)});
    }
  } else if (suite == "derivative") {
    for (unsigned long n = 1; n <= n_max; ++n)
      lines->push_back(
          {"derivative-expansions", n, verify_derivative_expansions(n).all()});
  } else if (suite == "recurrence") {
    for (unsigned long n = 1; n <= n_max; ++n) {
      lines->push_back(
          {"recurrence-direct", n, verify_franel_recurrence_direct(n)});
      if (n >= 2)
        lines->push_back(
            {"recurrence-bridge", n, verify_franel_recurrence_bridge(n)});
    }
  } else if (suite == "oracle") {
    for (unsigned long n = 0; n <= n_max; ++n) {
      const XLaurent power =
          adjoint_character_x().pow(static_cast<unsigned>(n));
      const auto monomial_oracle = decompose_in_monomials(power);
      bool weights_ok = true;
      for (const Weight& w : dominant_weights_in_power(static_cast<int>(n))) {
        const auto it = monomial_oracle.find(w);
        const Integer expected = it == monomial_oracle.end() ? Integer(0)
                                                             : it->second;
        if (weight_multiplicity(w, static_cast<int>(n)) != expected)
          weights_ok = false;
      }
      for (const auto& [w, c] : monomial_oracle)
        if (weight_multiplicity(w, static_cast<int>(n)) != c)
          weights_ok = false;
      lines->push_back({"weight-multiplicity-oracle", n, weights_ok});

      const SymFn b =
          irrep_multiplicities(static_cast<int>(n), Validation::Off);
      lines->push_back({"irreducible-multiplicity-oracle", n,
                        b.coeffs == decompose_in_characters(power)});
    }
  } else {
    throw UsageError("unknown suite: " + suite);
  }
}

CommandResult run_verify(const std::string& suite, long n_max_arg,
                         const CommonFlags& flags) {
  if (n_max_arg < 0) throw UsageError("--n-max must be >= 0");
  const unsigned long n_max = static_cast<unsigned long>(n_max_arg);
  static const std::vector<std::string> kAllSuites = {
      "hamiltonian", "coefficients", "franel-expressions",
      "derivative",  "recurrence",   "oracle"};
  std::vector<CheckLine> lines;
  if (suite == "all") {
    for (const std::string& s : kAllSuites) run_suite(s, n_max, &lines);
  } else {
    run_suite(suite, n_max, &lines);
  }
  bool all_pass = true;
  for (const CheckLine& line : lines) all_pass = all_pass && line.pass;
  const int code = all_pass ? kExitOk : kExitVerificationFailure;
  if (flags.format == "csv") {
    std::ostringstream out;
    for (const CheckLine& line : lines)
      out << line.name << "," << line.n << ","
          << (line.pass ? "pass" : "fail") << "\n";
    return {out.str(), code};
  }
  json checks = json::array();
  for (const CheckLine& line : lines)
    checks.push_back({{"n", line.n}, {"name", line.name}, {"pass", line.pass}});
  return {render_record("verify",
                        {{"n_max", std::to_string(n_max)}, {"suite", suite}},
                        json{{"checks", std::move(checks)}},
                        all_pass ? "ok" : "verification-failure"),
          code};
}

CommandResult run_express(const std::string& weight_text,
                          const std::string& prefactor_text,
                          const std::string& shifts_text, long degree_arg,
                          const CommonFlags& flags) {
  if (degree_arg < 0) throw UsageError("--degree must be >= 0");
  const Weight weight = parse_weight_pair(weight_text);
  const RatPoly prefactor = parse_prefactor_preset(prefactor_text);
  const std::vector<long> shifts = parse_shift_range(shifts_text);
  const unsigned degree = static_cast<unsigned>(degree_arg);

  const unsigned long unknowns =
      static_cast<unsigned long>(shifts.size()) * (degree + 1);
  const unsigned long base =
      shifts.front() < 0 ? static_cast<unsigned long>(-shifts.front()) : 0;
  std::vector<unsigned long> samples;
  for (unsigned long i = 0; i < unknowns + 8; ++i) samples.push_back(base + i);

  std::optional<std::vector<RatPoly>> polys;
  try {
    polys = express_in_franel(weight, prefactor, shifts, degree, samples);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  const std::map<std::string, std::string> parameters = {
      {"degree", std::to_string(degree)},
      {"prefactor", prefactor_text},
      {"shifts", shifts_text},
      {"weight", weight_text}};

  if (!polys) {
    if (flags.format == "csv") return {std::string("no solution\n"), kExitOk};
    return {render_record("express", parameters,
                          json{{"solution", "no solution"}}, "ok"),
            kExitOk};
  }
  if (flags.format == "csv") {
    std::ostringstream out;
    for (std::size_t i = 0; i < shifts.size(); ++i) {
      out << shifts[i];
      if ((*polys)[i].is_zero()) {
        out << ",0";
      } else {
        for (const Rational& c : (*polys)[i].coefficients())
          out << "," << rational_str(c);
      }
      out << "\n";
    }
    return {out.str(), kExitOk};
  }
  json rows = json::array();
  for (std::size_t i = 0; i < shifts.size(); ++i) {
    json coeffs = json::array();
    if ((*polys)[i].is_zero()) {
      coeffs.push_back("0");
    } else {
      for (const Rational& c : (*polys)[i].coefficients())
        coeffs.push_back(rational_str(c));
    }
    rows.push_back({{"coefficients", std::move(coeffs)}, {"shift", shifts[i]}});
  }
  return {render_record("express", parameters,
                        json{{"polynomials", std::move(rows)}}, "ok"),
          kExitOk};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact multiplicity tables, Calogero-Sutherland eigenpolynomials, and "
      "Franel-number identity checks for tensor powers of the SU(3) adjoint "
      "representation"};
  app.require_subcommand(1);

  CommonFlags franel_flags;
  long franel_max = 0;
  CLI::App* cmd_franel =
      app.add_subcommand("franel", "Print the cubed-binomial sums F_0..F_max");
  cmd_franel->add_option("--max", franel_max, "Largest index to print")
      ->required();
  add_common_flags(cmd_franel, &franel_flags);

  CommonFlags mult_flags;
  long mult_n = 0;
  std::string mult_basis;
  CLI::App* cmd_mult = app.add_subcommand(
      "mult", "Multiplicities in the n-th tensor power of the adjoint");
  cmd_mult->add_option("--n", mult_n, "Tensor power")->required();
  cmd_mult->add_option("--basis", mult_basis, "Multiplicity basis")
      ->check(CLI::IsMember({"monomial", "character"}))
      ->required();
  add_common_flags(cmd_mult, &mult_flags);

  CommonFlags geg_flags;
  std::string geg_kappa;
  long geg_m1 = 0;
  long geg_m2 = 0;
  CLI::App* cmd_geg = app.add_subcommand(
      "gegenbauer",
      "Exponent-coefficient list of a generalized Gegenbauer polynomial");
  cmd_geg->add_option("--kappa", geg_kappa, "Coupling, as \"P\" or \"P/Q\"")
      ->required();
  cmd_geg->add_option("--m1", geg_m1, "First label")->required();
  cmd_geg->add_option("--m2", geg_m2, "Second label")->required();
  add_common_flags(cmd_geg, &geg_flags);

  CommonFlags verify_flags;
  std::string verify_suite;
  long verify_n_max = 0;
  CLI::App* cmd_verify =
      app.add_subcommand("verify", "Run an identity-verification suite");
  cmd_verify->add_option("--suite", verify_suite, "Suite name")
      ->check(CLI::IsMember({"all", "hamiltonian", "coefficients",
                             "franel-expressions", "derivative", "recurrence",
                             "oracle"}))
      ->required();
  cmd_verify->add_option("--n-max", verify_n_max, "Largest index to check")
      ->required();
  add_common_flags(cmd_verify, &verify_flags);

  CommonFlags express_flags;
  std::string express_weight;
  std::string express_prefactor = "1";
  std::string express_shifts;
  long express_degree = 0;
  CLI::App* cmd_express = app.add_subcommand(
      "express",
      "Fit a weight-multiplicity family to shifted Franel numbers with "
      "polynomial coefficients");
  cmd_express->add_option("--weight", express_weight, "Weight, as \"p,q\"")
      ->required();
  cmd_express->add_option("--prefactor", express_prefactor,
                          "Prefactor preset, e.g. \"6*(n+1)\"")
      ->capture_default_str();
  cmd_express->add_option("--shifts", express_shifts, "Shift range \"a..b\"")
      ->required();
  cmd_express
      ->add_option("--degree", express_degree,
                   "Degree bound for the coefficient polynomials")
      ->capture_default_str();
  add_common_flags(cmd_express, &express_flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsageError;
  }

  try {
    CommandResult result;
    CommonFlags flags;
    if (cmd_franel->parsed()) {
      result = run_franel(franel_max, franel_flags);
      flags = franel_flags;
    } else if (cmd_mult->parsed()) {
      result = run_mult(mult_n, mult_basis, mult_flags);
      flags = mult_flags;
    } else if (cmd_geg->parsed()) {
      result = run_gegenbauer(geg_kappa, geg_m1, geg_m2, geg_flags);
      flags = geg_flags;
    } else if (cmd_verify->parsed()) {
      result = run_verify(verify_suite, verify_n_max, verify_flags);
      flags = verify_flags;
    } else {
      result = run_express(express_weight, express_prefactor, express_shifts,
                           express_degree, express_flags);
      flags = express_flags;
    }
    const int write_code = write_out(result.text, flags);
    return write_code == kExitOk ? result.exit_code : write_code;
  } catch (const UsageError& e) {
    std::cerr << "su3franel: " << e.what() << "\n";
    return kExitUsageError;
  } catch (const std::exception& e) {
    std::cerr << "su3franel: internal error: " << e.what() << "\n";
    return kExitVerificationFailure;
  }
}
