#include "qkc/report.hpp"

#include "qkc/alcove.hpp"
#include "qkc/ichevalley.hpp"
#include "qkc/qbg.hpp"
#include "qkc/qkpres.hpp"
#include "qkc/relations.hpp"
#include "qkc/semimod.hpp"

#include <iomanip>
#include <sstream>

namespace qkc {

std::string mode_str(Mode m) { return m == Mode::Exact ? "exact" : "truncated"; }

Mode parse_mode(const std::string& s) {
  if (s == "truncated") return Mode::Truncated;
  if (s == "exact") return Mode::Exact;
  throw ConfigError("mode must be truncated or exact, got " + s);
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"qbg", "alcove", "ic", "semimod", "relations", "qkpres"};
  return names;
}

bool known_suite(const std::string& s) {
  if (s == "all") return true;
  for (const auto& x : suite_names())
    if (x == s) return true;
  return false;
}

int VerificationReport::failures() const {
  int f = 0;
  for (const auto& r : records) f += !r.pass;
  return f;
}

Json VerificationReport::to_json(bool timing) const {
  Json checks = Json::array();
  for (const auto& r : records) {
    Json c{{"id", r.id}, {"status", r.pass ? "pass" : "fail"}, {"location", r.location}};
    if (timing) c["seconds"] = r.seconds;
    checks.push_back(c);
  }
  return Json{{"suite", suite},
              {"n", n},
              {"trunc", trunc},
              {"mode", mode_str(mode)},
              {"status", pass() ? "pass" : "fail"},
              {"checks", checks}};
}

std::string VerificationReport::text(bool timing) const {
  std::ostringstream os;
  os << "suite " << suite << "  n=" << n << "  D=" << trunc << "  mode=" << mode_str(mode) << "\n";
  for (const auto& r : records) {
    os << (r.pass ? "  pass  " : "  FAIL  ") << r.id;
    if (timing) os << "  [" << std::fixed << std::setprecision(3) << r.seconds << "s]";
    if (!r.pass) os << "\n        " << r.location;
    os << "\n";
  }
  os << (pass() ? "all " + std::to_string(records.size()) + " checks pass"
                : std::to_string(failures()) + " of " + std::to_string(records.size()) + " checks fail")
     << "\n";
  return os.str();
}

namespace {

std::vector<CheckRecord> one_suite(const std::string& s, int n, int cap) {
  std::vector<CheckRecord> r;
  if (s == "qbg") {
    append(r, check_qbg(n));
  } else if (s == "alcove") {
    append(r, check_listings(n));
    append(r, check_alcove_invariants(n));
  } else if (s == "ic") {
    append(r, check_inverse_chevalley(n));
    append(r, check_derived_recurrences(n, cap));
    append(r, check_ic_invariants(n));
  } else if (s == "semimod") {
    append(r, check_recursion(n, cap));
    append(r, check_symmetry(n, cap));
    append(r, check_duality(n));
    append(r, check_factorization_sinf(n));
  } else if (s == "relations") {
    append(r, check_base_relation(n, cap));
    append(r, check_derivation(n));
    append(r, check_system(n));
    append(r, check_csym_props(n));
    append(r, check_generating_identities(n, 2 * n));
  } else if (s == "qkpres") {
    append(r, check_factorization_q(n));
    append(r, check_dictionary(n, cap));
    append(r, check_q_zero(n, cap));
    append(r, check_polynomial_factorization(n, cap));
  } else {
    throw ConfigError("unknown suite " + s);
  }
  for (auto& c : r) c.id = s + ": " + c.id;
  return r;
}

}  // namespace

VerificationReport run_suite(const std::string& suite, int n, int trunc, Mode mode) {
  if (n < 1) throw ConfigError("n must be at least 1");
  if (trunc < 0) throw ConfigError("truncation degree must be nonnegative");
  if (!known_suite(suite)) throw ConfigError("unknown suite " + suite);
  // polynomial-side series at n = 6 outgrow memory
  if ((suite == "qkpres" || suite == "all") && n > 5) throw ConfigError("suite " + suite + " supports n <= 5");
  VerificationReport rep;
  rep.suite = suite;
  rep.n = n;
  rep.trunc = trunc;
  rep.mode = mode;
  const int cap = mode == Mode::Exact ? kExact : trunc;
  if (suite == "all") {
    for (const auto& s : suite_names()) append(rep.records, one_suite(s, n, cap));
  } else {
    rep.records = one_suite(suite, n, cap);
  }
  return rep;
}

}  // namespace qkc
