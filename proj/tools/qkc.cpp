#include "qkc/alcove.hpp"
#include "qkc/ichevalley.hpp"
#include "qkc/qbg.hpp"
#include "qkc/qkpres.hpp"
#include "qkc/relations.hpp"
#include "qkc/report.hpp"
#include "qkc/semimod.hpp"

#include <CLI11.hpp>
#include <omp.h>

#include <cstdlib>
#include <iostream>
#include <optional>

using namespace qkc;

namespace {

constexpr int kMaxN = 6;

void set_threads() {
  if (const char* t = std::getenv("QKC_THREADS")) {
    const int k = std::atoi(t);
    if (k < 1) throw ConfigError("QKC_THREADS must be a positive integer");
    omp_set_num_threads(k);
  }
}

void check_n(int n) {
  if (n < 1 || n > kMaxN) throw ConfigError("n must lie in 1.." + std::to_string(kMaxN));
}

int default_trunc(int n, const std::optional<int>& d) {
  if (!d) return 2 * n + 2;
  if (*d < 0) throw ConfigError("--trunc must be nonnegative");
  return *d;
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

FRange make_range(const std::string& variant, int k, int n) {
  if (variant == "full") return FRange::full();
  if (k < 1 || k > n) throw ConfigError("--k must lie in 1..n for variant " + variant);
  if (variant == "k" || variant == "upper") return FRange::upper(k);
  if (variant == "kbar" || variant == "barred") return FRange::barred(k);
  throw ConfigError("variant must be full, k or kbar");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qkc: exact checks for the quantum K-ring of type C flag manifolds"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "key = value file; a [verify] section sets n, trunc, mode, suite");

  bool json = false;
  bool timing = false;
  int n = 2;
  std::optional<int> trunc;
  std::string mode = "truncated";
  std::string suite = "all";

  auto* verify = app.add_subcommand("verify", "run identity suites");
  verify->add_option("--n", n, "rank")->required();
  verify->add_option("--trunc", trunc, "Q/T truncation degree, default 2n+2");
  verify->add_option("--mode", mode, "truncated or exact")->check(CLI::IsMember({"truncated", "exact"}));
  verify->add_option("--suite,--suites", suite, "qbg|alcove|ic|semimod|relations|qkpres|all");
  verify->add_flag("--json", json, "emit the report as JSON");
  verify->add_flag("--timing", timing, "include wall times");

  auto* show = app.add_subcommand("show", "print an object");
  show->require_subcommand(1);
  int l = 0, k = 0;
  std::string variant = "full";
  bool barred = false;
  auto add_common = [&](CLI::App* c) {
    c->add_option("--n", n, "rank")->required();
    c->add_option("--trunc", trunc, "Q/T truncation degree, default 2n+2");
    c->add_flag("--json", json, "JSON output");
  };
  auto* show_f = show->add_subcommand("f", "F_l and its variants");
  add_common(show_f);
  show_f->add_option("--l", l, "degree")->required();
  show_f->add_option("--variant", variant, "full|k|kbar");
  show_f->add_option("--k", k, "range index for the k and kbar variants");
  auto* show_ff = show->add_subcommand("ff", "the module sum for F_l");
  add_common(show_ff);
  show_ff->add_option("--l", l, "degree")->required();
  show_ff->add_option("--variant", variant, "full|k|kbar");
  show_ff->add_option("--k", k, "range index for the k and kbar variants");
  auto* show_ideal = show->add_subcommand("ideal", "generators F_l - E_l");
  add_common(show_ideal);
  auto* show_sch = show->add_subcommand("schubert", "Schubert class polynomial");
  add_common(show_sch);
  show_sch->add_option("--k", k, "1..n")->required();
  show_sch->add_flag("--barred", barred, "use the barred range");
  std::string table_set;
  auto* show_table = show->add_subcommand("table", "zeta, eta, phi for one subset");
  show_table->add_option("--n", n, "rank")->required();
  show_table->add_option("--set", table_set, "letters, e.g. \"2,3,-3,-1\"")->required();
  show_table->add_flag("--json", json, "JSON output");

  auto* qbg = app.add_subcommand("qbg", "quantum Bruhat graph");
  qbg->require_subcommand(1);
  std::string format = "dot";
  auto* qbg_export = qbg->add_subcommand("export", "export the full graph");
  qbg_export->add_option("--n", n, "rank")->required();
  qbg_export->add_option("--format", format, "dot|json")->check(CLI::IsMember({"dot", "json"}));

  auto* alcove = app.add_subcommand("alcove", "quantum alcove model");
  alcove->require_subcommand(1);
  std::string wtext, seq;
  auto* alcove_list = alcove->add_subcommand("list", "admissible subsets");
  alcove_list->add_option("--w", wtext, "window, e.g. \"[2,-1]\"")->required();
  alcove_list->add_option("--seq", seq, "theta:K or gamma:K")->required();
  alcove_list->add_flag("--json", json, "JSON output");

  int m = 1;
  bool cancel = false;
  auto* ic = app.add_subcommand("ic", "inverse Chevalley expansion of e^{-w eps_m} [O(w)]");
  ic->add_option("--w", wtext, "window")->required();
  ic->add_option("--m", m, "1..n")->required();
  ic->add_flag("--cancellation", cancel, "report the chain pairing at w = s_1..s_n..s_m instead");
  ic->add_flag("--json", json, "JSON output");

  auto* solve = app.add_subcommand("solve-system", "solve the relation system and compare with E_l");
  solve->add_option("--n", n, "rank")->required();
  solve->add_flag("--json", json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    set_threads();
    if (*verify) {
      check_n(n);
      const VerificationReport rep = run_suite(suite, n, default_trunc(n, trunc), parse_mode(mode));
      if (json)
        emit(rep.to_json(timing));
      else
        std::cout << rep.text(timing);
      return rep.pass() ? 0 : 1;
    }
    if (*show_f || *show_ff) {
      check_n(n);
      if (l < 0 || l > 2 * n) throw ConfigError("--l must lie in 0..2n");
      const FRange r = make_range(variant, k, n);
      const int D = default_trunc(n, trunc);
      if (*show_f) {
        const ZLaurentElement f = f_poly(n, l, r, D);
        if (json) emit(Json{{"n", n}, {"l", l}, {"range", r.str()}, {"trunc", D}, {"F", f.to_json()}});
        else std::cout << f.str() << "\n";
      } else {
        const SemiModElement f = ff(n, l, r, D);
        if (json) emit(Json{{"n", n}, {"l", l}, {"range", r.str()}, {"trunc", D}, {"terms", f.to_json()}});
        else std::cout << f.str();
      }
      return 0;
    }
    if (*show_ideal) {
      check_n(n);
      const auto gens = ideal_generators(n, default_trunc(n, trunc));
      Json arr = Json::array();
      for (std::size_t i = 0; i < gens.size(); ++i) {
        if (json) arr.push_back(Json{{"l", i + 1}, {"generator", gens[i].to_json()}});
        else std::cout << "F_" << i + 1 << " - E_" << i + 1 << " = " << gens[i].str() << "\n";
      }
      if (json) emit(arr);
      return 0;
    }
    if (*show_sch) {
      check_n(n);
      const ZLaurentElement p = schubert_poly(n, k, barred, default_trunc(n, trunc));
      if (json) emit(Json{{"n", n}, {"k", k}, {"barred", barred}, {"poly", p.to_json()}});
      else std::cout << p.str() << "\n";
      return 0;
    }
    if (*show_table) {
      check_n(n);
      std::vector<int> xs;
      std::string tok;
      for (char c : table_set + ",") {
        if (c == ',') {
          if (!tok.empty()) xs.push_back(std::stoi(tok));
          tok.clear();
        } else if (c != ' ') {
          tok += c;
        }
      }
      const Json t = coefficient_table(LetterSet::of(n, xs));
      if (json) {
        emit(t);
      } else {
        std::cout << "I = " << t["I"].get<std::string>() << "\n";
        for (const auto& r : t["rows"])
          std::cout << "  " << r["letter"].get<std::string>() << "  zeta " << r["zeta"].get<std::string>() << "  eta "
                    << r["eta"].get<std::string>() << "  phi " << r["phi"].get<std::string>() << "\n";
      }
      return 0;
    }
    if (*qbg_export) {
      check_n(n);
      const auto edges = build_graph(n);
      if (format == "json") emit(export_json(n, edges));
      else std::cout << export_dot(n, edges);
      return 0;
    }
    if (*alcove_list) {
      const SignedPerm w = SignedPerm::parse(wtext);
      check_n(w.rank());
      const Qbg g(w.rank());
      const RootSequence s = parse_sequence(seq, w.rank());
      const auto subsets = admissible_subsets(g, w, s);
      if (json) {
        Json arr = Json::array();
        for (const auto& a : subsets) arr.push_back(a.to_json(s));
        emit(Json{{"w", w.str()}, {"sequence", sequence_str(s)}, {"subsets", arr}});
      } else {
        std::cout << "w = " << w.str() << "  sequence " << sequence_str(s) << "\n";
        for (const auto& a : subsets)
          std::cout << "  " << a.label(s) << "  end " << a.end.str() << "  down " << exp_str(a.down) << "\n";
      }
      return 0;
    }
    if (*ic) {
      const SignedPerm w = SignedPerm::parse(wtext);
      const int r = w.rank();
      check_n(r);
      if (m < 1 || m > r) throw ConfigError("--m must lie in 1..n");
      if (cancel) {
        const CancellationReport rep = cancellation_report(m, r);
        if (json) emit(rep.to_json());
        else std::cout << rep.to_json().dump(1) << "\n";
        return rep.ok() ? 0 : 1;
      }
      const SemiClassSum s = inverse_chevalley(w, m);
      const Exponents mu = ic_lhs_weight(w, m);
      if (json) emit(Json{{"w", w.str()}, {"m", m}, {"lhs_weight", mu}, {"terms", s.to_json()}});
      else std::cout << "e^" << exp_str(mu) << " [O(" << w.str() << ")] =\n" << s.str();
      return 0;
    }
    if (*solve) {
      check_n(n);
      const auto X = solve_system(n);
      bool ok = true;
      Json arr = Json::array();
      for (int i = 0; i <= n; ++i) {
        const bool eq = X[static_cast<std::size_t>(i)] == elementary_E(i, n);
        ok = ok && eq;
        if (json) arr.push_back(Json{{"l", i}, {"value", X[static_cast<std::size_t>(i)].to_json()}, {"equals_E", eq}});
        else std::cout << "F_" << i << " = " << X[static_cast<std::size_t>(i)].str() << "  [" << (eq ? "= E_" : "!= E_") << i << "]\n";
      }
      if (json) emit(Json{{"n", n}, {"solution", arr}, {"status", ok ? "pass" : "fail"}});
      else std::cout << (ok ? "pass" : "FAIL") << "\n";
      return ok ? 0 : 1;
    }
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
