// one line per acceptance criterion; exit 0 iff all pass
#include "qkc/alcove.hpp"
#include "qkc/ichevalley.hpp"
#include "qkc/qbg.hpp"
#include "qkc/qkpres.hpp"
#include "qkc/relations.hpp"
#include "qkc/semimod.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

using namespace qkc;

namespace {

struct Outcome {
  bool pass = true;
  std::string note;
  int checks = 0;
};

void absorb(Outcome& o, const std::vector<CheckRecord>& rs) {
  o.checks += static_cast<int>(rs.size());
  for (const auto& r : rs)
    if (!r.pass && o.pass) {
      o.pass = false;
      o.note = r.id + ": " + r.location;
    }
}

// subsets of x_1..x_n, x_n^-1..x_1^-1 as exponent vectors
std::vector<std::pair<int, Exponents>> subset_weights(int n) {
  std::vector<std::pair<int, Exponents>> out;
  for (unsigned m = 0; m < (1u << (2 * n)); ++m) {
    Exponents x = zeros(n);
    int size = 0;
    for (int b = 0; b < 2 * n; ++b)
      if (m >> b & 1) {
        ++size;
        if (b < n) x[static_cast<std::size_t>(b)] += 1;
        else x[static_cast<std::size_t>(2 * n - 1 - b)] -= 1;
      }
    out.emplace_back(size, x);
  }
  return out;
}

int run(int id, const std::string& what, const std::function<Outcome()>& f) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = f();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (o.pass && o.checks == 0 && o.note.empty()) o = {false, "no checks ran"};
  if (o.pass && o.note.empty()) o.note = std::to_string(o.checks) + " checks";
  std::printf("%s  %2d  %s  (%.2fs)%s%s\n", o.pass ? "PASS" : "FAIL", id, what.c_str(), s, o.note.empty() ? "" : "  ",
              o.note.c_str());
  std::fflush(stdout);
  return o.pass ? 0 : 1;
}

}  // namespace

int main() {
  int failed = 0;

  failed += run(1, "QBG pattern criterion = length criterion, n <= 4, under 5 s", [] {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    long pairs = 0;
    for (int n = 1; n <= 4; ++n) {
      const CrossCheck c = cross_check(n);
      pairs += c.pairs;
      if (c.disagreements && o.pass) o = {false, "n=" + std::to_string(n) + " " + c.first_mismatch};
      if (n == 4 && c.pairs != 6144) o = {false, "n=4 pair count " + std::to_string(c.pairs)};
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (s >= 5.0) o = {false, "took " + std::to_string(s) + " s"};
    if (o.pass) o.note = std::to_string(pairs) + " pairs, 0 disagreements";
    return o;
  });

  failed += run(2, "admissible-subset listings at s_1..s_n..s_k, all k, n <= 4", [] {
    Outcome o;
    for (int n = 1; n <= 4; ++n) absorb(o, check_listings(n));
    return o;
  });

  failed += run(3, "inverse Chevalley evaluator = closed form, cancellation pairing complete, n <= 4", [] {
    Outcome o;
    for (int n = 1; n <= 4; ++n) absorb(o, check_inverse_chevalley(n));
    return o;
  });

  failed += run(4, "closed forms satisfy both recurrences, n <= 4, D = 2n+2 and exact", [] {
    Outcome o;
    for (int n = 1; n <= 4; ++n) {
      absorb(o, check_recursion(n, 2 * n + 2));
      absorb(o, check_recursion(n, kExact));
    }
    return o;
  });

  failed += run(5, "F_k = F_{2n-k} and S(J,p) = T(J,p), n <= 4", [] {
    Outcome o;
    for (int n = 1; n <= 4; ++n) {
      absorb(o, check_symmetry(n, 2 * n + 2));
      absorb(o, check_duality(n));
    }
    return o;
  });

  failed += run(6, "Demazure derivation chain = literal formulas, exact division, n <= 4", [] {
    Outcome o;
    for (int n = 1; n <= 4; ++n) absorb(o, check_derivation(n));
    return o;
  });

  failed += run(7, "system solution = (E_0..E_n), n <= 6, n = 6 under 10 s", [] {
    Outcome o;
    for (int n = 1; n <= 6; ++n) {
      const auto t0 = std::chrono::steady_clock::now();
      const auto X = solve_system(n);
      const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      std::vector<GroupRingElement> E(static_cast<std::size_t>(n + 1), GroupRingElement(n));
      for (const auto& [size, x] : subset_weights(n))
        if (size <= n) E[static_cast<std::size_t>(size)].add_term(x, 1);
      for (int l = 0; l <= n; ++l, ++o.checks)
        if (!(X[static_cast<std::size_t>(l)] == E[static_cast<std::size_t>(l)]) && o.pass)
          o = {false, "n=" + std::to_string(n) + " l=" + std::to_string(l)};
      if (n == 6 && s >= 10.0) o = {false, "n=6 took " + std::to_string(s) + " s"};
    }
    return o;
  });

  failed += run(8, "complete-symmetric identities (m <= 6) and generating functions (t-degree 2n), n <= 4", [] {
    Outcome o;
    for (int n = 1; n <= 4; ++n) {
      absorb(o, check_csym_props(n, 6));
      absorb(o, check_generating_identities(n, 2 * n));
    }
    return o;
  });

  failed += run(9, "zeta*eta = phi^Q and phi*theta = psi over all subsets, n <= 5", [] {
    Outcome o;
    for (int n = 1; n <= 5; ++n) {
      absorb(o, check_factorization_q(n));
      absorb(o, check_factorization_sinf(n));
    }
    return o;
  });

  failed += run(10, "dictionary sends F_l, F_l^k, F_l^kbar to the module sums, n <= 3", [] {
    Outcome o;
    for (int n = 1; n <= 3; ++n) absorb(o, check_dictionary(n, 2 * n + 2));
    return o;
  });

  failed += run(11, "F_l at Q = 0 = e_l(z, z^-1), mass C(2n,l), n <= 4", [] {
    Outcome o;
    for (int n = 1; n <= 4 && o.pass; ++n) {
      absorb(o, check_q_zero(n, 2 * n + 2));
      const int D = 2 * n + 2;
      for (int l = 0; l <= 2 * n; ++l, ++o.checks) {
        ZLaurentElement want(n, D);
        for (const auto& [size, x] : subset_weights(n))
          if (size == l) want.add_term(x, NovikovSeries::scalar(n, n, D, 1));
        if (!(specialize_Q_zero(f_poly(n, l, FRange::full(), D)) == want) && o.pass)
          o = {false, "n=" + std::to_string(n) + " l=" + std::to_string(l)};
      }
    }
    return o;
  });

  return failed ? 1 : 0;
}
