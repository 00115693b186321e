#include "helpers.hpp"
#include "qkc/semimod.hpp"

#include <doctest.h>

using namespace th;

namespace {

NovikovSeries T(int n, const Exponents& x, const Int& c = 1) { return NovikovSeries::monomial(n, n, kExact, x, c); }
NovikovSeries one(int n) { return NovikovSeries::scalar(n, n, kExact, 1); }

}  // namespace

TEST_CASE("psi table at n = 4, I = {2,3,3b,1b}") {
  const LetterSet I = LetterSet::of(4, {2, 3, -3, -1});
  const std::vector<NovikovSeries> want{
      one(4) - T(4, {1, 0, 0, 0}),                           // 1
      one(4), one(4), one(4),                                // 2 3 4
      one(4) - T(4, {0, 0, 1, 0}) + T(4, {0, 0, 1, 1}),      // 4b
      one(4),                                                // 3b
      one(4) - T(4, {1, 0, 0, 0}),                           // 2b
      one(4)};                                               // 1b
  const auto ls = letters(4);
  for (std::size_t i = 0; i < ls.size(); ++i) CHECK(psi(I, ls[i]) == want[i]);
}

TEST_CASE("empty set gives unit factors") {
  for (int n = 1; n <= 3; ++n) {
    const LetterSet I(n);
    for (int x : letters(n)) {
      CHECK(psi(I, x) == one(n));
      CHECK(phi_sinf(I, x) == SeriesFraction::one(n, n));
      CHECK(theta_sinf(I, x) == SeriesFraction::one(n, n));
    }
  }
}

TEST_CASE("F at n = 1") {
  const SemiModElement f = ff(1, 1, FRange::full(), 3);
  const SignedPerm e = SignedPerm::identity(1);
  SemiModElement want(1, 3);
  want.add_term({e, {-1}}, NovikovSeries::scalar(1, 1, 3, 1));
  want.add_term({e, {1}}, one_minus(1, 1, 3, 1));
  CHECK(f == want);
  CHECK(f.size() == 2);
  CHECK(ff(1, 0, FRange::full(), 3) == SemiModElement::basis(e, {0}, 3));
}

TEST_CASE("F against direct enumeration of all subsets") {
  for (int n = 1; n <= 3; ++n) {
    const int D = 2 * n + 2;
    for (int l = 0; l <= 2 * n; ++l) {
      SemiModElement want(n, D);
      for (unsigned m = 0; m < (1u << (2 * n)); ++m) {
        const LetterSet I(n, m);
        if (I.size() != l) continue;
        NovikovSeries c = NovikovSeries::scalar(n, n, D, 1);
        for (int x : letters(n)) c *= psi(I, x, D);
        want.add_term({SignedPerm::identity(n), neg_exp(I.eps_sum())}, c);
      }
      CHECK(ff(n, l, FRange::full(), D) == want);
      CHECK(ff_serial(n, l, FRange::full(), D) == want);
    }
  }
}

TEST_CASE("range variants") {
  for (int n = 1; n <= 3; ++n) {
    CHECK(FRange::full().length(n) == 2 * n);
    for (int k = 1; k <= n; ++k) {
      CHECK(FRange::upper(k).length(n) == k);
      CHECK(FRange::barred(k).length(n) == 2 * n - k);
    }
    // the barred range at k = n is [1, n]
    for (int l = 0; l <= n; ++l) CHECK(ff(n, l, FRange::barred(n), 6) == ff(n, l, FRange::upper(n), 6));
  }
}

TEST_CASE("closed forms at the ends") {
  for (int n = 1; n <= 3; ++n) {
    CHECK(closed_P(n, 0, 8) == SemiModElement::basis(SignedPerm::identity(n), zeros(n), 8));
    CHECK(closed_P(n, n, 8) == closed_Q(n, n, 8));
  }
}

TEST_CASE("star map example at n = 7") {
  const LetterSet I = LetterSet::of(7, {2, 4, 5, -6, -5, -2});
  const LetterSet want = LetterSet::of(7, {4, -6, 1, 3, 7, -1, -3, -7});
  CHECK(I.size() == 6);
  CHECK(star_map(I) == want);
  CHECK(star_map(want) == I);
  const Decomposition d = decompose(I);
  CHECK(d.A == std::vector<int>{4});
  CHECK(d.B == std::vector<int>{6});
}

TEST_CASE("star map is an involution and changes the size to 2n - k") {
  for (int n = 1; n <= 4; ++n)
    for (unsigned m = 0; m < (1u << (2 * n)); ++m) {
      const LetterSet I(n, m);
      const LetterSet S = star_map(I);
      CHECK(star_map(S) == I);
      CHECK(S.size() == 2 * n - I.size());
    }
}

TEST_CASE("duality statistics do not depend on scheduling") {
  for (int n = 1; n <= 4; ++n) CHECK(duality_stats(n) == duality_stats_serial(n));
}

TEST_CASE("recursion, symmetry, duality, factorization") {
  for (int n = 1; n <= 4; ++n) {
    CHECK(all_pass(check_recursion(n, 2 * n + 2)));
    CHECK(all_pass(check_symmetry(n, 2 * n + 2)));
    CHECK(all_pass(check_duality(n)));
    CHECK(all_pass(check_factorization_sinf(n)));
  }
  for (int n = 1; n <= 3; ++n) {
    CHECK(all_pass(check_recursion(n, kExact)));
    CHECK(all_pass(check_symmetry(n, kExact)));
  }
}

TEST_CASE("tensor and shift commute, tensors invert") {
  std::mt19937 rng(5);
  const int n = 3, D = 6;
  const auto G = enumerate_group(n);
  for (int t = 0; t < 20; ++t) {
    SemiModElement z(n, D);
    for (int i = 0; i < 4; ++i) {
      Exponents lam(3);
      for (auto& x : lam) x = static_cast<int>(rng() % 5) - 2;
      z.add_term({G[rng() % G.size()], lam}, rand_series(rng, n, D, 3));
    }
    const Exponents mu{1, -2, 0};
    const Exponents xi{0, 1, 1};
    CHECK(z.t_shift(xi).tensor(mu) == z.tensor(mu).t_shift(xi));
    CHECK(z.tensor(mu).tensor(neg_exp(mu)) == z);
  }
}

TEST_CASE("Demazure on translation classes") {
  const int n = 2, D = 4;
  const SemiModElement b = SemiModElement::basis(SignedPerm::identity(n), {1, 0}, D);
  CHECK(demazure_module(1, b) == b);
  CHECK(demazure_module(1, b.scaled_e({1, 0})).is_zero());
  CHECK(demazure_module(1, b.scaled_e({0, 1})) == b.scaled_e({0, 1}) + b.scaled_e({1, 0}));
  const SemiModElement nb = SemiModElement::basis(simple_reflection(1, n), {0, 0}, D);
  CHECK_THROWS_AS(demazure_module(1, nb), UnsupportedOperand);
}
