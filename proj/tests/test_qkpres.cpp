#include "helpers.hpp"
#include "qkc/qkpres.hpp"
#include "qkc/relations.hpp"

#include <doctest.h>

using namespace th;

namespace {

SeriesFraction poly(int, const NovikovSeries& p) { return SeriesFraction::polynomial(p); }
NovikovSeries Q(int n, const Exponents& x, const Int& c = 1) { return NovikovSeries::monomial(n, n, kExact, x, c); }
NovikovSeries unit(int n, int cap) { return NovikovSeries::scalar(n, n, cap, 1); }

}  // namespace

TEST_CASE("coefficient table at n = 4, I = {2,3,3b,1b}") {
  const int n = 4;
  const LetterSet I = LetterSet::of(n, {2, 3, -3, -1});
  CHECK(zeta(I, 3) == poly(n, one_minus(n, n, kExact, 3)));
  const SeriesFraction want4b = SeriesFraction::one(n, n) + poly(n, Q(n, {0, 0, 1, 1})) * SeriesFraction::inverse_one_minus(n, n, 3);
  CHECK(zeta(I, -4) == want4b);
  CHECK(zeta(I, -1) == SeriesFraction::one(n, n));
  // the definition gives 1 - Q2 at 3bar and 1 at 2bar
  CHECK(zeta(I, -3) == poly(n, one_minus(n, n, kExact, 2)));
  CHECK(zeta(I, -2) == SeriesFraction::one(n, n));
}

TEST_CASE("empty set gives unit coefficients") {
  for (int n = 1; n <= 3; ++n)
    for (int x : letters(n)) {
      const LetterSet I(n);
      CHECK(zeta(I, x) == SeriesFraction::one(n, n));
      CHECK(eta(I, x) == SeriesFraction::one(n, n));
      CHECK(phi_q(I, x) == SeriesFraction::one(n, n));
    }
}

TEST_CASE("zeta and phi are 1 at Q = 0") {
  for (int n = 1; n <= 3; ++n)
    for (unsigned m = 0; m < (1u << (2 * n)); ++m)
      for (int x : letters(n)) {
        const LetterSet I(n, m);
        CHECK(zeta(I, x).expand(0) == unit(n, 0));
        CHECK(phi_q(I, x).expand(0) == unit(n, 0));
      }
}

TEST_CASE("F at n = 1 and the n = 1 generator") {
  const int D = 3;
  ZLaurentElement want(1, D);
  want.add_term({1}, one_minus(1, 1, D, 1));
  want.add_term({-1}, unit(1, D));
  CHECK(f_poly(1, 1, FRange::full(), D) == want);
  CHECK(f_poly(1, 0, FRange::full(), D) == ZLaurentElement::constant(unit(1, D)));
  const auto gens = ideal_generators(1, D);
  REQUIRE(gens.size() == 1);
  ZLaurentElement g = want;
  g -= ZLaurentElement::constant(NovikovSeries::constant(1, 1, D, QExtElement(e({1}) + e({-1}))));
  CHECK(gens[0] == g);
  CHECK(ideal_generators(3, 8).size() == 3);
}

TEST_CASE("F at Q = 0 against subset enumeration") {
  for (int n = 1; n <= 4; ++n) {
    const int D = 2 * n + 2;
    for (int l = 0; l <= 2 * n; ++l) {
      ZLaurentElement want(n, D);
      for (unsigned m = 0; m < (1u << (2 * n)); ++m) {
        const LetterSet I(n, m);
        if (I.size() == l) want.add_term(I.eps_sum(), unit(n, D));
      }
      CHECK(specialize_Q_zero(f_poly(n, l, FRange::full(), D)) == want);
      CHECK(e_poly_z(n, l, D) == want);
    }
  }
}

TEST_CASE("F at n = 2, l = 2 after Q = 0") {
  // e_2(z1, z2, z2^-1, z1^-1): 6 products, two of them equal to 1
  const ZLaurentElement f = specialize_Q_zero(f_poly(2, 2, FRange::full(), 6));
  CHECK(f.size() == 5);
  CHECK(f.coeff({0, 0}) == NovikovSeries::scalar(2, 2, 6, 2));
}

TEST_CASE("serial and parallel F agree") {
  for (int n = 1; n <= 3; ++n)
    for (int l = 0; l <= 2 * n; ++l)
      CHECK(f_poly(n, l, FRange::full(), 2 * n + 2) == f_poly_serial(n, l, FRange::full(), 2 * n + 2));
}

TEST_CASE("dictionary on small inputs") {
  const int n = 2, D = 6;
  const SemiModElement unit_class = SemiModElement::basis(SignedPerm::identity(n), zeros(n), D);
  CHECK(to_semimod(ZLaurentElement::constant(unit(n, D))) == unit_class);
  // z_1 maps to 1/(1 - T_1) [O(-eps_1)]
  const SemiModElement z1 = to_semimod(ZLaurentElement::monomial({1, 0}, unit(n, D)));
  CHECK(z1 == SemiModElement::basis(SignedPerm::identity(n), {-1, 0}, D).scaled(geometric_inverse(n, n, 1, D)));
  // z_2^{-1} maps to (1 - T_2)/(1 - T_1) [O(eps_2)]
  const SemiModElement z2i = to_semimod(ZLaurentElement::monomial({0, -1}, unit(n, D)));
  CHECK(z2i == SemiModElement::basis(SignedPerm::identity(n), {0, 1}, D)
                   .scaled(one_minus(n, n, D, 2) * geometric_inverse(n, n, 1, D)));
  // z_1^{-1} maps to (1 - T_1) [O(eps_1)]
  CHECK(to_semimod(ZLaurentElement::monomial({-1, 0}, unit(n, D))) ==
        SemiModElement::basis(SignedPerm::identity(n), {1, 0}, D).scaled(one_minus(n, n, D, 1)));
  // z_j z_j^{-1} maps to the unit class
  for (int j = 1; j <= n; ++j) {
    const ZLaurentElement zz = ZLaurentElement::monomial(unit_vector(n, j), unit(n, D)) *
                               ZLaurentElement::monomial(unit_vector(n, j, -1), unit(n, D));
    CHECK(to_semimod(zz) == unit_class);
  }
  CHECK_THROWS_AS(to_semimod(ZLaurentElement(n, kExact)), ConfigError);
}

TEST_CASE("Schubert polynomials") {
  // k = n: upper and barred agree
  for (int n = 1; n <= 3; ++n) CHECK(schubert_poly(n, n, false, 8) == schubert_poly(n, n, true, 8));
  // k = 1 at n = 2: 1 - e^{-eps_1} F_1^1
  const int n = 2, D = 6;
  ZLaurentElement want = ZLaurentElement::constant(unit(n, D));
  want -= f_poly(n, 1, FRange::upper(1), D).scaled(NovikovSeries::constant(n, n, D, QExtElement(e({-1, 0}))));
  CHECK(schubert_poly(n, 1, false, D) == want);
  CHECK_THROWS_AS(schubert_poly(2, 3, false, D), ConfigError);
}

TEST_CASE("suite checks") {
  for (int n = 1; n <= 5; ++n) CHECK(all_pass(check_factorization_q(n)));
  for (int n = 1; n <= 3; ++n) {
    CHECK(all_pass(check_dictionary(n, 2 * n + 2)));
    CHECK(all_pass(check_polynomial_factorization(n, 2 * n + 2)));
  }
  for (int n = 1; n <= 4; ++n) CHECK(all_pass(check_q_zero(n, 2 * n + 2)));
}
