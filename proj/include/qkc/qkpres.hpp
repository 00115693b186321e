#pragma once

#include "qkc/check.hpp"
#include "qkc/fraction.hpp"
#include "qkc/semimod.hpp"

#include <string>
#include <vector>

namespace qkc {

// coefficient functions in Q_1..Q_n (Q_0 := 0)
SeriesFraction zeta(const LetterSet& I, int x);
SeriesFraction eta(const LetterSet& I, int x);
SeriesFraction phi_q(const LetterSet& I, int x);
SeriesFraction zeta_product(const LetterSet& I);

// zeta, eta, phi^Q per letter, rendered
Json coefficient_table(const LetterSet& I);

// z^{eps_I}
Exponents z_exponent(const LetterSet& I);

// sum_{|I| = l, I in range} (prod zeta_I) z^{eps_I}, expanded to Q-degree degree_cap
ZLaurentElement f_poly(int n, int l, const FRange& r, int degree_cap);
ZLaurentElement f_poly_serial(int n, int l, const FRange& r, int degree_cap);
// e_l(z_1..z_n, z_n^{-1}..z_1^{-1}) with unit coefficients
ZLaurentElement e_poly_z(int n, int l, int degree_cap);
// F_l - E_l, 1 <= l <= n
std::vector<ZLaurentElement> ideal_generators(int n, int degree_cap);
// sum (-1)^l e^{-l eps_1} F_l^k, or the barred sum up to 2n-k
ZLaurentElement schubert_poly(int n, int k, bool barred, int degree_cap);

// e^mu -> e^{-mu}, Q -> T, z^a -> prod_j ((1-T_{j-1})/(1-T_j))^{a_j} [O(e)(-a)]
SemiModElement to_semimod(const ZLaurentElement& p);

std::vector<CheckRecord> check_factorization_q(int n);
std::vector<CheckRecord> check_dictionary(int n, int degree_cap);
std::vector<CheckRecord> check_q_zero(int n, int degree_cap);
// sum (prod zeta)(prod eta) z^{eps_I} = sum (prod phi^Q) z^{eps_I}
std::vector<CheckRecord> check_polynomial_factorization(int n, int degree_cap);

}  // namespace qkc
