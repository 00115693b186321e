#pragma once

#include "qkc/rings.hpp"

#include <random>

namespace th {

using namespace qkc;

inline GroupRingElement e(const Exponents& x, const Int& c = 1) { return GroupRingElement::monomial(x, c); }

inline GroupRingElement rand_group(std::mt19937& rng, int n, int terms = 4, int span = 2) {
  std::uniform_int_distribution<int> ex(-span, span), co(-3, 3);
  GroupRingElement g(n);
  for (int t = 0; t < terms; ++t) {
    Exponents x(static_cast<std::size_t>(n));
    for (auto& v : x) v = ex(rng);
    g.add_term(x, co(rng));
  }
  return g;
}

inline NovikovSeries rand_series(std::mt19937& rng, int n, int cap, int terms = 4) {
  std::uniform_int_distribution<int> ex(0, 2), co(-3, 3), qe(-1, 1), ee(-1, 1);
  NovikovSeries s(n, n, cap);
  for (int t = 0; t < terms; ++t) {
    Exponents x(static_cast<std::size_t>(n));
    for (auto& v : x) v = ex(rng);
    if (cap != kExact && total_degree(x) > cap) continue;
    Exponents mu(static_cast<std::size_t>(n));
    for (auto& v : mu) v = ee(rng);
    s.add_term(x, QExtElement::monomial(qe(rng), mu, co(rng)));
  }
  return s;
}

inline ZLaurentElement rand_laurent(std::mt19937& rng, int n, int cap, int terms = 3) {
  std::uniform_int_distribution<int> ex(-1, 1);
  ZLaurentElement z(n, cap);
  for (int t = 0; t < terms; ++t) {
    Exponents a(static_cast<std::size_t>(n));
    for (auto& v : a) v = ex(rng);
    z.add_term(a, rand_series(rng, n, cap, 3));
  }
  return z;
}

}  // namespace th
