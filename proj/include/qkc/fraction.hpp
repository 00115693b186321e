#pragma once

#include "qkc/rings.hpp"

#include <string>
#include <vector>

namespace qkc {

// numerator / prod_j (1 - x_j)^{m_j}, numerator an exact polynomial.
class SeriesFraction {
 public:
  SeriesFraction() = default;
  SeriesFraction(const NovikovSeries& numerator, std::vector<int> denominator);
  static SeriesFraction polynomial(const NovikovSeries& p);
  static SeriesFraction one(int nvars, int rank);
  // 1 / (1 - x_j)
  static SeriesFraction inverse_one_minus(int nvars, int rank, int j);

  const NovikovSeries& numerator() const { return num_; }
  const std::vector<int>& denominator() const { return den_; }
  int nvars() const { return num_.nvars(); }
  int rank() const { return num_.rank(); }

  SeriesFraction operator*(const SeriesFraction& o) const;
  SeriesFraction operator+(const SeriesFraction& o) const;
  SeriesFraction operator-(const SeriesFraction& o) const;
  SeriesFraction& operator*=(const SeriesFraction& o) { return *this = *this * o; }
  SeriesFraction& operator+=(const SeriesFraction& o) { return *this = *this + o; }
  // exact: cross-multiplied polynomials agree
  bool operator==(const SeriesFraction& o) const;

  // truncated power series up to total degree D
  NovikovSeries expand(int degree_cap) const;
  // numerator times prod (1 - x_j)^{m_j - den_j}; requires m >= den
  NovikovSeries cleared(const std::vector<int>& m) const;

  std::string str(const std::string& var = "Q") const;

 private:
  NovikovSeries num_;
  std::vector<int> den_;
};

}  // namespace qkc
