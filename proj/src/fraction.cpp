#include "qkc/fraction.hpp"

#include <algorithm>

namespace qkc {

namespace {

NovikovSeries one_minus_power(int nvars, int rank, int j, int m) {
  return power(one_minus(nvars, rank, kExact, j), m);
}

}  // namespace

SeriesFraction::SeriesFraction(const NovikovSeries& numerator, std::vector<int> denominator)
    : num_(numerator.with_cap(kExact)), den_(std::move(denominator)) {
  if (static_cast<int>(den_.size()) != num_.nvars()) throw ConfigError("denominator length does not match variables");
}

SeriesFraction SeriesFraction::polynomial(const NovikovSeries& p) {
  return SeriesFraction(p, std::vector<int>(static_cast<std::size_t>(p.nvars()), 0));
}

SeriesFraction SeriesFraction::one(int nvars, int rank) {
  return polynomial(NovikovSeries::scalar(nvars, rank, kExact, 1));
}

SeriesFraction SeriesFraction::inverse_one_minus(int nvars, int rank, int j) {
  std::vector<int> den(static_cast<std::size_t>(nvars), 0);
  den.at(static_cast<std::size_t>(j - 1)) = 1;
  return SeriesFraction(NovikovSeries::scalar(nvars, rank, kExact, 1), den);
}

SeriesFraction SeriesFraction::operator*(const SeriesFraction& o) const {
  std::vector<int> den(den_.size());
  for (std::size_t i = 0; i < den.size(); ++i) den[i] = den_[i] + o.den_[i];
  SeriesFraction r;
  r.num_ = num_ * o.num_;
  r.den_ = std::move(den);
  return r;
}

NovikovSeries SeriesFraction::cleared(const std::vector<int>& m) const {
  NovikovSeries r = num_;
  for (std::size_t i = 0; i < den_.size(); ++i) {
    if (m[i] < den_[i]) throw ConfigError("clearing exponent below denominator");
    if (m[i] > den_[i]) r *= one_minus_power(nvars(), rank(), static_cast<int>(i) + 1, m[i] - den_[i]);
  }
  return r;
}

SeriesFraction SeriesFraction::operator+(const SeriesFraction& o) const {
  if (num_.is_zero() && num_.nvars() == 0) return o;
  if (o.num_.is_zero() && o.num_.nvars() == 0) return *this;
  std::vector<int> den(den_.size());
  for (std::size_t i = 0; i < den.size(); ++i) den[i] = std::max(den_[i], o.den_[i]);
  SeriesFraction r;
  r.num_ = cleared(den) + o.cleared(den);
  r.den_ = std::move(den);
  return r;
}

SeriesFraction SeriesFraction::operator-(const SeriesFraction& o) const {
  SeriesFraction neg = o;
  neg.num_ = -o.num_;
  return *this + neg;
}

bool SeriesFraction::operator==(const SeriesFraction& o) const {
  std::vector<int> den(den_.size());
  for (std::size_t i = 0; i < den.size(); ++i) den[i] = std::max(den_[i], o.den_[i]);
  return cleared(den) == o.cleared(den);
}

NovikovSeries SeriesFraction::expand(int degree_cap) const {
  NovikovSeries r = num_.with_cap(degree_cap);
  for (std::size_t i = 0; i < den_.size(); ++i) {
    if (den_[i] == 0) continue;
    NovikovSeries g = geometric_inverse(nvars(), rank(), static_cast<int>(i) + 1, degree_cap);
    for (int k = 0; k < den_[i]; ++k) r *= g;
  }
  return r;
}

std::string SeriesFraction::str(const std::string& var) const {
  std::string d;
  for (std::size_t i = 0; i < den_.size(); ++i) {
    if (den_[i] == 0) continue;
    if (!d.empty()) d += "*";
    d += "(1 - " + var + std::to_string(i + 1) + ")";
    if (den_[i] > 1) d += "^" + std::to_string(den_[i]);
  }
  std::string n = "(" + num_.str(var) + ")";
  return d.empty() ? n : n + "/" + d;
}

}  // namespace qkc
