#include "quasilab/basis_number.hpp"

#include <stdexcept>

namespace quasilab {

Rational parse_rational(std::string_view text) {
  auto parse_int = [&](std::string_view s) -> Integer {
    if (s.empty()) throw std::invalid_argument("empty integer in rational '" + std::string(text) + "'");
    std::size_t i = 0;
    if (s[0] == '-' || s[0] == '+') i = 1;
    if (i == s.size()) throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    for (std::size_t j = i; j < s.size(); ++j) {
      if (s[j] < '0' || s[j] > '9')
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    }
    Integer value(std::string(s.substr(i)));
    return s[0] == '-' ? Integer(-value) : value;
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  Integer num = parse_int(text.substr(0, slash));
  Integer den = parse_int(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string to_string(const Rational& q) {
  Integer num = boost::multiprecision::numerator(q);
  Integer den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

IrrationalityBasis::IrrationalityBasis() : names_{"1"}, values_{1.0} {}

IrrationalityBasis::IrrationalityBasis(std::vector<std::string> names, std::vector<double> values)
    : names_(std::move(names)), values_(std::move(values)) {
  if (values_.empty()) throw std::invalid_argument("irrationality basis must contain 1");
  if (names_.size() != values_.size())
    throw std::invalid_argument("irrationality basis names and values differ in length");
  if (values_[0] != 1.0) throw std::invalid_argument("first irrationality basis element must be 1");
}

BasisNumber::BasisNumber(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("basis number needs at least one coordinate");
}

BasisNumber BasisNumber::zero(std::size_t basis_dim) {
  return BasisNumber(std::vector<Rational>(basis_dim, Rational(0)));
}

BasisNumber BasisNumber::rational(const Rational& q, std::size_t basis_dim) {
  BasisNumber x = zero(basis_dim);
  x.coeffs_[0] = q;
  return x;
}

bool BasisNumber::is_zero() const {
  for (const auto& q : coeffs_)
    if (q != 0) return false;
  return true;
}

double BasisNumber::to_double(const IrrationalityBasis& basis) const {
  if (basis.dimension() != coeffs_.size())
    throw std::invalid_argument("basis number and basis dimension differ");
  double sum = 0.0;
  for (std::size_t t = 0; t < coeffs_.size(); ++t)
    sum += static_cast<double>(coeffs_[t]) * basis.values()[t];
  return sum;
}

BasisNumber& BasisNumber::operator+=(const BasisNumber& other) {
  if (other.coeffs_.size() != coeffs_.size()) throw std::invalid_argument("basis dimension mismatch");
  for (std::size_t t = 0; t < coeffs_.size(); ++t) coeffs_[t] += other.coeffs_[t];
  return *this;
}

BasisNumber& BasisNumber::operator-=(const BasisNumber& other) {
  if (other.coeffs_.size() != coeffs_.size()) throw std::invalid_argument("basis dimension mismatch");
  for (std::size_t t = 0; t < coeffs_.size(); ++t) coeffs_[t] -= other.coeffs_[t];
  return *this;
}

BasisNumber& BasisNumber::operator*=(const Rational& s) {
  for (auto& q : coeffs_) q *= s;
  return *this;
}

BasisNumber BasisNumber::operator-() const {
  BasisNumber out = *this;
  for (auto& q : out.coeffs_) q = -q;
  return out;
}

FrequencyVector::FrequencyVector(std::vector<BasisNumber> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw std::invalid_argument("frequency vector must have dimension >= 1");
  const std::size_t m = entries_[0].basis_dimension();
  for (const auto& e : entries_) {
    if (e.basis_dimension() != m)
      throw std::invalid_argument("frequency entries use different basis dimensions");
  }
}

std::size_t FrequencyVector::basis_dimension() const {
  return entries_.empty() ? 0 : entries_[0].basis_dimension();
}

bool FrequencyVector::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

std::vector<double> FrequencyVector::to_doubles(const IrrationalityBasis& basis) const {
  std::vector<double> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.to_double(basis));
  return out;
}

BasisNumber FrequencyVector::dot(const std::vector<std::int64_t>& alpha) const {
  if (alpha.size() != entries_.size()) throw std::invalid_argument("frequency dot: dimension mismatch");
  BasisNumber sum = BasisNumber::zero(basis_dimension());
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (alpha[i] != 0) sum += entries_[i] * Rational(alpha[i]);
  }
  return sum;
}

FrequencyVector rational_frequencies(const std::vector<Rational>& values) {
  std::vector<BasisNumber> entries;
  entries.reserve(values.size());
  for (const auto& q : values) entries.push_back(BasisNumber::rational(q, 1));
  return FrequencyVector(std::move(entries));
}

}  // namespace quasilab
