#include "snd/scalar.hpp"

#include <cctype>

#include "snd/errors.hpp"

namespace snd {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Scalar::Scalar(long numerator, long denominator) {
  if (denominator == 0) throw InvalidArgument("zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Scalar::Scalar(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Scalar Scalar::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw ParseError("malformed rational '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  if (negative) n = -n;
  return Scalar(mpq_class(n, d));
}

std::string Scalar::str() const { return value_.get_str(10); }

std::string Scalar::decimal(int digits) const {
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  mpz_class scaled = value_.get_num() * scale;
  mpz_tdiv_q(scaled.get_mpz_t(), scaled.get_mpz_t(), value_.get_den().get_mpz_t());
  const bool negative = sgn(scaled) < 0 || (sgn(scaled) == 0 && sgn(value_) < 0);
  mpz_class mag = ::abs(scaled);
  std::string s = mag.get_str(10);
  if (digits > 0) {
    if (s.size() <= static_cast<std::size_t>(digits)) s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
    s.insert(s.size() - static_cast<std::size_t>(digits), 1, '.');
  }
  return negative ? "-" + s : s;
}

Scalar Scalar::abs() const { return Scalar(mpq_class(::abs(value_))); }

std::optional<Scalar> Scalar::exact_sqrt() const {
  if (sgn(value_) < 0) return std::nullopt;
  const mpz_class& n = value_.get_num();
  const mpz_class& d = value_.get_den();
  if (mpz_perfect_square_p(n.get_mpz_t()) == 0 || mpz_perfect_square_p(d.get_mpz_t()) == 0) {
    return std::nullopt;
  }
  mpz_class rn;
  mpz_class rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  return Scalar(mpq_class(rn, rd));
}

Scalar Scalar::approx_sqrt(unsigned bits) const {
  if (sgn(value_) < 0) throw InvalidArgument("square root of negative value");
  if (auto exact = exact_sqrt()) return *exact;
  // floor(sqrt(q * 4^bits)) / 2^bits
  mpz_class scaled = value_.get_num();
  mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), 2 * bits);
  mpz_tdiv_q(scaled.get_mpz_t(), scaled.get_mpz_t(), value_.get_den().get_mpz_t());
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
  mpz_class den = 1;
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), bits);
  return Scalar(mpq_class(root, den));
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  value_ += rhs.value_;
  return *this;
}
Scalar& Scalar::operator-=(const Scalar& rhs) {
  value_ -= rhs.value_;
  return *this;
}
Scalar& Scalar::operator*=(const Scalar& rhs) {
  value_ *= rhs.value_;
  return *this;
}
Scalar& Scalar::operator/=(const Scalar& rhs) {
  if (rhs.is_zero()) throw InvalidArgument("division by zero");
  value_ /= rhs.value_;
  return *this;
}

Scalar Scalar::operator-() const { return Scalar(mpq_class(-value_)); }

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

Scalar min(const Scalar& a, const Scalar& b) { return b < a ? b : a; }
Scalar max(const Scalar& a, const Scalar& b) { return a < b ? b : a; }

}  // namespace snd
