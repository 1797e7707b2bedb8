#include "pwmap/rational.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace pwmap {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

mpz_class parse_integer(std::string_view s) {
  if (!is_integer_literal(s)) throw std::invalid_argument("malformed rational: '" + std::string(s) + "'");
  if (s[0] == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rational::Rational(long num, long den) : q_(num, den) {
  if (den == 0) throw std::domain_error("zero denominator");
  q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  q_ /= o.q_;
  return *this;
}

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const mpz_class p = parse_integer(text.substr(0, slash));
    const mpz_class q = parse_integer(text.substr(slash + 1));
    if (q == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    mpq_class r(p, q);
    r.canonicalize();
    return Rational(r);
  }
  if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    const std::string_view whole = text.substr(0, dot);
    const std::string_view frac = text.substr(dot + 1);
    if (frac.empty() || !is_integer_literal(frac) || frac[0] == '-' || frac[0] == '+')
      throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    const bool negative = !whole.empty() && whole[0] == '-';
    std::string digits;
    if (whole.empty() || whole == "-" || whole == "+") {
      digits = "0";
    } else {
      digits = std::string(whole);
      if (!is_integer_literal(digits)) throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    }
    mpz_class w = parse_integer(digits);
    if (w < 0) w = -w;
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    mpq_class r(w * scale + mpz_class(std::string(frac), 10), scale);
    r.canonicalize();
    if (negative) r = -r;
    return Rational(r);
  }
  return Rational(parse_integer(text));
}

Rational Rational::from_double(double v) {
  if (!std::isfinite(v)) throw std::invalid_argument("non-finite double");
  mpq_class q(v);
  return Rational(q);
}

std::string Rational::str() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational sqrt_lower(const Rational& v, long den) {
  if (v.sign() < 0) throw std::domain_error("sqrt of negative");
  // floor(sqrt(v * den^2)) / den
  const mpq_class scaled = v.raw() * mpq_class(den) * mpq_class(den);
  mpz_class floor_scaled = scaled.get_num() / scaled.get_den();
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), floor_scaled.get_mpz_t());
  return Rational(mpq_class(root, den));
}

Rational sqrt_upper(const Rational& v, long den) {
  Rational lo = sqrt_lower(v, den);
  if (lo * lo == v) return lo;
  return lo + Rational(1, den);
}

}  // namespace pwmap
