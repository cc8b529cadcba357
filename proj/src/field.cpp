#include <comod/field.hpp>

#include <boost/integer/mod_inverse.hpp>
#include <regex>
#include <stdexcept>

namespace comod {

Field Field::gf(long prime) {
  if (prime < 2) throw std::invalid_argument("GF order must be a prime >= 2");
  for (long d = 2; d * d <= prime; d++)
    if (prime % d == 0) throw std::invalid_argument("GF order must be prime");
  return Field{Int(prime)};
}

Field Field::rationals() { return Field{Int(0)}; }

Scalar Field::norm(const Scalar& x) const {
  if (!is_gf()) return x;
  Int num = x.numerator() % p;
  if (num < 0) num += p;
  Int den = x.denominator() % p;  // positive: boost keeps denominators > 0
  if (den == 1) return Scalar(num);
  Int dinv = boost::integer::mod_inverse(den, p);
  if (dinv == 0) throw std::domain_error("denominator not invertible mod p");
  return Scalar((num * dinv) % p);
}

Scalar Field::add(const Scalar& x, const Scalar& y) const { return norm(x + y); }
Scalar Field::sub(const Scalar& x, const Scalar& y) const { return norm(x - y); }
Scalar Field::mul(const Scalar& x, const Scalar& y) const { return norm(x * y); }
Scalar Field::neg(const Scalar& x) const { return norm(-x); }

Scalar Field::inv(const Scalar& x) const {
  Scalar v = norm(x);
  if (v.numerator() == 0) throw std::domain_error("division by zero");
  if (!is_gf()) return Scalar(1) / v;
  return Scalar(boost::integer::mod_inverse(v.numerator(), p));
}

Scalar Field::div(const Scalar& x, const Scalar& y) const {
  return mul(x, inv(y));
}

Scalar Field::from_int(long v) const { return norm(Scalar(Int(v))); }

bool Field::eq(const Scalar& x, const Scalar& y) const {
  return norm(x) == norm(y);
}

std::string Field::str(const Scalar& x) const {
  Scalar v = norm(x);
  std::string s = v.numerator().str();
  if (v.denominator() != 1) s += "/" + v.denominator().str();
  return s;
}

std::optional<Scalar> Field::parse(const std::string& s) const {
  static const std::regex form(R"(^(-?\d+)(?:/(\d+))?$)");
  std::smatch m;
  if (!std::regex_match(s, m, form)) return std::nullopt;
  Int num(m[1].str());
  Int den = m[2].matched ? Int(m[2].str()) : Int(1);
  if (den == 0) return std::nullopt;
  return norm(Scalar(num, den));
}

std::string Field::name() const {
  if (!is_gf()) return "Q";
  return "GF(" + p.str() + ")";
}

}  // namespace comod
