#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>
#include <optional>
#include <string>

namespace comod {

using Int = boost::multiprecision::cpp_int;
using Scalar = boost::rational<Int>;

// Exact scalar field: GF(p) for prime p, or the rationals when p == 0.
// GF(p) values are kept as integers with numerator normalized to 0..p-1,
// so one Scalar type serves both fields and operator== is exact equality.
struct Field {
  Int p;

  static Field gf(long prime);
  static Field rationals();

  bool is_gf() const { return p != 0; }

  Scalar norm(const Scalar& x) const;
  Scalar add(const Scalar& x, const Scalar& y) const;
  Scalar sub(const Scalar& x, const Scalar& y) const;
  Scalar mul(const Scalar& x, const Scalar& y) const;
  Scalar neg(const Scalar& x) const;
  Scalar inv(const Scalar& x) const;
  Scalar div(const Scalar& x, const Scalar& y) const;

  Scalar zero() const { return Scalar(0); }
  Scalar one() const { return Scalar(1); }
  Scalar from_int(long v) const;

  bool is_zero(const Scalar& x) const { return x.numerator() == 0; }
  bool eq(const Scalar& x, const Scalar& y) const;

  std::string str(const Scalar& x) const;
  std::optional<Scalar> parse(const std::string& s) const;

  std::string name() const;

  bool operator==(const Field& o) const { return p == o.p; }
};

}  // namespace comod
