#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace ncfree {

/// Exact element of Q(i, sqrt2, sqrt3, ...): a finite sum of
/// (re + i*im) * sqrt(r) over squarefree radicands r >= 1.
///
/// Radicand 1 carries the Gaussian-rational part. Terms are kept sorted by
/// radicand with no zero coefficients, so equality is structural.
class Scalar {
public:
  struct Term {
    std::uint64_t radicand;
    mpq_class re;
    mpq_class im;
  };

  Scalar() = default;
  Scalar(long v); // NOLINT(google-explicit-constructor)
  Scalar(mpq_class re, mpq_class im = 0);

  static Scalar rational(long num, long den = 1);
  static Scalar imag_unit();
  /// Exact square root of an integer; negative arguments give i*sqrt(-n).
  static Scalar sqrt(long n);

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  bool is_gaussian_rational() const;
  /// Real part of the radicand-1 term. Only meaningful when is_rational().
  mpq_class rational_value() const;

  const std::vector<Term>& terms() const { return terms_; }

  Scalar conj() const;
  Scalar inverse() const;
  std::complex<double> to_complex() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const;

  friend bool operator==(const Scalar& a, const Scalar& b);

  /// Serialized real and imaginary parts, e.g. "3/4", "-1/2*sqrt2",
  /// "1 + 1/3*sqrt6". Round-trips through parse().
  std::string real_string() const;
  std::string imag_string() const;
  static Scalar parse(std::string_view re, std::string_view im);

private:
  void add_term(std::uint64_t radicand, const mpq_class& re, const mpq_class& im);

  std::vector<Term> terms_;
};

std::string to_string(const Scalar& s);

} // namespace ncfree
