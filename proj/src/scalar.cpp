#include "ncfree/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace ncfree {

namespace {

// Splits n > 0 into square part and squarefree part: n = s*s*t.
std::pair<std::uint64_t, std::uint64_t> split_square(std::uint64_t n) {
  std::uint64_t s = 1;
  std::uint64_t t = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    for (int i = 0; i < e / 2; ++i) s *= p;
    if (e % 2 == 1) t *= p;
  }
  t *= n;
  return {s, t};
}

std::uint64_t smallest_prime_factor(std::uint64_t n) {
  for (std::uint64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return p;
  return n;
}

std::string format_part(const std::vector<Scalar::Term>& terms, bool imag) {
  std::string out;
  for (const auto& t : terms) {
    const mpq_class& c = imag ? t.im : t.re;
    if (c == 0) continue;
    std::string piece = c.get_str();
    if (t.radicand != 1) piece += "*sqrt" + std::to_string(t.radicand);
    if (out.empty()) {
      out = piece;
    } else if (piece.front() == '-') {
      out += " - " + piece.substr(1);
    } else {
      out += " + " + piece;
    }
  }
  return out.empty() ? "0" : out;
}

// Parses "a/b*sqrtr + c - d*sqrts" into (radicand, coefficient) pairs.
std::vector<std::pair<std::uint64_t, mpq_class>> parse_part(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw std::invalid_argument("empty scalar component");

  std::vector<std::pair<std::uint64_t, mpq_class>> out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (!out.empty()) {
      throw std::invalid_argument("malformed scalar: " + std::string(text));
    }
    std::size_t end = pos;
    while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
    std::string piece = s.substr(pos, end - pos);
    pos = end;

    std::uint64_t radicand = 1;
    std::string coeff = piece;
    if (auto star = piece.find("*sqrt"); star != std::string::npos) {
      coeff = piece.substr(0, star);
      std::string r = piece.substr(star + 5);
      if (r.empty() || !std::all_of(r.begin(), r.end(), ::isdigit))
        throw std::invalid_argument("malformed radicand: " + piece);
      radicand = std::stoull(r);
    } else if (piece.rfind("sqrt", 0) == 0) {
      coeff = "1";
      std::string r = piece.substr(4);
      if (r.empty() || !std::all_of(r.begin(), r.end(), ::isdigit))
        throw std::invalid_argument("malformed radicand: " + piece);
      radicand = std::stoull(r);
    }
    if (coeff.empty()) throw std::invalid_argument("malformed scalar: " + std::string(text));
    mpq_class q;
    if (q.set_str(coeff, 10) != 0 || q.get_den() == 0)
      throw std::invalid_argument("malformed rational: " + coeff);
    q.canonicalize();
    if (radicand == 0) continue;
    auto [sq, t] = split_square(radicand);
    out.emplace_back(t, sign * q * mpq_class(sq));
  }
  return out;
}

} // namespace

Scalar::Scalar(long v) {
  if (v != 0) terms_.push_back({1, mpq_class(v), mpq_class(0)});
}

Scalar::Scalar(mpq_class re, mpq_class im) {
  re.canonicalize();
  im.canonicalize();
  if (re != 0 || im != 0) terms_.push_back({1, std::move(re), std::move(im)});
}

Scalar Scalar::rational(long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  return Scalar(mpq_class(num, den));
}

Scalar Scalar::imag_unit() { return Scalar(mpq_class(0), mpq_class(1)); }

Scalar Scalar::sqrt(long n) {
  if (n == 0) return {};
  const bool neg = n < 0;
  auto [s, t] = split_square(static_cast<std::uint64_t>(neg ? -n : n));
  Scalar out;
  if (neg)
    out.terms_.push_back({t, 0, mpq_class(s)});
  else
    out.terms_.push_back({t, mpq_class(s), 0});
  return out;
}

bool Scalar::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].radicand == 1 && terms_[0].im == 0);
}

bool Scalar::is_gaussian_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].radicand == 1);
}

mpq_class Scalar::rational_value() const {
  if (terms_.empty() || terms_[0].radicand != 1) return 0;
  return terms_[0].re;
}

void Scalar::add_term(std::uint64_t radicand, const mpq_class& re, const mpq_class& im) {
  if (re == 0 && im == 0) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), radicand,
                             [](const Term& t, std::uint64_t r) { return t.radicand < r; });
  if (it != terms_.end() && it->radicand == radicand) {
    it->re += re;
    it->im += im;
    if (it->re == 0 && it->im == 0) terms_.erase(it);
  } else {
    terms_.insert(it, Term{radicand, re, im});
  }
}

Scalar& Scalar::operator+=(const Scalar& o) {
  for (const auto& t : o.terms_) add_term(t.radicand, t.re, t.im);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  for (const auto& t : o.terms_) add_term(t.radicand, -t.re, -t.im);
  return *this;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  Scalar out;
  if (a.is_gaussian_rational() && b.is_gaussian_rational()) {
    if (a.is_zero() || b.is_zero()) return out;
    const auto& x = a.terms_[0];
    const auto& y = b.terms_[0];
    out.add_term(1, x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re);
    return out;
  }
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) {
      const std::uint64_t g = std::gcd(x.radicand, y.radicand);
      const std::uint64_t r = (x.radicand / g) * (y.radicand / g);
      mpq_class re = x.re * y.re - x.im * y.im;
      mpq_class im = x.re * y.im + x.im * y.re;
      if (g != 1) {
        re *= mpq_class(g);
        im *= mpq_class(g);
      }
      out.add_term(r, re, im);
    }
  }
  return out;
}

Scalar& Scalar::operator*=(const Scalar& o) { return *this = *this * o; }

Scalar Scalar::operator-() const {
  Scalar out = *this;
  for (auto& t : out.terms_) {
    t.re = -t.re;
    t.im = -t.im;
  }
  return out;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    const auto& x = a.terms_[i];
    const auto& y = b.terms_[i];
    if (x.radicand != y.radicand || x.re != y.re || x.im != y.im) return false;
  }
  return true;
}

Scalar Scalar::conj() const {
  Scalar out = *this;
  for (auto& t : out.terms_) t.im = -t.im;
  return out;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero scalar");
  // Multiply by Galois conjugates until only the Gaussian-rational part is
  // left; each pass removes one prime from every radicand.
  Scalar x = *this;
  Scalar acc(1);
  for (;;) {
    std::uint64_t prime = 0;
    for (const auto& t : x.terms_) {
      if (t.radicand != 1) {
        prime = smallest_prime_factor(t.radicand);
        break;
      }
    }
    if (prime == 0) break;
    Scalar flipped = x;
    for (auto& t : flipped.terms_) {
      if (t.radicand % prime == 0) {
        t.re = -t.re;
        t.im = -t.im;
      }
    }
    acc *= flipped;
    x *= flipped;
  }
  const auto& c = x.terms_.at(0);
  const mpq_class norm = c.re * c.re + c.im * c.im;
  return acc * Scalar(c.re / norm, -c.im / norm);
}

std::complex<double> Scalar::to_complex() const {
  std::complex<double> out;
  for (const auto& t : terms_) {
    const double s = std::sqrt(static_cast<double>(t.radicand));
    out += std::complex<double>(t.re.get_d() * s, t.im.get_d() * s);
  }
  return out;
}

std::string Scalar::real_string() const { return format_part(terms_, false); }
std::string Scalar::imag_string() const { return format_part(terms_, true); }

Scalar Scalar::parse(std::string_view re, std::string_view im) {
  Scalar out;
  for (const auto& [r, q] : parse_part(re)) out.add_term(r, q, 0);
  for (const auto& [r, q] : parse_part(im)) out.add_term(r, 0, q);
  return out;
}

std::string to_string(const Scalar& s) {
  if (s.is_zero()) return "0";
  const std::string re = s.real_string();
  const std::string im = s.imag_string();
  if (im == "0") return re;
  if (re == "0") return "(" + im + ")*i";
  return re + " + (" + im + ")*i";
}

} // namespace ncfree
