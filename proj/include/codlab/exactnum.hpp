// Copyright 2026 The codlab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

/// Exact non-negative integer arithmetic: group orders, factorials, p-adic
/// valuations and exact rational bounds. Nothing here touches floating point.
namespace codlab {

class Natural {
 public:
  using Rep = boost::multiprecision::cpp_int;

  Natural() = default;
  Natural(std::uint64_t v) : v_(v) {}  // NOLINT(google-explicit-constructor)

  static Natural from_rep(Rep v) {
    if (v < 0) throw std::domain_error("Natural: negative value");
    Natural n;
    n.v_ = std::move(v);
    return n;
  }

  /// Parses a plain decimal string (digits only, no sign, no exponent).
  static Natural parse(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("Natural: empty decimal string");
    for (char c : s) {
      if (c < '0' || c > '9') {
        throw std::invalid_argument("Natural: not a decimal string: " +
                                    std::string(s));
      }
    }
    return from_rep(Rep(std::string(s)));
  }

  const Rep& rep() const { return v_; }
  bool is_zero() const { return v_.is_zero(); }
  std::string str() const { return v_.str(); }
  std::size_t bit_length() const {
    return v_.is_zero() ? 0 : boost::multiprecision::msb(v_) + 1;
  }

  /// Narrowing conversion; throws when the value does not fit.
  std::uint64_t to_u64() const {
    if (v_ > std::numeric_limits<std::uint64_t>::max()) {
      throw std::overflow_error("Natural: value exceeds 64 bits");
    }
    return v_.convert_to<std::uint64_t>();
  }

  Natural& operator+=(const Natural& o) {
    v_ += o.v_;
    return *this;
  }
  Natural& operator*=(const Natural& o) {
    v_ *= o.v_;
    return *this;
  }
  /// Checked subtraction.
  Natural& operator-=(const Natural& o) {
    if (o.v_ > v_) throw std::domain_error("Natural: subtraction underflow");
    v_ -= o.v_;
    return *this;
  }

  friend Natural operator+(Natural a, const Natural& b) { return a += b; }
  friend Natural operator*(Natural a, const Natural& b) { return a *= b; }
  friend Natural operator-(Natural a, const Natural& b) { return a -= b; }
  friend Natural operator%(const Natural& a, const Natural& b) {
    if (b.is_zero()) throw std::domain_error("Natural: modulo by zero");
    return from_rep(a.v_ % b.v_);
  }

  friend bool operator==(const Natural& a, const Natural& b) {
    return a.v_ == b.v_;
  }
  friend std::strong_ordering operator<=>(const Natural& a, const Natural& b) {
    const int c = a.v_.compare(b.v_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Natural& n) {
    return os << n.v_.str();
  }

 private:
  Rep v_;
};

/// Division that is only defined when `divisor` divides `dividend`.
inline Natural exact_div(const Natural& dividend, const Natural& divisor) {
  if (divisor.is_zero()) throw std::domain_error("exact_div: division by zero");
  Natural::Rep q, r;
  boost::multiprecision::divide_qr(dividend.rep(), divisor.rep(), q, r);
  if (!r.is_zero()) {
    throw std::domain_error("exact_div: " + divisor.str() +
                            " does not divide " + dividend.str());
  }
  return Natural::from_rep(std::move(q));
}

inline Natural pow(const Natural& base, unsigned exponent) {
  return Natural::from_rep(boost::multiprecision::pow(base.rep(), exponent));
}

inline Natural gcd(const Natural& a, const Natural& b) {
  return Natural::from_rep(boost::multiprecision::gcd(a.rep(), b.rep()));
}

/// True iff a | b. a must be non-zero.
inline bool divides(const Natural& a, const Natural& b) {
  if (a.is_zero()) throw std::domain_error("divides: zero divisor");
  return (b % a).is_zero();
}

inline bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

/// Smallest prime strictly greater than p.
inline std::uint64_t next_prime(std::uint64_t p) {
  std::uint64_t c = p + 1;
  while (!is_prime(c)) ++c;
  return c;
}

inline Natural factorial(unsigned n) {
  Natural::Rep acc = 1;
  for (unsigned i = 2; i <= n; ++i) acc *= i;
  return Natural::from_rep(std::move(acc));
}

/// Largest e with p^e | x.
inline unsigned valuation(const Natural& x, std::uint64_t p) {
  if (x.is_zero()) throw std::domain_error("valuation: zero argument");
  if (!is_prime(p)) throw std::invalid_argument("valuation: p must be prime");
  Natural::Rep v = x.rep(), q, r;
  const Natural::Rep pp = p;
  unsigned e = 0;
  for (;;) {
    boost::multiprecision::divide_qr(v, pp, q, r);
    if (!r.is_zero()) break;
    v = std::move(q);
    ++e;
  }
  return e;
}

/// v_p(n!) by Legendre's sum of floor(n / p^i).
inline unsigned factorial_valuation(unsigned n, std::uint64_t p) {
  if (!is_prime(p)) {
    throw std::invalid_argument("factorial_valuation: p must be prime");
  }
  unsigned total = 0;
  for (std::uint64_t pk = p; pk <= n; pk *= p) {
    total += static_cast<unsigned>(n / pk);
    if (pk > std::numeric_limits<std::uint64_t>::max() / p) break;
  }
  return total;
}

/// q = p^k with p prime and k >= 1, validated on construction.
class PrimePower {
 public:
  PrimePower(std::uint64_t p, unsigned k) : p_(p), k_(k) {
    if (!is_prime(p)) {
      throw std::invalid_argument("PrimePower: " + std::to_string(p) +
                                  " is not prime");
    }
    if (k < 1) throw std::invalid_argument("PrimePower: exponent must be >= 1");
  }

  /// Recovers (p, k) from a prime power q; throws if q is not one.
  static PrimePower from_value(std::uint64_t q) {
    if (q < 2) throw std::invalid_argument("PrimePower: q must be >= 2");
    std::uint64_t p = 2;
    while (q % p != 0) ++p;
    unsigned k = 0;
    std::uint64_t r = q;
    while (r % p == 0) {
      r /= p;
      ++k;
    }
    if (r != 1) {
      throw std::invalid_argument("PrimePower: " + std::to_string(q) +
                                  " is not a prime power");
    }
    return {p, k};
  }

  std::uint64_t p() const { return p_; }
  unsigned k() const { return k_; }
  Natural value() const { return pow(Natural(p_), k_); }

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
  friend auto operator<=>(const PrimePower&, const PrimePower&) = default;

 private:
  std::uint64_t p_;
  unsigned k_;
};

/// Non-negative exact fraction, kept in lowest terms.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(Natural n) : num_(std::move(n)), den_(1) {}  // NOLINT
  Rational(Natural n, Natural d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
    normalize();
  }

  const Natural& num() const { return num_; }
  const Natural& den() const { return den_; }
  bool is_integer() const { return den_ == Natural(1); }

  /// "25/2" or "21".
  std::string str() const {
    return is_integer() ? num_.str() : num_.str() + "/" + den_.str();
  }

  friend Rational operator*(const Rational& a, const Rational& b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
  }
  friend Rational operator+(const Rational& a, const Rational& b) {
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
  }
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    return a.num_ * b.den_ <=> b.num_ * a.den_;
  }

 private:
  void normalize() {
    Natural g = gcd(num_, den_);
    if (!g.is_zero() && g != Natural(1)) {
      num_ = exact_div(num_, g);
      den_ = exact_div(den_, g);
    }
  }

  Natural num_;
  Natural den_;
};

/// a < b * r, evaluated as a * den < b * num.
inline bool less_than_scaled(const Natural& a, const Natural& b,
                             const Rational& r) {
  return a * r.den() < b * r.num();
}

/// Trial-division factorization rendered as "2^6·3^2·5". Primes above
/// `trial_limit` are left as one unfactored cofactor.
inline std::string factored(const Natural& x,
                            std::uint64_t trial_limit = 1'000'000) {
  if (x.is_zero()) return "0";
  if (x == Natural(1)) return "1";
  Natural::Rep v = x.rep(), q, r;
  std::string out;
  auto append = [&](const std::string& base, unsigned e) {
    if (!out.empty()) out += "·";
    out += base;
    if (e > 1) out += "^" + std::to_string(e);
  };
  for (std::uint64_t d = 2; d <= trial_limit && d * d <= v; ++d) {
    unsigned e = 0;
    for (;;) {
      boost::multiprecision::divide_qr(v, Natural::Rep(d), q, r);
      if (!r.is_zero()) break;
      v = q;
      ++e;
    }
    if (e > 0) append(std::to_string(d), e);
  }
  if (v > 1) append(v.str(), 1);
  return out;
}

/// Immutable table of 0!, 1!, ..., max_n!. Safe to share across threads.
class FactorialTable {
 public:
  explicit FactorialTable(unsigned max_n) {
    values_.reserve(max_n + 1);
    Natural::Rep acc = 1;
    values_.push_back(Natural(1));
    for (unsigned i = 1; i <= max_n; ++i) {
      acc *= i;
      values_.push_back(Natural::from_rep(acc));
    }
  }

  unsigned max_n() const { return static_cast<unsigned>(values_.size() - 1); }

  /// n! from the table, or computed directly when n is past the end.
  Natural operator()(unsigned n) const {
    if (n < values_.size()) return values_[n];
    Natural::Rep acc = values_.back().rep();
    for (unsigned i = max_n() + 1; i <= n; ++i) acc *= i;
    return Natural::from_rep(std::move(acc));
  }

 private:
  std::vector<Natural> values_;
};

}  // namespace codlab
