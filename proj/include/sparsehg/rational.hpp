#pragma once

#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace sparsehg {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised when a checked integer computation leaves the 64-bit range.
struct OverflowError : Error {
  using Error::Error;
};

namespace detail {

inline long long checked_i128_to_i64(__int128 v, const char* what) {
  if (v > static_cast<__int128>(std::numeric_limits<long long>::max()) ||
      v < static_cast<__int128>(std::numeric_limits<long long>::min())) {
    throw OverflowError(std::string(what) + ": result exceeds 64-bit range");
  }
  return static_cast<long long>(v);
}

}  // namespace detail

/// n choose k in checked 64-bit arithmetic; throws OverflowError.
inline long long binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  __int128 acc = 1;
  for (long long i = 1; i <= k; ++i) {
    acc = acc * (n - k + i) / i;
    if (acc > static_cast<__int128>(std::numeric_limits<long long>::max())) {
      throw OverflowError("binomial(" + std::to_string(n) + "," +
                          std::to_string(k) + ") exceeds 64-bit range");
    }
  }
  return static_cast<long long>(acc);
}

inline long long factorial(int n) {
  if (n < 0) throw Error("factorial: negative argument");
  __int128 acc = 1;
  for (int i = 2; i <= n; ++i) {
    acc *= i;
    if (acc > static_cast<__int128>(std::numeric_limits<long long>::max())) {
      throw OverflowError("factorial(" + std::to_string(n) + ") exceeds 64-bit range");
    }
  }
  return static_cast<long long>(acc);
}

inline long long checked_pow(long long base, int exp) {
  if (exp < 0) throw Error("checked_pow: negative exponent");
  __int128 acc = 1;
  for (int i = 0; i < exp; ++i) {
    acc *= base;
    if (acc > static_cast<__int128>(std::numeric_limits<long long>::max()) ||
        acc < -static_cast<__int128>(std::numeric_limits<long long>::max())) {
      throw OverflowError("checked_pow: result exceeds 64-bit range");
    }
  }
  return static_cast<long long>(acc);
}

/// Exact rational with 64-bit numerator/denominator, always normalized
/// (gcd 1, denominator positive). Intermediates run through 128 bits and
/// throw OverflowError rather than wrap.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long value) : num_(value), den_(1) {}  // NOLINT(implicit)
  Rational(long long num, long long den) : num_(num), den_(den) {
    if (den_ == 0) throw Error("Rational: zero denominator");
    normalize();
  }

  long long num() const { return num_; }
  long long den() const { return den_; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    __int128 n = static_cast<__int128>(a.num_) * b.den_ +
                 static_cast<__int128>(b.num_) * a.den_;
    __int128 d = static_cast<__int128>(a.den_) * b.den_;
    return make128(n, d);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    __int128 n = static_cast<__int128>(a.num_) * b.den_ -
                 static_cast<__int128>(b.num_) * a.den_;
    __int128 d = static_cast<__int128>(a.den_) * b.den_;
    return make128(n, d);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return make128(static_cast<__int128>(a.num_) * b.num_,
                   static_cast<__int128>(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw Error("Rational: division by zero");
    return make128(static_cast<__int128>(a.num_) * b.den_,
                   static_cast<__int128>(a.den_) * b.num_);
  }
  Rational operator-() const { return Rational(-num_, den_); }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num_) * b.den_ <
           static_cast<__int128>(b.num_) * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

 private:
  static Rational make128(__int128 n, __int128 d) {
    if (d < 0) { n = -n; d = -d; }
    __int128 g = gcd128(n < 0 ? -n : n, d);
    if (g > 1) { n /= g; d /= g; }
    Rational r;
    r.num_ = detail::checked_i128_to_i64(n, "Rational");
    r.den_ = detail::checked_i128_to_i64(d, "Rational");
    return r;
  }
  static __int128 gcd128(__int128 a, __int128 b) {
    while (b != 0) { __int128 t = a % b; a = b; b = t; }
    return a == 0 ? 1 : a;
  }
  void normalize() {
    if (den_ < 0) { num_ = -num_; den_ = -den_; }
    long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) { num_ /= g; den_ /= g; }
    if (num_ == 0) den_ = 1;
  }

  long long num_;
  long long den_;
};

}  // namespace sparsehg
