#ifndef DENSEDEL_RATIONAL_H_
#define DENSEDEL_RATIONAL_H_

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace densedel {

// Exact fraction kept in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() : value_(0) {}
  Rational(int v) : value_(v) {}  // NOLINT(runtime/explicit)
  Rational(long v) : value_(v) {}  // NOLINT(runtime/explicit)
  Rational(long long v) : value_(static_cast<long>(v)) {}  // NOLINT
  Rational(std::int64_t num, std::int64_t den);
  explicit Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

  // Accepts "p/q", "p" and "-p/q". Throws Error(kInvalidRational).
  static Rational parse(std::string_view text);

  const mpq_class& raw() const { return value_; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }
  double to_double() const { return value_.get_d(); }

  // Numerator / denominator as int64; throws kTooLarge when out of range.
  std::int64_t numerator_i64() const;
  std::int64_t denominator_i64() const;

  mpz_class floor() const;
  mpz_class ceil() const;

  // Always "p/q", including "n/1" for integers.
  std::string to_string() const;

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
  }

 private:
  mpq_class value_;
};

Rational abs(const Rational& r);
Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);

}  // namespace densedel

#endif  // DENSEDEL_RATIONAL_H_
