#pragma once

#include <compare>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace weilcert {

/// Exact rational number in lowest terms with positive denominator.
class Rat {
 public:
  Rat() = default;
  Rat(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rat(const mpz_class& num, const mpz_class& den);
  explicit Rat(const mpq_class& q);

  static Rat from_string(std::string_view text);

  const mpz_class& num() const { return q_.get_num(); }
  const mpz_class& den() const { return q_.get_den(); }
  const mpq_class& value() const { return q_; }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  Rat operator-() const { return Rat(mpq_class(-q_)); }
  Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
  Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
  Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  Rat inverse() const;
  Rat abs() const { return Rat(mpq_class(::abs(q_))); }
  Rat pow(long e) const;

  /// "p" or "p/q".
  std::string to_string() const { return q_.get_str(); }

 private:
  mpq_class q_;
};

}  // namespace weilcert
