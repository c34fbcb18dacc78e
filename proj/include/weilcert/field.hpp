#pragma once

// Exact arithmetic in Q, Q(sqrt D) and the tower Q(sqrt D, zeta_n).

#include <compare>
#include <memory>
#include <string>
#include <vector>

#include "weilcert/rational.hpp"

namespace weilcert {

class FieldDesc;
using FieldRef = std::shared_ptr<const FieldDesc>;

/// Description of the tower Q(sqrt D)(zeta_n) = Q(sqrt D)[y] / Phi_n(y).
class FieldDesc {
 public:
  /// Throws DomainError unless D > 1 is square-free and n >= 1.
  static FieldRef make(long d, int n = 1);

  long d() const { return d_; }
  int n() const { return n_; }
  /// phi(n): number of zeta-power coefficients of a tower element.
  int degree() const { return static_cast<int>(cyclotomic_.size()) - 1; }
  /// Phi_n, ascending coefficients, monic.
  const std::vector<Rat>& cyclotomic() const { return cyclotomic_; }
  /// Coefficients (length degree()) of zeta^j reduced mod Phi_n, 0 <= j < n.
  const std::vector<Rat>& zeta_power(int j) const { return zeta_powers_.at(static_cast<std::size_t>(j)); }
  /// False when sqrt D already lies in Q(zeta_n); the quotient ring then has zero divisors.
  bool is_field() const { return is_field_; }

  bool same_as(const FieldDesc& o) const { return d_ == o.d_ && n_ == o.n_; }

 private:
  FieldDesc() = default;
  long d_ = 0;
  int n_ = 1;
  std::vector<Rat> cyclotomic_;
  std::vector<std::vector<Rat>> zeta_powers_;
  bool is_field_ = true;
};

bool is_square_free_integer(long v);
int euler_phi(int n);
/// Phi_n by recursive exact division of y^n - 1, ascending integer coefficients.
std::vector<Rat> cyclotomic_polynomial(int n);

/// a + b sqrt(D).
class Quad {
 public:
  Quad() = default;
  Quad(Rat a, Rat b, long d) : a_(std::move(a)), b_(std::move(b)), d_(d) {}
  static Quad rational(Rat a, long d) { return Quad(std::move(a), Rat(0), d); }
  static Quad sqrt_d(long d) { return Quad(Rat(0), Rat(1), d); }

  const Rat& a() const { return a_; }
  const Rat& b() const { return b_; }
  long d() const { return d_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_rational() const { return b_.is_zero(); }

  Quad operator-() const { return Quad(-a_, -b_, d_); }
  Quad& operator+=(const Quad& o);
  Quad& operator-=(const Quad& o);
  Quad& operator*=(const Quad& o);
  Quad& operator/=(const Quad& o) { return *this *= o.inverse(); }
  friend Quad operator+(Quad x, const Quad& y) { return x += y; }
  friend Quad operator-(Quad x, const Quad& y) { return x -= y; }
  friend Quad operator*(Quad x, const Quad& y) { return x *= y; }
  friend Quad operator/(Quad x, const Quad& y) { return x /= y; }

  Quad conjugate() const { return Quad(a_, -b_, d_); }
  Rat norm() const { return a_ * a_ - Rat(d_) * b_ * b_; }
  Quad inverse() const;
  Quad pow(long e) const;

  friend bool operator==(const Quad& x, const Quad& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
  friend std::strong_ordering operator<=>(const Quad& x, const Quad& y) {
    if (auto c = x.a_ <=> y.a_; c != 0) return c;
    return x.b_ <=> y.b_;
  }

  /// Element grammar: rat | rat ("+"|"-") rat "*s".
  std::string to_string() const;

 private:
  Rat a_;
  Rat b_;
  long d_ = 0;
};

inline Quad quad_conjugate(const Quad& x) { return x.conjugate(); }
inline Rat quad_norm(const Quad& x) { return x.norm(); }

/// Element of Q(sqrt D)(zeta_n): coefficient k multiplies zeta^k, k < phi(n).
class TowerElt {
 public:
  explicit TowerElt(FieldRef field);
  /// Accepts any number of coefficients and reduces modulo Phi_n.
  TowerElt(FieldRef field, std::vector<Quad> coeffs);
  TowerElt(FieldRef field, const Quad& q);
  TowerElt(FieldRef field, const Rat& r);

  static TowerElt zeta(const FieldRef& field);
  static TowerElt sqrt_d(const FieldRef& field);
  static TowerElt one(const FieldRef& field) { return TowerElt(field, Rat(1)); }

  const FieldRef& field() const { return field_; }
  const std::vector<Quad>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  bool in_quadratic_subfield() const;
  /// Throws DomainError when the element has zeta components.
  Quad as_quad() const;

  TowerElt operator-() const;
  TowerElt& operator+=(const TowerElt& o);
  TowerElt& operator-=(const TowerElt& o);
  TowerElt& operator*=(const TowerElt& o);
  TowerElt& operator/=(const TowerElt& o) { return *this *= o.inverse(); }
  friend TowerElt operator+(TowerElt x, const TowerElt& y) { return x += y; }
  friend TowerElt operator-(TowerElt x, const TowerElt& y) { return x -= y; }
  friend TowerElt operator*(TowerElt x, const TowerElt& y) { return x *= y; }
  friend TowerElt operator/(TowerElt x, const TowerElt& y) { return x /= y; }

  TowerElt inverse() const;
  TowerElt pow(long e) const;

  friend bool operator==(const TowerElt& x, const TowerElt& y);
  /// Lexicographic on coefficients; used only for canonical ordering.
  friend std::strong_ordering operator<=>(const TowerElt& x, const TowerElt& y);

  std::string to_string() const;

 private:
  void check_field(const TowerElt& o) const;
  FieldRef field_;
  std::vector<Quad> coeffs_;
};

bool same_field(const FieldRef& a, const FieldRef& b);

TowerElt tower_mul(const TowerElt& x, const TowerElt& y);
TowerElt tower_inv(const TowerElt& x);

/// sqrt D -> (flip ? -sqrt D : sqrt D), zeta -> zeta^zeta_exp.
struct GaloisAut {
  bool flip_sqrt = false;
  int zeta_exp = 1;

  static GaloisAut identity() { return {false, 1}; }
  static GaloisAut sigma() { return {true, 1}; }
  static GaloisAut tau(int k) { return {false, k}; }
  friend bool operator==(const GaloisAut&, const GaloisAut&) = default;
};

Quad apply_galois(const GaloisAut& aut, const Quad& x);
TowerElt apply_galois(const GaloisAut& aut, const TowerElt& x);

/// Exponents k in [1, n) coprime to n (all tau automorphisms of Q(zeta_n)).
std::vector<int> units_mod(int n);

}  // namespace weilcert
