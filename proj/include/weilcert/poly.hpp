#pragma once

// Univariate polynomials over a tower.

#include <utility>
#include <vector>

#include "weilcert/field.hpp"

namespace weilcert {

class Poly {
 public:
  explicit Poly(FieldRef field) : field_(std::move(field)) {}
  /// Ascending coefficients; trailing zeros are dropped.
  Poly(FieldRef field, std::vector<TowerElt> coeffs);

  static Poly constant(const TowerElt& c);
  static Poly x(const FieldRef& field);
  /// x - root.
  static Poly linear_factor(const TowerElt& root);

  const FieldRef& field() const { return field_; }
  const std::vector<TowerElt>& coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const TowerElt& lead() const;
  TowerElt coeff(int k) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const TowerElt& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend Poly operator*(Poly a, const TowerElt& c) { return a *= c; }
  friend bool operator==(const Poly& a, const Poly& b);

  Poly derivative() const;
  Poly monic() const;
  TowerElt eval(const TowerElt& x) const;
  Poly pow(int e) const;

  std::string to_string() const;

 private:
  void trim();
  void check_field(const Poly& o) const;
  FieldRef field_;
  std::vector<TowerElt> coeffs_;
};

/// Quotient and remainder; divisor must be nonzero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
/// Monic gcd by the Euclidean algorithm (zero iff both inputs are zero).
Poly poly_gcd(const Poly& p, const Poly& q);
/// deg gcd(p, p') == 0; throws DomainError on the zero polynomial.
bool is_square_free(const Poly& p);
/// A binary form of nominal degree `degree` given by its dehomogenization
/// p(X) = F(X, 1): square-free iff p is, and at most one root sits at infinity.
bool is_square_free_binary_form(const Poly& dehomogenized, int degree);
/// Determinant of the Sylvester matrix: lc(p)^deg q * prod q(root_i of p).
TowerElt resultant(const Poly& p, const Poly& q);
/// (-1)^(n(n-1)/2) Res(p, p') / lc(p).
TowerElt discriminant(const Poly& p);

Poly conjugate_coeffs(const GaloisAut& aut, const Poly& p);

}  // namespace weilcert
