#pragma once

// Homogeneous ternary forms and projective linear maps of P^2.

#include <array>
#include <map>
#include <optional>

#include <json.hpp>

#include "weilcert/field.hpp"
#include "weilcert/linalg.hpp"
#include "weilcert/poly.hpp"

namespace weilcert {

/// Exponents (i, j, k) of X^i Y^j Z^k; std::map order is lexicographic.
using Monomial = std::array<int, 3>;

inline constexpr int kMaxFormDegree = 64;

class Form3 {
 public:
  Form3(FieldRef field, int degree);

  /// c * X^i Z^(degree - i) summed over p(X) = sum c_i X^i, times Y^y_power.
  static Form3 from_binary(const Poly& dehomogenized, int binary_degree, int y_power);
  static Form3 monomial(const TowerElt& c, Monomial m);

  const FieldRef& field() const { return field_; }
  int degree() const { return degree_; }
  const std::map<Monomial, TowerElt>& terms() const { return terms_; }
  TowerElt coeff(const Monomial& m) const;
  bool is_zero() const { return terms_.empty(); }

  /// Adds c to the coefficient of m (zero results are erased).
  void add_term(const Monomial& m, const TowerElt& c);

  Form3& operator+=(const Form3& o);
  Form3& operator-=(const Form3& o);
  Form3& operator*=(const TowerElt& c);
  friend Form3 operator+(Form3 a, const Form3& b) { return a += b; }
  friend Form3 operator-(Form3 a, const Form3& b) { return a -= b; }
  friend Form3 operator*(Form3 a, const TowerElt& c) { return a *= c; }
  friend Form3 operator*(const Form3& a, const Form3& b);
  friend bool operator==(const Form3& a, const Form3& b);

  /// F(X, 1, 0)-style restriction: keeps terms with Z-exponent 0, dehomogenized at Y = 1.
  Poly restrict_z0_dehomogenized_y() const;

  std::string to_string() const;

 private:
  void check(const Form3& o) const;
  FieldRef field_;
  int degree_;
  std::map<Monomial, TowerElt> terms_;
};

/// Element of PGL_3: invertible 3x3 matrix, first nonzero entry (row-major) scaled to 1.
class ProjMap3 {
 public:
  /// Throws DomainError when the determinant vanishes.
  explicit ProjMap3(Matrix m);
  static ProjMap3 identity(const FieldRef& field);

  const Matrix& matrix() const { return m_; }
  const FieldRef& field() const { return m_[0][0].field(); }
  friend bool operator==(const ProjMap3& a, const ProjMap3& b) { return a.m_ == b.m_; }

  /// this o other (matrix product).
  ProjMap3 compose(const ProjMap3& other) const { return ProjMap3(matmul(m_, other.m_)); }
  ProjMap3 pow(int e) const;

 private:
  Matrix m_;
};

/// Canonical scaling of a square matrix: first nonzero entry becomes 1.
Matrix canonical_scaling(Matrix m);

/// F o A: each variable replaced by the corresponding row of A applied to (X, Y, Z).
Form3 substitute_linear(const Form3& f, const Matrix& a);
inline Form3 substitute_linear(const Form3& f, const ProjMap3& a) { return substitute_linear(f, a.matrix()); }

Form3 conjugate_coeffs(const GaloisAut& aut, const Form3& f);
Matrix conjugate_coeffs(const GaloisAut& aut, const Matrix& m);
ProjMap3 conjugate_coeffs(const GaloisAut& aut, const ProjMap3& m);

/// lambda != 0 with F = lambda G, read off the first common monomial.
std::optional<TowerElt> proportionality(const Form3& f, const Form3& g);

bool projective_equal(const ProjMap3& a, const ProjMap3& b);

nlohmann::json form_to_json(const Form3& f);
nlohmann::json matrix_to_json(const Matrix& m);

}  // namespace weilcert
