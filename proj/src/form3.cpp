#include "weilcert/forms.hpp"

#include "weilcert/element_io.hpp"
#include "weilcert/errors.hpp"

namespace weilcert {

Form3::Form3(FieldRef field, int degree) : field_(std::move(field)), degree_(degree) {
  if (degree < 0 || degree > kMaxFormDegree)
    throw DomainError("form degree must lie in [0, " + std::to_string(kMaxFormDegree) + "]");
}

Form3 Form3::from_binary(const Poly& p, int binary_degree, int y_power) {
  if (p.degree() > binary_degree) throw DomainError("binary form degree exceeds nominal degree");
  Form3 f(p.field(), binary_degree + y_power);
  for (int i = 0; i <= p.degree(); ++i) f.add_term({i, y_power, binary_degree - i}, p.coeff(i));
  return f;
}

Form3 Form3::monomial(const TowerElt& c, Monomial m) {
  Form3 f(c.field(), m[0] + m[1] + m[2]);
  f.add_term(m, c);
  return f;
}

TowerElt Form3::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? TowerElt(field_) : it->second;
}

void Form3::add_term(const Monomial& m, const TowerElt& c) {
  if (m[0] < 0 || m[1] < 0 || m[2] < 0 || m[0] + m[1] + m[2] != degree_)
    throw DomainError("monomial does not have the form's degree");
  if (!same_field(field_, c.field())) throw FieldMismatch("form coefficient over a different field");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Form3::check(const Form3& o) const {
  if (!same_field(field_, o.field_)) throw FieldMismatch("forms over different fields");
  if (degree_ != o.degree_) throw DomainError("forms of different degree");
}

Form3& Form3::operator+=(const Form3& o) {
  check(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Form3& Form3::operator-=(const Form3& o) {
  check(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Form3& Form3::operator*=(const TowerElt& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, x] : terms_) x *= c;
  return *this;
}

Form3 operator*(const Form3& a, const Form3& b) {
  if (!same_field(a.field_, b.field_)) throw FieldMismatch("forms over different fields");
  Form3 r(a.field_, a.degree_ + b.degree_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term({ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2]}, ca * cb);
  return r;
}

bool operator==(const Form3& a, const Form3& b) {
  return same_field(a.field_, b.field_) && a.degree_ == b.degree_ && a.terms_ == b.terms_;
}

Poly Form3::restrict_z0_dehomogenized_y() const {
  std::vector<TowerElt> c(static_cast<std::size_t>(degree_) + 1, TowerElt(field_));
  for (const auto& [m, x] : terms_)
    if (m[2] == 0) c[static_cast<std::size_t>(m[0])] += x;
  return Poly(field_, std::move(c));
}

std::string Form3::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  static const char* vars[] = {"X", "Y", "Z"};
  for (const auto& [m, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += "(" + c.to_string() + ")";
    for (int v = 0; v < 3; ++v)
      if (m[static_cast<std::size_t>(v)] > 0) s += std::string("*") + vars[v] + "^" + std::to_string(m[static_cast<std::size_t>(v)]);
  }
  return s;
}

// ---------------------------------------------------------------- ProjMap3

Matrix canonical_scaling(Matrix m) {
  for (const auto& row : m)
    for (const auto& x : row)
      if (!x.is_zero()) {
        TowerElt inv = x.inverse();
        for (auto& r : m)
          for (auto& y : r) y *= inv;
        return m;
      }
  throw DomainError("zero matrix has no canonical scaling");
}

ProjMap3::ProjMap3(Matrix m) {
  if (m.size() != 3 || m[0].size() != 3 || m[1].size() != 3 || m[2].size() != 3)
    throw DomainError("projective map of P^2 needs a 3x3 matrix");
  if (determinant(m).is_zero()) throw DomainError("singular matrix is not in PGL_3");
  m_ = canonical_scaling(std::move(m));
}

ProjMap3 ProjMap3::identity(const FieldRef& field) { return ProjMap3(identity_matrix(field, 3)); }

ProjMap3 ProjMap3::pow(int e) const {
  if (e < 0) throw DomainError("negative power of a projective map");
  Matrix r = identity_matrix(field(), 3);
  for (int i = 0; i < e; ++i) r = matmul(r, m_);
  return ProjMap3(std::move(r));
}

bool projective_equal(const ProjMap3& a, const ProjMap3& b) { return a == b; }

Form3 substitute_linear(const Form3& f, const Matrix& a) {
  if (a.size() != 3) throw DomainError("substitution needs a 3x3 matrix");
  const FieldRef& field = f.field();
  for (const auto& row : a)
    for (const auto& x : row)
      if (!same_field(field, x.field())) throw FieldMismatch("substitution matrix over a different field");
  // powers[v][e] = (row v . (X, Y, Z))^e
  std::array<std::vector<Form3>, 3> powers;
  for (std::size_t v = 0; v < 3; ++v) {
    Form3 lin(field, 1);
    lin.add_term({1, 0, 0}, a[v][0]);
    lin.add_term({0, 1, 0}, a[v][1]);
    lin.add_term({0, 0, 1}, a[v][2]);
    Form3 one(field, 0);
    one.add_term({0, 0, 0}, TowerElt::one(field));
    powers[v].push_back(one);
    for (int e = 1; e <= f.degree(); ++e) powers[v].push_back(powers[v].back() * lin);
  }
  Form3 out(field, f.degree());
  for (const auto& [m, c] : f.terms()) {
    Form3 term = powers[0][static_cast<std::size_t>(m[0])] * powers[1][static_cast<std::size_t>(m[1])] *
                 powers[2][static_cast<std::size_t>(m[2])];
    out += term * c;
  }
  return out;
}

Form3 conjugate_coeffs(const GaloisAut& aut, const Form3& f) {
  Form3 out(f.field(), f.degree());
  for (const auto& [m, c] : f.terms()) out.add_term(m, apply_galois(aut, c));
  return out;
}

Matrix conjugate_coeffs(const GaloisAut& aut, const Matrix& m) {
  Matrix out = m;
  for (auto& row : out)
    for (auto& x : row) x = apply_galois(aut, x);
  return out;
}

ProjMap3 conjugate_coeffs(const GaloisAut& aut, const ProjMap3& m) {
  return ProjMap3(conjugate_coeffs(aut, m.matrix()));
}

std::optional<TowerElt> proportionality(const Form3& f, const Form3& g) {
  if (!same_field(f.field(), g.field()) || f.degree() != g.degree()) return std::nullopt;
  if (f.is_zero() || g.is_zero()) return std::nullopt;
  const auto& [m0, g0] = *g.terms().begin();
  TowerElt lambda = f.coeff(m0) * g0.inverse();
  if (lambda.is_zero()) return std::nullopt;
  Form3 diff = f - g * lambda;
  if (!diff.is_zero()) return std::nullopt;
  return lambda;
}

nlohmann::json form_to_json(const Form3& f) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [m, c] : f.terms()) arr.push_back({m[0], m[1], m[2], element_to_json(c)});
  return arr;
}

nlohmann::json matrix_to_json(const Matrix& m) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& row : m) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& x : row) r.push_back(element_to_json(x));
    arr.push_back(r);
  }
  return arr;
}

}  // namespace weilcert
