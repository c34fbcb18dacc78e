#include "weilcert/poly.hpp"

#include "weilcert/errors.hpp"
#include "weilcert/linalg.hpp"

namespace weilcert {

Poly::Poly(FieldRef field, std::vector<TowerElt> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_)
    if (!same_field(field_, c.field())) throw FieldMismatch("polynomial coefficient over a different field");
  trim();
}

Poly Poly::constant(const TowerElt& c) { return Poly(c.field(), {c}); }

Poly Poly::x(const FieldRef& field) { return Poly(field, {TowerElt(field), TowerElt::one(field)}); }

Poly Poly::linear_factor(const TowerElt& root) { return Poly(root.field(), {-root, TowerElt::one(root.field())}); }

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

void Poly::check_field(const Poly& o) const {
  if (!same_field(field_, o.field_)) throw FieldMismatch("polynomials over different fields");
}

const TowerElt& Poly::lead() const {
  if (coeffs_.empty()) throw DomainError("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

TowerElt Poly::coeff(int k) const {
  if (k < 0 || k > degree()) return TowerElt(field_);
  return coeffs_[static_cast<std::size_t>(k)];
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  check_field(o);
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), TowerElt(field_));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  check_field(o);
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), TowerElt(field_));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  check_field(o);
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<TowerElt> r(coeffs_.size() + o.coeffs_.size() - 1, TowerElt(field_));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(r);
  trim();
  return *this;
}

Poly& Poly::operator*=(const TowerElt& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

bool operator==(const Poly& a, const Poly& b) { return same_field(a.field_, b.field_) && a.coeffs_ == b.coeffs_; }

Poly Poly::derivative() const {
  std::vector<TowerElt> r;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) r.push_back(coeffs_[i] * TowerElt(field_, Rat(static_cast<long>(i))));
  return Poly(field_, std::move(r));
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return *this * lead().inverse();
}

TowerElt Poly::eval(const TowerElt& x) const {
  TowerElt acc(field_);
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
  return acc;
}

Poly Poly::pow(int e) const {
  if (e < 0) throw DomainError("negative polynomial power");
  Poly r = constant(TowerElt::one(field_));
  for (int i = 0; i < e; ++i) r *= *this;
  return r;
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    if (coeffs_[i].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += "(" + coeffs_[i].to_string() + ")";
    if (i > 0) s += "*x^" + std::to_string(i);
  }
  return s;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (!same_field(a.field(), b.field())) throw FieldMismatch("polynomials over different fields");
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  const FieldRef& f = a.field();
  if (a.degree() < b.degree()) return {Poly(f), a};
  std::vector<TowerElt> rem = a.coeffs();
  std::vector<TowerElt> quo(static_cast<std::size_t>(a.degree() - b.degree() + 1), TowerElt(f));
  const TowerElt lead_inv = b.lead().inverse();
  const auto bs = b.coeffs().size();
  for (std::size_t k = rem.size(); k-- >= bs;) {
    if (!rem[k].is_zero()) {
      TowerElt c = rem[k] * lead_inv;
      std::size_t shift = k - (bs - 1);
      quo[shift] = c;
      for (std::size_t j = 0; j < bs; ++j) rem[shift + j] -= c * b.coeffs()[j];
    }
    if (k == bs - 1) break;
  }
  return {Poly(f, std::move(quo)), Poly(f, std::move(rem))};
}

Poly poly_gcd(const Poly& p, const Poly& q) {
  if (!same_field(p.field(), q.field())) throw FieldMismatch("polynomials over different fields");
  Poly a = p, b = q;
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

bool is_square_free(const Poly& p) {
  if (p.is_zero()) throw DomainError("square-freeness of the zero polynomial");
  return poly_gcd(p, p.derivative()).degree() == 0;
}

bool is_square_free_binary_form(const Poly& dehomogenized, int degree) {
  if (dehomogenized.is_zero()) return false;
  if (dehomogenized.degree() < degree - 1) return false;
  return is_square_free(dehomogenized);
}

TowerElt resultant(const Poly& p, const Poly& q) {
  if (p.is_zero() || q.is_zero()) throw DomainError("resultant with a zero polynomial");
  if (!same_field(p.field(), q.field())) throw FieldMismatch("polynomials over different fields");
  const FieldRef& f = p.field();
  const auto m = static_cast<std::size_t>(p.degree());
  const auto n = static_cast<std::size_t>(q.degree());
  const std::size_t size = m + n;
  if (size == 0) return TowerElt::one(f);
  Matrix s(size, std::vector<TowerElt>(size, TowerElt(f)));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t i = 0; i <= m; ++i) s[r][r + i] = p.coeffs()[m - i];
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t i = 0; i <= n; ++i) s[n + r][r + i] = q.coeffs()[n - i];
  return determinant(std::move(s));
}

TowerElt discriminant(const Poly& p) {
  const long n = p.degree();
  if (n < 1) throw DomainError("discriminant needs degree >= 1");
  TowerElt r = resultant(p, p.derivative()) * p.lead().inverse();
  return ((n * (n - 1) / 2) % 2 == 1) ? -r : r;
}

Poly conjugate_coeffs(const GaloisAut& aut, const Poly& p) {
  std::vector<TowerElt> c;
  for (const auto& x : p.coeffs()) c.push_back(apply_galois(aut, x));
  return Poly(p.field(), std::move(c));
}

}  // namespace weilcert
