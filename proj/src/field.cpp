#include "weilcert/field.hpp"

#include <numeric>
#include <utility>

#include "weilcert/errors.hpp"

namespace weilcert {

namespace {

using QPoly = std::vector<Quad>;  // ascending, over Q(sqrt D)

void trim(QPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

// Polynomial long division over Q(sqrt D); divisor must be nonzero.
std::pair<QPoly, QPoly> divmod(QPoly a, const QPoly& b, long d) {
  trim(a);
  QPoly q;
  if (a.size() < b.size()) return {q, a};
  q.assign(a.size() - b.size() + 1, Quad::rational(0, d));
  Quad lead_inv = b.back().inverse();
  for (std::size_t k = a.size(); k-- >= b.size();) {
    Quad c = a[k] * lead_inv;
    if (c.is_zero()) continue;
    std::size_t shift = k - (b.size() - 1);
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
    if (k == b.size() - 1) break;
  }
  trim(a);
  trim(q);
  return {q, a};
}

QPoly mul(const QPoly& a, const QPoly& b, long d) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1, Quad::rational(0, d));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

QPoly sub(QPoly a, const QPoly& b, long d) {
  if (a.size() < b.size()) a.resize(b.size(), Quad::rational(0, d));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

}  // namespace

bool is_square_free_integer(long v) {
  if (v < 0) v = -v;
  if (v == 0) return false;
  for (long p = 2; p * p <= v; ++p) {
    if (v % (p * p) == 0) return false;
  }
  return true;
}

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<Rat> cyclotomic_polynomial(int n) {
  if (n < 1) throw DomainError("cyclotomic order must be >= 1");
  // y^n - 1 divided by Phi_k for every proper divisor k of n.
  std::vector<Rat> num(static_cast<std::size_t>(n) + 1, Rat(0));
  num[0] = Rat(-1);
  num[static_cast<std::size_t>(n)] = Rat(1);
  for (int k = 1; k < n; ++k) {
    if (n % k != 0) continue;
    std::vector<Rat> den = cyclotomic_polynomial(k);
    std::vector<Rat> quo(num.size() - den.size() + 1, Rat(0));
    for (std::size_t top = num.size(); top-- >= den.size();) {
      Rat c = num[top];  // den is monic
      std::size_t shift = top - (den.size() - 1);
      quo[shift] = c;
      for (std::size_t j = 0; j < den.size(); ++j) num[shift + j] -= c * den[j];
      if (top == den.size() - 1) break;
    }
    num = std::move(quo);
  }
  return num;
}

FieldRef FieldDesc::make(long d, int n) {
  if (d <= 1) throw DomainError("D must be > 1, got " + std::to_string(d));
  if (!is_square_free_integer(d)) throw DomainError("D must be square-free, got " + std::to_string(d));
  if (n < 1) throw DomainError("cyclotomic order must be >= 1");
  auto* f = new FieldDesc();
  f->d_ = d;
  f->n_ = n;
  f->cyclotomic_ = cyclotomic_polynomial(n);
  const auto phi = static_cast<std::size_t>(f->degree());
  // zeta^j by repeated multiplication with y and reduction.
  std::vector<Rat> cur(phi, Rat(0));
  cur[0] = Rat(1);
  for (int j = 0; j < n; ++j) {
    f->zeta_powers_.push_back(cur);
    std::vector<Rat> next(phi + 1, Rat(0));
    for (std::size_t i = 0; i < phi; ++i) next[i + 1] = cur[i];
    Rat top = next[phi];
    for (std::size_t i = 0; i < phi; ++i) next[i] -= top * f->cyclotomic_[i];
    next.pop_back();
    cur = std::move(next);
  }
  // Conductor of Q(sqrt D) divides n (or 2n for odd n) iff sqrt D is in Q(zeta_n).
  long conductor = (d % 4 == 1) ? d : 4 * d;
  long nn = (n % 2 == 1) ? 2L * n : n;
  f->is_field_ = (nn % conductor) != 0;
  return FieldRef(f);
}

bool same_field(const FieldRef& a, const FieldRef& b) {
  return a == b || (a && b && a->same_as(*b));
}

// ---------------------------------------------------------------- Quad

namespace {
void check_d(long x, long y) {
  if (x != y) throw FieldMismatch("quadratic elements over different D");
}
}  // namespace

Quad& Quad::operator+=(const Quad& o) {
  check_d(d_, o.d_);
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

Quad& Quad::operator-=(const Quad& o) {
  check_d(d_, o.d_);
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

Quad& Quad::operator*=(const Quad& o) {
  check_d(d_, o.d_);
  Rat a = a_ * o.a_ + Rat(d_) * b_ * o.b_;
  Rat b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

Quad Quad::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero in Q(sqrt D)");
  Rat n = norm();
  return Quad(a_ / n, -b_ / n, d_);
}

Quad Quad::pow(long e) const {
  Quad base = e < 0 ? inverse() : *this;
  unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  Quad result = Quad::rational(1, d_);
  while (k) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return result;
}

std::string Quad::to_string() const {
  if (b_.is_zero()) return a_.to_string();
  std::string s = a_.to_string();
  s += b_.sign() < 0 ? "-" : "+";
  s += b_.abs().to_string();
  s += "*s";
  return s;
}

// ---------------------------------------------------------------- TowerElt

TowerElt::TowerElt(FieldRef field) : field_(std::move(field)) {
  coeffs_.assign(static_cast<std::size_t>(field_->degree()), Quad::rational(0, field_->d()));
}

TowerElt::TowerElt(FieldRef field, std::vector<Quad> coeffs) : field_(std::move(field)) {
  const long d = field_->d();
  const auto phi = static_cast<std::size_t>(field_->degree());
  for (const Quad& c : coeffs) check_d(d, c.d());
  const auto& cyc = field_->cyclotomic();
  for (std::size_t k = coeffs.size(); k-- > phi;) {
    Quad top = coeffs[k];
    if (top.is_zero()) continue;
    std::size_t shift = k - phi;
    for (std::size_t j = 0; j < phi; ++j) coeffs[shift + j] -= top * Quad::rational(cyc[j], d);
  }
  coeffs.resize(phi, Quad::rational(0, d));
  coeffs_ = std::move(coeffs);
}

TowerElt::TowerElt(FieldRef field, const Quad& q) : TowerElt(std::move(field)) {
  check_d(field_->d(), q.d());
  coeffs_[0] = q;
}

TowerElt::TowerElt(FieldRef field, const Rat& r) : TowerElt(std::move(field)) {
  coeffs_[0] = Quad::rational(r, field_->d());
}

TowerElt TowerElt::zeta(const FieldRef& field) {
  std::vector<Quad> c(2, Quad::rational(0, field->d()));
  c[1] = Quad::rational(1, field->d());
  return TowerElt(field, std::move(c));
}

TowerElt TowerElt::sqrt_d(const FieldRef& field) { return TowerElt(field, Quad::sqrt_d(field->d())); }

bool TowerElt::is_zero() const {
  for (const Quad& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

bool TowerElt::is_one() const {
  if (!(coeffs_[0] == Quad::rational(1, field_->d()))) return false;
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (!coeffs_[i].is_zero()) return false;
  return true;
}

bool TowerElt::in_quadratic_subfield() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (!coeffs_[i].is_zero()) return false;
  return true;
}

Quad TowerElt::as_quad() const {
  if (!in_quadratic_subfield()) throw DomainError("tower element is not in Q(sqrt D)");
  return coeffs_[0];
}

void TowerElt::check_field(const TowerElt& o) const {
  if (!same_field(field_, o.field_)) throw FieldMismatch("tower elements over different fields");
}

TowerElt TowerElt::operator-() const {
  TowerElt r = *this;
  for (Quad& c : r.coeffs_) c = -c;
  return r;
}

TowerElt& TowerElt::operator+=(const TowerElt& o) {
  check_field(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

TowerElt& TowerElt::operator-=(const TowerElt& o) {
  check_field(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

TowerElt& TowerElt::operator*=(const TowerElt& o) {
  check_field(o);
  const long d = field_->d();
  const std::size_t phi = coeffs_.size();
  if (phi == 1) {
    coeffs_[0] *= o.coeffs_[0];
    return *this;
  }
  std::vector<Quad> prod(2 * phi - 1, Quad::rational(0, d));
  for (std::size_t i = 0; i < phi; ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < phi; ++j) prod[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  *this = TowerElt(field_, std::move(prod));
  return *this;
}

TowerElt TowerElt::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero tower element");
  if (in_quadratic_subfield()) return TowerElt(field_, coeffs_[0].inverse());
  const long d = field_->d();
  // Extended Euclid in Q(sqrt D)[y] against Phi_n: s*x + t*Phi = g.
  QPoly modulus;
  for (const Rat& c : field_->cyclotomic()) modulus.push_back(Quad::rational(c, d));
  QPoly r0 = modulus, r1 = coeffs_;
  trim(r1);
  QPoly s0, s1 = {Quad::rational(1, d)};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1, d);
    QPoly s = sub(s0, mul(q, s1, d), d);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.size() != 1) throw DivisionByZero("tower element is a zero divisor (Phi_n splits over Q(sqrt D))");
  Quad g_inv = r0[0].inverse();
  for (Quad& c : s0) c *= g_inv;
  return TowerElt(field_, std::move(s0));
}

TowerElt TowerElt::pow(long e) const {
  TowerElt base = e < 0 ? inverse() : *this;
  unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  TowerElt result = TowerElt::one(field_);
  while (k) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return result;
}

bool operator==(const TowerElt& x, const TowerElt& y) {
  return same_field(x.field_, y.field_) && x.coeffs_ == y.coeffs_;
}

std::strong_ordering operator<=>(const TowerElt& x, const TowerElt& y) {
  x.check_field(y);
  for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
    if (auto c = x.coeffs_[i] <=> y.coeffs_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::string TowerElt::to_string() const {
  if (in_quadratic_subfield()) return coeffs_[0].to_string();
  std::string s = "[";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) s += ", ";
    s += coeffs_[i].to_string();
  }
  return s + "]";
}

TowerElt tower_mul(const TowerElt& x, const TowerElt& y) { return x * y; }
TowerElt tower_inv(const TowerElt& x) { return x.inverse(); }

Quad apply_galois(const GaloisAut& aut, const Quad& x) { return aut.flip_sqrt ? x.conjugate() : x; }

TowerElt apply_galois(const GaloisAut& aut, const TowerElt& x) {
  const FieldRef& f = x.field();
  const int n = f->n();
  int k = ((aut.zeta_exp % n) + n) % n;
  if (std::gcd(k, n) != 1 && n > 1) throw DomainError("zeta exponent not coprime to n");
  const long d = f->d();
  const auto phi = static_cast<std::size_t>(f->degree());
  std::vector<Quad> out(phi, Quad::rational(0, d));
  for (std::size_t i = 0; i < phi; ++i) {
    Quad c = apply_galois(aut, x.coeffs()[i]);
    if (c.is_zero()) continue;
    const auto& zp = f->zeta_power(static_cast<int>((static_cast<long>(i) * k) % n));
    for (std::size_t j = 0; j < phi; ++j) {
      if (!zp[j].is_zero()) out[j] += c * Quad::rational(zp[j], d);
    }
  }
  return TowerElt(f, std::move(out));
}

std::vector<int> units_mod(int n) {
  std::vector<int> out;
  for (int k = 1; k <= std::max(1, n - 1); ++k)
    if (std::gcd(k, n) == 1) out.push_back(k);
  return out;
}

}  // namespace weilcert
