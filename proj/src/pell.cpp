#include "weilcert/pell.hpp"

#include <functional>

#include "weilcert/errors.hpp"

namespace weilcert {

std::optional<PellSolution> solve_negative_pell(long d) {
  if (d <= 1 || !is_square_free_integer(d))
    throw DomainError("negative Pell needs square-free D > 1, got " + std::to_string(d));
  const mpz_class dd = d;
  const mpz_class a0 = sqrt(dd);
  // Partial quotients of sqrt D up to the end of the first period (a_r = 2 a_0).
  std::vector<mpz_class> quotients{a0};
  mpz_class m = 0, den = 1, a = a0;
  while (a != 2 * a0) {
    m = den * a - m;
    den = (dd - m * m) / den;
    a = (a0 + m) / den;
    quotients.push_back(a);
  }
  const std::size_t period = quotients.size() - 1;
  if (period % 2 == 0) return std::nullopt;
  mpz_class p_prev = 1, p = a0, q_prev = 0, q = 1;
  for (std::size_t i = 1; i < period; ++i) {
    mpz_class p_next = quotients[i] * p + p_prev;
    mpz_class q_next = quotients[i] * q + q_prev;
    p_prev = p;
    q_prev = q;
    p = p_next;
    q = q_next;
  }
  return PellSolution{p, q, d};
}

Quad fundamental_norm_minus_one_unit(long d) {
  auto sol = solve_negative_pell(d);
  if (!sol) throw PellUnsolvable(d);
  return Quad(Rat(sol->a, 1), Rat(sol->b, 1), d);
}

std::vector<Quad> norm_minus_one_units(long d, int k) {
  if (k < 0) throw DomainError("unit count must be non-negative");
  Quad eta0 = fundamental_norm_minus_one_unit(d);
  Quad sq = eta0 * eta0;
  std::vector<Quad> out;
  Quad cur = eta0;
  for (int j = 0; j < k; ++j) {
    out.push_back(cur);
    cur *= sq;
  }
  return out;
}

bool hyperelliptic_etas_admissible(const std::vector<Quad>& etas, long d, std::string* reason) {
  auto fail = [&](std::string why) {
    if (reason) *reason = std::move(why);
    return false;
  };
  const Quad s = Quad::sqrt_d(d);
  const Quad excluded[] = {s, -s, s.inverse(), -s.inverse()};
  for (std::size_t i = 0; i < etas.size(); ++i) {
    const Quad& e = etas[i];
    if (e.d() != d) return fail("eta " + e.to_string() + " over a different field");
    if (e.norm() != Rat(-1)) return fail("eta " + e.to_string() + " has norm " + e.norm().to_string());
    if (e.is_rational()) return fail("eta " + e.to_string() + " is rational");
    for (const Quad& x : excluded)
      if (e == x) return fail("eta " + e.to_string() + " is one of +-sqrt D, +-1/sqrt D");
  }
  for (std::size_t i = 0; i < etas.size(); ++i) {
    for (std::size_t j = 0; j < etas.size(); ++j) {
      Quad inv = etas[j].inverse();
      if (etas[i] == inv || etas[i] == -inv)
        return fail("eta_" + std::to_string(i + 1) + " = +-1/eta_" + std::to_string(j + 1));
      if (i < j && etas[i] == etas[j]) return fail("repeated eta " + etas[i].to_string());
    }
  }
  return true;
}

std::optional<long> unit_exponent(const Quad& eta, const Quad& eta0, long bound) {
  if (eta.d() != eta0.d()) return std::nullopt;
  Quad up = Quad::rational(1, eta.d());
  Quad down = up;
  const Quad inv0 = eta0.inverse();
  for (long e = 0; e <= bound; ++e) {
    if (eta == up || eta == -up) return e;
    if (e > 0 && (eta == down || eta == -down)) return -e;
    up *= eta0;
    down *= inv0;
  }
  return std::nullopt;
}

EtaSelection select_etas(long d, FamilyKind kind, int count) {
  if (count < 1) throw DomainError("eta count must be >= 1");
  Quad eta0 = fundamental_norm_minus_one_unit(d);
  EtaSelection sel;
  sel.kind = kind;
  if (kind == FamilyKind::hyperelliptic) {
    sel.etas = norm_minus_one_units(d, count);
    for (int j = 0; j < count; ++j) sel.exponents.push_back(2L * j + 1);
    std::string reason;
    if (!hyperelliptic_etas_admissible(sel.etas, d, &reason))
      throw PreconditionError("generated etas inadmissible: " + reason);
    return sel;
  }
  // Lexicographically smallest increasing tuple of odd exponents with sum = 0 mod m.
  const long m = count;
  const long max_exponent = 4 * m + 1;
  std::vector<long> tuple;
  std::function<bool(long, long)> search = [&](long next, long sum) {
    if (static_cast<long>(tuple.size()) == m) return sum % m == 0;
    for (long e = next; e <= max_exponent; e += 2) {
      tuple.push_back(e);
      if (search(e + 2, sum + e)) return true;
      tuple.pop_back();
    }
    return false;
  };
  if (!search(1, 0)) throw PreconditionError("no admissible exponent tuple");  // unreachable: 1+3+..+(2m-1) = m^2
  sel.exponents = tuple;
  for (long e : tuple) sel.etas.push_back(eta0.pow(e));
  return sel;
}

}  // namespace weilcert
