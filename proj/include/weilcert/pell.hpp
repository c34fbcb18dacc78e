#pragma once

// Negative Pell equation a^2 - D b^2 = -1 and the norm -1 units built from it.

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "weilcert/field.hpp"

namespace weilcert {

struct PellSolution {
  mpz_class a;
  mpz_class b;
  long d = 0;
};

/// Fundamental solution, present iff the continued fraction of sqrt D has odd period.
/// Throws DomainError unless D > 1 is square-free.
std::optional<PellSolution> solve_negative_pell(long d);

/// a + b sqrt D from the fundamental solution; throws PellUnsolvable.
Quad fundamental_norm_minus_one_unit(long d);

/// First k odd powers eta0^(2j+1) of the fundamental unit.
std::vector<Quad> norm_minus_one_units(long d, int k);

enum class FamilyKind { hyperelliptic, plane };

struct EtaSelection {
  std::vector<Quad> etas;
  FamilyKind kind = FamilyKind::hyperelliptic;
  std::vector<long> exponents;
};

/// Hyperelliptic: count = g - 1 units. Plane: count = m units eta0^e_i with
/// e_i odd, distinct and sum(e_i) = 0 mod m, lexicographically smallest tuple.
EtaSelection select_etas(long d, FamilyKind kind, int count);

/// Every eta has norm -1, lies outside Q and {+-sqrt D, +-1/sqrt D}, and
/// eta_i != +-1/eta_j for all i, j. On failure `reason` names the violation.
bool hyperelliptic_etas_admissible(const std::vector<Quad>& etas, long d, std::string* reason = nullptr);

/// Exponent e with eta = +-eta0^e, |e| <= bound; absent if eta is not such a power.
std::optional<long> unit_exponent(const Quad& eta, const Quad& eta0, long bound = 256);

}  // namespace weilcert
