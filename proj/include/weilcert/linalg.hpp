#pragma once

// Small dense linear algebra over a tower (Gaussian elimination, exact).

#include <optional>
#include <vector>

#include "weilcert/field.hpp"

namespace weilcert {

using Matrix = std::vector<std::vector<TowerElt>>;

Matrix identity_matrix(const FieldRef& field, std::size_t n);
Matrix matmul(const Matrix& a, const Matrix& b);
TowerElt determinant(Matrix m);
/// Basis of { x : m x = 0 }.
std::vector<std::vector<TowerElt>> nullspace(Matrix m);
/// Unique solution of a x = b, absent when a is singular.
std::optional<std::vector<TowerElt>> solve_linear(Matrix a, std::vector<TowerElt> b);

}  // namespace weilcert
