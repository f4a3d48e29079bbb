#pragma once

#include <optional>
#include <vector>

#include "charnum/rational.hpp"

namespace charnum {

using Matrix = std::vector<std::vector<Rational>>;
using Vector = std::vector<Rational>;

// Rank of an arbitrary rational matrix (Gaussian elimination, exact).
int matrix_rank(Matrix m);

// Determinant of a square rational matrix.
Rational matrix_det(Matrix m);

// Solves A x = b exactly.  A may be rectangular (rows x cols with
// rows >= cols expected for overdetermined systems).  Returns std::nullopt
// when the system is inconsistent or the solution is not unique.
std::optional<Vector> solve_linear(Matrix a, Vector b);

// Inverse of a square matrix; std::nullopt when singular.
std::optional<Matrix> matrix_inverse(Matrix m);

Vector matrix_apply(const Matrix& m, const Vector& x);

}  // namespace charnum
