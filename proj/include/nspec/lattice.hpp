#pragma once

#include <cstdint>
#include <vector>

#include "nspec/fracpoly.hpp"
#include "nspec/polyparse.hpp"

// Exact integer linear algebra on small dense matrices.
namespace nspec::lattice {

using Vector = std::vector<Integer>;
using Matrix = std::vector<Vector>;  // row-major

Matrix to_matrix(const std::vector<Point>& rows);

/// Fraction-free (Bareiss) determinant of a square matrix.
Integer determinant(Matrix m);

int rank(Matrix m);

/// Nonzero invariant factors d_1 | d_2 | ... of the Smith normal form.
std::vector<Integer> smith_invariants(Matrix m);

/// Product of the invariant factors, i.e. the gcd of the maximal nonzero minors.
Integer determinantal_divisor(const Matrix& m);

/// For n rows of length n+1, the vector of signed maximal minors; it is
/// orthogonal to every row and nonzero iff the rows are independent.
Vector orthogonal_complement(const Matrix& rows);

Integer content(const Vector& v);  // gcd of entries (0 for the zero vector)
Integer dot(const Vector& a, const Vector& b);

std::int64_t gcd_of(const Point& p);

}  // namespace nspec::lattice
