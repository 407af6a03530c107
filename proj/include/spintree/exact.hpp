#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <vector>

namespace spintree::exact {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Exact conversion: every finite double is a dyadic rational.
inline Rat rat(double x) { return Rat(x); }

using RatMatrix = std::vector<std::vector<Rat>>;

// Rank over the rationals.  Rows are scaled to integers first and the
// elimination is fraction-free (Bareiss), so intermediate entries stay
// integral and never blow up into huge reduced fractions.
int rank(RatMatrix m);

// Canonical nullspace basis of m·x = 0 (x of length cols).  Computed from the
// reduced row-echelon form: one basis vector per free column, with the free
// coordinate set to 1 and pivot coordinates solved exactly.  Deterministic.
std::vector<std::vector<Rat>> nullspace(RatMatrix m, int cols);

// Determinant of a small square matrix (expansion/elimination, exact).
Rat determinant(RatMatrix m);

// True iff v lies in the row span of m (rank test).
bool in_span(const RatMatrix& m, const std::vector<Rat>& v);

}  // namespace spintree::exact
