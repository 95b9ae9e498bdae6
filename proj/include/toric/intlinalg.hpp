#ifndef TORIC_INTLINALG_HPP
#define TORIC_INTLINALG_HPP

#include <optional>
#include <vector>

#include "toric/rational.hpp"

namespace toric {

/// Determinant of a square integer matrix (fraction-free Bareiss).
Int det_integer(const IMat& a);

/// True iff the given n vectors form a basis of the rank-n lattice (|det| = 1).
bool unimodular_test(const std::vector<IVec>& generators);

/// Rank over Q of a rational matrix.
int rank_of(QMat a);

/// Rank over Q of a small integer matrix via fraction-free elimination.
/// Intended for incidence-type matrices (cohomology coboundaries) whose
/// intermediate minors stay far below the int64 range.
int rank_int(std::vector<std::vector<Int>> a);

/// Basis of { x : A x = 0 } over Q; rows of the result are kernel vectors.
QMat nullspace(const QMat& a);

/// Exact solution of A x = b. Free variables are set to zero; returns
/// nullopt when the system is inconsistent.
std::optional<QVec> solve(const QMat& a, const QVec& b);

/// Saturated basis of the integer kernel { x in Z^n : A x = 0 }, computed
/// via a column Hermite reduction with unimodular transform. Rows of the
/// result generate the kernel lattice primitively.
IMat integer_kernel(const IMat& a);

/// Integer solution of A x = d with rational right-hand side, if one exists.
std::optional<IVec> solve_integer(const IMat& a, const QVec& d);

/// Gcd of all maximal minors of a d x n integer matrix (d <= n). The rows
/// extend to a lattice basis iff this is 1.
Int maximal_minor_gcd(const IMat& a);

}  // namespace toric

#endif
