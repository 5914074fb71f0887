#pragma once

#include <utility>

#include "gomplab/errors.hpp"
#include "gomplab/types.hpp"

namespace gomplab {

/// Relative pivot threshold below which a factorization is treated as
/// rank deficient.
inline constexpr double kRankTolerance = 1e-10;

/// Column gather: the submatrix of `phi` with columns indexed by `s`.
Matrix columns(const Matrix& phi, const IndexSet& s);

/// Minimizer of ||y - A z||_2 via column-pivoted Householder QR.
/// Throws RankDeficientError when a pivot falls below kRankTolerance
/// relative to the largest pivot.
Vector least_squares(const Matrix& a, const Vector& y);

/// Residual of y after orthogonal projection onto span of the columns
/// of phi indexed by s: r = y - Phi_S lsq(Phi_S, y).
Vector project_residual(const Matrix& phi, const IndexSet& s, const Vector& y);

/// Entrywise |phi^T r| over all columns.
Vector correlations(const Matrix& phi, const Vector& r);

/// Smallest and largest eigenvalue of the Gram matrix of the columns
/// indexed by i. Both are clamped at zero; the Gram matrix is positive
/// semidefinite and tiny negative eigenvalues are roundoff.
std::pair<double, double> gram_extreme_eigs(const Matrix& phi, const IndexSet& i);

/// Projects every column of phi onto the orthogonal complement of
/// span(Phi_{I1}). Columns indexed by i1 come out (numerically) zero.
/// An empty i1 returns phi unchanged.
Matrix orthogonalize_against(const Matrix& phi, const IndexSet& i1);

} // namespace gomplab
