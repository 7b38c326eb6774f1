#pragma once

#include <cstddef>
#include <span>
#include <vector>

// Dense symmetric eigenvalue solvers. Both return the full spectrum in
// ascending order. Inputs are row-major n x n; only symmetric matrices are
// meaningful (callers validate symmetry).

namespace spectral_chroma::linalg {

/// Largest dimension accepted by the dense solvers.
inline constexpr std::size_t kMaxDenseDimension = 2000;

enum class EigenMethod {
    householder_ql,  ///< Householder tridiagonalization + implicit QL. O(n^3), default.
    jacobi,          ///< Cyclic Jacobi rotations. Slower; used as an independent route.
};

/// Throws DomainError when matrix.size() != n*n or n > kMaxDenseDimension,
/// Error when QL/Jacobi fail to converge.
std::vector<double> symmetric_eigenvalues(std::span<const double> matrix, std::size_t n,
                                          EigenMethod method = EigenMethod::householder_ql);

/// Reduces a to tridiagonal form in place; diag/offdiag receive the result
/// (offdiag[i] couples i and i+1, offdiag.size() == n - 1).
void householder_tridiagonalize(std::span<double> a, std::size_t n, std::vector<double>& diag,
                                std::vector<double>& offdiag);

/// Eigenvalues of the symmetric tridiagonal matrix (diag, offdiag), ascending.
std::vector<double> tridiagonal_eigenvalues(std::vector<double> diag, std::vector<double> offdiag);

}  // namespace spectral_chroma::linalg
