#pragma once

// Matrix-calculus primitives in the d vec(F) / d vec(X) convention
// (column-major vectorization throughout the library).

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include <functional>
#include <stdexcept>
#include <string>

namespace ddcadv {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using RowVector = Eigen::RowVectorXd;
using SparseMatrix = Eigen::SparseMatrix<double>;

struct SingularMatrixError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Throws if M contains NaN or Inf entries.
void ensure_finite(const Eigen::Ref<const Matrix>& M, const std::string& context);

/// Column-major stacking of M into a vector of length rows*cols.
inline Vector vec(const Eigen::Ref<const Matrix>& M) {
  return Eigen::Map<const Vector>(M.data(), M.size());
}

/// Inverse of vec: reshape v (column-major) into a rows x cols matrix.
inline Matrix unvec(const Eigen::Ref<const Vector>& v, Eigen::Index rows, Eigen::Index cols) {
  if (v.size() != rows * cols) throw std::invalid_argument("unvec: size mismatch");
  return Eigen::Map<const Matrix>(v.data(), rows, cols);
}

/// Commutation matrix C_{p,q} with C_{p,q} vec(M) = vec(M^T) for M of size p x q.
/// Kept sparse (it is a permutation); see commutation_dense for a dense copy.
SparseMatrix commutation(Eigen::Index p, Eigen::Index q);
Matrix commutation_dense(Eigen::Index p, Eigen::Index q);

/// Kronecker product, (pr) x (qs) for p x q and r x s inputs.
Matrix kron(const Eigen::Ref<const Matrix>& A, const Eigen::Ref<const Matrix>& B);

// Derivative formulae for F(X) in R^{n x m}, X in R^{p x q}.
// Each returns the Jacobian d vec(F) / d vec(X).
namespace table5 {

/// d(X^T)/dX = C_{p,q}
Matrix d_transpose(Eigen::Index p, Eigen::Index q);

/// d(X^{-1})/dX = -X^{-T} kron X^{-1}; throws SingularMatrixError.
Matrix d_inverse(const Matrix& X);

/// d(AXB)/dX = B^T kron A
Matrix d_axb(const Matrix& A, const Matrix& B);

/// d(vec(X)^T)/dX = I_{pq}
Matrix d_vec_transpose(Eigen::Index p, Eigen::Index q);

/// d(tr(AXB))/dX = vec(BA)^T  (as a 1 x pq Jacobian)
Matrix d_tr_axb(const Matrix& A, const Matrix& B);

/// d(tr(X^T A X))/dX = vec((A + A^T)X)^T
Matrix d_tr_xtax(const Matrix& A, const Matrix& X);

/// d(A kron X)/dX = (I_s kron C_{q,r} kron I_p)(vec(A) kron I_{pq}), A in R^{r x s}
Matrix d_kron_ax(const Matrix& A, Eigen::Index p, Eigen::Index q);

/// d(X kron A)/dX = (I_q kron C_{s,p} kron I_r)(I_{pq} kron vec(A)), A in R^{r x s}
Matrix d_kron_xa(const Matrix& A, Eigen::Index p, Eigen::Index q);

}  // namespace table5

using MatrixFn = std::function<Matrix(const Matrix&)>;

/// Central-difference Jacobian of f at X0 in the vec convention.
/// Per-entry step: h * max(1, |X0(i,j)|). Evaluation failures are rethrown
/// with the offending entry index.
Matrix numeric_jacobian(const MatrixFn& f, const Matrix& X0, double h = 1e-5);

}  // namespace ddcadv
