#include "ddcadv/matcalc.hpp"

#include <cmath>
#include <vector>

namespace ddcadv {

void ensure_finite(const Eigen::Ref<const Matrix>& M, const std::string& context) {
  if (!M.allFinite()) {
    throw std::invalid_argument(context + ": matrix contains NaN or Inf entries");
  }
}

SparseMatrix commutation(Eigen::Index p, Eigen::Index q) {
  if (p < 1 || q < 1) throw std::invalid_argument("commutation: p,q must be >= 1");
  SparseMatrix C(p * q, p * q);
  std::vector<Eigen::Triplet<double>> trips;
  trips.reserve(static_cast<size_t>(p * q));
  for (Eigen::Index j = 0; j < q; ++j) {
    for (Eigen::Index i = 0; i < p; ++i) {
      // vec(M) index of (i,j) is i + j*p; vec(M^T) index is j + i*q.
      trips.emplace_back(j + i * q, i + j * p, 1.0);
    }
  }
  C.setFromTriplets(trips.begin(), trips.end());
  return C;
}

Matrix commutation_dense(Eigen::Index p, Eigen::Index q) {
  return Matrix(commutation(p, q));
}

Matrix kron(const Eigen::Ref<const Matrix>& A, const Eigen::Ref<const Matrix>& B) {
  Matrix K(A.rows() * B.rows(), A.cols() * B.cols());
  for (Eigen::Index j = 0; j < A.cols(); ++j) {
    for (Eigen::Index i = 0; i < A.rows(); ++i) {
      K.block(i * B.rows(), j * B.cols(), B.rows(), B.cols()) = A(i, j) * B;
    }
  }
  return K;
}

namespace table5 {

Matrix d_transpose(Eigen::Index p, Eigen::Index q) { return commutation_dense(p, q); }

Matrix d_inverse(const Matrix& X) {
  Eigen::FullPivLU<Matrix> lu(X);
  if (!lu.isInvertible()) throw SingularMatrixError("table5::d_inverse: singular X");
  Matrix Xinv = lu.inverse();
  return -kron(Xinv.transpose(), Xinv);
}

Matrix d_axb(const Matrix& A, const Matrix& B) { return kron(B.transpose(), A); }

Matrix d_vec_transpose(Eigen::Index p, Eigen::Index q) {
  return Matrix::Identity(p * q, p * q);
}

Matrix d_tr_axb(const Matrix& A, const Matrix& B) {
  Matrix BA = B * A;
  return vec(Matrix(BA.transpose())).transpose();
}

Matrix d_tr_xtax(const Matrix& A, const Matrix& X) {
  Matrix G = (A + A.transpose()) * X;
  return vec(G).transpose();
}

Matrix d_kron_ax(const Matrix& A, Eigen::Index p, Eigen::Index q) {
  const Eigen::Index r = A.rows(), s = A.cols();
  Matrix left = kron(Matrix::Identity(s, s),
                     kron(commutation_dense(q, r), Matrix::Identity(p, p)));
  Matrix right = kron(Matrix(vec(A)), Matrix::Identity(p * q, p * q));
  return left * right;
}

Matrix d_kron_xa(const Matrix& A, Eigen::Index p, Eigen::Index q) {
  const Eigen::Index r = A.rows(), s = A.cols();
  Matrix left = kron(Matrix::Identity(q, q),
                     kron(commutation_dense(s, p), Matrix::Identity(r, r)));
  Matrix right = kron(Matrix::Identity(p * q, p * q), Matrix(vec(A)));
  return left * right;
}

}  // namespace table5

Matrix numeric_jacobian(const MatrixFn& f, const Matrix& X0, double h) {
  if (h <= 0) throw std::invalid_argument("numeric_jacobian: h must be positive");
  Matrix F0;
  try {
    F0 = f(X0);
  } catch (const std::exception& e) {
    throw std::runtime_error(std::string("numeric_jacobian: f failed at base point: ") + e.what());
  }
  const Eigen::Index nf = F0.size();
  const Eigen::Index nx = X0.size();
  Matrix J(nf, nx);
  Matrix Xp = X0, Xm = X0;
  for (Eigen::Index j = 0; j < X0.cols(); ++j) {
    for (Eigen::Index i = 0; i < X0.rows(); ++i) {
      const double step = h * std::max(1.0, std::abs(X0(i, j)));
      Xp(i, j) = X0(i, j) + step;
      Xm(i, j) = X0(i, j) - step;
      Matrix Fp, Fm;
      try {
        Fp = f(Xp);
        Fm = f(Xm);
      } catch (const std::exception& e) {
        throw std::runtime_error("numeric_jacobian: f failed at entry (" + std::to_string(i) +
                                 "," + std::to_string(j) + "): " + e.what());
      }
      J.col(i + j * X0.rows()) = (vec(Fp) - vec(Fm)) / (2.0 * step);
      Xp(i, j) = X0(i, j);
      Xm(i, j) = X0(i, j);
    }
  }
  return J;
}

}  // namespace ddcadv
