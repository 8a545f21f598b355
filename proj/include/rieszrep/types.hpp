#pragma once

#include <Eigen/Dense>

#include <complex>

namespace rieszrep {

using Index = Eigen::Index;

template <typename Scalar>
using Complex = std::complex<Scalar>;

template <typename Scalar>
using ComplexVector = Eigen::Vector<std::complex<Scalar>, Eigen::Dynamic>;

template <typename Scalar>
using ComplexMatrix = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using RealVector = Eigen::Vector<Scalar, Eigen::Dynamic>;

template <typename Scalar>
using RealMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// Largest entrywise deviation of a square matrix from its own adjoint.
template <typename Derived>
typename Eigen::NumTraits<typename Derived::Scalar>::Real
hermitian_defect(const Eigen::MatrixBase<Derived>& a) {
  eigen_assert(a.rows() == a.cols());
  if (a.size() == 0) {
    return typename Eigen::NumTraits<typename Derived::Scalar>::Real(0);
  }
  return (a.derived() - a.derived().adjoint()).cwiseAbs().maxCoeff();
}

template <typename Derived>
bool is_hermitian(const Eigen::MatrixBase<Derived>& a,
                  typename Eigen::NumTraits<typename Derived::Scalar>::Real tol) {
  if (a.rows() != a.cols()) return false;
  if (a.size() == 0) return true;
  return hermitian_defect(a) <= tol;
}

}  // namespace rieszrep
