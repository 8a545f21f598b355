#pragma once

#include <string>
#include <vector>

#include "rieszrep/errors.hpp"
#include "rieszrep/types.hpp"

namespace rieszrep {

template <typename Scalar>
struct RowColSums {
  RealVector<Scalar> row;  ///< off-diagonal absolute row sums
  RealVector<Scalar> col;  ///< off-diagonal absolute column sums
  RealVector<Scalar> s;    ///< entrywise max of the two
};

template <typename Scalar>
struct SingularInterval {
  Scalar lo = Scalar(0);
  Scalar hi = Scalar(0);
};

/// Gershgorin-style singular value localization for a square complex matrix:
/// per-row sums, the intervals whose union contains every singular value,
/// and a computable lower bound on the smallest singular value. A positive
/// lower bound certifies the matrix nonsingular; negative values are
/// reported as-is since their size is informative for tuning.
template <typename Scalar>
struct GershgorinReport {
  RealVector<Scalar> row_sums;
  RealVector<Scalar> col_sums;
  RealVector<Scalar> s;
  std::vector<SingularInterval<Scalar>> intervals;
  Scalar sigma_min_lower = Scalar(0);
  bool certifies_nonsingular = false;
};

namespace detail {

template <typename Derived>
void check_square(const Eigen::MatrixBase<Derived>& a) {
  if (a.rows() != a.cols()) {
    throw NotSquare("matrix is " + std::to_string(a.rows()) + "x" +
                    std::to_string(a.cols()));
  }
  if (a.rows() == 0) {
    throw ValidationError("matrix is empty");
  }
}

}  // namespace detail

template <typename Derived>
RowColSums<typename Eigen::NumTraits<typename Derived::Scalar>::Real>
row_col_sums(const Eigen::MatrixBase<Derived>& a) {
  using Real = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
  detail::check_square(a);
  const RealMatrix<Real> abs = a.cwiseAbs();
  const RealVector<Real> diag = abs.diagonal();
  RowColSums<Real> sums;
  sums.row = abs.rowwise().sum() - diag;
  sums.col = abs.colwise().sum().transpose() - diag;
  sums.s = sums.row.cwiseMax(sums.col);
  return sums;
}

/// Intervals [max(|a_ii| - s_i, 0), |a_ii| + s_i]; every singular value of
/// the matrix lies in their union.
template <typename Derived>
std::vector<SingularInterval<typename Eigen::NumTraits<typename Derived::Scalar>::Real>>
singular_intervals(const Eigen::MatrixBase<Derived>& a) {
  using Real = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
  const auto sums = row_col_sums(a);
  std::vector<SingularInterval<Real>> intervals;
  intervals.reserve(static_cast<std::size_t>(a.rows()));
  for (Index i = 0; i < a.rows(); ++i) {
    const Real d = std::abs(a(i, i));
    intervals.push_back({std::max(d - sums.s[i], Real(0)), d + sums.s[i]});
  }
  return intervals;
}

/// min_k (|a_kk| - (R_k + C_k) / 2); a valid lower bound on the smallest
/// singular value, possibly negative.
template <typename Derived>
typename Eigen::NumTraits<typename Derived::Scalar>::Real
sigma_min_lower_bound(const Eigen::MatrixBase<Derived>& a) {
  using Real = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
  const auto sums = row_col_sums(a);
  return (a.diagonal().cwiseAbs() - (sums.row + sums.col) / Real(2)).minCoeff();
}

template <typename Derived>
GershgorinReport<typename Eigen::NumTraits<typename Derived::Scalar>::Real>
gershgorin_report(const Eigen::MatrixBase<Derived>& a) {
  using Real = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
  GershgorinReport<Real> report;
  auto sums = row_col_sums(a);
  report.row_sums = std::move(sums.row);
  report.col_sums = std::move(sums.col);
  report.s = std::move(sums.s);
  report.intervals = singular_intervals(a);
  report.sigma_min_lower = sigma_min_lower_bound(a);
  report.certifies_nonsingular = report.sigma_min_lower > Real(0);
  return report;
}

}  // namespace rieszrep
