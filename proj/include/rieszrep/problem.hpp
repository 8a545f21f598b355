#pragma once

#include <utility>

#include "rieszrep/errors.hpp"
#include "rieszrep/types.hpp"

namespace rieszrep {

/// A replacement problem: the first K vectors of an orthonormal reference
/// basis v_1, v_2, ... are to be swapped for unit vectors w_1..w_K, each of
/// which lies in span{v_1..v_M}. Rows of `vectors` are w_1..w_K top to
/// bottom; entry (j, k) holds the coefficient of w against v_{k+1}, i.e. the
/// inner product of the row's vector with that basis vector. Inner products
/// are linear in the first argument and conjugate-linear in the second.
///
/// Basis vectors v_k with k > M are unaffected by the replacement; keeping
/// every w_j inside span{v_1..v_M} is what makes all Gram matrices and frame
/// constants of the replaced system finitely computable.
template <typename Scalar = double>
struct ReplacementProblem {
  Index ambient_dim = 0;          ///< M
  ComplexMatrix<Scalar> vectors;  ///< K x M coefficient rows
  Scalar unit_tol = Scalar(1e-10);
  Scalar rank_tol = Scalar(1e-10);

  Index count() const { return vectors.rows(); }  ///< K
};

/// Checks all problem invariants and returns the problem unchanged.
/// Throws DimensionMismatch, TooManyReplacements, NonFiniteEntry or
/// NonUnitVector (1-based index, squared norm).
template <typename Scalar>
const ReplacementProblem<Scalar>& validate_problem(
    const ReplacementProblem<Scalar>& p) {
  if (p.ambient_dim < 1) {
    throw DimensionMismatch("ambient_dim must be a positive integer");
  }
  if (p.vectors.rows() < 1) {
    throw DimensionMismatch("at least one replacement vector is required");
  }
  if (p.vectors.cols() != p.ambient_dim) {
    throw DimensionMismatch(
        "replacement vectors have " + std::to_string(p.vectors.cols()) +
        " coefficients, expected ambient_dim = " +
        std::to_string(p.ambient_dim));
  }
  if (p.count() > p.ambient_dim) {
    throw TooManyReplacements("number of replacement vectors K = " +
                              std::to_string(p.count()) +
                              " exceeds ambient_dim M = " +
                              std::to_string(p.ambient_dim));
  }
  if (!p.vectors.allFinite()) {
    throw NonFiniteEntry("replacement coefficients contain NaN or Inf");
  }
  for (Index j = 0; j < p.count(); ++j) {
    const Scalar nsq = p.vectors.row(j).squaredNorm();
    using std::abs;
    if (abs(nsq - Scalar(1)) > p.unit_tol) {
      throw NonUnitVector(j + 1, static_cast<double>(nsq));
    }
  }
  return p;
}

/// <u, v> = sum_k u_k conj(v_k).
template <typename DerivedU, typename DerivedV>
typename DerivedU::Scalar inner(const Eigen::MatrixBase<DerivedU>& u,
                                const Eigen::MatrixBase<DerivedV>& v) {
  if (u.size() != v.size()) {
    throw DimensionMismatch("inner product of vectors with lengths " +
                            std::to_string(u.size()) + " and " +
                            std::to_string(v.size()));
  }
  return u.cwiseProduct(v.conjugate()).sum();
}

/// Coordinates of the projections of w onto span{v_1..v_n} and its
/// orthogonal complement: (w_1..w_n) and (w_{n+1}..w_M). The two pieces
/// satisfy |head|^2 + |tail|^2 = |w|^2.
template <typename Scalar>
std::pair<ComplexVector<Scalar>, ComplexVector<Scalar>> split_projections(
    const ComplexVector<Scalar>& w, Index n) {
  if (n < 1 || n > w.size()) {
    throw IndexOutOfRange("split at n = " + std::to_string(n) +
                          " outside 1.." + std::to_string(w.size()));
  }
  return {w.head(n), w.tail(w.size() - n)};
}

/// Squared distances |v_n - w_n|^2 between each replacement vector and the
/// basis vector it replaces, n = 1..K. Equals 2 - 2 Re(w_n[n]) for unit w_n.
template <typename Scalar>
RealVector<Scalar> tail_energies(const ReplacementProblem<Scalar>& p) {
  RealVector<Scalar> e(p.count());
  for (Index j = 0; j < p.count(); ++j) {
    e[j] = Scalar(1) + p.vectors.row(j).squaredNorm() -
           Scalar(2) * p.vectors(j, j).real();
  }
  return e;
}

}  // namespace rieszrep
