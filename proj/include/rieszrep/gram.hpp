#pragma once

#include <Eigen/Eigenvalues>

#include <string>

#include "rieszrep/problem.hpp"

namespace rieszrep {

/// Outcome of the head-rank test. The replaced system is a Riesz basis
/// exactly when the projections of w_1..w_n onto span{v_1..v_n} are linearly
/// independent, i.e. when the head Gram matrix has full numerical rank.
/// lambda_min_head doubles as the lower frame constant of the projected
/// system, so callers can tell "barely independent" from robust instances.
template <typename Scalar>
struct RieszVerdict {
  bool is_riesz_basis = false;
  Scalar lambda_min_head = Scalar(0);
  Index rank_head = 0;
};

namespace detail {

template <typename Scalar>
void check_replacement_count(const ReplacementProblem<Scalar>& p, Index n) {
  if (n < 1 || n > p.count()) {
    throw IndexOutOfRange("n = " + std::to_string(n) +
                          " outside the analyzable range 1.." +
                          std::to_string(p.count()));
  }
}

/// Ascending eigenvalues of a Hermitian matrix, with convergence check.
template <typename Scalar>
RealVector<Scalar> selfadjoint_eigenvalues(const ComplexMatrix<Scalar>& h) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix<Scalar>> solver(
      h, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw NonConvergence("Hermitian eigensolver did not converge on order " +
                         std::to_string(h.rows()));
  }
  return solver.eigenvalues();
}

}  // namespace detail

/// Gram matrix of the head projections: entry (i, j) =
/// sum_{k=1..n} w_i[k] conj(w_j[k]). Hermitian positive semidefinite.
template <typename Scalar>
ComplexMatrix<Scalar> gram_head(const ReplacementProblem<Scalar>& p, Index n) {
  detail::check_replacement_count(p, n);
  const auto head = p.vectors.topLeftCorner(n, n);
  return head * head.adjoint();
}

/// Gram matrix of the tail projections (coordinates n+1..M).
template <typename Scalar>
ComplexMatrix<Scalar> gram_tail(const ReplacementProblem<Scalar>& p, Index n) {
  detail::check_replacement_count(p, n);
  const auto tail = p.vectors.topRows(n).rightCols(p.ambient_dim - n);
  return tail * tail.adjoint();
}

/// Full Gram matrix of w_1..w_n; equals gram_head + gram_tail.
template <typename Scalar>
ComplexMatrix<Scalar> gram_full(const ReplacementProblem<Scalar>& p, Index n) {
  detail::check_replacement_count(p, n);
  const auto rows = p.vectors.topRows(n);
  return rows * rows.adjoint();
}

/// The n x n mixing block with entry (j, k) = w_j[k], i.e. the coefficient
/// of w_j against v_k. Satisfies mixing * mixing^* = gram_head, so its
/// singular values squared are the head Gram eigenvalues.
template <typename Scalar>
ComplexMatrix<Scalar> mixing_matrix(const ReplacementProblem<Scalar>& p,
                                    Index n) {
  detail::check_replacement_count(p, n);
  return p.vectors.topLeftCorner(n, n);
}

/// Decides Riesz-basis status of the replaced system at truncation n. Frame,
/// Riesz sequence and Riesz basis are equivalent here, so the single head
/// test settles all three. Rank is decided against p.rank_tol.
template <typename Scalar>
RieszVerdict<Scalar> riesz_basis_test(const ReplacementProblem<Scalar>& p,
                                      Index n) {
  const RealVector<Scalar> evals =
      detail::selfadjoint_eigenvalues(gram_head(p, n));
  RieszVerdict<Scalar> verdict;
  verdict.lambda_min_head = evals[0];
  verdict.rank_head = (evals.array() > p.rank_tol).count();
  verdict.is_riesz_basis = verdict.lambda_min_head > p.rank_tol;
  return verdict;
}

}  // namespace rieszrep
