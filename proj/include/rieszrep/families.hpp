#pragma once

#include <string>

#include "rieszrep/problem.hpp"
#include "rieszrep/rng.hpp"

namespace rieszrep {

/// w_j = v_j for j = 1..count: the replacement that changes nothing.
template <typename Scalar>
ReplacementProblem<Scalar> gen_identity(Index ambient_dim, Index count) {
  if (ambient_dim < 1 || count < 1 || count > ambient_dim) {
    throw ValidationError("need 1 <= count <= ambient_dim");
  }
  ReplacementProblem<Scalar> p;
  p.ambient_dim = ambient_dim;
  p.vectors = ComplexMatrix<Scalar>::Identity(count, ambient_dim);
  return p;
}

inline Index triangular_number(int n) {
  return static_cast<Index>(n) * (n + 1) / 2;
}

/// Block construction with non-monotone lower constants. Coordinates are
/// grouped into consecutive blocks of sizes 1, 2, ..., n_blocks. Within
/// block n the first replacement vector is flat, value 1/sqrt(n) on each of
/// the block's n coordinates; the remaining n-1 vectors complete it to an
/// orthonormal basis of the block span, obtained by orthogonalizing the
/// block's standard coordinate vectors against it in index order. Every
/// vector has an empty tail beyond its block, and the full generated set is
/// orthonormal.
template <typename Scalar>
ReplacementProblem<Scalar> gen_block_example(int n_blocks) {
  if (n_blocks < 1) throw ValidationError("need n_blocks >= 1");
  const Index m = triangular_number(n_blocks);
  ReplacementProblem<Scalar> p;
  p.ambient_dim = m;
  p.vectors = ComplexMatrix<Scalar>::Zero(m, m);

  Index row = 0;
  for (int n = 1; n <= n_blocks; ++n) {
    const Index offset = triangular_number(n - 1);
    const Index start_row = row;
    p.vectors.row(row).segment(offset, n).setConstant(
        Complex<Scalar>(Scalar(1) / std::sqrt(Scalar(n)), Scalar(0)));
    ++row;
    for (Index k = 0; k < n && row < start_row + n; ++k) {
      ComplexVector<Scalar> cand = ComplexVector<Scalar>::Zero(m);
      cand[offset + k] = Complex<Scalar>(Scalar(1), Scalar(0));
      for (Index r = start_row; r < row; ++r) {  // modified Gram-Schmidt
        cand -= p.vectors.row(r).dot(cand) * p.vectors.row(r).transpose();
      }
      const Scalar norm = cand.norm();
      if (norm > Scalar(1e-8)) {
        p.vectors.row(row) = (cand / norm).transpose();
        ++row;
      }
    }
  }
  return p;
}

/// Planar rotations: with L angles, the ambient dimension is 2L and
/// w_j = cos(theta_j) v_j + sin(theta_j) v_{L+j}. The distance to the
/// replaced basis vector is |v_j - w_j|^2 = 2 - 2 cos(theta_j).
template <typename Scalar>
ReplacementProblem<Scalar> gen_rotation(const RealVector<Scalar>& thetas) {
  const Index l = thetas.size();
  if (l < 1) throw ValidationError("need at least one rotation angle");
  ReplacementProblem<Scalar> p;
  p.ambient_dim = 2 * l;
  p.vectors = ComplexMatrix<Scalar>::Zero(l, 2 * l);
  for (Index j = 0; j < l; ++j) {
    p.vectors(j, j) = Complex<Scalar>(std::cos(thetas[j]), Scalar(0));
    p.vectors(j, l + j) = Complex<Scalar>(std::sin(thetas[j]), Scalar(0));
  }
  return p;
}

/// w_j = normalize(v_j + epsilon g_j) with g_j a seeded complex Gaussian
/// vector. Deterministic per seed: equal seeds give bit-equal coefficients.
template <typename Scalar>
ReplacementProblem<Scalar> gen_random_perturbation(Index ambient_dim,
                                                   Index count, Scalar epsilon,
                                                   std::uint64_t seed) {
  if (ambient_dim < 1 || count < 1 || count > ambient_dim) {
    throw ValidationError("need 1 <= count <= ambient_dim");
  }
  if (!(epsilon >= Scalar(0)) || !(epsilon < Scalar(1))) {
    throw ValidationError("need 0 <= epsilon < 1");
  }
  ReplacementProblem<Scalar> p;
  p.ambient_dim = ambient_dim;
  p.vectors = ComplexMatrix<Scalar>::Zero(count, ambient_dim);
  Rng rng(seed);
  for (Index j = 0; j < count; ++j) {
    for (Index k = 0; k < ambient_dim; ++k) {
      p.vectors(j, k) = epsilon * Complex<Scalar>(rng.complex_gaussian());
    }
    p.vectors(j, j) += Complex<Scalar>(Scalar(1), Scalar(0));
    p.vectors.row(j) /= p.vectors.row(j).norm();
  }
  return p;
}

}  // namespace rieszrep
