#pragma once

#include <complex>
#include <vector>

#include "rieszrep/families.hpp"
#include "rieszrep/gram.hpp"
#include "rieszrep/problem.hpp"

namespace support {

using Cx = std::complex<double>;

inline rieszrep::ReplacementProblem<double> make_problem(
    rieszrep::Index ambient_dim, const std::vector<std::vector<Cx>>& rows) {
  rieszrep::ReplacementProblem<double> p;
  p.ambient_dim = ambient_dim;
  p.vectors.setZero(static_cast<rieszrep::Index>(rows.size()), ambient_dim);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      p.vectors(static_cast<rieszrep::Index>(r),
                static_cast<rieszrep::Index>(c)) = rows[r][c];
    }
  }
  return p;
}

/// Deterministic random full-rank instance within the desk-scale window
/// (n <= 6, m <= 12). Retries with shifted seeds on the rare draw whose
/// head projections are too close to dependent.
struct RandomInstance {
  rieszrep::ReplacementProblem<double> problem;
  rieszrep::Index n = 0;
};

inline RandomInstance random_instance(std::uint64_t s) {
  const rieszrep::Index m = 2 + static_cast<rieszrep::Index>((s * 7) % 11);
  const rieszrep::Index k_cap = std::min<rieszrep::Index>(m, 6);
  const rieszrep::Index k = 1 + static_cast<rieszrep::Index>(s % k_cap);
  const double epsilon = 0.15 + 0.08 * static_cast<double>(s % 5);
  for (std::uint64_t attempt = 0; attempt < 8; ++attempt) {
    auto p = rieszrep::gen_random_perturbation<double>(m, k, epsilon,
                                                       1000 + s + 10000 * attempt);
    if (rieszrep::riesz_basis_test(p, k).is_riesz_basis) {
      return {std::move(p), k};
    }
  }
  throw std::runtime_error("random instance generation kept degenerating");
}

}  // namespace support
