#pragma once

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>
#include <vector>

#include "rieszrep/gram.hpp"
#include "rieszrep/rng.hpp"

namespace rieszrep {

enum class ConstantsMethod { eigen_oracle, tilde_singular, variational, closed_form_n1 };

inline const char* to_string(ConstantsMethod m) {
  switch (m) {
    case ConstantsMethod::eigen_oracle: return "eigen_oracle";
    case ConstantsMethod::tilde_singular: return "tilde_singular";
    case ConstantsMethod::variational: return "variational";
    case ConstantsMethod::closed_form_n1: return "closed_form_n1";
  }
  return "unknown";
}

/// Optimal lower/upper frame constants of a replaced system, together with
/// the route that produced them. `degenerate` is set when the system fails
/// the head-rank test, in which case `lower` is reported as 0.
template <typename Scalar>
struct FrameConstants {
  Scalar lower = Scalar(0);
  Scalar upper = Scalar(0);
  ConstantsMethod method = ConstantsMethod::eigen_oracle;
  bool degenerate = false;
};

/// Settings for the multistart projected-gradient search. A restart counts
/// as converged once its projected step drops below step_tol (or it reaches
/// a point no trial step can improve); value_tol is the accuracy the
/// returned constants are expected to meet against the eigenvalue route.
template <typename Scalar>
struct VariationalOptions {
  int restarts = 64;
  int max_iters = 2000;
  Scalar step_tol = Scalar(1e-10);
  Scalar value_tol = Scalar(1e-9);
  std::uint64_t seed = 0;
};

/// Extreme eigenvalues (min, max) of a Hermitian matrix. The input must be
/// Hermitian within 1e-12 * max(1, |H|_max); it is symmetrized before the
/// solve, which leaves exactly-Hermitian inputs untouched.
template <typename Scalar>
std::pair<Scalar, Scalar> hermitian_eigen_range(const ComplexMatrix<Scalar>& h) {
  if (h.rows() != h.cols()) {
    throw NotHermitian("matrix is " + std::to_string(h.rows()) + "x" +
                       std::to_string(h.cols()) + ", not square");
  }
  if (h.size() == 0) {
    throw ValidationError("empty matrix has no eigenvalue range");
  }
  const Scalar scale = h.cwiseAbs().maxCoeff();
  if (hermitian_defect(h) > Scalar(1e-12) * std::max(Scalar(1), scale)) {
    throw NotHermitian("matrix deviates from its adjoint beyond tolerance");
  }
  const ComplexMatrix<Scalar> sym = (h + h.adjoint()) / Scalar(2);
  const RealVector<Scalar> evals = detail::selfadjoint_eigenvalues(sym);
  return {evals[0], evals[evals.size() - 1]};
}

/// Gram matrix of the truncated replaced system {w_1..w_n, v_{n+1}..v_M}.
/// Basis vectors beyond M are untouched by the replacement and contribute
/// Gram eigenvalue exactly 1, so this M x M block carries all remaining
/// spectral information.
template <typename Scalar>
ComplexMatrix<Scalar> replaced_system_gram(const ReplacementProblem<Scalar>& p,
                                           Index n) {
  detail::check_replacement_count(p, n);
  const Index m = p.ambient_dim;
  const auto w = p.vectors.topRows(n);
  ComplexMatrix<Scalar> g(m, m);
  g.topLeftCorner(n, n) = w * w.adjoint();
  g.topRightCorner(n, m - n) = w.rightCols(m - n);
  g.bottomLeftCorner(m - n, n) = w.rightCols(m - n).adjoint();
  g.bottomRightCorner(m - n, m - n) =
      ComplexMatrix<Scalar>::Identity(m - n, m - n);
  return g;
}

/// Frame constants of the projected system {head(w_1)..head(w_n),
/// v_{n+1}, ...}: lower = smallest head-Gram eigenvalue, upper = largest
/// clamped against 1. These equal the squared extreme singular values of
/// the mixing matrix (with the same clamp).
template <typename Scalar>
FrameConstants<Scalar> tilde_constants(const ReplacementProblem<Scalar>& p,
                                       Index n) {
  const auto [lo, hi] = hermitian_eigen_range(gram_head(p, n));
  FrameConstants<Scalar> fc;
  fc.method = ConstantsMethod::tilde_singular;
  fc.degenerate = lo <= p.rank_tol;
  fc.lower = fc.degenerate ? Scalar(0) : lo;
  fc.upper = std::max(hi, Scalar(1));
  return fc;
}

/// Optimal frame constants of the replaced system at truncation n, from the
/// eigenvalue range of the truncated Gram matrix. The clamp against 1 on
/// both sides accounts for the orthonormal tail beyond the ambient window.
template <typename Scalar>
FrameConstants<Scalar> exact_constants(const ReplacementProblem<Scalar>& p,
                                       Index n) {
  const auto [lo, hi] = hermitian_eigen_range(replaced_system_gram(p, n));
  FrameConstants<Scalar> fc;
  fc.method = ConstantsMethod::eigen_oracle;
  fc.degenerate = lo <= p.rank_tol;
  fc.lower = std::max(std::min(lo, Scalar(1)), Scalar(0));
  fc.upper = std::max(hi, Scalar(1));
  return fc;
}

/// Closed form for a single replaced vector: with t = |tail of w_1|,
/// the optimal constants are (1 - t, 1 + t). Note the first power of t.
template <typename Scalar>
FrameConstants<Scalar> closed_form_n1(const ReplacementProblem<Scalar>& p) {
  detail::check_replacement_count(p, 1);
  const Scalar t = p.vectors.row(0).tail(p.ambient_dim - 1).norm();
  FrameConstants<Scalar> fc;
  fc.method = ConstantsMethod::closed_form_n1;
  fc.lower = std::max(Scalar(1) - t, Scalar(0));
  fc.upper = Scalar(1) + t;
  fc.degenerate = fc.lower <= p.rank_tol;
  return fc;
}

namespace detail {

/// Restart directions for the multistart search: every eigenvector of the
/// head Gram, of the full Gram, and of a tail-weighted blend, then seeded
/// random directions up to the requested restart count. Each direction is a
/// unit vector; the per-side starting radius is chosen by ray_seed below.
template <typename Scalar>
std::vector<ComplexVector<Scalar>> variational_directions(
    const ComplexMatrix<Scalar>& head, const ComplexMatrix<Scalar>& tail,
    const VariationalOptions<Scalar>& opts) {
  const Index n = head.rows();
  std::vector<ComplexVector<Scalar>> directions;
  directions.reserve(static_cast<std::size_t>(opts.restarts));
  for (const Scalar blend : {Scalar(0), Scalar(1), Scalar(4)}) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix<Scalar>> solver(head +
                                                                blend * tail);
    if (solver.info() != Eigen::Success) continue;
    for (Index k = 0; k < n; ++k) {
      if (directions.size() >= static_cast<std::size_t>(opts.restarts)) break;
      directions.push_back(solver.eigenvectors().col(k));
    }
  }
  Rng rng(opts.seed);
  while (directions.size() < static_cast<std::size_t>(opts.restarts)) {
    ComplexVector<Scalar> c(n);
    for (Index i = 0; i < n; ++i) {
      c[i] = Complex<Scalar>(rng.complex_gaussian());
    }
    const Scalar norm = c.norm();
    if (!(norm > Scalar(0))) continue;
    directions.push_back(c / norm);
  }
  return directions;
}

/// Along the ray {rho * dir : rho in [0, 1]} the objective is
///   rho^2 gamma + (1 - rho^2) + 2 sign rho sqrt((1 - rho^2) beta)
/// with gamma = <U dir, dir> and beta = <U'' dir, dir>; substituting
/// rho = sin(psi) turns it into a single sinusoid in 2 psi, so the exact
/// ray optimum sits at rho = sin(atan2(sqrt(beta), -sign (gamma-1)/2) / 2).
/// Starting every restart there removes the radial part of the search.
template <typename Scalar>
ComplexVector<Scalar> ray_seed(const ComplexMatrix<Scalar>& head,
                               const ComplexMatrix<Scalar>& tail,
                               const ComplexVector<Scalar>& direction,
                               int sign) {
  const Scalar gamma =
      direction.dot(head * direction).real() +
      direction.dot(tail * direction).real();
  const Scalar beta = std::max(direction.dot(tail * direction).real(), Scalar(0));
  const Scalar half = (gamma - Scalar(1)) / Scalar(2);
  const Scalar rho = std::sin(
      std::atan2(std::sqrt(beta), -Scalar(sign) * half) / Scalar(2));
  return rho * direction;
}

template <typename Scalar>
struct VariationalSide {
  Scalar best = -std::numeric_limits<Scalar>::infinity();
  bool any_converged = false;
};

/// Maximizes dir * phi_sign(c) over the closed unit ball, where
///   phi_sign(c) = <U'c, c> + (sqrt(1 - |c|^2) + sign * sqrt(<U''c, c>))^2,
/// by projected gradient ascent (radial clamp) with backtracking line
/// search. Square roots are taken of clamped arguments and the 1/sqrt
/// gradient term is suppressed when its argument drops below 1e-14, where
/// the objective is not differentiable.
template <typename Scalar>
VariationalSide<Scalar> maximize_variational(
    const ComplexMatrix<Scalar>& head, const ComplexMatrix<Scalar>& tail,
    int sign, int dir, const std::vector<ComplexVector<Scalar>>& directions,
    const VariationalOptions<Scalar>& opts) {
  constexpr Scalar kSqrtGuard = Scalar(1e-14);
  const Scalar dir_s = Scalar(dir);

  auto project = [](ComplexVector<Scalar> c) {
    const Scalar norm = c.norm();
    if (norm > Scalar(1)) c /= norm;
    return c;
  };
  auto value = [&](const ComplexVector<Scalar>& c) -> Scalar {
    const Scalar q1 = c.dot(head * c).real();
    const Scalar q2 = std::max(c.dot(tail * c).real(), Scalar(0));
    const Scalar s2 = std::max(Scalar(1) - c.squaredNorm(), Scalar(0));
    return q1 + q2 + s2 + Scalar(2) * Scalar(sign) * std::sqrt(s2 * q2);
  };
  auto gradient = [&](const ComplexVector<Scalar>& c) -> ComplexVector<Scalar> {
    const ComplexVector<Scalar> hc = head * c;
    const ComplexVector<Scalar> tc = tail * c;
    const Scalar q2 = std::max(c.dot(tc).real(), Scalar(0));
    const Scalar s2 = std::max(Scalar(1) - c.squaredNorm(), Scalar(0));
    ComplexVector<Scalar> g = Scalar(2) * (hc + tc - c);
    const Scalar root_arg = s2 * q2;
    if (root_arg >= kSqrtGuard) {
      g += Scalar(2) * Scalar(sign) / std::sqrt(root_arg) * (s2 * tc - q2 * c);
    }
    return g;
  };

  // Projected gradient steps explore directions; the radius is re-optimized
  // in closed form after every step (ray_seed), which keeps iterates off the
  // stiff radial cusp near the sphere. Snapping can only improve the side
  // being optimized, so the line-search guarantee is preserved.
  auto snap = [&](const ComplexVector<Scalar>& x) -> ComplexVector<Scalar> {
    const Scalar norm = x.norm();
    if (!(norm > Scalar(0))) return x;
    return ray_seed<Scalar>(head, tail, x / norm, sign);
  };

  const Scalar tau0 = Scalar(0.5) / (Scalar(1) + head.norm() + tail.norm());
  VariationalSide<Scalar> out;
  for (const auto& direction : directions) {
    ComplexVector<Scalar> c = ray_seed(head, tail, direction, sign);
    Scalar f = dir_s * value(c);
    Scalar tau = tau0;
    bool converged = false;
    int noise_gains = 0;  // consecutive accepted gains at rounding level
    for (int it = 0; it < opts.max_iters; ++it) {
      const ComplexVector<Scalar> g = dir_s * gradient(c);
      ComplexVector<Scalar> c_next;
      Scalar f_next = f;
      bool accepted = false;
      Scalar t = tau;
      for (int bt = 0; bt < 60; ++bt) {
        ComplexVector<Scalar> raw = project(c + t * g);
        const Scalar slope = g.dot(raw - c).real();
        ComplexVector<Scalar> trial = snap(raw);
        const Scalar ft = dir_s * value(trial);
        if (ft > f && ft >= f + Scalar(1e-4) * slope) {
          c_next = std::move(trial);
          f_next = ft;
          accepted = true;
          break;
        }
        t /= Scalar(2);
      }
      if (!accepted) {  // no improving step: directionally stationary
        converged = true;
        break;
      }
      const Scalar step = (c_next - c).norm();
      const Scalar gain = f_next - f;
      c = std::move(c_next);
      f = f_next;
      tau = std::min(t * Scalar(2), Scalar(1e3));
      if (gain <= Scalar(8) * Eigen::NumTraits<Scalar>::epsilon() *
                      std::max(Scalar(1), std::abs(f))) {
        ++noise_gains;  // value is pinned at rounding level
      } else {
        noise_gains = 0;
      }
      if (step <= opts.step_tol || noise_gains >= 3) {
        converged = true;
        break;
      }
    }
    out.best = std::max(out.best, f);
    out.any_converged = out.any_converged || converged;
  }
  return out;
}

}  // namespace detail

/// Frame constants by the extremal characterization over coefficient vectors
/// in the closed unit ball, searched by multistart projected gradient.
/// c = 0 always contributes the value 1, so upper >= 1 and lower <= 1.
/// Deterministic for a fixed seed. Throws NonConvergence if no restart
/// meets step_tol within max_iters.
template <typename Scalar>
FrameConstants<Scalar> variational_constants(
    const ReplacementProblem<Scalar>& p, Index n,
    const VariationalOptions<Scalar>& opts = {}) {
  detail::check_replacement_count(p, n);
  if (opts.restarts < 1) {
    throw ValidationError("variational restarts must be >= 1");
  }
  if (opts.max_iters < 1) {
    throw ValidationError("variational max_iters must be >= 1");
  }
  const ComplexMatrix<Scalar> head = gram_head(p, n);
  const ComplexMatrix<Scalar> tail = gram_tail(p, n);
  const auto directions = detail::variational_directions(head, tail, opts);
  const auto up =
      detail::maximize_variational(head, tail, +1, +1, directions, opts);
  const auto dn =
      detail::maximize_variational(head, tail, -1, -1, directions, opts);
  if (!up.any_converged || !dn.any_converged) {
    throw NonConvergence("variational search: no restart met step_tol within " +
                         std::to_string(opts.max_iters) + " iterations");
  }
  FrameConstants<Scalar> fc;
  fc.method = ConstantsMethod::variational;
  fc.upper = std::max(up.best, Scalar(1));
  fc.lower = std::clamp(-dn.best, Scalar(0), Scalar(1));
  fc.degenerate = fc.lower <= p.rank_tol;
  return fc;
}

template <typename Scalar>
struct SweepOptions {
  Index n_max = 0;  ///< analyze N = 1..n_max; 0 means the full range 1..K
  Scalar flatten_rel_tol = Scalar(1e-3);  ///< threshold for the summability hint
};

template <typename Scalar>
struct SweepEntry {
  Index n = 0;
  FrameConstants<Scalar> tilde;
  FrameConstants<Scalar> exact;
  RieszVerdict<Scalar> riesz;
};

/// Per-truncation constants over a window of N, plus window estimates of the
/// limit behavior. liminf_a / limsup_b are min/max of the exact constants
/// over the analyzed window only; they estimate, not equal, the true limits.
template <typename Scalar>
struct SweepReport {
  std::vector<SweepEntry<Scalar>> per_n;
  RealVector<Scalar> tail_energy;  ///< |v_n - w_n|^2 for n = 1..K
  Scalar liminf_a = Scalar(0);
  Scalar limsup_b = Scalar(0);
  bool uniform_convergence_hint = false;
};

/// Runs the head-rank test and both constant routes for N = 1..n_max.
/// The summability hint is set when the partial sums of |v_n - w_n|^2
/// flatten over the last quarter of the window (relative to their total),
/// which indicates square-summable replacements and hence uniform
/// convergence of the truncated systems.
template <typename Scalar>
SweepReport<Scalar> sweep(const ReplacementProblem<Scalar>& p,
                          const SweepOptions<Scalar>& opts = {}) {
  const Index k = p.count();
  const Index n_max = opts.n_max == 0 ? k : opts.n_max;
  detail::check_replacement_count(p, n_max);

  SweepReport<Scalar> report;
  report.per_n.reserve(static_cast<std::size_t>(n_max));
  report.liminf_a = std::numeric_limits<Scalar>::infinity();
  report.limsup_b = -std::numeric_limits<Scalar>::infinity();
  for (Index n = 1; n <= n_max; ++n) {
    SweepEntry<Scalar> entry;
    entry.n = n;
    entry.riesz = riesz_basis_test(p, n);
    entry.tilde = tilde_constants(p, n);
    entry.exact = exact_constants(p, n);
    report.liminf_a = std::min(report.liminf_a, entry.exact.lower);
    report.limsup_b = std::max(report.limsup_b, entry.exact.upper);
    report.per_n.push_back(std::move(entry));
  }

  report.tail_energy = tail_energies(p);
  const Scalar total = report.tail_energy.sum();
  const Index q = (3 * k) / 4;
  const Scalar last_quarter = report.tail_energy.tail(k - q).sum();
  report.uniform_convergence_hint =
      last_quarter <= opts.flatten_rel_tol * std::max(Scalar(1), total);
  return report;
}

}  // namespace rieszrep
