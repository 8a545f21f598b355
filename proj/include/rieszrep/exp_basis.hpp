#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "rieszrep/gershgorin.hpp"
#include "rieszrep/types.hpp"

namespace rieszrep {

inline constexpr double kDomainTol = 1e-10;

/// A domain of measure 1: either the unit box [0,1)^d or a union of
/// disjoint half-open intervals on the line. Interval unions additionally
/// have to tile [0,1) under translation by integers (see tiling_check) for
/// the integer exponentials to form an orthonormal basis on them.
template <typename Scalar>
struct Domain {
  enum class Kind { unit_box, interval_union };

  struct Interval {
    Scalar lo = Scalar(0);
    Scalar hi = Scalar(0);
  };

  Kind kind = Kind::unit_box;
  int dim = 1;
  std::vector<Interval> intervals;  // interval_union only

  static Domain unit_box(int d) {
    Domain dom;
    dom.kind = Kind::unit_box;
    dom.dim = d;
    return dom;
  }

  static Domain interval_union(std::vector<Interval> list) {
    Domain dom;
    dom.kind = Kind::interval_union;
    dom.dim = 1;
    dom.intervals = std::move(list);
    return dom;
  }

  Scalar measure() const {
    if (kind == Kind::unit_box) return Scalar(1);
    Scalar total = Scalar(0);
    for (const auto& iv : intervals) total += iv.hi - iv.lo;
    return total;
  }
};

namespace detail {

/// Shape and measure checks shared by validate_domain and tiling_check;
/// does not require the raw intervals to be pairwise disjoint.
template <typename Scalar>
void check_intervals_basic(const Domain<Scalar>& dom) {
  if (dom.dim < 1) {
    throw ValidationError("domain dimension must be >= 1");
  }
  if (dom.kind == Domain<Scalar>::Kind::unit_box) return;
  if (dom.dim != 1) {
    throw ValidationError("interval unions are one-dimensional");
  }
  if (dom.intervals.empty()) {
    throw ValidationError("interval union needs at least one interval");
  }
  for (const auto& iv : dom.intervals) {
    if (!std::isfinite(double(iv.lo)) || !std::isfinite(double(iv.hi))) {
      throw NonFiniteEntry("interval endpoints must be finite");
    }
    if (!(iv.lo < iv.hi)) {
      throw ValidationError("interval endpoints must satisfy lo < hi");
    }
  }
  using std::abs;
  if (abs(dom.measure() - Scalar(1)) > Scalar(kDomainTol)) {
    throw MeasureNotOne("total measure is " +
                        std::to_string(double(dom.measure())) +
                        ", expected 1");
  }
}

}  // namespace detail

/// Checks interval sanity, pairwise disjointness and unit total measure.
/// Throws OverlappingIntervals or MeasureNotOne.
template <typename Scalar>
const Domain<Scalar>& validate_domain(const Domain<Scalar>& dom) {
  detail::check_intervals_basic(dom);
  if (dom.kind == Domain<Scalar>::Kind::unit_box) return dom;
  auto sorted = dom.intervals;
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& x, const auto& y) { return x.lo < y.lo; });
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i].lo < sorted[i - 1].hi - Scalar(kDomainTol)) {
      throw OverlappingIntervals("intervals overlap near " +
                                 std::to_string(double(sorted[i].lo)));
    }
  }
  return dom;
}

/// True iff the intervals reduced modulo 1 cover [0,1) with multiplicity
/// one, up to endpoint sets of measure zero (sorted-endpoint sweep). Unit
/// boxes trivially tile. Overlaps, whether raw or only after reduction
/// modulo 1, make the check fail rather than throw.
template <typename Scalar>
bool tiling_check(const Domain<Scalar>& dom) {
  detail::check_intervals_basic(dom);
  if (dom.kind == Domain<Scalar>::Kind::unit_box) return true;

  std::vector<std::pair<Scalar, Scalar>> pieces;
  for (const auto& iv : dom.intervals) {
    const Scalar len = iv.hi - iv.lo;
    const Scalar start = iv.lo - std::floor(double(iv.lo));
    if (start + len <= Scalar(1) + Scalar(kDomainTol)) {
      pieces.emplace_back(start, std::min(start + len, Scalar(1)));
    } else {  // wraps past 1; total measure <= 1, so it wraps at most once
      pieces.emplace_back(start, Scalar(1));
      pieces.emplace_back(Scalar(0), start + len - Scalar(1));
    }
  }
  std::sort(pieces.begin(), pieces.end());
  Scalar covered = Scalar(0);
  for (const auto& [lo, hi] : pieces) {
    if (lo > covered + Scalar(kDomainTol)) return false;  // gap
    if (lo < covered - Scalar(kDomainTol)) return false;  // overlap mod 1
    covered = std::max(covered, hi);
  }
  return covered >= Scalar(1) - Scalar(kDomainTol);
}

namespace detail {

inline long long ipow(long long base, int exp) {
  long long out = 1;
  for (int i = 0; i < exp; ++i) out *= base;
  return out;
}

template <typename Scalar>
Scalar sinc(Scalar x) {
  using std::abs;
  if (abs(x) < Scalar(1e-4)) {
    const Scalar x2 = x * x;
    return Scalar(1) - x2 / Scalar(6) * (Scalar(1) - x2 / Scalar(20));
  }
  return std::sin(x) / x;
}

/// Integral of e^{2 pi i theta x} over [lo, hi), written as a centered
/// phase times a sinc so that theta -> 0 loses no digits to cancellation.
template <typename Scalar>
Complex<Scalar> segment_factor(Scalar theta, Scalar lo, Scalar hi) {
  constexpr Scalar pi = std::numbers::pi_v<Scalar>;
  const Scalar len = hi - lo;
  const Scalar phase = pi * theta * (lo + hi);
  const Scalar magnitude = len * sinc(pi * theta * len);
  return Complex<Scalar>(std::cos(phase), std::sin(phase)) * magnitude;
}

}  // namespace detail

/// The n-th integer frequency (1-based). Dimension 1 follows
/// 0, 1, -1, 2, -2, ...; higher dimensions walk max-norm shells outward,
/// lexicographically within each shell. Bijective onto Z^d.
inline Eigen::VectorXi basis_frequency(int dim, Index n) {
  if (dim < 1) throw ValidationError("dimension must be >= 1");
  if (n < 1) {
    throw IndexOutOfRange("enumeration index must be >= 1, got " +
                          std::to_string(n));
  }
  Eigen::VectorXi m = Eigen::VectorXi::Zero(dim);
  if (dim == 1) {
    const int half = static_cast<int>(n / 2);
    m[0] = (n % 2 == 0) ? half : -half;
    return m;
  }
  if (n == 1) return m;

  Index idx = n - 2;  // 0-based position past the origin
  long long shell = 1;
  while (true) {
    const long long count =
        detail::ipow(2 * shell + 1, dim) - detail::ipow(2 * shell - 1, dim);
    if (idx < count) break;
    idx -= count;
    ++shell;
    if (shell > (1 << 20)) {
      throw IndexOutOfRange("enumeration index too large");
    }
  }
  std::vector<int> coord(static_cast<std::size_t>(dim),
                         -static_cast<int>(shell));
  while (true) {
    int maxabs = 0;
    for (const int c : coord) maxabs = std::max(maxabs, std::abs(c));
    if (maxabs == static_cast<int>(shell)) {
      if (idx == 0) {
        for (int i = 0; i < dim; ++i) m[i] = coord[static_cast<std::size_t>(i)];
        return m;
      }
      --idx;
    }
    int axis = dim - 1;
    while (axis >= 0 && coord[static_cast<std::size_t>(axis)] ==
                            static_cast<int>(shell)) {
      coord[static_cast<std::size_t>(axis)] = -static_cast<int>(shell);
      --axis;
    }
    if (axis < 0) break;  // exhausted the cube; cannot happen for valid idx
    ++coord[static_cast<std::size_t>(axis)];
  }
  throw IndexOutOfRange("enumeration walk failed");
}

/// Closed-form integral of e^{2 pi i (lambda - m) . x} over the domain.
template <typename Scalar>
Complex<Scalar> fourier_coeff(const Domain<Scalar>& dom,
                              const RealVector<Scalar>& lambda,
                              const Eigen::VectorXi& m) {
  if (lambda.size() != dom.dim || m.size() != dom.dim) {
    throw DimensionMismatch("frequency has " + std::to_string(lambda.size()) +
                            " components, domain dimension is " +
                            std::to_string(dom.dim));
  }
  if (dom.kind == Domain<Scalar>::Kind::unit_box) {
    Complex<Scalar> out(Scalar(1), Scalar(0));
    for (int i = 0; i < dom.dim; ++i) {
      out *= detail::segment_factor(lambda[i] - Scalar(m[i]), Scalar(0),
                                    Scalar(1));
    }
    return out;
  }
  const Scalar theta = lambda[0] - Scalar(m[0]);
  Complex<Scalar> out(Scalar(0), Scalar(0));
  for (const auto& iv : dom.intervals) {
    out += detail::segment_factor(theta, iv.lo, iv.hi);
  }
  return out;
}

/// The n x n coefficient block: entry (j, k) is the domain integral pairing
/// the j-th supplied frequency with the k-th enumerated integer frequency.
template <typename Scalar>
ComplexMatrix<Scalar> coefficient_matrix(const Domain<Scalar>& dom,
                                         const RealMatrix<Scalar>& freqs,
                                         Index n) {
  if (n < 1 || n > freqs.rows()) {
    throw IndexOutOfRange("requested block size " + std::to_string(n) +
                          " with only " + std::to_string(freqs.rows()) +
                          " frequencies supplied");
  }
  if (freqs.cols() != dom.dim) {
    throw DimensionMismatch("frequencies have " + std::to_string(freqs.cols()) +
                            " components, domain dimension is " +
                            std::to_string(dom.dim));
  }
  ComplexMatrix<Scalar> block(n, n);
  for (Index k = 0; k < n; ++k) {
    const Eigen::VectorXi m = basis_frequency(dom.dim, k + 1);
    for (Index j = 0; j < n; ++j) {
      block(j, k) = fourier_coeff<Scalar>(dom, freqs.row(j).transpose(), m);
    }
  }
  return block;
}

/// Result of the row-dominance certificate on the coefficient block.
/// When condition_holds, the exponential system has frame constants at
/// least a_lower = a * delta and at most b_upper = a' + a (1 - delta) for
/// every checked truncation. worst_row is 1-based.
template <typename Scalar>
struct ExpCertificate {
  Index n = 0;
  Scalar a = Scalar(0);
  Scalar a_prime = Scalar(0);
  Scalar delta = Scalar(0);
  bool condition_holds = false;
  Scalar a_lower = Scalar(0);
  Scalar b_upper = Scalar(0);
  Index worst_row = 0;
  Scalar worst_sum = Scalar(0);
  Scalar sigma_min_gershgorin = Scalar(0);
  std::string violation;  // empty when the condition holds
};

/// Non-throwing variant of suff_basis_check: on failure the returned
/// certificate has condition_holds = false and `violation` filled in.
template <typename Scalar>
ExpCertificate<Scalar> try_suff_basis_check(const Domain<Scalar>& dom,
                                            const RealMatrix<Scalar>& freqs,
                                            Index n, Scalar a, Scalar a_prime,
                                            Scalar delta) {
  if (!(a > Scalar(0)) || !(a <= a_prime)) {
    throw ValidationError("need 0 < a <= a_prime");
  }
  if (!(delta > Scalar(0)) || !(delta < Scalar(1))) {
    throw ValidationError("need 0 < delta < 1");
  }
  if (!tiling_check(dom)) {
    throw ValidationError(
        "domain does not tile [0,1) under integer translation; the integer "
        "exponentials are not an orthonormal basis on it");
  }
  const ComplexMatrix<Scalar> block = coefficient_matrix(dom, freqs, n);
  const auto sums = row_col_sums(block);
  const RealVector<Scalar> rc = sums.row + sums.col;

  ExpCertificate<Scalar> cert;
  cert.n = n;
  cert.a = a;
  cert.a_prime = a_prime;
  cert.delta = delta;
  cert.a_lower = a * delta;
  cert.b_upper = a_prime + a * (Scalar(1) - delta);
  Index worst = 0;
  cert.worst_sum = rc.maxCoeff(&worst);
  cert.worst_row = worst + 1;
  cert.sigma_min_gershgorin = sigma_min_lower_bound(block);

  for (Index k = 0; k < n; ++k) {
    const Scalar d = std::abs(block(k, k));
    if (d < a || d > a_prime) {
      cert.condition_holds = false;
      cert.worst_row = k + 1;
      cert.worst_sum = d;
      cert.violation = "diagonal magnitude " + std::to_string(double(d)) +
                       " at row " + std::to_string(k + 1) + " outside [" +
                       std::to_string(double(a)) + ", " +
                       std::to_string(double(a_prime)) + "]";
      return cert;
    }
  }
  const Scalar budget = Scalar(2) * a * (Scalar(1) - delta);
  if (cert.worst_sum > budget) {
    cert.condition_holds = false;
    cert.violation = "off-diagonal sum " + std::to_string(double(cert.worst_sum)) +
                     " at row " + std::to_string(cert.worst_row) +
                     " exceeds 2 a (1 - delta) = " +
                     std::to_string(double(budget));
    return cert;
  }
  cert.condition_holds = true;
  return cert;
}

/// Verifies, for every row k <= n of the coefficient block, that the
/// diagonal magnitude lies in [a, a'] and that the off-diagonal row plus
/// column sum stays within 2 a (1 - delta). Success certifies the frame
/// bounds (a delta, a' + a (1 - delta)) for all checked truncations; the
/// certificate also carries the Gershgorin lower bound on the smallest
/// singular value of the block as corroboration.
/// Throws ConditionViolated on failure.
template <typename Scalar>
ExpCertificate<Scalar> suff_basis_check(const Domain<Scalar>& dom,
                                        const RealMatrix<Scalar>& freqs,
                                        Index n, Scalar a, Scalar a_prime,
                                        Scalar delta) {
  ExpCertificate<Scalar> cert =
      try_suff_basis_check(dom, freqs, n, a, a_prime, delta);
  if (!cert.condition_holds) {
    throw ConditionViolated(cert.worst_row, double(cert.worst_sum),
                            cert.violation);
  }
  return cert;
}

/// Feasibility of the certificate parameters on a measure-one domain:
/// a may not exceed sqrt(1 + (1 - delta)^2) - (1 - delta).
template <typename Scalar>
bool remark_feasibility(Scalar a, Scalar delta) {
  if (!(a > Scalar(0))) throw ValidationError("need a > 0");
  if (!(delta > Scalar(0)) || !(delta < Scalar(1))) {
    throw ValidationError("need 0 < delta < 1");
  }
  const Scalar r = Scalar(1) - delta;
  return a <= std::sqrt(Scalar(1) + r * r) - r;
}

}  // namespace rieszrep
