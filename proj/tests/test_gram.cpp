#include "doctest.h"

#include <cmath>

#include "oracles.hpp"
#include "rieszrep/gram.hpp"
#include "support.hpp"

using namespace rieszrep;
using support::make_problem;

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

}  // namespace

TEST_SUITE("gram") {

TEST_CASE("head Gram of a single diagonal vector") {
  const auto p = make_problem(2, {{kInvSqrt2, kInvSqrt2}});
  const auto u = gram_head(p, 1);
  CHECK(u.rows() == 1);
  CHECK(u(0, 0).real() == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(u(0, 0).imag() == 0.0);
}

TEST_CASE("identity replacement has identity head Gram and zero tail Gram") {
  const auto p = gen_identity<double>(5, 4);
  for (Index n = 1; n <= 4; ++n) {
    CHECK((gram_head(p, n) - ComplexMatrix<double>::Identity(n, n))
              .cwiseAbs()
              .maxCoeff() == 0.0);
    CHECK(gram_tail(p, n).cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("two-vector head Gram matches the summation formula") {
  // w_1 = (0.6, 0.8, 0), w_2 = (0, 0.6, 0.8), n = 2.
  // Entry (i, j) = sum_{k<=2} w_i[k] conj(w_j[k]), so the diagonal is
  // (1.0, 0.36); frozen from the explicit-loop oracle.
  const auto p = make_problem(3, {{0.6, 0.8, 0.0}, {0.0, 0.6, 0.8}});
  const auto u = gram_head(p, 2);
  for (Index i = 0; i < 2; ++i) {
    for (Index j = 0; j < 2; ++j) {
      CHECK(std::abs(u(i, j) - oracles::naive_head_gram_entry(p, 2, i, j)) <
            1e-15);
    }
  }
  CHECK(u(0, 0).real() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(u(0, 1).real() == doctest::Approx(0.48).epsilon(1e-12));
  CHECK(u(1, 0).real() == doctest::Approx(0.48).epsilon(1e-12));
  CHECK(u(1, 1).real() == doctest::Approx(0.36).epsilon(1e-12));
}

TEST_CASE("tail Gram of a single diagonal vector") {
  const auto p = make_problem(2, {{kInvSqrt2, kInvSqrt2}});
  const auto u = gram_tail(p, 1);
  CHECK(u(0, 0).real() == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("head plus tail equals the full Gram, all Hermitian PSD") {
  for (std::uint64_t s = 0; s < 12; ++s) {
    const auto inst = support::random_instance(s);
    for (Index n = 1; n <= inst.n; ++n) {
      const auto head = gram_head(inst.problem, n);
      const auto tail = gram_tail(inst.problem, n);
      const auto full = gram_full(inst.problem, n);
      CHECK((head + tail - full).cwiseAbs().maxCoeff() < 1e-12);
      CHECK(hermitian_defect(head) < 1e-12);
      CHECK(hermitian_defect(tail) < 1e-12);
      CHECK(hermitian_defect(full) < 1e-12);
      CHECK(detail::selfadjoint_eigenvalues(head)[0] > -1e-12);
      CHECK(detail::selfadjoint_eigenvalues(tail)[0] > -1e-12);
    }
  }
}

TEST_CASE("mixing matrix entries and the product identity") {
  const auto p = make_problem(2, {{kInvSqrt2, kInvSqrt2}});
  const auto m = mixing_matrix(p, 1);
  CHECK(m.rows() == 1);
  CHECK(m(0, 0).real() == doctest::Approx(kInvSqrt2).epsilon(1e-9));

  const auto ident = gen_identity<double>(4, 3);
  CHECK((mixing_matrix(ident, 3) - ComplexMatrix<double>::Identity(3, 3))
            .cwiseAbs()
            .maxCoeff() == 0.0);

  for (std::uint64_t s = 20; s < 32; ++s) {
    const auto inst = support::random_instance(s);
    const auto mix = mixing_matrix(inst.problem, inst.n);
    const ComplexMatrix<double> product = mix * mix.adjoint();
    CHECK((product - gram_head(inst.problem, inst.n)).cwiseAbs().maxCoeff() <
          1e-12);
  }
}

TEST_CASE("head Gram diagonal carries the head projection norms") {
  for (std::uint64_t s = 40; s < 48; ++s) {
    const auto inst = support::random_instance(s);
    const auto u = gram_head(inst.problem, inst.n);
    for (Index j = 0; j < inst.n; ++j) {
      const double head_sq =
          inst.problem.vectors.row(j).head(inst.n).squaredNorm();
      CHECK(u(j, j).real() == doctest::Approx(head_sq).epsilon(1e-12));
    }
  }
}

TEST_CASE("riesz test: zero head projection fails") {
  const auto p = make_problem(2, {{0.0, 1.0}});  // w_1 = v_2
  const auto verdict = riesz_basis_test(p, 1);
  CHECK_FALSE(verdict.is_riesz_basis);
  CHECK(verdict.rank_head == 0);
  CHECK(verdict.lambda_min_head == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("riesz test: diagonal vector passes with lambda_min 0.5") {
  const auto p = make_problem(2, {{kInvSqrt2, kInvSqrt2}});
  const auto verdict = riesz_basis_test(p, 1);
  CHECK(verdict.is_riesz_basis);
  CHECK(verdict.rank_head == 1);
  CHECK(verdict.lambda_min_head == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("riesz test: collinear head projections fail") {
  const auto p =
      make_problem(3, {{1.0, 0.0, 0.0}, {kInvSqrt2, 0.0, kInvSqrt2}});
  const auto verdict = riesz_basis_test(p, 2);
  CHECK_FALSE(verdict.is_riesz_basis);
  CHECK(verdict.rank_head == 1);
}

TEST_CASE("riesz test is true for every truncation of the identity") {
  const auto p = gen_identity<double>(6, 6);
  for (Index n = 1; n <= 6; ++n) {
    CHECK(riesz_basis_test(p, n).is_riesz_basis);
  }
}

TEST_CASE("out-of-range truncations are rejected") {
  const auto p = make_problem(2, {{1.0, 0.0}});
  CHECK_THROWS_AS(gram_head(p, 0), IndexOutOfRange);
  CHECK_THROWS_AS(gram_head(p, 2), IndexOutOfRange);
  CHECK_THROWS_AS(gram_tail(p, 5), IndexOutOfRange);
  CHECK_THROWS_AS(mixing_matrix(p, 2), IndexOutOfRange);
  CHECK_THROWS_AS(riesz_basis_test(p, 0), IndexOutOfRange);
}

}  // TEST_SUITE
