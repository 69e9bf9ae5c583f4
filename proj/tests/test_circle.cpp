#include <doctest.h>

#include <cmath>
#include <numbers>

#include "groupwave/circle.hpp"
#include "groupwave/errors.hpp"
#include "groupwave/norms.hpp"
#include "groupwave/sampling.hpp"

using namespace groupwave;

namespace {

AlgebraElement lam(std::int64_t n) {
  return AlgebraElement::lambda(GroupElement::int_z(n));
}

AlgebraElement zero_z() { return AlgebraElement(GroupId::IntZ); }

WaveProblem random_z_problem(Rng& rng) {
  AlgebraElement x0(GroupId::IntZ);
  AlgebraElement y0(GroupId::IntZ);
  int nx = static_cast<int>(rng.range(1, 6));
  for (int i = 0; i < nx; ++i) {
    x0.add_term(GroupElement::int_z(rng.range(-8, 8)),
                random_coefficient(rng, 0.1, 1.0));
  }
  if (rng.coin()) {
    int ny = static_cast<int>(rng.range(1, 6));
    for (int i = 0; i < ny; ++i) {
      y0.add_term(GroupElement::int_z(rng.range(-8, 8)),
                  random_coefficient(rng, 0.1, 1.0));
    }
  }
  return WaveProblem(RealCharacter::id_on_z(), x0, y0);
}

}  // namespace

TEST_CASE("evaluation on the circle") {
  CircleGrid grid(256);
  std::vector<Complex> constant = evaluate_on_circle(lam(0), grid);
  for (const Complex& sample : constant) {
    CHECK(std::abs(sample - Complex(1, 0)) <= 1e-15);
  }

  std::vector<Complex> cosine = evaluate_on_circle(lam(1) + lam(-1), grid);
  for (int k = 0; k < grid.size; ++k) {
    CHECK(std::abs(cosine[k] - Complex(2.0 * std::cos(grid.node(k)), 0)) <=
          1e-14);
  }

  for (const Complex& sample : evaluate_on_circle(zero_z(), grid)) {
    CHECK(sample == Complex(0, 0));
  }
}

TEST_CASE("classical series examples") {
  CircleGrid grid(128);
  for (double t : {0.0, 0.5, 2.0}) {
    std::vector<Complex> constant =
        classical_wave_solution(lam(0), zero_z(), t, grid);
    for (const Complex& sample : constant) {
      CHECK(std::abs(sample - Complex(1, 0)) <= 1e-15);
    }
    std::vector<Complex> linear =
        classical_wave_solution(zero_z(), lam(0), t, grid);
    for (const Complex& sample : linear) {
      CHECK(std::abs(sample - Complex(t, 0)) <= 1e-15);
    }
    std::vector<Complex> mode =
        classical_wave_solution(lam(1), zero_z(), t, grid);
    for (int k = 0; k < grid.size; ++k) {
      Complex expected = std::cos(t) * Complex(std::cos(grid.node(k)),
                                               std::sin(grid.node(k)));
      CHECK(std::abs(mode[k] - expected) <= 1e-14);
    }
  }
}

TEST_CASE("solver matches the classical series") {
  CircleGrid grid(1024);
  Rng rng(401);
  const double times[] = {0.0, 0.5, 1.0, std::numbers::pi, 10.0};
  for (int trial = 0; trial < 25; ++trial) {
    WaveProblem p = random_z_problem(rng);
    for (double t : times) {
      CHECK(compare_solver_to_classical(p, t, grid) <= 1e-10);
    }
  }
  WaveProblem empty(RealCharacter::id_on_z(), zero_z(), zero_z());
  CHECK(compare_solver_to_classical(empty, 1.0, grid) == 0.0);
}

TEST_CASE("standing wave at t = pi") {
  // x0 = λ(1) + λ(-1), y0 = 0: u(π) samples to 2cos(π)cos(θ) = -2cos(θ).
  WaveProblem p(RealCharacter::id_on_z(), lam(1) + lam(-1), zero_z());
  CircleGrid grid(1024);
  CHECK(compare_solver_to_classical(p, std::numbers::pi, grid) <= 1e-12);
  WaveState state = evolve_coefficient_form(p, std::numbers::pi);
  std::vector<Complex> samples = evaluate_on_circle(state.u, grid);
  for (int k = 0; k < grid.size; ++k) {
    CHECK(std::abs(samples[k] -
                   Complex(-2.0 * std::cos(grid.node(k)), 0)) <= 1e-12);
  }
}

TEST_CASE("d'Alembert splitting for real even displacement") {
  // With x0^(n) = x0^(-n) real and y0 = 0, the samples of u(t) are the
  // average of the initial profile translated by ±t.
  AlgebraElement x0 = AlgebraElement::from_terms(
      GroupId::IntZ, {{GroupElement::int_z(1), Complex(0.7, 0)},
                      {GroupElement::int_z(-1), Complex(0.7, 0)},
                      {GroupElement::int_z(3), Complex(-0.2, 0)},
                      {GroupElement::int_z(-3), Complex(-0.2, 0)},
                      {GroupElement::int_z(0), Complex(0.4, 0)}});
  WaveProblem p(RealCharacter::id_on_z(), x0, zero_z());
  CircleGrid grid(512);
  for (double t : {0.3, 1.0, 2.2}) {
    WaveState state = evolve_coefficient_form(p, t);
    std::vector<Complex> u_samples = evaluate_on_circle(state.u, grid);
    for (int k = 0; k < grid.size; ++k) {
      double theta = grid.node(k);
      Complex left(0, 0);
      Complex right(0, 0);
      for (const auto& [g, c] : x0.coefficients()) {
        double n = static_cast<double>(g.int_value());
        left += c * Complex(std::cos(n * (theta + t)), std::sin(n * (theta + t)));
        right += c * Complex(std::cos(n * (theta - t)), std::sin(n * (theta - t)));
      }
      CHECK(std::abs(u_samples[k] - 0.5 * (left + right)) <= 1e-10);
    }
  }
}

TEST_CASE("grid max modulus agrees with the circle-grid norm bound") {
  Rng rng(402);
  for (int trial = 0; trial < 10; ++trial) {
    AlgebraElement x(GroupId::IntZ);
    int n = static_cast<int>(rng.range(1, 5));
    for (int i = 0; i < n; ++i) {
      x.add_term(GroupElement::int_z(rng.range(-5, 5)),
                 random_coefficient(rng, 0.1, 1.0));
    }
    CircleGrid grid(2048);
    double max_sample = 0.0;
    for (const Complex& sample : evaluate_on_circle(x, grid)) {
      max_sample = std::max(max_sample, std::abs(sample));
    }
    NormReport r = opnorm_circle_grid(x, 2048);
    CHECK(max_sample == doctest::Approx(r.opnorm_lower).epsilon(1e-12));
  }
}

TEST_CASE("comparison validates character and grid size") {
  WaveProblem p(RealCharacter::custom(GroupId::IntZ, {{"1", Rational(2, 1)}}),
                lam(1), zero_z());
  CircleGrid grid(64);
  CHECK_THROWS_AS(compare_solver_to_classical(p, 1.0, grid), SemanticError);

  WaveProblem q(RealCharacter::id_on_z(), lam(40), zero_z());
  CircleGrid tiny(64);
  CHECK_THROWS_AS(compare_solver_to_classical(q, 1.0, tiny), SemanticError);

  CHECK_THROWS_AS(evaluate_on_circle(
                      AlgebraElement::lambda(GroupElement::free_word(
                          {Letter::X})),
                      grid),
                  SemanticError);
  CHECK_THROWS_AS(CircleGrid(1), SemanticError);
}
