#include "groupwave/circle.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>

#include "groupwave/errors.hpp"

namespace groupwave {

CircleGrid::CircleGrid(int size_in) : size(size_in) {
  if (size < 2) throw SemanticError("circle grid needs at least 2 nodes");
}

double CircleGrid::node(int k) const {
  return 2.0 * std::numbers::pi * k / size;
}

std::vector<Complex> evaluate_on_circle(const AlgebraElement& x,
                                        const CircleGrid& grid) {
  if (x.group() != GroupId::IntZ) {
    throw SemanticError("circle evaluation requires int_z");
  }
  std::vector<Complex> samples(grid.size, Complex(0.0, 0.0));
  for (int k = 0; k < grid.size; ++k) {
    double theta = grid.node(k);
    for (const auto& [g, c] : x.coefficients()) {
      double arg = static_cast<double>(g.int_value()) * theta;
      samples[k] += c * Complex(std::cos(arg), std::sin(arg));
    }
  }
  return samples;
}

std::vector<Complex> classical_wave_solution(const AlgebraElement& f0,
                                             const AlgebraElement& g0,
                                             double t, const CircleGrid& grid) {
  if (f0.group() != GroupId::IntZ || g0.group() != GroupId::IntZ) {
    throw SemanticError("classical wave solution requires int_z data");
  }
  std::vector<Complex> samples(grid.size, Complex(0.0, 0.0));
  for (int k = 0; k < grid.size; ++k) {
    double theta = grid.node(k);
    Complex value =
        f0.coefficient(GroupElement::int_z(0)) +
        t * g0.coefficient(GroupElement::int_z(0));
    auto add_modes = [&](const AlgebraElement& data, bool velocity) {
      for (const auto& [g, c] : data.coefficients()) {
        std::int64_t n = g.int_value();
        if (n == 0) continue;
        double nd = static_cast<double>(n);
        double weight = velocity ? std::sin(t * nd) / nd : std::cos(t * nd);
        value += weight * c * Complex(std::cos(nd * theta), std::sin(nd * theta));
      }
    };
    add_modes(f0, false);
    add_modes(g0, true);
    samples[k] = value;
  }
  return samples;
}

namespace {

std::int64_t max_mode(const AlgebraElement& x) {
  std::int64_t m = 0;
  for (const auto& [g, c] : x.coefficients()) {
    m = std::max(m, std::abs(g.int_value()));
  }
  return m;
}

}  // namespace

double compare_solver_to_classical(const WaveProblem& p, double t,
                                   const CircleGrid& grid) {
  if (p.character.group() != GroupId::IntZ ||
      p.character.kind() != RealCharacter::Kind::IdOnZ) {
    throw SemanticError(
        "classical comparison requires the id_on_z character on int_z");
  }
  std::int64_t m = std::max(max_mode(p.x0), max_mode(p.y0));
  if (grid.size <= 2 * m + 1) {
    // Equality of trig polynomials on the grid is conclusive only past the
    // Nyquist count of the modes involved.
    throw SemanticError("circle grid too small to compare degree " +
                        std::to_string(m) + " trig polynomials");
  }
  WaveState state = evolve_coefficient_form(p, t);
  std::vector<Complex> solver_samples = evaluate_on_circle(state.u, grid);
  std::vector<Complex> classical = classical_wave_solution(p.x0, p.y0, t, grid);
  double worst = 0.0;
  for (int k = 0; k < grid.size; ++k) {
    worst = std::max(worst, std::abs(solver_samples[k] - classical[k]));
  }
  return worst;
}

}  // namespace groupwave
