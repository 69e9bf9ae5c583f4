#pragma once

#include <vector>

#include "groupwave/wave.hpp"

namespace groupwave {

/// Equispaced nodes θ_k = 2πk/size, k = 0..size-1, identifying the circle
/// with [0, 2π).
struct CircleGrid {
  explicit CircleGrid(int size_in);
  int size;
  double node(int k) const;
};

/// sample_k = sum_n x^(n)·e^{i n θ_k}, realizing λ(n) as the character e_n.
std::vector<Complex> evaluate_on_circle(const AlgebraElement& x,
                                        const CircleGrid& grid);

/// The classical Fourier-series wave solution on the circle,
///   u(t) = f0^(0) + t·g0^(0) + sum_{n≠0} (cos(tn)f0^(n) + sin(tn)/n·g0^(n)) e_n,
/// evaluated at the grid nodes (the series is finite for λ-polynomials).
std::vector<Complex> classical_wave_solution(const AlgebraElement& f0,
                                             const AlgebraElement& g0,
                                             double t, const CircleGrid& grid);

/// Max-over-nodes discrepancy between the solver's u(t) evaluated on the
/// circle and the classical series. Requires the IdOnZ character and a grid
/// large enough to separate the trig polynomials involved
/// (size > 2·max|n| + 1).
double compare_solver_to_classical(const WaveProblem& p, double t,
                                   const CircleGrid& grid);

}  // namespace groupwave
