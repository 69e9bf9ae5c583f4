#pragma once

#include <string_view>

#include "groupwave/algebra.hpp"

namespace groupwave {

enum class NormMethod { CircleGrid, TruncatedRep };

std::string_view norm_method_name(NormMethod m);
NormMethod parse_norm_method(std::string_view name);

/// Certified sandwich for the operator norm on C_r*(G). The norm itself is
/// never claimed exactly; only [opnorm_lower, opnorm_upper] is reported,
/// with opnorm_lower <= opnorm_upper, l2 <= opnorm_upper <= l1.
struct NormReport {
  double l1 = 0.0;
  double l2 = 0.0;
  double opnorm_lower = 0.0;
  double opnorm_upper = 0.0;
  NormMethod method = NormMethod::TruncatedRep;
  int resolution = 0;
  bool converged = true;
  int iterations = 0;
};

/// IntZ only: evaluates the symbol of x on an equispaced grid of the circle.
/// The max modulus is a lower bound for the operator norm; a modulus-of-
/// continuity bound 2π·l1·max|n|/grid_size certifies the upper side.
/// Requires grid_size >= 2·max|n| + 1.
NormReport opnorm_circle_grid(const AlgebraElement& x, int grid_size);

/// Compresses the left regular representation to the ball of the given
/// radius: A[h,g] = x^(h·g^{-1}) for h, g in the ball, stored sparse. The
/// largest singular value is estimated by power iteration on A*A seeded
/// with δ_e plus a 1e-3 perturbation on each basis direction, iterating
/// until the relative change drops below 1e-10 or 10000 iterations have
/// run (non-convergence is flagged, not fatal). Lower bounds are monotone
/// nondecreasing in the radius.
NormReport opnorm_truncated_rep(const AlgebraElement& x, int radius);

}  // namespace groupwave
