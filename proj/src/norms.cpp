#include "groupwave/norms.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "groupwave/errors.hpp"

namespace groupwave {

std::string_view norm_method_name(NormMethod m) {
  switch (m) {
    case NormMethod::CircleGrid: return "circle_grid";
    case NormMethod::TruncatedRep: return "truncated_rep";
  }
  return "unknown";
}

NormMethod parse_norm_method(std::string_view name) {
  if (name == "circle_grid") return NormMethod::CircleGrid;
  if (name == "truncated_rep") return NormMethod::TruncatedRep;
  throw SemanticError("unknown norm method: '" + std::string(name) + "'");
}

namespace {

/// Keeps the certified chain opnorm_lower <= opnorm_upper <= l1 and
/// l2 <= opnorm_upper intact against float slop; both inputs are valid
/// bounds, so tightening is sound.
NormReport finish_report(double l1, double l2, double lower, double upper,
                         NormMethod method, int resolution, bool converged,
                         int iterations) {
  NormReport report;
  report.l1 = l1;
  report.l2 = l2;
  report.opnorm_upper = std::max(std::min(upper, l1), l2);
  report.opnorm_lower = std::min(lower, report.opnorm_upper);
  report.method = method;
  report.resolution = resolution;
  report.converged = converged;
  report.iterations = iterations;
  return report;
}

}  // namespace

NormReport opnorm_circle_grid(const AlgebraElement& x, int grid_size) {
  if (x.group() != GroupId::IntZ) {
    throw SemanticError("circle grid norm estimation requires int_z");
  }
  std::int64_t max_n = 0;
  for (const auto& [g, c] : x.coefficients()) {
    max_n = std::max(max_n, std::abs(g.int_value()));
  }
  if (grid_size < 2 * max_n + 1) {
    throw SemanticError("circle grid too small: need at least " +
                        std::to_string(2 * max_n + 1) + " nodes");
  }
  double lower = 0.0;
  for (int k = 0; k < grid_size; ++k) {
    double theta = 2.0 * std::numbers::pi * k / grid_size;
    Complex sample(0.0, 0.0);
    for (const auto& [g, c] : x.coefficients()) {
      double arg = static_cast<double>(g.int_value()) * theta;
      sample += c * Complex(std::cos(arg), std::sin(arg));
    }
    lower = std::max(lower, std::abs(sample));
  }
  double l1 = l1_norm(x);
  double continuity =
      2.0 * std::numbers::pi * l1 * static_cast<double>(max_n) / grid_size;
  return finish_report(l1, l2_norm(x), lower, lower + continuity,
                       NormMethod::CircleGrid, grid_size, true, 0);
}

namespace {

/// CSR matrix over the ball index set; rows sorted by column.
struct SparseMatrix {
  std::size_t n = 0;
  std::vector<std::size_t> row_begin;
  std::vector<std::size_t> cols;
  std::vector<Complex> vals;

  void apply(const std::vector<Complex>& in, std::vector<Complex>& out) const {
    for (std::size_t r = 0; r < n; ++r) {
      Complex acc(0.0, 0.0);
      for (std::size_t k = row_begin[r]; k < row_begin[r + 1]; ++k) {
        acc += vals[k] * in[cols[k]];
      }
      out[r] = acc;
    }
  }
};

SparseMatrix build_csr(
    std::size_t n,
    std::vector<std::vector<std::pair<std::size_t, Complex>>>& rows) {
  SparseMatrix m;
  m.n = n;
  m.row_begin.assign(n + 1, 0);
  for (std::size_t r = 0; r < n; ++r) {
    std::sort(rows[r].begin(), rows[r].end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    m.row_begin[r + 1] = m.row_begin[r] + rows[r].size();
  }
  m.cols.reserve(m.row_begin[n]);
  m.vals.reserve(m.row_begin[n]);
  for (std::size_t r = 0; r < n; ++r) {
    for (const auto& [c, v] : rows[r]) {
      m.cols.push_back(c);
      m.vals.push_back(v);
    }
  }
  return m;
}

}  // namespace

NormReport opnorm_truncated_rep(const AlgebraElement& x, int radius) {
  if (radius < 1) throw SemanticError("truncation radius must be >= 1");
  const std::vector<GroupElement> basis = ball(x.group(), radius);
  if (basis.empty()) throw SemanticError("empty ball");
  std::map<GroupElement, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);
  const std::size_t n = basis.size();

  // A[h,g] = x^(h·g^{-1}): for each support element s, row s·g has entry
  // (g, x^(s)); the adjoint gets the conjugate at the transposed slot.
  std::vector<std::vector<std::pair<std::size_t, Complex>>> a_rows(n);
  std::vector<std::vector<std::pair<std::size_t, Complex>>> at_rows(n);
  for (const auto& [s, c] : x.coefficients()) {
    for (std::size_t g = 0; g < n; ++g) {
      GroupElement h = multiply(s, basis[g]);
      auto it = index.find(h);
      if (it == index.end()) continue;
      a_rows[it->second].emplace_back(g, c);
      at_rows[g].emplace_back(it->second, std::conj(c));
    }
  }
  SparseMatrix a = build_csr(n, a_rows);
  SparseMatrix a_adj = build_csr(n, at_rows);

  // Power iteration on A*A; the Rayleigh quotient ||Av||^2 of a unit vector
  // is a true lower bound for the top singular value squared.
  std::vector<Complex> v(n, Complex(1e-3, 0.0));
  v[index.at(GroupElement::identity(x.group()))] += Complex(1.0, 0.0);
  std::vector<Complex> av(n), w(n);
  auto normalize = [](std::vector<Complex>& vec) {
    double s = 0.0;
    for (const Complex& c : vec) s += std::norm(c);
    s = std::sqrt(s);
    if (s > 0.0) {
      for (Complex& c : vec) c /= s;
    }
    return s;
  };
  normalize(v);

  constexpr int kMaxIterations = 10000;
  constexpr double kRelTol = 1e-10;
  double sigma_sq = 0.0;
  bool converged = false;
  int iterations = 0;
  for (; iterations < kMaxIterations; ++iterations) {
    a.apply(v, av);
    double av_norm_sq = 0.0;
    for (const Complex& c : av) av_norm_sq += std::norm(c);
    double previous = sigma_sq;
    sigma_sq = av_norm_sq;
    if (sigma_sq == 0.0) {
      converged = true;
      break;
    }
    if (iterations > 0 &&
        std::abs(sigma_sq - previous) < kRelTol * sigma_sq) {
      converged = true;
      break;
    }
    a_adj.apply(av, w);
    v.swap(w);
    normalize(v);
  }

  return finish_report(l1_norm(x), l2_norm(x), std::sqrt(sigma_sq), l1_norm(x),
                       NormMethod::TruncatedRep, radius, converged, iterations);
}

}  // namespace groupwave
