#ifndef FVEST_SURFACE_HPP
#define FVEST_SURFACE_HPP

#include <string>
#include <vector>

#include "fvest/types.hpp"

namespace fvest {

/// Uniform observation times t_i = i/n, i = 0..n.
struct TimeGrid {
  int n = 1;

  TimeGrid() = default;
  explicit TimeGrid(int n_) : n(n_) {
    if (n < 1) throw std::invalid_argument("TimeGrid: n must be >= 1");
  }
  double delta() const { return 1.0 / n; }
  double t(int i) const { return static_cast<double>(i) / n; }
};

/// Maturities 0 = T_0 < T_1 < ... < T_d <= 1.
struct MaturityGrid {
  Vector maturities;  // size d+1, maturities[0] == 0

  MaturityGrid() = default;
  explicit MaturityGrid(Vector ts);
  /// Uniform grid T_j = j * last / d.
  static MaturityGrid uniform(int d, double last = 1.0);

  Index d() const { return maturities.size() - 1; }
  double T(Index j) const { return maturities[j]; }
  double max_spacing() const;
};

/// d = ceil(n^0.95), the maturity count rule used throughout.
int default_maturity_count(int n);

/// Deterministic initial forward variance curve, piecewise linear between
/// knots and constant beyond the ends. Values must be positive.
struct ForwardVarianceCurve {
  Vector knots;
  Vector values;

  ForwardVarianceCurve() = default;
  ForwardVarianceCurve(Vector ks, Vector vs);
  static ForwardVarianceCurve constant(double v);

  double operator()(double u) const;
};

/// Discrete observations I[i][j] ~= I_{t_i}^{T_j} of cumulative forward
/// variance; I[i][j] = 0 whenever t_i >= T_j. Immutable after construction.
struct CumulativeVarianceSurface {
  TimeGrid time_grid;
  MaturityGrid maturity_grid;
  MatrixRM I;  // (n+1) x (d+1), time-major

  int n() const { return time_grid.n; }
  Index d() const { return maturity_grid.d(); }
};

struct Violation {
  enum class Severity { Error, Warning };
  Severity severity = Severity::Error;
  std::string message;
};

/// Check the surface invariants: zero convention for t_i >= T_j, zero first
/// column, monotone nondecreasing rows, finite nonnegative entries, matrix
/// shape. Strict mode additionally warns when sqrt(n) * max_j(T_j - T_{j-1})
/// exceeds 0.5 (the grid is too coarse for the asymptotic regime).
std::vector<Violation> validate_surface(const CumulativeVarianceSurface& s, bool strict);

inline bool has_errors(const std::vector<Violation>& vs) {
  for (const auto& v : vs)
    if (v.severity == Violation::Severity::Error) return true;
  return false;
}

/// Scaled increment vector [ (I[i][j] - I[i-1][j]) * sqrt(n) ]_{j=1..d}.
Vector increment(const CumulativeVarianceSurface& s, int i);

}  // namespace fvest

#endif  // FVEST_SURFACE_HPP
