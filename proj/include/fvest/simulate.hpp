#ifndef FVEST_SIMULATE_HPP
#define FVEST_SIMULATE_HPP

#include <cstdint>

#include "fvest/kernels.hpp"
#include "fvest/surface.hpp"

namespace fvest {

struct SimConfig {
  KernelSpec kernel;
  Vector theta0;
  ForwardVarianceCurve v0 = ForwardVarianceCurve::constant(1.0);
  TimeGrid time_grid;
  MaturityGrid maturity_grid;
  int u_mesh_refinement = 1;
  std::uint64_t seed = 0;
};

struct BrownianPath {
  Vector increments;  // n draws of N(0, 1/n)
  std::uint64_t seed = 0;
};

/// n iid N(0, 1/n) increments from the Philox stream keyed by seed.
/// The same seed always reproduces the same path bit for bit.
BrownianPath simulate_brownian(int n, std::uint64_t seed);

/// Streams one forward-variance path over the union mesh of the time and
/// maturity grids (each cell split u_mesh_refinement-fold). The row
/// {V_{t_i}^u : u >= t_i} advances by the exact multiplicative update
///
///   V_{t_i}^u = V_{t_{i-1}}^u * exp(k(theta0, u - t_{i-1}) dW_i
///                                   - k(theta0, u - t_{i-1})^2 dt / 2),
///
/// which keeps E[V_{t_i}^u] = V_0^u exactly at every step. Cumulative
/// variance rows are left-endpoint Riemann sums over the mesh.
class SurfaceSimulator {
 public:
  explicit SurfaceSimulator(const SimConfig& cfg);
  SurfaceSimulator(const SimConfig& cfg, BrownianPath path);

  /// Advance from t_i to t_{i+1}. Returns false once i == n.
  bool step();

  int current_index() const { return i_; }
  double current_time() const { return cfg_.time_grid.t(i_); }

  /// V_{t_i}^u at the first mesh point u >= t_i; u = t_i exactly since the
  /// time grid is part of the mesh, so this is the spot variance.
  double spot_variance() const;

  /// Forward variance at a mesh point (by mesh index m, u_m >= t_i).
  double forward_variance(Index m) const { return v_[m]; }
  const Vector& mesh() const { return mesh_; }
  Index mesh_index_of_maturity(Index j) const { return maturity_mesh_index_[j]; }

  /// sigma_{t_i}^{T_j}(xi): left-endpoint quadrature of k(xi, u - t_i) V_{t_i}^u
  /// over mesh points in [t_i, T_j); 0 when t_i >= T_j.
  double sigma_exact(const Vector& xi, Index j) const;

  /// The I row at the current time (size d+1).
  Vector current_row() const;

  const BrownianPath& path() const { return path_; }

  /// Run to completion and return the accumulated surface.
  CumulativeVarianceSurface run();

 private:
  void fill_row();

  SimConfig cfg_;
  BrownianPath path_;
  Vector mesh_;        // u_0 < u_1 < ... (includes every t_i and T_j)
  Vector widths_;      // widths_[m] = u_{m+1} - u_m (last entry 0)
  Array v_;            // V_{t_i}^{u_m} for alive m
  std::vector<Index> maturity_mesh_index_;
  std::vector<Index> time_mesh_index_;
  Index alive_begin_ = 0;
  int i_ = 0;
  MatrixRM I_;
  mutable Array lag_buf_, kval_buf_;
};

/// Simulate the full surface for the given config (path drawn from cfg.seed).
CumulativeVarianceSurface simulate_surface(const SimConfig& cfg);

/// sigma_{t_i}^{T_j}(xi) for an explicit Brownian path: replays the simulation
/// up to step i. Intended for diagnostics and tests, not hot loops.
double sigma_exact(const SimConfig& cfg, const BrownianPath& path, const Vector& xi, int i,
                   Index j);

}  // namespace fvest

#endif  // FVEST_SIMULATE_HPP
