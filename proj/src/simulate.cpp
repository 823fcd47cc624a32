#include "fvest/simulate.hpp"

#include <algorithm>
#include <cmath>

#include "fvest/rng.hpp"

namespace fvest {

BrownianPath simulate_brownian(int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("simulate_brownian: n must be >= 1");
  RandomStream rng(seed);
  const double sd = 1.0 / std::sqrt(static_cast<double>(n));
  BrownianPath path;
  path.seed = seed;
  path.increments.resize(n);
  for (int i = 0; i < n; ++i) path.increments[i] = sd * rng.next_gaussian();
  return path;
}

namespace {

Vector build_mesh(const TimeGrid& tg, const MaturityGrid& mg, int refinement) {
  std::vector<double> pts;
  pts.reserve(tg.n + mg.maturities.size() + 1);
  for (int i = 0; i <= tg.n; ++i) pts.push_back(tg.t(i));
  for (Index j = 0; j < mg.maturities.size(); ++j) pts.push_back(mg.T(j));
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (refinement <= 1) {
    return Eigen::Map<const Vector>(pts.data(), static_cast<Index>(pts.size()));
  }
  std::vector<double> fine;
  fine.reserve(pts.size() * refinement);
  for (std::size_t m = 0; m + 1 < pts.size(); ++m) {
    fine.push_back(pts[m]);
    for (int r = 1; r < refinement; ++r)
      fine.push_back(pts[m] + (pts[m + 1] - pts[m]) * r / refinement);
  }
  fine.push_back(pts.back());
  return Eigen::Map<const Vector>(fine.data(), static_cast<Index>(fine.size()));
}

Index locate(const Vector& mesh, double x, const char* what) {
  const double* begin = mesh.data();
  const double* end = begin + mesh.size();
  const double* it = std::lower_bound(begin, end, x);
  if (it == end || *it != x)
    throw std::logic_error(std::string("simulate: ") + what + " not on mesh");
  return it - begin;
}

}  // namespace

SurfaceSimulator::SurfaceSimulator(const SimConfig& cfg)
    : SurfaceSimulator(cfg, simulate_brownian(cfg.time_grid.n, cfg.seed)) {}

SurfaceSimulator::SurfaceSimulator(const SimConfig& cfg, BrownianPath path)
    : cfg_(cfg), path_(std::move(path)) {
  if (cfg_.u_mesh_refinement < 1)
    throw std::invalid_argument("simulate: u_mesh_refinement must be >= 1");
  if (path_.increments.size() != cfg_.time_grid.n)
    throw std::invalid_argument("simulate: Brownian path length does not match time grid");
  if (cfg_.theta0.size() != cfg_.kernel.dim())
    throw std::invalid_argument("simulate: theta0 dimension does not match kernel family");

  mesh_ = build_mesh(cfg_.time_grid, cfg_.maturity_grid, cfg_.u_mesh_refinement);
  const Index M = mesh_.size();
  widths_ = Vector::Zero(M);
  for (Index m = 0; m + 1 < M; ++m) widths_[m] = mesh_[m + 1] - mesh_[m];

  maturity_mesh_index_.resize(cfg_.maturity_grid.maturities.size());
  for (Index j = 0; j < cfg_.maturity_grid.maturities.size(); ++j)
    maturity_mesh_index_[j] = locate(mesh_, cfg_.maturity_grid.T(j), "maturity");
  time_mesh_index_.resize(cfg_.time_grid.n + 1);
  for (int i = 0; i <= cfg_.time_grid.n; ++i)
    time_mesh_index_[i] = locate(mesh_, cfg_.time_grid.t(i), "time point");

  v_.resize(M);
  for (Index m = 0; m < M; ++m) v_[m] = cfg_.v0(mesh_[m]);

  I_ = MatrixRM::Zero(cfg_.time_grid.n + 1, cfg_.maturity_grid.d() + 1);
  fill_row();
}

void SurfaceSimulator::fill_row() {
  const double t = current_time();
  const Index d = cfg_.maturity_grid.d();
  // Prefix sums of V * width over alive mesh cells give every I[i][j] at once.
  double acc = 0.0;
  Index m = alive_begin_;
  for (Index j = 1; j <= d; ++j) {
    const Index mj = maturity_mesh_index_[j];
    if (cfg_.maturity_grid.T(j) <= t) continue;
    for (; m < mj; ++m) acc += v_[m] * widths_[m];
    I_(i_, j) = acc;
  }
  if (!std::isfinite(acc))
    throw NumericalError("simulate: non-finite forward variance at t = " + std::to_string(t));
}

bool SurfaceSimulator::step() {
  if (i_ >= cfg_.time_grid.n) return false;
  const double t_prev = cfg_.time_grid.t(i_);
  const double dw = path_.increments[i_];
  const double dt = cfg_.time_grid.delta();
  ++i_;
  const Index new_begin = time_mesh_index_[i_];
  const Index M = mesh_.size();
  const Index len = M - new_begin;
  if (len > 0) {
    lag_buf_ = mesh_.segment(new_begin, len).array() - t_prev;
    kernel_eval_batch(cfg_.kernel, cfg_.theta0, lag_buf_, kval_buf_);
    v_.segment(new_begin, len) *=
        (kval_buf_ * dw - 0.5 * kval_buf_.square() * dt).exp();
    if (!v_.segment(new_begin, len).isFinite().all())
      throw NumericalError("simulate: non-finite V at step i = " + std::to_string(i_));
  }
  alive_begin_ = new_begin;
  fill_row();
  return true;
}

double SurfaceSimulator::spot_variance() const { return v_[time_mesh_index_[i_]]; }

double SurfaceSimulator::sigma_exact(const Vector& xi, Index j) const {
  const double t = current_time();
  if (t >= cfg_.maturity_grid.T(j)) return 0.0;
  const Index mj = maturity_mesh_index_[j];
  const Index len = mj - alive_begin_;
  if (len <= 0) return 0.0;
  lag_buf_ = mesh_.segment(alive_begin_, len).array() - t;
  kernel_eval_batch(cfg_.kernel, xi, lag_buf_, kval_buf_);
  return (kval_buf_ * v_.segment(alive_begin_, len) *
          widths_.segment(alive_begin_, len).array())
      .sum();
}

Vector SurfaceSimulator::current_row() const { return I_.row(i_).transpose(); }

CumulativeVarianceSurface SurfaceSimulator::run() {
  while (step()) {
  }
  CumulativeVarianceSurface s;
  s.time_grid = cfg_.time_grid;
  s.maturity_grid = cfg_.maturity_grid;
  s.I = std::move(I_);
  return s;
}

CumulativeVarianceSurface simulate_surface(const SimConfig& cfg) {
  return SurfaceSimulator(cfg).run();
}

double sigma_exact(const SimConfig& cfg, const BrownianPath& path, const Vector& xi, int i,
                   Index j) {
  SurfaceSimulator sim(cfg, path);
  while (sim.current_index() < i)
    if (!sim.step()) throw std::out_of_range("sigma_exact: i beyond time grid");
  return sim.sigma_exact(xi, j);
}

}  // namespace fvest
