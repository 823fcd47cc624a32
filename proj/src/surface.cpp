#include "fvest/surface.hpp"

#include <cmath>

namespace fvest {

MaturityGrid::MaturityGrid(Vector ts) : maturities(std::move(ts)) {
  if (maturities.size() < 2)
    throw std::invalid_argument("MaturityGrid: need T_0 = 0 and at least one maturity");
  if (maturities[0] != 0.0) throw std::invalid_argument("MaturityGrid: T_0 must be 0");
  for (Index j = 1; j < maturities.size(); ++j)
    if (!(maturities[j] > maturities[j - 1]))
      throw std::invalid_argument("MaturityGrid: maturities must be strictly increasing");
  if (maturities[maturities.size() - 1] > 1.0)
    throw std::invalid_argument("MaturityGrid: T_d must be <= 1");
}

MaturityGrid MaturityGrid::uniform(int d, double last) {
  if (d < 1) throw std::invalid_argument("MaturityGrid: d must be >= 1");
  Vector ts(d + 1);
  for (int j = 0; j <= d; ++j) ts[j] = last * static_cast<double>(j) / d;
  return MaturityGrid(std::move(ts));
}

double MaturityGrid::max_spacing() const {
  double m = 0.0;
  for (Index j = 1; j < maturities.size(); ++j)
    m = std::max(m, maturities[j] - maturities[j - 1]);
  return m;
}

int default_maturity_count(int n) {
  return static_cast<int>(std::ceil(std::pow(static_cast<double>(n), 0.95)));
}

ForwardVarianceCurve::ForwardVarianceCurve(Vector ks, Vector vs)
    : knots(std::move(ks)), values(std::move(vs)) {
  if (knots.size() != values.size() || knots.size() < 1)
    throw std::invalid_argument("ForwardVarianceCurve: need matching knots and values");
  for (Index m = 1; m < knots.size(); ++m)
    if (!(knots[m] > knots[m - 1]))
      throw std::invalid_argument("ForwardVarianceCurve: knots must be strictly increasing");
  if (!(values.array() > 0.0).all())
    throw std::invalid_argument("ForwardVarianceCurve: values must be positive");
}

ForwardVarianceCurve ForwardVarianceCurve::constant(double v) {
  Vector k(1), val(1);
  k[0] = 0.0;
  val[0] = v;
  return ForwardVarianceCurve(std::move(k), std::move(val));
}

double ForwardVarianceCurve::operator()(double u) const {
  const Index m = knots.size();
  if (u <= knots[0]) return values[0];
  if (u >= knots[m - 1]) return values[m - 1];
  Index hi = 1;
  while (knots[hi] < u) ++hi;
  const double w = (u - knots[hi - 1]) / (knots[hi] - knots[hi - 1]);
  return (1.0 - w) * values[hi - 1] + w * values[hi];
}

std::vector<Violation> validate_surface(const CumulativeVarianceSurface& s, bool strict) {
  std::vector<Violation> out;
  const auto err = [&out](std::string msg) {
    out.push_back({Violation::Severity::Error, std::move(msg)});
  };
  const int n = s.time_grid.n;
  const Index d = s.maturity_grid.d();
  if (s.I.rows() != n + 1 || s.I.cols() != d + 1) {
    err("shape: I is " + std::to_string(s.I.rows()) + "x" + std::to_string(s.I.cols()) +
        ", expected " + std::to_string(n + 1) + "x" + std::to_string(d + 1));
    return out;
  }
  for (int i = 0; i <= n; ++i) {
    const double t = s.time_grid.t(i);
    for (Index j = 0; j <= d; ++j) {
      const double v = s.I(i, j);
      if (!std::isfinite(v)) {
        err("non-finite entry at (i=" + std::to_string(i) + ", j=" + std::to_string(j) + ")");
        continue;
      }
      if (v < 0.0)
        err("negative entry " + std::to_string(v) + " at (i=" + std::to_string(i) +
            ", j=" + std::to_string(j) + ")");
      if (t >= s.maturity_grid.T(j) && v != 0.0)
        err("zero convention violated at (i=" + std::to_string(i) + ", j=" + std::to_string(j) +
            "): t_i >= T_j but I = " + std::to_string(v));
      if (j > 0 && v < s.I(i, j - 1))
        err("row " + std::to_string(i) + " not nondecreasing at j=" + std::to_string(j));
    }
  }
  if (strict) {
    const double score = std::sqrt(static_cast<double>(n)) * s.maturity_grid.max_spacing();
    if (score > 0.5)
      out.push_back({Violation::Severity::Warning,
                     "maturity grid too coarse: sqrt(n) * max spacing = " + std::to_string(score) +
                         " > 0.5"});
  }
  return out;
}

Vector increment(const CumulativeVarianceSurface& s, int i) {
  if (i < 1 || i > s.n())
    throw std::out_of_range("increment: i must lie in 1..n");
  const double root_n = std::sqrt(static_cast<double>(s.n()));
  const Index d = s.d();
  return (s.I.row(i).segment(1, d) - s.I.row(i - 1).segment(1, d)).transpose() * root_n;
}

}  // namespace fvest
