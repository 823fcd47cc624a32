#include "fvest/kernels.hpp"

#include <cmath>

namespace fvest {

namespace {

constexpr double kOverflowBound = 1e12;

void check_theta(const KernelSpec& spec, const Vector& theta) {
  if (theta.size() != spec.dim())
    throw std::invalid_argument("kernel: parameter dimension " + std::to_string(theta.size()) +
                                " does not match family dimension " +
                                std::to_string(spec.dim()));
  if (!theta.allFinite()) throw NumericalError("kernel: non-finite parameter vector");
}

void check_values(const Array& vals) {
  if (!vals.isFinite().all() || (vals.abs() > kOverflowBound).any())
    throw NumericalError("kernel: evaluation overflow (|k| > 1e12 or non-finite)");
}

}  // namespace

ParamBox::ParamBox(Vector lo, Vector up) : lower(std::move(lo)), upper(std::move(up)) {
  if (lower.size() != upper.size())
    throw std::invalid_argument("ParamBox: bound dimensions differ");
  for (Index a = 0; a < lower.size(); ++a)
    if (!(lower[a] <= upper[a]))
      throw std::invalid_argument("ParamBox: lower > upper at coordinate " + std::to_string(a));
}

Vector ParamBox::project(const Vector& theta) const {
  return theta.cwiseMax(lower).cwiseMin(upper);
}

bool validate_params(const Vector& theta, const ParamBox& box) {
  if (theta.size() != box.dim())
    throw std::invalid_argument("validate_params: dimension mismatch");
  return (theta.array() >= box.lower.array()).all() &&
         (theta.array() <= box.upper.array()).all();
}

Index KernelSpec::dim() const { return family == KernelFamily::Custom ? custom.q : 2; }

std::string KernelSpec::family_name() const {
  switch (family) {
    case KernelFamily::Exponential: return "exponential";
    case KernelFamily::ShiftedPowerLaw: return "shifted_power_law";
    case KernelFamily::NegativePowerLaw: return "negative_power_law";
    case KernelFamily::Custom: return "custom";
  }
  return "?";
}

KernelSpec KernelSpec::exponential() { return {KernelFamily::Exponential, 0.0, {}}; }

KernelSpec KernelSpec::shifted_power_law(double c) {
  if (!(c > 0)) throw std::invalid_argument("shifted_power_law: shift c must be > 0");
  return {KernelFamily::ShiftedPowerLaw, c, {}};
}

KernelSpec KernelSpec::negative_power_law(double c) {
  if (!(c > 0)) throw std::invalid_argument("negative_power_law: shift c must be > 0");
  return {KernelFamily::NegativePowerLaw, c, {}};
}

KernelSpec KernelSpec::custom_kernel(CustomKernel k) {
  if (k.q < 1 || !k.eval || !k.grad)
    throw std::invalid_argument("custom_kernel: need q >= 1 and eval/grad hooks");
  return {KernelFamily::Custom, 0.0, std::move(k)};
}

KernelFamily kernel_family_from_name(const std::string& name) {
  if (name == "exponential") return KernelFamily::Exponential;
  if (name == "shifted_power_law") return KernelFamily::ShiftedPowerLaw;
  if (name == "negative_power_law") return KernelFamily::NegativePowerLaw;
  throw ConfigError("unknown kernel family '" + name + "'");
}

void kernel_eval_batch(const KernelSpec& spec, const Vector& theta, const Array& lags,
                       Array& out) {
  check_theta(spec, theta);
  const auto alive = (lags >= 0.0);
  switch (spec.family) {
    case KernelFamily::Exponential: {
      const double eta = theta[0], xi = theta[1];
      out = alive.select(eta * (-xi * lags.max(0.0)).exp(), 0.0);
      break;
    }
    case KernelFamily::ShiftedPowerLaw:
    case KernelFamily::NegativePowerLaw: {
      const double eta = theta[0];
      const double expo = spec.family == KernelFamily::ShiftedPowerLaw ? theta[1] - 0.5
                                                                       : -theta[1];
      out = alive.select(eta * (lags.max(0.0) + spec.shift).pow(expo), 0.0);
      break;
    }
    case KernelFamily::Custom: {
      spec.custom.eval(theta, lags, out);
      out = alive.select(out, 0.0);
      break;
    }
  }
  check_values(out);
}

void kernel_grad_batch(const KernelSpec& spec, const Vector& theta, const Array& lags,
                       Eigen::ArrayXXd& out) {
  check_theta(spec, theta);
  const auto alive = (lags >= 0.0);
  out.resize(spec.dim(), lags.size());
  switch (spec.family) {
    case KernelFamily::Exponential: {
      const double eta = theta[0], xi = theta[1];
      const Array base = alive.select((-xi * lags.max(0.0)).exp(), 0.0);
      out.row(0) = base.transpose();
      out.row(1) = (-eta * lags.max(0.0) * base).transpose();
      break;
    }
    case KernelFamily::ShiftedPowerLaw:
    case KernelFamily::NegativePowerLaw: {
      const double eta = theta[0];
      const bool spl = spec.family == KernelFamily::ShiftedPowerLaw;
      const double expo = spl ? theta[1] - 0.5 : -theta[1];
      const Array shifted = lags.max(0.0) + spec.shift;
      const Array base = alive.select(shifted.pow(expo), 0.0);
      out.row(0) = base.transpose();
      // d/dH adds a log factor; d/dxi is its negative.
      const Array logged = alive.select(eta * base * shifted.log(), 0.0);
      out.row(1) = (spl ? logged : (-logged).eval()).transpose();
      break;
    }
    case KernelFamily::Custom: {
      spec.custom.grad(theta, lags, out);
      for (Index a = 0; a < out.rows(); ++a)
        out.row(a) = alive.transpose().select(out.row(a), 0.0);
      break;
    }
  }
  if (!out.isFinite().all() || (out.abs() > kOverflowBound).any())
    throw NumericalError("kernel: gradient overflow or non-finite");
}

double kernel_eval(const KernelSpec& spec, const Vector& theta, double t) {
  Array lag(1), out(1);
  lag[0] = t;
  kernel_eval_batch(spec, theta, lag, out);
  return out[0];
}

Vector kernel_grad(const KernelSpec& spec, const Vector& theta, double t) {
  Array lag(1);
  lag[0] = t;
  Eigen::ArrayXXd out;
  kernel_grad_batch(spec, theta, lag, out);
  return out.col(0).matrix();
}

}  // namespace fvest
