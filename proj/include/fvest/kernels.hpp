#ifndef FVEST_KERNELS_HPP
#define FVEST_KERNELS_HPP

#include <functional>
#include <string>

#include "fvest/types.hpp"

namespace fvest {

/// Box bounds for the compact convex parameter set.
struct ParamBox {
  Vector lower;
  Vector upper;

  ParamBox() = default;
  ParamBox(Vector lo, Vector up);

  Index dim() const { return lower.size(); }
  /// Componentwise clip into the box.
  Vector project(const Vector& theta) const;
};

/// true iff lower <= theta <= upper componentwise (closed box).
bool validate_params(const Vector& theta, const ParamBox& box);

enum class KernelFamily {
  Exponential,       // k(t) = eta * exp(-xi * t),            theta = (eta, xi)
  ShiftedPowerLaw,   // k(t) = eta * (t + c)^(H - 1/2),        theta = (eta, H)
  NegativePowerLaw,  // k(t) = eta * (t + c)^(-xi),            theta = (eta, xi); same curve
                     // as ShiftedPowerLaw under H = 1/2 - xi
  Custom,
};

/// Batch kernel evaluation hooks for user-supplied families. Both receive the
/// parameter vector and an array of lags (already filtered to lags >= 0) and
/// must fill the output; grad fills one row per parameter.
struct CustomKernel {
  Index q = 0;
  std::function<void(const Vector&, const Array&, Array&)> eval;
  std::function<void(const Vector&, const Array&, Eigen::ArrayXXd&)> grad;
};

/// A parametric kernel family k(theta, t). Values must stay positive on
/// t in [0,1] for every theta in the box; by convention k and its parameter
/// gradient vanish for t < 0.
struct KernelSpec {
  KernelFamily family = KernelFamily::Exponential;
  double shift = 0.01;  // c, used by the power-law families
  CustomKernel custom;  // used only when family == Custom

  Index dim() const;
  std::string family_name() const;

  static KernelSpec exponential();
  static KernelSpec shifted_power_law(double c = 0.01);
  static KernelSpec negative_power_law(double c = 0.01);
  static KernelSpec custom_kernel(CustomKernel k);
};

/// Parse "exponential" / "shifted_power_law" / "negative_power_law".
KernelFamily kernel_family_from_name(const std::string& name);

/// k(theta, t); 0 for t < 0. Throws NumericalError on overflow (|k| > 1e12)
/// or non-finite values, std::invalid_argument on dimension mismatch.
double kernel_eval(const KernelSpec& spec, const Vector& theta, double t);

/// [d k / d theta_alpha]_alpha; zero vector for t < 0.
Vector kernel_grad(const KernelSpec& spec, const Vector& theta, double t);

/// Vectorized evaluation over many lags; entries with lag < 0 are exactly 0.
/// `out` is resized to lags.size().
void kernel_eval_batch(const KernelSpec& spec, const Vector& theta, const Array& lags,
                       Array& out);

/// Vectorized gradient: out(alpha, m) = d k(theta, lags[m]) / d theta_alpha,
/// zero columns where lag < 0. `out` is resized to (q, lags.size()).
void kernel_grad_batch(const KernelSpec& spec, const Vector& theta, const Array& lags,
                       Eigen::ArrayXXd& out);

}  // namespace fvest

#endif  // FVEST_KERNELS_HPP
