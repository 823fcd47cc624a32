#ifndef FVEST_TYPES_HPP
#define FVEST_TYPES_HPP

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

namespace fvest {

inline constexpr const char* kVersion = "0.1.0";

using Vector = Eigen::VectorXd;
using Array = Eigen::ArrayXd;
using Matrix = Eigen::MatrixXd;
// Surfaces are swept row-by-row over the time index, so keep them row-major.
using MatrixRM = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Index = Eigen::Index;

/// Bad or inconsistent run configuration (CLI exit code 2).
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed or invariant-violating input data (CLI exit code 3).
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Numerical failure: overflow, non-finite values, singular matrices (CLI exit code 4).
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace fvest

#endif  // FVEST_TYPES_HPP
