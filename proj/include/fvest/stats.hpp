#ifndef FVEST_STATS_HPP
#define FVEST_STATS_HPP

#include <cstddef>
#include <vector>

namespace fvest {

/// Standard normal CDF.
double norm_cdf(double x);

/// Standard normal quantile (inverse CDF). p in (0,1); p=0.5 returns exactly 0.
/// Accurate to full double precision (rational approximation plus one Halley step).
double norm_quantile(double p);

double mean(const std::vector<double>& xs);

/// Unbiased sample variance (1/(N-1)); returns 0 for fewer than two values.
double sample_variance(const std::vector<double>& xs);

/// Pearson correlation of two equal-length samples.
double pearson_correlation(const std::vector<double>& xs, const std::vector<double>& ys);

}  // namespace fvest

#endif  // FVEST_STATS_HPP
