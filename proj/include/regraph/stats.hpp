#pragma once

#include <limits>
#include <vector>

namespace regraph {

/// Moments of a sample of per-graph mean distances. std_dev uses the n-1
/// denominator; skewness is the moment coefficient m3/m2^(3/2). Degenerate
/// inputs (size < 3 for skewness, zero variance) yield skewness 0 with the
/// flag set instead of halting the pipeline. cvm_p is filled by the caller
/// where a normality score is computed; NaN means not computed.
struct SampleMoments {
    double mean = 0.0;
    double std_dev = 0.0;
    double skewness = 0.0;
    double cvm_p = std::numeric_limits<double>::quiet_NaN();
    bool skew_degenerate = false;
};

SampleMoments sample_moments(const std::vector<double>& values);

/// Standard normal CDF.
double normal_cdf(double z);

/// Cramer-von-Mises statistic against a normal with mean and std estimated
/// from the sample: W^2 = 1/(12m) + sum_i ((2i-1)/(2m) - Phi(z_(i)))^2.
/// A zero-variance sample maps to +infinity.
double cvm_statistic(const std::vector<double>& values);

/// p-value for cvm_statistic by parametric bootstrap: the fraction of
/// standard-normal samples of the same size whose statistic is >= the
/// observed one. The null table per (size, draws) is sampled once from a
/// fixed internal seed and cached (single writer, many readers), so the
/// result is deterministic and permutation-invariant. Requires size >= 8.
double cvm_normality(const std::vector<double>& values, int null_draws = 10000);

/// Pearson correlation coefficient.
double pearson(const std::vector<double>& xs, const std::vector<double>& ys);

}  // namespace regraph
