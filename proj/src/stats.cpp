#include "regraph/stats.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "regraph/rng.hpp"

namespace regraph {

SampleMoments sample_moments(const std::vector<double>& values) {
    if (values.empty()) throw std::invalid_argument("sample_moments: insufficient sample");
    const std::size_t m = values.size();
    SampleMoments out;
    double sum = 0.0;
    for (double x : values) sum += x;
    out.mean = sum / static_cast<double>(m);
    if (m < 2) {
        out.skew_degenerate = true;
        return out;
    }
    double m2 = 0.0, m3 = 0.0;
    for (double x : values) {
        const double d = x - out.mean;
        m2 += d * d;
        m3 += d * d * d;
    }
    out.std_dev = std::sqrt(m2 / static_cast<double>(m - 1));
    m2 /= static_cast<double>(m);
    m3 /= static_cast<double>(m);
    if (m < 3 || m2 <= 0.0) {
        out.skew_degenerate = true;
        out.skewness = 0.0;
    } else {
        out.skewness = m3 / std::pow(m2, 1.5);
    }
    return out;
}

double normal_cdf(double z) { return 0.5 * std::erfc(-z * 0.70710678118654752440); }

double cvm_statistic(const std::vector<double>& values) {
    const std::size_t m = values.size();
    if (m < 2) throw std::invalid_argument("cvm_statistic: insufficient sample");
    double mean = 0.0;
    for (double x : values) mean += x;
    mean /= static_cast<double>(m);
    double ss = 0.0;
    for (double x : values) ss += (x - mean) * (x - mean);
    const double s = std::sqrt(ss / static_cast<double>(m - 1));
    if (s == 0.0) return std::numeric_limits<double>::infinity();

    std::vector<double> u;
    u.reserve(m);
    for (double x : values) u.push_back(normal_cdf((x - mean) / s));
    std::sort(u.begin(), u.end());

    double w2 = 1.0 / (12.0 * static_cast<double>(m));
    for (std::size_t i = 0; i < m; ++i) {
        const double d = (2.0 * static_cast<double>(i) + 1.0) / (2.0 * static_cast<double>(m)) - u[i];
        w2 += d * d;
    }
    return w2;
}

namespace {

// Null distribution of the statistic under estimated parameters has no closed
// form; it is bootstrapped once per (sample size, draws) from a fixed seed.
class CvmNullCache {
public:
    std::shared_ptr<const std::vector<double>> table(int m, int draws) {
        const auto key = std::make_pair(m, draws);
        {
            std::lock_guard<std::mutex> lk(mu_);
            auto it = cache_.find(key);
            if (it != cache_.end()) return it->second;
        }
        auto built = std::make_shared<std::vector<double>>(build(m, draws));
        std::lock_guard<std::mutex> lk(mu_);
        auto [it, inserted] = cache_.emplace(key, std::move(built));
        return it->second;
    }

private:
    static std::vector<double> build(int m, int draws) {
        Rng rng(derive_seed(0xc7a11e5u, static_cast<std::uint64_t>(m),
                            static_cast<std::uint64_t>(draws)));
        std::vector<double> stats;
        stats.reserve(draws);
        std::vector<double> sample(m);
        for (int d = 0; d < draws; ++d) {
            for (int i = 0; i < m; ++i) sample[i] = rng.normal();
            stats.push_back(cvm_statistic(sample));
        }
        std::sort(stats.begin(), stats.end());
        return stats;
    }

    std::mutex mu_;
    std::map<std::pair<int, int>, std::shared_ptr<const std::vector<double>>> cache_;
};

CvmNullCache& null_cache() {
    static CvmNullCache cache;
    return cache;
}

}  // namespace

double cvm_normality(const std::vector<double>& values, int null_draws) {
    if (values.size() < 8) throw std::invalid_argument("cvm_normality: insufficient sample");
    if (null_draws < 1) throw std::invalid_argument("cvm_normality: null_draws must be positive");
    const double w2 = cvm_statistic(values);
    if (std::isinf(w2)) return 0.0;
    const auto tab = null_cache().table(static_cast<int>(values.size()), null_draws);
    const auto it = std::lower_bound(tab->begin(), tab->end(), w2);
    return static_cast<double>(tab->end() - it) / static_cast<double>(tab->size());
}

double pearson(const std::vector<double>& xs, const std::vector<double>& ys) {
    if (xs.size() != ys.size() || xs.size() < 2)
        throw std::invalid_argument("pearson: need two samples of equal size >= 2");
    const double n = static_cast<double>(xs.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= n;
    my /= n;
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double dx = xs[i] - mx, dy = ys[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0) throw std::domain_error("pearson: zero variance");
    return sxy / std::sqrt(sxx * syy);
}

}  // namespace regraph
