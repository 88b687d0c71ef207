#pragma once

// Test-only oracles. These deliberately use different algorithms from the
// library code they check (Floyd-Warshall instead of BFS, explicit path
// enumeration instead of Brandes accumulation, the integral form of the
// Cramer-von-Mises statistic, a polar-method normal sampler).

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "regraph/graph.hpp"
#include "regraph/rng.hpp"
#include "regraph/stats.hpp"

namespace testsupport {

using regraph::Graph;

inline std::vector<std::vector<int>> floyd_warshall(const Graph& g) {
    const int n = g.vertex_count();
    const int inf = 1 << 28;
    std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
    for (int v = 0; v < n; ++v) d[v][v] = 0;
    for (const auto& [u, v] : g.edges()) d[u][v] = d[v][u] = 1;
    for (int m = 0; m < n; ++m)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                d[i][j] = std::min(d[i][j], d[i][m] + d[m][j]);
    return d;
}

inline double oracle_mean_distance(const Graph& g) {
    const auto d = floyd_warshall(g);
    const int n = g.vertex_count();
    long long total = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i != j && d[i][j] > n) throw std::runtime_error("oracle: disconnected");
            total += d[i][j];
        }
    return static_cast<double>(total) / (static_cast<double>(n) * (n - 1));
}

struct OracleBetweenness {
    std::vector<double> vertex;
    std::map<std::pair<int, int>, double> edge;
};

// Enumerates every shortest path explicitly; feasible for n <= 12 or so.
inline OracleBetweenness oracle_betweenness(const Graph& g) {
    const int n = g.vertex_count();
    const auto d = floyd_warshall(g);
    OracleBetweenness out;
    out.vertex.assign(n, 0.0);
    for (const auto& e : g.edges()) out.edge[e] = 0.0;

    for (int s = 0; s < n; ++s) {
        for (int t = 0; t < n; ++t) {
            if (s == t) continue;
            std::vector<std::vector<int>> paths;
            std::vector<int> cur{s};
            // DFS over the shortest-path DAG from s to t
            std::function<void(int)> rec = [&](int v) {
                if (v == t) {
                    paths.push_back(cur);
                    return;
                }
                for (int w : g.neighbors(v)) {
                    if (d[s][w] == d[s][v] + 1 && d[s][w] + d[w][t] == d[s][t]) {
                        cur.push_back(w);
                        rec(w);
                        cur.pop_back();
                    }
                }
            };
            rec(s);
            const double frac = 1.0 / static_cast<double>(paths.size());
            for (const auto& p : paths) {
                for (std::size_t i = 1; i + 1 < p.size(); ++i) out.vertex[p[i]] += frac;
                for (std::size_t i = 0; i + 1 < p.size(); ++i) {
                    const auto key = std::minmax(p[i], p[i + 1]);
                    out.edge[{key.first, key.second}] += frac;
                }
            }
        }
    }
    return out;
}

inline Graph permuted(const Graph& g, const std::vector<int>& perm) {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(g.edge_count());
    for (const auto& [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
    return Graph(g.vertex_count(), g.degree(), edges);
}

// Regularized upper incomplete gamma Q(a, x); series and continued fraction.
inline double gammaq(double a, double x) {
    if (x < 0 || a <= 0) throw std::invalid_argument("gammaq: bad arguments");
    if (x == 0) return 1.0;
    const double gln = std::lgamma(a);
    if (x < a + 1.0) {
        double ap = a, sum = 1.0 / a, del = sum;
        for (int i = 0; i < 500; ++i) {
            ap += 1.0;
            del *= x / ap;
            sum += del;
            if (std::abs(del) < std::abs(sum) * 1e-15) break;
        }
        return 1.0 - sum * std::exp(-x + a * std::log(x) - gln);
    }
    double b = x + 1.0 - a, c = 1e300, dd = 1.0 / b, h = dd;
    for (int i = 1; i < 500; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        dd = an * dd + b;
        if (std::abs(dd) < 1e-300) dd = 1e-300;
        c = b + an / c;
        if (std::abs(c) < 1e-300) c = 1e-300;
        dd = 1.0 / dd;
        const double del = dd * c;
        h *= del;
        if (std::abs(del - 1.0) < 1e-15) break;
    }
    return std::exp(-x + a * std::log(x) - gln) * h;
}

inline double chi2_tail(double x, double df) { return gammaq(df / 2.0, x / 2.0); }

// Integral form of the statistic: m * sum of exact segment integrals of
// (F_m(u) - u)^2 under the fitted normal's probability transform.
inline double oracle_cvm_w2(const std::vector<double>& values) {
    const std::size_t m = values.size();
    double mean = 0.0;
    for (double x : values) mean += x;
    mean /= static_cast<double>(m);
    double ss = 0.0;
    for (double x : values) ss += (x - mean) * (x - mean);
    const double s = std::sqrt(ss / static_cast<double>(m - 1));
    std::vector<double> u;
    u.reserve(m);
    for (double x : values) u.push_back(regraph::normal_cdf((x - mean) / s));
    std::sort(u.begin(), u.end());
    std::vector<double> pts;
    pts.push_back(0.0);
    pts.insert(pts.end(), u.begin(), u.end());
    pts.push_back(1.0);
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        const double c = static_cast<double>(i) / static_cast<double>(m);
        const double a = c - pts[i], b = c - pts[i + 1];
        total += (a * a * a - b * b * b) / 3.0;
    }
    return static_cast<double>(m) * total;
}

// Marsaglia polar method, independent of the library's Box-Muller sampler.
class PolarNormal {
public:
    explicit PolarNormal(std::uint64_t seed) : rng_(seed) {}
    double operator()() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u, v, q;
        do {
            u = 2.0 * rng_.real01() - 1.0;
            v = 2.0 * rng_.real01() - 1.0;
            q = u * u + v * v;
        } while (q >= 1.0 || q == 0.0);
        const double f = std::sqrt(-2.0 * std::log(q) / q);
        spare_ = v * f;
        has_spare_ = true;
        return u * f;
    }

private:
    regraph::Rng rng_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

inline double oracle_cvm_p(const std::vector<double>& values, int draws, std::uint64_t seed) {
    const double observed = oracle_cvm_w2(values);
    PolarNormal normal(seed);
    std::vector<double> sample(values.size());
    int geq = 0;
    for (int d = 0; d < draws; ++d) {
        for (auto& x : sample) x = normal();
        if (oracle_cvm_w2(sample) >= observed) ++geq;
    }
    return static_cast<double>(geq) / static_cast<double>(draws);
}

// Inverse normal CDF by bisection, for quantile-grid inputs.
inline double normal_quantile(double p) {
    double lo = -12.0, hi = 12.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (regraph::normal_cdf(mid) < p ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace testsupport
