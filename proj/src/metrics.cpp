#include "regraph/metrics.hpp"

#include <cmath>
#include <cstdint>
#include <queue>
#include <stack>
#include <stdexcept>

namespace regraph {

double clustering_coefficient(const Graph& g) {
    const int k = g.degree();
    if (k < 2) throw std::domain_error("clustering_coefficient: undefined for k < 2");
    const int n = g.vertex_count();
    std::int64_t t_sum = 0;
    for (int v = 0; v < n; ++v) {
        const auto& nb = g.neighbors(v);
        for (std::size_t a = 0; a < nb.size(); ++a)
            for (std::size_t b = a + 1; b < nb.size(); ++b)
                if (g.adjacent(nb[a], nb[b])) ++t_sum;
    }
    const std::int64_t denom = static_cast<std::int64_t>(n) * (static_cast<std::int64_t>(k) * (k - 1) / 2);
    return static_cast<double>(t_sum) / static_cast<double>(denom);
}

double max_clustering(int k) {
    if (k < 2) throw std::domain_error("max_clustering: undefined for k < 2");
    return 1.0 - 6.0 / (static_cast<double>(k) * (k + 1));
}

namespace {

// BFS distances from s; -1 marks unreachable.
std::vector<int> bfs_distances(const Graph& g, int s) {
    std::vector<int> dist(g.vertex_count(), -1);
    std::queue<int> q;
    dist[s] = 0;
    q.push(s);
    while (!q.empty()) {
        const int v = q.front();
        q.pop();
        for (int w : g.neighbors(v)) {
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                q.push(w);
            }
        }
    }
    return dist;
}

}  // namespace

double mean_graph_distance(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 2) return 0.0;
    std::int64_t total = 0;
    for (int s = 0; s < n; ++s) {
        const auto dist = bfs_distances(g, s);
        for (int v = 0; v < n; ++v) {
            if (dist[v] < 0) throw std::domain_error("mean_graph_distance: disconnected graph");
            total += dist[v];
        }
    }
    return static_cast<double>(total) / (static_cast<double>(n) * (n - 1));
}

namespace {

struct BrandesPass {
    std::vector<int> order;             // vertices in non-decreasing distance
    std::vector<int> dist;
    std::vector<std::int64_t> sigma;    // shortest-path counts
};

BrandesPass brandes_bfs(const Graph& g, int s) {
    const int n = g.vertex_count();
    BrandesPass p;
    p.dist.assign(n, -1);
    p.sigma.assign(n, 0);
    p.order.reserve(n);
    std::queue<int> q;
    p.dist[s] = 0;
    p.sigma[s] = 1;
    q.push(s);
    while (!q.empty()) {
        const int v = q.front();
        q.pop();
        p.order.push_back(v);
        for (int w : g.neighbors(v)) {
            if (p.dist[w] < 0) {
                p.dist[w] = p.dist[v] + 1;
                q.push(w);
            }
            if (p.dist[w] == p.dist[v] + 1) p.sigma[w] += p.sigma[v];
        }
    }
    if (static_cast<int>(p.order.size()) != n)
        throw std::domain_error("betweenness: disconnected graph");
    return p;
}

}  // namespace

std::vector<double> vertex_betweenness(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<double> cb(n, 0.0);
    std::vector<double> delta(n);
    for (int s = 0; s < n; ++s) {
        auto p = brandes_bfs(g, s);
        std::fill(delta.begin(), delta.end(), 0.0);
        for (auto it = p.order.rbegin(); it != p.order.rend(); ++it) {
            const int w = *it;
            for (int v : g.neighbors(w)) {
                if (p.dist[v] == p.dist[w] - 1) {
                    delta[v] += static_cast<double>(p.sigma[v]) / static_cast<double>(p.sigma[w]) *
                                (1.0 + delta[w]);
                }
            }
            if (w != s) cb[w] += delta[w];
        }
    }
    return cb;
}

double vertex_betweenness_mean(const Graph& g) {
    const auto cb = vertex_betweenness(g);
    double sum = 0.0;
    for (double x : cb) sum += x;
    return sum / g.vertex_count();
}

std::vector<double> edge_betweenness(const Graph& g) {
    const int n = g.vertex_count();
    const auto edge_list = g.edges();
    // edge index lookup by (min,max) id pair
    std::vector<std::vector<std::pair<int, int>>> idx(n);  // u -> (v, edge index)
    for (std::size_t e = 0; e < edge_list.size(); ++e) {
        idx[edge_list[e].first].emplace_back(edge_list[e].second, static_cast<int>(e));
        idx[edge_list[e].second].emplace_back(edge_list[e].first, static_cast<int>(e));
    }
    auto edge_index = [&](int u, int v) {
        for (const auto& [w, e] : idx[u])
            if (w == v) return e;
        throw std::logic_error("edge_betweenness: edge lookup failed");
    };

    std::vector<double> ce(edge_list.size(), 0.0);
    std::vector<double> delta(n);
    for (int s = 0; s < n; ++s) {
        auto p = brandes_bfs(g, s);
        std::fill(delta.begin(), delta.end(), 0.0);
        for (auto it = p.order.rbegin(); it != p.order.rend(); ++it) {
            const int w = *it;
            for (int v : g.neighbors(w)) {
                if (p.dist[v] == p.dist[w] - 1) {
                    const double c = static_cast<double>(p.sigma[v]) /
                                     static_cast<double>(p.sigma[w]) * (1.0 + delta[w]);
                    ce[edge_index(v, w)] += c;
                    delta[v] += c;
                }
            }
        }
    }
    return ce;
}

double edge_betweenness_mean(const Graph& g) {
    const auto ce = edge_betweenness(g);
    double sum = 0.0;
    for (double x : ce) sum += x;
    return sum / static_cast<double>(ce.size());
}

double closeness_mean(const Graph& g) {
    const int n = g.vertex_count();
    double sum = 0.0;
    for (int v = 0; v < n; ++v) {
        const auto dist = bfs_distances(g, v);
        std::int64_t d = 0;
        for (int u = 0; u < n; ++u) {
            if (dist[u] < 0) throw std::domain_error("closeness_mean: disconnected graph");
            d += dist[u];
        }
        sum += static_cast<double>(n - 1) / static_cast<double>(d);
    }
    return sum / n;
}

double eigenvector_mean(const Graph& g, int max_iter, double tol) {
    if (!is_connected(g)) throw std::domain_error("eigenvector_mean: disconnected graph");
    const int n = g.vertex_count();
    // Iterate with A+I: keeps the Perron vector, shifts the spectrum so the
    // iteration converges on bipartite graphs too.
    std::vector<double> x(n, 1.0 / n), y(n);
    for (int it = 0; it < max_iter; ++it) {
        double norm = 0.0;
        for (int v = 0; v < n; ++v) {
            double acc = x[v];
            for (int w : g.neighbors(v)) acc += x[w];
            y[v] = acc;
            norm += acc;
        }
        double diff = 0.0;
        for (int v = 0; v < n; ++v) {
            y[v] /= norm;
            diff = std::max(diff, std::abs(y[v] - x[v]));
        }
        x.swap(y);
        if (diff < tol) {
            double sum = 0.0;
            for (double e : x) sum += e;
            return sum / n;
        }
    }
    throw std::runtime_error("eigenvector_mean: power iteration did not converge");
}

GraphMetrics measure(const Graph& g) {
    GraphMetrics m;
    m.chi = clustering_coefficient(g);
    m.mean_distance = mean_graph_distance(g);
    m.closeness_mean = closeness_mean(g);
    m.vertex_betweenness_mean = vertex_betweenness_mean(g);
    m.edge_betweenness_mean = edge_betweenness_mean(g);
    m.eigenvector_mean = eigenvector_mean(g);
    return m;
}

double population_estimate_log10(int n, LogBase base) {
    if (n < 6) throw std::domain_error("population_estimate: n must be >= 6");
    const double logn = base == LogBase::natural ? std::log(static_cast<double>(n))
                                                 : std::log10(static_cast<double>(n));
    return 6.77 + 1.56 * n - 8.93 * logn;
}

double population_estimate(int n, LogBase base) {
    return std::pow(10.0, population_estimate_log10(n, base));
}

}  // namespace regraph
