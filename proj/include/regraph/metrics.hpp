#pragma once

#include <vector>

#include "regraph/graph.hpp"

namespace regraph {

struct GraphMetrics {
    double chi = 0.0;
    double mean_distance = 0.0;
    double closeness_mean = 0.0;
    double vertex_betweenness_mean = 0.0;
    double edge_betweenness_mean = 0.0;
    double eigenvector_mean = 0.0;
};

/// Average clustering coefficient: (1/n) * sum_v t_v / (k(k-1)/2), where t_v
/// counts edges among v's neighbors. Computed as one exact integer ratio so
/// the value is identical across relabelings. Requires k >= 2.
double clustering_coefficient(const Graph& g);

/// Upper bound 1 - 6/(k(k+1)) on the clustering coefficient of any connected
/// k-regular graph; attained by the cave chain.
double max_clustering(int k);

/// Average shortest-path length over unordered distinct vertex pairs.
/// Throws std::domain_error on disconnected input.
double mean_graph_distance(const Graph& g);

/// Per-vertex betweenness (Brandes), ordered source-target pairs, endpoints
/// excluded.
std::vector<double> vertex_betweenness(const Graph& g);
double vertex_betweenness_mean(const Graph& g);

/// Per-edge betweenness aligned with g.edges(); ordered pairs.
std::vector<double> edge_betweenness(const Graph& g);
double edge_betweenness_mean(const Graph& g);

/// Mean over v of (n-1) / sum_u d(v,u).
double closeness_mean(const Graph& g);

/// Mean entry of the principal eigenvector normalized to unit sum (always 1/n;
/// kept as a measurement so the claim is tested, not assumed). Power iteration
/// on A+I; throws std::runtime_error if it fails to converge within max_iter.
double eigenvector_mean(const Graph& g, int max_iter = 10000, double tol = 1e-12);

GraphMetrics measure(const Graph& g);

enum class LogBase { natural, decimal };

/// Extrapolated count of non-isomorphic connected 4-regular graphs on n
/// vertices: 10^(6.77 + 1.56 n - 8.93 log n). The natural-log reading
/// reproduces the known census counts; the decimal reading is off by many
/// orders of magnitude and is kept only for comparison.
double population_estimate(int n, LogBase base = LogBase::natural);
double population_estimate_log10(int n, LogBase base = LogBase::natural);

}  // namespace regraph
