#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "equicut/errors.hpp"

namespace equicut {

/// Simple undirected graph on dense 0-based vertex ids.
class Graph {
public:
    Graph(int vertex_count, std::vector<std::pair<int, int>> edges);

    int vertex_count() const { return v_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    /// Edges normalized to (lo, hi) and sorted.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int x) const { return adj_[x]; }
    int degree(int x) const { return static_cast<int>(adj_[x].size()); }
    bool adjacent(int x, int y) const;
    bool is_connected() const;

    bool operator==(const Graph& other) const {
        return v_ == other.v_ && edges_ == other.edges_;
    }

    /// Text format: "v m" header, then m lines "i j"; '#' comments and blank lines ignored.
    static Graph from_text(std::istream& in);
    std::string to_text() const;

private:
    int v_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
};

/// All-pairs shortest path distances of a connected graph.
class DistanceMatrix {
public:
    DistanceMatrix(int vertex_count, std::vector<int> entries);

    int vertex_count() const { return v_; }
    int at(int x, int y) const { return d_[static_cast<size_t>(x) * v_ + y]; }
    int diameter() const;
    long long wiener() const;

    /// Checks symmetry, zero diagonal, positive off-diagonal entries, the
    /// triangle inequality, and (against g) that an entry is 1 exactly for edges.
    void validate(const Graph& g) const;

private:
    int v_;
    std::vector<int> d_;
};

struct MetricSummary {
    int diameter = 0;
    long long wiener = 0;
};

DistanceMatrix distance_matrix(const Graph& g);
long long wiener(const Graph& g);
int diameter(const Graph& g);
MetricSummary metric_summary(const Graph& g);

/// True iff removing any single vertex leaves the graph connected (v >= 3).
bool is_2_connected(const Graph& g);

/// Diametral convexity: whenever d(x,z1) = d(y,z2) = D, then d(x,y) <= 2 + d(z1,z2).
bool cond_geodesic_convexity(const Graph& g);

/// Geodesic extension: every pair (x,y) lies on some geodesic of full diameter length.
bool cond_geodesic_extension(const Graph& g);

Graph cartesian_product(const Graph& a, const Graph& b);

/// Distance-preserving bijection between two graphs, if one exists.
/// Exact backtracking with invariant pruning; refuses graphs above vertex_limit.
std::optional<std::vector<int>> are_isomorphic(const Graph& a, const Graph& b,
                                               int vertex_limit = 40);

} // namespace equicut
