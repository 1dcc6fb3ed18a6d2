#pragma once

#include <optional>
#include <vector>

#include "equicut/cutcone.hpp"
#include "equicut/graph.hpp"

namespace equicut {

/// Two copies V+ and V- of the vertex set; same-copy pairs keep the original
/// adjacency, cross-copy pairs are adjacent exactly at full diameter.
/// Vertex x maps to x (plus copy) and v + x (minus copy).
Graph diametral_doubling(const Graph& g);

struct DoublingPreconditions {
    bool cond_i = false;              // diametral convexity
    bool cond_ii = false;             // geodesic extension
    std::optional<bool> size_ok;      // size <= diameter + 1; absent when unavailable
};

DoublingPreconditions doubling_preconditions(const Graph& g, CutConeOptions options = {});

/// Block form (A O; J-A J') assembled from a realization A of the base graph.
struct DoublingDecomposition {
    Realization base;
    int pad_columns = 0;
    long long scale = 1;

    /// The assembled 2v x (n + pad) matrix.
    Realization assembled() const;
    std::string header_json() const;
};

/// Builds and fully verifies the block realization of the doubled graph.
/// Requires an isometric realization of g with n/t <= D(g) + 1.
DoublingDecomposition doubling_realization(const Graph& g, const Realization& r);

struct AntipodalityReport {
    bool is_antipodal = false;
    std::optional<std::vector<int>> antipode_map;
};

/// True iff every vertex has a unique vertex at full diameter and the induced
/// involution is an automorphism.
AntipodalityReport detect_antipodal(const Graph& g);

/// Keeps edges inside the subset and inside its complement; crossing edges are
/// replaced by crossing pairs at full diameter.
Graph diametral_switching(const Graph& g, const std::vector<int>& subset);

/// For an antipodal graph: all transversals (one vertex per antipodal pair)
/// whose induced subgraph doubles back to g under the natural map. Brute
/// force, limited to small orders.
std::vector<std::vector<int>> doubling_preimages(const Graph& g, int vertex_limit = 24);

} // namespace equicut
