#pragma once

#include <optional>
#include <string>
#include <vector>

#include "equicut/cutcone.hpp"
#include "equicut/graph.hpp"

namespace equicut {

/// Builds a named family member. Families:
///   path(v), cycle(v), complete(v), star(v), complete_bipartite(a,b),
///   cocktail_party(s), wheel(s), ladder(2s), prism(s), antiprism(s),
///   hamming(s,q), johnson(s,t), halfcube(s), double_odd(s), petersen,
///   shrikhande, doob(a,b), octahedron, cube, tetrahedron, icosahedron,
///   dodecahedron, icosahedron_base (5-wheel), hexagon_triangles,
///   dodecahedron_base (9-cycle plus hub), k4_minus_p2, k4_minus_p3,
///   e6_diagram, e6_affine_diagram, p123452_a, p123452_b, snub24cell
Graph make_graph(const std::string& family, const std::vector<long long>& params = {});

/// CLI-facing name parser: "petersen", "c5", "k7", "k23" (complete
/// bipartite), "k13" (star), "johnson(6,3)", "hamming(3,2)", ...
Graph graph_by_name(const std::string& name);

/// Expected property record for one named graph. Absent fields mean the
/// record is silent. `verify` picks how the regression confirms the entry:
/// "lp" (exact pipeline), "pinned" (realization meets the Wiener bound),
/// "documented" (retained but not machine-checked).
struct CatalogEntry {
    std::string name;
    std::string family;                 // empty for documentation-only entries
    std::vector<long long> params;
    std::optional<long long> vertices;
    std::optional<Rational> size;
    std::optional<long long> scale;
    std::optional<bool> rigid;
    std::optional<bool> equicut;
    std::optional<bool> doubling;
    std::string verify = "lp";
    std::string note;
};

const std::vector<CatalogEntry>& catalog_entries();
CatalogEntry expected_properties(const std::string& name);

/// All connected graphs on v vertices, one per isomorphism class.
std::vector<Graph> enumerate_connected_graphs(int v);

/// All trees on v vertices, one per isomorphism class.
std::vector<Graph> enumerate_trees(int v);

/// Fixture directory: EQUICUT_FIXTURES overrides the bundled default.
std::string fixture_directory();

/// The 96x12 scale-2 realization of the snub 24-cell skeleton, rebuilt from
/// the bundled 12x48 half-matrix (the other 48 rows are complements).
Realization load_snub24cell();

/// Graph on realization rows with edges at Hamming distance exactly `scale`.
Graph unit_distance_graph(const Realization& r);

/// A natural isometric realization for families that have one in closed form
/// (subset characteristic vectors, binary words, block doublings, products).
std::optional<Realization> canonical_realization(const std::string& name);

} // namespace equicut
