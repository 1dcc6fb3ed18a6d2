#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "equicut/graph.hpp"
#include "equicut/lp.hpp"
#include "equicut/rational.hpp"

namespace equicut {

/// Canonical bipartition of the vertex set: the stored side is the part that
/// does not contain vertex 0, so every cut appears exactly once.
struct Cut {
    uint32_t side_mask = 0;

    /// Canonicalizes an arbitrary nonempty proper subset given as a bitmask.
    static Cut canonical(uint32_t subset, int vertex_count);

    bool separates(int x, int y) const { return (((side_mask >> x) ^ (side_mask >> y)) & 1u) != 0; }
    bool contains(int x) const { return ((side_mask >> x) & 1u) != 0; }
    int side_size() const;
    std::vector<int> side_vertices() const;

    auto operator<=>(const Cut&) const = default;
};

enum class CutMode { All, EquicutOnly };

struct CutConeOptions {
    int cut_limit = 16;            // vertex limit for full cut generation
    int equicut_cut_limit = 20;    // vertex limit for equicut-only generation
    long long node_budget = 100000;
    /// Rigidity uses the per-variable range sweep up to this many cut
    /// variables; larger systems switch to a single uniqueness LP.
    int rigidity_sweep_max_cuts = 1023;
};

std::vector<Cut> generate_cuts(int vertex_count, CutMode mode, const CutConeOptions& options = {});

/// A cut decomposition of the graph metric together with the derived
/// invariants. `lambda` holds the positive multiplicities of a minimum-size
/// decomposition; `scale` is the smallest integer making this particular
/// decomposition integral (gcd-normalized).
struct EmbeddingCertificate {
    std::vector<std::pair<Cut, Rational>> lambda;
    Rational size;
    long long scale = 1;
    bool rigid = false;
    bool equicut = false;

    std::string to_json() const;
};

/// Binary v x n matrix whose Hamming distances are scale * graph distances.
class Realization {
public:
    Realization(int vertex_count, int columns, long long scale,
                std::vector<std::vector<uint8_t>> rows);

    int vertex_count() const { return v_; }
    int columns() const { return n_; }
    long long scale() const { return t_; }
    uint8_t at(int row, int col) const { return rows_[row][col]; }
    const std::vector<uint8_t>& row(int r) const { return rows_[r]; }
    int hamming(int r1, int r2) const;
    int row_sum(int r) const;
    int column_sum(int c) const;

    /// Header "v n t", then one 0/1 row per vertex.
    std::string to_text() const;
    static Realization from_text(std::istream& in);

private:
    int v_, n_;
    long long t_;
    std::vector<std::vector<uint8_t>> rows_;
};

struct ValidationReport {
    bool isometric = false;
    bool equicut_columns = false;
    std::optional<int> constant_row_sums;
};

enum class BoundSource { WienerQuotient, Diameter, DiameterOffset };

struct SizeBounds {
    Rational lower;
    Rational upper;
    BoundSource lower_source = BoundSource::WienerQuotient;
    BoundSource upper_source = BoundSource::WienerQuotient;
};

/// Caches the distance matrix, cut set, and LP state for one graph so that
/// the certificate fields can share work.
class CutConeAnalyzer {
public:
    explicit CutConeAnalyzer(const Graph& g, CutConeOptions options = {});
    ~CutConeAnalyzer();
    CutConeAnalyzer(CutConeAnalyzer&&) noexcept;

    bool is_l1();
    /// Farkas certificate over pair rows; valid when !is_l1().
    const std::vector<Rational>& infeasibility_certificate();
    Rational size();
    bool is_rigid();
    long long scale();
    bool is_equicut();
    bool equicut_feasible();
    EmbeddingCertificate certificate();
    SizeBounds bounds() const;

    const Graph& graph() const;
    const DistanceMatrix& distances() const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

std::optional<EmbeddingCertificate> l1_certificate(const Graph& g, CutConeOptions options = {});
Rational size(const Graph& g, CutConeOptions options = {});
long long scale(const Graph& g, CutConeOptions options = {});
bool is_rigid(const Graph& g, CutConeOptions options = {});
bool is_equicut(const Graph& g, CutConeOptions options = {});
/// Feasibility of the decomposition restricted to equicut cuts only; valid up
/// to the equicut generation limit even where exact size is out of reach.
bool equicut_feasible(const Graph& g, CutConeOptions options = {});
SizeBounds size_bounds(const Graph& g);

Realization realization_from_certificate(const Graph& g, const EmbeddingCertificate& cert);
ValidationReport validate_realization(const Graph& g, const Realization& r);

/// Columns replicated `factor` times: same geometry at scale factor * t.
Realization replicate_columns(const Realization& r, long long factor);
/// Realization of the Cartesian product at the lcm of the factor scales;
/// vertex (x, y) maps to row x * v(b) + y.
Realization product_realization(const Realization& a, const Realization& b);

} // namespace equicut
