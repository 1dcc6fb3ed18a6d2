#pragma once

#include <optional>
#include <string>
#include <vector>

#include "equicut/catalog.hpp"
#include "equicut/cutcone.hpp"
#include "equicut/doubling.hpp"
#include "equicut/graph.hpp"

namespace equicut {

struct AnalysisReport {
    int vertices = 0;
    int edge_count = 0;
    int diameter = 0;
    long long wiener = 0;
    bool is_l1 = false;
    std::optional<Rational> size;
    std::optional<long long> scale;
    std::optional<bool> rigid;
    std::optional<bool> equicut;
    std::optional<bool> antipodal;
    SizeBounds bounds;
    DoublingPreconditions conditions;
    std::vector<Rational> infeasibility; // per-pair Farkas certificate when not l1
    std::vector<std::string> notes;      // reasons for absent fields
    bool limited = false;                // cut-generation limit prevented LP fields

    std::string to_json() const;
    std::string to_text() const;
};

AnalysisReport analyze(const Graph& g, CutConeOptions options = {});

/// True iff the graph is an antipodal doubling: equicut, centrally symmetric,
/// and large enough to split in halves.
bool is_antipodal_doubling(const Graph& g, bool equicut_flag);

/// One comparison row of the regression table.
struct CatalogCheck {
    std::string entry;
    std::string property;
    std::string expected;
    std::string computed;
    std::string status; // "pass", "fail", "documented"

    bool failed() const { return status == "fail"; }
};

std::vector<CatalogCheck> verify_catalog_entry(const CatalogEntry& entry,
                                               CutConeOptions options = {});

/// The small-graph census: all connected graphs on 2..6 vertices classified
/// into equicut / non-rigid / antipodal-doubling sets.
std::vector<CatalogCheck> verify_census6(CutConeOptions options = {});

/// The doubling identity list (paths, complete graphs, cycles, ladders,
/// Petersen, Shrikhande, wheels, cubes, the dodecahedral base).
std::vector<CatalogCheck> verify_doubling_identities();

} // namespace equicut
