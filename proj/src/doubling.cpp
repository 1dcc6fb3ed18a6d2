#include "equicut/doubling.hpp"

#include <algorithm>

#include <json.hpp>

namespace equicut {

Graph diametral_doubling(const Graph& g) {
    DistanceMatrix dm = distance_matrix(g); // rejects disconnected input
    int v = g.vertex_count();
    int diam = dm.diameter();
    std::vector<std::pair<int, int>> edges;
    for (auto [a, b] : g.edges()) {
        edges.emplace_back(a, b);
        edges.emplace_back(v + a, v + b);
    }
    for (int x = 0; x < v; ++x)
        for (int y = 0; y < v; ++y)
            if (dm.at(x, y) == diam) {
                int a = x, b = v + y;
                if (a < b) edges.emplace_back(a, b);
            }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return Graph(2 * v, std::move(edges));
}

DoublingPreconditions doubling_preconditions(const Graph& g, CutConeOptions options) {
    DoublingPreconditions out;
    out.cond_i = cond_geodesic_convexity(g);
    out.cond_ii = cond_geodesic_extension(g);
    if (g.vertex_count() <= options.cut_limit) {
        CutConeAnalyzer analyzer(g, options);
        if (analyzer.is_l1())
            out.size_ok = analyzer.size() <= Rational(diameter(g) + 1);
    }
    return out;
}

Realization DoublingDecomposition::assembled() const {
    int v = base.vertex_count();
    int n = base.columns();
    std::vector<std::vector<uint8_t>> rows(2 * v);
    for (int x = 0; x < v; ++x) {
        rows[x].reserve(n + pad_columns);
        rows[v + x].reserve(n + pad_columns);
        for (int c = 0; c < n; ++c) {
            rows[x].push_back(base.at(x, c));
            rows[v + x].push_back(static_cast<uint8_t>(1 - base.at(x, c)));
        }
        for (int c = 0; c < pad_columns; ++c) {
            rows[x].push_back(0);
            rows[v + x].push_back(1);
        }
    }
    return Realization(2 * v, n + pad_columns, scale, std::move(rows));
}

std::string DoublingDecomposition::header_json() const {
    nlohmann::ordered_json j;
    j["base_columns"] = base.columns();
    j["pad_columns"] = pad_columns;
    j["scale"] = scale;
    return j.dump();
}

DoublingDecomposition doubling_realization(const Graph& g, const Realization& r) {
    ValidationReport check = validate_realization(g, r);
    if (!check.isometric)
        throw CertificateMismatch("realization is not isometric for the base graph");
    int diam = diameter(g);
    long long t = r.scale();
    long long width = t * (diam + 1);
    if (r.columns() > width)
        throw SizeConditionViolated("realization needs n/t <= diameter + 1");
    DoublingDecomposition out{r, static_cast<int>(width - r.columns()), t};
    Realization block = out.assembled();
    Graph doubled = diametral_doubling(g);
    ValidationReport verify = validate_realization(doubled, block);
    if (!verify.isometric)
        throw VerificationFailed("assembled block matrix does not realize the doubled graph");
    if (!verify.equicut_columns)
        throw VerificationFailed("assembled block matrix has a non-equicut column");
    return out;
}

AntipodalityReport detect_antipodal(const Graph& g) {
    DistanceMatrix dm = distance_matrix(g);
    int v = g.vertex_count();
    int diam = dm.diameter();
    AntipodalityReport report;
    if (diam == 0) return report;
    std::vector<int> antipode(v, -1);
    for (int x = 0; x < v; ++x) {
        for (int y = 0; y < v; ++y)
            if (dm.at(x, y) == diam) {
                if (antipode[x] >= 0) return report; // not unique
                antipode[x] = y;
            }
        if (antipode[x] < 0) return report;
    }
    for (int x = 0; x < v; ++x)
        if (antipode[antipode[x]] != x) return report;
    // The involution must be an automorphism.
    for (auto [a, b] : g.edges())
        if (!g.adjacent(antipode[a], antipode[b])) return report;
    report.is_antipodal = true;
    report.antipode_map = std::move(antipode);
    return report;
}

Graph diametral_switching(const Graph& g, const std::vector<int>& subset) {
    DistanceMatrix dm = distance_matrix(g);
    int v = g.vertex_count();
    int diam = dm.diameter();
    std::vector<char> in(v, 0);
    for (int x : subset) {
        if (x < 0 || x >= v) throw BadParameters("switching subset vertex out of range");
        in[x] = 1;
    }
    std::vector<std::pair<int, int>> edges;
    for (auto [a, b] : g.edges())
        if (in[a] == in[b]) edges.emplace_back(a, b);
    for (int x = 0; x < v; ++x)
        for (int y = x + 1; y < v; ++y)
            if (in[x] != in[y] && dm.at(x, y) == diam) edges.emplace_back(x, y);
    return Graph(v, std::move(edges));
}

std::vector<std::vector<int>> doubling_preimages(const Graph& g, int vertex_limit) {
    int v = g.vertex_count();
    if (v > vertex_limit)
        throw SizeLimitExceeded("preimage enumeration limited to " +
                                std::to_string(vertex_limit) + " vertices");
    std::vector<std::vector<int>> out;
    AntipodalityReport report = detect_antipodal(g);
    if (!report.is_antipodal || v % 2 != 0) return out;
    const std::vector<int>& sigma = *report.antipode_map;
    DistanceMatrix dm = distance_matrix(g);
    std::vector<std::pair<int, int>> pairs;
    for (int x = 0; x < v; ++x)
        if (x < sigma[x]) pairs.emplace_back(x, sigma[x]);
    int half = v / 2;
    for (uint64_t choice = 0; choice < (uint64_t{1} << half); ++choice) {
        std::vector<int> transversal(half);
        for (int k = 0; k < half; ++k)
            transversal[k] = (choice >> k) & 1 ? pairs[k].second : pairs[k].first;
        std::sort(transversal.begin(), transversal.end());
        std::vector<int> pos(v, -1);
        for (int k = 0; k < half; ++k) pos[transversal[k]] = k;
        std::vector<std::pair<int, int>> edges;
        for (auto [a, b] : g.edges())
            if (pos[a] >= 0 && pos[b] >= 0) edges.emplace_back(pos[a], pos[b]);
        Graph candidate(half, std::move(edges));
        if (!candidate.is_connected()) continue;
        DistanceMatrix cd = distance_matrix(candidate);
        int cdiam = cd.diameter();
        // Natural map check: cross edges of g must be exactly the diametral
        // pairs of the candidate.
        bool ok = true;
        for (int i = 0; i < half && ok; ++i)
            for (int j = 0; j < half && ok; ++j) {
                bool cross = g.adjacent(transversal[i], sigma[transversal[j]]);
                bool diametral = cd.at(i, j) == cdiam;
                if (cross != diametral) ok = false;
            }
        if (ok) out.push_back(transversal);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace equicut
