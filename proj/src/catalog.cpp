#include "equicut/catalog.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "equicut/doubling.hpp"

namespace equicut {

namespace {

Graph path_graph(int v) {
    if (v < 1) throw BadParameters("path needs at least 1 vertex");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < v; ++i) edges.emplace_back(i, i + 1);
    return Graph(v, std::move(edges));
}

Graph cycle_graph(int v) {
    if (v == 2) return path_graph(2); // the census convention C_2 = K_2
    if (v < 3) throw BadParameters("cycle needs at least 3 vertices");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < v; ++i) edges.emplace_back(i, (i + 1) % v);
    return Graph(v, std::move(edges));
}

Graph complete_graph(int v) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < v; ++i)
        for (int j = i + 1; j < v; ++j) edges.emplace_back(i, j);
    return Graph(v, std::move(edges));
}

Graph star_graph(int v) {
    if (v < 2) throw BadParameters("star needs at least 2 vertices");
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < v; ++i) edges.emplace_back(0, i);
    return Graph(v, std::move(edges));
}

Graph complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw BadParameters("bipartite parts must be nonempty");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) edges.emplace_back(i, a + j);
    return Graph(a + b, std::move(edges));
}

Graph cocktail_party(int s) {
    if (s < 2) throw BadParameters("cocktail party needs at least 2 pairs");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 2 * s; ++i)
        for (int j = i + 1; j < 2 * s; ++j)
            if (!(i / 2 == j / 2)) edges.emplace_back(i, j);
    return Graph(2 * s, std::move(edges));
}

Graph wheel_graph(int s) {
    if (s < 3) throw BadParameters("wheel rim needs at least 3 vertices");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < s; ++i) {
        edges.emplace_back(i, (i + 1) % s);
        edges.emplace_back(i, s);
    }
    return Graph(s + 1, std::move(edges));
}

Graph prism_graph(int s) { return cartesian_product(cycle_graph(s), complete_graph(2)); }

Graph ladder_graph(int n) {
    if (n < 4 || n % 2 != 0) throw BadParameters("ladder is defined on an even vertex count >= 4");
    return cartesian_product(path_graph(n / 2), complete_graph(2));
}

Graph antiprism_graph(int s) {
    if (s < 3) throw BadParameters("antiprism needs rims of at least 3 vertices");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < s; ++i) {
        edges.emplace_back(i, (i + 1) % s);
        edges.emplace_back(s + i, s + (i + 1) % s);
        edges.emplace_back(i, s + i);
        edges.emplace_back((i + 1) % s, s + i);
    }
    return Graph(2 * s, std::move(edges));
}

Graph hamming_graph(int s, int q) {
    if (s < 1 || q < 2) throw BadParameters("hamming graph needs s >= 1 coordinates, alphabet >= 2");
    long long count = 1;
    for (int i = 0; i < s; ++i) {
        count *= q;
        if (count > 100000) throw BadParameters("hamming graph too large");
    }
    int v = static_cast<int>(count);
    auto digits = [&](int code) {
        std::vector<int> d(s);
        for (int i = 0; i < s; ++i) {
            d[i] = code % q;
            code /= q;
        }
        return d;
    };
    std::vector<std::pair<int, int>> edges;
    for (int x = 0; x < v; ++x) {
        std::vector<int> dx = digits(x);
        for (int y = x + 1; y < v; ++y) {
            std::vector<int> dy = digits(y);
            int diff = 0;
            for (int i = 0; i < s; ++i) diff += dx[i] != dy[i];
            if (diff == 1) edges.emplace_back(x, y);
        }
    }
    return Graph(v, std::move(edges));
}

std::vector<uint32_t> subsets_of_size(int n, int k) {
    std::vector<uint32_t> out;
    for (uint32_t mask = 0; mask < (1u << n); ++mask)
        if (std::popcount(mask) == k) out.push_back(mask);
    return out;
}

Graph johnson_graph(int s, int t) {
    if (s < 1 || t < 1 || t >= s) throw BadParameters("johnson graph needs 1 <= t < s");
    if (s > 20) throw BadParameters("johnson graph too large");
    std::vector<uint32_t> verts = subsets_of_size(s, t);
    int v = static_cast<int>(verts.size());
    std::vector<std::pair<int, int>> edges;
    for (int x = 0; x < v; ++x)
        for (int y = x + 1; y < v; ++y)
            if (std::popcount(verts[x] & verts[y]) == t - 1) edges.emplace_back(x, y);
    return Graph(v, std::move(edges));
}

std::vector<uint32_t> even_words(int s) {
    std::vector<uint32_t> verts;
    for (uint32_t w = 0; w < (1u << s); ++w)
        if (std::popcount(w) % 2 == 0) verts.push_back(w);
    return verts;
}

Graph halfcube_graph(int s) {
    if (s < 2 || s > 16) throw BadParameters("halfcube is built for 2 <= s <= 16");
    std::vector<uint32_t> verts = even_words(s);
    int v = static_cast<int>(verts.size());
    std::vector<std::pair<int, int>> edges;
    for (int x = 0; x < v; ++x)
        for (int y = x + 1; y < v; ++y)
            if (std::popcount(verts[x] ^ verts[y]) == 2) edges.emplace_back(x, y);
    return Graph(v, std::move(edges));
}

/// Vertices: s-subsets then (s+1)-subsets of a (2s+1)-set; adjacency is
/// containment.
Graph double_odd_graph(int s) {
    if (s < 1 || 2 * s + 1 > 15) throw BadParameters("double odd graph needs 1 <= s <= 7");
    int n = 2 * s + 1;
    std::vector<uint32_t> low = subsets_of_size(n, s), high = subsets_of_size(n, s + 1);
    int nl = static_cast<int>(low.size());
    std::vector<std::pair<int, int>> edges;
    for (int x = 0; x < nl; ++x)
        for (int y = 0; y < static_cast<int>(high.size()); ++y)
            if ((low[x] & ~high[y]) == 0) edges.emplace_back(x, nl + y);
    return Graph(nl + static_cast<int>(high.size()), std::move(edges));
}

Graph petersen_graph() {
    std::vector<uint32_t> verts = subsets_of_size(5, 2);
    std::vector<std::pair<int, int>> edges;
    for (int x = 0; x < 10; ++x)
        for (int y = x + 1; y < 10; ++y)
            if ((verts[x] & verts[y]) == 0) edges.emplace_back(x, y);
    return Graph(10, std::move(edges));
}

Graph shrikhande_graph() {
    auto id = [](int x, int y) { return ((x & 3) << 2) | (y & 3); };
    std::set<std::pair<int, int>> edges;
    const int deltas[6][2] = {{1, 0}, {3, 0}, {0, 1}, {0, 3}, {1, 1}, {3, 3}};
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y)
            for (const auto& d : deltas) {
                int a = id(x, y), b = id(x + d[0], y + d[1]);
                edges.insert({std::min(a, b), std::max(a, b)});
            }
    Graph g(16, {edges.begin(), edges.end()});
    // Strong regularity (16, 6, 2, 2) pins the construction.
    for (int x = 0; x < 16; ++x)
        if (g.degree(x) != 6) throw InternalInconsistency("shrikhande construction: degree");
    for (int x = 0; x < 16; ++x)
        for (int y = x + 1; y < 16; ++y) {
            int common = 0;
            for (int z = 0; z < 16; ++z)
                if (g.adjacent(x, z) && g.adjacent(y, z)) ++common;
            if (common != 2) throw InternalInconsistency("shrikhande construction: srg parameters");
        }
    return g;
}

Graph doob_graph(int a, int b) {
    if (a < 1 || b < 0) throw BadParameters("doob graph needs at least one shrikhande factor");
    long long v = 1;
    for (int i = 0; i < a; ++i) v *= 16;
    for (int i = 0; i < b; ++i) v *= 4;
    if (v > 1024) throw BadParameters("doob graph too large");
    Graph g = shrikhande_graph();
    for (int i = 1; i < a; ++i) g = cartesian_product(g, shrikhande_graph());
    for (int i = 0; i < b; ++i) g = cartesian_product(g, complete_graph(4));
    return g;
}

Graph dodecahedron_base() {
    // 9-cycle with a hub attached to every third vertex.
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 9; ++i) edges.emplace_back(i, (i + 1) % 9);
    edges.emplace_back(2, 9);
    edges.emplace_back(5, 9);
    edges.emplace_back(8, 9);
    return Graph(10, std::move(edges));
}

Graph hexagon_triangles() {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 6; ++i) edges.emplace_back(i, (i + 1) % 6);
    edges.emplace_back(1, 3);
    edges.emplace_back(1, 5);
    edges.emplace_back(3, 5);
    return Graph(6, std::move(edges));
}

/// Gyroelongated pentagonal bipyramid: two 5-rings, a zigzag belt, two apexes.
Graph icosahedron_graph() {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(5 + i, 5 + (i + 1) % 5);
        edges.emplace_back(i, 5 + i);
        edges.emplace_back((i + 1) % 5, 5 + i);
        edges.emplace_back(i, 10);
        edges.emplace_back(5 + i, 11);
    }
    return Graph(12, std::move(edges));
}

/// Generalized Petersen graph GP(10,2): outer 10-ring, spokes, inner 2-step ring.
Graph dodecahedron_graph() {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 10; ++i) {
        edges.emplace_back(i, (i + 1) % 10);
        edges.emplace_back(i, 10 + i);
        edges.emplace_back(10 + i, 10 + (i + 2) % 10);
    }
    return Graph(20, std::move(edges));
}

void expect_params(const std::vector<long long>& params, size_t n, const std::string& family) {
    if (params.size() != n)
        throw BadParameters(family + " expects " + std::to_string(n) + " parameter(s)");
}

int as_int(long long p) {
    if (p < -1000000 || p > 1000000) throw BadParameters("parameter out of range");
    return static_cast<int>(p);
}

} // namespace

Graph make_graph(const std::string& family, const std::vector<long long>& params) {
    auto p = [&](size_t i) { return as_int(params[i]); };
    if (family == "path") {
        expect_params(params, 1, family);
        return path_graph(p(0));
    }
    if (family == "cycle") {
        expect_params(params, 1, family);
        return cycle_graph(p(0));
    }
    if (family == "complete") {
        expect_params(params, 1, family);
        return complete_graph(p(0));
    }
    if (family == "star") {
        expect_params(params, 1, family);
        return star_graph(p(0));
    }
    if (family == "complete_bipartite") {
        expect_params(params, 2, family);
        return complete_bipartite(p(0), p(1));
    }
    if (family == "cocktail_party") {
        expect_params(params, 1, family);
        return cocktail_party(p(0));
    }
    if (family == "wheel") {
        expect_params(params, 1, family);
        return wheel_graph(p(0));
    }
    if (family == "ladder") {
        expect_params(params, 1, family);
        return ladder_graph(p(0));
    }
    if (family == "prism") {
        expect_params(params, 1, family);
        return prism_graph(p(0));
    }
    if (family == "antiprism") {
        expect_params(params, 1, family);
        return antiprism_graph(p(0));
    }
    if (family == "hamming") {
        expect_params(params, 2, family);
        return hamming_graph(p(0), p(1));
    }
    if (family == "johnson") {
        expect_params(params, 2, family);
        return johnson_graph(p(0), p(1));
    }
    if (family == "halfcube") {
        expect_params(params, 1, family);
        return halfcube_graph(p(0));
    }
    if (family == "double_odd") {
        expect_params(params, 1, family);
        return double_odd_graph(p(0));
    }
    if (family == "doob") {
        expect_params(params, 2, family);
        return doob_graph(p(0), p(1));
    }
    if (!params.empty()) throw BadParameters(family + " takes no parameters");
    if (family == "petersen") return petersen_graph();
    if (family == "shrikhande") return shrikhande_graph();
    if (family == "octahedron") return cocktail_party(3);
    if (family == "cube") return hamming_graph(3, 2);
    if (family == "tetrahedron") return complete_graph(4);
    if (family == "icosahedron_base") return wheel_graph(5);
    if (family == "hexagon_triangles") return hexagon_triangles();
    if (family == "dodecahedron_base") return dodecahedron_base();
    if (family == "icosahedron") return icosahedron_graph();
    if (family == "dodecahedron") return dodecahedron_graph();
    if (family == "k4_minus_p2")
        return Graph(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    if (family == "k4_minus_p3") return Graph(4, {{0, 2}, {0, 3}, {1, 3}, {2, 3}});
    if (family == "e6_diagram")
        return Graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 5}});
    if (family == "e6_affine_diagram")
        return Graph(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 5}, {5, 6}});
    if (family == "p123452_a")
        return Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {1, 4}});
    if (family == "p123452_b")
        return Graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {1, 5}});
    if (family == "snub24cell") return unit_distance_graph(load_snub24cell());
    throw UnknownFamily("unknown graph family: " + family);
}

Graph graph_by_name(const std::string& raw) {
    std::string name;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c)))
            name.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    auto open = name.find('(');
    if (open != std::string::npos) {
        if (name.back() != ')') throw ParseError("expected ')' in graph name: " + raw);
        std::string family = name.substr(0, open);
        std::string args = name.substr(open + 1, name.size() - open - 2);
        std::vector<long long> params;
        std::istringstream in(args);
        std::string tok;
        while (std::getline(in, tok, ',')) {
            try {
                params.push_back(std::stoll(tok));
            } catch (const std::exception&) {
                throw ParseError("bad parameter in graph name: " + raw);
            }
        }
        return make_graph(family, params);
    }
    // Shorthands: p5, c6, k7, k23 = complete bipartite, k13 = star.
    if (name.size() >= 2 && (name[0] == 'p' || name[0] == 'c' || name[0] == 'k') &&
        std::all_of(name.begin() + 1, name.end(),
                    [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        std::string digits = name.substr(1);
        if (name[0] == 'k' && digits.size() == 2 && digits[0] != '0' && digits[1] != '0')
            return complete_bipartite(digits[0] - '0', digits[1] - '0');
        long long n = std::stoll(digits);
        if (name[0] == 'p') return make_graph("path", {n});
        if (name[0] == 'c') return make_graph("cycle", {n});
        return make_graph("complete", {n});
    }
    return make_graph(name, {});
}

// ---------------------------------------------------------------------------

std::string fixture_directory() {
    if (const char* env = std::getenv("EQUICUT_FIXTURES")) return env;
#ifdef EQUICUT_SOURCE_DATA_DIR
    return EQUICUT_SOURCE_DATA_DIR;
#else
    return "data";
#endif
}

Realization load_snub24cell() {
    std::string path = fixture_directory() + "/snub24cell.txt";
    std::ifstream in(path);
    if (!in) throw FixtureCorrupt("cannot open fixture " + path);
    std::vector<std::string> block;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty()) continue;
        block.push_back(line);
    }
    if (block.size() != 12) throw FixtureCorrupt("fixture must have 12 rows");
    for (const std::string& row : block) {
        if (row.size() != 48) throw FixtureCorrupt("fixture rows must have 48 columns");
        for (char c : row)
            if (c != '0' && c != '1') throw FixtureCorrupt("fixture entries must be 0/1");
    }
    std::vector<std::vector<uint8_t>> rows(96, std::vector<uint8_t>(12, 0));
    for (int c = 0; c < 48; ++c)
        for (int r = 0; r < 12; ++r) {
            uint8_t bit = static_cast<uint8_t>(block[r][c] - '0');
            rows[c][r] = bit;
            rows[48 + c][r] = static_cast<uint8_t>(1 - bit);
        }
    Realization fixture(96, 12, 2, std::move(rows));
    // Self-checks; report offending pairs instead of repairing anything.
    for (int i = 0; i < 96; ++i)
        for (int j = i + 1; j < 96; ++j)
            if (fixture.hamming(i, j) == 0)
                throw FixtureCorrupt("duplicate vertex vectors " + std::to_string(i) + "," +
                                     std::to_string(j));
    for (int c = 0; c < 12; ++c)
        if (fixture.column_sum(c) != 48)
            throw FixtureCorrupt("column " + std::to_string(c) + " is unbalanced");
    for (int i = 0; i < 48; ++i)
        if (fixture.hamming(i, 48 + i) != 12)
            throw FixtureCorrupt("rows " + std::to_string(i) + "," + std::to_string(48 + i) +
                                 " are not complementary");
    Graph skeleton = unit_distance_graph(fixture);
    if (!skeleton.is_connected()) throw FixtureCorrupt("unit-distance graph is disconnected");
    DistanceMatrix dm = distance_matrix(skeleton);
    std::string bad;
    for (int i = 0; i < 96; ++i)
        for (int j = i + 1; j < 96; ++j)
            if (fixture.hamming(i, j) != 2 * dm.at(i, j)) {
                bad += (bad.empty() ? "" : " ") + std::to_string(i) + "," + std::to_string(j);
                if (bad.size() > 80) break;
            }
    if (!bad.empty()) throw FixtureCorrupt("non-isometric vertex pairs: " + bad);
    return fixture;
}

Graph unit_distance_graph(const Realization& r) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < r.vertex_count(); ++i)
        for (int j = i + 1; j < r.vertex_count(); ++j)
            if (r.hamming(i, j) == r.scale()) edges.emplace_back(i, j);
    return Graph(r.vertex_count(), std::move(edges));
}

// ---------------------------------------------------------------------------

namespace {

/// AHU canonical form of a tree, rooted at its centroid(s).
std::string ahu_rooted(const Graph& g, int root, int parent) {
    std::vector<std::string> children;
    for (int w : g.neighbors(root))
        if (w != parent) children.push_back(ahu_rooted(g, w, root));
    std::sort(children.begin(), children.end());
    std::string out = "(";
    for (const std::string& c : children) out += c;
    out += ")";
    return out;
}

std::vector<int> tree_centroids(const Graph& g) {
    int v = g.vertex_count();
    if (v == 1) return {0};
    std::vector<int> degree(v), order;
    std::vector<char> removed(v, 0);
    for (int x = 0; x < v; ++x) degree[x] = g.degree(x);
    std::vector<int> layer;
    for (int x = 0; x < v; ++x)
        if (degree[x] <= 1) layer.push_back(x);
    int remaining = v;
    while (remaining > 2) {
        std::vector<int> next;
        for (int x : layer) {
            removed[x] = 1;
            --remaining;
            for (int w : g.neighbors(x))
                if (!removed[w] && --degree[w] == 1) next.push_back(w);
        }
        layer = std::move(next);
    }
    std::vector<int> out;
    for (int x = 0; x < v; ++x)
        if (!removed[x]) out.push_back(x);
    return out;
}

std::string tree_canonical(const Graph& g) {
    std::string best;
    for (int c : tree_centroids(g)) {
        std::string s = ahu_rooted(g, c, -1);
        if (best.empty() || s < best) best = s;
    }
    return best;
}

Graph prufer_decode(int v, const std::vector<int>& seq) {
    std::vector<int> degree(v, 1);
    for (int x : seq) ++degree[x];
    std::set<int> leaves;
    for (int x = 0; x < v; ++x)
        if (degree[x] == 1) leaves.insert(x);
    std::vector<std::pair<int, int>> edges;
    for (int x : seq) {
        int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        edges.emplace_back(std::min(leaf, x), std::max(leaf, x));
        if (--degree[x] == 1) leaves.insert(x);
    }
    int a = *leaves.begin(), b = *std::next(leaves.begin());
    edges.emplace_back(std::min(a, b), std::max(a, b));
    return Graph(v, std::move(edges));
}

} // namespace

std::vector<Graph> enumerate_trees(int v) {
    if (v < 1 || v > 9) throw SizeLimitExceeded("tree enumeration limited to 9 vertices");
    if (v == 1) return {Graph(1, {})};
    if (v == 2) return {Graph(2, {{0, 1}})};
    std::vector<Graph> out;
    std::set<std::string> seen;
    std::vector<int> seq(v - 2, 0);
    for (;;) {
        Graph tree = prufer_decode(v, seq);
        if (seen.insert(tree_canonical(tree)).second) out.push_back(tree);
        int pos = v - 3;
        while (pos >= 0 && seq[pos] == v - 1) seq[pos--] = 0;
        if (pos < 0) break;
        ++seq[pos];
    }
    return out;
}

std::vector<Graph> enumerate_connected_graphs(int v) {
    if (v < 1 || v > 7) throw SizeLimitExceeded("connected enumeration limited to 7 vertices");
    if (v == 1) return {Graph(1, {})};
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < v; ++i)
        for (int j = i + 1; j < v; ++j) pairs.emplace_back(i, j);
    int np = static_cast<int>(pairs.size());
    std::vector<Graph> out;
    std::map<std::vector<int>, std::vector<size_t>> buckets;
    for (uint32_t mask = 0; mask < (1u << np); ++mask) {
        std::array<uint32_t, 7> adj{};
        for (int k = 0; k < np; ++k)
            if ((mask >> k) & 1u) {
                adj[pairs[k].first] |= 1u << pairs[k].second;
                adj[pairs[k].second] |= 1u << pairs[k].first;
            }
        uint32_t seen = 1, frontier = 1;
        while (frontier) {
            uint32_t next = 0;
            for (int x = 0; x < v; ++x)
                if ((frontier >> x) & 1u) next |= adj[x];
            frontier = next & ~seen;
            seen |= next;
        }
        if (seen != (1u << v) - 1) continue;
        // Invariant bucket: degrees and distance multiset.
        std::vector<int> key;
        for (int x = 0; x < v; ++x) key.push_back(std::popcount(adj[x]));
        std::sort(key.begin(), key.end());
        std::vector<int> dists;
        for (int s = 0; s < v; ++s) {
            std::array<int, 7> dist{};
            dist.fill(-1);
            dist[s] = 0;
            uint32_t layer = 1u << s;
            int d = 0;
            uint32_t visited = layer;
            while (layer) {
                uint32_t next = 0;
                for (int x = 0; x < v; ++x)
                    if ((layer >> x) & 1u) next |= adj[x];
                next &= ~visited;
                ++d;
                for (int x = 0; x < v; ++x)
                    if ((next >> x) & 1u) dist[x] = d;
                visited |= next;
                layer = next;
            }
            for (int x = s + 1; x < v; ++x) dists.push_back(dist[x]);
        }
        std::sort(dists.begin(), dists.end());
        key.insert(key.end(), dists.begin(), dists.end());

        std::vector<std::pair<int, int>> edges;
        for (int k = 0; k < np; ++k)
            if ((mask >> k) & 1u) edges.push_back(pairs[k]);
        Graph candidate(v, std::move(edges));
        auto& bucket = buckets[key];
        bool fresh = true;
        for (size_t idx : bucket)
            if (are_isomorphic(out[idx], candidate)) {
                fresh = false;
                break;
            }
        if (fresh) {
            bucket.push_back(out.size());
            out.push_back(std::move(candidate));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------

namespace {

CatalogEntry entry_from_json(const nlohmann::json& j) {
    CatalogEntry e;
    e.name = j.at("name").get<std::string>();
    if (j.contains("family")) e.family = j["family"].get<std::string>();
    if (j.contains("params"))
        for (const auto& p : j["params"]) e.params.push_back(p.get<long long>());
    if (j.contains("expected")) {
        const auto& x = j["expected"];
        if (x.contains("vertices")) e.vertices = x["vertices"].get<long long>();
        if (x.contains("size")) e.size = parse_rational(x["size"].get<std::string>());
        if (x.contains("scale")) e.scale = x["scale"].get<long long>();
        if (x.contains("rigid")) e.rigid = x["rigid"].get<bool>();
        if (x.contains("equicut")) e.equicut = x["equicut"].get<bool>();
        if (x.contains("doubling")) e.doubling = x["doubling"].get<bool>();
    }
    if (j.contains("verify")) e.verify = j["verify"].get<std::string>();
    if (j.contains("note")) e.note = j["note"].get<std::string>();
    return e;
}

} // namespace

const std::vector<CatalogEntry>& catalog_entries() {
    static const std::vector<CatalogEntry> entries = [] {
        std::string path = fixture_directory() + "/catalog_expected.json";
        std::ifstream in(path);
        if (!in) throw FixtureCorrupt("cannot open catalog data file " + path);
        nlohmann::json j;
        try {
            in >> j;
        } catch (const std::exception& e) {
            throw FixtureCorrupt(std::string("bad catalog data file: ") + e.what());
        }
        std::vector<CatalogEntry> out;
        for (const auto& item : j) out.push_back(entry_from_json(item));
        return out;
    }();
    return entries;
}

CatalogEntry expected_properties(const std::string& name) {
    for (const CatalogEntry& e : catalog_entries())
        if (e.name == name) return e;
    throw UnknownEntry("no catalog entry named " + name);
}

// ---------------------------------------------------------------------------

std::optional<Realization> canonical_realization(const std::string& name) {
    CatalogEntry e = expected_properties(name);
    const std::string& family = e.family;
    auto rows_from_masks = [](const std::vector<uint32_t>& masks, int width, long long t) {
        std::vector<std::vector<uint8_t>> rows;
        rows.reserve(masks.size());
        for (uint32_t m : masks) {
            std::vector<uint8_t> row(width);
            for (int c = 0; c < width; ++c) row[c] = (m >> c) & 1u;
            rows.push_back(std::move(row));
        }
        return Realization(static_cast<int>(masks.size()), width, t, std::move(rows));
    };
    if (family == "johnson") {
        int s = static_cast<int>(e.params[0]), t = static_cast<int>(e.params[1]);
        return rows_from_masks(subsets_of_size(s, t), s, 2);
    }
    if (family == "halfcube") {
        int s = static_cast<int>(e.params[0]);
        return rows_from_masks(even_words(s), s, 2);
    }
    if (family == "double_odd") {
        int s = static_cast<int>(e.params[0]);
        int n = 2 * s + 1;
        std::vector<uint32_t> masks = subsets_of_size(n, s);
        std::vector<uint32_t> high = subsets_of_size(n, s + 1);
        masks.insert(masks.end(), high.begin(), high.end());
        return rows_from_masks(masks, n, 1);
    }
    if (family == "hamming" && e.params[1] == 2) {
        int s = static_cast<int>(e.params[0]);
        std::vector<uint32_t> masks;
        for (uint32_t w = 0; w < (1u << s); ++w) masks.push_back(w);
        return rows_from_masks(masks, s, 1);
    }
    if (family == "icosahedron" || family == "dodecahedron") {
        Graph base = make_graph(family == "icosahedron" ? "icosahedron_base" : "dodecahedron_base");
        CutConeAnalyzer analyzer(base);
        Realization r = realization_from_certificate(base, analyzer.certificate());
        return doubling_realization(base, r).assembled();
    }
    if (family == "doob") {
        int a = static_cast<int>(e.params[0]), b = static_cast<int>(e.params[1]);
        Graph shr = make_graph("shrikhande");
        CutConeAnalyzer sa(shr);
        Realization rs = realization_from_certificate(shr, sa.certificate());
        Graph k4 = make_graph("complete", {4});
        CutConeAnalyzer ka(k4);
        Realization rk = realization_from_certificate(k4, ka.certificate());
        std::optional<Realization> acc;
        for (int i = 0; i < a; ++i) acc = acc ? product_realization(*acc, rs) : rs;
        for (int i = 0; i < b; ++i) acc = acc ? product_realization(*acc, rk) : rk;
        return acc;
    }
    if (family == "snub24cell") return load_snub24cell();
    return std::nullopt;
}

} // namespace equicut
