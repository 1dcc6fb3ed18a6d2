#include "equicut/graph.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <numeric>
#include <sstream>

namespace equicut {

Graph::Graph(int vertex_count, std::vector<std::pair<int, int>> edges) : v_(vertex_count) {
    if (v_ <= 0) throw BadParameters("vertex count must be positive");
    for (auto& [a, b] : edges) {
        if (a < 0 || b < 0 || a >= v_ || b >= v_)
            throw BadParameters("edge endpoint out of range");
        if (a == b) throw BadParameters("loops are not allowed");
        if (a > b) std::swap(a, b);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw BadParameters("duplicate edge");
    edges_ = std::move(edges);
    adj_.assign(v_, {});
    for (auto [a, b] : edges_) {
        adj_[a].push_back(b);
        adj_[b].push_back(a);
    }
    for (auto& row : adj_) std::sort(row.begin(), row.end());
}

bool Graph::adjacent(int x, int y) const {
    const auto& row = adj_[x];
    return std::binary_search(row.begin(), row.end(), y);
}

bool Graph::is_connected() const {
    std::vector<char> seen(v_, 0);
    std::deque<int> queue{0};
    seen[0] = 1;
    int count = 1;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int w : adj_[u])
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                queue.push_back(w);
            }
    }
    return count == v_;
}

Graph Graph::from_text(std::istream& in) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        lines.push_back(line);
    }
    if (lines.empty()) throw ParseError("empty graph file");
    std::istringstream head(lines[0]);
    long long v = 0, m = 0;
    if (!(head >> v >> m)) throw ParseError("bad header line, expected 'v m'");
    if (v <= 0 || m < 0) throw ParseError("bad header values");
    if (static_cast<long long>(lines.size()) != m + 1)
        throw ParseError("expected " + std::to_string(m) + " edge lines");
    std::vector<std::pair<int, int>> edges;
    for (long long k = 1; k <= m; ++k) {
        std::istringstream e(lines[static_cast<size_t>(k)]);
        long long i = 0, j = 0;
        if (!(e >> i >> j)) throw ParseError("bad edge line: " + lines[static_cast<size_t>(k)]);
        if (!(0 <= i && i < j && j < v)) throw ParseError("edge must satisfy 0 <= i < j < v");
        edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
    try {
        return Graph(static_cast<int>(v), std::move(edges));
    } catch (const BadParameters& e) {
        throw ParseError(e.what());
    }
}

std::string Graph::to_text() const {
    std::ostringstream out;
    out << v_ << ' ' << edges_.size() << '\n';
    for (auto [a, b] : edges_) out << a << ' ' << b << '\n';
    return out.str();
}

namespace {

std::vector<int> bfs_row(const Graph& g, int source) {
    std::vector<int> dist(g.vertex_count(), -1);
    std::deque<int> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int w : g.neighbors(u))
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
    }
    return dist;
}

} // namespace

DistanceMatrix::DistanceMatrix(int vertex_count, std::vector<int> entries)
    : v_(vertex_count), d_(std::move(entries)) {
    if (d_.size() != static_cast<size_t>(v_) * v_)
        throw DimensionMismatch("distance matrix entry count");
}

int DistanceMatrix::diameter() const { return *std::max_element(d_.begin(), d_.end()); }

long long DistanceMatrix::wiener() const {
    long long total = std::accumulate(d_.begin(), d_.end(), 0LL);
    return total / 2;
}

void DistanceMatrix::validate(const Graph& g) const {
    if (g.vertex_count() != v_) throw DimensionMismatch("distance matrix vs graph");
    for (int x = 0; x < v_; ++x) {
        if (at(x, x) != 0) throw InternalInconsistency("nonzero diagonal");
        for (int y = 0; y < v_; ++y) {
            if (at(x, y) != at(y, x)) throw InternalInconsistency("asymmetric distances");
            if (x != y && at(x, y) <= 0) throw InternalInconsistency("nonpositive distance");
            if (x != y && (at(x, y) == 1) != g.adjacent(x, y))
                throw InternalInconsistency("unit distance must mean adjacency");
        }
    }
    for (int x = 0; x < v_; ++x)
        for (int y = 0; y < v_; ++y)
            for (int z = 0; z < v_; ++z)
                if (at(x, y) > at(x, z) + at(z, y))
                    throw InternalInconsistency("triangle inequality violated");
}

DistanceMatrix distance_matrix(const Graph& g) {
    int v = g.vertex_count();
    std::vector<int> entries(static_cast<size_t>(v) * v, 0);
    for (int s = 0; s < v; ++s) {
        std::vector<int> row = bfs_row(g, s);
        for (int t = 0; t < v; ++t) {
            if (row[t] < 0) throw DisconnectedGraph();
            entries[static_cast<size_t>(s) * v + t] = row[t];
        }
    }
    return DistanceMatrix(v, std::move(entries));
}

long long wiener(const Graph& g) { return distance_matrix(g).wiener(); }

int diameter(const Graph& g) { return distance_matrix(g).diameter(); }

MetricSummary metric_summary(const Graph& g) {
    DistanceMatrix dm = distance_matrix(g);
    return MetricSummary{dm.diameter(), dm.wiener()};
}

bool is_2_connected(const Graph& g) {
    if (!g.is_connected()) throw DisconnectedGraph();
    int v = g.vertex_count();
    if (v < 3) throw TooSmall("2-connectivity needs at least 3 vertices");
    for (int removed = 0; removed < v; ++removed) {
        int start = removed == 0 ? 1 : 0;
        std::vector<char> seen(v, 0);
        seen[removed] = 1;
        seen[start] = 1;
        std::deque<int> queue{start};
        int count = 1;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int w : g.neighbors(u))
                if (!seen[w]) {
                    seen[w] = 1;
                    ++count;
                    queue.push_back(w);
                }
        }
        if (count != v - 1) return false;
    }
    return true;
}

bool cond_geodesic_convexity(const Graph& g) {
    DistanceMatrix dm = distance_matrix(g);
    int v = g.vertex_count();
    int diam = dm.diameter();
    // Collect, per vertex, the vertices at full diameter from it.
    std::vector<std::vector<int>> far(v);
    for (int x = 0; x < v; ++x)
        for (int z = 0; z < v; ++z)
            if (dm.at(x, z) == diam) far[x].push_back(z);
    for (int x = 0; x < v; ++x)
        for (int y = 0; y < v; ++y) {
            if (dm.at(x, y) <= 2) continue;
            for (int z1 : far[x])
                for (int z2 : far[y])
                    if (dm.at(x, y) > 2 + dm.at(z1, z2)) return false;
        }
    return true;
}

bool cond_geodesic_extension(const Graph& g) {
    DistanceMatrix dm = distance_matrix(g);
    int v = g.vertex_count();
    int diam = dm.diameter();
    for (int x = 0; x < v; ++x)
        for (int y = x; y < v; ++y) {
            bool extended = false;
            for (int z1 = 0; z1 < v && !extended; ++z1) {
                int head = dm.at(z1, x) + dm.at(x, y);
                if (head > diam) continue;
                for (int z2 = 0; z2 < v; ++z2)
                    if (dm.at(z1, z2) == diam && head + dm.at(y, z2) == diam) {
                        extended = true;
                        break;
                    }
            }
            if (!extended) return false;
        }
    return true;
}

Graph cartesian_product(const Graph& a, const Graph& b) {
    if (!a.is_connected() || !b.is_connected()) throw DisconnectedGraph();
    int va = a.vertex_count(), vb = b.vertex_count();
    auto id = [vb](int x, int y) { return x * vb + y; };
    std::vector<std::pair<int, int>> edges;
    for (int x = 0; x < va; ++x)
        for (auto [y1, y2] : b.edges()) edges.emplace_back(id(x, y1), id(x, y2));
    for (auto [x1, x2] : a.edges())
        for (int y = 0; y < vb; ++y) edges.emplace_back(id(x1, y), id(x2, y));
    return Graph(va * vb, std::move(edges));
}

namespace {

/// Per-vertex invariant: degree, triangle count, sorted distance profile.
struct VertexKey {
    int degree = 0;
    int triangles = 0;
    std::vector<int> profile;
    bool operator==(const VertexKey&) const = default;
};

std::vector<VertexKey> vertex_keys(const Graph& g, const DistanceMatrix& dm) {
    int v = g.vertex_count();
    std::vector<VertexKey> keys(v);
    for (int x = 0; x < v; ++x) {
        keys[x].degree = g.degree(x);
        for (int p : g.neighbors(x))
            for (int q : g.neighbors(x))
                if (p < q && g.adjacent(p, q)) ++keys[x].triangles;
        keys[x].profile.assign(v, 0);
        for (int y = 0; y < v; ++y) keys[x].profile[y] = dm.at(x, y);
        std::sort(keys[x].profile.begin(), keys[x].profile.end());
    }
    return keys;
}

} // namespace

std::optional<std::vector<int>> are_isomorphic(const Graph& a, const Graph& b, int vertex_limit) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
        return std::nullopt;
    int v = a.vertex_count();
    if (v > vertex_limit)
        throw SizeLimitExceeded("isomorphism search limited to " + std::to_string(vertex_limit) +
                                " vertices");
    if (!a.is_connected() || !b.is_connected()) {
        if (a.is_connected() != b.is_connected()) return std::nullopt;
        throw BadParameters("isomorphism search expects connected graphs");
    }
    DistanceMatrix da = distance_matrix(a), db = distance_matrix(b);
    std::vector<VertexKey> ka = vertex_keys(a, da), kb = vertex_keys(b, db);
    {
        auto sa = ka, sb = kb;
        auto lt = [](const VertexKey& l, const VertexKey& r) {
            return std::tie(l.degree, l.triangles, l.profile) <
                   std::tie(r.degree, r.triangles, r.profile);
        };
        std::sort(sa.begin(), sa.end(), lt);
        std::sort(sb.begin(), sb.end(), lt);
        if (sa != sb) return std::nullopt;
    }

    std::vector<int> map(v, -1), used(v, 0), order;
    // Order source vertices so each one touches the already-mapped prefix.
    {
        std::vector<char> placed(v, 0);
        order.push_back(0);
        placed[0] = 1;
        while (static_cast<int>(order.size()) < v) {
            int best = -1, best_links = -1;
            for (int x = 0; x < v; ++x) {
                if (placed[x]) continue;
                int links = 0;
                for (int y : order)
                    if (a.adjacent(x, y)) ++links;
                if (links > best_links) {
                    best_links = links;
                    best = x;
                }
            }
            order.push_back(best);
            placed[best] = 1;
        }
    }

    auto extend = [&](auto&& self, size_t depth) -> bool {
        if (depth == order.size()) return true;
        int x = order[depth];
        for (int w = 0; w < v; ++w) {
            if (used[w] || !(ka[x] == kb[w])) continue;
            bool ok = true;
            for (size_t k = 0; k < depth && ok; ++k) {
                int y = order[k];
                if (da.at(x, y) != db.at(w, map[y])) ok = false;
            }
            if (!ok) continue;
            map[x] = w;
            used[w] = 1;
            if (self(self, depth + 1)) return true;
            map[x] = -1;
            used[w] = 0;
        }
        return false;
    };
    if (extend(extend, 0)) return map;
    return std::nullopt;
}

} // namespace equicut
