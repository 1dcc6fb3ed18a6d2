#include "equicut/cutcone.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <istream>
#include <numeric>
#include <sstream>

#include <json.hpp>

namespace equicut {

namespace {

inline int pair_index(int x, int y, int v) {
    // x < y
    return x * v - x * (x + 1) / 2 + (y - x - 1);
}

inline int pair_count(int v) { return v * (v - 1) / 2; }

bool is_bipartite(const Graph& g) {
    std::vector<int> color(g.vertex_count(), -1);
    std::deque<int> queue{0};
    color[0] = 0;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int w : g.neighbors(u)) {
            if (color[w] < 0) {
                color[w] = color[u] ^ 1;
                queue.push_back(w);
            } else if (color[w] == color[u]) {
                return false;
            }
        }
    }
    return true;
}

} // namespace

Cut Cut::canonical(uint32_t subset, int vertex_count) {
    if (vertex_count < 2 || vertex_count > 31)
        throw SizeLimitExceeded("cuts are represented for 2..31 vertices");
    uint32_t full = (1u << vertex_count) - 1;
    if ((subset & ~full) != 0) throw BadParameters("cut side has out-of-range vertices");
    if (subset == 0 || subset == full) throw BadParameters("cut side must be a proper nonempty subset");
    if (subset & 1u) subset = full & ~subset;
    return Cut{subset};
}

int Cut::side_size() const { return std::popcount(side_mask); }

std::vector<int> Cut::side_vertices() const {
    std::vector<int> out;
    for (int i = 0; i < 32; ++i)
        if ((side_mask >> i) & 1u) out.push_back(i);
    return out;
}

std::vector<Cut> generate_cuts(int vertex_count, CutMode mode, const CutConeOptions& options) {
    if (vertex_count < 1) throw BadParameters("vertex count must be positive");
    std::vector<Cut> cuts;
    if (vertex_count == 1) return cuts;
    if (mode == CutMode::All) {
        if (vertex_count > options.cut_limit)
            throw SizeLimitExceeded("full cut generation limited to " +
                                    std::to_string(options.cut_limit) + " vertices");
        uint32_t count = (1u << (vertex_count - 1)) - 1;
        cuts.reserve(count);
        for (uint32_t raw = 1; raw <= count; ++raw) cuts.push_back(Cut{raw << 1});
    } else {
        if (vertex_count > options.equicut_cut_limit)
            throw SizeLimitExceeded("equicut cut generation limited to " +
                                    std::to_string(options.equicut_cut_limit) + " vertices");
        uint32_t count = (1u << (vertex_count - 1)) - 1;
        int lo = vertex_count / 2, hi = (vertex_count + 1) / 2;
        for (uint32_t raw = 1; raw <= count; ++raw) {
            int size = std::popcount(raw);
            if (size == lo || size == hi) cuts.push_back(Cut{raw << 1});
        }
    }
    return cuts;
}

std::string EmbeddingCertificate::to_json() const {
    nlohmann::ordered_json j;
    j["size"] = to_string(size);
    j["scale"] = scale;
    j["rigid"] = rigid;
    j["equicut"] = equicut;
    j["cuts"] = nlohmann::ordered_json::array();
    for (const auto& [cut, value] : lambda) {
        nlohmann::ordered_json entry;
        entry["side"] = cut.side_vertices();
        entry["lambda"] = to_string(value);
        j["cuts"].push_back(entry);
    }
    return j.dump();
}

Realization::Realization(int vertex_count, int columns, long long scale,
                         std::vector<std::vector<uint8_t>> rows)
    : v_(vertex_count), n_(columns), t_(scale), rows_(std::move(rows)) {
    if (v_ <= 0 || n_ < 0 || t_ <= 0) throw BadParameters("bad realization shape");
    if (rows_.size() != static_cast<size_t>(v_)) throw DimensionMismatch("realization row count");
    for (const auto& row : rows_) {
        if (row.size() != static_cast<size_t>(n_)) throw DimensionMismatch("realization row width");
        for (uint8_t b : row)
            if (b > 1) throw BadParameters("realization entries must be 0/1");
    }
}

int Realization::hamming(int r1, int r2) const {
    int d = 0;
    const auto& a = rows_[r1];
    const auto& b = rows_[r2];
    for (int c = 0; c < n_; ++c) d += a[c] != b[c];
    return d;
}

int Realization::row_sum(int r) const {
    const auto& row = rows_[r];
    return static_cast<int>(std::count(row.begin(), row.end(), uint8_t{1}));
}

int Realization::column_sum(int c) const {
    int s = 0;
    for (int r = 0; r < v_; ++r) s += rows_[r][c];
    return s;
}

std::string Realization::to_text() const {
    std::ostringstream out;
    out << v_ << ' ' << n_ << ' ' << t_ << '\n';
    for (int r = 0; r < v_; ++r) {
        for (int c = 0; c < n_; ++c) out << char('0' + rows_[r][c]);
        out << '\n';
    }
    return out.str();
}

Realization Realization::from_text(std::istream& in) {
    long long v = 0, n = 0, t = 0;
    if (!(in >> v >> n >> t)) throw ParseError("bad realization header, expected 'v n t'");
    std::vector<std::vector<uint8_t>> rows;
    std::string line;
    std::getline(in, line);
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<uint8_t> row;
        row.reserve(line.size());
        for (char ch : line) {
            if (ch == '\r') continue;
            if (ch != '0' && ch != '1') throw ParseError("realization rows must be 0/1");
            row.push_back(static_cast<uint8_t>(ch - '0'));
        }
        rows.push_back(std::move(row));
    }
    if (rows.size() != static_cast<size_t>(v)) throw ParseError("realization row count mismatch");
    return Realization(static_cast<int>(v), static_cast<int>(n), t, std::move(rows));
}

// ---------------------------------------------------------------------------

struct CutConeAnalyzer::Impl {
    Graph g;
    CutConeOptions opt;
    DistanceMatrix dm;
    int v;
    int npairs;

    std::vector<Cut> cuts;
    std::optional<StandardFormLP> lp;
    std::optional<LpContext> ctx;
    std::optional<bool> l1;
    std::vector<Rational> farkas;
    std::optional<Rational> size_val;
    std::vector<Rational> opt_point;
    std::optional<bool> rigid_val;
    std::optional<bool> equicut_val;
    std::optional<bool> equicut_feas;
    std::optional<long long> scale_val;
    std::optional<EmbeddingCertificate> cert_val;

    Impl(const Graph& graph, CutConeOptions options)
        : g(graph), opt(options), dm(distance_matrix(graph)), v(graph.vertex_count()),
          npairs(pair_count(graph.vertex_count())) {}

    /// Equality system rows: one per vertex pair (rhs t*d), plus an optional
    /// trailing row pinning the total mass (rhs t*size).
    StandardFormLP system_for(const std::vector<Cut>& cut_set, long long t,
                              const std::optional<Rational>& total_mass) const {
        int rows = npairs + (total_mass ? 1 : 0);
        StandardFormLP sys(rows);
        for (int x = 0; x < v; ++x)
            for (int y = x + 1; y < v; ++y)
                sys.set_rhs(pair_index(x, y, v), Rational(t) * dm.at(x, y));
        if (total_mass) sys.set_rhs(npairs, Rational(t) * *total_mass);
        for (const Cut& cut : cut_set) {
            SparseColumn col;
            for (int x = 0; x < v; ++x)
                for (int y = x + 1; y < v; ++y)
                    if (cut.separates(x, y)) col.rows.push_back(pair_index(x, y, v));
            if (total_mass) col.rows.push_back(npairs);
            sys.add_column(std::move(col), Rational(1));
        }
        return sys;
    }

    void decide() {
        if (l1) return;
        if (v == 1) {
            l1 = true;
            size_val = Rational(0);
            return;
        }
        if (v > opt.cut_limit)
            throw SizeLimitExceeded("exact decomposition limited to " +
                                    std::to_string(opt.cut_limit) + " vertices");
        cuts = generate_cuts(v, CutMode::All, opt);
        lp.emplace(system_for(cuts, 1, std::nullopt));
        ctx.emplace(*lp);
        if (!ctx->feasible()) {
            l1 = false;
            farkas = ctx->farkas();
        } else {
            l1 = true;
        }
    }

    void require_l1() {
        decide();
        if (!*l1) throw NotL1Graph();
    }

    const Rational& size() {
        require_l1();
        if (!size_val) {
            LpResult res = ctx->optimize(lp->objective(), Sense::Minimize);
            if (res.status != SolveStatus::Optimal)
                throw InternalInconsistency("size LP must have an optimum");
            size_val = res.value;
            opt_point = std::move(res.point);
        }
        return *size_val;
    }

    bool rigid() {
        require_l1();
        if (rigid_val) return *rigid_val;
        if (v == 1) return *(rigid_val = true);
        size(); // pins opt_point
        if (static_cast<int>(cuts.size()) <= opt.rigidity_sweep_max_cuts) {
            rigid_val = true;
            for (int j = 0; j < static_cast<int>(cuts.size()); ++j) {
                VariableRange range = ctx->variable_range(j);
                if (!range.max || range.min != *range.max) {
                    rigid_val = false;
                    break;
                }
            }
            return *rigid_val;
        }
        // Single-LP uniqueness test: no solution may carry mass outside the
        // support of the known point, and the support columns must be
        // linearly independent.
        std::vector<char> support(cuts.size(), 0);
        for (size_t j = 0; j < cuts.size(); ++j) support[j] = opt_point[j] > 0;
        std::vector<Rational> off_support(cuts.size(), Rational(0));
        for (size_t j = 0; j < cuts.size(); ++j)
            if (!support[j]) off_support[j] = 1;
        LpResult res = ctx->optimize(off_support, Sense::Maximize);
        if (res.status != SolveStatus::Optimal || res.value > 0) {
            rigid_val = false;
            return false;
        }
        rigid_val = support_columns_independent(support);
        return *rigid_val;
    }

    bool support_columns_independent(const std::vector<char>& support) const {
        std::vector<int> sel;
        for (size_t j = 0; j < support.size(); ++j)
            if (support[j]) sel.push_back(static_cast<int>(j));
        size_t k = sel.size();
        std::vector<std::vector<Rational>> m(npairs, std::vector<Rational>(k, Rational(0)));
        for (size_t c = 0; c < k; ++c)
            for (int row : lp->column(sel[c]).rows) m[row][c] = 1;
        size_t rank = 0;
        for (size_t col = 0; col < k && rank < static_cast<size_t>(npairs); ++col) {
            size_t piv = rank;
            while (piv < m.size() && m[piv][col] == 0) ++piv;
            if (piv == m.size()) return false; // dependent column
            std::swap(m[rank], m[piv]);
            for (size_t r = 0; r < m.size(); ++r) {
                if (r == rank || m[r][col] == 0) continue;
                Rational f = m[r][col] / m[rank][col];
                for (size_t c2 = col; c2 < k; ++c2) m[r][c2] -= f * m[rank][c2];
            }
            ++rank;
        }
        return rank == k;
    }

    long long scale() {
        require_l1();
        if (scale_val) return *scale_val;
        if (v == 1) return *(scale_val = 1);
        std::vector<long long> candidates{1};
        for (long long t = 2; t <= std::max<long long>(2, v - 2); t += 2) candidates.push_back(t);
        if (rigid()) {
            size();
            for (long long t : candidates) {
                bool integral = true;
                for (const Rational& q : opt_point)
                    if (!is_integer(Rational(t) * q)) {
                        integral = false;
                        break;
                    }
                if (integral) return *(scale_val = t);
            }
            throw InternalInconsistency("rigid graph without admissible scale");
        }
        bool bip = is_bipartite(g);
        for (long long t : candidates) {
            if (t == 1 && !bip) continue; // unit-scale images live in a hypercube
            StandardFormLP sys = system_for(cuts, t, std::nullopt);
            std::optional<std::vector<Int>> point;
            try {
                point = find_integer_point(sys, opt.node_budget);
            } catch (const NodeBudgetExceeded&) {
                throw ScaleSearchInconclusive("node budget hit at scale " + std::to_string(t));
            }
            if (point) return *(scale_val = t);
        }
        throw InternalInconsistency("no admissible scale found for an l1 graph");
    }

    bool equicut_feasible_only() {
        if (equicut_feas) return *equicut_feas;
        if (v == 1) return *(equicut_feas = true);
        std::vector<Cut> ecuts = generate_cuts(v, CutMode::EquicutOnly, opt);
        StandardFormLP sys = system_for(ecuts, 1, std::nullopt);
        LpContext context(sys);
        equicut_feas = context.feasible();
        return *equicut_feas;
    }

    bool equicut() {
        require_l1();
        if (equicut_val) return *equicut_val;
        if (v == 1) return *(equicut_val = true);
        bool restricted = equicut_feasible_only();
        Rational tight = Rational(dm.wiener()) / (Rational((v + 1) / 2) * (v / 2));
        bool lemma_tight = size() == tight;
        if (restricted != lemma_tight)
            throw InternalInconsistency("equicut feasibility and size tightness disagree");
        return *(equicut_val = restricted);
    }

    EmbeddingCertificate certificate() {
        require_l1();
        if (cert_val) return *cert_val;
        EmbeddingCertificate cert;
        cert.size = size();
        cert.rigid = rigid();
        cert.equicut = equicut();
        if (v == 1) {
            cert.scale = 1;
            cert_val = cert;
            return cert;
        }
        std::vector<Int> mass(cuts.size());
        long long t_found = 0;
        if (cert.rigid) {
            Int den(1);
            for (const Rational& q : opt_point) den = lcm(den, rational_den(q));
            t_found = static_cast<long long>(den);
            for (size_t j = 0; j < cuts.size(); ++j)
                mass[j] = numerator(Rational(den) * opt_point[j]);
        } else {
            Int den(1);
            for (const Rational& q : opt_point) den = lcm(den, rational_den(q));
            long long cap = static_cast<long long>(den);
            if (cap % 2 == 1 && cap > 1) cap *= 2;
            std::vector<long long> candidates{1};
            for (long long t = 2; t <= cap; t += 2) candidates.push_back(t);
            for (long long t : candidates) {
                if (!is_integer(Rational(t) * cert.size)) continue;
                StandardFormLP sys = system_for(cuts, t, cert.size);
                std::optional<std::vector<Int>> point;
                try {
                    point = find_integer_point(sys, opt.node_budget);
                } catch (const NodeBudgetExceeded&) {
                    throw ScaleSearchInconclusive("node budget hit while building certificate");
                }
                if (point) {
                    t_found = t;
                    for (size_t j = 0; j < cuts.size(); ++j) mass[j] = (*point)[j];
                    break;
                }
            }
            if (t_found == 0)
                throw InternalInconsistency("no integral minimum-size decomposition found");
        }
        Int g = Int(t_found);
        for (const Int& m : mass) g = gcd(g, m);
        long long t_norm = static_cast<long long>(Int(t_found) / g);
        cert.scale = t_norm;
        for (size_t j = 0; j < cuts.size(); ++j)
            if (mass[j] > 0) cert.lambda.emplace_back(cuts[j], Rational(mass[j]) / t_found);
        Rational total(0);
        for (const auto& [cut, value] : cert.lambda) total += value;
        if (total != cert.size)
            throw InternalInconsistency("certificate mass does not match the size optimum");
        cert_val = cert;
        return cert;
    }

    SizeBounds bounds() const {
        SizeBounds out;
        if (v == 1) return out;
        long long w = dm.wiener();
        int diam = dm.diameter();
        Rational wq_low = Rational(w) / (Rational((v + 1) / 2) * (v / 2));
        out.lower = wq_low;
        out.lower_source = BoundSource::WienerQuotient;
        if (Rational(diam) > out.lower) {
            out.lower = diam;
            out.lower_source = BoundSource::Diameter;
        }
        out.upper = Rational(w) / (v - 1);
        out.upper_source = BoundSource::WienerQuotient;
        if (v >= 4 && Rational(diam + v - 3) < out.upper) {
            out.upper = diam + v - 3;
            out.upper_source = BoundSource::DiameterOffset;
        }
        return out;
    }
};

CutConeAnalyzer::CutConeAnalyzer(const Graph& g, CutConeOptions options)
    : impl_(std::make_unique<Impl>(g, options)) {}
CutConeAnalyzer::~CutConeAnalyzer() = default;
CutConeAnalyzer::CutConeAnalyzer(CutConeAnalyzer&&) noexcept = default;

bool CutConeAnalyzer::is_l1() {
    impl_->decide();
    return *impl_->l1;
}
const std::vector<Rational>& CutConeAnalyzer::infeasibility_certificate() {
    impl_->decide();
    if (*impl_->l1) throw InternalInconsistency("graph is l1; no infeasibility certificate");
    return impl_->farkas;
}
Rational CutConeAnalyzer::size() { return impl_->size(); }
bool CutConeAnalyzer::is_rigid() { return impl_->rigid(); }
long long CutConeAnalyzer::scale() { return impl_->scale(); }
bool CutConeAnalyzer::is_equicut() { return impl_->equicut(); }
bool CutConeAnalyzer::equicut_feasible() { return impl_->equicut_feasible_only(); }
EmbeddingCertificate CutConeAnalyzer::certificate() { return impl_->certificate(); }
SizeBounds CutConeAnalyzer::bounds() const { return impl_->bounds(); }
const Graph& CutConeAnalyzer::graph() const { return impl_->g; }
const DistanceMatrix& CutConeAnalyzer::distances() const { return impl_->dm; }

std::optional<EmbeddingCertificate> l1_certificate(const Graph& g, CutConeOptions options) {
    CutConeAnalyzer analyzer(g, options);
    if (!analyzer.is_l1()) return std::nullopt;
    return analyzer.certificate();
}

Rational size(const Graph& g, CutConeOptions options) {
    return CutConeAnalyzer(g, options).size();
}

long long scale(const Graph& g, CutConeOptions options) {
    return CutConeAnalyzer(g, options).scale();
}

bool is_rigid(const Graph& g, CutConeOptions options) {
    return CutConeAnalyzer(g, options).is_rigid();
}

bool is_equicut(const Graph& g, CutConeOptions options) {
    return CutConeAnalyzer(g, options).is_equicut();
}

bool equicut_feasible(const Graph& g, CutConeOptions options) {
    return CutConeAnalyzer(g, options).equicut_feasible();
}

SizeBounds size_bounds(const Graph& g) { return CutConeAnalyzer(g).bounds(); }

Realization realization_from_certificate(const Graph& g, const EmbeddingCertificate& cert) {
    int v = g.vertex_count();
    DistanceMatrix dm = distance_matrix(g);
    for (int x = 0; x < v; ++x)
        for (int y = x + 1; y < v; ++y) {
            Rational total(0);
            for (const auto& [cut, value] : cert.lambda)
                if (cut.separates(x, y)) total += value;
            if (total != dm.at(x, y))
                throw CertificateMismatch("certificate does not decompose this graph metric");
        }
    std::vector<std::vector<uint8_t>> rows(v);
    long long t = cert.scale;
    for (const auto& [cut, value] : cert.lambda) {
        Rational copies = Rational(t) * value;
        if (!is_integer(copies))
            throw CertificateMismatch("certificate multiplicities are not integral at its scale");
        long long k = static_cast<long long>(numerator(copies));
        for (long long c = 0; c < k; ++c)
            for (int x = 0; x < v; ++x) rows[x].push_back(cut.contains(x) ? 1 : 0);
    }
    int n = static_cast<int>(rows.empty() ? 0 : rows[0].size());
    return Realization(v, n, t, std::move(rows));
}

ValidationReport validate_realization(const Graph& g, const Realization& r) {
    if (g.vertex_count() != r.vertex_count())
        throw DimensionMismatch("realization rows vs graph vertices");
    DistanceMatrix dm = distance_matrix(g);
    int v = g.vertex_count();
    ValidationReport report;
    report.isometric = true;
    for (int x = 0; x < v && report.isometric; ++x)
        for (int y = x + 1; y < v; ++y)
            if (Rational(r.hamming(x, y)) != Rational(r.scale()) * dm.at(x, y)) {
                report.isometric = false;
                break;
            }
    report.equicut_columns = true;
    for (int c = 0; c < r.columns(); ++c) {
        int s = r.column_sum(c);
        if (s != v / 2 && s != (v + 1) / 2) {
            report.equicut_columns = false;
            break;
        }
    }
    if (v > 0) {
        int k = r.row_sum(0);
        bool constant = true;
        for (int x = 1; x < v; ++x)
            if (r.row_sum(x) != k) {
                constant = false;
                break;
            }
        if (constant) report.constant_row_sums = k;
    }
    return report;
}

Realization replicate_columns(const Realization& r, long long factor) {
    if (factor <= 0) throw BadParameters("replication factor must be positive");
    std::vector<std::vector<uint8_t>> rows(r.vertex_count());
    for (int x = 0; x < r.vertex_count(); ++x) {
        rows[x].reserve(static_cast<size_t>(r.columns()) * factor);
        for (int c = 0; c < r.columns(); ++c)
            for (long long k = 0; k < factor; ++k) rows[x].push_back(r.at(x, c));
    }
    return Realization(r.vertex_count(), static_cast<int>(r.columns() * factor),
                       r.scale() * factor, std::move(rows));
}

Realization product_realization(const Realization& a, const Realization& b) {
    long long t = std::lcm(a.scale(), b.scale());
    Realization sa = replicate_columns(a, t / a.scale());
    Realization sb = replicate_columns(b, t / b.scale());
    std::vector<std::vector<uint8_t>> rows;
    rows.reserve(static_cast<size_t>(sa.vertex_count()) * sb.vertex_count());
    for (int x = 0; x < sa.vertex_count(); ++x)
        for (int y = 0; y < sb.vertex_count(); ++y) {
            std::vector<uint8_t> row = sa.row(x);
            row.insert(row.end(), sb.row(y).begin(), sb.row(y).end());
            rows.push_back(std::move(row));
        }
    return Realization(sa.vertex_count() * sb.vertex_count(), sa.columns() + sb.columns(), t,
                       std::move(rows));
}

} // namespace equicut
