#include "equicut/lp.hpp"

#include <algorithm>
#include <cassert>

namespace equicut {

int StandardFormLP::add_column(SparseColumn col, Rational objective_coefficient) {
    if (!std::is_sorted(col.rows.begin(), col.rows.end()) ||
        std::adjacent_find(col.rows.begin(), col.rows.end()) != col.rows.end())
        throw DimensionMismatch("column rows must be sorted and unique");
    if (!col.rows.empty() && (col.rows.front() < 0 || col.rows.back() >= rows_))
        throw DimensionMismatch("column row index out of range");
    if (!col.values.empty() && col.values.size() != col.rows.size())
        throw DimensionMismatch("column values size");
    cols_.push_back(std::move(col));
    objective_.push_back(std::move(objective_coefficient));
    return static_cast<int>(cols_.size()) - 1;
}

void StandardFormLP::set_rhs(int row, Rational value) {
    if (row < 0 || row >= rows_) throw DimensionMismatch("rhs row out of range");
    rhs_values_[row] = std::move(value);
}

namespace {

/// Extra row "x_var <= bound" (slack +1) or "x_var >= bound" (slack -1),
/// appended below the base system during branch and bound.
struct BoundRow {
    int var = 0;
    bool is_upper = true;
    Int bound;
};

constexpr int kArtificialMark = -1;

/// Exact two-phase simplex with a dense basis inverse. Rows of the base
/// system may be dependent; redundant rows end up parked behind zero-level
/// artificials and are dropped from ratio tests.
class Simplex {
public:
    Simplex(const StandardFormLP& lp, const std::vector<BoundRow>& bounds, LpOptions options)
        : lp_(lp), bounds_(bounds) {
        m_ = lp.num_rows() + static_cast<int>(bounds.size());
        nstruct_ = lp.num_vars() + static_cast<int>(bounds.size());
        dantzig_left_ = options.dantzig_pivots >= 0
                            ? options.dantzig_pivots
                            : (nstruct_ <= 4096 ? 1000 : 8);
        row_sign_.assign(m_, 1);
        rhs_.resize(m_);
        for (int r = 0; r < m_; ++r) {
            Rational b = base_rhs(r);
            if (b < 0) {
                row_sign_[r] = -1;
                b = -b;
            }
            rhs_[r] = b;
        }
        basis_.resize(m_);
        in_basis_.assign(nstruct_, 0);
        live_row_.assign(m_, 1);
        binv_.assign(static_cast<size_t>(m_) * m_, Rational(0));
        for (int r = 0; r < m_; ++r) binv_[idx(r, r)] = 1;
        xb_ = rhs_;
        for (int r = 0; r < m_; ++r) basis_[r] = nstruct_ + r; // artificial basis
        run_phase1();
    }

    bool feasible() const { return feasible_; }
    const std::vector<Rational>& farkas() const { return farkas_; }

    std::vector<Rational> point() const {
        std::vector<Rational> x(lp_.num_vars(), Rational(0));
        for (int r = 0; r < m_; ++r)
            if (basis_[r] < lp_.num_vars()) x[basis_[r]] = xb_[r];
        return x;
    }

    /// Minimizes `costs` (over structural variables) from the current basis.
    /// Returns false when unbounded.
    bool minimize(const std::vector<Rational>& costs) {
        assert(feasible_);
        phase_costs_ = &costs;
        phase1_ = false;
        return iterate();
    }

    Rational objective_value(const std::vector<Rational>& costs) const {
        Rational total(0);
        for (int r = 0; r < m_; ++r)
            if (basis_[r] < nstruct_) total += cost_of(costs, basis_[r]) * xb_[r];
        return total;
    }

private:
    size_t idx(int r, int c) const { return static_cast<size_t>(r) * m_ + c; }

    Rational base_rhs(int r) const {
        if (r < lp_.num_rows()) return lp_.rhs(r);
        return Rational(bounds_[r - lp_.num_rows()].bound);
    }

    static Rational cost_of(const std::vector<Rational>& costs, int j) {
        return j < static_cast<int>(costs.size()) ? costs[j] : Rational(0);
    }

    /// Applies f(row, value) over the sign-adjusted entries of column j.
    template <typename F>
    void for_entries(int j, F&& f) const {
        if (j < lp_.num_vars()) {
            const SparseColumn& col = lp_.column(j);
            if (col.values.empty()) {
                for (size_t k = 0; k < col.rows.size(); ++k)
                    f(col.rows[k], Rational(row_sign_[col.rows[k]]));
            } else {
                for (size_t k = 0; k < col.rows.size(); ++k)
                    f(col.rows[k], row_sign_[col.rows[k]] > 0 ? col.values[k] : -col.values[k]);
            }
            for (size_t bi = 0; bi < bounds_.size(); ++bi)
                if (bounds_[bi].var == j) {
                    int r = lp_.num_rows() + static_cast<int>(bi);
                    f(r, Rational(row_sign_[r]));
                }
        } else {
            // slack of bound row j - lp_.num_vars()
            size_t bi = static_cast<size_t>(j - lp_.num_vars());
            int r = lp_.num_rows() + static_cast<int>(bi);
            int s = bounds_[bi].is_upper ? 1 : -1;
            f(r, Rational(s * row_sign_[r]));
        }
    }

    std::vector<Rational> duals() const {
        std::vector<Rational> y(m_, Rational(0));
        for (int i = 0; i < m_; ++i) {
            Rational c = basis_[i] >= nstruct_ ? (phase1_ ? Rational(1) : Rational(0))
                                               : cost_of(*phase_costs_, basis_[i]);
            if (c == 0) continue;
            const Rational* row = &binv_[idx(i, 0)];
            for (int r = 0; r < m_; ++r)
                if (row[r] != 0) y[r] += c * row[r];
        }
        return y;
    }

    Rational reduced_cost(int j, const std::vector<Rational>& y) const {
        Rational rc = phase1_ ? Rational(0) : cost_of(*phase_costs_, j);
        for_entries(j, [&](int r, const Rational& a) {
            if (y[r] != 0) rc -= y[r] * a;
        });
        return rc;
    }

    void pivot(int leave_row, int enter, const std::vector<Rational>& w) {
        const Rational piv = w[leave_row];
        assert(piv != 0);
        Rational* lr = &binv_[idx(leave_row, 0)];
        for (int c = 0; c < m_; ++c) lr[c] /= piv;
        Rational theta = xb_[leave_row] / piv;
        for (int i = 0; i < m_; ++i) {
            if (i == leave_row || w[i] == 0) continue;
            Rational* ir = &binv_[idx(i, 0)];
            for (int c = 0; c < m_; ++c)
                if (lr[c] != 0) ir[c] -= w[i] * lr[c];
            xb_[i] -= w[i] * theta;
        }
        xb_[leave_row] = theta;
        if (basis_[leave_row] < nstruct_) in_basis_[basis_[leave_row]] = 0;
        basis_[leave_row] = enter;
        in_basis_[enter] = 1;
    }

    /// Bland-style leaving choice; returns -1 when no row blocks (unbounded).
    int choose_leaving(const std::vector<Rational>& w) const {
        int leave = -1;
        Rational best;
        for (int i = 0; i < m_; ++i) {
            if (!live_row_[i]) continue;
            bool eligible = w[i] > 0;
            if (!phase1_ && basis_[i] >= nstruct_ && w[i] != 0) eligible = true;
            if (!eligible) continue;
            Rational ratio = basis_[i] >= nstruct_ && w[i] < 0 ? Rational(0) : xb_[i] / w[i];
            if (leave < 0 || ratio < best ||
                (ratio == best && basis_[i] < basis_[leave])) {
                best = ratio;
                leave = i;
            }
        }
        return leave;
    }

    int price(const std::vector<Rational>& y) {
        bool dantzig = dantzig_left_ > 0;
        int pick = -1;
        Rational best(0);
        for (int j = 0; j < nstruct_; ++j) {
            if (in_basis_[j]) continue;
            Rational rc = reduced_cost(j, y);
            if (rc < 0) {
                if (!dantzig) return j; // Bland: first improving index
                if (pick < 0 || rc < best) {
                    best = rc;
                    pick = j;
                }
            }
        }
        return pick;
    }

    bool iterate() {
        std::vector<Rational> w(m_);
        for (;;) {
            std::vector<Rational> y = duals();
            int enter = price(y);
            if (enter < 0) return true; // optimal
            if (dantzig_left_ > 0) --dantzig_left_;
            for (int i = 0; i < m_; ++i) w[i] = 0;
            for_entries(enter, [&](int r, const Rational& a) {
                for (int i = 0; i < m_; ++i) {
                    const Rational& b = binv_[idx(i, r)];
                    if (b != 0) w[i] += b * a;
                }
            });
            int leave = choose_leaving(w);
            if (leave < 0) {
                if (phase1_) throw InternalInconsistency("phase 1 cannot be unbounded");
                return false; // unbounded objective
            }
            pivot(leave, enter, w);
        }
    }

    void run_phase1() {
        phase1_ = true;
        static const std::vector<Rational> kNoCosts;
        phase_costs_ = &kNoCosts;
        iterate();
        Rational infeas(0);
        for (int r = 0; r < m_; ++r)
            if (basis_[r] >= nstruct_) infeas += xb_[r];
        if (infeas > 0) {
            feasible_ = false;
            std::vector<Rational> y = duals();
            farkas_.assign(lp_.num_rows(), Rational(0));
            for (int r = 0; r < lp_.num_rows(); ++r)
                farkas_[r] = row_sign_[r] > 0 ? y[r] : -y[r];
            return;
        }
        feasible_ = true;
        purge_artificials();
    }

    /// Pivots zero-level artificials out of the basis where possible; rows
    /// that cannot be cleared are redundant and go dead.
    void purge_artificials() {
        std::vector<Rational> w(m_);
        for (int r = 0; r < m_; ++r) {
            if (basis_[r] < nstruct_) continue;
            int enter = -1;
            for (int j = 0; j < nstruct_ && enter < 0; ++j) {
                if (in_basis_[j]) continue;
                Rational entry(0);
                for_entries(j, [&](int row, const Rational& a) {
                    const Rational& b = binv_[idx(r, row)];
                    if (b != 0) entry += b * a;
                });
                if (entry != 0) enter = j;
            }
            if (enter < 0) {
                live_row_[r] = 0;
                continue;
            }
            for (int i = 0; i < m_; ++i) w[i] = 0;
            for_entries(enter, [&](int row, const Rational& a) {
                for (int i = 0; i < m_; ++i) {
                    const Rational& b = binv_[idx(i, row)];
                    if (b != 0) w[i] += b * a;
                }
            });
            pivot(r, enter, w);
        }
    }

    const StandardFormLP& lp_;
    const std::vector<BoundRow>& bounds_;
    int m_ = 0;
    int nstruct_ = 0;
    int dantzig_left_ = 0;
    bool phase1_ = true;
    bool feasible_ = false;
    const std::vector<Rational>* phase_costs_ = nullptr;
    std::vector<int8_t> row_sign_;
    std::vector<Rational> rhs_;
    std::vector<Rational> binv_;
    std::vector<Rational> xb_;
    std::vector<int> basis_;
    std::vector<int8_t> in_basis_;
    std::vector<int8_t> live_row_;
    std::vector<Rational> farkas_;
};

const std::vector<BoundRow> kNoBounds;

} // namespace

struct LpContext::Impl {
    Impl(const StandardFormLP& lp, LpOptions options) : simplex(lp, kNoBounds, options), n(lp.num_vars()) {}
    Simplex simplex;
    int n;
};

LpContext::LpContext(const StandardFormLP& lp, LpOptions options)
    : impl_(std::make_unique<Impl>(lp, options)) {}
LpContext::~LpContext() = default;
LpContext::LpContext(LpContext&&) noexcept = default;
LpContext& LpContext::operator=(LpContext&&) noexcept = default;

bool LpContext::feasible() const { return impl_->simplex.feasible(); }

const std::vector<Rational>& LpContext::farkas() const { return impl_->simplex.farkas(); }

std::vector<Rational> LpContext::current_point() const { return impl_->simplex.point(); }

LpResult LpContext::optimize(const std::vector<Rational>& objective, Sense sense) {
    LpResult result;
    if (!impl_->simplex.feasible()) {
        result.status = SolveStatus::Infeasible;
        result.farkas = impl_->simplex.farkas();
        return result;
    }
    std::vector<Rational> costs = objective;
    costs.resize(impl_->n, Rational(0));
    if (sense == Sense::Maximize)
        for (Rational& c : costs) c = -c;
    if (!impl_->simplex.minimize(costs)) {
        result.status = SolveStatus::Unbounded;
        return result;
    }
    result.status = SolveStatus::Optimal;
    result.value = impl_->simplex.objective_value(costs);
    if (sense == Sense::Maximize) result.value = -result.value;
    result.point = impl_->simplex.point();
    return result;
}

VariableRange LpContext::variable_range(int var) {
    if (var < 0 || var >= impl_->n) throw DimensionMismatch("variable index out of range");
    if (!feasible()) throw InfeasibleSystem();
    std::vector<Rational> unit(impl_->n, Rational(0));
    unit[var] = 1;
    LpResult lo = optimize(unit, Sense::Minimize);
    VariableRange range;
    range.min = lo.value;
    LpResult hi = optimize(unit, Sense::Maximize);
    if (hi.status == SolveStatus::Optimal) range.max = hi.value;
    return range;
}

LpResult solve_lp(const StandardFormLP& lp, Sense sense, LpOptions options) {
    if (lp.objective().size() != static_cast<size_t>(lp.num_vars()))
        throw DimensionMismatch("objective size");
    LpContext context(lp, options);
    if (!context.feasible()) {
        LpResult result;
        result.status = SolveStatus::Infeasible;
        result.farkas = context.farkas();
        return result;
    }
    return context.optimize(lp.objective(), sense);
}

VariableRange variable_range(const StandardFormLP& lp, int var, LpOptions options) {
    LpContext context(lp, options);
    if (!context.feasible()) throw InfeasibleSystem();
    return context.variable_range(var);
}

namespace {

struct BranchState {
    const StandardFormLP* lp;
    LpOptions options;
    long long nodes_left;
    std::vector<BoundRow> bounds;
    std::optional<std::vector<Int>> found;

    bool search() {
        if (nodes_left-- <= 0) throw NodeBudgetExceeded();
        Simplex simplex(*lp, bounds, options);
        if (!simplex.feasible()) return false;
        std::vector<Rational> x = simplex.point();
        int frac = -1;
        for (int j = 0; j < static_cast<int>(x.size()); ++j)
            if (!is_integer(x[j])) {
                frac = j;
                break;
            }
        if (frac < 0) {
            std::vector<Int> point;
            point.reserve(x.size());
            for (const Rational& q : x) point.push_back(numerator(q));
            found = std::move(point);
            return true;
        }
        // Exact range of the branch variable; prune integer-free windows.
        std::vector<Rational> unit(x.size(), Rational(0));
        unit[frac] = 1;
        simplex.minimize(unit);
        Int lo_int = ceil_int(simplex.objective_value(unit));
        unit[frac] = -1;
        std::optional<Int> hi_int;
        if (simplex.minimize(unit)) hi_int = floor_int(-simplex.objective_value(unit));
        if (hi_int && lo_int > *hi_int) return false;
        Int split = floor_int(x[frac]);
        bounds.push_back(BoundRow{frac, true, split});
        bool done = search();
        bounds.pop_back();
        if (done) return true;
        bounds.push_back(BoundRow{frac, false, split + 1});
        done = search();
        bounds.pop_back();
        return done;
    }
};

} // namespace

std::optional<std::vector<Int>> find_integer_point(const StandardFormLP& lp,
                                                   long long node_budget, LpOptions options) {
    // Row scaling to an integral right-hand side keeps branching arithmetic in
    // integers; solutions are unchanged.
    bool integral_rhs = true;
    for (int r = 0; r < lp.num_rows(); ++r)
        if (!is_integer(lp.rhs(r))) integral_rhs = false;
    std::optional<StandardFormLP> scaled;
    if (!integral_rhs) {
        StandardFormLP copy(lp.num_rows());
        std::vector<Rational> factor(lp.num_rows());
        for (int r = 0; r < lp.num_rows(); ++r) {
            factor[r] = Rational(rational_den(lp.rhs(r)));
            copy.set_rhs(r, lp.rhs(r) * factor[r]);
        }
        for (int j = 0; j < lp.num_vars(); ++j) {
            const SparseColumn& col = lp.column(j);
            SparseColumn out;
            out.rows = col.rows;
            out.values.reserve(col.rows.size());
            for (size_t k = 0; k < col.rows.size(); ++k) {
                Rational val = col.values.empty() ? Rational(1) : col.values[k];
                out.values.push_back(val * factor[col.rows[k]]);
            }
            copy.add_column(std::move(out), Rational(0));
        }
        scaled = std::move(copy);
    }
    BranchState state{scaled ? &*scaled : &lp, options, node_budget, {}, std::nullopt};
    state.search();
    return state.found;
}

} // namespace equicut
