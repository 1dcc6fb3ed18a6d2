#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "equicut/rational.hpp"

namespace equicut {

/// Column of an equality system. An empty `values` vector means every listed
/// entry is 1; cut incidence columns use that form to stay compact.
struct SparseColumn {
    std::vector<int> rows;
    std::vector<Rational> values;
};

/// Equality-constrained LP in standard form: M x = b, x >= 0.
/// Rows may be linearly dependent; the solver copes.
class StandardFormLP {
public:
    explicit StandardFormLP(int num_rows) {
        if (num_rows < 0) throw DimensionMismatch("negative row count");
        rows_ = num_rows;
        rhs_values_.assign(static_cast<size_t>(num_rows), Rational(0));
    }

    int add_column(SparseColumn col, Rational objective_coefficient);
    void set_rhs(int row, Rational value);

    int num_rows() const { return rows_; }
    int num_vars() const { return static_cast<int>(cols_.size()); }
    const SparseColumn& column(int j) const { return cols_[j]; }
    const Rational& rhs(int row) const { return rhs_values_[row]; }
    const std::vector<Rational>& rhs() const { return rhs_values_; }
    const std::vector<Rational>& objective() const { return objective_; }

private:
    int rows_ = 0;
    std::vector<SparseColumn> cols_;
    std::vector<Rational> rhs_values_;
    std::vector<Rational> objective_;
};

enum class Sense { Minimize, Maximize };
enum class SolveStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
    SolveStatus status = SolveStatus::Infeasible;
    Rational value;
    std::vector<Rational> point;
    /// On infeasibility: y with y^T M <= 0 componentwise and y^T b > 0.
    std::vector<Rational> farkas;
};

struct VariableRange {
    Rational min;
    std::optional<Rational> max; // absent when unbounded above
};

struct LpOptions {
    /// Dantzig pivots before switching to Bland's rule; -1 picks a bound from
    /// the column count.
    int dantzig_pivots = -1;
};

/// Reusable feasibility context: runs phase 1 once, then answers repeated
/// objective queries from the current basis.
class LpContext {
public:
    explicit LpContext(const StandardFormLP& lp, LpOptions options = {});
    ~LpContext();
    LpContext(LpContext&&) noexcept;
    LpContext& operator=(LpContext&&) noexcept;

    bool feasible() const;
    /// Valid when infeasible().
    const std::vector<Rational>& farkas() const;
    /// A feasible point for the current basis.
    std::vector<Rational> current_point() const;
    /// Optimizes the given objective starting from the current feasible basis.
    LpResult optimize(const std::vector<Rational>& objective, Sense sense);
    /// min/max of one coordinate over the feasible region.
    VariableRange variable_range(int var);

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

/// Two-phase exact simplex over the LP's own objective.
LpResult solve_lp(const StandardFormLP& lp, Sense sense, LpOptions options = {});

/// Exact min and max of one variable over the feasible region.
/// Throws InfeasibleSystem when there is no feasible point.
VariableRange variable_range(const StandardFormLP& lp, int var, LpOptions options = {});

/// Nonnegative integer solution of M x = b, if any, found by depth-first
/// branch and bound on fractional coordinates. Returns nullopt when the
/// search space is exhausted; throws NodeBudgetExceeded when the budget runs
/// out first (result unknown).
std::optional<std::vector<Int>> find_integer_point(const StandardFormLP& lp,
                                                   long long node_budget = 100000,
                                                   LpOptions options = {});

} // namespace equicut
