#ifndef MAGICCOUNT_COUNTING_HPP
#define MAGICCOUNT_COUNTING_HPP

#include "magiccount/classes.hpp"
#include "magiccount/linalg.hpp"

#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

namespace magiccount {

struct CountSample {
    SquareClass cls;
    long long t;
    bool strict;
    Integer count;
};

struct CountOptions {
    std::uint64_t node_budget = 1'000'000'000;
    int workers = 1;
};

namespace detail {

/// Pivot variables as integer affine forms of the free variables:
/// x_pivot = (scale_t * t - sum coeff[f] * x_f) / denom, exactly.
struct Parametrization {
    std::vector<Index> free_cols;
    struct PivotForm {
        std::int64_t scale_t;
        std::int64_t denom;
        std::vector<std::int64_t> coeff;  // one per free variable
    };
    std::vector<PivotForm> pivots;
};

inline Parametrization parametrize(const ConstraintSystem& cs) {
    const Index vars = cs.num_vars();
    RationalMatrix aug(cs.matrix.rows(), vars + 1);
    aug.leftCols(vars) = cs.matrix;
    aug.col(vars) = RationalVector::Constant(cs.matrix.rows(), 1);
    const RrefResult red = rref(aug);

    Parametrization par;
    std::vector<bool> is_pivot(vars, false);
    for (Index c : red.pivot_columns) {
        if (c == vars) {
            throw InfeasiblePolytope("A x = 1 is inconsistent for " + class_spec(cs.cls));
        }
        is_pivot[c] = true;
    }
    for (Index c = 0; c < vars; ++c) {
        if (!is_pivot[c]) par.free_cols.push_back(c);
    }
    for (std::size_t i = 0; i < red.pivot_columns.size(); ++i) {
        const Index row = static_cast<Index>(i);
        Integer d = 1;
        for (Index f : par.free_cols) {
            d = boost::multiprecision::lcm(d, Integer(denominator(red.matrix(row, f))));
        }
        d = boost::multiprecision::lcm(d, Integer(denominator(red.matrix(row, vars))));
        const Rational scale(d);
        Parametrization::PivotForm form;
        form.denom = d.convert_to<std::int64_t>();
        form.scale_t = Rational(scale * red.matrix(row, vars)).convert_to<std::int64_t>();
        for (Index f : par.free_cols) {
            form.coeff.push_back(Rational(scale * red.matrix(row, f)).convert_to<std::int64_t>());
        }
        par.pivots.push_back(std::move(form));
    }
    return par;
}

/// DFS over free-variable assignments in [lo, hi], pruning a branch as
/// soon as some pivot's reachable interval misses [lo, hi].
class FreeVariableSearch {
  public:
    FreeVariableSearch(const Parametrization& par, std::int64_t lo, std::int64_t hi,
                       std::atomic<std::uint64_t>& nodes, std::uint64_t budget)
        : par_(par), lo_(lo), hi_(hi), nodes_(nodes), budget_(budget) {
        const std::size_t nfree = par.free_cols.size();
        const std::size_t npiv = par.pivots.size();
        // suffix bounds of sum coeff[f] * x_f over undecided free variables
        min_rest_.assign(npiv, std::vector<std::int64_t>(nfree + 1, 0));
        max_rest_ = min_rest_;
        for (std::size_t p = 0; p < npiv; ++p) {
            for (std::size_t k = nfree; k-- > 0;) {
                const std::int64_t c = par.pivots[p].coeff[k];
                const std::int64_t a = c * lo, b = c * hi;
                min_rest_[p][k] = min_rest_[p][k + 1] + std::min(a, b);
                max_rest_[p][k] = max_rest_[p][k + 1] + std::max(a, b);
            }
        }
        partial_.resize(npiv);
    }

    /// Leaves below the subtree where the first free variable is fixed to
    /// `first` (pass lo-1 with depth 0 semantics via run()).
    std::uint64_t run_subtree(std::int64_t first) {
        for (std::size_t p = 0; p < par_.pivots.size(); ++p) {
            partial_[p] = par_.pivots[p].scale_t * t_ - par_.pivots[p].coeff[0] * first;
        }
        return dfs(1);
    }

    std::uint64_t run_all() {
        if (par_.free_cols.empty()) {
            for (std::size_t p = 0; p < par_.pivots.size(); ++p) {
                partial_[p] = par_.pivots[p].scale_t * t_;
            }
            return dfs(0);
        }
        std::uint64_t total = 0;
        for (std::int64_t v = lo_; v <= hi_; ++v) total += run_subtree(v);
        return total;
    }

    void set_t(std::int64_t t) { t_ = t; }

  private:
    std::uint64_t dfs(std::size_t depth) {
        if (++local_nodes_ % 4096 == 0) {
            if (nodes_.fetch_add(4096, std::memory_order_relaxed) + 4096 > budget_) {
                throw BudgetExceeded("node budget of " + std::to_string(budget_) + " exceeded");
            }
        }
        const std::size_t npiv = par_.pivots.size();
        for (std::size_t p = 0; p < npiv; ++p) {
            const std::int64_t d = par_.pivots[p].denom;
            if (partial_[p] - max_rest_[p][depth] > hi_ * d ||
                partial_[p] - min_rest_[p][depth] < lo_ * d) {
                return 0;
            }
        }
        if (depth == par_.free_cols.size()) {
            for (std::size_t p = 0; p < npiv; ++p) {
                if (partial_[p] % par_.pivots[p].denom != 0) return 0;
            }
            return 1;
        }
        std::uint64_t total = 0;
        for (std::int64_t v = lo_; v <= hi_; ++v) {
            for (std::size_t p = 0; p < npiv; ++p) {
                partial_[p] -= par_.pivots[p].coeff[depth] * v;
            }
            total += dfs(depth + 1);
            for (std::size_t p = 0; p < npiv; ++p) {
                partial_[p] += par_.pivots[p].coeff[depth] * v;
            }
        }
        return total;
    }

    const Parametrization& par_;
    std::int64_t lo_, hi_;
    std::int64_t t_ = 0;
    std::atomic<std::uint64_t>& nodes_;
    std::uint64_t budget_;
    std::uint64_t local_nodes_ = 0;
    std::vector<std::vector<std::int64_t>> min_rest_, max_rest_;
    std::vector<std::int64_t> partial_;
};

}  // namespace detail

/// Exact number of arrays of the class with line sum t and entries >= 0
/// (>= 1 when strict). Deterministic for any worker count.
inline Integer count(const SquareClass& cls, long long t, bool strict = false,
                     const CountOptions& opts = {}) {
    if (t < 0) throw std::invalid_argument("count: t must be nonnegative");
    if (strict && t < cls.n) return 0;  // each line holds n entries >= 1
    if (t == 0) return strict ? 0 : 1;  // handles n = 0 edge of the line above

    const ConstraintSystem cs = build_constraints(cls);
    const detail::Parametrization par = detail::parametrize(cs);
    const std::int64_t lo = strict ? 1 : 0;
    const std::int64_t hi = strict ? t - cls.n + 1 : t;
    std::atomic<std::uint64_t> nodes{0};

    const std::size_t nfree = par.free_cols.size();
    const int workers = std::max(1, opts.workers);
    if (workers == 1 || nfree == 0) {
        detail::FreeVariableSearch search(par, lo, hi, nodes, opts.node_budget);
        search.set_t(t);
        return Integer(search.run_all());
    }

    // one subtree per first-free-variable value, statically partitioned
    const std::int64_t span = hi - lo + 1;
    std::vector<Integer> partials(workers, 0);
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                detail::FreeVariableSearch search(par, lo, hi, nodes, opts.node_budget);
                search.set_t(t);
                Integer sum = 0;
                for (std::int64_t v = lo + w; v < lo + span; v += workers) {
                    sum += Integer(search.run_subtree(v));
                }
                partials[w] = std::move(sum);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& err : errors) {
        if (err) std::rethrow_exception(err);
    }
    Integer total = 0;
    for (const auto& p : partials) total += p;
    return total;
}

inline std::vector<CountSample> count_batch(const SquareClass& cls,
                                            const std::vector<long long>& ts,
                                            bool strict = false, const CountOptions& opts = {}) {
    std::vector<CountSample> out;
    out.reserve(ts.size());
    for (long long t : ts) {
        out.push_back({cls, t, strict, count(cls, t, strict, opts)});
    }
    return out;
}

/// The interior count at t equals the plain count at t - n: subtracting 1
/// from every entry lowers each line sum by n.
inline bool shift_identity_check(const SquareClass& cls, long long t,
                                 const CountOptions& opts = {}) {
    if (t < cls.n) throw std::invalid_argument("shift_identity_check: t must be >= n");
    return count(cls, t, true, opts) == count(cls, t - cls.n, false, opts);
}

}  // namespace magiccount

#endif  // MAGICCOUNT_COUNTING_HPP
