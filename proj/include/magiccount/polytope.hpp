#ifndef MAGICCOUNT_POLYTOPE_HPP
#define MAGICCOUNT_POLYTOPE_HPP

#include "magiccount/classes.hpp"
#include "magiccount/linalg.hpp"

#include <json.hpp>

#include <algorithm>
#include <vector>

namespace magiccount {

/// Vertices of P = { x >= 0, A x = 1 }, deduplicated and in sorted
/// canonical order, plus the lcm of all coordinate denominators (the
/// Ehrhart period divides it).
struct VertexSet {
    SquareClass cls;
    std::vector<RationalVector> vertices;
    Integer period_bound;
};

/// True iff A x = 1 and x >= 0 (x > 0 when strict).
inline bool contains_point(const ConstraintSystem& cs, const RationalVector& x,
                           bool strict = false) {
    if (x.size() != cs.num_vars()) {
        throw DimensionMismatch("contains_point: expected " + std::to_string(cs.num_vars()) +
                                " coordinates, got " + std::to_string(x.size()));
    }
    for (Index i = 0; i < x.size(); ++i) {
        if (strict ? x(i) <= 0 : x(i) < 0) return false;
    }
    const RationalVector sums = cs.matrix * x;
    for (Index r = 0; r < sums.size(); ++r) {
        if (sums(r) != 1) return false;
    }
    return true;
}

namespace detail {

inline bool lex_less(const RationalVector& a, const RationalVector& b) {
    for (Index i = 0; i < a.size(); ++i) {
        if (a(i) != b(i)) return a(i) < b(i);
    }
    return false;
}

}  // namespace detail

/// Number of zero-set candidates enumerate_vertices would visit,
/// saturating at cap. Used to gate expensive class sizes in the CLI.
inline unsigned long long vertex_candidate_count(Index vars, Index dim,
                                                 unsigned long long cap = 1ull << 62) {
    unsigned long long c = 1;
    for (Index i = 0; i < dim; ++i) {
        if (c > cap / static_cast<unsigned long long>(vars - i)) return cap;
        c = c * (vars - i) / (i + 1);
    }
    return c;
}

/// Enumerates the exact vertex set by basic feasible solutions: every
/// vertex has at least dim tight nonnegativity constraints, so solving
/// { A x = 1, x_i = 0 for i in S } over all |S| = dim finds them all.
/// Underdetermined subsets are faces, not vertices, and are skipped.
inline VertexSet enumerate_vertices(const ConstraintSystem& cs) {
    const Index vars = cs.num_vars();
    const Index dim = rank_and_degree(cs).dimension;
    const RationalVector ones = RationalVector::Constant(cs.matrix.rows(), 1);

    std::vector<RationalVector> found;
    std::vector<Index> keep(vars - dim);
    std::vector<Index> zero_set(dim);
    // lexicographic subsets of size dim
    for (Index i = 0; i < dim; ++i) zero_set[i] = i;
    while (true) {
        {
            Index k = 0, z = 0;
            for (Index i = 0; i < vars; ++i) {
                if (z < dim && zero_set[z] == i) { ++z; continue; }
                keep[k++] = i;
            }
        }
        RationalMatrix sub(cs.matrix.rows(), vars - dim);
        for (Index k = 0; k < vars - dim; ++k) sub.col(k) = cs.matrix.col(keep[k]);
        const SolveResult sol = solve_affine(sub, ones);
        if (sol.status == SolveStatus::Unique) {
            bool nonneg = true;
            for (Index k = 0; k < sol.solution.size(); ++k) {
                if (sol.solution(k) < 0) { nonneg = false; break; }
            }
            if (nonneg) {
                RationalVector v = RationalVector::Zero(vars);
                for (Index k = 0; k < vars - dim; ++k) v(keep[k]) = sol.solution(k);
                found.push_back(std::move(v));
            }
        }
        // next subset
        Index i = dim - 1;
        while (i >= 0 && zero_set[i] == vars - dim + i) --i;
        if (i < 0) break;
        ++zero_set[i];
        for (Index j = i + 1; j < dim; ++j) zero_set[j] = zero_set[j - 1] + 1;
    }

    std::sort(found.begin(), found.end(), detail::lex_less);
    found.erase(std::unique(found.begin(), found.end(),
                            [](const RationalVector& a, const RationalVector& b) {
                                return a == b;
                            }),
                found.end());
    if (found.empty()) {
        throw InfeasiblePolytope("no vertex found for " + class_spec(cs.cls) +
                                 " (the polytope is never empty for these classes)");
    }

    Integer bound = 1;
    for (const auto& v : found) {
        bound = boost::multiprecision::lcm(bound, denominator_lcm(v));
    }
    return {cs.cls, std::move(found), std::move(bound)};
}

inline nlohmann::json vertex_set_to_json(const VertexSet& vs) {
    nlohmann::json j;
    j["class"] = kind_name(vs.cls.kind);
    j["n"] = vs.cls.n;
    j["d"] = vs.cls.d;
    j["period_bound"] = vs.period_bound.str();
    nlohmann::json verts = nlohmann::json::array();
    for (const auto& v : vs.vertices) {
        nlohmann::json coords = nlohmann::json::array();
        for (Index i = 0; i < v.size(); ++i) {
            coords.push_back({numerator(v(i)).str(), denominator(v(i)).str()});
        }
        verts.push_back(std::move(coords));
    }
    j["vertices"] = std::move(verts);
    return j;
}

}  // namespace magiccount

#endif  // MAGICCOUNT_POLYTOPE_HPP
