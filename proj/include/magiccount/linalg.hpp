#ifndef MAGICCOUNT_LINALG_HPP
#define MAGICCOUNT_LINALG_HPP

#include "magiccount/types.hpp"

#include <utility>
#include <variant>
#include <vector>

namespace magiccount {

struct RrefResult {
    RationalMatrix matrix;
    std::vector<Index> pivot_columns;  // increasing
};

/// Reduced row echelon form by Gauss-Jordan elimination. Arithmetic is
/// exact, so the pivot is simply the first nonzero entry in column order.
inline RrefResult rref(const RationalMatrix& m) {
    RrefResult out{m, {}};
    RationalMatrix& a = out.matrix;
    const Index rows = a.rows(), cols = a.cols();
    Index lead = 0;
    for (Index col = 0; col < cols && lead < rows; ++col) {
        Index pivot = -1;
        for (Index r = lead; r < rows; ++r) {
            if (a(r, col) != 0) { pivot = r; break; }
        }
        if (pivot < 0) continue;
        a.row(pivot).swap(a.row(lead));
        const Rational inv = Rational(1) / a(lead, col);
        a.row(lead) *= inv;
        for (Index r = 0; r < rows; ++r) {
            if (r != lead && a(r, col) != 0) {
                a.row(r) -= a(r, col) * a.row(lead);
            }
        }
        out.pivot_columns.push_back(col);
        ++lead;
    }
    return out;
}

inline Index rank(const RationalMatrix& m) {
    return static_cast<Index>(rref(m).pivot_columns.size());
}

enum class SolveStatus { Unique, Underdetermined, Inconsistent };

struct SolveResult {
    SolveStatus status;
    RationalVector solution;  // valid only when status == Unique
};

/// Classify and, when unique, solve a * x = b exactly.
inline SolveResult solve_affine(const RationalMatrix& a, const RationalVector& b) {
    if (a.rows() != b.size()) {
        throw DimensionMismatch("solve_affine: a has " + std::to_string(a.rows()) +
                                " rows but b has " + std::to_string(b.size()) + " entries");
    }
    RationalMatrix aug(a.rows(), a.cols() + 1);
    aug.leftCols(a.cols()) = a;
    aug.col(a.cols()) = b;
    const RrefResult red = rref(aug);

    for (Index c : red.pivot_columns) {
        if (c == a.cols()) return {SolveStatus::Inconsistent, {}};
    }
    if (static_cast<Index>(red.pivot_columns.size()) < a.cols()) {
        return {SolveStatus::Underdetermined, {}};
    }
    RationalVector x(a.cols());
    for (Index i = 0; i < a.cols(); ++i) x(i) = red.matrix(i, a.cols());
    return {SolveStatus::Unique, std::move(x)};
}

/// lcm of the reduced denominators; 1 for an empty span.
inline Integer denominator_lcm(const RationalVector& v) {
    Integer l = 1;
    for (Index i = 0; i < v.size(); ++i) {
        l = boost::multiprecision::lcm(l, Integer(denominator(v(i))));
    }
    return l;
}

}  // namespace magiccount

#endif  // MAGICCOUNT_LINALG_HPP
