#ifndef MAGICCOUNT_CLASSES_HPP
#define MAGICCOUNT_CLASSES_HPP

#include "magiccount/linalg.hpp"
#include "magiccount/types.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace magiccount {

enum class SquareKind { SemiMagic, Magic, SymmetricMagic, Pandiagonal, Hypercube };

/// One counted object class: a square variant of order n, or a semi-magic
/// d-dimensional hypercube of side n. d is fixed to 2 except for hypercubes.
struct SquareClass {
    SquareKind kind;
    int n;
    int d = 2;

    bool operator==(const SquareClass&) const = default;
};

inline std::string kind_name(SquareKind k) {
    switch (k) {
        case SquareKind::SemiMagic:      return "semimagic";
        case SquareKind::Magic:          return "magic";
        case SquareKind::SymmetricMagic: return "symmetric";
        case SquareKind::Pandiagonal:    return "pandiagonal";
        case SquareKind::Hypercube:      return "hypercube";
    }
    return "?";
}

inline std::string class_spec(const SquareClass& c) {
    std::string s = kind_name(c.kind) + ":" + std::to_string(c.n);
    if (c.kind == SquareKind::Hypercube) s += ":" + std::to_string(c.d);
    return s;
}

/// Parses "semimagic:n", "magic:n", "symmetric:n", "pandiagonal:n",
/// "hypercube:n:d".
inline SquareClass parse_class_spec(const std::string& spec) {
    const auto bad = [&] {
        return std::invalid_argument("invalid class spec '" + spec +
                                     "' (expected kind:n or hypercube:n:d)");
    };
    const auto colon = spec.find(':');
    if (colon == std::string::npos) throw bad();
    const std::string kind = spec.substr(0, colon);
    std::vector<int> nums;
    std::size_t pos = colon + 1;
    while (pos <= spec.size()) {
        const auto next = spec.find(':', pos);
        const std::string tok = spec.substr(pos, next == std::string::npos ? next : next - pos);
        try {
            std::size_t used = 0;
            const int v = std::stoi(tok, &used);
            if (used != tok.size() || v < 1) throw bad();
            nums.push_back(v);
        } catch (const std::invalid_argument&) { throw bad(); }
          catch (const std::out_of_range&)    { throw bad(); }
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    SquareClass c{SquareKind::SemiMagic, 0, 2};
    if (kind == "semimagic")        c.kind = SquareKind::SemiMagic;
    else if (kind == "magic")       c.kind = SquareKind::Magic;
    else if (kind == "symmetric")   c.kind = SquareKind::SymmetricMagic;
    else if (kind == "pandiagonal") c.kind = SquareKind::Pandiagonal;
    else if (kind == "hypercube")   c.kind = SquareKind::Hypercube;
    else throw bad();
    if (c.kind == SquareKind::Hypercube) {
        if (nums.size() != 2 || nums[1] < 2) throw bad();
        c.n = nums[0];
        c.d = nums[1];
    } else {
        if (nums.size() != 1) throw bad();
        c.n = nums[0];
    }
    return c;
}

inline Index ipow(Index base, int exp) {
    Index r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

inline Index num_variables(const SquareClass& c) {
    const Index n = c.n;
    switch (c.kind) {
        case SquareKind::SymmetricMagic: return n * (n + 1) / 2;
        case SquareKind::Hypercube:      return ipow(n, c.d);
        default:                         return n * n;
    }
}

/// Line-sum constraints of one class: a matrix whose entries record how
/// often each variable occurs in each line (0/1 everywhere except the
/// anti-diagonal row of the symmetric class, where paired off-diagonal
/// cells contribute 2).
struct ConstraintSystem {
    SquareClass cls;
    RationalMatrix matrix;  // rows = constraints, cols = num_vars

    Index num_vars() const { return matrix.cols(); }
};

/// Column index of cell (i, j) under row-major ordering, 0-based.
inline Index cell_index(int n, int i, int j) { return static_cast<Index>(i) * n + j; }

/// Column index of the upper-triangle variable x_{ij} (i <= j after
/// swapping), ordered x00, x01, ..., x0(n-1), x11, ..., x(n-1)(n-1).
inline Index triangle_index(int n, int i, int j) {
    if (i > j) std::swap(i, j);
    return static_cast<Index>(i) * n - static_cast<Index>(i) * (i - 1) / 2 + (j - i);
}

/// Expected Ehrhart degree (= polytope dimension), clamped at 0: the
/// closed forms go negative for n <= 2 where the polytope degenerates
/// to a point.
inline int expected_degree(const SquareClass& c) {
    const int n = c.n;
    int deg = 0;
    switch (c.kind) {
        case SquareKind::SemiMagic:      deg = (n - 1) * (n - 1); break;
        case SquareKind::Magic:          deg = n * n - 2 * n - 1; break;
        case SquareKind::SymmetricMagic: deg = (n * n - n - 4) / 2; break;
        case SquareKind::Pandiagonal:    deg = n * n - 3 * n + 2; break;
        case SquareKind::Hypercube: {
            deg = 1;
            for (int i = 0; i < c.d; ++i) deg *= n - 1;
            break;
        }
    }
    return deg < 0 ? 0 : deg;
}

struct ClassProfile {
    int expected_degree;
    int reciprocity_sign;     // +1 or -1
    int forced_zero_from = 1; // zeros at -1 ... -(n-1)
    int forced_zero_to;       // = n-1
};

inline ClassProfile class_profile(const SquareClass& c) {
    ClassProfile p{};
    p.expected_degree = expected_degree(c);
    // (-1)^dimension; reduces to (-1)^(n-1) for semi-magic squares,
    // magic squares (n >= 3), and hypercubes, (-1)^(n(n-1)/2) for
    // symmetric magic (n >= 3), and +1 for pandiagonal
    p.reciprocity_sign = p.expected_degree % 2 == 0 ? 1 : -1;
    p.forced_zero_to = c.n - 1;
    return p;
}

namespace detail {

inline void append_square_lines(RationalMatrix& m, Index& row, int n) {
    for (int i = 0; i < n; ++i, ++row)  // row sums
        for (int j = 0; j < n; ++j) m(row, cell_index(n, i, j)) = 1;
    for (int j = 0; j < n; ++j, ++row)  // column sums
        for (int i = 0; i < n; ++i) m(row, cell_index(n, i, j)) = 1;
}

}  // namespace detail

/// Builds the 0/1 line-sum matrix of a class. Row order is fixed:
///   SemiMagic:   n row sums, n column sums
///   Magic:       n row sums, n column sums, main diagonal, anti-diagonal
///   Symmetric:   n line sums (row = column), main diagonal, anti-diagonal,
///                over the n(n+1)/2 upper-triangle variables
///   Pandiagonal: n column sums, n wrapped down-right diagonals
///                (cells (i,j) with j - i = c mod n, c = 0..n-1), n row sums
///   Hypercube:   for each axis in order, one row per line, lines ordered
///                lexicographically by the fixed coordinates
inline ConstraintSystem build_constraints(const SquareClass& c) {
    const int n = c.n;
    const Index vars = num_variables(c);
    Index rows = 0;
    switch (c.kind) {
        case SquareKind::SemiMagic:      rows = 2 * n; break;
        case SquareKind::Magic:          rows = 2 * n + 2; break;
        case SquareKind::SymmetricMagic: rows = n + 2; break;
        case SquareKind::Pandiagonal:    rows = 3 * n; break;
        case SquareKind::Hypercube:      rows = c.d * ipow(n, c.d - 1); break;
    }
    RationalMatrix m = RationalMatrix::Zero(rows, vars);
    Index row = 0;
    switch (c.kind) {
        case SquareKind::SemiMagic:
            detail::append_square_lines(m, row, n);
            break;
        case SquareKind::Magic:
            detail::append_square_lines(m, row, n);
            for (int i = 0; i < n; ++i) m(row, cell_index(n, i, i)) = 1;
            ++row;
            for (int i = 0; i < n; ++i) m(row, cell_index(n, i, n - 1 - i)) = 1;
            ++row;
            break;
        case SquareKind::SymmetricMagic:
            for (int i = 0; i < n; ++i, ++row)
                for (int k = 0; k < n; ++k) m(row, triangle_index(n, i, k)) += 1;
            for (int i = 0; i < n; ++i) m(row, triangle_index(n, i, i)) += 1;
            ++row;
            for (int i = 0; i < n; ++i) m(row, triangle_index(n, i, n - 1 - i)) += 1;
            ++row;
            break;
        case SquareKind::Pandiagonal:
            for (int j = 0; j < n; ++j, ++row)
                for (int i = 0; i < n; ++i) m(row, cell_index(n, i, j)) = 1;
            for (int cdiag = 0; cdiag < n; ++cdiag, ++row)
                for (int i = 0; i < n; ++i) m(row, cell_index(n, i, (i + cdiag) % n)) = 1;
            for (int i = 0; i < n; ++i, ++row)
                for (int j = 0; j < n; ++j) m(row, cell_index(n, i, j)) = 1;
            break;
        case SquareKind::Hypercube: {
            const int d = c.d;
            std::vector<int> coord(d, 0);
            for (int axis = 0; axis < d; ++axis) {
                // one line per assignment of the other d-1 coordinates
                std::fill(coord.begin(), coord.end(), 0);
                while (true) {
                    for (int v = 0; v < n; ++v) {
                        coord[axis] = v;
                        Index idx = 0;
                        for (int k = 0; k < d; ++k) idx = idx * n + coord[k];
                        m(row, idx) = 1;
                    }
                    coord[axis] = 0;
                    ++row;
                    int k = d - 1;
                    while (k >= 0) {
                        if (k == axis) { --k; continue; }
                        if (++coord[k] < n) break;
                        coord[k] = 0;
                        --k;
                    }
                    if (k < 0) break;
                }
            }
            break;
        }
    }
    return {c, std::move(m)};
}

struct RankAndDegree {
    Index rank;
    Index dimension;  // num_vars - rank
};

/// Exact rank of the constraint matrix and the resulting polytope
/// dimension, cross-checked against the closed-form degree.
inline RankAndDegree rank_and_degree(const ConstraintSystem& cs) {
    const Index r = rank(cs.matrix);
    const Index dim = cs.num_vars() - r;
    if (dim != expected_degree(cs.cls)) {
        throw DegreeMismatch("class " + class_spec(cs.cls) + ": computed dimension " +
                             std::to_string(dim) + " != expected degree " +
                             std::to_string(expected_degree(cs.cls)));
    }
    return {r, dim};
}

}  // namespace magiccount

#endif  // MAGICCOUNT_CLASSES_HPP
