#ifndef MAGICCOUNT_EHRHART_HPP
#define MAGICCOUNT_EHRHART_HPP

#include "magiccount/counting.hpp"
#include "magiccount/linalg.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace magiccount {

/// Exact quasi-polynomial: for each residue r mod period, a coefficient
/// vector (c_0, ..., c_degree). Residues on which the counting function
/// vanishes identically carry explicit zero vectors.
struct QuasiPolynomial {
    int degree;
    int period;
    std::vector<std::vector<Rational>> coeffs;  // coeffs[r][k] = c_k on residue r
};

/// Horner evaluation on the residue class of t (normalized into 0..p-1,
/// also for negative t).
inline Rational evaluate(const QuasiPolynomial& q, long long t) {
    const int r = static_cast<int>(((t % q.period) + q.period) % q.period);
    const std::vector<Rational>& c = q.coeffs[r];
    Rational acc = 0;
    const Rational tt(t);
    for (std::size_t k = c.size(); k-- > 0;) acc = acc * tt + c[k];
    return acc;
}

/// Fits each residue class exactly from degree+1 samples, checks the
/// remaining samples of the class reproduce, then minimizes the period
/// by divisor descent (the vertex lcm is only an upper bound).
inline QuasiPolynomial interpolate(const SquareClass& cls,
                                   const std::vector<CountSample>& samples,
                                   const Integer& period_bound) {
    const int degree = expected_degree(cls);
    const int p = period_bound.convert_to<int>();

    std::map<long long, Integer> by_t;
    for (const auto& s : samples) {
        if (s.cls == cls && !s.strict && s.t >= 0) by_t[s.t] = s.count;
    }

    QuasiPolynomial q{degree, p, {}};
    q.coeffs.resize(p);
    for (int r = 0; r < p; ++r) {
        std::vector<long long> ts;
        for (const auto& [t, c] : by_t) {
            if (t % p == r) ts.push_back(t);
        }
        if (static_cast<int>(ts.size()) < degree + 3) {
            throw InsufficientSamples("residue " + std::to_string(r) + " mod " +
                                      std::to_string(p) + " has " + std::to_string(ts.size()) +
                                      " samples, needs " + std::to_string(degree + 3));
        }
        RationalMatrix vand(degree + 1, degree + 1);
        RationalVector rhs(degree + 1);
        for (int i = 0; i <= degree; ++i) {
            Rational pw = 1;
            for (int k = 0; k <= degree; ++k) {
                vand(i, k) = pw;
                pw *= ts[i];
            }
            rhs(i) = Rational(by_t[ts[i]]);
        }
        const SolveResult sol = solve_affine(vand, rhs);
        if (sol.status != SolveStatus::Unique) {
            throw InsufficientSamples("degenerate interpolation system on residue " +
                                      std::to_string(r));
        }
        std::vector<Rational> c(degree + 1);
        for (int k = 0; k <= degree; ++k) c[k] = sol.solution(k);
        q.coeffs[r] = std::move(c);
    }

    // every remaining sample must reproduce exactly
    for (const auto& [t, cnt] : by_t) {
        if (evaluate(q, t) != Rational(cnt)) {
            throw ValidationMismatch("interpolated " + class_spec(cls) + " disagrees with the " +
                                     "counted value at t = " + std::to_string(t) +
                                     " (wrong degree or period bound?)");
        }
    }

    bool genuine = false;
    for (const auto& c : q.coeffs) {
        if (c[degree] != 0) { genuine = true; break; }
    }
    if (!genuine && degree > 0) {
        throw ValidationMismatch("leading coefficient vanishes on every residue of " +
                                 class_spec(cls) + "; expected degree " +
                                 std::to_string(degree));
    }

    // period minimization by divisor descent
    for (int div = 1; div < p; ++div) {
        if (p % div != 0) continue;
        bool collapses = true;
        for (int r = div; r < p && collapses; ++r) {
            collapses = q.coeffs[r] == q.coeffs[r % div];
        }
        if (collapses) {
            q.coeffs.resize(div);
            q.period = div;
            break;
        }
    }
    return q;
}

struct ReciprocityReport {
    SquareClass cls;
    int sign;
    long long t_range;
    bool symmetry_pass;   // Q(-n-t) = sign * Q(t) on 0..t_range
    bool zeros_pass;      // Q(-1) = ... = Q(-n+1) = 0
    bool interior_pass;   // Q(-t) = (-1)^degree * strict count(t)
    long long interior_t_max;
    std::vector<long long> failures;  // offending t values, if any

    bool pass() const { return symmetry_pass && zeros_pass && interior_pass; }
};

/// Checks the reflection law, the forced zeros, and (against the strict
/// counter directly) Ehrhart-Macdonald reciprocity. Failures are
/// reported, never thrown.
inline ReciprocityReport verify_reciprocity(const QuasiPolynomial& q, const SquareClass& cls,
                                            long long t_range, long long interior_t_max = 0,
                                            const CountOptions& opts = {}) {
    ReciprocityReport rep{cls, class_profile(cls).reciprocity_sign, t_range,
                          true, true, true, interior_t_max, {}};
    for (long long t = 0; t <= t_range; ++t) {
        if (evaluate(q, -cls.n - t) != Rational(rep.sign) * evaluate(q, t)) {
            rep.symmetry_pass = false;
            rep.failures.push_back(t);
        }
    }
    for (long long k = 1; k <= cls.n - 1; ++k) {
        if (evaluate(q, -k) != 0) {
            rep.zeros_pass = false;
            rep.failures.push_back(-k);
        }
    }
    const int interior_sign = q.degree % 2 == 0 ? 1 : -1;
    for (long long t = 1; t <= interior_t_max; ++t) {
        const Rational expected = Rational(interior_sign) * Rational(count(cls, t, true, opts));
        if (evaluate(q, -t) != expected) {
            rep.interior_pass = false;
            rep.failures.push_back(-t);
        }
    }
    return rep;
}

inline std::string format_rational(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

namespace detail {

inline std::string render_polynomial(const std::vector<Rational>& c) {
    std::string out;
    for (std::size_t k = c.size(); k-- > 0;) {
        if (c[k] == 0) continue;
        const Rational a = abs(c[k]);
        std::string term;
        if (k == 0) {
            term = format_rational(a);
        } else {
            if (a != 1) {
                term = denominator(a) == 1 ? format_rational(a)
                                           : "(" + format_rational(a) + ")";
            }
            term += k == 1 ? "t" : "t^" + std::to_string(k);
        }
        if (out.empty()) {
            out = (c[k] < 0 ? "-" : "") + term;
        } else {
            out += (c[k] < 0 ? " - " : " + ") + term;
        }
    }
    return out.empty() ? "0" : out;
}

}  // namespace detail

enum class FormulaStyle { Human, Json, Csv };

inline nlohmann::json quasi_polynomial_to_json(const QuasiPolynomial& q, const SquareClass& cls) {
    nlohmann::json j;
    j["class"] = kind_name(cls.kind);
    j["n"] = cls.n;
    j["d"] = cls.d;
    j["degree"] = q.degree;
    j["period"] = q.period;
    nlohmann::json residues = nlohmann::json::array();
    for (int r = 0; r < q.period; ++r) {
        nlohmann::json coeffs = nlohmann::json::array();
        for (const Rational& c : q.coeffs[r]) {
            coeffs.push_back({numerator(c).str(), denominator(c).str()});
        }
        residues.push_back({{"r", r}, {"coeffs", std::move(coeffs)}});
    }
    j["residues"] = std::move(residues);
    return j;
}

inline std::string format(const QuasiPolynomial& q, const SquareClass& cls,
                          FormulaStyle style = FormulaStyle::Human) {
    switch (style) {
        case FormulaStyle::Json:
            return quasi_polynomial_to_json(q, cls).dump();
        case FormulaStyle::Csv: {
            std::string out = "class,n,d,degree,period,residue";
            for (int k = 0; k <= q.degree; ++k) out += ",c" + std::to_string(k);
            out += "\n";
            for (int r = 0; r < q.period; ++r) {
                out += kind_name(cls.kind) + "," + std::to_string(cls.n) + "," +
                       std::to_string(cls.d) + "," + std::to_string(q.degree) + "," +
                       std::to_string(q.period) + "," + std::to_string(r);
                for (const Rational& c : q.coeffs[r]) out += "," + format_rational(c);
                out += "\n";
            }
            return out;
        }
        case FormulaStyle::Human: {
            if (q.period == 1) return detail::render_polynomial(q.coeffs[0]);
            std::string out;
            for (int r = 0; r < q.period; ++r) {
                if (!out.empty()) out += "; ";
                out += detail::render_polynomial(q.coeffs[r]) + " if t = " + std::to_string(r) +
                       " (mod " + std::to_string(q.period) + ")";
            }
            return out;
        }
    }
    return {};
}

}  // namespace magiccount

#endif  // MAGICCOUNT_EHRHART_HPP
