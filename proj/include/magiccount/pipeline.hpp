#ifndef MAGICCOUNT_PIPELINE_HPP
#define MAGICCOUNT_PIPELINE_HPP

#include "magiccount/cache.hpp"
#include "magiccount/ehrhart.hpp"
#include "magiccount/polytope.hpp"

namespace magiccount {

struct Reconstruction {
    ConstraintSystem constraints;
    RankAndDegree rank;
    VertexSet vertices;
    QuasiPolynomial formula;
};

/// Sample plan for one residue class: degree+1 values to solve plus 2 to
/// validate a wrong period bound or a counting bug.
inline std::vector<long long> sample_plan(int degree, const Integer& period_bound) {
    const int p = period_bound.convert_to<int>();
    std::vector<long long> ts;
    for (int r = 0; r < p; ++r) {
        for (int k = 0; k < degree + 3; ++k) ts.push_back(r + static_cast<long long>(k) * p);
    }
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    return ts;
}

/// Full pipeline: build -> rank -> vertices -> sample -> interpolate.
inline Reconstruction reconstruct(const SquareClass& cls, SampleCache& cache,
                                  const CountOptions& opts = {}) {
    ConstraintSystem cs = build_constraints(cls);
    const RankAndDegree rd = rank_and_degree(cs);
    VertexSet vs = enumerate_vertices(cs);

    std::vector<CountSample> samples;
    for (long long t : sample_plan(static_cast<int>(rd.dimension), vs.period_bound)) {
        samples.push_back({cls, t, false, cache.get_or_compute(cls, t, false, opts)});
    }
    QuasiPolynomial q = interpolate(cls, samples, vs.period_bound);
    return {std::move(cs), rd, std::move(vs), std::move(q)};
}

}  // namespace magiccount

#endif  // MAGICCOUNT_PIPELINE_HPP
