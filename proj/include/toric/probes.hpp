/**
 * McDuff probes: a fiber over u is displaceable when u sits strictly before
 * the midpoint of an integral segment that leaves a facet transversally.
 *
 * Convention: the probe starts at x in the relative interior of facet F and
 * runs along w with <nu_F, w> = 1, so it enters the polytope.
 */
#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "toric/polytope.hpp"

namespace toric {

struct Probe {
    std::size_t facet = 0;
    IntVec direction;
    RatVec base;
};

struct ProbeReport {
    Probe probe;
    /// Length parameter at which the probe exits; empty for a half-line.
    std::optional<Rational> reach;
    /// Parameter of the displaced point along the probe.
    Rational t;
};

namespace detail {

inline void check_probe(const Polytope& p, const Probe& probe) {
    if (probe.facet >= p.facet_count()) throw Error(ErrorCode::NotOnFacet, "facet index out of range");
    if (probe.direction.size() != p.dim() || probe.base.size() != p.dim())
        throw Error(ErrorCode::DimensionMismatch, "probe vectors must have length " + std::to_string(p.dim()));
    if (dot(p.facet(probe.facet).normal, probe.direction) != 1)
        throw Error(ErrorCode::NotTransverse, "<nu_F, w> must equal 1");
    for (std::size_t j = 0; j < p.facet_count(); ++j) {
        Rational s = p.slack(j, probe.base);
        if (j == probe.facet ? s != 0 : s <= 0)
            throw Error(ErrorCode::NotOnFacet, "base point " + to_string(probe.base) +
                                                   " is not in the relative interior of facet " +
                                                   std::to_string(probe.facet));
    }
}

// min over exiting facets of l_j(x) / -<nu_j, w>
inline std::optional<Rational> exit_time(const Polytope& p, const RatVec& x, const IntVec& w) {
    std::optional<Rational> best;
    for (std::size_t j = 0; j < p.facet_count(); ++j) {
        Integer rate = dot(p.facet(j).normal, w);
        if (rate >= 0) continue;
        Rational t = p.slack(j, x) / Rational(-rate);
        if (!best || t < *best) best = t;
    }
    return best;
}

}  // namespace detail

/// Largest t with x + t·w still in P.
inline Rational probe_reach(const Polytope& p, const Probe& probe) {
    detail::check_probe(p, probe);
    auto t = detail::exit_time(p, probe.base, probe.direction);
    if (!t) throw Error(ErrorCode::UnboundedProbe, "probe never leaves the polytope");
    return *t;
}

/// True iff u = x + t·w with 0 < t < reach / 2.
inline bool is_displaceable_by_probe(const Polytope& p, const RatVec& u, const Probe& probe) {
    Rational reach = probe_reach(p, probe);
    if (u.size() != p.dim()) throw Error(ErrorCode::DimensionMismatch, "point length");
    Rational t = p.slack(probe.facet, u);
    for (std::size_t c = 0; c < u.size(); ++c)
        if (u[c] != probe.base[c] + t * Rational(probe.direction[c])) return false;
    return t > 0 && 2 * t < reach;
}

/**
 * Exhaustive search, facets in order and directions w in [-bound, bound]^n
 * in lexicographic order, for a probe through u that displaces it. A probe
 * that never exits (unbounded P) displaces every point on it.
 */
inline std::optional<ProbeReport> probe_scan(const Polytope& p, const RatVec& u, long bound) {
    if (u.size() != p.dim()) throw Error(ErrorCode::DimensionMismatch, "point length");
    if (bound < 0) return std::nullopt;
    const std::size_t n = p.dim();
    for (std::size_t f = 0; f < p.facet_count(); ++f) {
        const Rational t = p.slack(f, u);
        if (t <= 0) continue;
        std::vector<long> w(n, -bound);
        for (;;) {
            IntVec dir(w.begin(), w.end());
            if (dot(p.facet(f).normal, dir) == 1) {
                RatVec x(n);
                for (std::size_t c = 0; c < n; ++c) x[c] = u[c] - t * Rational(dir[c]);
                bool interior = true;
                for (std::size_t j = 0; j < p.facet_count() && interior; ++j)
                    if (j != f && p.slack(j, x) <= 0) interior = false;
                if (interior) {
                    auto reach = detail::exit_time(p, x, dir);
                    if (!reach || 2 * t < *reach) return ProbeReport{{f, std::move(dir), std::move(x)}, reach, t};
                }
            }
            std::size_t c = n;
            while (c > 0 && w[c - 1] == bound) w[--c] = -bound;
            if (c == 0) break;
            ++w[c - 1];
        }
    }
    return std::nullopt;
}

}  // namespace toric
