/**
 * Moment polytopes P = { x : <x, nu_i> + a_i >= 0 } with primitive integral
 * interior normals nu_i and exact rational offsets a_i.
 *
 * Unbounded polyhedra are first-class values; only the operations that need
 * compactness say so.
 */
#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "toric/halfspace.hpp"
#include "toric/lattice.hpp"

namespace toric {

struct Facet {
    IntVec normal;
    Rational offset;

    friend bool operator==(const Facet& a, const Facet& b) {
        return a.normal == b.normal && a.offset == b.offset;
    }
    friend bool operator<(const Facet& a, const Facet& b) {
        if (a.normal != b.normal) return a.normal < b.normal;
        return a.offset < b.offset;
    }
};

class Polytope {
public:
    Polytope() = default;

    /// Validates: normals of length `dim`, nonzero and primitive; no repeated
    /// facet; at least `dim` facets; nonempty interior.
    Polytope(std::size_t dim, std::vector<Facet> facets) : dim_(dim), facets_(std::move(facets)) {
        if (facets_.size() < dim_)
            throw Error(ErrorCode::InvalidPolytope,
                        "fewer facets (" + std::to_string(facets_.size()) + ") than dimension (" +
                            std::to_string(dim_) + ")");
        for (std::size_t i = 0; i < facets_.size(); ++i) {
            const auto& f = facets_[i];
            if (f.normal.size() != dim_)
                throw Error(ErrorCode::DimensionMismatch,
                            "facet " + std::to_string(i) + " normal has length " +
                                std::to_string(f.normal.size()) + ", expected " + std::to_string(dim_));
            if (is_zero(f.normal))
                throw Error(ErrorCode::ZeroVector, "facet " + std::to_string(i) + " has zero normal");
            if (content(f.normal) != 1)
                throw Error(ErrorCode::InvalidPolytope,
                            "facet " + std::to_string(i) + " normal " + to_string(f.normal) +
                                " is not primitive");
            for (std::size_t j = 0; j < i; ++j)
                if (facets_[j] == f)
                    throw Error(ErrorCode::InvalidPolytope,
                                "facets " + std::to_string(j) + " and " + std::to_string(i) + " coincide");
        }
        if (!has_interior(halfspaces()))
            throw Error(ErrorCode::EmptyInterior, "feasible set has empty interior");
    }

    std::size_t dim() const noexcept { return dim_; }
    std::size_t facet_count() const noexcept { return facets_.size(); }
    const std::vector<Facet>& facets() const noexcept { return facets_; }
    const Facet& facet(std::size_t i) const { return facets_.at(i); }

    /// l_i(x) = <x, nu_i> + a_i
    Rational slack(std::size_t i, const RatVec& x) const {
        return dot(facets_.at(i).normal, x) + facets_[i].offset;
    }

    bool contains(const RatVec& x) const {
        for (std::size_t i = 0; i < facets_.size(); ++i)
            if (slack(i, x) < 0) return false;
        return true;
    }

    bool contains_in_interior(const RatVec& x) const {
        for (std::size_t i = 0; i < facets_.size(); ++i)
            if (slack(i, x) <= 0) return false;
        return true;
    }

    Halfspaces halfspaces() const {
        Halfspaces h;
        h.dim = dim_;
        for (const auto& f : facets_) h.add(to_rational(f.normal), f.offset);
        return h;
    }

    friend bool operator==(const Polytope& a, const Polytope& b) {
        return a.dim_ == b.dim_ && a.facets_ == b.facets_;
    }

private:
    std::size_t dim_ = 0;
    std::vector<Facet> facets_;
};

struct Vertex {
    RatVec point;
    std::vector<std::size_t> active_facets;
};

// ---------------------------------------------------------------------------
// constructions

/// Facets of the first factor padded with zeros on the right, then those of
/// the second padded on the left; order and offsets are kept.
inline Polytope product(const Polytope& p1, const Polytope& p2) {
    const std::size_t n1 = p1.dim(), n2 = p2.dim();
    std::vector<Facet> facets;
    facets.reserve(p1.facet_count() + p2.facet_count());
    for (const auto& f : p1.facets()) {
        IntVec v(n1 + n2);
        std::copy(f.normal.begin(), f.normal.end(), v.begin());
        facets.push_back({std::move(v), f.offset});
    }
    for (const auto& f : p2.facets()) {
        IntVec v(n1 + n2);
        std::copy(f.normal.begin(), f.normal.end(), v.begin() + static_cast<std::ptrdiff_t>(n1));
        facets.push_back({std::move(v), f.offset});
    }
    return Polytope(n1 + n2, std::move(facets));
}

inline Polytope canonical_form(const Polytope& p) {
    auto facets = p.facets();
    std::sort(facets.begin(), facets.end());
    return Polytope(p.dim(), std::move(facets));
}

inline bool same_polytope(const Polytope& a, const Polytope& b) {
    if (a.dim() != b.dim() || a.facet_count() != b.facet_count()) return false;
    auto fa = a.facets(), fb = b.facets();
    std::sort(fa.begin(), fa.end());
    std::sort(fb.begin(), fb.end());
    return fa == fb;
}

// ---------------------------------------------------------------------------
// vertices and predicates

/// All 0-dimensional faces, each with every facet active at it. Enumerates
/// n-subsets of facets in lexicographic order and keeps feasible solutions;
/// vertices appear in order of their first generating subset.
inline std::vector<Vertex> vertices(const Polytope& p) {
    const std::size_t n = p.dim();
    std::vector<Vertex> out;
    std::set<RatVec> seen;
    for_each_subset(p.facet_count(), n, [&](const std::vector<std::size_t>& pick) {
        RatMat m(n, n);
        RatVec rhs(n);
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = 0; c < n; ++c) m(r, c) = Rational(p.facet(pick[r]).normal[c]);
            rhs[r] = -p.facet(pick[r]).offset;
        }
        auto x = solve_unique(m, rhs);
        if (!x || !p.contains(*x) || !seen.insert(*x).second) return;
        Vertex v{*x, {}};
        for (std::size_t i = 0; i < p.facet_count(); ++i)
            if (p.slack(i, *x) == 0) v.active_facets.push_back(i);
        out.push_back(std::move(v));
    });
    return out;
}

inline bool is_compact(const Polytope& p) { return v_representation(p.halfspaces()).bounded(); }

/// Every vertex is simple and its normals form a Z-basis.
inline bool is_delzant(const Polytope& p) {
    const std::size_t n = p.dim();
    for (const auto& v : vertices(p)) {
        if (v.active_facets.size() != n) return false;
        IntMat m(n, n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) m(r, c) = p.facet(v.active_facets[r]).normal[c];
        if (!is_unimodular(m)) return false;
    }
    return true;
}

inline bool is_even(const Polytope& p) { return p.facet_count() % 2 == 0; }

/// Normals closed under negation, counted with multiplicity.
inline bool is_symmetric(const Polytope& p) {
    std::map<IntVec, long> count;
    for (const auto& f : p.facets()) ++count[f.normal];
    for (const auto& [normal, k] : count) {
        IntVec neg = normal;
        for (auto& x : neg) x = -x;
        auto it = count.find(neg);
        if (it == count.end() || it->second != k) return false;
    }
    return true;
}

/// The common offset when all offsets agree and are positive.
inline std::optional<Rational> is_monotone(const Polytope& p) {
    if (p.facet_count() == 0) return std::nullopt;
    const Rational& a = p.facet(0).offset;
    if (a <= 0) return std::nullopt;
    for (const auto& f : p.facets())
        if (f.offset != a) return std::nullopt;
    return a;
}

// ---------------------------------------------------------------------------
// redundancy

/// Removes facets that do not change the feasible set. Parallel facets keep
/// only the smallest offset; the rest are tested one at a time against the
/// facets still kept. Returns the survivors in canonical order.
inline std::vector<Facet> prune_facets(std::size_t dim, std::vector<Facet> facets) {
    std::map<IntVec, Rational> tightest;
    for (auto& f : facets) {
        auto it = tightest.find(f.normal);
        if (it == tightest.end())
            tightest.emplace(f.normal, f.offset);
        else if (f.offset < it->second)
            it->second = f.offset;
    }
    std::vector<Facet> kept;
    for (auto& [normal, offset] : tightest) kept.push_back({normal, offset});  // map order is canonical

    Halfspaces all;
    all.dim = dim;
    for (const auto& f : kept) all.add(to_rational(f.normal), f.offset);
    if (!has_interior(all)) throw Error(ErrorCode::EmptyInterior, "pruning an empty or flat system");

    for (std::size_t i = 0; i < kept.size();) {
        Halfspaces rest;
        rest.dim = dim;
        for (std::size_t j = 0; j < kept.size(); ++j)
            if (j != i) rest.add(to_rational(kept[j].normal), kept[j].offset);
        auto res = minimize(rest, to_rational(kept[i].normal), kept[i].offset);
        if (res.status == LpStatus::Optimal && res.value >= 0)
            kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(i));
        else
            ++i;
    }
    return kept;
}

inline Polytope prune_redundant(const Polytope& p) {
    return Polytope(p.dim(), prune_facets(p.dim(), p.facets()));
}

// ---------------------------------------------------------------------------
// distinguished points

struct EquidistantPoint {
    RatVec point;
    Rational distance;
};

/// The unique x with l_i(x) = t for every facet, when that system determines
/// (x, t) uniquely and t > 0.
inline std::optional<EquidistantPoint> equidistant_point(const Polytope& p) {
    const std::size_t n = p.dim();
    RatMat m(p.facet_count(), n + 1);
    RatVec rhs(p.facet_count());
    for (std::size_t i = 0; i < p.facet_count(); ++i) {
        for (std::size_t c = 0; c < n; ++c) m(i, c) = Rational(p.facet(i).normal[c]);
        m(i, n) = -1;
        rhs[i] = -p.facet(i).offset;
    }
    auto sol = solve_unique(m, rhs);
    if (!sol || sol->back() <= 0) return std::nullopt;
    Rational t = sol->back();
    sol->pop_back();
    return EquidistantPoint{std::move(*sol), std::move(t)};
}

struct DilateTranslate {
    Rational scale;   // t
    RatVec shift;     // x0
};

/**
 * Finds t > 0 and x0 with P = t·model + x0 as facet systems, i.e. the normals
 * agree as multisets and a_i = t·a_i(model) - <x0, nu_i>. Under this map the
 * model point y corresponds to t·y + x0.
 */
inline std::optional<DilateTranslate> match_dilate_translate(const Polytope& p, const Polytope& model) {
    if (p.dim() != model.dim() || p.facet_count() != model.facet_count()) return std::nullopt;
    auto fp = p.facets(), fm = model.facets();
    auto by_normal = [](const Facet& a, const Facet& b) { return a.normal < b.normal; };
    std::stable_sort(fp.begin(), fp.end(), by_normal);
    std::stable_sort(fm.begin(), fm.end(), by_normal);
    const std::size_t n = p.dim();
    RatMat m(fp.size(), n + 1);
    RatVec rhs(fp.size());
    for (std::size_t i = 0; i < fp.size(); ++i) {
        if (fp[i].normal != fm[i].normal) return std::nullopt;
        m(i, 0) = fm[i].offset;
        for (std::size_t c = 0; c < n; ++c) m(i, c + 1) = -Rational(fp[i].normal[c]);
        rhs[i] = fp[i].offset;
    }
    auto sol = solve_unique(m, rhs);
    if (!sol || (*sol)[0] <= 0) return std::nullopt;
    DilateTranslate out;
    out.scale = (*sol)[0];
    out.shift.assign(sol->begin() + 1, sol->end());
    return out;
}

}  // namespace toric
