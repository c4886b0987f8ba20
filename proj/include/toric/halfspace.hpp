/**
 * Exact V-representation of rational inequality systems {x : <a_i, x> + b_i >= 0}
 * by exhaustive basis enumeration, and the linear-programming queries built
 * on it. Intended for desk-scale systems (a dozen inequalities, a handful of
 * dimensions); the cost is a binomial number of small exact solves.
 *
 * Systems with a nontrivial lineality space are handled by intersecting with
 * its orthogonal complement, which is pointed and carries every answer.
 */
#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "toric/lattice.hpp"

namespace toric {

struct Halfspaces {
    std::size_t dim = 0;
    std::vector<RatVec> normals;
    RatVec offsets;

    std::size_t size() const noexcept { return normals.size(); }

    void add(RatVec normal, Rational offset) {
        if (normal.size() != dim) throw Error(ErrorCode::DimensionMismatch, "halfspace normal length");
        normals.push_back(std::move(normal));
        offsets.push_back(std::move(offset));
    }

    Rational slack(std::size_t i, const RatVec& x) const { return dot(normals[i], x) + offsets[i]; }

    bool contains(const RatVec& x) const {
        for (std::size_t i = 0; i < size(); ++i)
            if (slack(i, x) < 0) return false;
        return true;
    }
};

/// Vertices, extreme rays and a lineality basis. The polyhedron is
/// conv(vertices) + cone(rays) + span(lineality); it is empty iff there are
/// no vertices.
struct VRep {
    std::vector<RatVec> vertices;
    std::vector<RatVec> rays;
    std::vector<RatVec> lineality;

    bool empty() const noexcept { return vertices.empty(); }
    bool bounded() const noexcept { return rays.empty() && lineality.empty(); }
};

/// Calls `visit` with every k-subset of {0..n-1} in lexicographic order.
inline void for_each_subset(std::size_t n, std::size_t k,
                            const std::function<void(const std::vector<std::size_t>&)>& visit) {
    if (k > n) return;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
        visit(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

namespace detail {

// Scales a nonzero rational direction so that its first nonzero entry is +-1.
inline RatVec normalize_direction(RatVec v) {
    for (const auto& x : v)
        if (x != 0) {
            Rational s = x < 0 ? Rational(-x) : x;
            for (auto& y : v) y /= s;
            break;
        }
    return v;
}

inline RatMat stack_rows(const std::vector<RatVec>& head, const std::vector<RatVec>& all,
                         const std::vector<std::size_t>& pick, std::size_t dim) {
    RatMat m(head.size() + pick.size(), dim);
    for (std::size_t r = 0; r < head.size(); ++r)
        for (std::size_t c = 0; c < dim; ++c) m(r, c) = head[r][c];
    for (std::size_t r = 0; r < pick.size(); ++r)
        for (std::size_t c = 0; c < dim; ++c) m(head.size() + r, c) = all[pick[r]][c];
    return m;
}

}  // namespace detail

inline VRep v_representation(const Halfspaces& h) {
    const std::size_t n = h.dim;
    VRep out;

    RatMat all(h.size(), n);
    for (std::size_t i = 0; i < h.size(); ++i)
        for (std::size_t c = 0; c < n; ++c) all(i, c) = h.normals[i][c];
    out.lineality = nullspace(all);
    const std::size_t e = out.lineality.size();

    std::set<RatVec> seen;
    for_each_subset(h.size(), n - e, [&](const std::vector<std::size_t>& pick) {
        RatMat m = detail::stack_rows(out.lineality, h.normals, pick, n);
        RatVec rhs(m.rows());
        for (std::size_t r = 0; r < pick.size(); ++r) rhs[e + r] = -h.offsets[pick[r]];
        auto x = solve_unique(m, rhs);
        if (!x || !h.contains(*x)) return;
        if (seen.insert(*x).second) out.vertices.push_back(*x);
    });

    if (n >= e + 1) {
        std::set<RatVec> seen_rays;
        for_each_subset(h.size(), n - e - 1, [&](const std::vector<std::size_t>& pick) {
            RatMat m = detail::stack_rows(out.lineality, h.normals, pick, n);
            auto ker = nullspace(m);
            if (ker.size() != 1) return;
            RatVec r = detail::normalize_direction(ker.front());
            bool nonneg = true, nonpos = true;
            for (std::size_t i = 0; i < h.size(); ++i) {
                Rational s = dot(h.normals[i], r);
                if (s < 0) nonneg = false;
                if (s > 0) nonpos = false;
            }
            if (!nonneg && !nonpos) return;
            if (!nonneg)
                for (auto& x : r) x = -x;
            if (nonneg && nonpos) {
                // both orientations are recession directions
                RatVec neg = r;
                for (auto& x : neg) x = -x;
                if (seen_rays.insert(neg).second) out.rays.push_back(neg);
            }
            if (seen_rays.insert(r).second) out.rays.push_back(r);
        });
    }
    return out;
}

enum class LpStatus { Infeasible, Unbounded, Optimal };

struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    Rational value;             // meaningful when Optimal
    std::optional<RatVec> argmin;  // a vertex attaining the optimum
};

/// min <f, x> + c over the polyhedron described by `v`.
inline LpResult minimize(const VRep& v, const RatVec& f, const Rational& c = 0) {
    LpResult res;
    if (v.empty()) return res;
    for (const auto& l : v.lineality)
        if (dot(f, l) != 0) {
            res.status = LpStatus::Unbounded;
            return res;
        }
    for (const auto& r : v.rays)
        if (dot(f, r) < 0) {
            res.status = LpStatus::Unbounded;
            return res;
        }
    res.status = LpStatus::Optimal;
    for (const auto& x : v.vertices) {
        Rational val = dot(f, x) + c;
        if (!res.argmin || val < res.value) {
            res.value = val;
            res.argmin = x;
        }
    }
    return res;
}

inline LpResult minimize(const Halfspaces& h, const RatVec& f, const Rational& c = 0) {
    return minimize(v_representation(h), f, c);
}

/// Largest t such that some x has every slack >= t, capped at 1. The system
/// has nonempty interior iff this is positive.
inline Rational interior_depth(const Halfspaces& h) {
    Halfspaces aug;
    aug.dim = h.dim + 1;
    for (std::size_t i = 0; i < h.size(); ++i) {
        RatVec a = h.normals[i];
        a.push_back(Rational(-1));
        aug.add(std::move(a), h.offsets[i]);
    }
    RatVec cap(h.dim + 1);
    cap.back() = -1;
    aug.add(cap, Rational(1));
    RatVec f(h.dim + 1);
    f.back() = -1;
    auto res = minimize(aug, f);
    // the augmented system always contains (x, t) for t small enough and is
    // bounded above in t by the cap
    return -res.value;
}

inline bool has_interior(const Halfspaces& h) { return interior_depth(h) > 0; }

}  // namespace toric
