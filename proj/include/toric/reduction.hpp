/**
 * Symplectic reduction at the level of moment polytopes.
 *
 * A reduction of an ambient polytope in R^N to R^n is given by an integral
 * affine section y -> A·y + x0 of the level set. Ambient facet (nu, a) pulls
 * back to (Aᵀ·nu, a + <x0, nu>). The reducing subtorus is the integral kernel
 * of Aᵀ and the level is the pairing of x0 with that kernel.
 */
#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "toric/polytope.hpp"

namespace toric {

class AffineReduction {
public:
    /// `linear` is N x n; requires rank n and Aᵀ onto Z^n.
    AffineReduction(IntMat linear, RatVec base) : linear_(std::move(linear)), base_(std::move(base)) {
        if (base_.size() != linear_.rows())
            throw Error(ErrorCode::InvalidSlice, "base point length " + std::to_string(base_.size()) +
                                                     " differs from ambient dimension " +
                                                     std::to_string(linear_.rows()));
        if (rank(linear_) != linear_.cols())
            throw Error(ErrorCode::InvalidSlice, "slice directions are linearly dependent");
        if (!is_surjective_onto_lattice(linear_))
            throw Error(ErrorCode::InvalidSlice, "transpose of the slice does not map onto the lattice");
    }

    static AffineReduction identity(std::size_t n) {
        return AffineReduction(IntMat::identity(n), RatVec(n));
    }

    /// Pure substitution x = A·y.
    static AffineReduction linear(IntMat a) {
        RatVec zero(a.rows());
        return AffineReduction(std::move(a), std::move(zero));
    }

    std::size_t ambient_dim() const noexcept { return linear_.rows(); }
    std::size_t reduced_dim() const noexcept { return linear_.cols(); }
    const IntMat& linear_part() const noexcept { return linear_; }
    const RatVec& base_point() const noexcept { return base_; }

    RatVec map_point(const RatVec& y) const {
        if (y.size() != reduced_dim()) throw Error(ErrorCode::DimensionMismatch, "point length for slice");
        RatVec x = base_;
        for (std::size_t r = 0; r < linear_.rows(); ++r)
            for (std::size_t c = 0; c < linear_.cols(); ++c) x[r] += Rational(linear_(r, c)) * y[c];
        return x;
    }

    /// The y with map_point(y) == x, if x lies on the slice.
    std::optional<RatVec> preimage(const RatVec& x) const {
        if (x.size() != ambient_dim()) throw Error(ErrorCode::DimensionMismatch, "point length for slice");
        RatVec rhs(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) rhs[i] = x[i] - base_[i];
        return solve_unique(to_rational(linear_), rhs);
    }

    IntVec pull_back_normal(const IntVec& nu) const {
        IntVec out(reduced_dim());
        for (std::size_t c = 0; c < reduced_dim(); ++c)
            for (std::size_t r = 0; r < ambient_dim(); ++r) out[c] += linear_(r, c) * nu[r];
        return out;
    }

    /// Columns generate the Lie algebra of the reducing subtorus.
    IntMat subtorus() const { return integer_kernel(linear_.transpose()); }

    /// <x0, k> for each subtorus generator k.
    RatVec level() const {
        IntMat k = subtorus();
        RatVec out(k.cols());
        for (std::size_t j = 0; j < k.cols(); ++j) out[j] = dot(k.col(j), base_);
        return out;
    }

    /// Reduce by `this` first, then by `inner` on the result.
    AffineReduction then(const AffineReduction& inner) const {
        if (inner.ambient_dim() != reduced_dim())
            throw Error(ErrorCode::DimensionMismatch, "composing slices of incompatible dimensions");
        IntMat a = linear_ * inner.linear_;
        RatVec x0 = map_point(inner.base_);
        return AffineReduction(std::move(a), std::move(x0));
    }

private:
    IntMat linear_;
    RatVec base_;
};

/// Where each ambient facet went.
struct ReductionTrace {
    Polytope reduced;
    /// For each ambient facet, the index of the reduced facet it defines, if
    /// it survived pruning as the first ambient facet with that image.
    std::vector<std::optional<std::size_t>> defines;
    /// Ambient facets dropped from the result whose hyperplane still meets the
    /// reduced polytope: the slice passes through a face of codimension >= 2
    /// (or is tangent to a facet), so the level is not regular there.
    std::vector<std::size_t> touching;

    bool regular_level() const noexcept { return touching.empty(); }
};

inline ReductionTrace reduce_traced(const Polytope& ambient, const AffineReduction& slice) {
    if (slice.ambient_dim() != ambient.dim())
        throw Error(ErrorCode::DimensionMismatch, "slice ambient dimension " +
                                                      std::to_string(slice.ambient_dim()) +
                                                      " differs from polytope dimension " +
                                                      std::to_string(ambient.dim()));
    const std::size_t n = slice.reduced_dim();
    std::vector<std::optional<Facet>> images(ambient.facet_count());
    std::vector<Facet> raw;
    for (std::size_t i = 0; i < ambient.facet_count(); ++i) {
        const auto& f = ambient.facet(i);
        IntVec nu = slice.pull_back_normal(f.normal);
        Rational a = f.offset + dot(f.normal, slice.base_point());
        if (is_zero(nu)) {
            if (a <= 0)
                throw Error(ErrorCode::SliceOutsidePolytope,
                            "slice lies outside the open half-space of ambient facet " + std::to_string(i));
            continue;
        }
        if (content(nu) != 1)
            throw Error(ErrorCode::NonPrimitiveImage, "ambient facet " + std::to_string(i) +
                                                          " pulls back to non-primitive " + to_string(nu));
        images[i] = Facet{nu, a};
        raw.push_back(*images[i]);
    }
    auto pruned = prune_facets(n, std::move(raw));
    ReductionTrace trace{Polytope(n, pruned), std::vector<std::optional<std::size_t>>(ambient.facet_count()), {}};

    const Halfspaces reduced_h = trace.reduced.halfspaces();
    const VRep reduced_v = v_representation(reduced_h);
    std::vector<bool> claimed(pruned.size(), false);
    for (std::size_t i = 0; i < ambient.facet_count(); ++i) {
        if (!images[i]) continue;
        auto it = std::find(pruned.begin(), pruned.end(), *images[i]);
        if (it != pruned.end()) {
            auto k = static_cast<std::size_t>(it - pruned.begin());
            if (!claimed[k]) {
                claimed[k] = true;
                trace.defines[i] = k;
                continue;
            }
            trace.touching.push_back(i);
            continue;
        }
        auto res = minimize(reduced_v, to_rational(images[i]->normal), images[i]->offset);
        if (res.status == LpStatus::Optimal && res.value == 0) trace.touching.push_back(i);
    }
    return trace;
}

/// Pulls every ambient facet back along the slice, drops parallel images,
/// prunes redundancy and canonicalizes.
inline Polytope reduce(const Polytope& ambient, const AffineReduction& slice) {
    return reduce_traced(ambient, slice).reduced;
}

// ---------------------------------------------------------------------------
// standard models

/// CP^n: x_j + lambda >= 0, -(x_1 + ... + x_n) + lambda >= 0.
inline Polytope simplex(std::size_t n, const Rational& lambda = 1) {
    std::vector<Facet> facets;
    for (std::size_t j = 0; j < n; ++j) {
        IntVec e(n);
        e[j] = 1;
        facets.push_back({e, lambda});
    }
    facets.push_back({IntVec(n, Integer(-1)), lambda});
    return Polytope(n, std::move(facets));
}

/// CP(1, m_1, ..., m_n) from the full weight list (1, m_1, ..., m_n):
/// x_j + lambda >= 0 and -(sum m_j x_j) + lambda >= 0.
inline Polytope weighted_projective(const IntVec& weights, const Rational& lambda = 1) {
    if (weights.size() < 2 || weights.front() != 1)
        throw Error(ErrorCode::InvalidPolytope, "weights must have the form (1, m_1, ..., m_n)");
    const std::size_t n = weights.size() - 1;
    std::vector<Facet> facets;
    IntVec slanted(n);
    for (std::size_t j = 0; j < n; ++j) {
        if (weights[j + 1] < 1) throw Error(ErrorCode::InvalidPolytope, "weights must be positive");
        IntVec e(n);
        e[j] = 1;
        facets.push_back({e, lambda});
        slanted[j] = -weights[j + 1];
    }
    facets.push_back({slanted, lambda});
    return Polytope(n, std::move(facets));
}

/// The segment x + a1 >= 0, -x + a2 >= 0.
inline Polytope cp1(const Rational& a1 = 1, const Rational& a2 = 1) {
    return Polytope(1, {{{Integer(1)}, a1}, {{Integer(-1)}, a2}});
}

/// Total space of O(-1) -> CP^1: normals (1,0), (0,1), (1,1).
inline Polytope o_minus_one(const Rational& a1 = 1, const Rational& a2 = 1, const Rational& a3 = 1) {
    return Polytope(2, {{{Integer(1), Integer(0)}, a1},
                        {{Integer(0), Integer(1)}, a2},
                        {{Integer(1), Integer(1)}, a3}});
}

/// (CP^1)^n: +-x_j + lambda >= 0, ordered x_1+, x_1-, x_2+, ...
inline Polytope cube(std::size_t n, const Rational& lambda = 1) {
    std::vector<Facet> facets;
    for (std::size_t j = 0; j < n; ++j) {
        IntVec e(n), f(n);
        e[j] = 1;
        f[j] = -1;
        facets.push_back({e, lambda});
        facets.push_back({f, lambda});
    }
    return Polytope(n, std::move(facets));
}

// ---------------------------------------------------------------------------
// fan lemma

struct ConeCoordinates {
    Vertex vertex;
    IntVec coefficients;  // with respect to vertex.active_facets, in order
};

/// First vertex (in enumeration order) whose normal cone holds `target` with
/// nonnegative integer coordinates in the basis of its active normals.
inline std::optional<ConeCoordinates> vertex_cone_coords(const Polytope& p, const IntVec& target) {
    if (!is_delzant(p)) throw Error(ErrorCode::NotDelzant, "vertex cones need a Delzant polytope");
    const std::size_t n = p.dim();
    for (auto& v : vertices(p)) {
        RatMat basis(n, n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t k = 0; k < n; ++k) basis(r, k) = Rational(p.facet(v.active_facets[k]).normal[r]);
        auto c = solve_unique(basis, to_rational(target));
        if (!c) continue;
        IntVec coeffs;
        bool ok = true;
        for (const auto& x : *c) {
            if (x < 0 || boost::multiprecision::denominator(x) != 1) {
                ok = false;
                break;
            }
            coeffs.push_back(boost::multiprecision::numerator(x));
        }
        if (ok) return ConeCoordinates{std::move(v), std::move(coeffs)};
    }
    return std::nullopt;
}

struct WeightVector {
    /// One weight per facet, all >= 1, with sum m_j nu_j = 0.
    IntVec m;
    /// Facet whose weight is 1 and which plays the role of the weighted
    /// projective space's slanted facet.
    std::optional<std::size_t> pivot;

    /// Weights of the facets other than the pivot, in facet order.
    IntVec others() const {
        IntVec out;
        for (std::size_t j = 0; j < m.size(); ++j)
            if (!pivot || j != *pivot) out.push_back(m[j]);
        return out;
    }
};

/**
 * Positive integers m_j and a pivot k with m_k = 1 and sum m_j nu_j = 0.
 *
 * The target -sum(nu_j) lies in some vertex cone with coordinates c; then
 * m_j = 1 + c_j. The pivot is the last facet not active at that vertex, so
 * the remaining normals still contain a lattice basis. A zero-sum polytope
 * gets all-ones weights with the last facet as pivot.
 */
inline WeightVector monotone_weights(const Polytope& p) {
    if (!is_delzant(p)) throw Error(ErrorCode::NotDelzant, "weight lemma needs a Delzant polytope");
    if (!is_compact(p)) throw Error(ErrorCode::NotCompact, "weight lemma needs a compact polytope");
    const std::size_t d = p.facet_count();
    IntVec sum(p.dim());
    for (const auto& f : p.facets())
        for (std::size_t c = 0; c < p.dim(); ++c) sum[c] += f.normal[c];
    WeightVector w{IntVec(d, Integer(1)), std::nullopt};
    if (is_zero(sum)) {
        w.pivot = d - 1;
        return w;
    }
    IntVec target = sum;
    for (auto& x : target) x = -x;
    auto cone = vertex_cone_coords(p, target);
    if (!cone)
        throw Error(ErrorCode::NotCompact, "no vertex cone contains -sum(nu); the fan is incomplete");
    std::vector<bool> active(d, false);
    for (std::size_t k = 0; k < cone->vertex.active_facets.size(); ++k) {
        active[cone->vertex.active_facets[k]] = true;
        w.m[cone->vertex.active_facets[k]] += cone->coefficients[k];
    }
    for (std::size_t j = d; j-- > 0;)
        if (!active[j]) {
            w.pivot = j;
            break;
        }
    return w;
}

}  // namespace toric
