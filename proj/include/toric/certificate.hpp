/**
 * Non-displaceability certificates.
 *
 * Leaves are axioms about standard models, each carrying its literature
 * reference. Product nodes multiply bounds; reduction nodes slice the child
 * polytope through its marked fiber and divide the bound by 2^(N - n).
 */
#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "toric/floer.hpp"
#include "toric/reduction.hpp"

namespace toric {

enum class ClaimKind {
    TT,  // transverse self-intersections of the marked torus fiber
    TR,  // transverse intersections of the marked fiber with the real part
};

constexpr const char* to_string(ClaimKind k) noexcept { return k == ClaimKind::TT ? "TT" : "TR"; }

enum class BaseKind { CliffordTorus, WeightedProjective, CP1, OMinusOne };

constexpr const char* to_string(BaseKind k) noexcept {
    switch (k) {
    case BaseKind::CliffordTorus: return "CliffordTorus";
    case BaseKind::WeightedProjective: return "WeightedProjective";
    case BaseKind::CP1: return "CP1";
    case BaseKind::OMinusOne: return "OMinusOne";
    }
    return "?";
}

struct BaseFact {
    BaseKind kind = BaseKind::CliffordTorus;
    /// Full weight list (1, m_1, ..., m_n); WeightedProjective only.
    IntVec weights;
    Polytope instance;
    /// Unimodular U; normals of the instance become U·nu before matching.
    std::optional<IntMat> basis_change;
    /// Defaults to the certificate's claim kind.
    std::optional<ClaimKind> kind_override;
};

struct CertNode {
    enum class Type { Leaf, Product, Reduction };

    Type type = Type::Leaf;
    std::optional<BaseFact> fact;
    std::vector<CertNode> children;  // Product: factors; Reduction: exactly one
    std::optional<AffineReduction> slice;
    std::optional<Polytope> target;

    static CertNode leaf(BaseFact f) {
        CertNode n;
        n.fact = std::move(f);
        return n;
    }
    static CertNode product(std::vector<CertNode> factors) {
        CertNode n;
        n.type = Type::Product;
        n.children = std::move(factors);
        return n;
    }
    static CertNode reduction(CertNode child, AffineReduction slice, std::optional<Polytope> target = {}) {
        CertNode n;
        n.type = Type::Reduction;
        n.children.push_back(std::move(child));
        n.slice = std::move(slice);
        n.target = std::move(target);
        return n;
    }
};

struct Certificate {
    std::string name;
    std::string citation;
    ClaimKind kind = ClaimKind::TT;
    CertNode root;
    std::optional<Polytope> target;
    std::optional<RatVec> marked_point;
};

struct VerifiedClaim {
    Polytope polytope;  // canonical form
    RatVec marked_point;
    ClaimKind kind = ClaimKind::TT;
    Integer bound;
    std::vector<std::string> citations;
    std::vector<std::string> hypotheses;
    std::vector<std::string> steps;

    friend bool operator==(const VerifiedClaim& a, const VerifiedClaim& b) {
        return a.polytope == b.polytope && a.marked_point == b.marked_point && a.kind == b.kind &&
               a.bound == b.bound && a.citations == b.citations && a.hypotheses == b.hypotheses;
    }
};

// ---------------------------------------------------------------------------
// base facts

inline Polytope base_model(const BaseFact& f) {
    switch (f.kind) {
    case BaseKind::CliffordTorus: return simplex(f.instance.dim());
    case BaseKind::WeightedProjective:
        if (f.weights.size() != f.instance.dim() + 1)
            throw Error(ErrorCode::ModelMismatch, "weight list " + to_string(f.weights) + " does not fit dimension " +
                                                      std::to_string(f.instance.dim()));
        if (f.weights.front() != 1)
            throw Error(ErrorCode::UnsupportedClaim,
                        "only weights of the form (1, m_1, ..., m_n) are axiomatized, got " + to_string(f.weights));
        return weighted_projective(f.weights);
    case BaseKind::CP1: return cp1();
    case BaseKind::OMinusOne: return o_minus_one();
    }
    throw Error(ErrorCode::UnsupportedClaim, "unknown base fact");
}

inline std::string base_citation(const BaseFact& f, ClaimKind kind) {
    const std::string n = std::to_string(f.instance.dim());
    switch (f.kind) {
    case BaseKind::CliffordTorus:
        if (kind == ClaimKind::TT)
            return "Clifford torus of CP^" + n + ": #(psi(T0) ⋔ T0) >= 2^" + n +
                   " (Biran-Entov-Polterovich; Cho)";
        if (f.instance.dim() % 2 == 1)
            return "Clifford torus of CP^" + n + ": #(psi(T0) ⋔ RP^" + n + ") >= 2^" +
                   std::to_string((f.instance.dim() + 1) / 2) + " (Alston)";
        return "Clifford torus of CP^" + n + ": psi(T0) ∩ RP^" + n +
               " nonempty (Biran-Cornea; Entov-Polterovich; Tamarkin)";
    case BaseKind::WeightedProjective:
        return "centered fiber of CP" + to_string(f.weights) + ": #(psi(T0) ⋔ T0) >= 2^" + n +
               " (Woodward; Cho-Poddar)";
    case BaseKind::CP1: return "equator of CP^1: #(psi(S) ⋔ S) >= 2";
    case BaseKind::OMinusOne:
        return "special fiber of O(-1) -> CP^1 over the equidistant point is non-displaceable, "
               "#(psi(T) ⋔ T) >= 4 (Fukaya-Oh-Ohta-Ono; Cho)";
    }
    return {};
}

inline Integer base_bound(const BaseFact& f, ClaimKind kind) {
    const std::size_t n = f.instance.dim();
    Integer two_n = Integer(1) << n;
    if (kind == ClaimKind::TT) {
        switch (f.kind) {
        case BaseKind::CliffordTorus:
        case BaseKind::WeightedProjective: return two_n;
        case BaseKind::CP1: return 2;
        case BaseKind::OMinusOne: return 4;
        }
    }
    switch (f.kind) {
    case BaseKind::CliffordTorus: return n % 2 == 1 ? Integer(1) << ((n + 1) / 2) : Integer(1);
    case BaseKind::CP1: return 2;
    default: break;
    }
    throw Error(ErrorCode::UnsupportedClaim,
                std::string("no TR base fact for ") + to_string(f.kind));
}

inline Polytope apply_basis_change(const Polytope& p, const IntMat& u) {
    if (u.rows() != p.dim() || u.cols() != p.dim())
        throw Error(ErrorCode::DimensionMismatch, "basis change must be " + std::to_string(p.dim()) + " x " +
                                                      std::to_string(p.dim()));
    if (!is_unimodular(u)) throw Error(ErrorCode::ModelMismatch, "basis change is not unimodular");
    std::vector<Facet> facets;
    for (const auto& f : p.facets()) facets.push_back({u * f.normal, f.offset});
    return Polytope(p.dim(), std::move(facets));
}

// ---------------------------------------------------------------------------
// verification

namespace detail {

inline void merge(std::vector<std::string>& into, const std::vector<std::string>& from) {
    for (const auto& s : from)
        if (std::find(into.begin(), into.end(), s) == into.end()) into.push_back(s);
}

inline const char* kProductHypothesis =
    "product closure: intersection bounds of the factors' marked fibers multiply on the product (assumed)";
inline const char* kNonTransverseNote = "bound 1 records a nonempty intersection, not a transverse count";

inline VerifiedClaim verify_node(const CertNode& node, ClaimKind kind, const std::string& path) {
    switch (node.type) {
    case CertNode::Type::Leaf: {
        if (!node.fact) throw Error(ErrorCode::ParseError, path + ": leaf without base fact");
        const BaseFact& f = *node.fact;
        ClaimKind k = f.kind_override.value_or(kind);
        if (k != kind)
            throw Error(ErrorCode::KindMismatch,
                        path + ": leaf claims " + to_string(k) + " inside a " + to_string(kind) + " certificate");
        Polytope matched = f.basis_change ? apply_basis_change(f.instance, *f.basis_change) : f.instance;
        Polytope model = base_model(f);
        auto dt = match_dilate_translate(matched, model);
        if (!dt)
            throw Error(ErrorCode::ModelMismatch,
                        path + ": instance is not a dilate/translate of the " + to_string(f.kind) + " model");
        auto centre = equidistant_point(f.instance);
        if (!centre) throw Error(ErrorCode::ModelMismatch, path + ": instance has no equidistant point");
        VerifiedClaim c{canonical_form(f.instance), centre->point, k, base_bound(f, k), {}, {}, {}};
        c.citations.push_back(base_citation(f, k));
        if (c.bound == 1) c.hypotheses.push_back(kNonTransverseNote);
        c.steps.push_back(path + ": " + to_string(f.kind) + " leaf, dim " + std::to_string(f.instance.dim()) +
                          ", scale " + to_string(dt->scale) + ", bound " + c.bound.str());
        return c;
    }
    case CertNode::Type::Product: {
        if (node.children.empty()) throw Error(ErrorCode::ParseError, path + ": empty product");
        std::optional<VerifiedClaim> acc;
        for (std::size_t i = 0; i < node.children.size(); ++i) {
            auto c = verify_node(node.children[i], kind, path + "/product/" + std::to_string(i));
            if (!acc) {
                acc = std::move(c);
                continue;
            }
            acc->polytope = canonical_form(product(acc->polytope, c.polytope));
            acc->marked_point.insert(acc->marked_point.end(), c.marked_point.begin(), c.marked_point.end());
            acc->bound *= c.bound;
            merge(acc->citations, c.citations);
            merge(acc->hypotheses, c.hypotheses);
            acc->steps.insert(acc->steps.end(), c.steps.begin(), c.steps.end());
        }
        if (node.children.size() > 1) merge(acc->hypotheses, {kProductHypothesis});
        acc->steps.push_back(path + ": product of " + std::to_string(node.children.size()) + ", bound " +
                             acc->bound.str());
        return *acc;
    }
    case CertNode::Type::Reduction: {
        if (node.children.size() != 1 || !node.slice)
            throw Error(ErrorCode::ParseError, path + ": reduction needs one child and a slice");
        auto c = verify_node(node.children.front(), kind, path + "/reduce");
        const AffineReduction& s = *node.slice;
        if (s.ambient_dim() != c.polytope.dim())
            throw Error(ErrorCode::DimensionMismatch, path + ": slice ambient dimension " +
                                                          std::to_string(s.ambient_dim()) + " but child has " +
                                                          std::to_string(c.polytope.dim()));
        auto y = s.preimage(c.marked_point);
        if (!y)
            throw Error(ErrorCode::MarkedPointMismatch,
                        path + ": slice misses the marked point " + to_string(c.marked_point));
        auto trace = reduce_traced(c.polytope, s);
        if (!trace.regular_level()) {
            std::string which;
            for (auto i : trace.touching) which += (which.empty() ? "" : ", ") + std::to_string(i);
            throw Error(ErrorCode::ReducedPolytopeMismatch,
                        path + ": singular level, dropped ambient facets {" + which +
                            "} meet the reduced polytope, so it is not the moment polytope of the quotient");
        }
        if (!trace.reduced.contains_in_interior(*y))
            throw Error(ErrorCode::MarkedPointMismatch, path + ": reduced marked point is not interior");
        if (node.target && !same_polytope(trace.reduced, *node.target))
            throw Error(ErrorCode::ReducedPolytopeMismatch, path + ": reduction does not give the declared target");
        const std::size_t drop = s.ambient_dim() - s.reduced_dim();
        Integer div = Integer(1) << drop;
        if (c.bound % div != 0)
            throw Error(ErrorCode::BoundNotIntegral,
                        path + ": bound " + c.bound.str() + " is not divisible by 2^" + std::to_string(drop));
        c.bound /= div;
        c.polytope = trace.reduced;
        c.marked_point = std::move(*y);
        c.steps.push_back(path + ": reduce " + std::to_string(s.ambient_dim()) + " -> " +
                          std::to_string(s.reduced_dim()) + ", bound " + c.bound.str());
        return c;
    }
    }
    throw Error(ErrorCode::ParseError, path + ": unknown node");
}

}  // namespace detail

/// Checks every node; returns the claim at the root.
inline VerifiedClaim verify(const Certificate& cert) {
    auto c = detail::verify_node(cert.root, cert.kind, "tree");
    if (cert.target && !same_polytope(c.polytope, *cert.target))
        throw Error(ErrorCode::ReducedPolytopeMismatch, "certificate result differs from the declared target");
    if (cert.marked_point && *cert.marked_point != c.marked_point)
        throw Error(ErrorCode::MarkedPointMismatch, "declared marked point " + to_string(*cert.marked_point) +
                                                        " but the tree gives " + to_string(c.marked_point));
    if (c.bound < 1) throw Error(ErrorCode::BoundNotIntegral, "bound below 1");
    return c;
}

// ---------------------------------------------------------------------------
// generators

/**
 * For compact monotone Delzant P: the weighted projective space of the
 * weight lemma, sliced by x = (nu_j)_{j != k} · y.
 */
inline Certificate auto_certify_monotone(const Polytope& p) {
    auto lambda = is_monotone(p);
    if (!lambda) throw Error(ErrorCode::NotMonotone, "offsets are not all equal and positive");
    if (!is_compact(p)) throw Error(ErrorCode::NotCompact, "polytope is unbounded");
    if (!is_delzant(p)) throw Error(ErrorCode::NotDelzant, "polytope is not Delzant");
    WeightVector w = monotone_weights(p);
    const std::size_t k = *w.pivot;

    IntVec weights{Integer(1)};
    IntMat a(p.facet_count() - 1, p.dim());
    for (std::size_t j = 0, r = 0; j < p.facet_count(); ++j) {
        if (j == k) continue;
        weights.push_back(w.m[j]);
        for (std::size_t c = 0; c < p.dim(); ++c) a(r, c) = p.facet(j).normal[c];
        ++r;
    }
    BaseFact leaf{BaseKind::WeightedProjective, weights, weighted_projective(weights, *lambda), std::nullopt,
                  std::nullopt};
    Certificate cert;
    cert.name = "auto";
    cert.citation = "weighted projective space CP" + to_string(weights) + " reduced to the monotone polytope";
    cert.kind = ClaimKind::TT;
    cert.root = CertNode::reduction(CertNode::leaf(std::move(leaf)), AffineReduction::linear(std::move(a)), p);
    return cert;
}

struct TrBound {
    long long bound = 0;
    std::string caveat;
};

/// HF(P) as a lower bound for #(psi(R) ⋔ T).
inline TrBound hf_lower_bound_tr(const Polytope& p, std::size_t dim_limit = kDefaultRankDimLimit) {
    return {hf(p, dim_limit),
            "combinatorial invariant only: reading it as an intersection bound assumes the Floer homology "
            "of (R, T) is well defined, e.g. minimal Maslov number of R at least 2"};
}

}  // namespace toric
