// Shared helpers for the test suites.
#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

#include "toric/toric.hpp"

namespace toric::testing {

inline Rational R(long num, long den = 1) { return Rational(Integer(num), Integer(den)); }

inline IntVec iv(std::initializer_list<long> xs) {
    IntVec v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

inline RatVec rv(std::initializer_list<Rational> xs) { return RatVec(xs); }

inline IntMat im(std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<IntVec> r;
    for (auto row : rows) r.push_back(iv(row));
    return IntMat::from_rows(r);
}

inline Facet fct(std::initializer_list<long> normal, Rational offset) { return {iv(normal), std::move(offset)}; }

/// Primitive normals with entries in [-range, range] and offsets in
/// {1, ..., 3}: the origin is interior, so the system is always valid. In
/// dimension 1 only six distinct facets exist, so d is capped there.
inline Polytope random_polytope(std::mt19937_64& rng, std::size_t n, std::size_t d, long range = 2) {
    if (n == 1) d = std::min<std::size_t>(d, 6);
    std::uniform_int_distribution<long> entry(-range, range), off(1, 3);
    std::vector<Facet> facets;
    while (facets.size() < d) {
        IntVec v(n);
        for (auto& x : v) x = entry(rng);
        if (is_zero(v) || content(v) != 1) continue;
        Facet f{v, Rational(off(rng))};
        bool dup = false;
        for (const auto& g : facets) dup = dup || g == f;
        if (!dup) facets.push_back(std::move(f));
    }
    return Polytope(n, std::move(facets));
}

/// An even number of facets, at most max_d.
inline Polytope random_even_polytope(std::mt19937_64& rng, std::size_t n, std::size_t max_d, long range = 2) {
    const std::size_t top = n == 1 ? std::min<std::size_t>(max_d / 2, 3) : max_d / 2;
    std::uniform_int_distribution<std::size_t> half(std::max<std::size_t>(1, (n + 1) / 2), top);
    return random_polytope(rng, n, 2 * half(rng), range);
}

inline BaseFact base(BaseKind kind, Polytope instance, IntVec weights = {}) {
    return BaseFact{kind, std::move(weights), std::move(instance), std::nullopt, std::nullopt};
}

inline Polytope hexagon() {
    return Polytope(2, {fct({-1, -1}, 1), fct({-1, 0}, 1), fct({0, -1}, 1), fct({0, 1}, 1), fct({1, 0}, 1),
                        fct({1, 1}, 1)});
}

inline Polytope cp2_blowup1() {
    return Polytope(2, {fct({1, 0}, 1), fct({0, 1}, 1), fct({-1, -1}, 1), fct({1, 1}, 1)});
}

/// CP^2 blown up twice with sizes alpha and 1 - 2 alpha.
inline Polytope fooo_target(const Rational& alpha) {
    return Polytope(2, {fct({1, 0}, 1), fct({0, 1}, 1), fct({-1, -1}, 1), fct({1, 1}, 1 + alpha),
                        fct({0, -1}, 1 - 2 * alpha)});
}

inline Polytope fooo_ambient(const Rational& lambda, const Rational& alpha) {
    return product(product(o_minus_one(1, 1 + lambda, 1 + alpha), cp1(1, 1 - 2 * alpha)),
                   cp1(1 + 4 * alpha - 2 * lambda, 1));
}

inline AffineReduction fooo_slice() { return AffineReduction::linear(im({{1, 0}, {0, 1}, {0, 1}, {1, 1}})); }

inline Certificate fooo_certificate(const Rational& lambda, const Rational& alpha = R(1, 4)) {
    Certificate c;
    c.name = "fooo";
    c.kind = ClaimKind::TT;
    c.root = CertNode::reduction(
        CertNode::product({CertNode::leaf(base(BaseKind::OMinusOne, o_minus_one(1, 1 + lambda, 1 + alpha))),
                           CertNode::leaf(base(BaseKind::CP1, cp1(1, 1 - 2 * alpha))),
                           CertNode::leaf(base(BaseKind::CP1, cp1(1 + 4 * alpha - 2 * lambda, 1)))}),
        fooo_slice(), fooo_target(alpha));
    c.marked_point = rv({lambda - alpha, -alpha});
    return c;
}

inline Polytope mcduff_target() {
    return Polytope(2, {fct({1, 0}, 1), fct({0, 1}, 1), fct({0, -1}, 1), fct({-1, -3}, 3), fct({-1, -2}, 3)});
}

inline Polytope mcduff_wp(const Rational& lambda) {
    return Polytope(2, {fct({1, 0}, 1), fct({0, 1}, 1 + lambda), fct({-1, -2}, 1 + 2 * lambda)});
}

inline Polytope mcduff_ambient(const Rational& lambda) {
    return product(product(mcduff_wp(lambda), cp1()), o_minus_one(3, 3 - lambda, 3));
}

inline AffineReduction mcduff_slice() {
    return AffineReduction::linear(im({{1, 0}, {0, 1}, {0, 1}, {-1, -2}, {0, -1}}));
}

inline Certificate mcduff_certificate(const Rational& lambda) {
    Certificate c;
    c.name = "mcduff";
    c.kind = ClaimKind::TT;
    c.root = CertNode::reduction(
        CertNode::product({CertNode::leaf(base(BaseKind::WeightedProjective, mcduff_wp(lambda), iv({1, 1, 2}))),
                           CertNode::leaf(base(BaseKind::CP1, cp1())),
                           CertNode::leaf(base(BaseKind::OMinusOne, o_minus_one(3, 3 - lambda, 3)))}),
        mcduff_slice(), mcduff_target());
    c.marked_point = rv({lambda, R(0)});
    return c;
}

/// x_{n+1} = 0 inside CP^{n+1}, under the Clifford TR fact.
inline Certificate clifford_tr_certificate(std::size_t n) {
    IntMat a(n + 1, n);
    for (std::size_t i = 0; i < n; ++i) a(i, i) = 1;
    Certificate c;
    c.name = "clifford";
    c.kind = ClaimKind::TR;
    c.root = CertNode::reduction(CertNode::leaf(base(BaseKind::CliffordTorus, simplex(n + 1))),
                                 AffineReduction::linear(a), simplex(n));
    return c;
}

inline Certificate hexagon_tr_certificate() {
    Certificate c;
    c.name = "hexagon";
    c.kind = ClaimKind::TR;
    std::vector<CertNode> factors(3, CertNode::leaf(base(BaseKind::CP1, cp1())));
    c.root = CertNode::reduction(CertNode::product(factors),
                                 AffineReduction::linear(im({{1, 0}, {0, 1}, {1, 1}})), hexagon());
    return c;
}

}  // namespace toric::testing
