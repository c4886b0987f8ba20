/**
 * The combinatorial Floer invariant of an integral polytope.
 *
 * CF^n is the GF(2) span of the 2^n sign vectors eps in {+1,-1}^n. Index a
 * sign vector by the bitmask whose bit i is set when eps_i = -1; then flipping
 * the signs selected by nu mod 2 is XOR with a mask, and
 *
 *     d_P(eps) = sum_i eps XOR (nu_i mod 2)
 *
 * is convolution by the generator g = sum_i e_{nu_i mod 2} in the group
 * algebra of (Z/2)^n. Its matrix is group-circulant: row eps is g translated
 * by eps, so only g is stored and rows are produced on demand.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "toric/gf2.hpp"
#include "toric/polytope.hpp"

namespace toric {

inline constexpr std::size_t kDefaultRankDimLimit = 13;

/// A vector of CF^n: 2^n coefficients, bit i of an index meaning eps_i = -1.
class CFVector {
public:
    explicit CFVector(std::size_t n) : n_(n), bits_(std::size_t{1} << n) {}

    static CFVector basis(std::size_t n, std::uint32_t eps) {
        CFVector v(n);
        v.bits_.set(eps);
        return v;
    }

    std::size_t dim() const noexcept { return n_; }
    std::size_t size() const noexcept { return bits_.size(); }
    bool coefficient(std::uint32_t eps) const { return bits_.get(eps); }
    void toggle(std::uint32_t eps) { bits_.flip(eps); }
    bool is_zero() const { return bits_.none(); }

    CFVector& operator+=(const CFVector& o) {
        bits_ ^= o.bits_;
        return *this;
    }
    friend bool operator==(const CFVector&, const CFVector&) = default;

private:
    std::size_t n_;
    BitVector bits_;
};

class BoundaryOp {
public:
    BoundaryOp(std::size_t n, std::vector<std::uint32_t> translations)
        : n_(n), translations_(std::move(translations)) {
        if (n_ > 31) throw Error(ErrorCode::DimensionLimit, "sign-vector masks hold at most 31 coordinates");
        const std::uint32_t limit = std::uint32_t{1} << n_;
        for (auto t : translations_)
            if (t >= limit) throw Error(ErrorCode::DimensionMismatch, "translation mask exceeds dimension");
    }

    std::size_t dim() const noexcept { return n_; }
    std::size_t facet_count() const noexcept { return translations_.size(); }

    /// nu_i mod 2 as masks, one per facet, multiplicity kept.
    const std::vector<std::uint32_t>& translations() const noexcept { return translations_; }

    /// Masks occurring an odd number of times: the support of the generator.
    std::vector<std::uint32_t> generator_support() const {
        std::vector<std::uint8_t> parity(std::size_t{1} << n_, 0);
        for (auto t : translations_) parity[t] ^= 1;
        std::vector<std::uint32_t> out;
        for (std::uint32_t m = 0; m < parity.size(); ++m)
            if (parity[m]) out.push_back(m);
        return out;
    }

    CFVector apply(const CFVector& v) const {
        if (v.dim() != n_) throw Error(ErrorCode::DimensionMismatch, "CF vector dimension");
        CFVector out(n_);
        const auto support = generator_support();
        for (std::uint32_t eps = 0; eps < v.size(); ++eps) {
            if (!v.coefficient(eps)) continue;
            for (auto t : support) out.toggle(eps ^ t);
        }
        return out;
    }

    bool is_zero() const { return generator_support().empty(); }

private:
    std::size_t n_;
    std::vector<std::uint32_t> translations_;
};

inline std::uint32_t parity_mask(const IntVec& normal) {
    std::uint32_t mask = 0;
    for (std::size_t i = 0; i < normal.size(); ++i)
        if (boost::multiprecision::bit_test(abs_value(normal[i]), 0)) mask |= std::uint32_t{1} << i;
    return mask;
}

inline BoundaryOp boundary_op(const Polytope& p) {
    if (p.dim() > 31) throw Error(ErrorCode::DimensionLimit, "dimension too large for sign-vector masks");
    std::vector<std::uint32_t> translations;
    translations.reserve(p.facet_count());
    for (const auto& f : p.facets()) translations.push_back(parity_mask(f.normal));
    return BoundaryOp(p.dim(), std::move(translations));
}

struct RankNullity {
    std::uint64_t rank = 0;
    std::uint64_t nullity = 0;
};

/// Rank and nullity of d_P on CF^n by packed elimination of the 2^n x 2^n
/// group-circulant matrix.
inline RankNullity rank_gf2(const BoundaryOp& op, std::size_t dim_limit = kDefaultRankDimLimit) {
    const std::size_t n = op.dim();
    if (n > dim_limit)
        throw Error(ErrorCode::DimensionLimit,
                    "n = " + std::to_string(n) + " exceeds the rank limit " + std::to_string(dim_limit));
    const std::size_t size = std::size_t{1} << n;
    const auto support = op.generator_support();
    if (support.empty()) return {0, size};

    BitMatrix m(size, size);
    for (std::uint32_t eps = 0; eps < size; ++eps)
        for (auto t : support) m.flip(eps, eps ^ t);
    const std::uint64_t r = m.eliminate();
    return {r, size - r};
}

/// nullity - rank of d_P for an even polytope.
inline long long hf_even(const Polytope& p, std::size_t dim_limit = kDefaultRankDimLimit) {
    if (!is_even(p))
        throw Error(ErrorCode::OddPolytope,
                    "d = " + std::to_string(p.facet_count()) + " is odd; use hf() for the P x P definition");
    auto rn = rank_gf2(boundary_op(p), dim_limit);
    return static_cast<long long>(rn.nullity) - static_cast<long long>(rn.rank);
}

struct FloerReport {
    long long hf = 0;
    /// nullity and rank of the operator whose difference was taken: d_P for
    /// even P, d_{PxP} otherwise.
    RankNullity squared_side;
    bool via_square = false;
};

inline std::uint64_t exact_sqrt(std::uint64_t v, bool& exact) {
    std::uint64_t r = 0;
    while ((r + 1) * (r + 1) <= v) ++r;
    exact = r * r == v;
    return r;
}

/// HF(P) = sqrt(nullity - rank of d_{PxP}). Reported together with the
/// intermediate rank data.
inline FloerReport floer_report(const Polytope& p, std::size_t dim_limit = kDefaultRankDimLimit) {
    FloerReport out;
    auto pp = product(p, p);
    out.squared_side = rank_gf2(boundary_op(pp), dim_limit);
    out.via_square = true;
    long long diff = static_cast<long long>(out.squared_side.nullity) -
                     static_cast<long long>(out.squared_side.rank);
    if (diff < 0)
        throw Error(ErrorCode::NegativeInvariant,
                    "nullity - rank of d_{PxP} is " + std::to_string(diff));
    bool exact = false;
    auto root = exact_sqrt(static_cast<std::uint64_t>(diff), exact);
    if (!exact)
        throw Error(ErrorCode::NonSquareInvariant, std::to_string(diff) + " is not a perfect square");
    out.hf = static_cast<long long>(root);
    return out;
}

inline long long hf(const Polytope& p, std::size_t dim_limit = kDefaultRankDimLimit) {
    return floer_report(p, dim_limit).hf;
}

}  // namespace toric
