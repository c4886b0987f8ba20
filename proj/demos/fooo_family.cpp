// Sweeps the blow-up parameter of the two-point blowup family and reports
// where the product-and-reduce certificate goes through.

#include <iostream>

#include "toric/toric.hpp"

using namespace toric;

namespace {

Rational q(long p, long r = 1) { return Rational(Integer(p), Integer(r)); }

BaseFact fact(BaseKind kind, Polytope instance) { return {kind, {}, std::move(instance), std::nullopt, std::nullopt}; }

Certificate family(const Rational& lambda, const Rational& alpha) {
    Certificate c;
    c.name = "lambda = " + to_string(lambda);
    c.kind = ClaimKind::TT;
    Polytope target(2, {{{1, 0}, 1}, {{0, 1}, 1}, {{-1, -1}, 1}, {{1, 1}, 1 + alpha}, {{0, -1}, 1 - 2 * alpha}});
    c.root = CertNode::reduction(
        CertNode::product({CertNode::leaf(fact(BaseKind::OMinusOne, o_minus_one(1, 1 + lambda, 1 + alpha))),
                           CertNode::leaf(fact(BaseKind::CP1, cp1(1, 1 - 2 * alpha))),
                           CertNode::leaf(fact(BaseKind::CP1, cp1(1 + 4 * alpha - 2 * lambda, 1)))}),
        AffineReduction::linear(IntMat::from_rows({{1, 0}, {0, 1}, {0, 1}, {1, 1}})), target);
    return c;
}

}  // namespace

int main() {
    const Rational alpha = q(1, 4);
    for (long k = 1; k <= 8; ++k) {
        const Rational lambda = q(k, 16);
        std::cout << "lambda = " << to_string(lambda) << ": ";
        try {
            auto claim = verify(family(lambda, alpha));
            std::cout << "fiber over " << to_string(claim.marked_point) << ", bound " << claim.bound << "\n";
        } catch (const Error& e) {
            std::cout << to_string(e.code()) << "\n";
        }
    }
}
