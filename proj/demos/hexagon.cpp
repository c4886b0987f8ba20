// Builds the monotone hexagon as a slice of the cube, computes its Floer
// invariant and verifies the torus/real-part bound through the reduction.

#include <iostream>

#include "toric/toric.hpp"

using namespace toric;

int main() {
    const Polytope cube3 = cube(3);
    const auto slice = AffineReduction::linear(IntMat::from_rows({{1, 0}, {0, 1}, {1, 1}}));
    const Polytope hex = reduce(cube3, slice);

    std::cout << "hexagon facets:\n";
    for (const auto& f : hex.facets()) std::cout << "  " << to_string(f.normal) << " : " << to_string(f.offset) << "\n";
    std::cout << "HF = " << hf(hex) << "\n";

    Certificate cert;
    cert.name = "hexagon";
    cert.kind = ClaimKind::TR;
    std::vector<CertNode> circles;
    for (int i = 0; i < 3; ++i) circles.push_back(CertNode::leaf({BaseKind::CP1, {}, cp1(), std::nullopt, std::nullopt}));
    cert.root = CertNode::reduction(CertNode::product(circles), slice, hex);

    const auto claim = verify(cert);
    std::cout << "bound " << claim.bound << " at " << to_string(claim.marked_point) << "\n";
    for (const auto& s : claim.steps) std::cout << "  " << s << "\n";
    for (const auto& h : claim.hypotheses) std::cout << "  assumes: " << h << "\n";
}
