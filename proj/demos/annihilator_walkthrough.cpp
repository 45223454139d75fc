// Walks through the annihilator computation that drives the lemma2 check:
// in QS3, pick the 3-cycle r, form hat(r) = 1 + r + r^2, and compare the
// left annihilator with the left ideal generated by r - 1.

#include <iostream>

#include <grkit/grkit.hpp>

using namespace grkit;

int main() {
    FiniteGroup s3 = construct("fp:gens r,s; rels r^3, s^2, s r s r");
    RationalField Q;

    Elt r = s3.generator_labels().at("r");
    auto hr = hat(s3, Q, r);
    std::cout << "hat(r) = " << to_string(hr) << "\n";

    AnnihilatorBasis ann = left_annihilator(hr);
    std::cout << "dim Ann_l = " << ann.dimension << " (expect |G| - |G|/|r| = "
              << s3.order() - s3.order() / s3.element_order(r) << ")\n";
    for (const auto& b : ann.basis) std::cout << "  basis: " << to_string(b) << "\n";

    // every g (r - 1) annihilates hat(r)
    auto rm1 = sub(GroupRingElement<RationalField>::of_element(s3, Q, r),
                   GroupRingElement<RationalField>::one(s3, Q));
    for (Elt g = 0; g < s3.order(); ++g) {
        auto y = mul(GroupRingElement<RationalField>::of_element(s3, Q, g), rm1);
        if (!mul(y, hr).is_zero()) {
            std::cout << "unexpected: " << s3.element_name(g) << "(r-1) does not annihilate\n";
            return 1;
        }
    }
    std::cout << "all " << s3.order() << " translates g(r-1) annihilate hat(r)\n";
    return 0;
}
