// Prints the generalized-quaternion witness pair and the affine pattern of
// its powers: u^n stays supported on 1 and the coset a<b>, with coefficients
// growing linearly in n, so no two powers collide.

#include <iostream>

#include <grkit/grkit.hpp>

using namespace grkit;

int main() {
    WitnessPair wp = q16_witnesses();
    const FiniteGroup& G = *wp.group;

    std::cout << "group " << wp.group_name << ", order " << G.order() << "\n";
    std::cout << "u     = " << to_string(wp.u) << "\n";
    std::cout << "u^-1  = " << to_string(wp.u_inv) << "\n";
    std::cout << "v     = " << to_string(wp.v) << "\n";
    std::cout << "v^-1  = " << to_string(wp.v_inv) << "\n";

    auto un = wp.u;
    for (int n = 2; n <= 5; ++n) {
        un = mul(un, wp.u);
        std::cout << "u^" << n << "  = " << to_string(un) << "\n";
    }

    VerificationReport win = independence_window(wp.u, wp.v, 20);
    std::cout << win.to_text() << "\n";
    return win.passed() ? 0 : 1;
}
