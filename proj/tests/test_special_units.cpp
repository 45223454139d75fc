#include <catch2/catch_amalgamated.hpp>

#include <map>

#include <grkit/grkit.hpp>

using namespace grkit;

TEST_CASE("t_w hat(w) vanishing matches the coset predictor exhaustively") {
    // every non-normal cyclic <w>, all g,h outside the normalizer, small coefficients
    for (const char* spec : {"hsn:3,2", "hsn:4,2", "dicyclic:3", "dicyclic:4"}) {
        FiniteGroup G = construct(spec);
        IntegerRing Z;
        INFO(spec);
        long long checked = 0;
        for (Elt w = 1; w < G.order(); ++w) {
            Subgroup N = normalizer_of_cyclic(G, w);
            if (N.order() == G.order()) continue;
            auto wh = hat(G, Z, w);
            for (Elt g = 0; g < G.order(); ++g) {
                if (N.contains(g)) continue;
                for (Elt h = 0; h < G.order(); ++h) {
                    if (N.contains(h)) continue;
                    for (long long a : {-2, -1, 1, 2})
                        for (long long b : {-2, -1, 1, 2}) {
                            bool predicted = lemma3_predicts_zero(G, Z, w, g, h, Z.from_int(a),
                                                                  Z.from_int(b));
                            bool actual =
                                mul(t_w(G, Z, w, g, h, Z.from_int(a), Z.from_int(b)), wh)
                                    .is_zero();
                            REQUIRE(predicted == actual);
                            ++checked;
                        }
                }
            }
        }
        REQUIRE(checked > 0);
    }
}

TEST_CASE("verify_lemma3 reports") {
    auto rep = verify_lemma3(construct("hsn:3,2"));
    REQUIRE(rep.passed());
    REQUIRE(rep.cases_checked == 768);
    // vacancy is reported honestly for hamiltonian groups
    auto vac = verify_lemma3(construct("dicyclic:2"));
    REQUIRE(vac.status == VerificationReport::Status::partial);
    REQUIRE(vac.cases_checked == 0);
}

TEST_CASE("t_w rejects degenerate instances") {
    FiniteGroup s3 = construct("hsn:3,2");
    IntegerRing Z;
    Elt a = s3.generator_labels().at("a");  // order 3, <a> normal in S3
    Elt b = s3.generator_labels().at("b");
    REQUIRE_THROWS_AS(t_w(s3, Z, a, b, b, Z.one(), Z.one()), error);     // normal <w>
    REQUIRE_THROWS_AS(t_w(s3, Z, b, b, b, Z.one(), Z.one()), error);     // g inside N
    REQUIRE_THROWS_AS(t_w(s3, Z, b, a, a, Z.zero(), Z.one()), error);    // zero coefficient
}

TEST_CASE("x_w elements are unipotent units") {
    FiniteGroup q16 = construct("dicyclic:4");
    IntegerRing Z;
    Elt b = q16.generator_labels().at("b");
    Subgroup N = normalizer_of_cyclic(q16, b);
    auto one = GroupRingElement<IntegerRing>::one(q16, Z);
    for (Elt g = 0; g < q16.order(); ++g) {
        if (N.contains(g)) continue;
        auto x = x_w(q16, Z, b, g);
        // (x - 1)^2 = 0, so x * (2 - x) = 1
        auto nil = sub(x, one);
        REQUIRE(mul(nil, nil).is_zero());
        auto inv = sub(add(one, one), x);
        REQUIRE(mul(x, inv) == one);
        REQUIRE(mul(inv, x) == one);
    }
}

TEST_CASE("q16 witness pair, exact expansions") {
    WitnessPair wp = q16_witnesses();
    const FiniteGroup& G = *wp.group;
    IntegerRing Z;
    Elt a = G.generator_labels().at("a");
    Elt b = G.generator_labels().at("b");

    // u = 1 + (a^-1 - a) hat(b)
    auto expected_u = add(GroupRingElement<IntegerRing>::one(G, Z),
                          mul(sub(GroupRingElement<IntegerRing>::of_element(G, Z, G.inverse(a)),
                                  GroupRingElement<IntegerRing>::of_element(G, Z, a)),
                              hat(G, Z, b)));
    REQUIRE(wp.u == expected_u);

    // v = 6(a + a^3)(1 - a^4) + 9a^2 - 8a^6, frozen coefficient table
    std::map<Elt, long long> vc{{G.power(a, 1), 6},  {G.power(a, 2), 9},  {G.power(a, 3), 6},
                                {G.power(a, 5), -6}, {G.power(a, 6), -8}, {G.power(a, 7), -6}};
    REQUIRE(wp.v.support_size() == vc.size());
    for (const auto& [g, c] : vc) REQUIRE(wp.v.coeff(g) == Z.from_int(c));

    // v^-1 swaps the 9 and -8 coefficients
    REQUIRE(wp.v_inv.coeff(G.power(a, 2)) == Z.from_int(-8));
    REQUIRE(wp.v_inv.coeff(G.power(a, 6)) == Z.from_int(9));

    REQUIRE(wp.marker == G.mul(a, b));
    // inverses both ways + commutation
    auto one = GroupRingElement<IntegerRing>::one(G, Z);
    REQUIRE(mul(wp.u, wp.u_inv) == one);
    REQUIRE(mul(wp.u_inv, wp.u) == one);
    REQUIRE(mul(wp.v, wp.v_inv) == one);
    REQUIRE(mul(wp.v_inv, wp.v) == one);
    REQUIRE(mul(wp.u, wp.v) == mul(wp.v, wp.u));
}

TEST_CASE("h38 witness pair mirrors the q16 one") {
    WitnessPair wp = h38_witnesses();
    const FiniteGroup& G = *wp.group;
    REQUIRE(G.order() == 24);
    IntegerRing Z;
    auto one = GroupRingElement<IntegerRing>::one(G, Z);
    REQUIRE(mul(wp.u, wp.u_inv) == one);
    REQUIRE(mul(wp.v, wp.v_inv) == one);
    REQUIRE(mul(wp.u, wp.v) == mul(wp.v, wp.u));
    Elt b = G.generator_labels().at("b");
    // v lives in the <b> part: support inside <b>
    Subgroup B = cyclic_subgroup(G, b);
    for (const auto& [g, c] : wp.v.coeffs()) {
        if (Z.is_zero(c)) continue;
        REQUIRE(B.contains(g));
    }
}

TEST_CASE("witness powers obey the affine law") {
    for (auto wp : {q16_witnesses(), h38_witnesses()}) {
        IntegerRing Z;
        auto one = GroupRingElement<IntegerRing>::one(*wp.group, Z);
        auto nil = sub(wp.u, one);
        auto p = wp.u;
        for (int n = 2; n <= 50; ++n) {
            p = mul(p, wp.u);
            // u^n = 1 + n (u - 1)
            REQUIRE(p == add(one, scalar_mul(Z.from_int(n), nil)));
        }
    }
}

TEST_CASE("marker separates power supports") {
    for (auto wp : {q16_witnesses(), h38_witnesses()}) {
        IntegerRing Z;
        auto un = wp.u;
        auto vm = wp.v;
        for (int n = 1; n <= 20; ++n) {
            REQUIRE(!Z.is_zero(un.coeff(wp.marker)));
            un = mul(un, wp.u);
        }
        for (int m = 1; m <= 20; ++m) {
            REQUIRE(Z.is_zero(vm.coeff(wp.marker)));
            vm = mul(vm, wp.v);
        }
    }
}

TEST_CASE("independence window finds no coincidences") {
    for (auto wp : {q16_witnesses(), h38_witnesses()}) {
        auto rep = independence_window(wp.u, wp.v, 20);
        REQUIRE(rep.passed());
        REQUIRE(rep.cases_checked == 1600);
    }
}

TEST_CASE("independence window refuses non-commuting inputs") {
    FiniteGroup q8 = construct("dicyclic:2");
    IntegerRing Z;
    auto xa = GroupRingElement<IntegerRing>::of_element(q8, Z, q8.generator_labels().at("a"));
    auto xb = GroupRingElement<IntegerRing>::of_element(q8, Z, q8.generator_labels().at("b"));
    REQUIRE_THROWS_AS(independence_window(xa, xb, 3), error);
}

TEST_CASE("independence window catches a rigged coincidence") {
    // u and u^2 collide at exponents (2, 1): the window must flag it
    FiniteGroup c5 = construct("cyclic:5");
    IntegerRing Z;
    auto g = GroupRingElement<IntegerRing>::of_element(c5, Z, c5.generator_labels().at("a"));
    auto rep = independence_window(g, mul(g, g), 5);
    REQUIRE(rep.status == VerificationReport::Status::fail);
    REQUIRE(!rep.counterexamples.empty());
}
