#include <catch2/catch_amalgamated.hpp>

#include <map>

#include <grkit/grkit.hpp>

using namespace grkit;

namespace {

// independent oracle: count units of F[G] by pairing every element with every
// other and checking both products against 1. Quadratic, tiny inputs only.
template <FiniteField F>
std::size_t units_by_pairing(const FiniteGroup& G, F f) {
    std::vector<GroupRingElement<F>> all;
    std::uint64_t total = 1;
    for (int i = 0; i < G.order(); ++i) total *= f.field_size();
    for (std::uint64_t code = 0; code < total; ++code) {
        std::uint64_t c = code;
        auto x = GroupRingElement<F>::zero(G, f);
        for (Elt g = 0; g < G.order(); ++g) {
            x.add_to(g, f.value_at(c % f.field_size()));
            c /= f.field_size();
        }
        all.push_back(std::move(x));
    }
    auto one = GroupRingElement<F>::one(G, f);
    std::size_t count = 0;
    for (const auto& x : all)
        for (const auto& y : all)
            if (mul(x, y) == one && mul(y, x) == one) {
                ++count;
                break;
            }
    return count;
}

}  // namespace

TEST_CASE("unit counts over tiny modular group algebras") {
    FiniteGroup c2 = construct("cyclic:2");
    FiniteGroup c3 = construct("cyclic:3");
    PrimeField f2(2), f3(3);
    REQUIRE(enumerate_units(c2, f2).size() == 2);
    REQUIRE(enumerate_units(c3, f2).size() == 3);
    REQUIRE(enumerate_units(c2, f3).size() == 4);
}

TEST_CASE("enumeration agrees with the pairing oracle") {
    for (const char* spec : {"cyclic:2", "cyclic:3", "cyclic:4"}) {
        FiniteGroup G = construct(spec);
        PrimeField f2(2);
        INFO(spec);
        REQUIRE(enumerate_units(G, f2).size() == units_by_pairing(G, f2));
    }
    FiniteGroup c2 = construct("cyclic:2");
    PrimeField f3(3);
    REQUIRE(enumerate_units(c2, f3).size() == units_by_pairing(c2, f3));
    ExtensionField f4(2, 2);
    REQUIRE(enumerate_units(c2, f4).size() == units_by_pairing(c2, f4));
}

TEST_CASE("every enumerated unit actually inverts") {
    FiniteGroup c6 = construct("cyclic:6");
    PrimeField f2(2);
    auto us = enumerate_units(c6, f2);
    auto one = GroupRingElement<PrimeField>::one(c6, f2);
    for (const auto& u : us) {
        auto v = inverse(u);
        REQUIRE(mul(u, v) == one);
        REQUIRE(mul(v, u) == one);
    }
    // group-like: units are closed under product
    REQUIRE(is_unit(mul(us[0], us[us.size() - 1])));
}

TEST_CASE("enumeration budget trips on big state spaces") {
    FiniteGroup c15 = construct("cyclic:15");
    PrimeField f7(7);
    REQUIRE_THROWS_AS(enumerate_units(c15, f7, 1000), budget_error);
}

TEST_CASE("integral units: trivial scan on torsion abelian groups") {
    // for exponent {2,3,4,6} abelian groups only +-g survive a [-2,2] scan
    for (const char* spec : {"cyclic:2", "cyclic:3", "cyclic:4", "cyclic:6", "abelian:2,2"}) {
        FiniteGroup G = construct(spec);
        INFO(spec);
        auto scan = trivial_unit_scan(G, 2);
        REQUIRE(scan.only_trivial());
        REQUIRE(scan.units_found == 2LL * G.order());
    }
}

TEST_CASE("integral units: C8 has a nontrivial one in range") {
    // rank(C8) = 1, and representatives appear at coefficient bound 2
    FiniteGroup c8 = construct("cyclic:8");
    auto scan = trivial_unit_scan(c8, 2);
    REQUIRE(!scan.only_trivial());
    REQUIRE(scan.nontrivial_count == 32);
    // every reported nontrivial unit is a genuine unit with augmentation +-1
    IntegerRing Z;
    for (const auto& u : scan.nontrivial) {
        REQUIRE(is_unit(u));
        auto chi = augmentation(u);
        REQUIRE((chi == Z.one() || chi == Z.from_int(-1)));
    }
}

TEST_CASE("integral unit inverse round trip") {
    FiniteGroup q16 = construct("dicyclic:4");
    auto wp = q16_witnesses();
    auto one = GroupRingElement<IntegerRing>::one(q16, IntegerRing{});
    REQUIRE(is_unit(wp.u));
    REQUIRE(mul(inverse(wp.u), wp.u) == GroupRingElement<IntegerRing>::one(*wp.group, IntegerRing{}));
    // non-units are rejected
    Elt a = q16.generator_labels().at("a");
    auto not_unit = add(one, GroupRingElement<IntegerRing>::of_element(q16, IntegerRing{}, a));
    REQUIRE(!is_unit(not_unit));
    REQUIRE_THROWS_AS(inverse(not_unit), error);
}

TEST_CASE("unit order detects finite and infinite orders") {
    FiniteGroup c6 = construct("cyclic:6");
    IntegerRing Z;
    Elt a = c6.generator_labels().at("a");
    auto g = GroupRingElement<IntegerRing>::of_element(c6, Z, a);
    REQUIRE(unit_order(g) == 6);
    REQUIRE(unit_order(neg(GroupRingElement<IntegerRing>::one(c6, Z))) == 2);

    auto wp = q16_witnesses();
    REQUIRE(!unit_order(wp.u, 100).has_value());
    REQUIRE(!unit_order(wp.v, 100).has_value());
}

TEST_CASE("hat-based unipotents: (1 + alpha hat(w))^p = 1 over F_p") {
    for (std::uint64_t p : {2ull, 3ull}) {
        PrimeField f(p);
        FiniteGroup G = construct("cyclic:" + std::to_string(p));
        Elt w = G.generator_labels().at("a");
        for (std::uint64_t ai = 0; ai < f.field_size(); ++ai) {
            auto x = add(GroupRingElement<PrimeField>::one(G, f),
                         scalar_mul(f.value_at(ai), hat(G, f, w)));
            REQUIRE(pow(x, p) == GroupRingElement<PrimeField>::one(G, f));
        }
    }
}

TEST_CASE("idempotents from cyclic averages") {
    // e = hat(g)/|g| is idempotent over Q, and over F_p when p does not divide |g|
    FiniteGroup c6 = construct("cyclic:6");
    RationalField Q;
    Elt a = c6.generator_labels().at("a");
    auto [e, comp] = idempotent_pair(c6, Q, a);
    REQUIRE(mul(e, e) == e);
    REQUIRE(mul(comp, comp) == comp);
    REQUIRE(mul(e, comp).is_zero());
    REQUIRE(add(e, comp) == GroupRingElement<RationalField>::one(c6, Q));

    PrimeField f5(5);
    auto [e5, comp5] = idempotent_pair(c6, f5, a);
    REQUIRE(mul(e5, e5) == e5);
    // char divides the order: no averaging idempotent
    PrimeField f2(2);
    REQUIRE_THROWS_AS(idempotent_pair(c6, f2, a), error);
}
