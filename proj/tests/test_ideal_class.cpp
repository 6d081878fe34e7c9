#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "paraclass/class_group.hpp"

using namespace paraclass;

namespace {

LaurentPoly poly(long min_deg, std::vector<long> coeffs) {
    std::vector<Int> c;
    for (long x : coeffs) c.push_back(x);
    return LaurentPoly::from_coeffs(min_deg, c);
}

MonogenicRing d10() { return make_ring(poly(0, {-1, -6, 1})); }

IdealLattice j10() {
    return ideal_from_generators(d10(), {RingElement{3, 0}, RingElement{-2, 1}});
}

}  // namespace

TEST_CASE("ideal_from_generators HNF") {
    IdealLattice j = j10();
    CHECK(j.rank == 2);
    CHECK(j.a == 3);
    CHECK(j.b == 1);
    CHECK(j.c == 1);  // basis {3, 1 + w}
    IdealLattice one = unit_ideal(d10());
    CHECK(one.a == 1);
    CHECK(one.b == 0);
    CHECK(one.c == 1);
    // Z[C2]: index-2 lattice {2, 1 + t}
    MonogenicRing zc2 = quad_ring_from_poly(poly(0, {-1, 0, 1}));
    IdealLattice k = ideal_from_generators(zc2, {RingElement{2, 0}, RingElement{1, 1}});
    CHECK(k.a == 2);
    CHECK(k.b == 1);
    CHECK(k.c == 1);
    CHECK_THROWS_AS(ideal_from_generators(d10(), {RingElement{0, 0}}), std::invalid_argument);
}

TEST_CASE("HNF is idempotent") {
    std::mt19937 rng(141421);
    std::uniform_int_distribution<long> entry(-8, 8);
    std::vector<MonogenicRing> rings = {d10(), maximal_order(82), maximal_order(-23)};
    for (const auto& r : rings)
        for (int i = 0; i < 60; i++) {
            RingElement g1{entry(rng), entry(rng)}, g2{entry(rng), entry(rng)};
            if (g1.is_zero() && g2.is_zero()) continue;
            IdealLattice j = ideal_from_generators(r, {g1, g2});
            IdealLattice again = ideal_from_generators(r, j.basis_elements());
            CHECK(ideal_equal(j, again));
        }
}

TEST_CASE("ideal_norm") {
    CHECK(ideal_norm(j10()) == 3);
    CHECK(ideal_norm(unit_ideal(d10())) == 1);
    // (eps - 1) = 2 + sqrt(10) has norm |4 - 10| = 6
    IdealLattice aug = ideal_from_generators(d10(), {RingElement{-1, 1}});
    CHECK(ideal_norm(aug) == 6);
}

TEST_CASE("ideal_mul") {
    IdealLattice j = j10();
    CHECK(ideal_equal(ideal_mul(j, unit_ideal(d10())), j));
    IdealLattice j2 = ideal_mul(j, j);
    CHECK(ideal_norm(j2) == 9);
    // J * conj(J) = (norm): randomized in maximal orders
    std::mt19937 rng(173205);
    std::uniform_int_distribution<long> entry(-6, 6);
    for (const auto& r : {d10(), maximal_order(82)})
        for (int i = 0; i < 40; i++) {
            RingElement g1{entry(rng), entry(rng)}, g2{entry(rng), entry(rng)};
            if (g1.is_zero() && g2.is_zero()) continue;
            IdealLattice k = ideal_from_generators(r, {g1, g2});
            IdealLattice prod = ideal_mul(k, ideal_conj(k));
            IdealLattice want = principal_ideal(r, RingElement{ideal_norm(k), 0});
            CHECK(ideal_equal(prod, want));
        }
}

TEST_CASE("norm is multiplicative on ideals") {
    std::mt19937 rng(223606);
    std::uniform_int_distribution<long> entry(-7, 7);
    for (const auto& r : {d10(), maximal_order(85)})
        for (int i = 0; i < 40; i++) {
            RingElement g1{entry(rng), entry(rng)}, g2{entry(rng), entry(rng)};
            RingElement h1{entry(rng), entry(rng)}, h2{entry(rng), entry(rng)};
            if ((g1.is_zero() && g2.is_zero()) || (h1.is_zero() && h2.is_zero())) continue;
            IdealLattice jj = ideal_from_generators(r, {g1, g2});
            IdealLattice kk = ideal_from_generators(r, {h1, h2});
            CHECK(ideal_norm(ideal_mul(jj, kk)) == ideal_norm(jj) * ideal_norm(kk));
        }
}

TEST_CASE("primes_above at d = 10") {
    MonogenicRing r = d10();
    auto p3 = primes_above(r, 3);
    REQUIRE(p3.size() == 2);  // t^2 - 10 splits mod 3
    CHECK(p3[0].residue_degree == 1);
    CHECK(ideal_norm(p3[0].ideal) == 3);
    CHECK(ideal_norm(p3[1].ideal) == 3);
    CHECK(!ideal_equal(p3[0].ideal, p3[1].ideal));

    auto p7 = primes_above(r, 7);
    REQUIRE(p7.size() == 1);  // 10 is not a square mod 7
    CHECK(p7[0].residue_degree == 2);

    auto p2 = primes_above(r, 2);
    REQUIRE(p2.size() == 1);
    CHECK(p2[0].ramified);
    CHECK(ideal_equal(ideal_mul(p2[0].ideal, p2[0].ideal),
                      principal_ideal(r, RingElement{2, 0})));
}

TEST_CASE("is_principal examples") {
    IdealLattice j = j10();
    CHECK(!is_principal(j).principal);
    // cross-check: x^2 - 10 y^2 = +-3 has no solution mod 10
    for (int x = 0; x < 10; x++) CHECK(((x * x) % 10 != 3 && (x * x) % 10 != 7));
    PrincipalityResult unit = is_principal(unit_ideal(d10()));
    CHECK(unit.principal);
    CHECK(abs(ring_norm(d10(), *unit.generator)) == 1);
    PrincipalityResult sq = is_principal(ideal_mul(j, j));
    CHECK(sq.principal);
    CHECK(abs(ring_norm(d10(), *sq.generator)) == 9);
}

TEST_CASE("is_principal agrees with the exhaustive element search") {
    for (long d : oracle::squarefree_up_to(99)) {
        RingElement eps = fundamental_unit(d);
        // keep the search box small enough to stay exhaustive and fast
        Int eps_upper = eps.x + eps.y * (1 + d);
        if (eps_upper > 100000) continue;
        MonogenicRing r = maximal_order(d);
        std::vector<IdealLattice> tested;
        for (Int p = 2; p <= 13; p++) {
            if (mpz_probab_prime_p(p.get_mpz_t(), 30) == 0) continue;
            for (const auto& pr : primes_above(r, p))
                if (ideal_norm(pr.ideal) <= 50) tested.push_back(pr.ideal);
        }
        tested.push_back(unit_ideal(r));
        for (const auto& j : tested) {
            auto got = is_principal(j);
            auto want = oracle::principal_element_search(j, eps_upper);
            CAPTURE(d);
            CAPTURE(j.to_string());
            CHECK(got.principal == want.has_value());
            if (got.principal)
                CHECK(abs(ring_norm(r, *got.generator)) == ideal_norm(j));
        }
    }
}

TEST_CASE("equivalence examples and relation properties") {
    MonogenicRing r = d10();
    IdealLattice j = j10();
    CHECK(ideals_equivalent(j, j));
    CHECK(!ideals_equivalent(j, unit_ideal(r)));
    IdealLattice p2 = primes_above(r, 2)[0].ideal;  // (2, sqrt 10)
    CHECK(ideals_equivalent(j, p2));

    std::mt19937 rng(244948);
    std::uniform_int_distribution<long> entry(-5, 5);
    std::vector<IdealLattice> pool;
    for (int i = 0; i < 12; i++) {
        RingElement g1{entry(rng), entry(rng)}, g2{entry(rng), entry(rng)};
        if (g1.is_zero() && g2.is_zero()) continue;
        pool.push_back(ideal_from_generators(r, {g1, g2}));
    }
    for (const auto& a : pool) CHECK(ideals_equivalent(a, a));
    for (const auto& a : pool)
        for (const auto& b : pool)
            CHECK(ideals_equivalent(a, b) == ideals_equivalent(b, a));
    for (const auto& a : pool)
        for (const auto& b : pool)
            for (const auto& c : pool)
                if (ideals_equivalent(a, b) && ideals_equivalent(b, c))
                    CHECK(ideals_equivalent(a, c));
}

TEST_CASE("minkowski bounds") {
    CHECK(minkowski_bound(maximal_order(10)) == 3);
    CHECK(minkowski_bound(maximal_order(-23)) == 3);
    CHECK(minkowski_bound(maximal_order(2)) == 1);
}

TEST_CASE("class groups of the published lists") {
    for (long d : {2, 3, 13, 23, 29, 53, 77})
        CHECK(compute_class_group_for_d(d).structure.is_trivial());
    AbelianGroupStructure z2;
    z2.invariant_factors = {2};
    for (long d : {10, 15, 26, 35, 85})
        CHECK(compute_class_group_for_d(d).structure == z2);
    AbelianGroupStructure z4;
    z4.invariant_factors = {4};
    CHECK(compute_class_group_for_d(82).structure == z4);
}

TEST_CASE("class numbers match the reduced-cycle enumeration for d < 100") {
    for (long d : oracle::squarefree_up_to(99)) {
        ClassGroup cg = compute_class_group_for_d(d);
        long h = static_cast<long>(cg.structure.order().get_si());
        long want = oracle::real_class_number_by_cycles(maximal_order(d).disc);
        CAPTURE(d);
        CHECK(h == want);
    }
}

TEST_CASE("generator certificates verify") {
    for (long d : {10, 82, 85}) {
        ClassGroup cg = compute_class_group_for_d(d);
        for (const auto& cert : cg.certificates) {
            IdealLattice pow = ideal_pow(cert.prime, static_cast<unsigned long>(cert.order));
            IdealLattice gen = principal_ideal(cert.prime.ring, cert.power_generator);
            CHECK(ideal_equal(pow, gen));
            for (long e = 1; e < cert.order; e++)
                CHECK(!is_principal(ideal_pow(cert.prime, static_cast<unsigned long>(e))).principal);
        }
        CHECK(Int(cg.class_index.size()) == cg.structure.order());
    }
}

TEST_CASE("imaginary form class numbers") {
    FormClassCount c23 = imag_form_class_number(-23);
    CHECK(c23.count == 3);
    CHECK(c23.fundamental);
    CHECK(imag_form_class_number(-4).count == 1);
    CHECK(imag_form_class_number(-3).count == 1);
    FormClassCount c12 = imag_form_class_number(-12);  // non-fundamental, still counted
    CHECK(!c12.fundamental);
    // imaginary compute_class_group agrees with the form count
    for (long disc : {-3, -4}) {
        MonogenicRing r = maximal_order(disc == -4 ? -1 : disc);
        ClassGroup cg = compute_class_group(r);
        CHECK(cg.structure.order() == imag_form_class_number(r.disc).count);
    }
}

TEST_CASE("non-domain principality by bounded search") {
    MonogenicRing zc2 = quad_ring_from_poly(poly(0, {-1, 0, 1}));
    IdealLattice j = ideal_from_generators(zc2, {RingElement{3, 0}, RingElement{1, 1}});
    PrincipalityResult pr = is_principal(j);
    CHECK(pr.principal);  // generated by 2 - t
    IdealLattice regen = principal_ideal(zc2, *pr.generator);
    CHECK(ideal_equal(regen, j));
    // the augmentation ideal of Z[C2] is rank one and principal
    IdealLattice aug = ideal_from_generators(zc2, {RingElement{-1, 1}});
    CHECK(aug.rank == 1);
    CHECK(is_principal(aug).principal);
    CHECK_THROWS_AS(ideal_norm(aug), std::domain_error);
    // non-maximal domains are refused
    MonogenicRing nonmax = quad_ring_from_poly(poly(0, {-12, 0, 1}));  // disc 48
    CHECK(!nonmax.is_maximal);
    IdealLattice u = unit_ideal(nonmax);
    CHECK_THROWS_AS(is_principal(u), std::invalid_argument);
}
