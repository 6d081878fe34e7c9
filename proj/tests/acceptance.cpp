// Acceptance suite: one line per criterion, exit 0 only if all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "paraclass/report.hpp"

using namespace paraclass;

namespace {

int failures = 0;

void run(int number, const std::string& what, double budget_seconds,
         const std::function<bool()>& body) {
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string error;
    try {
        ok = body();
    } catch (const std::exception& e) {
        error = e.what();
    }
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (budget_seconds > 0 && secs > budget_seconds) {
        ok = false;
        error = "over time budget";
    }
    if (!ok) failures++;
    std::printf("criterion %d: %s  %s (%.2fs)%s%s\n", number, ok ? "PASS" : "FAIL",
                what.c_str(), secs, error.empty() ? "" : " -- ", error.c_str());
}

LaurentPoly poly(long min_deg, std::vector<long> coeffs) {
    std::vector<Int> c;
    for (long x : coeffs) c.push_back(x);
    return LaurentPoly::from_coeffs(min_deg, c);
}

bool criterion1() {
    for (long d : {2, 3, 13, 23, 29, 53, 77})
        if (!compute_class_group_for_d(d).structure.is_trivial()) return false;
    AbelianGroupStructure z2, z4;
    z2.invariant_factors = {2};
    z4.invariant_factors = {4};
    for (long d : {10, 15, 26, 35, 85})
        if (!(compute_class_group_for_d(d).structure == z2)) return false;
    return compute_class_group_for_d(82).structure == z4;
}

bool criterion2() {
    ScanReport rep = run_scan(100, 4);
    if (rep.laurent_agreement < 12) return false;
    // every disagreement carries a certificate: the fundamental unit and
    // the index of Z[eps] in the maximal order
    for (long d : published_laurent_list()) {
        bool computed = false;
        for (long e : rep.computed_laurent)
            if (d == e) computed = true;
        if (computed) continue;
        bool have_cert = false;
        for (const auto& row : rep.rows)
            if (row.d == d && row.ok && row.index > 1) have_cert = true;
        if (!have_cert) return false;
    }
    for (long d : rep.computed_laurent) {
        bool published = false;
        for (long e : published_laurent_list())
            if (d == e) published = true;
        if (published) continue;
        bool have_cert = false;
        for (const auto& row : rep.rows)
            if (row.d == d && row.ok && row.index == 1) have_cert = true;
        if (!have_cert) return false;
    }
    return true;
}

bool criterion3() {
    VerifyResult v = verify_example("d10");
    if (!v.pass) return false;
    // the check must include depth 10 and the exact matrices; replay the
    // essential pieces here
    MonogenicRing r = make_ring(poly(0, {-1, -6, 1}));
    IdealLattice j = ideal_from_generators(r, {RingElement{3, 0}, RingElement{-2, 1}});
    RealizedGroup rg = realize_para_group(j);
    if (!(rg.action_on_j == Mat::from_rows({{2, 3}, {3, 4}}))) return false;
    if (!(rg.action_on_a == Mat::from_rows({{0, 1}, {1, 6}}))) return false;
    if (!(rg.inclusion == Mat::from_rows({{3, -2}, {0, 1}}))) return false;
    if (is_principal(j).principal) return false;
    if (!is_principal(ideal_mul(j, j)).principal) return false;
    return para_inclusion_check(j, make_group("quad:10"), 10).pass;
}

bool criterion4() {
    auto prime_power = [](long n) {
        for (long p = 2; p * p <= n; p++) {
            if (n % p) continue;
            while (n % p == 0) n /= p;
            return n == 1;
        }
        return n >= 2;
    };
    for (long n = 2; n <= 100; n++)
        if (cyclo_res_nilpotent(n).residually_nilpotent != prime_power(n)) return false;
    return true;
}

bool criterion5() {
    if (!is_finitely_presentable(make_group("bs12")).value) return false;
    if (is_finitely_presentable(make_group("wreath_zz")).value) return false;
    // pair consistency at d = 10: T |x A versus T |x J as a lattice group
    SplitMetabelianGroup a10 = make_group("quad:10");
    MonogenicRing r = make_ring(poly(0, {-1, -6, 1}));
    IdealLattice j = ideal_from_generators(r, {RingElement{3, 0}, RingElement{-2, 1}});
    SplitMetabelianGroup tj;
    tj.module.kind = ModuleSpec::Kind::lattice;
    tj.module.action = realize_para_group(j).action_on_j;
    tj.name = "T|xJ";
    if (is_finitely_presentable(a10).value != is_finitely_presentable(tj).value) return false;
    // the wreath pair
    SplitMetabelianGroup w = make_group("wreath_zz");
    SplitMetabelianGroup tw;
    tw.module.kind = ModuleSpec::Kind::laurent_ideal;
    tw.module.ideal_gens = {poly(0, {-1, 2}), poly(0, {2, -1})};
    tw.name = "T|xJw";
    return is_finitely_presentable(w).value == is_finitely_presentable(tw).value;
}

bool criterion6() {
    if (classify_para(make_group("z_inv_n:3")).para_class_count != 1) return false;
    if (classify_para(make_group("lamplighter")).para_class_count != 1) return false;
    if (classify_para(make_group("zc2")).para_class_count != 1) return false;
    if (classify_para(make_group("unipotent2")).para_class_count != 1) return false;
    if (classify_para(make_group("quad:10")).para_class_count != 2) return false;
    return classify_para(make_group("quad:82")).para_class_count == 4;
}

bool criterion7() {
    // norm multiplicativity
    std::mt19937 rng(101010);
    std::uniform_int_distribution<long> entry(-9, 9);
    MonogenicRing r10 = make_ring(poly(0, {-1, -6, 1}));
    for (int i = 0; i < 200; i++) {
        RingElement u{entry(rng), entry(rng)}, v{entry(rng), entry(rng)};
        if (ring_norm(r10, elem_mul(r10, u, v)) != ring_norm(r10, u) * ring_norm(r10, v))
            return false;
    }
    // HNF idempotence
    for (int i = 0; i < 100; i++) {
        Mat m(3, 4);
        for (size_t a = 0; a < 3; a++)
            for (size_t b = 0; b < 4; b++) m.at(a, b) = entry(rng);
        Mat h = hnf_cols(m);
        if (!(hnf_cols(h) == h)) return false;
    }
    // two-route lower central layers, n <= 8, all presets
    std::vector<std::string> presets = {"lamplighter", "wreath_zz", "bs12", "z_inv_n:3",
                                        "quad:10",     "quad:82",   "cyclo:4", "cyclo:9",
                                        "zc2",         "unipotent2"};
    LaurentPoly aug = poly(0, {-1, 1});
    for (const auto& name : presets) {
        SplitMetabelianGroup g = make_group(name);
        for (long n = 2; n <= 8; n++) {
            AbelianGroupStructure direct = lcs_quotient(g, n);
            LaurentPoly f;
            bool has_quotient_route = true;
            switch (g.module.kind) {
                case ModuleSpec::Kind::cyclic: f = g.module.f; break;
                case ModuleSpec::Kind::free_rank_one: f = LaurentPoly::zero(); break;
                case ModuleSpec::Kind::cyclic_mod_p:
                    f = LaurentPoly::constant(g.module.p);
                    break;
                default: has_quotient_route = false;
            }
            if (!has_quotient_route) {
                // lattice shape: fixed expected values stand in for the ring route
                if (name == "unipotent2") {
                    AbelianGroupStructure want;
                    if (n == 2) want.free_rank = 1;
                    if (!(direct == want)) return false;
                }
                continue;
            }
            AbelianGroupStructure big =
                finite_quotient(f, lp_pow(aug, static_cast<unsigned long>(n)));
            AbelianGroupStructure small =
                finite_quotient(f, lp_pow(aug, static_cast<unsigned long>(n - 1)));
            if (big.free_rank - small.free_rank != direct.free_rank) return false;
            Int tb = 1, ts = 1, tl = 1;
            for (const auto& x : big.invariant_factors) tb *= x;
            for (const auto& x : small.invariant_factors) ts *= x;
            for (const auto& x : direct.invariant_factors) tl *= x;
            if (tb != ts * tl) return false;
        }
    }
    // telescope properness and stage isomorphy
    TelescopeReport tr = telescope_chain(make_group("quad:10"), {poly(0, {5, 2})}, 4);
    if (!tr.ok || tr.constant_chain) return false;
    for (size_t i = 0; i + 1 < tr.stages.size(); i++)
        if (!tr.stages[i].proper) return false;
    // para_witness round trips at depth 6, both directions
    MonogenicRing r = r10;
    SplitMetabelianGroup g10 = make_group("quad:10");
    for (IdealLattice j : {ideal_from_generators(r, {RingElement{3, 0}, RingElement{-2, 1}}),
                           unit_ideal(r)}) {
        RingElement s = para_witness(j);
        if (((s.x + s.y - 1) % aug_index(r)) != 0) return false;
        if (!ideal_contains(j, s)) return false;
        if (!para_inclusion_check(j, g10, 6).pass) return false;
        if (!lattice_pair_check(principal_ideal(r, s).basis_matrix(), j.basis_matrix(),
                                mult_by_t_matrix(r), 6)
                 .pass)
            return false;
    }
    {
        std::vector<LaurentPoly> gens = {poly(0, {-1, 2}), poly(0, {2, -1})};
        if (!para_inclusion_check(gens, make_group("wreath_zz"), 6).pass) return false;
        Int v1 = lp_eval(gens[0], Rat(1)).get_num();
        Int v2 = lp_eval(gens[1], Rat(1)).get_num();
        Int g0, c1, c2;
        mpz_gcdext(g0.get_mpz_t(), c1.get_mpz_t(), c2.get_mpz_t(), v1.get_mpz_t(),
                   v2.get_mpz_t());
        if (g0 == -1) {
            c1 = -c1;
            c2 = -c2;
        }
        if (!free_pair_check({LaurentPoly::constant(c1), LaurentPoly::constant(c2)}, gens, 6)
                 .pass)
            return false;
    }
    // cyclotomic product identity up to 40
    for (unsigned long n = 1; n <= 40; n++) {
        LaurentPoly prod = LaurentPoly::one();
        for (unsigned long d = 1; d <= n; d++)
            if (n % d == 0) prod = lp_mul(prod, cyclotomic_poly(d));
        std::vector<Int> tn(n + 1);
        tn[0] = -1;
        tn[n] = 1;
        if (!(prod == LaurentPoly::from_coeffs(0, tn))) return false;
    }
    return true;
}

bool criterion8() {
    HilbertResult h = hilbert_coeffs(make_group("wreath_zz"), 8);
    std::vector<long> want{2, 1, 1, 1, 1, 1, 1, 1};
    if (h.ranks != want) return false;
    if (!h.eventually_constant || h.series != "2t + t^2/(1-t)") return false;
    // independent route: free ranks of Z[t,t^-1]/((t-1)^k) differences
    for (long n = 2; n <= 8; n++) {
        LaurentPoly aug = poly(0, {-1, 1});
        long big = finite_quotient(LaurentPoly::zero(),
                                   lp_pow(aug, static_cast<unsigned long>(n)))
                       .free_rank;
        long small = finite_quotient(LaurentPoly::zero(),
                                     lp_pow(aug, static_cast<unsigned long>(n - 1)))
                         .free_rank;
        if (big - small != h.ranks[static_cast<size_t>(n - 1)]) return false;
    }
    // r_1 = rank of Q x A/AI = 1 + 1
    return h.ranks[0] == 2;
}

}  // namespace

int main() {
    run(1, "class numbers for the thirteen published d", 5.0, criterion1);
    run(2, "Laurent scan to 100 agrees on >= 12 entries with certificates", 10.0, criterion2);
    run(3, "d = 10 worked example, exact matrices, depth 10", 2.0, criterion3);
    run(4, "cyclotomic criterion equals prime-power predicate, n <= 100", 0, criterion4);
    run(5, "finite presentability and pair consistency", 0, criterion5);
    run(6, "rigidity and classification counts", 0, criterion6);
    run(7, "property suites", 60.0, criterion7);
    run(8, "Hilbert coefficients of the free wreath module", 0, criterion8);
    if (failures) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all acceptance criteria passed\n");
    return 0;
}
