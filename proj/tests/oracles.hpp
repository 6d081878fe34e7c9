#ifndef PARACLASS_TEST_ORACLES_HPP
#define PARACLASS_TEST_ORACLES_HPP

/* Brute-force oracles kept out of the library: every frozen expected
 * value in the test suite is recomputed here by a route independent of
 * the implementation it checks. */

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "paraclass/class_group.hpp"
#include "paraclass/ideal_lattice.hpp"
#include "paraclass/laurent.hpp"
#include "paraclass/quad_order.hpp"

namespace paraclass::oracle {

/* x + y*omega > 1, exactly. */
inline bool exceeds_one(const Int& d, const Int& x, const Int& y) {
    // u - 1 = (A + B sqrt(d)) / 2 with A, B below
    Int r4 = ((d % 4) + 4) % 4;
    Int A = (r4 == 1) ? Int(2 * x + y - 2) : Int(2 * (x - 1));
    Int B = (r4 == 1) ? y : Int(2 * y);
    if (A >= 0 && B >= 0) return A > 0 || B > 0;
    if (A >= 0) return A * A > B * B * d;
    if (B >= 0) return B * B * d > A * A;
    return false;
}

/* Smallest unit > 1 of the maximal order by scanning y = 1, 2, ...
 * (units with larger y are larger), solving the norm equation for x. */
inline RingElement pell_fundamental_unit(const Int& d) {
    MonogenicRing O = maximal_order(d);
    for (Int y = 1;; y++) {
        std::optional<RingElement> best;
        for (int sign : {1, -1}) {
            // x^2 - B x y + C y^2 = sign: x = (B y +- s)/2, s^2 = disc y^2 + 4 sign
            Int s2 = O.disc * y * y + 4 * sign;
            if (s2 < 0) continue;
            Int s;
            mpz_sqrt(s.get_mpz_t(), s2.get_mpz_t());
            if (s * s != s2) continue;
            for (int root : {1, -1}) {
                Int num = O.b * y + root * s;
                if (num % 2 != 0) continue;
                Int x = num / 2;
                Int n = ring_norm(O, RingElement{x, y});
                if (n != 1 && n != -1) continue;
                if (!exceeds_one(d, x, y)) continue;
                if (!best || x < best->x) best = RingElement{x, y};
            }
        }
        if (best) return *best;
        if (y > 1000000) throw std::runtime_error("pell oracle: no unit found");
    }
}

/* Exhaustive search for a generator of J: scan the lattice points of J
 * whose coordinates stay inside the unit-derived box. */
inline std::optional<RingElement> principal_element_search(const IdealLattice& j,
                                                           const Int& eps_upper) {
    Int n = ideal_norm(j);
    Int b2 = n * eps_upper;
    Int bound;
    mpz_sqrt(bound.get_mpz_t(), b2.get_mpz_t());
    bound = 2 * bound + 2;  // slack for the omega-basis skew
    Int nmax = bound / j.c + 1;
    for (Int nn = -nmax; nn <= nmax; nn++) {
        // x = m a + nn b constrained to |x| <= bound
        Int lo = (-bound - nn * j.b) / j.a - 1;
        Int hi = (bound - nn * j.b) / j.a + 1;
        for (Int mm = lo; mm <= hi; mm++) {
            RingElement g{mm * j.a + nn * j.b, nn * j.c};
            if (g.is_zero()) continue;
            Int norm = ring_norm(j.ring, g);
            if (abs(norm) != n) continue;
            IdealLattice gen = principal_ideal(j.ring, g);
            if (ideal_equal(gen, j)) return g;
        }
    }
    return std::nullopt;
}

/* Class number of a real quadratic field by enumerating every reduced
 * form and partitioning them into rho-cycles; a cycle and its negative
 * describe the same ideal class. */
inline long real_class_number_by_cycles(const Int& disc) {
    Int s;
    mpz_sqrt(s.get_mpz_t(), disc.get_mpz_t());
    std::set<std::tuple<Int, Int, Int>> forms;
    for (Int b = 1; b <= s; b++) {
        if (((b * b - disc) % 4) != 0) continue;
        Int prod = (b * b - disc) / 4;  // = a c < 0
        for (Int a = 1; a * a <= -prod; a++) {
            if (prod % a != 0) continue;
            std::vector<Int> cands{a, -a, prod / a, -(prod / a)};
            for (const Int& aa : cands) {
                Int cc = prod / aa;
                QForm f{aa, b, cc};
                if (is_reduced_indefinite(f, s)) forms.insert({f.a, f.b, f.c});
            }
        }
    }
    long orbits = 0;
    std::set<std::tuple<Int, Int, Int>> used;
    for (const auto& key : forms) {
        if (used.count(key)) continue;
        orbits++;
        QForm f{std::get<0>(key), std::get<1>(key), std::get<2>(key)};
        for (const QForm& g : form_cycle(f)) {
            used.insert({g.a, g.b, g.c});
            used.insert({-g.a, g.b, -g.c});  // the mirror cycle, same ideal class
        }
    }
    return orbits;
}

/* Schoolbook convolution, reimplemented for the multiplication oracle. */
inline LaurentPoly convolve(const LaurentPoly& p, const LaurentPoly& q) {
    if (p.is_zero() || q.is_zero()) return LaurentPoly::zero();
    long lo = p.low_deg() + q.low_deg();
    long hi = p.high_deg() + q.high_deg();
    std::vector<Int> c(static_cast<size_t>(hi - lo + 1));
    for (long i = p.low_deg(); i <= p.high_deg(); i++)
        for (long j = q.low_deg(); j <= q.high_deg(); j++)
            c[static_cast<size_t>(i + j - lo)] += p.coeff(i) * q.coeff(j);
    return LaurentPoly::from_coeffs(lo, c);
}

/* All tbar-closed sublattices of norm <= bound in Hermite form. */
inline std::vector<IdealLattice> ideals_up_to_norm(const MonogenicRing& r, const Int& bound) {
    std::vector<IdealLattice> out;
    for (Int c = 1; c * c <= bound; c++)
        for (Int a = c; a * c <= bound; a += c)
            for (Int b = 0; b < a; b += c) {
                Mat basis(2, 2);
                basis.at(0, 0) = a;
                basis.at(0, 1) = b;
                basis.at(1, 1) = c;
                RingElement v1{a, 0}, v2{b, c};
                RingElement t1 = elem_mul(r, v1, RingElement{0, 1});
                RingElement t2 = elem_mul(r, v2, RingElement{0, 1});
                if (!solve_in_lattice(basis, {t1.x, t1.y})) continue;
                if (!solve_in_lattice(basis, {t2.x, t2.y})) continue;
                out.push_back(ideal_from_generators(r, {v1, v2}));
            }
    return out;
}

inline std::vector<long> squarefree_up_to(long n) {
    std::vector<long> out;
    for (long d = 2; d <= n; d++)
        if (is_squarefree(d)) out.push_back(d);
    return out;
}

}  // namespace paraclass::oracle

#endif
