#include "paraclass/ideal_lattice.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace paraclass {

Mat IdealLattice::basis_matrix() const {
    if (rank == 2) {
        Mat m(2, 2);
        m.at(0, 0) = a;
        m.at(0, 1) = b;
        m.at(1, 1) = c;
        return m;
    }
    if (rank == 1) {
        Mat m(2, 1);
        m.at(0, 0) = gx;
        m.at(1, 0) = gy;
        return m;
    }
    return Mat(2, 0);
}

std::vector<RingElement> IdealLattice::basis_elements() const {
    if (rank == 2) return {RingElement{a, 0}, RingElement{b, c}};
    if (rank == 1) return {RingElement{gx, gy}};
    return {};
}

std::string IdealLattice::to_string() const {
    std::ostringstream os;
    if (rank == 2)
        os << "[" << a << ", " << RingElement{b, c}.to_string() << "]";
    else if (rank == 1)
        os << "[" << RingElement{gx, gy}.to_string() << "]";
    else
        os << "[0]";
    return os.str();
}

bool ideal_equal(const IdealLattice& j, const IdealLattice& k) {
    if (!(j.ring == k.ring) || j.rank != k.rank) return false;
    if (j.rank == 2) return j.a == k.a && j.b == k.b && j.c == k.c;
    if (j.rank == 1) return j.gx == k.gx && j.gy == k.gy;
    return true;
}

Mat mult_by_t_matrix(const MonogenicRing& r) {
    Mat m(2, 2);
    m.at(0, 1) = -r.c;
    m.at(1, 0) = 1;
    m.at(1, 1) = -r.b;
    return m;
}

IdealLattice ideal_from_generators(const MonogenicRing& r,
                                   const std::vector<RingElement>& gens) {
    std::vector<RingElement> all;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        all.push_back(g);
        all.push_back(elem_mul(r, g, RingElement{0, 1}));
    }
    if (all.empty()) throw std::invalid_argument("ideal_from_generators: zero ideal");
    // rows ordered (tbar part, 1 part) so the Hermite pivot lands on c
    Mat m(2, all.size());
    for (size_t j = 0; j < all.size(); j++) {
        m.at(0, j) = all[j].y;
        m.at(1, j) = all[j].x;
    }
    Mat h = hnf_cols(m);
    IdealLattice out;
    out.ring = r;
    out.rank = static_cast<int>(h.cols());
    if (out.rank == 2) {
        out.c = h.at(0, 0);
        out.b = h.at(1, 0);
        out.a = h.at(1, 1);
        if (h.at(0, 1) != 0) throw std::logic_error("ideal HNF shape");
        if (out.c <= 0 || out.a <= 0 || out.b < 0 || out.b >= out.a)
            throw std::logic_error("ideal HNF normalization");
        if (out.a % out.c != 0 || out.b % out.c != 0)
            throw std::logic_error("ideal lattice not tbar-closed (c divisibility)");
    } else if (out.rank == 1) {
        out.gy = h.at(0, 0);
        out.gx = h.at(1, 0);
    } else {
        throw std::invalid_argument("ideal_from_generators: zero ideal");
    }
    // closure sanity: tbar * basis stays inside
    Mat basis = out.basis_matrix();
    for (const auto& e : out.basis_elements()) {
        RingElement te = elem_mul(r, e, RingElement{0, 1});
        if (!solve_in_lattice(basis, {te.x, te.y}))
            throw std::logic_error("ideal lattice not closed under tbar");
    }
    return out;
}

IdealLattice unit_ideal(const MonogenicRing& r) {
    return ideal_from_generators(r, {RingElement{1, 0}});
}

IdealLattice principal_ideal(const MonogenicRing& r, const RingElement& g) {
    return ideal_from_generators(r, {g});
}

Int ideal_norm(const IdealLattice& j) {
    if (j.rank == 2) return j.a * j.c;
    throw std::domain_error("ideal_norm: rank-one lattice has infinite index in Z + Z*tbar");
}

IdealLattice ideal_mul(const IdealLattice& j, const IdealLattice& k) {
    if (!(j.ring == k.ring)) throw std::invalid_argument("ideal_mul: ring mismatch");
    std::vector<RingElement> prods;
    for (const auto& u : j.basis_elements())
        for (const auto& v : k.basis_elements()) prods.push_back(elem_mul(j.ring, u, v));
    return ideal_from_generators(j.ring, prods);
}

IdealLattice ideal_pow(const IdealLattice& j, unsigned long e) {
    IdealLattice r = unit_ideal(j.ring);
    for (unsigned long i = 0; i < e; i++) r = ideal_mul(r, j);
    return r;
}

IdealLattice ideal_conj(const IdealLattice& j) {
    std::vector<RingElement> gens;
    for (const auto& u : j.basis_elements()) gens.push_back(elem_conj(j.ring, u));
    return ideal_from_generators(j.ring, gens);
}

bool ideal_contains(const IdealLattice& j, const RingElement& g) {
    if (g.is_zero()) return true;
    return solve_in_lattice(j.basis_matrix(), {g.x, g.y});
}

QForm ideal_form(const IdealLattice& j) {
    if (j.rank != 2) throw std::invalid_argument("ideal_form: full-rank ideals only");
    const Int &B = j.ring.b, &C = j.ring.c;
    Int n = j.a * j.c;
    QForm f;
    auto exact = [](const Int& num, const Int& den) -> Int {
        if (num % den != 0) throw std::logic_error("ideal_form: non-integral norm form");
        return num / den;
    };
    f.a = exact(j.a * j.a, n);
    f.b = exact(2 * j.a * j.b - B * j.a * j.c, n);
    f.c = exact(j.b * j.b - B * j.b * j.c + C * j.c * j.c, n);
    if (f.disc() != j.ring.disc) throw std::logic_error("ideal_form: discriminant mismatch");
    return f;
}

std::vector<PrimeIdeal> primes_above(const MonogenicRing& r, const Int& p) {
    if (!r.is_domain() || !r.is_maximal)
        throw std::invalid_argument("primes_above: maximal domain required");
    if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 30) == 0)
        throw std::invalid_argument("primes_above: p must be prime");
    std::vector<Int> roots;
    for (Int x = 0; x < p; x++) {
        Int v = ((x * x + r.b * x + r.c) % p + p) % p;
        if (v == 0) roots.push_back(x);
    }
    std::vector<PrimeIdeal> out;
    bool ramified = (r.disc % p == 0);
    if (ramified) {
        if (roots.size() != 1)
            throw std::logic_error("primes_above: ramified prime without a double root");
        PrimeIdeal pr;
        pr.ideal = ideal_from_generators(
            r, {RingElement{p, 0}, RingElement{-roots[0], 1}});
        pr.residue_degree = 1;
        pr.ramified = true;
        out.push_back(pr);
    } else if (roots.size() == 2) {
        for (const auto& root : roots) {
            PrimeIdeal pr;
            pr.ideal =
                ideal_from_generators(r, {RingElement{p, 0}, RingElement{-root, 1}});
            pr.residue_degree = 1;
            out.push_back(pr);
        }
    } else if (roots.empty()) {
        PrimeIdeal pr;
        pr.ideal = ideal_from_generators(r, {RingElement{p, 0}});
        pr.residue_degree = 2;
        out.push_back(pr);
    } else {
        throw std::logic_error("primes_above: unexpected root pattern");
    }
    return out;
}

namespace {

PrincipalityResult bounded_generator_search(const IdealLattice& j) {
    PrincipalityResult res;
    if (j.rank == 1) {
        // a rank-one closed lattice is spanned by its basis vector
        RingElement g{j.gx, j.gy};
        IdealLattice gen = principal_ideal(j.ring, g);
        if (ideal_equal(gen, j)) {
            res.principal = true;
            res.generator = g;
        }
        return res;
    }
    // candidates are the lattice points of J with coordinates up to four
    // times the largest Hermite entry
    Int ab = abs(j.b);
    Int bound = 4 * std::max(j.a, std::max(ab, j.c));
    Int nmax = bound / j.c;
    for (Int n = -nmax; n <= nmax; n++) {
        Int lo = (-bound - n * j.b) / j.a - 1;
        Int hi = (bound - n * j.b) / j.a + 1;
        for (Int m = lo; m <= hi; m++) {
            RingElement g{m * j.a + n * j.b, n * j.c};
            if (g.is_zero()) continue;
            if (abs(g.x) > bound || abs(g.y) > bound) continue;
            IdealLattice gen = principal_ideal(j.ring, g);
            if (ideal_equal(gen, j)) {
                res.principal = true;
                res.generator = g;
                return res;
            }
        }
    }
    return res;
}

}  // namespace

PrincipalityResult is_principal(const IdealLattice& j) {
    if (!j.ring.is_domain()) return bounded_generator_search(j);
    if (!j.ring.is_maximal)
        throw std::invalid_argument("is_principal: non-maximal order refused");
    if (j.rank != 2) throw std::logic_error("is_principal: nonzero domain ideal of rank one");
    QForm f = ideal_form(j);
    UnitRep rep = represents_unit(f);
    PrincipalityResult res;
    if (!rep.found) return res;
    RingElement g{j.a * rep.x + j.b * rep.y, j.c * rep.y};
    Int n = ring_norm(j.ring, g);
    if (abs(n) != ideal_norm(j)) throw std::logic_error("is_principal: generator norm mismatch");
    if (!ideal_contains(j, g)) throw std::logic_error("is_principal: generator not in ideal");
    res.principal = true;
    res.generator = g;
    return res;
}

bool ideals_equivalent(const IdealLattice& j, const IdealLattice& k) {
    if (!(j.ring == k.ring)) throw std::invalid_argument("ideals_equivalent: ring mismatch");
    return is_principal(ideal_mul(j, ideal_conj(k))).principal;
}

}  // namespace paraclass
