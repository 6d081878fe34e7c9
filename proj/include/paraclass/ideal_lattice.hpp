#ifndef PARACLASS_IDEAL_LATTICE_HPP
#define PARACLASS_IDEAL_LATTICE_HPP

#include <optional>
#include <vector>

#include "paraclass/qform.hpp"
#include "paraclass/quad_order.hpp"

namespace paraclass {

/* Ideal of a MonogenicRing as an integer lattice in the basis {1, tbar},
 * closed under multiplication by tbar.  Full-rank ideals are kept in the
 * canonical Hermite basis {a, b + c*tbar} with a, c > 0, c | a, c | b and
 * 0 <= b < a.  Rank-one lattices (they occur in non-domains, e.g. the
 * augmentation ideal of Z[C2]) store their single basis vector. */
struct IdealLattice {
    MonogenicRing ring;
    int rank = 0;
    Int a, b, c;   // rank 2
    Int gx, gy;    // rank 1: gx + gy*tbar

    Mat basis_matrix() const;  // columns in (x, y) coordinates
    std::vector<RingElement> basis_elements() const;
    std::string to_string() const;
};

bool ideal_equal(const IdealLattice& j, const IdealLattice& k);

/* Multiplication-by-tbar matrix on (x, y) coordinates. */
Mat mult_by_t_matrix(const MonogenicRing& r);

IdealLattice ideal_from_generators(const MonogenicRing& r,
                                   const std::vector<RingElement>& gens);
IdealLattice unit_ideal(const MonogenicRing& r);
IdealLattice principal_ideal(const MonogenicRing& r, const RingElement& g);

/* Lattice index in Z + Z*tbar; rank-one lattices have infinite index. */
Int ideal_norm(const IdealLattice& j);

IdealLattice ideal_mul(const IdealLattice& j, const IdealLattice& k);
IdealLattice ideal_pow(const IdealLattice& j, unsigned long e);
IdealLattice ideal_conj(const IdealLattice& j);
bool ideal_contains(const IdealLattice& j, const RingElement& g);

/* Norm form N(x*alpha + y*beta)/N(J) of a full-rank ideal. */
QForm ideal_form(const IdealLattice& j);

struct PrimeIdeal {
    IdealLattice ideal;
    long residue_degree = 1;
    bool ramified = false;
};

/* Prime ideals over p from the factorization of f mod p.  Maximal
 * domains only. */
std::vector<PrimeIdeal> primes_above(const MonogenicRing& r, const Int& p);

struct PrincipalityResult {
    bool principal = false;
    std::optional<RingElement> generator;
};

/* Maximal domains: decided on the norm form (definite reduction, or the
 * cycle of reduced forms in the indefinite case).  Non-domains: bounded
 * generator enumeration with coordinates up to 4x the Hermite basis. */
PrincipalityResult is_principal(const IdealLattice& j);

/* J ~ K iff J * conj(K) is principal. */
bool ideals_equivalent(const IdealLattice& j, const IdealLattice& k);

}  // namespace paraclass

#endif
