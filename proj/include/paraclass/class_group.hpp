#ifndef PARACLASS_CLASS_GROUP_HPP
#define PARACLASS_CLASS_GROUP_HPP

#include <map>
#include <string>
#include <vector>

#include "paraclass/ideal_lattice.hpp"

namespace paraclass {

struct GeneratorCertificate {
    IdealLattice prime;
    long order = 1;                 // order of the class
    RingElement power_generator;    // generator of prime^order
};

struct ClassGroup {
    AbelianGroupStructure structure;
    std::vector<IdealLattice> generators;
    /* one representative ideal per class, keyed by the exponent vector
     * on the generators, e.g. "1,0" */
    std::map<std::string, IdealLattice> class_index;
    std::vector<GeneratorCertificate> certificates;

    Int order() const { return structure.order(); }
};

/* floor(sqrt(disc)/2) real, floor(2 sqrt(|disc|)/pi) imaginary. */
Int minkowski_bound(const MonogenicRing& r);

/* Class group of a maximal quadratic order, generated by the primes
 * below the Minkowski bound; relations located by principality tests
 * on products (exponents bounded by 12, violations are a hard error). */
ClassGroup compute_class_group(const MonogenicRing& r);
ClassGroup compute_class_group_for_d(const Int& d);

}  // namespace paraclass

#endif
