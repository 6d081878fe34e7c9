#ifndef PARACLASS_CYCLOTOMIC_HPP
#define PARACLASS_CYCLOTOMIC_HPP

#include <optional>
#include <string>
#include <vector>

#include "paraclass/para_class.hpp"

namespace paraclass {

struct Cyclo23Witness {
    Int disc;                 // -23
    long form_class_number = 0;
    QForm ideal_form;         // norm form of (2, (1 + sqrt(-23))/2)
    bool non_principal = false;
    bool s_fractional = false;
    Int s_certificate;        // an integer in the ideal congruent to 1 mod 23
    std::vector<std::string> notes;
    bool pass = false;
};

/* The quadratic-subfield witness for n = 23: the ideal
 * (2, (1 + sqrt(-23))/2) is not principal and meets 1 + 23Z. */
Cyclo23Witness cyclo23_witness();

struct CycloReport {
    long n = 0;
    Int phi_at_one;
    bool residually_nilpotent = false;
    bool is_prime_power = false;
    std::optional<bool> pid_known;  // known principal-ideal-domain range
    std::optional<Cyclo23Witness> witness;
    std::vector<std::string> notes;
};

/* |Phi_n(1)| decides residual nilpotence of T |x Z[zeta_n]; cross-checked
 * against the prime-power predicate. */
CycloReport cyclo_res_nilpotent(long n);

}  // namespace paraclass

#endif
