#ifndef PARACLASS_PARA_CLASS_HPP
#define PARACLASS_PARA_CLASS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "paraclass/class_group.hpp"
#include "paraclass/metabelian.hpp"

namespace paraclass {

/* Ideal generated by tbar - 1; its index in the ring is |f(1)|. */
IdealLattice aug_image(const MonogenicRing& r);
Int aug_index(const MonogenicRing& r);  // |f(1)|, 0 when R/(tbar-1) = Z

/* J meets 1 + (tbar - 1)R, decided in R/(tbar - 1)R. */
bool is_s_fractional(const IdealLattice& j);

enum class SComparison { isomorphic, proper_subgroup };

struct SClassReport {
    MonogenicRing ring;
    RingElement aug_gen;  // tbar - 1
    AbelianGroupStructure s_classes;
    AbelianGroupStructure full_classes;
    SComparison comparison = SComparison::isomorphic;
    std::vector<IdealLattice> representatives;  // all S-fractional
    bool laurent = false;  // false marks the result outside the Laurent scope
    /* equivalence modulo S-fractional principal ideals, versus modulo all
     * principal ideals: both computed, compared here */
    bool readings_agree = false;
};

/* The S-fractional classes of a maximal domain, modulo principal ideals
 * with S-fractional generator. */
SClassReport s_class_group(const MonogenicRing& r);

/* Strict equivalence: alpha J = beta K with both (alpha), (beta)
 * S-fractional; certificate search over a bounded box. */
bool s_fractional_equivalent(const IdealLattice& j, const IdealLattice& k);

struct RealizedGroup {
    IdealLattice ideal;
    Mat action_on_j;  // t on the basis {a, b' + c tbar} of J, b' = b - a
    Mat action_on_a;  // t on the ring basis {1, tbar}
    Mat inclusion;    // J -> A column map
};

/* Presentation data of T |x J for an S-fractional ideal J; the matrices
 * satisfy inclusion . action_on_j = action_on_a . inclusion. */
RealizedGroup realize_para_group(const IdealLattice& j);

/* Every element of 1 + I acts invertibly, i.e. the augmentation image is
 * nilpotent or zero in the coordinate ring. */
bool is_s_rigid(const SplitMetabelianGroup& g);

/* --- classification report (also the CLI JSON payload) ---------------- */

struct FlagWithCert {
    bool value = false;
    std::string certificate;
};

struct Representative {
    IdealLattice ideal;
    Mat action;
    Mat inclusion;
};

struct ClassificationReport {
    std::string subject;
    std::optional<FlagWithCert> laurent;
    std::optional<FlagWithCert> residually_nilpotent;
    std::optional<FlagWithCert> finitely_presentable;
    std::optional<AbelianGroupStructure> class_group;
    std::optional<AbelianGroupStructure> s_class_group;
    long para_class_count = -1;  // -1: not computed
    std::string count_reason;
    std::vector<Representative> representatives;
    std::map<std::string, std::string> provenance;  // claim -> computed | paper_sourced
    std::vector<std::string> notes;
};

/* Isomorphism classes of groups para-equivalent to G, with one
 * representative per class on the Dedekind path. */
ClassificationReport classify_para(const SplitMetabelianGroup& g);

struct Zc2Family {
    Int coordinate_bound;
    long family_size = 0;       // distinct ideals from bounded generators
    long s_fractional_count = 0;
    bool all_principal = false;
    std::vector<IdealLattice> s_fractional_ideals;
};

/* Exhaustive bounded family of ideals of Z[C2]; every S-fractional
 * member is certified principal. */
Zc2Family zc2_bounded_family(const Int& bound);

}  // namespace paraclass

#endif
