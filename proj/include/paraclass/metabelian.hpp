#ifndef PARACLASS_METABELIAN_HPP
#define PARACLASS_METABELIAN_HPP

#include <optional>
#include <string>
#include <vector>

#include "paraclass/ideal_lattice.hpp"
#include "paraclass/laurent.hpp"

namespace paraclass {

enum class QSpec { infinite_cyclic, finite_cyclic, cyclic_times_torsion };

struct ModuleSpec {
    enum class Kind {
        cyclic,         // A = Z[t,t^-1]/(f)
        free_rank_one,  // A = Z[t,t^-1]
        cyclic_mod_p,   // A = (Z/p)[t,t^-1]
        lattice,        // A = Z^n with an explicit GL_n(Z) action of t
        laurent_ideal,  // A = ideal of Z[t,t^-1] given by generators
    };
    Kind kind = Kind::free_rank_one;
    LaurentPoly f;
    bool domain_known = false;  // f known irreducible (cyclotomic, unit minimal polys)
    long p = 0;
    Mat action;
    std::vector<LaurentPoly> ideal_gens;
};

struct SplitMetabelianGroup {
    QSpec q = QSpec::infinite_cyclic;
    long q_order = 0;  // finite part of Q when present
    ModuleSpec module;
    std::string name;

    long q_rank() const { return q == QSpec::finite_cyclic ? 0 : 1; }
};

/* Presets: lamplighter, wreath_zz, bs12, z_inv_n:<n>, quad:<d>,
 * cyclo:<n>, unipotent2, zc2. */
SplitMetabelianGroup make_group(const std::string& preset);

/* gamma_n(G)/gamma_(n+1)(G); n = 1 gives Q x A/AI. */
AbelianGroupStructure lcs_quotient(const SplitMetabelianGroup& g, long n);

struct HilbertResult {
    std::vector<long> ranks;  // r_1 .. r_depth
    bool eventually_constant = false;
    long tail_start = 0;     // first index (1-based) of the constant tail
    long tail_constant = 0;
    bool recurrence_found = false;
    std::vector<Rat> recurrence;      // r_n = sum c_i r_(n-i)
    std::string series;               // e.g. "2t + t^2/(1-t)"
    std::string series_numerator;     // p(t) with sum r_n t^n = p/q
    std::string series_denominator;   // q(t)
};
HilbertResult hilbert_coeffs(const SplitMetabelianGroup& g, long depth);

struct BoolWithReason {
    bool value = false;
    std::string reason;
};

BoolWithReason is_residually_nilpotent(const SplitMetabelianGroup& g);

/* Rank-one Bieri-Strebel: cyclic modules are tame iff an end coefficient
 * of f is a unit; free modules over Z[T] or (Z/p)[T] and their nonzero
 * ideals are not tame. */
BoolWithReason is_finitely_presentable(const SplitMetabelianGroup& g);

struct LevelCert {
    long level = 0;
    bool ok = false;
    std::string detail;
};
struct ParaCheck {
    bool pass = false;
    std::vector<LevelCert> levels;
};

/* Checks that J/J.I^k -> A/A.I^k is bijective for k = 1..depth. */
ParaCheck para_inclusion_check(const IdealLattice& j, const SplitMetabelianGroup& g,
                               long depth);
ParaCheck para_inclusion_check(const std::vector<LaurentPoly>& ideal_gens,
                               const SplitMetabelianGroup& g, long depth);
/* Sublattice pair with a common t-action; ambient need not be Z^n. */
ParaCheck lattice_pair_check(const Mat& sub_basis, const Mat& amb_basis, const Mat& t_action,
                             long depth);
/* The reverse inclusion s.R <= J inside Z[t,t^-1]: s is given by its
 * coordinates in the ideal generators, s = sum s_coords[i] * gens[i]. */
ParaCheck free_pair_check(const std::vector<LaurentPoly>& s_coords,
                          const std::vector<LaurentPoly>& ideal_gens, long depth);

/* An element s of J with s = 1 mod (t-1): A s sits in J and both
 * inclusions induce lower-central isomorphisms. */
RingElement para_witness(const IdealLattice& j);
LaurentPoly para_witness_poly(const std::vector<LaurentPoly>& ideal_gens);

struct TelescopeStage {
    long index = 0;
    std::string denominator;
    bool proper = false;
    std::string certificate;
};
struct TelescopeReport {
    bool ok = false;
    bool constant_chain = true;
    std::vector<TelescopeStage> stages;
    std::vector<std::string> notes;
};

/* Ascending chain A = A_0 <= A_1 <= ... inside A_S with A_k = A / (s_0
 * ... s_(k-1)); stages are abstractly isomorphic to A and the inclusion
 * squares commute with multiplication by s_k. */
TelescopeReport telescope_chain(const SplitMetabelianGroup& g,
                                const std::vector<LaurentPoly>& s_gens, long n);

struct LaurentPrincipality {
    bool principal = false;
    std::optional<LaurentPoly> generator;
    std::string normal_form;
    std::string obstruction;
};

/* Ideals of Z[t,t^-1]: normal form (m, t - a) and divisor enumeration. */
LaurentPrincipality laurent_ideal_principal(const std::vector<LaurentPoly>& gens);
/* Ideals of (Z/p)[t,t^-1]: Euclidean gcd. */
LaurentPrincipality laurent_ideal_principal_modp(const std::vector<LaurentPoly>& gens,
                                                 long p);

struct EmbeddingReport {
    bool inverse_ok = false;
    bool cyclic_ok = false;
    bool embed_ok = false;
    bool derivation_ok = false;
    bool pass = false;
    std::vector<std::string> transcript;
};

/* The localization of Z[t,t^-1] at the powers of 1 + t: inverse check,
 * cyclicity over the two-generator ring, embedding of the wreath module,
 * and the commutator rewriting chain ending in [b, b^(t^2)] = 1. */
EmbeddingReport embedding_demo();

}  // namespace paraclass

#endif
