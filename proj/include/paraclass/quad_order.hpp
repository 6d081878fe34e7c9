#ifndef PARACLASS_QUAD_ORDER_HPP
#define PARACLASS_QUAD_ORDER_HPP

#include <string>

#include "paraclass/laurent.hpp"

namespace paraclass {

enum class RingKind { real_domain, imaginary_domain, non_domain };

/* Z[t, t^-1]/(f) for monic quadratic f = t^2 + b t + c.  The t-invertible
 * rings (|c| = 1) are the coordinate rings of the split groups; the
 * others only appear as maximal orders for ideal arithmetic. */
struct MonogenicRing {
    LaurentPoly f;  // ordinary monic quadratic
    Int b, c;
    Int disc;  // b^2 - 4c
    RingKind kind = RingKind::non_domain;
    bool is_maximal = false;
    bool t_invertible = false;

    bool is_domain() const { return kind != RingKind::non_domain; }
    std::string describe() const;
};

bool operator==(const MonogenicRing& x, const MonogenicRing& y);

/* x + y * tbar in the basis {1, tbar}. */
struct RingElement {
    Int x, y;
    bool is_zero() const { return x == 0 && y == 0; }
    std::string to_string(const std::string& var = "w") const;
};

bool operator==(const RingElement& u, const RingElement& v);

/* Coordinate-ring constructor: monic quadratic with constant +-1.
 * Non-quadratic input or constant coefficient != +-1 is rejected. */
MonogenicRing make_ring(const LaurentPoly& f);

/* Relaxed constructor for quadratic orders Z[theta]; no t-invertibility
 * requirement (used for maximal orders given by a discriminant). */
MonogenicRing quad_ring_from_poly(const LaurentPoly& f);

/* Maximal order of Q(sqrt(d)) for squarefree d (either sign), presented
 * as Z[omega]: f = t^2 - d, or t^2 - t - (d-1)/4 when d = 1 mod 4. */
MonogenicRing maximal_order(const Int& d);

bool is_squarefree(const Int& n);

RingElement elem_add(const RingElement& u, const RingElement& v);
RingElement elem_sub(const RingElement& u, const RingElement& v);
RingElement elem_neg(const RingElement& u);
RingElement elem_mul(const MonogenicRing& R, const RingElement& u, const RingElement& v);
RingElement elem_conj(const MonogenicRing& R, const RingElement& u);
RingElement elem_pow(const MonogenicRing& R, const RingElement& u, unsigned long e);
Int elem_trace(const MonogenicRing& R, const RingElement& u);

/* u * conj(u); rejected for non-domains (degenerate norm form). */
Int ring_norm(const MonogenicRing& R, const RingElement& u);
bool is_unit(const MonogenicRing& R, const RingElement& u);

/* Image of a Laurent polynomial under t -> tbar. */
RingElement reduce_poly(const MonogenicRing& R, const LaurentPoly& p);

/* Fundamental unit of the maximal real quadratic order of Q(sqrt(d)),
 * in the basis {1, omega}, by the continued fraction of omega. */
RingElement fundamental_unit(const Int& d);

struct LaurentVerdict {
    bool laurent = false;
    RingElement unit;  // fundamental unit in the {1, omega} basis
    Int index;         // [O_d : Z[unit]] = |omega coefficient|
};

/* Z[u, u^-1] = O_d for some unit u iff the fundamental unit has omega
 * coefficient +-1; the certificate either way is the unit itself. */
LaurentVerdict is_laurent_domain(const Int& d);

/* Minimal polynomial t^2 - tr(eps) t + norm(eps) of the fundamental
 * unit: the coordinate-ring presentation used by the quad presets. */
LaurentPoly unit_minimal_poly(const Int& d);

}  // namespace paraclass

#endif
