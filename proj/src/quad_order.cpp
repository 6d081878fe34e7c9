#include "paraclass/quad_order.hpp"

#include <map>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace paraclass {

std::string MonogenicRing::describe() const {
    std::ostringstream os;
    os << "Z[t,t^-1]/(" << f.to_string() << "), disc " << disc;
    switch (kind) {
        case RingKind::real_domain: os << ", real"; break;
        case RingKind::imaginary_domain: os << ", imaginary"; break;
        case RingKind::non_domain: os << ", not a domain"; break;
    }
    if (is_maximal) os << ", maximal";
    return os.str();
}

bool operator==(const MonogenicRing& x, const MonogenicRing& y) {
    return x.b == y.b && x.c == y.c;
}

std::string RingElement::to_string(const std::string& var) const {
    std::ostringstream os;
    if (y == 0) return x.get_str();
    if (x != 0) os << x << (y > 0 ? " + " : " - ");
    else if (y < 0) os << "-";
    Int a = abs(y);
    if (a != 1) os << a << "*";
    os << var;
    return os.str();
}

bool operator==(const RingElement& u, const RingElement& v) {
    return u.x == v.x && u.y == v.y;
}

bool is_squarefree(const Int& n) {
    Int m = abs(n);
    if (m == 0) return false;
    for (Int p = 2; p * p <= m; p++) {
        if (m % (p * p) == 0) return false;
        while (m % p == 0) m /= p;
    }
    return true;
}

namespace {

bool is_perfect_square(const Int& n) {
    if (n < 0) return false;
    return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

/* disc of the maximal order containing the order of discriminant d */
bool is_fundamental_disc(const Int& d) {
    Int r4 = ((d % 4) + 4) % 4;
    if (r4 == 1) return is_squarefree(d);
    if (r4 == 0) {
        Int q = d / 4;
        Int q4 = ((q % 4) + 4) % 4;
        return is_squarefree(q) && (q4 == 2 || q4 == 3);
    }
    return false;
}

MonogenicRing classify(LaurentPoly f, bool require_invertible) {
    if (f.is_zero()) throw std::invalid_argument("make_ring: zero polynomial");
    f = lp_shift(f, -f.low_deg());
    if (f.degree_span() != 2) throw std::invalid_argument("make_ring: not quadratic");
    if (f.coeffs.back() == -1) f = lp_scale(f, -1);
    if (f.coeffs.back() != 1) throw std::invalid_argument("make_ring: not monic");
    MonogenicRing R;
    R.f = f;
    R.b = f.coeffs[1];
    R.c = f.coeffs[0];
    R.disc = R.b * R.b - 4 * R.c;
    R.t_invertible = (abs(R.c) == 1);
    if (require_invertible && !R.t_invertible)
        throw std::invalid_argument(
            "make_ring: constant coefficient not a unit, t not invertible");
    if (is_perfect_square(R.disc))
        R.kind = RingKind::non_domain;
    else
        R.kind = R.disc > 0 ? RingKind::real_domain : RingKind::imaginary_domain;
    R.is_maximal = R.is_domain() && is_fundamental_disc(R.disc);
    return R;
}

}  // namespace

MonogenicRing make_ring(const LaurentPoly& f) { return classify(f, true); }

MonogenicRing quad_ring_from_poly(const LaurentPoly& f) { return classify(f, false); }

MonogenicRing maximal_order(const Int& d) {
    if (d == 0 || d == 1 || !is_squarefree(d))
        throw std::invalid_argument("maximal_order: d must be squarefree, not 0 or 1");
    Int r4 = ((d % 4) + 4) % 4;
    std::vector<Int> c;
    if (r4 == 1)
        c = {-(d - 1) / 4, -1, 1};  // t^2 - t - (d-1)/4, omega = (1+sqrt d)/2
    else
        c = {-d, 0, 1};  // t^2 - d, omega = sqrt d
    return quad_ring_from_poly(LaurentPoly::from_coeffs(0, std::move(c)));
}

RingElement elem_add(const RingElement& u, const RingElement& v) { return {u.x + v.x, u.y + v.y}; }
RingElement elem_sub(const RingElement& u, const RingElement& v) { return {u.x - v.x, u.y - v.y}; }
RingElement elem_neg(const RingElement& u) { return {-u.x, -u.y}; }

RingElement elem_mul(const MonogenicRing& R, const RingElement& u, const RingElement& v) {
    // (x1 + y1 t)(x2 + y2 t) with t^2 = -b t - c
    return {u.x * v.x - R.c * u.y * v.y, u.x * v.y + u.y * v.x - R.b * u.y * v.y};
}

RingElement elem_conj(const MonogenicRing& R, const RingElement& u) {
    return {u.x - R.b * u.y, -u.y};
}

RingElement elem_pow(const MonogenicRing& R, const RingElement& u, unsigned long e) {
    RingElement r{1, 0}, base = u;
    while (e) {
        if (e & 1) r = elem_mul(R, r, base);
        base = elem_mul(R, base, base);
        e >>= 1;
    }
    return r;
}

Int elem_trace(const MonogenicRing& R, const RingElement& u) { return 2 * u.x - R.b * u.y; }

Int ring_norm(const MonogenicRing& R, const RingElement& u) {
    if (!R.is_domain())
        throw std::invalid_argument("ring_norm: norm form degenerate, not a domain");
    return u.x * u.x - R.b * u.x * u.y + R.c * u.y * u.y;
}

bool is_unit(const MonogenicRing& R, const RingElement& u) {
    Int n = ring_norm(R, u);
    return n == 1 || n == -1;
}

RingElement reduce_poly(const MonogenicRing& R, const LaurentPoly& p) {
    if (p.is_zero()) return {0, 0};
    // tbar is invertible when |c| = 1: tbar^-1 = -(b + tbar)/c
    RingElement t{0, 1};
    RingElement tinv{0, 0};
    if (p.low_deg() < 0) {
        if (!R.t_invertible)
            throw std::invalid_argument("reduce_poly: negative powers need |c| = 1");
        tinv = {-R.b / R.c, Int(-1) / R.c};
    }
    RingElement acc{0, 0};
    for (size_t i = p.coeffs.size(); i-- > 0;) {
        acc = elem_mul(R, acc, t);
        acc.x += p.coeffs[i];
    }
    long m = p.min_deg;
    if (m > 0) {
        RingElement tm = elem_pow(R, t, static_cast<unsigned long>(m));
        acc = elem_mul(R, acc, tm);
    } else if (m < 0) {
        RingElement tm = elem_pow(R, tinv, static_cast<unsigned long>(-m));
        acc = elem_mul(R, acc, tm);
    }
    return acc;
}

RingElement fundamental_unit(const Int& d) {
    if (d < 2 || !is_squarefree(d))
        throw std::invalid_argument("fundamental_unit: d must be squarefree and >= 2");
    Int r4 = d % 4;
    Int delta = (r4 == 1) ? d : 4 * d;
    Int s;  // floor(sqrt(delta)), irrational sqrt
    mpz_sqrt(s.get_mpz_t(), delta.get_mpz_t());

    // continued fraction of (b0 + sqrt(delta))/2, b0 = delta mod 2;
    // the first repeated complete quotient closes the periodic tail
    Int P = delta % 2, Q = 2;
    std::vector<Int> Ps{P}, Qs{Q}, digits;
    long repeat_at = -1;
    while (repeat_at < 0) {
        Int a = (P + s) / Q;  // floor, Q > 0 throughout
        digits.push_back(a);
        Int Pn = a * Q - P;
        Int Qn = (delta - Pn * Pn) / Q;
        if ((delta - Pn * Pn) % Q != 0 || Qn <= 0)
            throw std::logic_error("fundamental_unit: continued fraction invariant broken");
        P = Pn;
        Q = Qn;
        for (size_t j = 0; j < Ps.size(); j++)
            if (Ps[j] == P && Qs[j] == Q) {
                repeat_at = static_cast<long>(j);
                break;
            }
        Ps.push_back(P);
        Qs.push_back(Q);
    }
    size_t j = static_cast<size_t>(repeat_at);
    size_t period = digits.size() - j;

    // unit = q_{l-1} * alpha_j + q_{l-2} over one period of the reduced tail
    Int q2 = 1, q1 = 0;  // q_{-2}, q_{-1}
    for (size_t i = 0; i < period; i++) {
        Int q0 = digits[j + i] * q1 + q2;
        q2 = q1;
        q1 = q0;
    }
    // alpha_j = (P_j + sqrt(delta))/Q_j
    Rat x0 = Rat(q1 * Ps[j] + q2 * Qs[j]) / Rat(Qs[j]);  // rational part
    Rat y0 = Rat(q1) / Rat(Qs[j]);                       // sqrt(delta) part
    // convert to the {1, omega} basis
    Rat xr, yr;
    if (r4 == 1) {
        // sqrt(delta) = sqrt(d) = 2 omega - 1
        xr = x0 - y0;
        yr = 2 * y0;
    } else {
        // sqrt(delta) = 2 sqrt(d) = 2 omega
        xr = x0;
        yr = 2 * y0;
    }
    xr.canonicalize();
    yr.canonicalize();
    if (xr.get_den() != 1 || yr.get_den() != 1)
        throw std::logic_error("fundamental_unit: unit not integral in omega basis");
    RingElement eps{xr.get_num(), yr.get_num()};
    MonogenicRing O = maximal_order(d);
    Int n = ring_norm(O, eps);
    if (n != 1 && n != -1) throw std::logic_error("fundamental_unit: norm not a unit");
    if (eps.y < 1 || eps.x < 0) throw std::logic_error("fundamental_unit: not the positive root");
    return eps;
}

LaurentVerdict is_laurent_domain(const Int& d) {
    LaurentVerdict v;
    v.unit = fundamental_unit(d);
    // Z[eps] = Z + y omega Z, so the index is |y|; inverses and signs of
    // eps generate the same subring and higher powers only enlarge the
    // index, so testing the fundamental unit decides
    v.index = abs(v.unit.y);
    v.laurent = (v.index == 1);
    return v;
}

LaurentPoly unit_minimal_poly(const Int& d) {
    RingElement eps = fundamental_unit(d);
    MonogenicRing O = maximal_order(d);
    Int tr = elem_trace(O, eps);
    Int nm = ring_norm(O, eps);
    return LaurentPoly::from_coeffs(0, {nm, -tr, 1});
}

}  // namespace paraclass
