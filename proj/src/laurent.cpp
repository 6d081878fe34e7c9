#include "paraclass/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace paraclass {

LaurentPoly LaurentPoly::monomial(const Int& c, long k) {
    LaurentPoly p;
    if (c == 0) return p;
    p.min_deg = k;
    p.coeffs = {c};
    return p;
}

LaurentPoly LaurentPoly::from_coeffs(long min_deg, std::vector<Int> c) {
    size_t lo = 0, hi = c.size();
    while (lo < hi && c[lo] == 0) lo++;
    while (hi > lo && c[hi - 1] == 0) hi--;
    LaurentPoly p;
    if (lo == hi) return p;
    p.min_deg = min_deg + static_cast<long>(lo);
    p.coeffs.assign(c.begin() + lo, c.begin() + hi);
    return p;
}

long LaurentPoly::low_deg() const {
    if (is_zero()) throw std::invalid_argument("zero polynomial has no degree");
    return min_deg;
}

long LaurentPoly::high_deg() const {
    if (is_zero()) throw std::invalid_argument("zero polynomial has no degree");
    return min_deg + static_cast<long>(coeffs.size()) - 1;
}

Int LaurentPoly::coeff(long k) const {
    if (is_zero() || k < min_deg || k > high_deg()) return 0;
    return coeffs[static_cast<size_t>(k - min_deg)];
}

bool LaurentPoly::is_unit_monomial() const {
    return coeffs.size() == 1 && (coeffs[0] == 1 || coeffs[0] == -1);
}

std::string LaurentPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long i = static_cast<long>(coeffs.size()) - 1; i >= 0; i--) {
        const Int& c = coeffs[static_cast<size_t>(i)];
        if (c == 0) continue;
        long deg = min_deg + i;
        Int a = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (a != 1 || deg == 0) os << a;
        if (deg != 0) {
            os << var;
            if (deg != 1) os << "^" << deg;
        }
    }
    return os.str();
}

bool operator==(const LaurentPoly& p, const LaurentPoly& q) {
    return (p.is_zero() && q.is_zero()) ||
           (p.min_deg == q.min_deg && p.coeffs == q.coeffs);
}

LaurentPoly operator+(const LaurentPoly& p, const LaurentPoly& q) {
    if (p.is_zero()) return q;
    if (q.is_zero()) return p;
    long lo = std::min(p.min_deg, q.min_deg);
    long hi = std::max(p.high_deg(), q.high_deg());
    std::vector<Int> c(static_cast<size_t>(hi - lo + 1));
    for (long k = lo; k <= hi; k++) c[static_cast<size_t>(k - lo)] = p.coeff(k) + q.coeff(k);
    return LaurentPoly::from_coeffs(lo, std::move(c));
}

LaurentPoly operator-(const LaurentPoly& p) { return lp_scale(p, -1); }

LaurentPoly operator-(const LaurentPoly& p, const LaurentPoly& q) { return p + (-q); }

LaurentPoly lp_mul(const LaurentPoly& p, const LaurentPoly& q) {
    if (p.is_zero() || q.is_zero()) return LaurentPoly::zero();
    std::vector<Int> c(p.coeffs.size() + q.coeffs.size() - 1);
    for (size_t i = 0; i < p.coeffs.size(); i++) {
        if (p.coeffs[i] == 0) continue;
        for (size_t j = 0; j < q.coeffs.size(); j++) c[i + j] += p.coeffs[i] * q.coeffs[j];
    }
    return LaurentPoly::from_coeffs(p.min_deg + q.min_deg, std::move(c));
}

LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q) { return lp_mul(p, q); }

LaurentPoly lp_scale(const LaurentPoly& p, const Int& c) {
    if (c == 0 || p.is_zero()) return LaurentPoly::zero();
    LaurentPoly r = p;
    for (auto& x : r.coeffs) x *= c;
    return r;
}

LaurentPoly lp_shift(const LaurentPoly& p, long k) {
    if (p.is_zero()) return p;
    LaurentPoly r = p;
    r.min_deg += k;
    return r;
}

LaurentPoly lp_pow(const LaurentPoly& p, unsigned long e) {
    LaurentPoly r = LaurentPoly::one();
    LaurentPoly base = p;
    while (e) {
        if (e & 1) r = lp_mul(r, base);
        base = lp_mul(base, base);
        e >>= 1;
    }
    return r;
}

Rat lp_eval(const LaurentPoly& p, const Rat& x) {
    if (x == 0) throw std::invalid_argument("lp_eval: t is invertible, x must be nonzero");
    if (p.is_zero()) return Rat(0);
    Rat acc(0);
    for (size_t i = p.coeffs.size(); i-- > 0;) {
        acc *= x;
        acc += Rat(p.coeffs[i]);
    }
    // multiply by x^min_deg
    Rat shift(1);
    long m = p.min_deg;
    Rat base = m >= 0 ? x : Rat(1) / x;
    unsigned long e = static_cast<unsigned long>(m >= 0 ? m : -m);
    while (e) {
        if (e & 1) shift *= base;
        base *= base;
        e >>= 1;
    }
    acc *= shift;
    acc.canonicalize();
    return acc;
}

std::pair<Int, Int> end_coeffs(const LaurentPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("end_coeffs: zero polynomial");
    return {p.coeffs.front(), p.coeffs.back()};
}

LaurentPoly lp_divide_exact(const LaurentPoly& num, const LaurentPoly& den) {
    if (den.is_zero()) throw std::invalid_argument("division by zero");
    if (num.is_zero()) return LaurentPoly::zero();
    // work with ordinary polynomials; the t^k offsets divide out exactly
    std::vector<Int> n = num.coeffs;
    const std::vector<Int>& d = den.coeffs;
    if (n.size() < d.size()) throw std::invalid_argument("division not exact");
    std::vector<Int> q(n.size() - d.size() + 1);
    for (size_t i = q.size(); i-- > 0;) {
        Int& lead = n[i + d.size() - 1];
        if (lead % d.back() != 0) throw std::invalid_argument("division not exact");
        q[i] = lead / d.back();
        if (q[i] == 0) continue;
        for (size_t j = 0; j < d.size(); j++) n[i + j] -= q[i] * d[j];
    }
    for (const auto& x : n)
        if (x != 0) throw std::invalid_argument("division not exact");
    return LaurentPoly::from_coeffs(num.min_deg - den.min_deg, std::move(q));
}

LaurentPoly cyclotomic_poly(unsigned long n) {
    if (n == 0) throw std::invalid_argument("cyclotomic_poly: n >= 1");
    // t^n - 1 divided by the cyclotomic polynomials of the proper divisors
    std::vector<Int> tn(n + 1);
    tn[0] = -1;
    tn[n] = 1;
    LaurentPoly phi = LaurentPoly::from_coeffs(0, std::move(tn));
    for (unsigned long d = 1; d < n; d++)
        if (n % d == 0) phi = lp_divide_exact(phi, cyclotomic_poly(d));
    return phi;
}

Mat companion_matrix(const LaurentPoly& h) {
    if (h.is_zero() || h.min_deg != 0 || h.coeffs.back() != 1)
        throw std::invalid_argument("companion_matrix: need monic ordinary polynomial");
    size_t e = h.coeffs.size() - 1;
    if (e == 0) throw std::invalid_argument("companion_matrix: degree >= 1");
    Mat T(e, e);
    for (size_t i = 0; i + 1 < e; i++) T.at(i + 1, i) = 1;  // t * t^i = t^(i+1)
    for (size_t i = 0; i < e; i++) T.at(i, e - 1) = -h.coeffs[i];
    return T;
}

namespace {

/* Evaluate an ordinary polynomial at a square matrix. */
Mat poly_at_matrix(const LaurentPoly& p, const Mat& T) {
    size_t e = T.rows();
    Mat acc(e, e);
    if (p.is_zero()) return acc;
    if (p.min_deg < 0) throw std::invalid_argument("poly_at_matrix: ordinary polynomial only");
    for (size_t i = p.coeffs.size(); i-- > 0;) {
        acc = acc * T;
        for (size_t k = 0; k < e; k++) acc.at(k, k) += p.coeffs[i];
    }
    return mat_pow(T, static_cast<unsigned long>(p.min_deg)) * acc;
}

/* Shift a Laurent polynomial to an ordinary polynomial with nonzero
 * constant term (multiplication by the unit t^-low).  Zero unchanged. */
LaurentPoly to_ordinary(const LaurentPoly& p) {
    if (p.is_zero()) return p;
    return lp_shift(p, -p.low_deg());
}

/* t-saturation of the column lattice lam inside Z^e: the stable lattice
 * {x : T^k x in lam for some k}.  Requires T lam <= lam and det T != 0. */
Mat t_saturate(const Mat& T, Mat lam) {
    size_t e = T.rows();
    while (true) {
        if (lam.cols() == 0) return lam;  // zero lattice, T injective on Z^e
        // {x : T x in lam} via the kernel of [T | -lam]
        Mat stacked = T.hstack(lattice_sum(lam, Mat(e, 0)));
        for (size_t i = 0; i < e; i++)
            for (size_t j = T.cols(); j < stacked.cols(); j++)
                stacked.at(i, j) = -stacked.at(i, j);
        Mat ker = kernel_cols(stacked);
        Mat pre(e, ker.cols());
        for (size_t i = 0; i < e; i++)
            for (size_t j = 0; j < ker.cols(); j++) pre.at(i, j) = ker.at(i, j);
        Mat next = hnf_cols(pre);
        if (same_lattice(next, lam)) return next;
        lam = next;
    }
}

}  // namespace

AbelianGroupStructure finite_quotient(const LaurentPoly& g1, const LaurentPoly& g2) {
    if (g1.is_zero() && g2.is_zero())
        throw std::invalid_argument("finite_quotient: generators both zero");
    LaurentPoly p1 = to_ordinary(g1), p2 = to_ordinary(g2);

    // single-generator quotients Z[t,t^-1]/(g)
    if (p1.is_zero() || p2.is_zero()) {
        const LaurentPoly& g = p1.is_zero() ? p2 : p1;
        auto [lo, hi] = end_coeffs(g);
        if (g.degree_span() == 0) {
            if (abs(lo) == 1) return AbelianGroupStructure{};
            throw NotFinitelyGenerated(
                "infinite free rank exceeds window: Z/" + lo.get_str() +
                " coefficients over Z[t,t^-1]");
        }
        if (abs(lo) == 1 && abs(hi) == 1) {
            AbelianGroupStructure s;
            s.free_rank = g.degree_span();
            return s;
        }
        throw NotFinitelyGenerated(
            "infinite free rank exceeds window: end coefficient not a unit in " +
            g.to_string());
    }

    // a generator that is a unit kills everything
    if (p1.is_unit_monomial() || p2.is_unit_monomial()) return AbelianGroupStructure{};

    // both constants: quotient is (Z/g)[t,t^-1]
    if (p1.degree_span() == 0 && p2.degree_span() == 0) {
        Int g = gcd(p1.coeffs[0], p2.coeffs[0]);
        if (g == 1) return AbelianGroupStructure{};
        throw NotFinitelyGenerated("infinite free rank exceeds window: (Z/" + g.get_str() +
                                   ")[t,t^-1]");
    }

    // pick a monic (up to sign) generator h of positive degree; the other
    // is imposed as a relation matrix on Z[t]/(h), then t is inverted
    auto monicish = [](const LaurentPoly& p) {
        return p.degree_span() >= 1 && abs(p.coeffs.back()) == 1;
    };
    LaurentPoly h, g;
    if (monicish(p1) && (!monicish(p2) || p1.degree_span() <= p2.degree_span())) {
        h = p1;
        g = p2;
    } else if (monicish(p2)) {
        h = p2;
        g = p1;
    } else {
        throw std::invalid_argument(
            "finite_quotient: no monic generator after normalization (unsupported)");
    }
    if (h.coeffs.back() == -1) h = lp_scale(h, -1);

    Mat T = companion_matrix(h);
    Mat G = poly_at_matrix(g, T);
    size_t e = T.rows();
    Mat lam = hnf_cols(G);
    // elements annihilated by a power of t die in the localization
    lam = t_saturate(T, lam);
    // t must act invertibly on what remains, otherwise the localization
    // is a strictly ascending union and not finitely generated
    AbelianGroupStructure coker = structure_from_presentation(e, lattice_sum(T, lam));
    if (!coker.is_trivial())
        throw NotFinitelyGenerated(
            "infinite free rank exceeds window: t does not act onto (coker " +
            coker.to_string() + ")");
    return structure_from_presentation(e, lam);
}

}  // namespace paraclass
