#ifndef PARACLASS_LAURENT_HPP
#define PARACLASS_LAURENT_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "paraclass/intmat.hpp"

namespace paraclass {

/* Element of Z[t, t^-1] in canonical form: coeffs[i] is the coefficient
 * of t^(min_deg + i); first and last coefficients are nonzero unless the
 * polynomial is zero, which is stored as {min_deg = 0, coeffs = {}}. */
struct LaurentPoly {
    long min_deg = 0;
    std::vector<Int> coeffs;

    static LaurentPoly zero() { return LaurentPoly{}; }
    static LaurentPoly one() { return monomial(1, 0); }
    static LaurentPoly t() { return monomial(1, 1); }
    static LaurentPoly constant(const Int& c) { return monomial(c, 0); }
    static LaurentPoly monomial(const Int& c, long k);
    /* coefficients low to high starting at t^min_deg, then normalized */
    static LaurentPoly from_coeffs(long min_deg, std::vector<Int> c);

    bool is_zero() const { return coeffs.empty(); }
    long low_deg() const;
    long high_deg() const;
    long degree_span() const { return is_zero() ? 0 : high_deg() - low_deg(); }
    Int coeff(long k) const;
    bool is_one() const { return coeffs.size() == 1 && min_deg == 0 && coeffs[0] == 1; }
    /* +-t^k */
    bool is_unit_monomial() const;
    std::string to_string(const std::string& var = "t") const;
};

bool operator==(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly operator+(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly operator-(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly operator-(const LaurentPoly& p);
LaurentPoly lp_mul(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly lp_scale(const LaurentPoly& p, const Int& c);
LaurentPoly lp_shift(const LaurentPoly& p, long k);  // * t^k
LaurentPoly lp_pow(const LaurentPoly& p, unsigned long e);

/* Exact evaluation at a nonzero rational. */
Rat lp_eval(const LaurentPoly& p, const Rat& x);

/* (lowest, highest) coefficients of a nonzero polynomial. */
std::pair<Int, Int> end_coeffs(const LaurentPoly& p);

/* Exact division in Z[t, t^-1]; throws if the division is not exact. */
LaurentPoly lp_divide_exact(const LaurentPoly& num, const LaurentPoly& den);

/* n-th cyclotomic polynomial via iterated exact division of t^n - 1. */
LaurentPoly cyclotomic_poly(unsigned long n);

/* Multiplication-by-t matrix on the basis 1, t, ..., t^(e-1) of
 * Z[t]/(h) for h monic of degree e with h(0) != 0. */
Mat companion_matrix(const LaurentPoly& h);

/* Thrown by finite_quotient when Z[t,t^-1]/(g1,g2) is not a finitely
 * generated abelian group (free rank would exceed any finite window). */
struct NotFinitelyGenerated : std::runtime_error {
    explicit NotFinitelyGenerated(const std::string& msg) : std::runtime_error(msg) {}
};

/* Abelian group structure of Z[t,t^-1]/(g1,g2), g1 and g2 not both zero. */
AbelianGroupStructure finite_quotient(const LaurentPoly& g1, const LaurentPoly& g2);

}  // namespace paraclass

#endif
