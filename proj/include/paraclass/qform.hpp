#ifndef PARACLASS_QFORM_HPP
#define PARACLASS_QFORM_HPP

#include <string>
#include <vector>

#include "paraclass/intmat.hpp"

namespace paraclass {

/* Integral binary quadratic form a x^2 + b x y + c y^2. */
struct QForm {
    Int a, b, c;
    Int disc() const { return b * b - 4 * a * c; }
    Int eval(const Int& x, const Int& y) const { return a * x * x + b * x * y + c * y * y; }
    std::string to_string() const;
};

bool operator==(const QForm& f, const QForm& g);
bool operator<(const QForm& f, const QForm& g);

/* 2x2 integer transform acting on the arguments: (F.U)(v) = F(Uv). */
struct Mat2 {
    Int m00 = 1, m01 = 0, m10 = 0, m11 = 1;
};
Mat2 mat2_mul(const Mat2& a, const Mat2& b);
QForm apply_transform(const QForm& f, const Mat2& u);

/* Gauss reduction of a positive definite form (disc < 0, a > 0);
 * the transform, when requested, satisfies reduced = f.U. */
QForm reduce_definite(QForm f, Mat2* u = nullptr);
bool is_reduced_definite(const QForm& f);

/* Indefinite machinery (disc > 0, not a square). */
bool is_reduced_indefinite(const QForm& f, const Int& sqrt_floor);
QForm normalize_indefinite(const QForm& f, const Int& sqrt_floor, Mat2* u = nullptr);
QForm rho_step(const QForm& f, const Int& sqrt_floor, Mat2* u = nullptr);
QForm reduce_indefinite(QForm f, Mat2* u = nullptr);
/* The full rho-cycle through a reduced form, starting at it. */
std::vector<QForm> form_cycle(const QForm& reduced);

/* Proper representation of +1 or -1 (definite: +1 only). */
struct UnitRep {
    bool found = false;
    Int value;  // +-1
    Int x, y;   // f(x, y) = value
};
UnitRep represents_unit(const QForm& f);

/* Count of reduced positive definite forms of the given discriminant. */
struct FormClassCount {
    long count = 0;
    bool fundamental = false;
    std::vector<QForm> forms;
};
FormClassCount imag_form_class_number(const Int& disc);

}  // namespace paraclass

#endif
