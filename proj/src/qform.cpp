#include "paraclass/qform.hpp"

#include <sstream>
#include <stdexcept>
#include <tuple>

namespace paraclass {

std::string QForm::to_string() const {
    std::ostringstream os;
    os << "(" << a << ", " << b << ", " << c << ")";
    return os.str();
}

bool operator==(const QForm& f, const QForm& g) {
    return f.a == g.a && f.b == g.b && f.c == g.c;
}

bool operator<(const QForm& f, const QForm& g) {
    return std::tie(f.a, f.b, f.c) < std::tie(g.a, g.b, g.c);
}

Mat2 mat2_mul(const Mat2& a, const Mat2& b) {
    return {a.m00 * b.m00 + a.m01 * b.m10, a.m00 * b.m01 + a.m01 * b.m11,
            a.m10 * b.m00 + a.m11 * b.m10, a.m10 * b.m01 + a.m11 * b.m11};
}

QForm apply_transform(const QForm& f, const Mat2& u) {
    // f(m00 x + m01 y, m10 x + m11 y)
    Int a = f.eval(u.m00, u.m10);
    Int c = f.eval(u.m01, u.m11);
    Int b = 2 * f.a * u.m00 * u.m01 + f.b * (u.m00 * u.m11 + u.m01 * u.m10) +
            2 * f.c * u.m10 * u.m11;
    return {a, b, c};
}

bool is_reduced_definite(const QForm& f) {
    Int ab = abs(f.b);
    if (!(ab <= f.a && f.a <= f.c)) return false;
    if ((ab == f.a || f.a == f.c) && f.b < 0) return false;
    return true;
}

QForm reduce_definite(QForm f, Mat2* u) {
    if (f.disc() >= 0 || f.a <= 0)
        throw std::invalid_argument("reduce_definite: need positive definite form");
    Mat2 acc;
    while (!is_reduced_definite(f)) {
        // translate b into (-a, a]
        Int m;
        // m = round(b / 2a): b' = b - 2am in (-a, a]
        Int twoa = 2 * f.a;
        Int num = f.b + f.a - 1;
        mpz_fdiv_q(m.get_mpz_t(), num.get_mpz_t(), twoa.get_mpz_t());
        if (m != 0) {
            Mat2 t{1, -m, 0, 1};
            f = apply_transform(f, t);
            acc = mat2_mul(acc, t);
        }
        if (f.a > f.c) {
            Mat2 s{0, -1, 1, 0};
            f = apply_transform(f, s);
            acc = mat2_mul(acc, s);
        } else if ((f.b == -f.a) || (f.a == f.c && f.b < 0)) {
            if (f.b == -f.a) {
                Mat2 t{1, 1, 0, 1};
                f = apply_transform(f, t);
                acc = mat2_mul(acc, t);
            } else {
                Mat2 s{0, -1, 1, 0};
                f = apply_transform(f, s);
                acc = mat2_mul(acc, s);
            }
        }
    }
    if (u) *u = acc;
    return f;
}

bool is_reduced_indefinite(const QForm& f, const Int& s) {
    // |sqrt(disc) - 2|a|| < b < sqrt(disc), all strict, disc nonsquare
    if (f.b <= 0 || f.b > s) return false;
    Int twoa = 2 * abs(f.a);
    return (twoa - f.b <= s) && (twoa + f.b >= s + 1);
}

QForm normalize_indefinite(const QForm& f, const Int& s, Mat2* u) {
    // choose b' = b + 2 a m with b' in the normalization window
    Int abs_a = abs(f.a);
    Int lo;  // window is (lo, lo + 2|a|]
    if (abs_a > s)
        lo = -abs_a;
    else
        lo = s - 2 * abs_a;
    Int twoa = 2 * f.a;
    // smallest b' > lo congruent to b mod 2|a|
    Int diff = f.b - (lo + 1);
    Int m;
    Int two_abs = 2 * abs_a;
    mpz_fdiv_q(m.get_mpz_t(), diff.get_mpz_t(), two_abs.get_mpz_t());
    Int bp = f.b - m * 2 * abs_a;
    Int alpha = (bp - f.b) / twoa;
    Mat2 t{1, alpha, 0, 1};
    QForm g = apply_transform(f, t);
    if (g.b != bp) throw std::logic_error("normalize_indefinite: translation mismatch");
    if (u) *u = t;
    return g;
}

QForm rho_step(const QForm& f, const Int& s, Mat2* u) {
    Mat2 swap{0, -1, 1, 0};
    QForm g{f.c, -f.b, f.a};
    Mat2 t;
    g = normalize_indefinite(g, s, &t);
    if (u) *u = mat2_mul(swap, t);
    return g;
}

QForm reduce_indefinite(QForm f, Mat2* u) {
    Int d = f.disc();
    if (d <= 0 || mpz_perfect_square_p(d.get_mpz_t()))
        throw std::invalid_argument("reduce_indefinite: need nonsquare positive disc");
    Int s;
    mpz_sqrt(s.get_mpz_t(), d.get_mpz_t());
    Mat2 acc, step;
    f = normalize_indefinite(f, s, &acc);
    long guard = 0;
    while (!is_reduced_indefinite(f, s)) {
        f = rho_step(f, s, &step);
        acc = mat2_mul(acc, step);
        if (++guard > 10000) throw std::logic_error("reduce_indefinite: no convergence");
    }
    if (u) *u = acc;
    return f;
}

std::vector<QForm> form_cycle(const QForm& reduced) {
    Int d = reduced.disc();
    Int s;
    mpz_sqrt(s.get_mpz_t(), d.get_mpz_t());
    if (!is_reduced_indefinite(reduced, s))
        throw std::invalid_argument("form_cycle: form not reduced");
    std::vector<QForm> cycle{reduced};
    QForm f = rho_step(reduced, s, nullptr);
    long guard = 0;
    while (!(f == reduced)) {
        cycle.push_back(f);
        f = rho_step(f, s, nullptr);
        if (++guard > 100000) throw std::logic_error("form_cycle: runaway cycle");
    }
    return cycle;
}

UnitRep represents_unit(const QForm& f) {
    UnitRep rep;
    Int d = f.disc();
    if (d < 0) {
        QForm g = f;
        Mat2 u;
        if (g.a < 0) throw std::invalid_argument("represents_unit: negative definite");
        g = reduce_definite(g, &u);
        if (g.a == 1) {
            rep.found = true;
            rep.value = 1;
            rep.x = u.m00;
            rep.y = u.m10;
        }
        return rep;
    }
    Int s;
    mpz_sqrt(s.get_mpz_t(), d.get_mpz_t());
    Mat2 u, step;
    QForm g = reduce_indefinite(f, &u);
    QForm start = g;
    long guard = 0;
    while (true) {
        if (g.a == 1 || g.a == -1) {
            rep.found = true;
            rep.value = g.a;
            rep.x = u.m00;
            rep.y = u.m10;
            return rep;
        }
        g = rho_step(g, s, &step);
        u = mat2_mul(u, step);
        if (g == start) return rep;
        if (++guard > 100000) throw std::logic_error("represents_unit: runaway cycle");
    }
}

FormClassCount imag_form_class_number(const Int& disc) {
    if (disc >= 0 || (((disc % 4) + 4) % 4 != 0 && ((disc % 4) + 4) % 4 != 1))
        throw std::invalid_argument("imag_form_class_number: need negative disc = 0,1 mod 4");
    FormClassCount out;
    Int r4 = ((disc % 4) + 4) % 4;
    // fundamental: 1 mod 4 squarefree, or 4m with m squarefree = 2,3 mod 4
    {
        auto squarefree = [](Int m) {
            m = abs(m);
            if (m == 0) return false;
            for (Int p = 2; p * p <= m; p++) {
                if (m % (p * p) == 0) return false;
                while (m % p == 0) m /= p;
            }
            return true;
        };
        if (r4 == 1)
            out.fundamental = squarefree(disc);
        else {
            Int q = disc / 4;
            Int q4 = ((q % 4) + 4) % 4;
            out.fundamental = squarefree(q) && (q4 == 2 || q4 == 3);
        }
    }
    Int bound = -disc;  // 3a^2 <= |disc|
    for (Int a = 1; 3 * a * a <= bound; a++) {
        for (Int b = -a; b <= a; b++) {
            if (((b - disc) % 2) != 0) continue;
            Int num = b * b - disc;
            if (num % (4 * a) != 0) continue;
            Int c = num / (4 * a);
            if (c < a) continue;
            if ((abs(b) == a || a == c) && b < 0) continue;
            out.count++;
            out.forms.push_back({a, b, c});
        }
    }
    return out;
}

}  // namespace paraclass
