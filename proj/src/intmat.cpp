#include "paraclass/intmat.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace paraclass {

Mat Mat::identity(size_t n) {
    Mat m(n, n);
    for (size_t i = 0; i < n; i++) m.at(i, i) = 1;
    return m;
}

Mat Mat::from_rows(const std::vector<std::vector<Int>>& rows) {
    if (rows.empty()) return Mat();
    Mat m(rows.size(), rows[0].size());
    for (size_t i = 0; i < rows.size(); i++) {
        if (rows[i].size() != m.cols()) throw std::invalid_argument("ragged rows");
        for (size_t j = 0; j < m.cols(); j++) m.at(i, j) = rows[i][j];
    }
    return m;
}

Mat Mat::column(const std::vector<Int>& v) {
    Mat m(v.size(), 1);
    for (size_t i = 0; i < v.size(); i++) m.at(i, 0) = v[i];
    return m;
}

std::vector<Int> Mat::col(size_t j) const {
    std::vector<Int> v(rows_);
    for (size_t i = 0; i < rows_; i++) v[i] = at(i, j);
    return v;
}

std::vector<Int> Mat::row(size_t i) const {
    std::vector<Int> v(cols_);
    for (size_t j = 0; j < cols_; j++) v[j] = at(i, j);
    return v;
}

void Mat::swap_cols(size_t i, size_t j) {
    for (size_t r = 0; r < rows_; r++) std::swap(at(r, i), at(r, j));
}

Mat Mat::hstack(const Mat& other) const {
    if (rows_ != other.rows_) throw std::invalid_argument("hstack row mismatch");
    Mat m(rows_, cols_ + other.cols_);
    for (size_t i = 0; i < rows_; i++) {
        for (size_t j = 0; j < cols_; j++) m.at(i, j) = at(i, j);
        for (size_t j = 0; j < other.cols_; j++) m.at(i, cols_ + j) = other.at(i, j);
    }
    return m;
}

bool Mat::is_zero() const {
    for (const auto& x : a_)
        if (x != 0) return false;
    return true;
}

std::string Mat::to_string() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < rows_; i++) {
        os << "[";
        for (size_t j = 0; j < cols_; j++) os << at(i, j) << (j + 1 < cols_ ? "," : "");
        os << "]" << (i + 1 < rows_ ? "," : "");
    }
    os << "]";
    return os.str();
}

bool operator==(const Mat& x, const Mat& y) {
    if (x.rows() != y.rows() || x.cols() != y.cols()) return false;
    for (size_t i = 0; i < x.rows(); i++)
        for (size_t j = 0; j < x.cols(); j++)
            if (x.at(i, j) != y.at(i, j)) return false;
    return true;
}

Mat operator*(const Mat& x, const Mat& y) {
    if (x.cols() != y.rows()) throw std::invalid_argument("mul shape mismatch");
    Mat m(x.rows(), y.cols());
    for (size_t i = 0; i < x.rows(); i++)
        for (size_t k = 0; k < x.cols(); k++) {
            if (x.at(i, k) == 0) continue;
            for (size_t j = 0; j < y.cols(); j++) m.at(i, j) += x.at(i, k) * y.at(k, j);
        }
    return m;
}

Mat operator+(const Mat& x, const Mat& y) {
    if (x.rows() != y.rows() || x.cols() != y.cols()) throw std::invalid_argument("add shape");
    Mat m(x.rows(), x.cols());
    for (size_t i = 0; i < x.rows(); i++)
        for (size_t j = 0; j < x.cols(); j++) m.at(i, j) = x.at(i, j) + y.at(i, j);
    return m;
}

Mat operator-(const Mat& x, const Mat& y) {
    if (x.rows() != y.rows() || x.cols() != y.cols()) throw std::invalid_argument("sub shape");
    Mat m(x.rows(), x.cols());
    for (size_t i = 0; i < x.rows(); i++)
        for (size_t j = 0; j < x.cols(); j++) m.at(i, j) = x.at(i, j) - y.at(i, j);
    return m;
}

std::vector<Int> operator*(const Mat& m, const std::vector<Int>& v) {
    if (m.cols() != v.size()) throw std::invalid_argument("matvec shape mismatch");
    std::vector<Int> r(m.rows());
    for (size_t i = 0; i < m.rows(); i++)
        for (size_t j = 0; j < m.cols(); j++) r[i] += m.at(i, j) * v[j];
    return r;
}

Mat mat_pow(const Mat& m, unsigned long e) {
    if (m.rows() != m.cols()) throw std::invalid_argument("pow needs square");
    Mat r = Mat::identity(m.rows());
    Mat base = m;
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

Int det(const Mat& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det needs square");
    size_t n = m.rows();
    if (n == 0) return 1;
    Mat a = m;
    Int prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; k++) {
        if (a.at(k, k) == 0) {
            size_t p = k + 1;
            while (p < n && a.at(p, k) == 0) p++;
            if (p == n) return 0;
            for (size_t j = 0; j < n; j++) std::swap(a.at(k, j), a.at(p, j));
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; i++)
            for (size_t j = k + 1; j < n; j++) {
                Int num = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                mpz_divexact(a.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
        prev = a.at(k, k);
    }
    return sign > 0 ? a.at(n - 1, n - 1) : Int(-a.at(n - 1, n - 1));
}

namespace {

/* Column elimination at row r across columns [k, cols): leaves the gcd of
 * the row entries in column k and zeros elsewhere, via unimodular ops
 * mirrored into *u when given. */
void eliminate_row(Mat& a, Mat* u, size_t r, size_t k) {
    size_t n = a.cols();
    for (size_t j = k + 1; j < n; j++) {
        if (a.at(r, j) == 0) continue;
        if (a.at(r, k) == 0) {
            a.swap_cols(k, j);
            if (u) u->swap_cols(k, j);
            continue;
        }
        Int g, p, q;
        mpz_gcdext(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t(),
                   a.at(r, k).get_mpz_t(), a.at(r, j).get_mpz_t());
        Int xk = a.at(r, k) / g, xj = a.at(r, j) / g;
        for (size_t i = 0; i < a.rows(); i++) {
            Int ck = a.at(i, k), cj = a.at(i, j);
            a.at(i, k) = p * ck + q * cj;
            a.at(i, j) = -xj * ck + xk * cj;
        }
        if (u)
            for (size_t i = 0; i < u->rows(); i++) {
                Int ck = u->at(i, k), cj = u->at(i, j);
                u->at(i, k) = p * ck + q * cj;
                u->at(i, j) = -xj * ck + xk * cj;
            }
    }
}

Mat hnf_impl(const Mat& m, Mat* transform) {
    Mat a = m;
    Mat u = Mat::identity(m.cols());
    Mat* up = transform ? &u : nullptr;
    size_t k = 0;
    std::vector<size_t> pivots;
    for (size_t r = 0; r < a.rows() && k < a.cols(); r++) {
        size_t j = k;
        while (j < a.cols() && a.at(r, j) == 0) j++;
        if (j == a.cols()) continue;
        if (j != k) {
            a.swap_cols(k, j);
            if (up) up->swap_cols(k, j);
        }
        eliminate_row(a, up, r, k);
        if (a.at(r, k) < 0) {
            for (size_t i = 0; i < a.rows(); i++) a.at(i, k) = -a.at(i, k);
            if (up)
                for (size_t i = 0; i < up->rows(); i++) up->at(i, k) = -up->at(i, k);
        }
        // reduce earlier columns at the pivot row into [0, pivot)
        for (size_t j2 = 0; j2 < k; j2++) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), a.at(r, j2).get_mpz_t(), a.at(r, k).get_mpz_t());
            if (q == 0) continue;
            for (size_t i = 0; i < a.rows(); i++) a.at(i, j2) -= q * a.at(i, k);
            if (up)
                for (size_t i = 0; i < up->rows(); i++) up->at(i, j2) -= q * up->at(i, k);
        }
        pivots.push_back(r);
        k++;
    }
    Mat h(a.rows(), k);
    for (size_t i = 0; i < a.rows(); i++)
        for (size_t j = 0; j < k; j++) h.at(i, j) = a.at(i, j);
    if (transform) *transform = u;
    return h;
}

}  // namespace

Mat hnf_cols(const Mat& m) { return hnf_impl(m, nullptr); }

Mat hnf_cols_transform(const Mat& m, Mat* transform) { return hnf_impl(m, transform); }

Mat kernel_cols(const Mat& m) {
    Mat u;
    Mat h = hnf_cols_transform(m, &u);
    size_t rank = h.cols();
    size_t n = m.cols();
    if (rank >= n) return Mat(n, 0);
    Mat k(n, n - rank);
    for (size_t j = rank; j < n; j++)
        for (size_t i = 0; i < n; i++) k.at(i, j - rank) = u.at(i, j);
    return hnf_cols(k);
}

bool solve_in_lattice(const Mat& basis, const std::vector<Int>& v,
                      std::vector<Int>* coeffs) {
    if (basis.rows() != v.size()) throw std::invalid_argument("solve shape mismatch");
    Mat u;
    Mat h = hnf_cols_transform(basis, &u);
    // pivot rows of h are strictly increasing
    std::vector<size_t> pivots;
    for (size_t j = 0; j < h.cols(); j++) {
        size_t i = 0;
        while (i < h.rows() && h.at(i, j) == 0) i++;
        pivots.push_back(i);
    }
    std::vector<Int> y(h.cols());
    std::vector<Int> residue = v;
    for (size_t j = 0; j < h.cols(); j++) {
        size_t p = pivots[j];
        Int q, r;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), residue[p].get_mpz_t(),
                    h.at(p, j).get_mpz_t());
        if (r != 0) return false;
        y[j] = q;
        for (size_t i = 0; i < h.rows(); i++) residue[i] -= q * h.at(i, j);
    }
    for (const auto& x : residue)
        if (x != 0) return false;
    if (coeffs) {
        coeffs->assign(basis.cols(), 0);
        for (size_t i = 0; i < basis.cols(); i++)
            for (size_t j = 0; j < h.cols(); j++) (*coeffs)[i] += u.at(i, j) * y[j];
    }
    return true;
}

bool same_lattice(const Mat& a, const Mat& b) { return hnf_cols(a) == hnf_cols(b); }

Mat lattice_sum(const Mat& a, const Mat& b) {
    if (a.empty()) return hnf_cols(b);
    if (b.empty()) return hnf_cols(a);
    return hnf_cols(a.hstack(b));
}

std::vector<Int> snf_diag(Mat m) {
    size_t n = std::min(m.rows(), m.cols());
    std::vector<Int> diag;
    size_t top = 0;
    while (top < std::min(m.rows(), m.cols())) {
        // find a nonzero pivot
        size_t pi = top, pj = top;
        bool found = false;
        for (size_t i = top; i < m.rows() && !found; i++)
            for (size_t j = top; j < m.cols() && !found; j++)
                if (m.at(i, j) != 0) {
                    pi = i;
                    pj = j;
                    found = true;
                }
        if (!found) break;
        for (size_t j = 0; j < m.cols(); j++) std::swap(m.at(top, j), m.at(pi, j));
        m.swap_cols(top, pj);
        while (true) {
            // shrink the pivot until it divides its row and column; each
            // gcd step strictly reduces |pivot|
            bool shrunk = false;
            for (size_t j = top + 1; j < m.cols(); j++) {
                if (m.at(top, j) % m.at(top, top) == 0) continue;
                Int g, p, q;
                mpz_gcdext(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t(),
                           m.at(top, top).get_mpz_t(), m.at(top, j).get_mpz_t());
                Int xk = m.at(top, top) / g, xj = m.at(top, j) / g;
                for (size_t i = 0; i < m.rows(); i++) {
                    Int ck = m.at(i, top), cj = m.at(i, j);
                    m.at(i, top) = p * ck + q * cj;
                    m.at(i, j) = -xj * ck + xk * cj;
                }
                shrunk = true;
            }
            for (size_t i = top + 1; i < m.rows(); i++) {
                if (m.at(i, top) % m.at(top, top) == 0) continue;
                Int g, p, q;
                mpz_gcdext(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t(),
                           m.at(top, top).get_mpz_t(), m.at(i, top).get_mpz_t());
                Int xk = m.at(top, top) / g, xi = m.at(i, top) / g;
                for (size_t j = 0; j < m.cols(); j++) {
                    Int ck = m.at(top, j), ci = m.at(i, j);
                    m.at(top, j) = p * ck + q * ci;
                    m.at(i, j) = -xi * ck + xk * ci;
                }
                shrunk = true;
            }
            if (shrunk) continue;
            // plain eliminations keep the pivot row and column clean
            for (size_t j = top + 1; j < m.cols(); j++) {
                Int q = m.at(top, j) / m.at(top, top);
                if (q == 0) continue;
                for (size_t i = 0; i < m.rows(); i++) m.at(i, j) -= q * m.at(i, top);
            }
            for (size_t i = top + 1; i < m.rows(); i++) {
                Int q = m.at(i, top) / m.at(top, top);
                if (q == 0) continue;
                for (size_t j = 0; j < m.cols(); j++) m.at(i, j) -= q * m.at(top, j);
            }
            // pivot must divide the remaining block
            bool fixed = false;
            for (size_t i = top + 1; i < m.rows() && !fixed; i++)
                for (size_t j = top + 1; j < m.cols() && !fixed; j++)
                    if (m.at(i, j) % m.at(top, top) != 0) {
                        for (size_t j2 = 0; j2 < m.cols(); j2++)
                            m.at(top, j2) += m.at(i, j2);
                        fixed = true;
                    }
            if (!fixed) break;
        }
        diag.push_back(abs(m.at(top, top)));
        top++;
    }
    while (diag.size() < n) diag.push_back(0);
    return diag;
}

std::vector<Int> char_poly(const Mat& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("char_poly needs square");
    size_t n = m.rows();
    // evaluate det(xI - M) at x = 0..n, then exact Lagrange interpolation
    std::vector<Int> xs(n + 1), ys(n + 1);
    for (size_t k = 0; k <= n; k++) {
        xs[k] = Int(static_cast<long>(k));
        Mat a(n, n);
        for (size_t i = 0; i < n; i++)
            for (size_t j = 0; j < n; j++)
                a.at(i, j) = (i == j ? Int(xs[k] - m.at(i, j)) : Int(-m.at(i, j)));
        ys[k] = det(a);
    }
    // Newton's divided differences with exact rational arithmetic
    std::vector<Rat> coef(n + 1);
    std::vector<Rat> dd(n + 1);
    for (size_t k = 0; k <= n; k++) dd[k] = Rat(ys[k]);
    for (size_t level = 1; level <= n; level++)
        for (size_t k = n; k >= level; k--)
            dd[k] = (dd[k] - dd[k - 1]) / Rat(xs[k] - xs[k - level]);
    // expand Newton form into monomial coefficients
    std::vector<Rat> poly{dd[n]};
    for (size_t k = n; k-- > 0;) {
        std::vector<Rat> next(poly.size() + 1);
        for (size_t i = 0; i < poly.size(); i++) {
            next[i + 1] += poly[i];
            next[i] -= poly[i] * Rat(xs[k]);
        }
        next[0] += dd[k];
        poly = next;
    }
    std::vector<Int> out(n + 1);
    for (size_t i = 0; i <= n; i++) {
        Rat c = poly.size() > i ? poly[i] : Rat(0);
        c.canonicalize();
        if (c.get_den() != 1) throw std::logic_error("char_poly interpolation not integral");
        out[i] = c.get_num();
    }
    return out;
}

Int AbelianGroupStructure::order() const {
    if (free_rank != 0) throw std::logic_error("order of infinite group");
    Int o = 1;
    for (const auto& d : invariant_factors) o *= d;
    return o;
}

std::string AbelianGroupStructure::to_string() const {
    if (is_trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    if (free_rank == 1) {
        os << "Z";
        first = false;
    } else if (free_rank > 1) {
        os << "Z^" << free_rank;
        first = false;
    }
    for (const auto& d : invariant_factors) {
        if (!first) os << " x ";
        os << "Z/" << d;
        first = false;
    }
    return os.str();
}

bool operator==(const AbelianGroupStructure& x, const AbelianGroupStructure& y) {
    return x.free_rank == y.free_rank && x.invariant_factors == y.invariant_factors;
}

AbelianGroupStructure structure_from_presentation(size_t ngens, const Mat& relations) {
    AbelianGroupStructure s;
    if (relations.empty()) {
        s.free_rank = static_cast<long>(ngens);
        return s;
    }
    if (relations.rows() != ngens) throw std::invalid_argument("presentation shape");
    std::vector<Int> d = snf_diag(relations);
    long rank = 0;
    for (const auto& x : d)
        if (x != 0) rank++;
    s.free_rank = static_cast<long>(ngens) - rank;
    for (const auto& x : d)
        if (x > 1) s.invariant_factors.push_back(x);
    std::sort(s.invariant_factors.begin(), s.invariant_factors.end());
    return s;
}

AbelianGroupStructure direct_sum(const AbelianGroupStructure& x,
                                 const AbelianGroupStructure& y) {
    std::vector<Int> all = x.invariant_factors;
    all.insert(all.end(), y.invariant_factors.begin(), y.invariant_factors.end());
    size_t n = all.size();
    Mat diag(n, n);
    for (size_t i = 0; i < n; i++) diag.at(i, i) = all[i];
    AbelianGroupStructure s = structure_from_presentation(n, diag);
    s.free_rank = x.free_rank + y.free_rank;
    return s;
}

}  // namespace paraclass
