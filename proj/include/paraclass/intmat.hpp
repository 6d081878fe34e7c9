#ifndef PARACLASS_INTMAT_HPP
#define PARACLASS_INTMAT_HPP

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace paraclass {

using Int = mpz_class;
using Rat = mpq_class;

/* Dense matrix over Z with arbitrary-precision entries, row major.
 * Everything in this project is desk scale (dimensions < 50), so the
 * normal-form algorithms below favor clarity over asymptotics. */
class Mat {
  public:
    Mat() = default;
    Mat(size_t r, size_t c) : rows_(r), cols_(c), a_(r * c) {}

    static Mat identity(size_t n);
    static Mat from_rows(const std::vector<std::vector<Int>>& rows);
    static Mat column(const std::vector<Int>& v);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Int& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const Int& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

    std::vector<Int> col(size_t j) const;
    std::vector<Int> row(size_t i) const;
    void swap_cols(size_t i, size_t j);
    Mat hstack(const Mat& other) const;   // [this | other]
    bool is_zero() const;
    std::string to_string() const;

  private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<Int> a_;
};

bool operator==(const Mat& x, const Mat& y);
Mat operator*(const Mat& x, const Mat& y);
Mat operator+(const Mat& x, const Mat& y);
Mat operator-(const Mat& x, const Mat& y);
std::vector<Int> operator*(const Mat& m, const std::vector<Int>& v);
Mat mat_pow(const Mat& m, unsigned long e);
Int det(const Mat& m);                     // fraction-free (Bareiss)

/* Column-style Hermite normal form of the column lattice of m.
 * Returned columns have strictly increasing pivot rows, positive pivots,
 * and entries of earlier columns reduced into [0, pivot) at each pivot
 * row; zero columns are dropped.  Canonical for the lattice. */
Mat hnf_cols(const Mat& m);
/* Same, also producing a unimodular U with m * U = [H | 0]. */
Mat hnf_cols_transform(const Mat& m, Mat* transform);

/* Integer kernel {x : m x = 0}, basis as columns (in HNF). */
Mat kernel_cols(const Mat& m);

/* Solve basis * x = v over Z.  basis need not be in HNF. */
bool solve_in_lattice(const Mat& basis, const std::vector<Int>& v,
                      std::vector<Int>* coeffs = nullptr);

bool same_lattice(const Mat& a, const Mat& b);
Mat lattice_sum(const Mat& a, const Mat& b);

/* Diagonal of the Smith normal form: nonnegative, d_i | d_{i+1},
 * trailing zeros for rank deficiency. */
std::vector<Int> snf_diag(Mat m);

/* Characteristic polynomial of a square matrix, monic, coefficients
 * low to high.  Computed by evaluation/interpolation with exact dets. */
std::vector<Int> char_poly(const Mat& m);

/* --- finitely generated abelian groups ------------------------------- */

struct AbelianGroupStructure {
    long free_rank = 0;
    std::vector<Int> invariant_factors;  // each >= 2, d_i | d_{i+1}

    bool is_trivial() const { return free_rank == 0 && invariant_factors.empty(); }
    bool is_finite() const { return free_rank == 0; }
    Int order() const;  // finite groups only
    std::string to_string() const;
};

bool operator==(const AbelianGroupStructure& x, const AbelianGroupStructure& y);

/* Structure of Z^ngens / (column lattice of relations). */
AbelianGroupStructure structure_from_presentation(size_t ngens, const Mat& relations);
AbelianGroupStructure direct_sum(const AbelianGroupStructure& x,
                                 const AbelianGroupStructure& y);

}  // namespace paraclass

#endif
