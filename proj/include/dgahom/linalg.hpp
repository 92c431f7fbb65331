#pragma once

#include "dgahom/cdga.hpp"
#include "dgahom/error.hpp"
#include "dgahom/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace dgahom {

/// Dense exact rational matrix, row-major.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rat& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    static QMatrix identity(std::size_t n);
    static QMatrix from_columns(const std::vector<std::vector<Rat>>& cols, std::size_t rows);
    std::vector<Rat> column(std::size_t j) const;
    std::vector<Rat> apply(const std::vector<Rat>& x) const;  // A*x

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rat> a_;
};

struct RrefResult {
    QMatrix mat;
    std::vector<std::size_t> pivot_cols;  // per pivot row
};

RrefResult rref(QMatrix a);
std::size_t rank(const QMatrix& a);

/// Particular solution of A x = b with all free variables zero; nullopt when
/// inconsistent.  Deterministic: pivots are chosen scanning columns left to
/// right, first nonzero row.
std::optional<std::vector<Rat>> solve(const QMatrix& a, const std::vector<Rat>& b);

/// Canonical kernel basis (one vector per free column, unit free coordinate).
std::vector<std::vector<Rat>> nullspace(const QMatrix& a);

// ---------------------------------------------------------------------------
// Cochain complexes of finite-dimensional Q-vector spaces.

struct ComplexQ {
    std::vector<std::size_t> dims;  // dims[n], n = 0..N
    std::vector<QMatrix> d;         // d[n]: dims[n+1] x dims[n], n = 0..N-1
};

/// Cohomology of a ComplexQ in one degree, with a deterministic representative
/// basis and a projection that kills exact vectors.
class ComplexCohomology {
public:
    unsigned degree = 0;
    std::size_t dim = 0;
    std::vector<std::vector<Rat>> reps;  // coordinates in the degree-n basis

    /// Coordinates of a closed vector in the representative basis.
    std::vector<Rat> project(const std::vector<Rat>& closed) const;

    // solver data: columns are [image basis | reps]
    QMatrix solver;
    std::size_t image_rank = 0;
};

ComplexCohomology complex_cohomology(const ComplexQ& c, unsigned n);

// ---------------------------------------------------------------------------
// Degree-wise linear algebra over a free CDGA.

std::vector<Rat> element_coords(const Element& e, const std::vector<Monomial>& basis);
Element element_from_coords(const FreeCDGA& a, const std::vector<Monomial>& basis,
                            const std::vector<Rat>& coords);

/// Matrix of d_n : A^n -> A^{n+1} in the canonical monomial bases.
QMatrix d_matrix(const FreeCDGA& a, unsigned n);

/// Cochain complex of A in degrees 0..truncation.
ComplexQ algebra_complex(const FreeCDGA& a);

class CohomologySpace {
public:
    const FreeCDGA* alg = nullptr;
    unsigned degree = 0;
    std::size_t dimension = 0;
    std::vector<Element> representatives;

    std::vector<Rat> project(const Element& closed) const;

    std::vector<Monomial> basis;
    ComplexCohomology data;
};

/// pre: n + 1 <= truncation degree, so closedness is decidable.
CohomologySpace cohomology(const FreeCDGA& a, unsigned n);

/// Solve d x = b for homogeneous b; x is taken from the fixed complement of
/// ker d spanned by the pivot monomials (free coordinates zero), so the result
/// is deterministic.  Throws NotExactError when b is not a coboundary.
Element solve_d(const FreeCDGA& a, const Element& b);

// ---------------------------------------------------------------------------
// Integer matrices, Smith normal form, lattice quotients.

class ZMatrix {
public:
    ZMatrix() = default;
    ZMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Int& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Int> a_;
};

struct SmithResult {
    std::vector<Int> diagonal;  // nonnegative, d1 | d2 | ..., length min(rows, cols)
    std::size_t rank = 0;       // number of nonzero diagonal entries
    ZMatrix left;               // left * A * right = diag
    ZMatrix right;
};

SmithResult smith_normal_form(const ZMatrix& a);

struct IntegerLatticeQuotient {
    std::size_t ambient_rank = 0;
    std::vector<Int> invariant_factors;  // the nonzero diagonal, d1 | d2 | ...
    std::size_t rank_deficit = 0;        // number of free (infinite) factors

    bool finite() const { return rank_deficit == 0; }
    Int order() const;  // product of invariant factors; only valid when finite
};

/// Invariant factors of Z^rows / column-span(M).
IntegerLatticeQuotient integer_normal_form(const ZMatrix& m);

// ---------------------------------------------------------------------------
// Exact polyhedral minimization.

/// Exact min of || v + sum_j lambda_j * span[j] ||_inf over rational lambda,
/// by Fourier–Motzkin elimination.
Rat coset_norm_min(const std::vector<Rat>& v, const std::vector<std::vector<Rat>>& span_basis);

}  // namespace dgahom
