#include "dgahom/linalg.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace dgahom {

QMatrix QMatrix::identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

QMatrix QMatrix::from_columns(const std::vector<std::vector<Rat>>& cols, std::size_t rows) {
    QMatrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
    return m;
}

std::vector<Rat> QMatrix::column(std::size_t j) const {
    std::vector<Rat> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
    return c;
}

std::vector<Rat> QMatrix::apply(const std::vector<Rat>& x) const {
    std::vector<Rat> y(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        Rat s = 0;
        for (std::size_t j = 0; j < cols_; ++j)
            if (a_[i * cols_ + j] != 0) s += a_[i * cols_ + j] * x[j];
        y[i] = s;
    }
    return y;
}

RrefResult rref(QMatrix a) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t p = row;
        while (p < a.rows() && a.at(p, col) == 0) ++p;
        if (p == a.rows()) continue;
        if (p != row)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(p, j), a.at(row, j));
        Rat inv = Rat(1) / a.at(row, col);
        for (std::size_t j = col; j < a.cols(); ++j) a.at(row, j) *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == row || a.at(i, col) == 0) continue;
            Rat f = a.at(i, col);
            for (std::size_t j = col; j < a.cols(); ++j) a.at(i, j) -= f * a.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(a), std::move(pivots)};
}

std::size_t rank(const QMatrix& a) { return rref(a).pivot_cols.size(); }

std::optional<std::vector<Rat>> solve(const QMatrix& a, const std::vector<Rat>& b) {
    QMatrix aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = b[i];
    }
    RrefResult r = rref(std::move(aug));
    for (std::size_t k = 0; k < r.pivot_cols.size(); ++k)
        if (r.pivot_cols[k] == a.cols()) return std::nullopt;  // inconsistent
    std::vector<Rat> x(a.cols());
    for (std::size_t k = 0; k < r.pivot_cols.size(); ++k)
        x[r.pivot_cols[k]] = r.mat.at(k, a.cols());
    return x;
}

std::vector<std::vector<Rat>> nullspace(const QMatrix& a) {
    RrefResult r = rref(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto c : r.pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<Rat>> basis;
    for (std::size_t free = 0; free < a.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rat> v(a.cols());
        v[free] = 1;
        for (std::size_t k = 0; k < r.pivot_cols.size(); ++k)
            v[r.pivot_cols[k]] = -r.mat.at(k, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<Rat> ComplexCohomology::project(const std::vector<Rat>& closed) const {
    auto x = solve(solver, closed);
    if (!x) throw ValidationError("project: vector is not in the cocycle space");
    return std::vector<Rat>(x->begin() + static_cast<long>(image_rank), x->end());
}

ComplexCohomology complex_cohomology(const ComplexQ& c, unsigned n) {
    if (n >= c.dims.size()) throw DegreeOutOfRangeError("complex_cohomology: degree out of range");
    const std::size_t dim_n = c.dims[n];
    ComplexCohomology out;
    out.degree = n;
    if (dim_n == 0) return out;

    // kernel of d_n (everything is closed in the top recorded degree)
    std::vector<std::vector<Rat>> kernel;
    if (n + 1 < c.dims.size() && n < c.d.size())
        kernel = nullspace(c.d[n]);
    else {
        for (std::size_t j = 0; j < dim_n; ++j) {
            std::vector<Rat> v(dim_n);
            v[j] = 1;
            kernel.push_back(std::move(v));
        }
    }

    // image of d_{n-1}: pivot columns of the differential, in basis order
    std::vector<std::vector<Rat>> image;
    if (n >= 1 && c.dims[n - 1] > 0) {
        const QMatrix& dm = c.d[n - 1];
        RrefResult r = rref(dm);
        for (auto col : r.pivot_cols) image.push_back(dm.column(col));
    }

    // extend the image basis to the kernel by canonical kernel vectors
    std::vector<std::vector<Rat>> cols = image;
    std::vector<std::vector<Rat>> reps;
    std::size_t cur_rank = rank(QMatrix::from_columns(cols, dim_n));
    for (const auto& k : kernel) {
        cols.push_back(k);
        std::size_t nr = rank(QMatrix::from_columns(cols, dim_n));
        if (nr > cur_rank) {
            reps.push_back(k);
            cur_rank = nr;
        } else {
            cols.pop_back();
        }
    }
    out.dim = reps.size();
    out.reps = reps;
    out.image_rank = image.size();
    std::vector<std::vector<Rat>> solver_cols = image;
    solver_cols.insert(solver_cols.end(), reps.begin(), reps.end());
    out.solver = QMatrix::from_columns(solver_cols, dim_n);
    return out;
}

std::vector<Rat> element_coords(const Element& e, const std::vector<Monomial>& basis) {
    std::vector<Rat> v(basis.size());
    std::size_t found = 0;
    for (std::size_t j = 0; j < basis.size(); ++j) {
        v[j] = e.coefficient(basis[j]);
        if (v[j] != 0) ++found;
    }
    // all terms of e must be accounted for
    std::size_t nonzero = 0;
    for (const auto& t : e.terms())
        if (t.second != 0) ++nonzero;
    if (found != nonzero)
        throw DegreeOutOfRangeError("element_coords: element has terms outside the basis");
    return v;
}

Element element_from_coords(const FreeCDGA& a, const std::vector<Monomial>& basis,
                            const std::vector<Rat>& coords) {
    std::vector<Element::Term> terms;
    for (std::size_t j = 0; j < basis.size(); ++j)
        if (coords[j] != 0) terms.emplace_back(basis[j], coords[j]);
    return a.make(std::move(terms));
}

QMatrix d_matrix(const FreeCDGA& a, unsigned n) {
    std::vector<Monomial> src = a.basis(n);
    std::vector<Monomial> dst = a.basis(n + 1);
    QMatrix m(dst.size(), src.size());
    for (std::size_t j = 0; j < src.size(); ++j) {
        Element d = a.differential(a.make({{src[j], Rat(1)}}));
        for (const auto& [mono, coeff] : d.terms()) {
            auto it = std::lower_bound(dst.begin(), dst.end(), mono);
            if (it == dst.end() || *it != mono) continue;  // truncated away
            m.at(static_cast<std::size_t>(it - dst.begin()), j) = coeff;
        }
    }
    return m;
}

ComplexQ algebra_complex(const FreeCDGA& a) {
    ComplexQ c;
    unsigned top = a.truncation_degree();
    for (unsigned n = 0; n <= top; ++n) c.dims.push_back(a.basis(n).size());
    for (unsigned n = 0; n < top; ++n) c.d.push_back(d_matrix(a, n));
    return c;
}

std::vector<Rat> CohomologySpace::project(const Element& closed) const {
    if (closed.algebra() != alg) throw MixedAlgebraError("project: wrong algebra");
    if (!closed.is_zero() && !differential(closed).is_zero())
        throw ValidationError("project: element is not closed");
    return data.project(element_coords(closed, basis));
}

CohomologySpace cohomology(const FreeCDGA& a, unsigned n) {
    if (n + 1 > a.truncation_degree())
        throw DegreeOutOfRangeError("cohomology: need degree + 1 <= truncation");
    ComplexQ c;
    c.dims = {a.basis(n).size(), a.basis(n + 1).size()};
    c.d = {d_matrix(a, n)};
    if (n >= 1) {
        c.dims.insert(c.dims.begin(), a.basis(n - 1).size());
        c.d.insert(c.d.begin(), d_matrix(a, n - 1));
    }
    unsigned local = n >= 1 ? 1 : 0;
    CohomologySpace out;
    out.alg = &a;
    out.degree = n;
    out.basis = a.basis(n);
    out.data = complex_cohomology(c, local);
    out.dimension = out.data.dim;
    for (const auto& r : out.data.reps)
        out.representatives.push_back(element_from_coords(a, out.basis, r));
    return out;
}

Element solve_d(const FreeCDGA& a, const Element& b) {
    if (b.algebra() != &a) throw MixedAlgebraError("solve_d: wrong algebra");
    if (b.is_zero()) return a.zero();
    auto deg = b.degree();
    if (!deg) throw ValidationError("solve_d: right-hand side is not homogeneous");
    if (*deg < 1 || *deg > a.truncation_degree())
        throw DegreeOutOfRangeError("solve_d: degree out of range");
    unsigned n = *deg;
    std::vector<Monomial> src = a.basis(n - 1);
    std::vector<Monomial> dst = a.basis(n);
    QMatrix m = d_matrix(a, n - 1);
    auto x = solve(m, element_coords(b, dst));
    if (!x) throw NotExactError("solve_d: " + b.to_string() + " is not a coboundary");
    return element_from_coords(a, src, *x);
}

// ---------------------------------------------------------------------------

namespace {

void swap_rows(ZMatrix& m, std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}
void swap_cols(ZMatrix& m, std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
}
// row[a] += q * row[b]
void add_row(ZMatrix& m, std::size_t a, std::size_t b, const Int& q) {
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(a, j) += q * m.at(b, j);
}
void add_col(ZMatrix& m, std::size_t a, std::size_t b, const Int& q) {
    for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, a) += q * m.at(i, b);
}
void negate_row(ZMatrix& m, std::size_t a) {
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(a, j) = -m.at(a, j);
}

}  // namespace

SmithResult smith_normal_form(const ZMatrix& input) {
    ZMatrix a = input;
    const std::size_t r = a.rows(), c = a.cols();
    SmithResult res;
    res.left = ZMatrix(r, r);
    res.right = ZMatrix(c, c);
    for (std::size_t i = 0; i < r; ++i) res.left.at(i, i) = 1;
    for (std::size_t j = 0; j < c; ++j) res.right.at(j, j) = 1;

    std::size_t t = 0;
    while (t < r && t < c) {
        // find a nonzero entry of minimal absolute value in the remaining block
        std::size_t pi = t, pj = t;
        bool found = false;
        Int best = 0;
        for (std::size_t i = t; i < r; ++i)
            for (std::size_t j = t; j < c; ++j) {
                if (a.at(i, j) == 0) continue;
                Int v = abs_int(a.at(i, j));
                if (!found || v < best) {
                    found = true;
                    best = v;
                    pi = i;
                    pj = j;
                }
            }
        if (!found) break;
        if (pi != t) {
            swap_rows(a, pi, t);
            swap_rows(res.left, pi, t);
        }
        if (pj != t) {
            swap_cols(a, pj, t);
            swap_cols(res.right, pj, t);
        }
        bool dirty = false;
        for (std::size_t i = t + 1; i < r; ++i) {
            if (a.at(i, t) == 0) continue;
            Int q = a.at(i, t) / a.at(t, t);
            add_row(a, i, t, -q);
            add_row(res.left, i, t, -q);
            if (a.at(i, t) != 0) dirty = true;
        }
        for (std::size_t j = t + 1; j < c; ++j) {
            if (a.at(t, j) == 0) continue;
            Int q = a.at(t, j) / a.at(t, t);
            add_col(a, j, t, -q);
            add_col(res.right, j, t, -q);
            if (a.at(t, j) != 0) dirty = true;
        }
        if (dirty) continue;  // smaller remainders appeared; redo with new pivot
        // pivot must divide the rest of the block
        bool divides = true;
        for (std::size_t i = t + 1; i < r && divides; ++i)
            for (std::size_t j = t + 1; j < c && divides; ++j)
                if (a.at(i, j) % a.at(t, t) != 0) {
                    add_row(a, t, i, Int(1));
                    add_row(res.left, t, i, Int(1));
                    divides = false;
                }
        if (!divides) continue;
        if (a.at(t, t) < 0) {
            negate_row(a, t);
            negate_row(res.left, t);
        }
        ++t;
    }
    for (std::size_t k = 0; k < std::min(r, c); ++k) {
        res.diagonal.push_back(k < t ? a.at(k, k) : Int(0));
        if (k < t && a.at(k, k) != 0) ++res.rank;
    }
    return res;
}

Int IntegerLatticeQuotient::order() const {
    Int o = 1;
    for (const auto& d : invariant_factors) o *= d;
    return o;
}

IntegerLatticeQuotient integer_normal_form(const ZMatrix& m) {
    IntegerLatticeQuotient q;
    q.ambient_rank = m.rows();
    SmithResult s = smith_normal_form(m);
    for (const auto& d : s.diagonal)
        if (d != 0) q.invariant_factors.push_back(d);
    q.rank_deficit = m.rows() - s.rank;
    return q;
}

// ---------------------------------------------------------------------------

namespace {

// An inequality sum_j c[j] * x_j + c[n] >= 0 over variables x_0..x_{n-1}.
using Ineq = std::vector<Rat>;

Ineq normalize_ineq(Ineq v) {
    // divide by the largest absolute coefficient to get a canonical form
    Rat scale = 0;
    for (const auto& c : v) {
        Rat a = abs_rat(c);
        if (a > scale) scale = a;
    }
    if (scale != 0)
        for (auto& c : v) c /= scale;
    return v;
}

}  // namespace

Rat coset_norm_min(const std::vector<Rat>& v, const std::vector<std::vector<Rat>>& span_basis) {
    const std::size_t dim = v.size();
    const std::size_t k = span_basis.size();
    for (const auto& s : span_basis)
        if (s.size() != dim) throw ValidationError("coset_norm_min: dimension mismatch");
    if (dim == 0) return Rat(0);

    // variables: lambda_0 .. lambda_{k-1}, t; inequality layout: [lambdas..., t, const]
    std::vector<Ineq> sys;
    for (std::size_t i = 0; i < dim; ++i) {
        Ineq up(k + 2), down(k + 2);
        for (std::size_t j = 0; j < k; ++j) {
            up[j] = -span_basis[j][i];
            down[j] = span_basis[j][i];
        }
        up[k] = 1;
        down[k] = 1;
        up[k + 1] = -v[i];
        down[k + 1] = v[i];
        sys.push_back(std::move(up));
        sys.push_back(std::move(down));
    }

    // eliminate the lambda variables
    for (std::size_t var = 0; var < k; ++var) {
        std::vector<Ineq> pos, neg, zero;
        for (auto& q : sys) {
            if (q[var] > 0)
                pos.push_back(std::move(q));
            else if (q[var] < 0)
                neg.push_back(std::move(q));
            else
                zero.push_back(std::move(q));
        }
        std::set<Ineq> dedup;
        for (auto& q : zero) dedup.insert(normalize_ineq(q));
        for (const auto& p : pos)
            for (const auto& n : neg) {
                Ineq comb(k + 2);
                // p * (-n[var]) + n * p[var] cancels the variable
                Rat cp = -n[var], cn = p[var];
                for (std::size_t j = 0; j < k + 2; ++j) comb[j] = cp * p[j] + cn * n[j];
                dedup.insert(normalize_ineq(comb));
            }
        sys.assign(dedup.begin(), dedup.end());
    }

    // remaining constraints: a * t + b >= 0
    Rat best = 0;  // the norm is nonnegative
    for (const auto& q : sys) {
        const Rat& a = q[k];
        const Rat& b = q[k + 1];
        if (a > 0) {
            Rat bound = -b / a;
            if (bound > best) best = bound;
        } else if (a == 0 && b < 0) {
            throw ValidationError("coset_norm_min: infeasible system (internal)");
        }
    }
    return best;
}

}  // namespace dgahom
