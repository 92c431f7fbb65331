#pragma once

#include "dgahom/obstruction.hpp"
#include "dgahom/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dgahom {

/// Size of the fiber of [S^3 x S^4, S^4] over the rational class of degree d,
/// computed through the integral iota_1 image lattice and its normal form.
struct TorsionCount {
    bool unbounded = false;
    Int count = 0;
};
TorsionCount torsion_count(long d);

/// Number of distinct values of m = a2 b1 - a1 b2 over integer points of the
/// closed l-infinity ball of the given radius.
Int density_count(long alpha1, long alpha2, const Rat& radius);

struct GrowthReport {
    Int parameter;
    Int count = 0;
    std::vector<Int> terms;  // 2D^2, 4 sum 2d, gcd sum
    std::optional<Int> oracle;
    double seconds = 0.0;
};

/// 2D^2 + 4 sum_{0<d<D} 2d + sum_{0<|d1|,|d2|<D} 2 gcd(d1, d2), the gcd sum
/// evaluated through the totient identity.
GrowthReport growth_count(long D, bool with_oracle = false);

/// Direct double-loop evaluation (the oracle for small D).
Int growth_count_direct(long D);

/// Euler totients 1..n by linear sieve.
std::vector<long long> totient_table(long n);

struct GcdProportion {
    Rat observed;
    Rat upper;
    Rat lower;
    bool ok = false;
};

/// Proportion of pairs 0 < a, b <= N with gcd(a, b) = k against the bounds
/// 1/k^2 above and (2 - pi^2/6)/(4k^2) below (rational bracketing of pi^2/6
/// keeps the comparison conservative).
GcdProportion gcd_proportion_bounds(long N, long k);

struct BallBoundInput {
    std::vector<unsigned> dims;           // dim H^{n_k}(X; A_k (x) Q) per stage
    std::vector<std::vector<Rat>> polys;  // P'_k coefficients, constant first
    Rat radius;
};

/// R^{sum dims} * prod_k P'_k(R).
Rat ball_count_bound(const BallBoundInput& in);

/// Exact class count of [S^3 x S^4, S^4] with a representative of W-norm at
/// most the radius (enumeration with the h ~ h + 2d identification).
Int product_pair_ball_count(const Rat& radius);

/// Exact n-th root value r^(1/n) with exact comparisons.
struct NthRoot {
    Rat radicand;
    unsigned index = 1;

    double approx() const;
    std::string to_string() const;
};
bool operator<(const NthRoot& a, const NthRoot& b);
bool operator==(const NthRoot& a, const NthRoot& b);

/// max over generators v of |coords of phi(v) in W|_inf^(1/deg v): the formal
/// scale L at which degree-n data grows like L^n.
NthRoot lipschitz_proxy(const DGAMap& phi, const RepresentativeSpace& w);

std::string growth_report_json(const GrowthReport& r);
std::string growth_report_csv(const GrowthReport& r);

}  // namespace dgahom
