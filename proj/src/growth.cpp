#include "dgahom/growth.hpp"

#include <json.hpp>

#include <chrono>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

namespace dgahom {

TorsionCount torsion_count(long d) {
    const FreeCDGA& x = *builtin_model("s3xs4").algebra;
    const FreeCDGA& s4 = *builtin_model("s4").algebra;
    auto base = prefix_algebra(s4, 1);
    DGAMap phi(base.get(), &x, {Rat(d) * x.gen_element("y")});

    // integral generators of the level-1 classes over phi: eta(a) runs over
    // the degree-3 monomial basis of the domain model
    Element db = transport_prefix(s4.differential_of(1), *base);
    CohomologySpace h7 = cohomology(x, 7);
    std::vector<Monomial> eta_basis = x.basis(3);

    ZMatrix lattice(h7.dimension, eta_basis.size());
    for (std::size_t j = 0; j < eta_basis.size(); ++j) {
        ClassElement f(phi, 1, {x.make({{eta_basis[j], Rat(1)}})});
        std::string why;
        if (!f.valid(&why)) throw InvalidEtaError("torsion_count: " + why);
        auto cls = h7.project(iota_k(f, {db})[0]);
        for (std::size_t i = 0; i < cls.size(); ++i) {
            if (den(cls[i]) != 1)
                throw ValidationError("torsion_count: non-integral lattice coordinate");
            lattice.at(i, j) = num(cls[i]);
        }
    }
    IntegerLatticeQuotient q = integer_normal_form(lattice);
    TorsionCount out;
    if (!q.finite()) {
        out.unbounded = true;
        return out;
    }
    out.count = q.order();
    return out;
}

Int density_count(long alpha1, long alpha2, const Rat& radius) {
    if (alpha1 == 0 && alpha2 == 0)
        throw DegenerateDirectionError("density_count: direction (0, 0)");
    if (radius <= 0) throw ValidationError("density_count: radius must be positive");
    long b = static_cast<long>(floor_rat(radius).convert_to<long long>());
    std::set<long long> values;
    for (long b1 = -b; b1 <= b; ++b1)
        for (long b2 = -b; b2 <= b; ++b2)
            values.insert(static_cast<long long>(alpha2) * b1 -
                          static_cast<long long>(alpha1) * b2);
    return Int(values.size());
}

std::vector<long long> totient_table(long n) {
    std::vector<long long> phi(n + 1);
    std::vector<long> primes;
    std::vector<bool> composite(n + 1, false);
    phi[1] = 1;
    for (long i = 2; i <= n; ++i) {
        if (!composite[i]) {
            primes.push_back(i);
            phi[i] = i - 1;
        }
        for (long p : primes) {
            if (i * p > n) break;
            composite[i * p] = true;
            if (i % p == 0) {
                phi[i * p] = phi[i] * p;
                break;
            }
            phi[i * p] = phi[i] * (p - 1);
        }
    }
    return phi;
}

GrowthReport growth_count(long D, bool with_oracle) {
    if (D < 1) throw ValidationError("growth_count: D must be positive");
    auto start = std::chrono::steady_clock::now();
    GrowthReport r;
    r.parameter = D;
    Int t1 = Int(2) * D * D;
    Int t2 = Int(4) * D * (D - 1);  // 4 * sum_{0<d<D} 2d
    // gcd term: sum over 0<|d1|,|d2|<D of 2 gcd = 8 * sum_{1<=a,b<=D-1} gcd(a,b),
    // and sum gcd = sum_k phi(k) floor(N/k)^2 with N = D-1
    long n = D - 1;
    Int gcd_sum = 0;
    if (n >= 1) {
        auto phi = totient_table(n);
        for (long k = 1; k <= n; ++k) {
            long long q = n / k;
            gcd_sum += Int(phi[k]) * q * q;
        }
    }
    Int t3 = Int(8) * gcd_sum;
    r.terms = {t1, t2, t3};
    r.count = t1 + t2 + t3;
    if (with_oracle) r.oracle = growth_count_direct(D);
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

Int growth_count_direct(long D) {
    Int total = Int(2) * D * D;
    for (long d = 1; d < D; ++d) total += Int(4) * 2 * d;
    for (long d1 = -(D - 1); d1 < D; ++d1) {
        if (d1 == 0) continue;
        for (long d2 = -(D - 1); d2 < D; ++d2) {
            if (d2 == 0) continue;
            total += Int(2) * std::gcd(std::abs(d1), std::abs(d2));
        }
    }
    return total;
}

GcdProportion gcd_proportion_bounds(long N, long k) {
    if (k < 1 || N < k) throw ValidationError("gcd_proportion_bounds: need N >= k >= 1");
    long m = N / k;
    auto phi = totient_table(m);
    // coprime pairs in [1, m]^2: 2 * sum phi - 1
    Int coprime = -1;
    for (long i = 1; i <= m; ++i) coprime += Int(2) * phi[i];
    GcdProportion out;
    out.observed = Rat(coprime, Int(N) * N);
    out.upper = Rat(1, Int(k) * k);
    // rational lower bracket of pi^2/6; using a lower bound of pi^2/6 makes
    // the resulting lower bound for the proportion conservative (larger)
    static const Rat pi2_6_low("1644934066848226/1000000000000000");
    out.lower = (Rat(2) - pi2_6_low) / (Rat(4) * k * k);
    out.ok = out.lower <= out.observed && out.observed <= out.upper;
    return out;
}

Rat ball_count_bound(const BallBoundInput& in) {
    if (in.dims.size() != in.polys.size())
        throw ValidationError("ball_count_bound: one polynomial per stage");
    unsigned total_dim = 0;
    for (unsigned d : in.dims) total_dim += d;
    Rat out = 1;
    for (unsigned i = 0; i < total_dim; ++i) out *= in.radius;
    for (const auto& p : in.polys) {
        if (!p.empty() && p.back() < 0)
            throw ValidationError("ball_count_bound: negative leading coefficient");
        if (p.empty()) continue;  // empty list denotes the constant 1
        Rat val = 0;
        for (auto it = p.rbegin(); it != p.rend(); ++it) val = val * in.radius + *it;
        out *= val;
    }
    return out;
}

Int product_pair_ball_count(const Rat& radius) {
    if (radius < 0) return 0;
    long r = static_cast<long>(floor_rat(radius).convert_to<long long>());
    // d = 0: the Hopf invariant is free, |h| <= R
    Int count = 2 * r + 1;
    // d != 0: classes counted modulo 2d, all with representatives of norm
    // max(|d|, d^2, |h'|) <= R
    for (long d = 1; Rat(d) * d <= radius; ++d) {
        if (Rat(d) > radius) break;
        TorsionCount t = torsion_count(d);
        count += Int(2) * t.count;  // both signs of d
    }
    return count;
}

double NthRoot::approx() const { return std::pow(to_double(radicand), 1.0 / index); }

std::string NthRoot::to_string() const {
    if (index == 1) return dgahom::to_string(radicand);
    return dgahom::to_string(radicand) + "^(1/" + std::to_string(index) + ")";
}

namespace {
Rat pow_rat(const Rat& r, unsigned e) {
    Rat out = 1;
    for (unsigned i = 0; i < e; ++i) out *= r;
    return out;
}
}  // namespace

bool operator<(const NthRoot& a, const NthRoot& b) {
    unsigned l = std::lcm(a.index, b.index);
    return pow_rat(a.radicand, l / a.index) < pow_rat(b.radicand, l / b.index);
}

bool operator==(const NthRoot& a, const NthRoot& b) {
    unsigned l = std::lcm(a.index, b.index);
    return pow_rat(a.radicand, l / a.index) == pow_rat(b.radicand, l / b.index);
}

NthRoot lipschitz_proxy(const DGAMap& phi, const RepresentativeSpace& w) {
    if (phi.target() != w.domain)
        throw ValidationError("lipschitz_proxy: map does not land in the W domain");
    NthRoot best{Rat(0), 1};
    for (unsigned g = 0; g < phi.source()->generator_count(); ++g) {
        const Element& im = phi.image(g);
        if (im.is_zero()) continue;
        auto coords = w.w_coordinates(im);
        if (!coords) throw NotInWError("lipschitz_proxy: image of '" +
                                       phi.source()->generators()[g].name +
                                       "' is outside Q[W]");
        Rat norm = 0;
        for (const auto& c : *coords) norm = std::max(norm, abs_rat(c));
        NthRoot val{norm, phi.source()->generators()[g].degree};
        if (best < val) best = val;
    }
    return best;
}

std::string growth_report_json(const GrowthReport& r) {
    nlohmann::json j;
    j["parameter"] = r.parameter.str();
    j["count"] = r.count.str();
    std::vector<std::string> terms;
    for (const auto& t : r.terms) terms.push_back(t.str());
    j["terms"] = terms;
    if (r.oracle)
        j["oracle"] = r.oracle->str();
    else
        j["oracle"] = nullptr;
    j["fit"] = nullptr;
    j["seconds"] = r.seconds;
    return j.dump();
}

std::string growth_report_csv(const GrowthReport& r) {
    std::ostringstream out;
    out << r.parameter.str() << "," << r.count.str();
    for (const auto& t : r.terms) out << "," << t.str();
    out << "," << (r.oracle ? r.oracle->str() : "");
    return out.str();
}

}  // namespace dgahom
