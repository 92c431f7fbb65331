#pragma once

#include "dgahom/cdga.hpp"
#include "dgahom/homotopy.hpp"
#include "dgahom/models.hpp"

#include <random>

namespace dgahom::testutil {

using Rng = std::mt19937_64;

inline Rat random_rat(Rng& rng, long max_num = 5, long max_den = 3) {
    std::uniform_int_distribution<long> num(-max_num, max_num);
    std::uniform_int_distribution<long> den(1, max_den);
    return Rat(Int(num(rng)), Int(den(rng)));
}

/// Random element of one degree (possibly zero).
inline Element random_homogeneous(const FreeCDGA& a, unsigned degree, Rng& rng) {
    std::vector<Element::Term> terms;
    for (const auto& m : a.basis(degree)) {
        Rat c = random_rat(rng);
        if (c != 0) terms.emplace_back(m, c);
    }
    return a.make(std::move(terms));
}

/// Random element spread over a few degrees.
inline Element random_element(const FreeCDGA& a, Rng& rng) {
    std::uniform_int_distribution<unsigned> deg(0, a.truncation_degree());
    Element e = a.zero();
    for (int i = 0; i < 2; ++i) e = e + random_homogeneous(a, deg(rng), rng);
    return e;
}

/// Random interval element with small t-powers.
inline IntervalElement random_interval(const FreeCDGA& a, Rng& rng) {
    std::uniform_int_distribution<unsigned> deg(0, a.truncation_degree());
    std::uniform_int_distribution<unsigned> pow(0, 3);
    IntervalElement u(&a);
    for (int i = 0; i < 2; ++i) {
        u = u + IntervalElement::from_element(random_homogeneous(a, deg(rng), rng), pow(rng));
        u = u + IntervalElement::dt_term(random_homogeneous(a, deg(rng), rng), pow(rng));
    }
    return u;
}

}  // namespace dgahom::testutil
