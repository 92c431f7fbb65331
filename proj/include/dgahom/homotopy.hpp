#pragma once

#include "dgahom/cdga.hpp"
#include "dgahom/map.hpp"

#include <map>
#include <string>
#include <vector>

namespace dgahom {

/// Cap on t-powers carried by interval elements (keeps representations
/// finite; homotopies built over the bundled models stay far below it).
unsigned t_power_cap();
void set_t_power_cap(unsigned cap);

/// Element of B (x) /\(t, dt): polynomial part sum_i b_i (x) t^i plus
/// dt part sum_j c_j (x) t^j dt.  dt^2 = 0 is structural.
class IntervalElement {
public:
    IntervalElement() = default;
    explicit IntervalElement(const FreeCDGA* alg) : alg_(alg) {}

    static IntervalElement from_element(const Element& b, unsigned t_power = 0);
    static IntervalElement dt_term(const Element& c, unsigned t_power = 0);

    const FreeCDGA* algebra() const { return alg_; }
    bool is_zero() const { return poly_.empty() && dt_.empty(); }
    const std::map<unsigned, Element>& poly_part() const { return poly_; }
    const std::map<unsigned, Element>& dt_part() const { return dt_; }

    Element poly_coefficient(unsigned i) const;
    Element dt_coefficient(unsigned j) const;

    /// Substitute t = 0 or t = 1, dt = 0.
    Element restrict(int endpoint) const;

    bool operator==(const IntervalElement& o) const {
        return alg_ == o.alg_ && poly_ == o.poly_ && dt_ == o.dt_;
    }

    std::string to_string() const;

private:
    const FreeCDGA* alg_ = nullptr;
    std::map<unsigned, Element> poly_;
    std::map<unsigned, Element> dt_;

    void insert_poly(unsigned i, const Element& e);
    void insert_dt(unsigned j, const Element& e);

    friend IntervalElement operator+(const IntervalElement&, const IntervalElement&);
    friend IntervalElement operator-(const IntervalElement&, const IntervalElement&);
    friend IntervalElement operator*(const Rat&, const IntervalElement&);
    friend IntervalElement operator*(const IntervalElement&, const IntervalElement&);
    friend IntervalElement interval_differential(const IntervalElement&);
    friend IntervalElement int_0_t(const IntervalElement&);
    friend Element int_0_1(const IntervalElement&);
};

IntervalElement operator+(const IntervalElement& x, const IntervalElement& y);
IntervalElement operator-(const IntervalElement& x, const IntervalElement& y);
IntervalElement operator*(const Rat& c, const IntervalElement& x);
IntervalElement operator*(const IntervalElement& x, const IntervalElement& y);

/// d on B (x) /\(t, dt).
IntervalElement interval_differential(const IntervalElement& u);

/// Degree -1 operators of formal fiberwise integration.
IntervalElement int_0_t(const IntervalElement& u);
Element int_0_1(const IntervalElement& u);

/// Homomorphism A -> B (x) /\(t, dt) given by generator images; restricting
/// at t = 0 and t = 1 yields the two ends of the homotopy.
class Homotopy {
public:
    Homotopy() = default;
    Homotopy(const FreeCDGA* source, const FreeCDGA* target,
             std::vector<IntervalElement> images);

    static Homotopy constant(const DGAMap& f);

    const FreeCDGA* source() const { return source_; }
    const FreeCDGA* target() const { return target_; }
    const std::vector<IntervalElement>& images() const { return images_; }
    const IntervalElement& image(unsigned gen_index) const { return images_[gen_index]; }

    IntervalElement apply(const Element& x) const;
    DGAMap restrict(int endpoint) const;
    bool valid(std::string* why = nullptr) const;

    bool operator==(const Homotopy& o) const {
        return source_ == o.source_ && target_ == o.target_ && images_ == o.images_;
    }

private:
    const FreeCDGA* source_ = nullptr;
    const FreeCDGA* target_ = nullptr;
    std::vector<IntervalElement> images_;
};

bool is_homotopy(const Homotopy& h, const DGAMap& f, const DGAMap& g,
                 std::string* why = nullptr);

/// Element phi + eta (x) e of [A, B (x) F<e^(k)>]_phi with e^2 = 0: a degree
/// -k derivation-like perturbation along phi.  eta extends to products by
/// eta(uv) = (-1)^{k deg v} eta(u) phi(v) + phi(u) eta(v).
class ClassElement {
public:
    ClassElement(DGAMap base, unsigned level, std::vector<Element> eta);

    const DGAMap& base() const { return base_; }
    unsigned level() const { return level_; }
    const std::vector<Element>& eta() const { return eta_; }

    /// Twisted-Leibniz extension of eta to an arbitrary element of the source.
    Element eta_extend(const Element& x) const;

    /// Chain condition d(eta(g)) = eta(dg) on every generator.
    bool valid(std::string* why = nullptr) const;

private:
    DGAMap base_;
    unsigned level_ = 0;
    std::vector<Element> eta_;
};

ClassElement boxplus(const ClassElement& f, const ClassElement& g);

/// Raw twisted-Leibniz expansion of a degree -level perturbation along `base`,
/// for arbitrary (not necessarily chain-compatible) eta values.  This is what
/// ClassElement::eta_extend evaluates; it is linear in `eta`.
Element eta_expand(const DGAMap& base, unsigned level, const std::vector<Element>& eta,
                   const Element& x);

/// iota_k sends phi + eta (x) e to the cochain v -> eta(dv) on extension
/// generators whose differentials `dv_list` lie in the base algebra.
std::vector<Element> iota_k(const ClassElement& f, const std::vector<Element>& dv_list);

}  // namespace dgahom
