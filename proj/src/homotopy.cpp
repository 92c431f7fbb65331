#include "dgahom/homotopy.hpp"

#include <atomic>
#include <sstream>

namespace dgahom {

namespace {
std::atomic<unsigned> g_t_cap{8};

// multiply each homogeneous term by (-1)^{deg term}
Element degree_twist(const Element& e) {
    if (e.is_zero()) return e;
    const FreeCDGA& alg = *e.algebra();
    std::vector<Element::Term> terms = e.terms();
    for (auto& [m, c] : terms)
        if (alg.degree(m) % 2 == 1) c = -c;
    return alg.make(std::move(terms));
}
}  // namespace

unsigned t_power_cap() { return g_t_cap.load(); }
void set_t_power_cap(unsigned cap) { g_t_cap.store(cap); }

IntervalElement IntervalElement::from_element(const Element& b, unsigned t_power) {
    IntervalElement u(b.algebra());
    u.insert_poly(t_power, b);
    return u;
}

IntervalElement IntervalElement::dt_term(const Element& c, unsigned t_power) {
    IntervalElement u(c.algebra());
    u.insert_dt(t_power, c);
    return u;
}

void IntervalElement::insert_poly(unsigned i, const Element& e) {
    if (e.is_zero()) return;
    if (i > t_power_cap()) throw TPowerCapError("interval element exceeds the t-power cap");
    if (!alg_) alg_ = e.algebra();
    auto it = poly_.find(i);
    if (it == poly_.end())
        poly_.emplace(i, e);
    else {
        it->second = it->second + e;
        if (it->second.is_zero()) poly_.erase(it);
    }
}

void IntervalElement::insert_dt(unsigned j, const Element& e) {
    if (e.is_zero()) return;
    if (j > t_power_cap()) throw TPowerCapError("interval element exceeds the t-power cap");
    if (!alg_) alg_ = e.algebra();
    auto it = dt_.find(j);
    if (it == dt_.end())
        dt_.emplace(j, e);
    else {
        it->second = it->second + e;
        if (it->second.is_zero()) dt_.erase(it);
    }
}

Element IntervalElement::poly_coefficient(unsigned i) const {
    auto it = poly_.find(i);
    if (it != poly_.end()) return it->second;
    return alg_ ? alg_->zero() : Element();
}

Element IntervalElement::dt_coefficient(unsigned j) const {
    auto it = dt_.find(j);
    if (it != dt_.end()) return it->second;
    return alg_ ? alg_->zero() : Element();
}

Element IntervalElement::restrict(int endpoint) const {
    Element out = alg_ ? alg_->zero() : Element();
    for (const auto& [i, b] : poly_) {
        if (endpoint == 0 && i != 0) continue;
        out = out + b;
    }
    return out;
}

std::string IntervalElement::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    auto sep = [&]() {
        if (!first) out << " + ";
        first = false;
    };
    for (const auto& [i, b] : poly_) {
        sep();
        out << "(" << b.to_string() << ")";
        if (i > 0) out << "*t" << (i > 1 ? "^" + std::to_string(i) : "");
    }
    for (const auto& [j, c] : dt_) {
        sep();
        out << "(" << c.to_string() << ")*";
        if (j > 0) out << "t" << (j > 1 ? "^" + std::to_string(j) : "") << "*";
        out << "dt";
    }
    return out.str();
}

IntervalElement operator+(const IntervalElement& x, const IntervalElement& y) {
    IntervalElement out(x.alg_ ? x.alg_ : y.alg_);
    for (const auto& [i, b] : x.poly_) out.insert_poly(i, b);
    for (const auto& [j, c] : x.dt_) out.insert_dt(j, c);
    for (const auto& [i, b] : y.poly_) out.insert_poly(i, b);
    for (const auto& [j, c] : y.dt_) out.insert_dt(j, c);
    return out;
}

IntervalElement operator-(const IntervalElement& x, const IntervalElement& y) {
    return x + Rat(-1) * y;
}

IntervalElement operator*(const Rat& c, const IntervalElement& x) {
    IntervalElement out(x.alg_);
    for (const auto& [i, b] : x.poly_) out.insert_poly(i, c * b);
    for (const auto& [j, e] : x.dt_) out.insert_dt(j, c * e);
    return out;
}

IntervalElement operator*(const IntervalElement& x, const IntervalElement& y) {
    IntervalElement out(x.alg_ ? x.alg_ : y.alg_);
    for (const auto& [i, b] : x.poly_)
        for (const auto& [i2, b2] : y.poly_) out.insert_poly(i + i2, b * b2);
    for (const auto& [i, b] : x.poly_)
        for (const auto& [j, c] : y.dt_) out.insert_dt(i + j, b * c);
    // dt passes the polynomial coefficient: dt * p = (-1)^{deg p} p * dt
    for (const auto& [j, c] : x.dt_)
        for (const auto& [i, b] : y.poly_) out.insert_dt(i + j, c * degree_twist(b));
    // dt * dt = 0
    return out;
}

IntervalElement interval_differential(const IntervalElement& u) {
    IntervalElement out(u.alg_);
    const FreeCDGA* alg = u.alg_;
    if (!alg) return out;
    for (const auto& [i, b] : u.poly_) {
        out.insert_poly(i, alg->differential(b));
        if (i > 0) out.insert_dt(i - 1, Rat(static_cast<long>(i)) * degree_twist(b));
    }
    for (const auto& [j, c] : u.dt_) out.insert_dt(j, alg->differential(c));
    return out;
}

IntervalElement int_0_t(const IntervalElement& u) {
    IntervalElement out(u.alg_);
    for (const auto& [j, c] : u.dt_)
        out.insert_poly(j + 1, Rat(1, static_cast<long>(j) + 1) * degree_twist(c));
    return out;
}

Element int_0_1(const IntervalElement& u) {
    Element out = u.alg_ ? u.alg_->zero() : Element();
    for (const auto& [j, c] : u.dt_)
        out = out + Rat(1, static_cast<long>(j) + 1) * degree_twist(c);
    return out;
}

// ---------------------------------------------------------------------------

Homotopy::Homotopy(const FreeCDGA* source, const FreeCDGA* target,
                   std::vector<IntervalElement> images)
    : source_(source), target_(target), images_(std::move(images)) {
    if (!source_ || !target_) throw ValidationError("Homotopy: null algebra");
    if (images_.size() != source_->generator_count())
        throw ValidationError("Homotopy: one image per generator required");
}

Homotopy Homotopy::constant(const DGAMap& f) {
    std::vector<IntervalElement> images;
    for (const auto& im : f.images()) images.push_back(IntervalElement::from_element(im));
    for (auto& im : images)
        if (!im.algebra()) im = IntervalElement(f.target());
    return Homotopy(f.source(), f.target(), std::move(images));
}

IntervalElement Homotopy::apply(const Element& x) const {
    if (x.algebra() != source_) {
        if (x.is_zero()) return IntervalElement(target_);
        throw MixedAlgebraError("Homotopy::apply: element from wrong algebra");
    }
    IntervalElement out(target_);
    for (const auto& [m, c] : x.terms()) {
        IntervalElement piece = IntervalElement::from_element(target_->unit(c));
        for (const auto& [g, e] : m.factors())
            for (unsigned k = 0; k < e; ++k) piece = piece * images_[g];
        out = out + piece;
    }
    return out;
}

DGAMap Homotopy::restrict(int endpoint) const {
    std::vector<Element> images;
    for (const auto& im : images_) {
        Element e = im.restrict(endpoint);
        images.push_back(e.algebra() ? e : target_->zero());
    }
    return DGAMap(source_, target_, std::move(images));
}

bool Homotopy::valid(std::string* why) const {
    for (unsigned g = 0; g < source_->generator_count(); ++g) {
        const Generator& gen = source_->generators()[g];
        // degree check on both components
        for (const auto& [i, b] : images_[g].poly_part()) {
            auto deg = b.degree();
            if (!deg || *deg != gen.degree) {
                if (why) *why = "polynomial part of H(" + gen.name + ") has wrong degree";
                return false;
            }
        }
        for (const auto& [j, c] : images_[g].dt_part()) {
            auto deg = c.degree();
            if (!deg || *deg + 1 != gen.degree) {
                if (why) *why = "dt part of H(" + gen.name + ") has wrong degree";
                return false;
            }
        }
        IntervalElement lhs = interval_differential(images_[g]);
        IntervalElement rhs = apply(source_->differential_of(g));
        if (!(lhs == rhs)) {
            if (why)
                *why = "chain condition fails on '" + gen.name + "': d(H) = " +
                       lhs.to_string() + ", H(d) = " + rhs.to_string();
            return false;
        }
    }
    return true;
}

bool is_homotopy(const Homotopy& h, const DGAMap& f, const DGAMap& g, std::string* why) {
    if (h.source() != f.source() || h.source() != g.source() || h.target() != f.target() ||
        h.target() != g.target()) {
        if (why) *why = "algebra mismatch";
        return false;
    }
    if (!h.valid(why)) return false;
    if (!(h.restrict(0) == f)) {
        if (why) *why = "restriction at t=0 differs from f";
        return false;
    }
    if (!(h.restrict(1) == g)) {
        if (why) *why = "restriction at t=1 differs from g";
        return false;
    }
    return true;
}

// ---------------------------------------------------------------------------

ClassElement::ClassElement(DGAMap base, unsigned level, std::vector<Element> eta)
    : base_(std::move(base)), level_(level), eta_(std::move(eta)) {
    if (level_ < 1) throw ValidationError("ClassElement: level must be >= 1");
    if (eta_.size() != base_.source()->generator_count())
        throw ValidationError("ClassElement: one eta value per generator required");
    for (unsigned g = 0; g < eta_.size(); ++g) {
        if (eta_[g].is_zero()) continue;
        if (eta_[g].algebra() != base_.target())
            throw MixedAlgebraError("ClassElement: eta lands in the wrong algebra");
        auto deg = eta_[g].degree();
        unsigned gdeg = base_.source()->generators()[g].degree;
        if (!deg || *deg + level_ != gdeg)
            throw ValidationError("ClassElement: eta(" + base_.source()->generators()[g].name +
                                  ") must drop degree by the level");
    }
}

Element eta_expand(const DGAMap& base, unsigned level, const std::vector<Element>& eta,
                   const Element& x) {
    const FreeCDGA& src = *base.source();
    const FreeCDGA& tgt = *base.target();
    if (x.algebra() != &src) {
        if (x.is_zero()) return tgt.zero();
        throw MixedAlgebraError("eta_expand: element from wrong algebra");
    }
    Element out = tgt.zero();
    for (const auto& [m, coef] : x.terms()) {
        // process the flattened word right to left:
        // eta(g S) = phi(g) eta(S) + (-1)^{k deg S} eta(g) phi(S)
        std::vector<unsigned> word;
        for (const auto& [g, e] : m.factors())
            for (unsigned k = 0; k < e; ++k) word.push_back(g);
        Element phi_suffix = tgt.unit();
        Element eta_suffix = tgt.zero();
        unsigned deg_suffix = 0;
        for (auto it = word.rbegin(); it != word.rend(); ++it) {
            unsigned g = *it;
            Element phi_g = base.image(g);
            Element term1 = phi_g * eta_suffix;
            Element term2 = eta[g] * phi_suffix;
            if ((level * deg_suffix) % 2 == 1) term2 = -term2;
            eta_suffix = term1 + term2;
            phi_suffix = phi_g * phi_suffix;
            deg_suffix += src.generators()[g].degree;
        }
        out = out + coef * eta_suffix;
    }
    return out;
}

Element ClassElement::eta_extend(const Element& x) const {
    return eta_expand(base_, level_, eta_, x);
}

bool ClassElement::valid(std::string* why) const {
    if (!base_.valid(why)) return false;
    const FreeCDGA& src = *base_.source();
    const FreeCDGA& tgt = *base_.target();
    for (unsigned g = 0; g < src.generator_count(); ++g) {
        Element lhs = tgt.differential(eta_[g]);
        Element rhs = eta_extend(src.differential_of(g));
        if (!(lhs == rhs)) {
            if (why)
                *why = "d(eta) != eta(d) on generator '" + src.generators()[g].name + "'";
            return false;
        }
    }
    return true;
}

ClassElement boxplus(const ClassElement& f, const ClassElement& g) {
    if (!(f.base() == g.base())) throw BaseMismatchError("boxplus: bases differ");
    if (f.level() != g.level()) throw LevelMismatchError("boxplus: levels differ");
    std::vector<Element> eta;
    for (unsigned i = 0; i < f.eta().size(); ++i) eta.push_back(f.eta()[i] + g.eta()[i]);
    return ClassElement(f.base(), f.level(), std::move(eta));
}

std::vector<Element> iota_k(const ClassElement& f, const std::vector<Element>& dv_list) {
    std::string why;
    if (!f.valid(&why)) throw InvalidEtaError("iota_k: invalid class element: " + why);
    std::vector<Element> out;
    out.reserve(dv_list.size());
    for (const auto& dv : dv_list) out.push_back(f.eta_extend(dv));
    return out;
}

}  // namespace dgahom
