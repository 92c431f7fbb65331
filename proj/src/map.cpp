#include "dgahom/map.hpp"

#include <algorithm>

namespace dgahom {

DGAMap::DGAMap(const FreeCDGA* source, const FreeCDGA* target, std::vector<Element> images)
    : source_(source), target_(target), images_(std::move(images)) {
    if (!source_ || !target_) throw ValidationError("DGAMap: null algebra");
    if (images_.size() != source_->generator_count())
        throw ValidationError("DGAMap: one image per generator required");
    for (const auto& im : images_)
        if (!im.is_zero() && im.algebra() != target_)
            throw MixedAlgebraError("DGAMap: image element from wrong algebra");
}

DGAMap DGAMap::identity(const FreeCDGA& a) {
    std::vector<Element> images;
    for (unsigned i = 0; i < a.generator_count(); ++i) images.push_back(a.gen_element(i));
    return DGAMap(&a, &a, std::move(images));
}

DGAMap DGAMap::zero(const FreeCDGA& source, const FreeCDGA& target) {
    std::vector<Element> images(source.generator_count(), target.zero());
    return DGAMap(&source, &target, std::move(images));
}

Element DGAMap::apply(const Element& x) const {
    if (x.algebra() != source_) {
        if (x.is_zero()) return target_->zero();
        throw MixedAlgebraError("DGAMap::apply: element from wrong algebra");
    }
    Element out = target_->zero();
    for (const auto& [m, c] : x.terms()) {
        Element piece = target_->unit(c);
        for (const auto& [g, e] : m.factors())
            for (unsigned k = 0; k < e; ++k) piece = target_->multiply(piece, images_[g]);
        out = target_->add(out, piece);
    }
    return out;
}

bool DGAMap::valid(std::string* why) const {
    for (unsigned g = 0; g < source_->generator_count(); ++g) {
        const Element& im = images_[g];
        if (!im.is_zero()) {
            auto deg = im.degree();
            if (!deg || *deg != source_->generators()[g].degree) {
                if (why)
                    *why = "image of '" + source_->generators()[g].name +
                           "' is not homogeneous of the generator degree";
                return false;
            }
        }
        Element lhs = target_->differential(im);
        Element rhs = apply(source_->differential_of(g));
        if (!(lhs == rhs)) {
            if (why)
                *why = "chain condition fails on '" + source_->generators()[g].name +
                       "': d(image) = " + lhs.to_string() + ", image(d) = " + rhs.to_string();
            return false;
        }
    }
    return true;
}

DGAMap compose(const DGAMap& outer, const DGAMap& inner) {
    if (inner.target() != outer.source())
        throw MixedAlgebraError("compose: middle algebras differ");
    std::vector<Element> images;
    for (unsigned g = 0; g < inner.source()->generator_count(); ++g)
        images.push_back(outer.apply(inner.image(g)));
    return DGAMap(inner.source(), outer.target(), std::move(images));
}

std::shared_ptr<FreeCDGA> prefix_algebra(const FreeCDGA& a, unsigned gen_count,
                                         const std::string& label) {
    if (gen_count > a.generator_count())
        throw ValidationError("prefix_algebra: not enough generators");
    std::vector<Generator> gens(a.generators().begin(), a.generators().begin() + gen_count);
    auto out = FreeCDGA::create(std::move(gens), a.truncation_degree(), false,
                                label.empty() ? a.label() + "#" + std::to_string(gen_count)
                                              : label);
    for (unsigned g = 0; g < gen_count; ++g)
        out->set_differential(g, transport_prefix(a.differential_of(g), *out));
    out->freeze();
    return out;
}

Element transport_prefix(const Element& e, const FreeCDGA& to) {
    if (e.algebra() == &to || e.is_zero()) return e.is_zero() ? to.zero() : e;
    std::vector<Element::Term> terms;
    for (const auto& [m, c] : e.terms()) {
        for (const auto& [g, exp] : m.factors()) {
            if (g >= to.generator_count() ||
                to.generators()[g].name != e.algebra()->generators()[g].name)
                throw MixedAlgebraError("transport_prefix: generator '" +
                                        e.algebra()->generators()[g].name +
                                        "' missing on the receiving side");
        }
        terms.emplace_back(m, c);
    }
    return to.make(std::move(terms));
}

DGAMap prefix_inclusion(const FreeCDGA& prefix, const FreeCDGA& full) {
    std::vector<Element> images;
    for (unsigned g = 0; g < prefix.generator_count(); ++g)
        images.push_back(full.gen_element(prefix.generators()[g].name));
    return DGAMap(&prefix, &full, std::move(images));
}

DGAMap restrict_to_prefix(const DGAMap& f, const FreeCDGA& prefix) {
    std::vector<Element> images(f.images().begin(),
                                f.images().begin() + prefix.generator_count());
    return DGAMap(&prefix, f.target(), std::move(images));
}

DGAMap weight_scaling(const FreeCDGA& a, const Rat& t) {
    if (t == 0) throw ValidationError("weight_scaling: t must be nonzero");
    if (!a.has_weights()) throw MissingWeightsError("weight_scaling: generators lack weights");
    for (unsigned g = 0; g < a.generator_count(); ++g) {
        const Element& d = a.differential_of(g);
        Int w = Int(*a.generators()[g].weight);
        for (const auto& [m, c] : d.terms()) {
            auto mw = a.weight(m);
            if (*mw != w)
                throw WeightInhomogeneousDifferentialError(
                    "d(" + a.generators()[g].name + ") has a term of weight " + mw->str() +
                    ", generator weight is " + w.str());
        }
    }
    std::vector<Element> images;
    for (unsigned g = 0; g < a.generator_count(); ++g) {
        Rat tw = 1;
        for (unsigned k = 0; k < *a.generators()[g].weight; ++k) tw *= t;
        images.push_back(a.gen_element(g, tw));
    }
    return DGAMap(&a, &a, std::move(images));
}

// ---------------------------------------------------------------------------

ConeElement cone_differential(const DGAMap& phi, const ConeElement& x) {
    const FreeCDGA& a = *phi.source();
    const FreeCDGA& b = *phi.target();
    ConeElement out;
    out.top = a.differential(x.top);
    out.bottom = phi.apply(x.top) - b.differential(x.bottom);
    return out;
}

bool cone_closed(const DGAMap& phi, const ConeElement& x) {
    ConeElement d = cone_differential(phi, x);
    return d.top.is_zero() && d.bottom.is_zero();
}

namespace {

std::vector<Monomial> basis_or_empty(const FreeCDGA& alg, int n) {
    if (n < 0 || static_cast<unsigned>(n) > alg.truncation_degree()) return {};
    return alg.basis(static_cast<unsigned>(n));
}

// cone coordinates in degree k: [basis_a(k) | basis_b(k-1)]
std::vector<Rat> cone_coords(const ConeElement& x, const std::vector<Monomial>& ba,
                             const std::vector<Monomial>& bb) {
    std::vector<Rat> v = element_coords(x.top, ba);
    std::vector<Rat> w = element_coords(x.bottom, bb);
    v.insert(v.end(), w.begin(), w.end());
    return v;
}

QMatrix cone_d_matrix(const DGAMap& phi, int k, const std::vector<Monomial>& ba_k,
                      const std::vector<Monomial>& bb_k, const std::vector<Monomial>& ba_k1,
                      const std::vector<Monomial>& bb_k1) {
    const FreeCDGA& a = *phi.source();
    const FreeCDGA& b = *phi.target();
    (void)k;
    QMatrix m(ba_k1.size() + bb_k1.size(), ba_k.size() + bb_k.size());
    auto put = [&](std::size_t col, const Element& top, const Element& bottom) {
        for (const auto& [mono, c] : top.terms()) {
            auto it = std::lower_bound(ba_k1.begin(), ba_k1.end(), mono);
            if (it != ba_k1.end() && *it == mono)
                m.at(static_cast<std::size_t>(it - ba_k1.begin()), col) = c;
        }
        for (const auto& [mono, c] : bottom.terms()) {
            auto it = std::lower_bound(bb_k1.begin(), bb_k1.end(), mono);
            if (it != bb_k1.end() && *it == mono)
                m.at(ba_k1.size() + static_cast<std::size_t>(it - bb_k1.begin()), col) = c;
        }
    };
    for (std::size_t j = 0; j < ba_k.size(); ++j) {
        Element e = a.make({{ba_k[j], Rat(1)}});
        put(j, a.differential(e), phi.apply(e));
    }
    for (std::size_t j = 0; j < bb_k.size(); ++j) {
        Element e = b.make({{bb_k[j], Rat(1)}});
        put(ba_k.size() + j, b.zero(), -b.differential(e));
    }
    return m;
}

}  // namespace

std::vector<Rat> ConeCohomology::project(const ConeElement& closed) const {
    if (!cone_closed(phi, closed))
        throw ValidationError("ConeCohomology::project: pair is not a relative cocycle");
    return data.project(cone_coords(closed, basis_a, basis_b));
}

ConeCohomology relative_cohomology(const DGAMap& phi, unsigned n) {
    const FreeCDGA& a = *phi.source();
    const FreeCDGA& b = *phi.target();
    // degrees above the truncation are zero in the truncated complex, so the
    // top recorded degree is allowed (everything there is closed)
    if (n > a.truncation_degree() && (n == 0 || n - 1 > b.truncation_degree()))
        throw DegreeOutOfRangeError("relative_cohomology: degree out of range");

    // local complex in degrees n-1, n, n+1
    std::vector<int> degs = {static_cast<int>(n) - 1, static_cast<int>(n),
                             static_cast<int>(n) + 1};
    std::vector<std::vector<Monomial>> ba, bb;
    for (int k : degs) {
        ba.push_back(basis_or_empty(a, k));
        bb.push_back(basis_or_empty(b, k - 1));
    }
    ComplexQ c;
    for (std::size_t i = 0; i < degs.size(); ++i) c.dims.push_back(ba[i].size() + bb[i].size());
    for (std::size_t i = 0; i + 1 < degs.size(); ++i)
        c.d.push_back(cone_d_matrix(phi, degs[i], ba[i], bb[i], ba[i + 1], bb[i + 1]));

    ConeCohomology out;
    out.phi = phi;
    out.a = &a;
    out.b = &b;
    out.degree = n;
    out.basis_a = ba[1];
    out.basis_b = bb[1];
    out.data = complex_cohomology(c, 1);
    out.dimension = out.data.dim;
    for (const auto& r : out.data.reps) {
        std::vector<Rat> top(r.begin(), r.begin() + static_cast<long>(ba[1].size()));
        std::vector<Rat> bot(r.begin() + static_cast<long>(ba[1].size()), r.end());
        out.representatives.push_back({element_from_coords(a, ba[1], top),
                                       element_from_coords(b, bb[1], bot)});
    }
    return out;
}

ConeElement cone_solve(const DGAMap& phi, const ConeElement& rhs, unsigned rhs_degree) {
    const FreeCDGA& a = *phi.source();
    const FreeCDGA& b = *phi.target();
    if (rhs_degree < 1) throw DegreeOutOfRangeError("cone_solve: degree must be >= 1");
    int n = static_cast<int>(rhs_degree) - 1;
    auto ba_n = basis_or_empty(a, n);
    auto bb_n = basis_or_empty(b, n - 1);
    auto ba_n1 = basis_or_empty(a, n + 1);
    auto bb_n1 = basis_or_empty(b, n);
    QMatrix m = cone_d_matrix(phi, n, ba_n, bb_n, ba_n1, bb_n1);
    auto x = solve(m, cone_coords(rhs, ba_n1, bb_n1));
    if (!x) throw NotExactError("cone_solve: right-hand side is not a relative coboundary");
    std::vector<Rat> top(x->begin(), x->begin() + static_cast<long>(ba_n.size()));
    std::vector<Rat> bot(x->begin() + static_cast<long>(ba_n.size()), x->end());
    return {element_from_coords(a, ba_n, top), element_from_coords(b, bb_n, bot)};
}

}  // namespace dgahom
