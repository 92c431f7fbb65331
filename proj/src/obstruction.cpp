#include "dgahom/obstruction.hpp"

#include <algorithm>

namespace dgahom {

ElementaryExtension ElementaryExtension::adjoin(std::shared_ptr<const FreeCDGA> base,
                                                const std::vector<std::string>& names,
                                                unsigned degree,
                                                const std::vector<Element>& differentials) {
    if (names.size() != differentials.size())
        throw ValidationError("adjoin: one differential per new generator required");
    std::vector<Generator> gens = base->generators();
    for (const auto& n : names) gens.push_back({n, degree, {}});
    auto extended = FreeCDGA::create(std::move(gens), base->truncation_degree(), false,
                                     base->label() + "+V" + std::to_string(degree));
    for (unsigned g = 0; g < base->generator_count(); ++g)
        extended->set_differential(g, transport_prefix(base->differential_of(g), *extended));
    for (std::size_t i = 0; i < names.size(); ++i) {
        const Element& d = differentials[i];
        if (!d.is_zero()) {
            if (d.algebra() != base.get())
                throw MixedAlgebraError("adjoin: differential not in the base algebra");
            if (!base->differential(d).is_zero())
                throw ValidationError("adjoin: differential of '" + names[i] + "' is not closed");
            auto deg = d.degree();
            if (!deg || *deg != degree + 1)
                throw ValidationError("adjoin: differential of '" + names[i] +
                                      "' must be homogeneous of degree " +
                                      std::to_string(degree + 1));
        }
        extended->set_differential(base->generator_count() + static_cast<unsigned>(i),
                                   transport_prefix(d, *extended));
    }
    extended->freeze();
    ElementaryExtension out;
    out.base = std::move(base);
    out.extended = std::move(extended);
    out.degree = degree;
    for (std::size_t i = 0; i < names.size(); ++i)
        out.new_gen_indices.push_back(out.base->generator_count() + static_cast<unsigned>(i));
    return out;
}

ElementaryExtension ElementaryExtension::stage(const FreeCDGA& y,
                                               const std::vector<ExtensionStage>& order,
                                               std::size_t k) {
    if (k >= order.size()) throw ValidationError("stage index out of range");
    unsigned start = order[k].gen_indices.front();
    auto base = prefix_algebra(y, start);
    std::vector<std::string> names;
    std::vector<Element> diffs;
    for (unsigned g : order[k].gen_indices) {
        names.push_back(y.generators()[g].name);
        diffs.push_back(transport_prefix(y.differential_of(g), *base));
    }
    return adjoin(std::move(base), names, order[k].degree, diffs);
}

Element ElementaryExtension::diff_of_new(std::size_t i) const {
    return transport_prefix(extended->differential_of(new_gen_indices[i]), *base);
}

bool ObstructionProblem::valid(std::string* why) const {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (f.source() != ext.base.get()) return fail("f must start on the extension base");
    if (g.source() != ext.extended.get()) return fail("g must start on the extended algebra");
    if (h.source() != f.target()) return fail("h must start where f lands");
    if (h.target() != g.target()) return fail("h and g must share the target");
    std::string sub;
    if (!f.valid(&sub)) return fail("f invalid: " + sub);
    if (!g.valid(&sub)) return fail("g invalid: " + sub);
    if (!h.valid(&sub)) return fail("h invalid: " + sub);
    DGAMap g_base = restrict_to_prefix(g, *ext.base);
    if (!is_homotopy(H, g_base, compose(h, f), &sub))
        return fail("H is not a homotopy from g|base to h.f: " + sub);
    return true;
}

bool ObstructionClass::zero() const {
    for (const auto& v : class_coords)
        for (const auto& c : v)
            if (c != 0) return false;
    return true;
}

ObstructionClass obstruction(const ObstructionProblem& p) {
    std::string why;
    if (!p.valid(&why)) throw InvalidProblemError("obstruction: " + why);
    unsigned n = p.ext.degree;
    ObstructionClass out;
    out.degree = n + 1;
    out.relative = relative_cohomology(p.h, n + 1);
    for (std::size_t i = 0; i < p.ext.new_gen_indices.size(); ++i) {
        Element dv = p.ext.diff_of_new(i);
        ConeElement o;
        o.top = p.f.apply(dv);
        o.bottom = p.g.apply(p.ext.extended->gen_element(p.ext.new_gen_indices[i])) +
                   int_0_1(p.H.apply(dv));
        if (!cone_closed(p.h, o))
            throw InvalidProblemError("obstruction: cocycle condition failed (internal)");
        out.class_coords.push_back(out.relative.project(o));
        out.cochain.push_back(std::move(o));
    }
    return out;
}

Primitive solve_primitive(const ObstructionProblem& p, const ObstructionClass& o) {
    if (!o.zero())
        throw NonzeroObstructionError("solve_primitive: the obstruction class is nonzero");
    Primitive prim;
    for (const auto& oc : o.cochain) prim.bc.push_back(cone_solve(p.h, oc, o.degree));
    return prim;
}

ExtensionResult extend_with_primitive(const ObstructionProblem& p, const Primitive& prim) {
    const FreeCDGA& bx = *p.f.target();
    (void)bx;
    std::vector<Element> images = p.f.images();
    for (const auto& bc : prim.bc) images.push_back(bc.top);
    DGAMap f_tilde(p.ext.extended.get(), p.f.target(), std::move(images));

    std::vector<IntervalElement> h_images = p.H.images();
    for (std::size_t i = 0; i < prim.bc.size(); ++i) {
        Element dv = p.ext.diff_of_new(i);
        Element gv = p.g.apply(p.ext.extended->gen_element(p.ext.new_gen_indices[i]));
        IntervalElement img = IntervalElement::from_element(gv) + int_0_t(p.H.apply(dv)) +
                              interval_differential(IntervalElement::from_element(prim.bc[i].bottom, 1));
        h_images.push_back(std::move(img));
    }
    Homotopy h_tilde(p.ext.extended.get(), p.g.target(), std::move(h_images));

    std::string why;
    if (!f_tilde.valid(&why))
        throw ValidationError("extend_with_primitive: extension fails the chain check: " + why);
    if (!is_homotopy(h_tilde, p.g, compose(p.h, f_tilde), &why))
        throw ValidationError("extend_with_primitive: homotopy verification failed: " + why);
    return {std::move(f_tilde), std::move(h_tilde)};
}

// ---------------------------------------------------------------------------

std::vector<Element> RepresentativeSpace::elements() const {
    std::vector<Element> out;
    for (const auto& st : stages) {
        out.insert(out.end(), st.s_part.begin(), st.s_part.end());
        out.insert(out.end(), st.h_part.begin(), st.h_part.end());
    }
    return out;
}

const std::vector<std::vector<Rat>>& RepresentativeSpace::subalgebra_basis(unsigned degree) const {
    if (qw_basis_cache_.size() <= degree) qw_basis_cache_.resize(degree + 1);
    if (qw_basis_cache_[degree]) return *qw_basis_cache_[degree];

    const FreeCDGA& x = *domain;
    std::vector<Element> gens = elements();
    std::vector<Monomial> mono_basis = x.basis(degree);

    std::vector<std::vector<Rat>> cols;
    // degree 0: the unit
    if (degree == 0) {
        cols.push_back(element_coords(x.unit(), mono_basis));
    } else {
        // enumerate products of W elements with total degree `degree`
        std::vector<Element> current{x.unit()};
        std::vector<unsigned> cur_deg{0};
        for (const auto& w : gens) {
            auto wd = w.degree();
            if (!wd || *wd == 0 || w.is_zero()) continue;
            std::size_t sz = current.size();
            for (std::size_t i = 0; i < sz; ++i) {
                Element prod = current[i];
                unsigned d = cur_deg[i];
                unsigned emax = *wd % 2 == 1 ? 1 : (degree - d) / *wd;
                Element acc = prod;
                for (unsigned e = 1; e <= emax && d + e * *wd <= degree; ++e) {
                    acc = acc * w;
                    if (acc.is_zero()) break;
                    current.push_back(acc);
                    cur_deg.push_back(d + e * *wd);
                }
            }
        }
        for (std::size_t i = 0; i < current.size(); ++i)
            if (cur_deg[i] == degree && !current[i].is_zero())
                cols.push_back(element_coords(current[i], mono_basis));
    }

    // reduce the spanning set to an independent subset, deterministically
    std::vector<std::vector<Rat>> indep;
    std::size_t r = 0;
    for (const auto& c : cols) {
        indep.push_back(c);
        std::size_t nr = rank(QMatrix::from_columns(indep, mono_basis.size()));
        if (nr > r)
            r = nr;
        else
            indep.pop_back();
    }
    qw_basis_cache_[degree] = std::move(indep);
    return *qw_basis_cache_[degree];
}

bool RepresentativeSpace::contains(const Element& e) const {
    if (e.is_zero()) return true;
    const FreeCDGA& x = *domain;
    for (unsigned n = 0; n <= x.truncation_degree(); ++n) {
        Element part = e.part(n);
        if (part.is_zero()) continue;
        const auto& basis_vecs = subalgebra_basis(n);
        QMatrix m = QMatrix::from_columns(basis_vecs, x.basis(n).size());
        if (!solve(m, element_coords(part, x.basis(n)))) return false;
    }
    return true;
}

std::optional<std::vector<Rat>> RepresentativeSpace::w_coordinates(const Element& e) const {
    if (e.is_zero()) return std::vector<Rat>{};
    auto deg = e.degree();
    if (!deg) return std::nullopt;  // inhomogeneous: treat per degree at call sites
    const FreeCDGA& x = *domain;
    if (w_span_cache_.size() <= *deg) w_span_cache_.resize(*deg + 1);
    std::vector<Monomial> mono_basis = x.basis(*deg);
    if (!w_span_cache_[*deg]) {
        std::vector<std::vector<Rat>> indep;
        std::size_t r = 0;
        for (const auto& w : elements()) {
            if (w.degree() != *deg) continue;
            indep.push_back(element_coords(w, mono_basis));
            std::size_t nr = rank(QMatrix::from_columns(indep, mono_basis.size()));
            if (nr > r)
                r = nr;
            else
                indep.pop_back();
        }
        w_span_cache_[*deg] = QMatrix::from_columns(indep, mono_basis.size());
    }
    return solve(*w_span_cache_[*deg], element_coords(e, mono_basis));
}

RepresentativeSpace construct_W(const FreeCDGA& domain_model, const NamedModel& codomain) {
    RepresentativeSpace w;
    w.domain = &domain_model;
    w.codomain = codomain.algebra;
    w.codomain_order = codomain.extension_order;

    const FreeCDGA& x = domain_model;
    ComplexQ cx = algebra_complex(x);

    std::vector<Element> accumulated;  // spanning list of W so far
    unsigned prefix_count = 0;
    for (const auto& stage : codomain.extension_order) {
        unsigned n = stage.degree;
        if (n > x.truncation_degree()) break;
        prefix_count += static_cast<unsigned>(stage.gen_indices.size());
        w.prefixes.push_back(prefix_algebra(*codomain.algebra, prefix_count));

        WStage st;
        st.degree = n;
        st.degree_basis = x.basis(n);
        st.cohomology = complex_cohomology(cx, n);
        for (const auto& rep : st.cohomology.reps)
            st.h_part.push_back(element_from_coords(x, st.degree_basis, rep));

        // S-part: antiderivatives of the exact elements of Q[W_k] in degree n+1
        if (n + 1 <= x.truncation_degree()) {
            // span of Q[W_k]^{n+1}: products of accumulated elements
            RepresentativeSpace scratch;
            scratch.domain = &x;
            WStage all;
            all.s_part = accumulated;
            scratch.stages.push_back(all);
            const auto& qw = scratch.subalgebra_basis(n + 1);
            if (!qw.empty()) {
                std::vector<Monomial> up = x.basis(n + 1);
                QMatrix dmat = d_matrix(x, n);
                RrefResult dr = rref(dmat);
                std::vector<std::vector<Rat>> im_cols;
                for (auto c : dr.pivot_cols) im_cols.push_back(dmat.column(c));
                // intersection of span(qw) and im(d): null vectors of [QW | -IM]
                QMatrix joint(up.size(), qw.size() + im_cols.size());
                for (std::size_t j = 0; j < qw.size(); ++j)
                    for (std::size_t i = 0; i < up.size(); ++i) joint.at(i, j) = qw[j][i];
                for (std::size_t j = 0; j < im_cols.size(); ++j)
                    for (std::size_t i = 0; i < up.size(); ++i)
                        joint.at(i, qw.size() + j) = -im_cols[j][i];
                std::vector<std::vector<Rat>> inter;
                std::size_t r = 0;
                for (const auto& nv : nullspace(joint)) {
                    std::vector<Rat> vec(up.size(), Rat(0));
                    for (std::size_t j = 0; j < qw.size(); ++j)
                        for (std::size_t i = 0; i < up.size(); ++i) vec[i] += nv[j] * qw[j][i];
                    bool nonzero = false;
                    for (const auto& c : vec) nonzero = nonzero || c != 0;
                    if (!nonzero) continue;
                    inter.push_back(vec);
                    std::size_t nr = rank(QMatrix::from_columns(inter, up.size()));
                    if (nr > r)
                        r = nr;
                    else
                        inter.pop_back();
                }
                for (const auto& dv : inter)
                    st.s_part.push_back(solve_d(x, element_from_coords(x, up, dv)));
            }
        }
        accumulated.insert(accumulated.end(), st.s_part.begin(), st.s_part.end());
        accumulated.insert(accumulated.end(), st.h_part.begin(), st.h_part.end());
        w.stages.push_back(std::move(st));
    }
    return w;
}

// ---------------------------------------------------------------------------

HomotopeResult homotope_into_W(const DGAMap& phi_prime, const RepresentativeSpace& w) {
    const FreeCDGA& x = *w.domain;
    const FreeCDGA& y = *w.codomain;
    if (phi_prime.source() != &y || phi_prime.target() != &x)
        throw ValidationError("homotope_into_W: map does not match the W construction");
    std::string why;
    if (!phi_prime.valid(&why)) throw ValidationError("homotope_into_W: invalid input: " + why);

    std::vector<Element> phi_images;
    std::vector<IntervalElement> h_images;
    std::vector<WStageTrace> trace;
    bool still_constant = true;

    for (std::size_t k = 0; k < w.codomain_order.size(); ++k) {
        const ExtensionStage& stage = w.codomain_order[k];
        unsigned n = stage.degree;
        WStageTrace tr;
        tr.degree = n;
        tr.phi_norm = 0;
        tr.c_norm = 0;

        // beyond the truncation the image spaces vanish
        if (n > x.truncation_degree()) {
            for (std::size_t i = 0; i < stage.gen_indices.size(); ++i) {
                phi_images.push_back(x.zero());
                h_images.push_back(IntervalElement(&x));
            }
            trace.push_back(tr);
            continue;
        }
        const WStage& wst = w.stages[k];

        // partial data on the previous prefix
        const FreeCDGA* prev =
            k == 0 ? nullptr : static_cast<const FreeCDGA*>(w.prefixes[k - 1].get());
        DGAMap phi_k;
        Homotopy h_k;
        if (prev) {
            phi_k = DGAMap(prev, &x, phi_images);
            h_k = Homotopy(prev, &x, h_images);
        }

        for (unsigned gv : stage.gen_indices) {
            Element prime_v = phi_prime.image(gv);

            if (still_constant && w.contains(prime_v)) {
                tr.short_circuit = true;
                phi_images.push_back(prime_v);
                h_images.push_back(IntervalElement::from_element(prime_v));
                auto coords = w.w_coordinates(prime_v);
                if (coords)
                    for (const auto& c : *coords) tr.phi_norm = std::max(tr.phi_norm, abs_rat(c));
                continue;
            }

            Element dv_y = y.differential_of(gv);
            Element dv = prev ? transport_prefix(dv_y, *prev) : Element();
            Element rhs = prev && !dv.is_zero() ? phi_k.apply(dv) : x.zero();

            // b~ = (d|_S)^{-1}(rhs) within the stage's S-part
            Element b_tilde = x.zero();
            if (!rhs.is_zero()) {
                std::vector<Monomial> up = x.basis(n + 1);
                std::vector<std::vector<Rat>> ds_cols;
                for (const auto& s : wst.s_part)
                    ds_cols.push_back(element_coords(x.differential(s), up));
                auto u = solve(QMatrix::from_columns(ds_cols, up.size()),
                               element_coords(rhs, up));
                if (!u)
                    throw NotExactError(
                        "homotope_into_W: the staged image is not exact in the S-part; W was "
                        "built for a different homotopy type");
                for (std::size_t j = 0; j < wst.s_part.size(); ++j)
                    b_tilde = b_tilde + (*u)[j] * wst.s_part[j];
            }

            Element integral = prev && !dv.is_zero() ? int_0_1(h_k.apply(dv)) : x.zero();
            Element z = b_tilde - prime_v - integral;
            if (!x.differential(z).is_zero())
                throw ValidationError("homotope_into_W: stage cycle is not closed (internal)");

            // harmonic representative of [z]
            Element a = x.zero();
            if (!z.is_zero()) {
                auto cls = wst.cohomology.project(element_coords(z, wst.degree_basis));
                for (std::size_t j = 0; j < wst.h_part.size(); ++j)
                    a = a + cls[j] * wst.h_part[j];
            }
            Element b = b_tilde - a;
            Element c = solve_d(x, z - a);

            IntervalElement img =
                IntervalElement::from_element(prime_v) +
                (prev && !dv.is_zero() ? int_0_t(h_k.apply(dv)) : IntervalElement(&x)) +
                interval_differential(IntervalElement::from_element(c, 1));

            phi_images.push_back(b);
            h_images.push_back(std::move(img));
            if (!c.is_zero()) still_constant = false;

            auto coords = w.w_coordinates(b);
            if (!coords)
                throw NotInWError("homotope_into_W: stage output escaped Q[W] (internal)");
            for (const auto& cc : *coords) tr.phi_norm = std::max(tr.phi_norm, abs_rat(cc));
            if (!c.is_zero())
                for (const auto& [m, cc] : c.terms()) tr.c_norm = std::max(tr.c_norm, abs_rat(cc));
        }
        trace.push_back(tr);
    }

    DGAMap phi(&y, &x, phi_images);
    Homotopy h(&y, &x, h_images);
    if (!phi.valid(&why))
        throw ValidationError("homotope_into_W: output failed the chain check: " + why);
    if (!is_homotopy(h, phi_prime, phi, &why))
        throw ValidationError("homotope_into_W: homotopy verification failed: " + why);
    return {std::move(phi), std::move(h), std::move(trace)};
}

// ---------------------------------------------------------------------------

RelHomotopyResult homotopy_between_extensions(const ElementaryExtension& ext, const DGAMap& f1,
                                              const DGAMap& f2) {
    const FreeCDGA& a = *ext.base;
    const FreeCDGA& e = *ext.extended;
    if (f1.source() != &e || f2.source() != &e || f1.target() != f2.target())
        throw ValidationError("homotopy_between_extensions: maps must share the extension");
    const FreeCDGA& x = *f1.target();
    std::string why;
    if (!f1.valid(&why) || !f2.valid(&why))
        throw ValidationError("homotopy_between_extensions: invalid map: " + why);
    for (unsigned g = 0; g < a.generator_count(); ++g)
        if (!(f1.image(g) == f2.image(g)))
            throw BaseMismatchError("homotopy_between_extensions: maps differ on the base");

    unsigned n = ext.degree;
    DGAMap phi = restrict_to_prefix(f1, a);

    // unknowns: eta(g) in X^{deg g - 1} per base generator, c(v) in X^{n-1}
    struct Block {
        unsigned gen;
        std::vector<Monomial> basis;
        std::size_t offset;
    };
    std::vector<Block> eta_blocks;
    std::size_t cols = 0;
    for (unsigned g = 0; g < a.generator_count(); ++g) {
        unsigned dg = a.generators()[g].degree;
        Block b;
        b.gen = g;
        b.basis = dg >= 1 ? x.basis(dg - 1) : std::vector<Monomial>{};
        b.offset = cols;
        cols += b.basis.size();
        eta_blocks.push_back(std::move(b));
    }
    std::vector<Monomial> c_basis = n >= 1 ? x.basis(n - 1) : std::vector<Monomial>{};
    std::vector<std::size_t> c_offsets;
    for (std::size_t i = 0; i < ext.new_gen_indices.size(); ++i) {
        c_offsets.push_back(cols);
        cols += c_basis.size();
    }

    // rows: chain condition per base generator (degree deg g), then the
    // endpoint equations per new generator (degree n)
    std::vector<std::vector<Monomial>> row_bases;
    std::vector<std::size_t> row_offsets;
    std::size_t rows = 0;
    for (unsigned g = 0; g < a.generator_count(); ++g) {
        row_offsets.push_back(rows);
        row_bases.push_back(x.basis(a.generators()[g].degree));
        rows += row_bases.back().size();
    }
    std::size_t v_rows_start = rows;
    std::vector<Monomial> v_basis = x.basis(n);
    rows += v_basis.size() * ext.new_gen_indices.size();

    QMatrix m(rows, cols);
    std::vector<Rat> rhs(rows, Rat(0));

    auto indicator_eta = [&](std::size_t block, std::size_t j) {
        std::vector<Element> eta(a.generator_count(), x.zero());
        eta[eta_blocks[block].gen] = x.make({{eta_blocks[block].basis[j], Rat(1)}});
        return eta;
    };

    int sign_n = n % 2 == 0 ? 1 : -1;
    for (std::size_t blk = 0; blk < eta_blocks.size(); ++blk) {
        for (std::size_t j = 0; j < eta_blocks[blk].basis.size(); ++j) {
            std::vector<Element> eta = indicator_eta(blk, j);
            std::size_t col = eta_blocks[blk].offset + j;
            // (a) d(eta(g)) - eta(dg) = 0 for every base generator g
            for (unsigned g = 0; g < a.generator_count(); ++g) {
                Element val = x.differential(eta[g]) - eta_expand(phi, 1, eta, a.differential_of(g));
                if (val.is_zero()) continue;
                auto coords = element_coords(val, row_bases[g]);
                for (std::size_t i = 0; i < coords.size(); ++i)
                    if (coords[i] != 0) m.at(row_offsets[g] + i, col) = coords[i];
            }
            // (b) (-1)^n eta(dv) + d c(v) = f2(v) - f1(v)
            for (std::size_t vi = 0; vi < ext.new_gen_indices.size(); ++vi) {
                Element val = Rat(sign_n) * eta_expand(phi, 1, eta, ext.diff_of_new(vi));
                if (val.is_zero()) continue;
                auto coords = element_coords(val, v_basis);
                for (std::size_t i = 0; i < coords.size(); ++i)
                    if (coords[i] != 0)
                        m.at(v_rows_start + vi * v_basis.size() + i, col) = coords[i];
            }
        }
    }
    for (std::size_t vi = 0; vi < ext.new_gen_indices.size(); ++vi) {
        for (std::size_t j = 0; j < c_basis.size(); ++j) {
            Element dc = x.differential(x.make({{c_basis[j], Rat(1)}}));
            auto coords = element_coords(dc, v_basis);
            for (std::size_t i = 0; i < coords.size(); ++i)
                if (coords[i] != 0)
                    m.at(v_rows_start + vi * v_basis.size() + i, c_offsets[vi] + j) = coords[i];
        }
        Element delta = f2.image(ext.new_gen_indices[vi]) - f1.image(ext.new_gen_indices[vi]);
        auto coords = element_coords(delta, v_basis);
        for (std::size_t i = 0; i < coords.size(); ++i)
            rhs[v_rows_start + vi * v_basis.size() + i] = coords[i];
    }

    RelHomotopyResult out;
    auto sol = solve(m, rhs);
    if (sol) {
        std::vector<Element> eta(a.generator_count(), x.zero());
        for (const auto& blk : eta_blocks) {
            std::vector<Rat> coords(sol->begin() + static_cast<long>(blk.offset),
                                    sol->begin() + static_cast<long>(blk.offset + blk.basis.size()));
            eta[blk.gen] = element_from_coords(x, blk.basis, coords);
        }
        std::vector<IntervalElement> h_images;
        for (unsigned g = 0; g < a.generator_count(); ++g)
            h_images.push_back(IntervalElement::from_element(f1.image(g)) +
                               IntervalElement::dt_term(eta[g]));
        for (std::size_t vi = 0; vi < ext.new_gen_indices.size(); ++vi) {
            std::vector<Rat> coords(sol->begin() + static_cast<long>(c_offsets[vi]),
                                    sol->begin() + static_cast<long>(c_offsets[vi] + c_basis.size()));
            Element c = element_from_coords(x, c_basis, coords);
            Element t_coeff =
                Rat(sign_n) * eta_expand(phi, 1, eta, ext.diff_of_new(vi)) + x.differential(c);
            IntervalElement img =
                IntervalElement::from_element(f1.image(ext.new_gen_indices[vi])) +
                IntervalElement::from_element(t_coeff, 1) +
                ((n % 2 == 0) ? Rat(-1) : Rat(1)) * IntervalElement::dt_term(c);  // (-1)^{n-1}
            h_images.push_back(std::move(img));
        }
        Homotopy h(&e, &x, std::move(h_images));
        if (!is_homotopy(h, f1, f2, &why))
            throw ValidationError("homotopy_between_extensions: verification failed: " + why);
        out.homotopic = true;
        out.homotopy = std::move(h);
        return out;
    }

    // not homotopic through a level-1 perturbation: report the cohomology data
    CohomologySpace hn = cohomology(x, n);
    std::vector<std::vector<Rat>> iota_cols;  // stacked class coordinates
    auto stack_classes = [&](const std::vector<Element>& eta_vals) {
        std::vector<Rat> stacked;
        for (std::size_t vi = 0; vi < ext.new_gen_indices.size(); ++vi) {
            Element val = eta_expand(phi, 1, eta_vals, ext.diff_of_new(vi));
            auto cls = hn.project(val);
            stacked.insert(stacked.end(), cls.begin(), cls.end());
        }
        return stacked;
    };
    // chain-compatible eta space: nullspace of the (a) block
    QMatrix chain_block(v_rows_start, cols);
    for (std::size_t i = 0; i < v_rows_start; ++i)
        for (std::size_t j = 0; j < cols; ++j) chain_block.at(i, j) = m.at(i, j);
    for (const auto& nv : nullspace(chain_block)) {
        std::vector<Element> eta(a.generator_count(), x.zero());
        bool any = false;
        for (const auto& blk : eta_blocks) {
            std::vector<Rat> coords(nv.begin() + static_cast<long>(blk.offset),
                                    nv.begin() + static_cast<long>(blk.offset + blk.basis.size()));
            eta[blk.gen] = element_from_coords(x, blk.basis, coords);
            any = any || !eta[blk.gen].is_zero();
        }
        if (any) iota_cols.push_back(stack_classes(eta));
    }
    std::size_t stacked_dim = hn.dimension * ext.new_gen_indices.size();
    out.iota_image_rank = iota_cols.empty()
                              ? 0
                              : rank(QMatrix::from_columns(iota_cols, stacked_dim));
    std::vector<Rat> delta_stacked;
    for (std::size_t vi = 0; vi < ext.new_gen_indices.size(); ++vi) {
        Element delta = f2.image(ext.new_gen_indices[vi]) - f1.image(ext.new_gen_indices[vi]);
        auto cls = hn.project(delta);
        out.difference_class.push_back(cls);
        delta_stacked.insert(delta_stacked.end(), cls.begin(), cls.end());
    }
    iota_cols.push_back(delta_stacked);
    out.joint_rank = rank(QMatrix::from_columns(iota_cols, stacked_dim));
    out.homotopic = false;
    return out;
}

}  // namespace dgahom
