#pragma once

#include "dgahom/homotopy.hpp"
#include "dgahom/linalg.hpp"
#include "dgahom/map.hpp"
#include "dgahom/models.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace dgahom {

/// Elementary extension A (x) /\V: new generators of one degree adjoined to a
/// base algebra, with closed differentials in the base.
struct ElementaryExtension {
    std::shared_ptr<const FreeCDGA> base;
    std::shared_ptr<const FreeCDGA> extended;  // base generators first, then V
    unsigned degree = 0;
    std::vector<unsigned> new_gen_indices;  // indices into `extended`

    static ElementaryExtension adjoin(std::shared_ptr<const FreeCDGA> base,
                                      const std::vector<std::string>& names, unsigned degree,
                                      const std::vector<Element>& differentials);

    /// The k-th stage of a model presented by its extension order: base is the
    /// prefix before the stage, extended the prefix through it.
    static ElementaryExtension stage(const FreeCDGA& y, const std::vector<ExtensionStage>& order,
                                     std::size_t k);

    Element diff_of_new(std::size_t i) const;  // dv in the base algebra
};

/// Lifting-extension square: f on the base, g on the extension, h between the
/// targets, and a homotopy H from g|_base (t=0) to h.f (t=1).
struct ObstructionProblem {
    ElementaryExtension ext;
    DGAMap f;    // base -> B
    DGAMap g;    // extended -> C
    DGAMap h;    // B -> C
    Homotopy H;  // base -> C (x) /\(t, dt)

    bool valid(std::string* why = nullptr) const;
};

/// Relative cocycle O(v) = (f(dv), g(v) + int_0^1 H(dv)) per new generator,
/// with its class coordinates in H^{n+1}(h).
struct ObstructionClass {
    unsigned degree = 0;  // n + 1
    std::vector<ConeElement> cochain;
    std::vector<std::vector<Rat>> class_coords;
    ConeCohomology relative;

    bool zero() const;
};

ObstructionClass obstruction(const ObstructionProblem& p);

/// d(b, c) = O solved per generator: db(v) = f(dv),
/// dc(v) = h(b(v)) - g(v) - int_0^1 H(dv).
struct Primitive {
    std::vector<ConeElement> bc;  // per new generator: (b in B^n, c in C^{n-1})
};

Primitive solve_primitive(const ObstructionProblem& p, const ObstructionClass& o);

struct ExtensionResult {
    DGAMap f_tilde;     // extended -> B
    Homotopy h_tilde;   // from g (t=0) to h.f_tilde (t=1)
};

ExtensionResult extend_with_primitive(const ObstructionProblem& p, const Primitive& prim);

// ---------------------------------------------------------------------------
// Representative space W inside a finite model of the domain.

struct WStage {
    unsigned degree = 0;
    std::vector<Element> s_part;  // antiderivative picks, d restricted here is injective
    std::vector<Element> h_part;  // harmonic representatives
    ComplexCohomology cohomology;  // projector for the stage degree
    std::vector<Monomial> degree_basis;
};

class RepresentativeSpace {
public:
    const FreeCDGA* domain = nullptr;             // X model
    std::shared_ptr<const FreeCDGA> codomain;     // Y model, staged
    std::vector<ExtensionStage> codomain_order;
    std::vector<std::shared_ptr<const FreeCDGA>> prefixes;  // Y(k) through each stage
    std::vector<WStage> stages;

    std::vector<Element> elements() const;  // spanning list of W

    /// Degree-wise basis of the subalgebra Q[W] (coordinates are monomial
    /// coordinates of X).
    const std::vector<std::vector<Rat>>& subalgebra_basis(unsigned degree) const;
    bool contains(const Element& e) const;

    /// Coordinates of e in a deterministic independent subset of the W
    /// spanning list, per degree; nullopt when e is outside span(W).
    std::optional<std::vector<Rat>> w_coordinates(const Element& e) const;

private:
    mutable std::vector<std::optional<std::vector<std::vector<Rat>>>> qw_basis_cache_;
    mutable std::vector<std::optional<QMatrix>> w_span_cache_;
    friend RepresentativeSpace construct_W(const FreeCDGA&, const NamedModel&);
};

/// Staged construction W_{k+1} = W_k + S_{k+1} + H^{n_{k+1}}(X).
RepresentativeSpace construct_W(const FreeCDGA& domain_model, const NamedModel& codomain);

struct WStageTrace {
    unsigned degree = 0;
    Rat phi_norm;     // max |W-coordinate| of the images fixed at this stage
    Rat c_norm;       // max |monomial coordinate| of the antiderivative corrections
    bool short_circuit = false;
};

struct HomotopeResult {
    DGAMap phi;      // images in Q[W]
    Homotopy h;      // from phi_prime (t=0) to phi (t=1)
    std::vector<WStageTrace> trace;
};

/// Push a map through the staged induction so that every generator image lies
/// in Q[W]; the output is homotopic to the input and the operation is
/// idempotent.
HomotopeResult homotope_into_W(const DGAMap& phi_prime, const RepresentativeSpace& w);

// ---------------------------------------------------------------------------
// Level-1 comparison of two extensions that agree on the base.

struct RelHomotopyResult {
    bool homotopic = false;
    std::optional<Homotopy> homotopy;  // verified when homotopic
    // diagnostics when not homotopic: for each new generator the class of the
    // difference in H^n(target), and the rank gained over the iota_1 image
    std::vector<std::vector<Rat>> difference_class;
    std::size_t iota_image_rank = 0;
    std::size_t joint_rank = 0;
};

/// Decide whether two extensions of the same base map are homotopic through a
/// level-1 perturbation of the base, and produce the verified homotopy.
RelHomotopyResult homotopy_between_extensions(const ElementaryExtension& ext, const DGAMap& f1,
                                              const DGAMap& f2);

}  // namespace dgahom
