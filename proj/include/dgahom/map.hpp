#pragma once

#include "dgahom/cdga.hpp"
#include "dgahom/linalg.hpp"

#include <vector>

namespace dgahom {

/// Homomorphism of free CDGAs, determined by degree-preserving generator
/// images.  Validity (chain condition on generators) is checked on demand.
class DGAMap {
public:
    DGAMap() = default;
    DGAMap(const FreeCDGA* source, const FreeCDGA* target, std::vector<Element> images);

    static DGAMap identity(const FreeCDGA& a);
    static DGAMap zero(const FreeCDGA& source, const FreeCDGA& target);

    const FreeCDGA* source() const { return source_; }
    const FreeCDGA* target() const { return target_; }
    const std::vector<Element>& images() const { return images_; }
    const Element& image(unsigned gen_index) const { return images_[gen_index]; }

    Element apply(const Element& x) const;

    /// Degree preservation plus d(f(v)) == f(dv) for every generator.
    bool valid(std::string* why = nullptr) const;

    bool operator==(const DGAMap& o) const {
        return source_ == o.source_ && target_ == o.target_ && images_ == o.images_;
    }

private:
    const FreeCDGA* source_ = nullptr;
    const FreeCDGA* target_ = nullptr;
    std::vector<Element> images_;
};

DGAMap compose(const DGAMap& outer, const DGAMap& inner);  // outer . inner

// ---------------------------------------------------------------------------
// Stage subalgebras: the free CDGA on the first gen_count generators, sharing
// generator indices with the ambient algebra.

std::shared_ptr<FreeCDGA> prefix_algebra(const FreeCDGA& a, unsigned gen_count,
                                         const std::string& label = {});

/// Move an element between an ambient algebra and a prefix algebra (either
/// direction); every generator used must exist on the receiving side.
Element transport_prefix(const Element& e, const FreeCDGA& to);

DGAMap prefix_inclusion(const FreeCDGA& prefix, const FreeCDGA& full);

/// Restriction of a map (or of homotopy images) to a prefix of its source.
DGAMap restrict_to_prefix(const DGAMap& f, const FreeCDGA& prefix);

/// The positive-weight scaling endomorphism v -> t^{weight(v)} v.  Requires
/// every generator to carry a weight and the differential to be
/// weight-homogeneous.
DGAMap weight_scaling(const FreeCDGA& a, const Rat& t);

// ---------------------------------------------------------------------------
// Relative cohomology of a homomorphism phi : A -> B via the cone complex
// C^n = A^n (+) B^{n-1}, d(a, b) = (da, phi(a) - db).

struct ConeElement {
    Element top;     // in A, degree n
    Element bottom;  // in B, degree n-1
};

class ConeCohomology {
public:
    unsigned degree = 0;
    std::size_t dimension = 0;
    std::vector<ConeElement> representatives;

    std::vector<Rat> project(const ConeElement& closed) const;

    const FreeCDGA* a = nullptr;
    const FreeCDGA* b = nullptr;
    std::vector<Monomial> basis_a;  // degree n
    std::vector<Monomial> basis_b;  // degree n-1
    ComplexCohomology data;
    DGAMap phi;
};

/// Cone differential applied to a pair of given degree.
ConeElement cone_differential(const DGAMap& phi, const ConeElement& x);
bool cone_closed(const DGAMap& phi, const ConeElement& x);

ConeCohomology relative_cohomology(const DGAMap& phi, unsigned n);

/// Solve d(a, b) = rhs in the cone of phi, i.e. da = rhs.top and
/// phi(a) - db = rhs.bottom, with rhs in degree n+1 and the solution in
/// degree n.  Deterministic; throws NotExactError when the relative class of
/// rhs is nonzero.
ConeElement cone_solve(const DGAMap& phi, const ConeElement& rhs, unsigned rhs_degree);

}  // namespace dgahom
