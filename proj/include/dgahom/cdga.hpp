#pragma once

#include "dgahom/error.hpp"
#include "dgahom/rational.hpp"

#include <compare>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dgahom {

struct Generator {
    std::string name;
    unsigned degree = 0;  // >= 1
    std::optional<unsigned> weight;
};

/// Normalized graded monomial: factors sorted by generator index, exponents
/// positive, odd-degree generators appear with exponent at most 1.  The empty
/// factor list is the unit.
class Monomial {
public:
    using Factor = std::pair<unsigned, unsigned>;  // (generator index, exponent)

    Monomial() = default;
    explicit Monomial(std::vector<Factor> factors) : factors_(std::move(factors)) {}

    static Monomial unit() { return Monomial{}; }
    static Monomial gen(unsigned index, unsigned exp = 1) {
        return Monomial{{{index, exp}}};
    }

    bool is_unit() const { return factors_.empty(); }
    const std::vector<Factor>& factors() const { return factors_; }

    unsigned exponent_of(unsigned gen_index) const {
        for (const auto& [g, e] : factors_)
            if (g == gen_index) return e;
        return 0;
    }

    friend auto operator<=>(const Monomial& a, const Monomial& b) = default;

    std::string to_string(const std::vector<Generator>& gens) const;

private:
    std::vector<Factor> factors_;
};

class FreeCDGA;

/// Exact rational linear combination of monomials of one algebra.  Terms are
/// kept sorted with nonzero coefficients, so equality is structural.  The
/// `truncated` flag is sticky through arithmetic: it records that some product
/// along the way overflowed the algebra's truncation degree and was dropped.
class Element {
public:
    using Term = std::pair<Monomial, Rat>;

    Element() = default;
    Element(const FreeCDGA* alg, std::vector<Term> terms, bool truncated = false);

    const FreeCDGA* algebra() const { return alg_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool truncation_overflow() const { return truncated_; }

    /// Total degree when the element is homogeneous and nonzero; nullopt for
    /// the zero element (degree "any") or inhomogeneous sums.
    std::optional<unsigned> degree() const;
    bool homogeneous() const { return terms_.size() <= 1 || degree().has_value(); }

    /// Restriction to the degree-n part.
    Element part(unsigned n) const;

    Rat coefficient(const Monomial& m) const;

    bool operator==(const Element& o) const {
        return alg_ == o.alg_ && terms_ == o.terms_;
    }

    std::string to_string() const;

private:
    const FreeCDGA* alg_ = nullptr;
    std::vector<Term> terms_;
    bool truncated_ = false;

    friend class FreeCDGA;
};

struct ValidationReport {
    std::vector<std::string> issues;
    bool valid() const { return issues.empty(); }
};

/// Finitely generated free graded-commutative Q-algebra with a degree +1
/// differential, truncated above `truncation_degree`.  Instances are built,
/// frozen, then immutable; share freely across threads.
class FreeCDGA {
public:
    static std::shared_ptr<FreeCDGA> create(std::vector<Generator> gens,
                                            unsigned truncation_degree,
                                            bool minimal_flag = false,
                                            std::string label = {});

    // Differentials may only be assigned before freeze().
    void set_differential(unsigned gen_index, Element d);
    void freeze();  // throws ValidationError if check() fails
    bool frozen() const { return frozen_; }

    const std::string& label() const { return label_; }
    unsigned truncation_degree() const { return truncation_; }
    bool minimal_flag() const { return minimal_flag_; }
    const std::vector<Generator>& generators() const { return gens_; }
    unsigned generator_count() const { return static_cast<unsigned>(gens_.size()); }
    std::optional<unsigned> generator_index(const std::string& name) const;

    unsigned degree(const Monomial& m) const;
    std::optional<Int> weight(const Monomial& m) const;  // nullopt if weights missing
    bool has_weights() const;

    // Element construction.
    Element zero() const { return Element(this, {}); }
    Element unit(const Rat& c = Rat(1)) const;
    Element gen_element(unsigned index, const Rat& c = Rat(1)) const;
    Element gen_element(const std::string& name, const Rat& c = Rat(1)) const;
    Element make(std::vector<Element::Term> terms) const;

    // Arithmetic.
    Element add(const Element& x, const Element& y) const;
    Element scale(const Rat& c, const Element& x) const;
    Element multiply(const Element& x, const Element& y) const;
    Element differential(const Element& x) const;
    const Element& differential_of(unsigned gen_index) const;

    /// All monomials of total degree n, in canonical order.
    std::vector<Monomial> basis(unsigned n) const;

    ValidationReport check() const;

private:
    FreeCDGA() = default;

    // monomial product with Koszul sign; nullopt when an odd generator squares
    // or the result overflows the truncation degree (distinguished by *overflow).
    std::optional<std::pair<int, Monomial>> mul_mono(const Monomial& x, const Monomial& y,
                                                     bool* overflow) const;

    std::vector<Generator> gens_;
    std::vector<Element> diff_;
    unsigned truncation_ = 0;
    bool minimal_flag_ = false;
    bool frozen_ = false;
    std::string label_;
};

// Free-function spellings used throughout.
Element operator+(const Element& x, const Element& y);
Element operator-(const Element& x, const Element& y);
Element operator-(const Element& x);
Element operator*(const Element& x, const Element& y);
Element operator*(const Rat& c, const Element& x);
Element differential(const Element& x);

inline Element multiply(const Element& x, const Element& y) { return x * y; }
inline std::vector<Monomial> basis(const FreeCDGA& a, unsigned n) { return a.basis(n); }
inline ValidationReport check_cdga(const FreeCDGA& a) { return a.check(); }

}  // namespace dgahom
