#include "dgahom/cdga.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace dgahom {

std::string Monomial::to_string(const std::vector<Generator>& gens) const {
    if (factors_.empty()) return "1";
    std::ostringstream out;
    bool first = true;
    for (const auto& [g, e] : factors_) {
        if (!first) out << "*";
        first = false;
        out << gens[g].name;
        if (e > 1) out << "^" << e;
    }
    return out.str();
}

Element::Element(const FreeCDGA* alg, std::vector<Term> terms, bool truncated)
    : alg_(alg), terms_(std::move(terms)), truncated_(truncated) {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    // merge equal monomials, drop zeros
    std::vector<Term> merged;
    merged.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!merged.empty() && merged.back().first == t.first)
            merged.back().second += t.second;
        else
            merged.push_back(std::move(t));
        if (!merged.empty() && merged.back().second == 0) merged.pop_back();
    }
    terms_ = std::move(merged);
}

std::optional<unsigned> Element::degree() const {
    if (terms_.empty()) return std::nullopt;
    unsigned d = alg_->degree(terms_.front().first);
    for (const auto& t : terms_)
        if (alg_->degree(t.first) != d) return std::nullopt;
    return d;
}

Element Element::part(unsigned n) const {
    std::vector<Term> out;
    for (const auto& t : terms_)
        if (alg_->degree(t.first) == n) out.push_back(t);
    return Element(alg_, std::move(out), truncated_);
}

Rat Element::coefficient(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& k) { return t.first < k; });
    if (it != terms_.end() && it->first == m) return it->second;
    return Rat(0);
}

std::string Element::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rat a = c;
        if (first) {
            if (a < 0) {
                out << "-";
                a = -a;
            }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        if (m.is_unit()) {
            out << dgahom::to_string(a);
        } else {
            if (a != 1) out << dgahom::to_string(a) << "*";
            out << m.to_string(alg_->generators());
        }
    }
    return out.str();
}

std::shared_ptr<FreeCDGA> FreeCDGA::create(std::vector<Generator> gens,
                                           unsigned truncation_degree,
                                           bool minimal_flag, std::string label) {
    auto alg = std::shared_ptr<FreeCDGA>(new FreeCDGA());
    for (size_t i = 0; i < gens.size(); ++i) {
        if (gens[i].degree < 1)
            throw ValidationError("generator '" + gens[i].name + "' must have degree >= 1");
        for (size_t j = 0; j < i; ++j)
            if (gens[j].name == gens[i].name)
                throw ValidationError("duplicate generator name '" + gens[i].name + "'");
    }
    alg->gens_ = std::move(gens);
    alg->truncation_ = truncation_degree;
    alg->minimal_flag_ = minimal_flag;
    alg->label_ = std::move(label);
    alg->diff_.assign(alg->gens_.size(), Element());
    for (auto& d : alg->diff_) d = alg->zero();
    return alg;
}

void FreeCDGA::set_differential(unsigned gen_index, Element d) {
    if (frozen_) throw ValidationError("algebra is frozen");
    if (gen_index >= gens_.size()) throw ValidationError("generator index out of range");
    if (d.algebra() != this) throw MixedAlgebraError("differential element belongs to another algebra");
    diff_[gen_index] = std::move(d);
}

void FreeCDGA::freeze() {
    auto report = check();
    if (!report.valid()) {
        std::string msg = "invalid CDGA";
        if (!label_.empty()) msg += " '" + label_ + "'";
        for (const auto& s : report.issues) msg += "; " + s;
        throw ValidationError(msg);
    }
    frozen_ = true;
}

std::optional<unsigned> FreeCDGA::generator_index(const std::string& name) const {
    for (unsigned i = 0; i < gens_.size(); ++i)
        if (gens_[i].name == name) return i;
    return std::nullopt;
}

unsigned FreeCDGA::degree(const Monomial& m) const {
    unsigned d = 0;
    for (const auto& [g, e] : m.factors()) d += gens_[g].degree * e;
    return d;
}

bool FreeCDGA::has_weights() const {
    for (const auto& g : gens_)
        if (!g.weight) return false;
    return true;
}

std::optional<Int> FreeCDGA::weight(const Monomial& m) const {
    Int w = 0;
    for (const auto& [g, e] : m.factors()) {
        if (!gens_[g].weight) return std::nullopt;
        w += Int(*gens_[g].weight) * e;
    }
    return w;
}

Element FreeCDGA::unit(const Rat& c) const {
    if (c == 0) return zero();
    return Element(this, {{Monomial::unit(), c}});
}

Element FreeCDGA::gen_element(unsigned index, const Rat& c) const {
    if (index >= gens_.size()) throw ValidationError("generator index out of range");
    if (c == 0) return zero();
    return Element(this, {{Monomial::gen(index), c}});
}

Element FreeCDGA::gen_element(const std::string& name, const Rat& c) const {
    auto idx = generator_index(name);
    if (!idx) throw ValidationError("unknown generator '" + name + "'");
    return gen_element(*idx, c);
}

Element FreeCDGA::make(std::vector<Element::Term> terms) const {
    return Element(this, std::move(terms));
}

Element FreeCDGA::add(const Element& x, const Element& y) const {
    if (x.algebra() != this || y.algebra() != this) {
        if (x.is_zero() && y.algebra() == this) return y;
        if (y.is_zero() && x.algebra() == this) return x;
        throw MixedAlgebraError("add: operands from different algebras");
    }
    std::vector<Element::Term> terms = x.terms();
    terms.insert(terms.end(), y.terms().begin(), y.terms().end());
    return Element(this, std::move(terms), x.truncation_overflow() || y.truncation_overflow());
}

Element FreeCDGA::scale(const Rat& c, const Element& x) const {
    if (c == 0) {
        Element z = zero();
        z.truncated_ = x.truncation_overflow();
        return z;
    }
    std::vector<Element::Term> terms = x.terms();
    for (auto& t : terms) t.second *= c;
    return Element(this, std::move(terms), x.truncation_overflow());
}

std::optional<std::pair<int, Monomial>> FreeCDGA::mul_mono(const Monomial& x,
                                                           const Monomial& y,
                                                           bool* overflow) const {
    // Koszul sign: each odd-degree factor of y passes the odd-degree factors of
    // x with larger generator index.
    long crossings = 0;
    size_t odd_seen_from_right = 0;  // odd factors of x with index > current y factor
    // count odd factors of x greater than g, for each odd g in y
    std::vector<unsigned> odd_x;
    for (const auto& [g, e] : x.factors())
        if (gens_[g].degree % 2 == 1) odd_x.push_back(g);
    (void)odd_seen_from_right;
    for (const auto& [g, e] : y.factors()) {
        if (gens_[g].degree % 2 == 0) continue;
        if (x.exponent_of(g) > 0) return std::nullopt;  // odd square
        size_t above = odd_x.end() - std::upper_bound(odd_x.begin(), odd_x.end(), g);
        crossings += static_cast<long>(above);
    }
    // merge factor lists
    std::vector<Monomial::Factor> merged;
    const auto& fx = x.factors();
    const auto& fy = y.factors();
    size_t i = 0, j = 0;
    while (i < fx.size() || j < fy.size()) {
        if (j == fy.size() || (i < fx.size() && fx[i].first < fy[j].first)) {
            merged.push_back(fx[i++]);
        } else if (i == fx.size() || fy[j].first < fx[i].first) {
            merged.push_back(fy[j++]);
        } else {
            merged.emplace_back(fx[i].first, fx[i].second + fy[j].second);
            ++i;
            ++j;
        }
    }
    Monomial prod(std::move(merged));
    if (degree(prod) > truncation_) {
        if (overflow) *overflow = true;
        return std::nullopt;
    }
    return std::make_pair(crossings % 2 == 0 ? 1 : -1, std::move(prod));
}

Element FreeCDGA::multiply(const Element& x, const Element& y) const {
    if (x.algebra() != this || y.algebra() != this)
        throw MixedAlgebraError("multiply: operands from different algebras");
    bool overflow = x.truncation_overflow() || y.truncation_overflow();
    std::map<Monomial, Rat> acc;
    for (const auto& [mx, cx] : x.terms()) {
        for (const auto& [my, cy] : y.terms()) {
            auto prod = mul_mono(mx, my, &overflow);
            if (!prod) continue;
            acc[prod->second] += (prod->first > 0 ? cx * cy : -(cx * cy));
        }
    }
    std::vector<Element::Term> terms;
    terms.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (c != 0) terms.emplace_back(m, c);
    return Element(this, std::move(terms), overflow);
}

const Element& FreeCDGA::differential_of(unsigned gen_index) const {
    if (gen_index >= gens_.size()) throw ValidationError("generator index out of range");
    return diff_[gen_index];
}

Element FreeCDGA::differential(const Element& x) const {
    if (x.algebra() != this)
        throw MixedAlgebraError("differential: element from another algebra");
    Element out = zero();
    out.truncated_ = x.truncation_overflow();
    for (const auto& [m, c] : x.terms()) {
        // flatten exponents into a word of single generators
        std::vector<unsigned> word;
        for (const auto& [g, e] : m.factors())
            for (unsigned k = 0; k < e; ++k) word.push_back(g);
        unsigned prefix_deg = 0;
        for (size_t i = 0; i < word.size(); ++i) {
            unsigned g = word[i];
            const Element& dg = diff_[g];
            if (!dg.is_zero()) {
                Element piece = unit(c);
                for (size_t j = 0; j < i; ++j)
                    piece = multiply(piece, gen_element(word[j]));
                piece = multiply(piece, dg);
                for (size_t j = i + 1; j < word.size(); ++j)
                    piece = multiply(piece, gen_element(word[j]));
                if (prefix_deg % 2 == 1) piece = scale(Rat(-1), piece);
                out = add(out, piece);
            }
            prefix_deg += gens_[g].degree;
        }
    }
    return out;
}

namespace {
void enumerate_basis(const std::vector<Generator>& gens, unsigned gi, unsigned remaining,
                     std::vector<Monomial::Factor>& acc, std::vector<Monomial>& out) {
    if (remaining == 0) {
        out.emplace_back(acc);
        return;
    }
    if (gi >= gens.size()) return;
    unsigned deg = gens[gi].degree;
    unsigned max_exp = remaining / deg;
    if (deg % 2 == 1) max_exp = std::min(max_exp, 1u);
    // exponent 0 first, then increasing
    enumerate_basis(gens, gi + 1, remaining, acc, out);
    for (unsigned e = 1; e <= max_exp; ++e) {
        acc.emplace_back(gi, e);
        enumerate_basis(gens, gi + 1, remaining - deg * e, acc, out);
        acc.pop_back();
    }
}
}  // namespace

std::vector<Monomial> FreeCDGA::basis(unsigned n) const {
    if (n > truncation_) throw DegreeOutOfRangeError("basis: degree above truncation");
    std::vector<Monomial> out;
    std::vector<Monomial::Factor> acc;
    enumerate_basis(gens_, 0, n, acc, out);
    std::sort(out.begin(), out.end());
    return out;
}

ValidationReport FreeCDGA::check() const {
    ValidationReport report;
    for (unsigned i = 0; i < gens_.size(); ++i) {
        const Element& d = diff_[i];
        if (d.is_zero()) continue;
        auto deg = d.degree();
        if (!deg) {
            report.issues.push_back("d(" + gens_[i].name + ") is not homogeneous");
            continue;
        }
        if (*deg != gens_[i].degree + 1)
            report.issues.push_back("d(" + gens_[i].name + ") has degree " +
                                    std::to_string(*deg) + ", expected " +
                                    std::to_string(gens_[i].degree + 1));
        for (const auto& [m, c] : d.terms()) {
            for (const auto& [g, e] : m.factors()) {
                if (g >= i)
                    report.issues.push_back("d(" + gens_[i].name + ") uses generator '" +
                                            gens_[g].name + "' not introduced earlier");
            }
            if (minimal_flag_ && m.factors().size() == 1 && m.factors()[0].second == 1)
                report.issues.push_back("d(" + gens_[i].name + ") has a linear part (" +
                                        m.to_string(gens_) + "); algebra flagged minimal");
        }
        Element dd = differential(d);
        if (!dd.is_zero())
            report.issues.push_back("d(d(" + gens_[i].name + ")) = " + dd.to_string() +
                                    " != 0");
    }
    return report;
}

Element operator+(const Element& x, const Element& y) {
    const FreeCDGA* alg = x.algebra() ? x.algebra() : y.algebra();
    if (!alg) return Element();
    return alg->add(x, y);
}

Element operator-(const Element& x, const Element& y) {
    const FreeCDGA* alg = x.algebra() ? x.algebra() : y.algebra();
    if (!alg) return Element();
    return alg->add(x, alg->scale(Rat(-1), y));
}

Element operator-(const Element& x) {
    if (!x.algebra()) return x;
    return x.algebra()->scale(Rat(-1), x);
}

Element operator*(const Element& x, const Element& y) {
    if (!x.algebra() || !y.algebra()) return Element();
    return x.algebra()->multiply(x, y);
}

Element operator*(const Rat& c, const Element& x) {
    if (!x.algebra()) return x;
    return x.algebra()->scale(c, x);
}

Element differential(const Element& x) {
    if (!x.algebra()) return x;
    return x.algebra()->differential(x);
}

}  // namespace dgahom
