#include "dgahom/models.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace dgahom {

namespace {

struct Token {
    enum Kind { Ident, Number, Symbol, End } kind;
    std::string text;
};

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) {}

    Token next() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ >= s_.size()) return {Token::End, ""};
        char c = s_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            return {Token::Ident, s_.substr(start, pos_ - start)};
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return {Token::Number, s_.substr(start, pos_ - start)};
        }
        ++pos_;
        return {Token::Symbol, std::string(1, c)};
    }

    Token peek() {
        size_t save = pos_;
        Token t = next();
        pos_ = save;
        return t;
    }

private:
    const std::string& s_;
    size_t pos_ = 0;
};

Rat parse_coefficient(Lexer& lx, const std::string& first_number) {
    Int num(first_number);
    if (lx.peek().kind == Token::Symbol && lx.peek().text == "/") {
        lx.next();
        Token d = lx.next();
        if (d.kind != Token::Number) throw ParseError("expected denominator after '/'");
        Int den(d.text);
        if (den == 0) throw ParseError("zero denominator");
        return Rat(num, den);
    }
    return Rat(num);
}

}  // namespace

Element parse_polynomial(const FreeCDGA& a, const std::string& text) {
    Lexer lx(text);
    Element out = a.zero();
    bool expect_term = true;
    int sign = 1;
    Element term = a.unit();
    bool in_term = false;

    auto flush = [&]() {
        if (in_term) {
            out = out + (sign < 0 ? -term : term);
            term = a.unit();
            in_term = false;
        }
    };

    for (Token t = lx.next(); t.kind != Token::End; t = lx.next()) {
        if (t.kind == Token::Symbol && (t.text == "+" || t.text == "-")) {
            if (expect_term && t.text == "-") {  // leading sign
                sign = -sign;
                continue;
            }
            flush();
            sign = t.text == "-" ? -1 : 1;
            expect_term = true;
            continue;
        }
        if (t.kind == Token::Symbol && t.text == "*") continue;
        if (t.kind == Token::Number) {
            Rat c = parse_coefficient(lx, t.text);
            term = c * term;
            in_term = true;
            expect_term = false;
            continue;
        }
        if (t.kind == Token::Ident) {
            auto idx = a.generator_index(t.text);
            if (!idx) throw ParseError("unknown generator '" + t.text + "'");
            unsigned exp = 1;
            if (lx.peek().kind == Token::Symbol && lx.peek().text == "^") {
                lx.next();
                Token e = lx.next();
                if (e.kind != Token::Number) throw ParseError("expected exponent after '^'");
                exp = static_cast<unsigned>(std::stoul(e.text));
            }
            for (unsigned k = 0; k < exp; ++k) term = term * a.gen_element(*idx);
            in_term = true;
            expect_term = false;
            continue;
        }
        throw ParseError("unexpected token '" + t.text + "' in polynomial");
    }
    flush();
    return out;
}

IntervalElement parse_interval_polynomial(const FreeCDGA& a, const std::string& text) {
    Lexer lx(text);
    IntervalElement out(&a);
    int sign = 1;
    Element coeff = a.unit();
    unsigned t_power = 0;
    bool has_dt = false;
    bool in_term = false;
    bool expect_term = true;

    auto flush = [&]() {
        if (!in_term) return;
        Element c = sign < 0 ? -coeff : coeff;
        if (has_dt)
            out = out + IntervalElement::dt_term(c, t_power);
        else
            out = out + IntervalElement::from_element(c, t_power);
        coeff = a.unit();
        t_power = 0;
        has_dt = false;
        in_term = false;
    };

    for (Token t = lx.next(); t.kind != Token::End; t = lx.next()) {
        if (t.kind == Token::Symbol && (t.text == "+" || t.text == "-")) {
            if (expect_term && t.text == "-") {
                sign = -sign;
                continue;
            }
            flush();
            sign = t.text == "-" ? -1 : 1;
            expect_term = true;
            continue;
        }
        if (t.kind == Token::Symbol && t.text == "*") continue;
        expect_term = false;
        in_term = true;
        if (t.kind == Token::Number) {
            coeff = parse_coefficient(lx, t.text) * coeff;
            continue;
        }
        if (t.kind == Token::Ident) {
            if (t.text == "dt") {
                if (has_dt) throw ParseError("dt^2 vanishes; only one dt per term");
                has_dt = true;
                continue;
            }
            unsigned exp = 1;
            if (lx.peek().kind == Token::Symbol && lx.peek().text == "^") {
                lx.next();
                Token e = lx.next();
                if (e.kind != Token::Number) throw ParseError("expected exponent after '^'");
                exp = static_cast<unsigned>(std::stoul(e.text));
            }
            if (t.text == "t") {
                t_power += exp;
                continue;
            }
            auto idx = a.generator_index(t.text);
            if (!idx) throw ParseError("unknown generator '" + t.text + "'");
            for (unsigned k = 0; k < exp; ++k) coeff = coeff * a.gen_element(*idx);
            continue;
        }
        throw ParseError("unexpected token '" + t.text + "' in interval polynomial");
    }
    flush();
    return out;
}

namespace {

std::vector<std::pair<std::string, std::string>> split_assignments(const std::string& text) {
    std::vector<std::pair<std::string, std::string>> out;
    std::istringstream in(text);
    std::string part;
    while (std::getline(in, part, ';')) {
        auto eq = part.find('=');
        if (eq == std::string::npos) {
            bool blank = true;
            for (char c : part)
                if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
            if (blank) continue;
            throw ParseError("expected 'generator = polynomial' in '" + part + "'");
        }
        std::string name = part.substr(0, eq);
        std::string poly = part.substr(eq + 1);
        name.erase(std::remove_if(name.begin(), name.end(),
                                  [](unsigned char c) { return std::isspace(c); }),
                   name.end());
        out.emplace_back(name, poly);
    }
    return out;
}

}  // namespace

DGAMap parse_map(const FreeCDGA& source, const FreeCDGA& target, const std::string& text) {
    std::vector<Element> images(source.generator_count(), target.zero());
    std::vector<bool> seen(source.generator_count(), false);
    for (const auto& [name, poly] : split_assignments(text)) {
        auto idx = source.generator_index(name);
        if (!idx) throw ParseError("map assigns unknown generator '" + name + "'");
        images[*idx] = parse_polynomial(target, poly);
        seen[*idx] = true;
    }
    for (unsigned g = 0; g < source.generator_count(); ++g)
        if (!seen[g])
            throw ParseError("map is missing an image for generator '" +
                             source.generators()[g].name + "'");
    return DGAMap(&source, &target, std::move(images));
}

Homotopy parse_homotopy(const FreeCDGA& source, const FreeCDGA& target,
                        const std::string& text) {
    std::vector<IntervalElement> images(source.generator_count(), IntervalElement(&target));
    std::vector<bool> seen(source.generator_count(), false);
    for (const auto& [name, poly] : split_assignments(text)) {
        auto idx = source.generator_index(name);
        if (!idx) throw ParseError("homotopy assigns unknown generator '" + name + "'");
        images[*idx] = parse_interval_polynomial(target, poly);
        seen[*idx] = true;
    }
    for (unsigned g = 0; g < source.generator_count(); ++g)
        if (!seen[g])
            throw ParseError("homotopy is missing an image for generator '" +
                             source.generators()[g].name + "'");
    return Homotopy(&source, &target, std::move(images));
}

std::string write_map(const DGAMap& f) {
    std::ostringstream out;
    for (unsigned g = 0; g < f.source()->generator_count(); ++g) {
        if (g) out << "; ";
        out << f.source()->generators()[g].name << " = " << f.image(g).to_string();
    }
    return out.str();
}

std::string write_homotopy(const Homotopy& h) {
    std::ostringstream out;
    for (unsigned g = 0; g < h.source()->generator_count(); ++g) {
        if (g) out << "; ";
        out << h.source()->generators()[g].name << " = " << h.image(g).to_string();
    }
    return out.str();
}

std::shared_ptr<FreeCDGA> parse_model(const std::string& text, unsigned truncation,
                                      const std::string& label, bool minimal_flag) {
    std::vector<Generator> gens;
    std::vector<std::pair<std::string, std::string>> diffs;  // name, polynomial text
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head)) continue;
        if (head == "gen") {
            std::string name;
            long degree = -1;
            if (!(ls >> name >> degree))
                throw ParseError("line " + std::to_string(lineno) + ": expected 'gen <name> <degree> [weight]'");
            if (degree < 1)
                throw ValidationError("line " + std::to_string(lineno) + ": generator '" + name +
                                      "' must have positive degree");
            Generator g;
            g.name = name;
            g.degree = static_cast<unsigned>(degree);
            long weight;
            if (ls >> weight) {
                if (weight < 1)
                    throw ValidationError("line " + std::to_string(lineno) + ": weight must be positive");
                g.weight = static_cast<unsigned>(weight);
            }
            gens.push_back(std::move(g));
        } else if (head == "d") {
            std::string name, eq;
            if (!(ls >> name >> eq) || eq != "=")
                throw ParseError("line " + std::to_string(lineno) + ": expected 'd <name> = <polynomial>'");
            std::string rest;
            std::getline(ls, rest);
            diffs.emplace_back(name, rest);
        } else {
            throw ParseError("line " + std::to_string(lineno) + ": unknown directive '" + head + "'");
        }
    }
    auto alg = FreeCDGA::create(std::move(gens), truncation, minimal_flag, label);
    for (const auto& [name, poly] : diffs) {
        auto idx = alg->generator_index(name);
        if (!idx) throw ParseError("differential for unknown generator '" + name + "'");
        alg->set_differential(*idx, parse_polynomial(*alg, poly));
    }
    alg->freeze();
    return alg;
}

std::string write_model(const FreeCDGA& a) {
    std::ostringstream out;
    for (const auto& g : a.generators()) {
        out << "gen " << g.name << " " << g.degree;
        if (g.weight) out << " " << *g.weight;
        out << "\n";
    }
    for (unsigned i = 0; i < a.generator_count(); ++i)
        out << "d " << a.generators()[i].name << " = " << a.differential_of(i).to_string()
            << "\n";
    return out.str();
}

std::vector<ExtensionStage> extension_order(const FreeCDGA& a) {
    std::vector<ExtensionStage> stages;
    unsigned stage_start = 0;
    for (unsigned g = 0; g < a.generator_count(); ++g) {
        bool open_new = stages.empty();
        if (!open_new) {
            const ExtensionStage& cur = stages.back();
            if (a.generators()[g].degree != cur.degree) {
                open_new = true;
            } else {
                // differential must avoid the current stage
                for (const auto& [m, c] : a.differential_of(g).terms())
                    for (const auto& [gi, e] : m.factors())
                        if (gi >= stage_start) open_new = true;
            }
        }
        if (open_new) {
            stage_start = g;
            stages.push_back({a.generators()[g].degree, {g}});
        } else {
            stages.back().gen_indices.push_back(g);
        }
    }
    return stages;
}

NamedModel load_model(const std::string& text, unsigned truncation, const std::string& id) {
    NamedModel m;
    m.id = id;
    m.algebra = parse_model(text, truncation, id);
    m.extension_order = extension_order(*m.algebra);
    m.provenance = "loaded from model text";
    return m;
}

// ---------------------------------------------------------------------------

namespace {

constexpr unsigned kDefaultTruncation = 8;

NamedModel make_builtin(const std::string& id, const std::string& text,
                        const std::string& provenance) {
    NamedModel m;
    m.id = id;
    m.algebra = parse_model(text, kDefaultTruncation, id, /*minimal_flag=*/true);
    m.extension_order = extension_order(*m.algebra);
    m.provenance = provenance;
    return m;
}

const std::map<std::string, NamedModel>& builtin_registry() {
    static std::map<std::string, NamedModel> reg = [] {
        std::map<std::string, NamedModel> r;
        r["s3"] = make_builtin("s3",
                               "gen x 3 1\n"
                               "d x = 0\n",
                               "sphere S^3");
        r["s4"] = make_builtin("s4",
                               "gen a 4 1\n"
                               "gen b 7 2\n"
                               "d a = 0\n"
                               "d b = a^2\n",
                               "sphere S^4");
        r["s7"] = make_builtin("s7",
                               "gen c 7 1\n"
                               "d c = 0\n",
                               "sphere S^7");
        r["s2"] = make_builtin("s2",
                               "gen a 2 1\n"
                               "gen b 3 2\n"
                               "d a = 0\n"
                               "d b = a^2\n",
                               "sphere S^2");
        r["s3xs4"] = make_builtin("s3xs4",
                                  "gen x 3 1\n"
                                  "gen y 4 1\n"
                                  "gen z 7 2\n"
                                  "d x = 0\n"
                                  "d y = 0\n"
                                  "d z = y^2\n",
                                  "product S^3 x S^4, truncated model");
        r["s3x(s4vs4)"] = make_builtin("s3x(s4vs4)",
                                       "gen x 3 1\n"
                                       "gen y1 4 1\n"
                                       "gen y2 4 1\n"
                                       "gen z11 7 2\n"
                                       "gen z12 7 2\n"
                                       "gen z22 7 2\n"
                                       "d x = 0\n"
                                       "d y1 = 0\n"
                                       "d y2 = 0\n"
                                       "d z11 = y1^2\n"
                                       "d z12 = y1*y2\n"
                                       "d z22 = y2^2\n",
                                       "product S^3 x (S^4 v S^4), truncated model");
        return r;
    }();
    return reg;
}

const std::vector<ModelPair>& pair_registry() {
    static std::vector<ModelPair> pairs = {
        {"s3xs4:s4", "s3xs4", "s4"},
        {"s3x(s4vs4):s4", "s3x(s4vs4)", "s4"},
        {"s3:s4", "s3", "s4"},
        {"hopf-pair", "s3", "s2"},
    };
    return pairs;
}

const std::map<std::string, MappingClassSchema>& schema_registry() {
    static std::map<std::string, MappingClassSchema> reg = [] {
        std::map<std::string, MappingClassSchema> r;
        MappingClassSchema prod;
        prod.id = "s3xs4:s4";
        prod.kind = MappingClassSchema::Kind::ProductTimesSphere;
        prod.invariant_names = {"d", "h"};
        r[prod.id] = prod;

        MappingClassSchema cs2;
        cs2.id = "cs2-schema";
        cs2.kind = MappingClassSchema::Kind::ConnectedSumTwo;
        cs2.invariant_names = {"d1", "d2", "h"};
        r[cs2.id] = cs2;

        MappingClassSchema hopf;
        hopf.id = "hopf-pair";
        hopf.kind = MappingClassSchema::Kind::HopfPair;
        hopf.invariant_names = {"h"};
        r[hopf.id] = hopf;
        return r;
    }();
    return reg;
}

}  // namespace

std::vector<std::string> builtin_model_ids() {
    std::vector<std::string> ids;
    for (const auto& [id, m] : builtin_registry()) ids.push_back(id);
    return ids;
}

bool is_builtin_model(const std::string& id) { return builtin_registry().count(id) > 0; }

const NamedModel& builtin_model(const std::string& id) {
    auto it = builtin_registry().find(id);
    if (it == builtin_registry().end())
        throw ValidationError("unknown built-in model '" + id + "'");
    return it->second;
}

const std::vector<ModelPair>& builtin_pairs() { return pair_registry(); }

const ModelPair& builtin_pair(const std::string& id) {
    for (const auto& p : pair_registry())
        if (p.id == id) return p;
    throw UnknownSchemaError("unknown built-in pair '" + id + "'");
}

Int MappingClassSchema::modulus(const std::vector<Int>& degrees) const {
    switch (kind) {
        case Kind::ProductTimesSphere:
            return degrees.size() == 1 ? 2 * abs_int(degrees[0]) : Int(0);
        case Kind::ConnectedSumTwo: {
            if (degrees.size() != 2) return Int(0);
            return 2 * gcd_int(degrees[0], degrees[1]);
        }
        case Kind::HopfPair:
            return Int(0);
    }
    return Int(0);
}

const MappingClassSchema& builtin_schema(const std::string& id) {
    auto it = schema_registry().find(id);
    if (it == schema_registry().end()) throw UnknownSchemaError("unknown schema '" + id + "'");
    return it->second;
}

std::vector<std::string> builtin_schema_ids() {
    std::vector<std::string> ids;
    for (const auto& [id, s] : schema_registry()) ids.push_back(id);
    return ids;
}

std::vector<Rat> classify_map(const ModelPair& pair, const DGAMap& phi) {
    const FreeCDGA& y = *builtin_model(pair.codomain).algebra;
    const FreeCDGA& x = *builtin_model(pair.domain).algebra;
    if (phi.source() != &y || phi.target() != &x)
        throw UnknownSchemaError("classify_map: map does not match the pair '" + pair.id + "'");
    std::string why;
    if (!phi.valid(&why)) throw ValidationError("classify_map: invalid map: " + why);

    auto coeff = [&](const Element& e, const std::string& monomial_text) {
        Element probe = parse_polynomial(x, monomial_text);
        return e.coefficient(probe.terms().empty() ? Monomial::unit()
                                                   : probe.terms().front().first);
    };

    if (pair.id == "s3xs4:s4") {
        Rat d = coeff(phi.image(*y.generator_index("a")), "y");
        Rat h = coeff(phi.image(*y.generator_index("b")), "x*y");
        return {d, h};
    }
    if (pair.id == "s3x(s4vs4):s4") {
        Rat a1 = coeff(phi.image(*y.generator_index("a")), "y1");
        Rat a2 = coeff(phi.image(*y.generator_index("a")), "y2");
        Rat b1 = coeff(phi.image(*y.generator_index("b")), "x*y1");
        Rat b2 = coeff(phi.image(*y.generator_index("b")), "x*y2");
        return {a1, a2, b1, b2};
    }
    if (pair.id == "hopf-pair") {
        Rat h = coeff(phi.image(*y.generator_index("b")), "x");
        return {h};
    }
    if (pair.id == "s3:s4") {
        return {};
    }
    throw UnknownSchemaError("classify_map: no schema for pair '" + pair.id + "'");
}

}  // namespace dgahom
