#include "dgahom/acceptance.hpp"
#include "dgahom/growth.hpp"
#include "dgahom/obstruction.hpp"
#include "dgahom/quant.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace dgahom;
using nlohmann::json;

namespace {

struct Options {
    std::string format = "json";
    std::string output;
    unsigned truncation = 8;
    std::uint64_t seed = 0;
};

void emit(const Options& opt, const json& j, const std::string& text_form,
          const std::string& csv_form = {}) {
    std::ostream* out = &std::cout;
    std::ofstream file;
    if (!opt.output.empty()) {
        file.open(opt.output);
        if (!file) throw ValidationError("cannot open output path '" + opt.output + "'");
        out = &file;
    }
    if (opt.format == "json")
        *out << j.dump(2) << "\n";
    else if (opt.format == "csv")
        *out << (csv_form.empty() ? text_form : csv_form) << "\n";
    else
        *out << text_form << "\n";
}

NamedModel resolve_model(const std::string& id, const std::string& file, unsigned truncation) {
    if (!file.empty()) {
        std::ifstream in(file);
        if (!in) throw ValidationError("cannot read model file '" + file + "'");
        std::stringstream buf;
        buf << in.rdbuf();
        return load_model(buf.str(), truncation, file);
    }
    if (id.empty()) throw ValidationError("a --model id or --model-file path is required");
    return builtin_model(id);
}

std::vector<Rat> parse_rat_list(const std::string& text) {
    std::vector<Rat> out;
    std::stringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        if (tok.empty()) continue;
        Int n, d = 1;
        auto slash = tok.find('/');
        if (slash == std::string::npos) {
            n = Int(tok);
        } else {
            n = Int(tok.substr(0, slash));
            d = Int(tok.substr(slash + 1));
        }
        out.emplace_back(n, d);
    }
    return out;
}

Rat parse_rat(const std::string& text) {
    auto v = parse_rat_list(text);
    if (v.size() != 1) throw ValidationError("expected one rational, got '" + text + "'");
    return v[0];
}

json rat_vec_json(const std::vector<Rat>& v) {
    json out = json::array();
    for (const auto& c : v) out.push_back(to_string(c));
    return out;
}

ZMatrix parse_zmatrix(const std::string& text, std::size_t rows, std::size_t cols) {
    ZMatrix m(rows, cols);
    if (rows == 0 || cols == 0) return m;
    std::stringstream in(text);
    std::string row;
    std::size_t i = 0;
    while (std::getline(in, row, ';')) {
        std::stringstream rs(row);
        std::string tok;
        std::size_t j = 0;
        while (std::getline(rs, tok, ',')) {
            if (tok.empty()) continue;
            if (i >= rows || j >= cols) throw ValidationError("boundary matrix shape mismatch");
            m.at(i, j) = Int(tok);
            ++j;
        }
        if (j != cols) throw ValidationError("boundary matrix row length mismatch");
        ++i;
    }
    if (i != rows) throw ValidationError("boundary matrix row count mismatch");
    return m;
}

// the staged extension frame used by `obstruct` and `extend`: h = identity on
// the domain model, constant homotopy, base map given by the literal
struct StagedProblem {
    NamedModel y;
    NamedModel x;
    ElementaryExtension ext;
    ObstructionProblem problem;
};

StagedProblem staged_problem(const NamedModel& y, const NamedModel& x, std::size_t stage,
                             const std::string& map_literal) {
    if (stage < 1 || stage > y.extension_order.size())
        throw ValidationError("stage must be in [1, " +
                              std::to_string(y.extension_order.size()) + "]");
    StagedProblem sp{y, x, ElementaryExtension::stage(*y.algebra, y.extension_order, stage - 1),
                     {}};
    const FreeCDGA& base = *sp.ext.base;
    DGAMap f = parse_map(base, *x.algebra, map_literal);
    std::string why;
    if (!f.valid(&why)) throw ValidationError("base map is not a homomorphism: " + why);
    // g extends h.f by deterministic antiderivatives when possible; the
    // obstruction machinery reports the class either way
    std::vector<Element> g_images = f.images();
    for (std::size_t i = 0; i < sp.ext.new_gen_indices.size(); ++i) {
        Element target = f.apply(sp.ext.diff_of_new(i));
        Element gw;
        try {
            gw = target.is_zero() ? x.algebra->zero() : solve_d(*x.algebra, target);
        } catch (const NotExactError&) {
            gw = x.algebra->zero();  // leaves a nonzero obstruction class
        }
        g_images.push_back(gw);
    }
    DGAMap g(sp.ext.extended.get(), x.algebra.get(), std::move(g_images));
    if (!g.valid(&why))
        throw NonzeroObstructionError(
            "no valid candidate extension exists over this stage (chain condition fails): " +
            why);
    sp.problem = ObstructionProblem{sp.ext, f, g, DGAMap::identity(*x.algebra),
                                    Homotopy::constant(f)};
    if (!sp.problem.valid(&why)) throw ValidationError("staged problem invalid: " + why);
    return sp;
}

int run(int argc, char** argv) {
    CLI::App app{"exact CDGA homotopy calculations: obstructions, representative spaces, and "
                 "mapping-class counts"};
    app.require_subcommand(1);

    Options opt;
    if (const char* env = std::getenv("DGAHOM_TRUNCATION")) opt.truncation = std::stoul(env);
    app.add_option("--format", opt.format, "output format: json, csv, or text")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
    app.add_option("--output", opt.output, "write the report to a file instead of stdout");
    app.add_option("--truncation", opt.truncation,
                   "truncation degree for models loaded from files")
        ->capture_default_str();
    app.add_option("--seed", opt.seed, "seed for randomized subcommands")->capture_default_str();

    // --- models ------------------------------------------------------------
    auto* models_cmd = app.add_subcommand("models", "list or show bundled models");
    auto* models_list = models_cmd->add_subcommand("list", "identifiers of models and schemas");
    std::string model_id, model_file;
    auto* models_show = models_cmd->add_subcommand("show", "print one model in the file format");
    models_show->add_option("--model", model_id, "built-in model id");
    models_show->add_option("--model-file", model_file, "path to a model file");

    // --- cohomology ----------------------------------------------------------
    auto* coh = app.add_subcommand("cohomology", "degree-wise cohomology of a model");
    std::string coh_model, coh_file;
    unsigned coh_degree = 0;
    coh->add_option("--model", coh_model, "built-in model id");
    coh->add_option("--model-file", coh_file, "path to a model file");
    coh->add_option("--degree", coh_degree, "cohomological degree")->required();

    // --- relcohomology ---------------------------------------------------------
    auto* rel = app.add_subcommand("relcohomology", "mapping-cone cohomology of a map literal");
    std::string rel_from, rel_to, rel_map;
    unsigned rel_degree = 0;
    rel->add_option("--from", rel_from, "source model id")->required();
    rel->add_option("--to", rel_to, "target model id")->required();
    rel->add_option("--map", rel_map, "map literal 'gen = poly; ...'")->required();
    rel->add_option("--degree", rel_degree, "cone degree")->required();

    // --- obstruct / extend -------------------------------------------------
    auto* obstruct_cmd =
        app.add_subcommand("obstruct", "obstruction class for extending over a stage");
    auto* extend_cmd =
        app.add_subcommand("extend", "extend a base map over a stage when unobstructed");
    std::string ob_y, ob_x, ob_map;
    std::size_t ob_stage = 2;
    for (auto* cmd : {obstruct_cmd, extend_cmd}) {
        cmd->add_option("--codomain-model", ob_y, "staged model being extended (Y)")->required();
        cmd->add_option("--domain-model", ob_x, "model mapped into (X)")->required();
        cmd->add_option("--map", ob_map, "base map literal on the earlier stages")->required();
        cmd->add_option("--stage", ob_stage, "extension stage, 1-based")->capture_default_str();
    }

    // --- homotopy-check -------------------------------------------------------
    auto* hck = app.add_subcommand("homotopy-check", "verify a homotopy literal");
    std::string hck_from, hck_to, hck_f, hck_g, hck_h;
    hck->add_option("--from", hck_from, "source model id")->required();
    hck->add_option("--to", hck_to, "target model id")->required();
    hck->add_option("--f", hck_f, "map literal for the t = 0 end")->required();
    hck->add_option("--g", hck_g, "map literal for the t = 1 end")->required();
    hck->add_option("--homotopy", hck_h, "interval map literal with t and dt")->required();

    // --- into-w ---------------------------------------------------------------
    auto* intow = app.add_subcommand("into-w", "homotope a map into the representative space");
    std::string iw_y, iw_x, iw_map;
    intow->add_option("--codomain-model", iw_y, "staged model (Y)")->required();
    intow->add_option("--domain-model", iw_x, "model mapped into (X)")->required();
    intow->add_option("--map", iw_map, "map literal M_Y -> M_X")->required();

    // --- classify ---------------------------------------------------------------
    auto* classify_cmd = app.add_subcommand("classify", "invariant tuple of a map literal");
    std::string cl_pair, cl_map;
    classify_cmd->add_option("--pair", cl_pair, "built-in pair id, e.g. s3xs4:s4")->required();
    classify_cmd->add_option("--map", cl_map, "map literal M_Y -> M_X")->required();

    // --- count -------------------------------------------------------------------
    auto* count_cmd = app.add_subcommand("count", "exact mapping-class counts");
    auto* count_torsion = count_cmd->add_subcommand("torsion", "fiber size over a degree");
    long ct_d = 1;
    count_torsion->add_option("--d", ct_d, "degree on the sphere factor")->required();
    auto* count_density = count_cmd->add_subcommand("density", "integral classes in a ball");
    long cd_a1 = 1, cd_a2 = 0;
    std::string cd_radius = "10";
    count_density->add_option("--alpha1", cd_a1)->required();
    count_density->add_option("--alpha2", cd_a2)->required();
    count_density->add_option("--radius", cd_radius)->required();
    auto* count_growth = count_cmd->add_subcommand("growth", "growth function value");
    long cg_d = 1;
    bool cg_oracle = false;
    count_growth->add_option("--D", cg_d, "parameter D = L^4")->required();
    count_growth->add_flag("--oracle", cg_oracle, "also run the direct enumeration");
    auto* count_gcd = count_cmd->add_subcommand("gcd", "gcd proportion against its bounds");
    long cgc_n = 10000, cgc_k = 1;
    count_gcd->add_option("--N", cgc_n)->required();
    count_gcd->add_option("--k", cgc_k)->required();

    // --- ballbound ------------------------------------------------------------------
    auto* bb = app.add_subcommand("ballbound", "polynomial class-count bound");
    std::string bb_dims = "";
    std::vector<std::string> bb_polys;
    std::string bb_radius = "1";
    bb->add_option("--dims", bb_dims, "per-stage cohomology dimensions, comma separated")
        ->required();
    bb->add_option("--poly", bb_polys,
                   "per-stage polynomial coefficients, constant first (repeatable)");
    bb->add_option("--radius", bb_radius, "ball radius R")->required();

    // --- fourlemma ---------------------------------------------------------------------
    auto* fl = app.add_subcommand("fourlemma", "quantitative four lemma tools");
    auto* fl_predict = fl->add_subcommand("predict", "evaluate the displayed constant");
    std::string fl_kind = "injective", fl_c1 = "1", fl_c2 = "1", fl_c3 = "1", fl_c4 = "1",
                fl_tau = "1";
    std::size_t fl_rk1 = 0, fl_rk2 = 0, fl_rk3 = 0;
    fl_predict->add_option("--kind", fl_kind)->check(CLI::IsMember({"injective", "surjective"}));
    fl_predict->add_option("--c1", fl_c1);
    fl_predict->add_option("--c2", fl_c2);
    fl_predict->add_option("--c3", fl_c3);
    fl_predict->add_option("--c4", fl_c4);
    fl_predict->add_option("--tau", fl_tau);
    fl_predict->add_option("--rk1", fl_rk1);
    fl_predict->add_option("--rk2", fl_rk2);
    fl_predict->add_option("--rk3", fl_rk3);
    auto* fl_verify = fl->add_subcommand("verify", "fuzz seeded diagrams against the constants");
    long fl_count = 500, fl_window = 20;
    fl_verify->add_option("--count", fl_count, "number of seeded diagrams")
        ->capture_default_str();
    fl_verify->add_option("--window", fl_window, "exhaustive search window")
        ->capture_default_str();

    // --- fto1-bound ------------------------------------------------------------------------
    auto* fto = app.add_subcommand("fto1-bound", "finite-to-one cohomology-order bound");
    std::string fto_cells;
    std::vector<std::string> fto_boundaries, fto_coeffs;
    fto->add_option("--cells", fto_cells, "cell counts per degree, comma separated")->required();
    fto->add_option("--boundary", fto_boundaries,
                    "boundary matrix per level: rows ';', entries ',' (repeatable)");
    fto->add_option("--coeffs", fto_coeffs,
                    "cyclic orders of the coefficient group per degree (repeatable, '' trivial)");

    // --- repro -------------------------------------------------------------------------------
    auto* repro = app.add_subcommand("repro", "reproduce a worked example end to end");
    std::string repro_which;
    repro->add_option("which", repro_which, "example1, example2, or example3")
        ->required()
        ->check(CLI::IsMember({"example1", "example2", "example3"}));

    CLI11_PARSE(app, argc, argv);

    if (*models_list) {
        json j;
        j["models"] = builtin_model_ids();
        json pairs = json::array();
        for (const auto& p : builtin_pairs())
            pairs.push_back({{"id", p.id}, {"domain", p.domain}, {"codomain", p.codomain}});
        j["pairs"] = pairs;
        j["schemas"] = builtin_schema_ids();
        std::ostringstream text;
        text << "models:";
        for (const auto& id : builtin_model_ids()) text << " " << id;
        text << "\npairs:";
        for (const auto& p : builtin_pairs()) text << " " << p.id;
        text << "\nschemas:";
        for (const auto& s : builtin_schema_ids()) text << " " << s;
        emit(opt, j, text.str());
        return 0;
    }
    if (*models_show) {
        NamedModel m = resolve_model(model_id, model_file, opt.truncation);
        json stages = json::array();
        for (const auto& st : m.extension_order) {
            json names = json::array();
            for (unsigned g : st.gen_indices) names.push_back(m.algebra->generators()[g].name);
            stages.push_back({{"degree", st.degree}, {"generators", names}});
        }
        json j{{"id", m.id},
               {"provenance", m.provenance},
               {"truncation", m.algebra->truncation_degree()},
               {"text", write_model(*m.algebra)},
               {"stages", stages}};
        emit(opt, j, write_model(*m.algebra));
        return 0;
    }
    if (*coh) {
        NamedModel m = resolve_model(coh_model, coh_file, opt.truncation);
        CohomologySpace h = cohomology(*m.algebra, coh_degree);
        json reps = json::array();
        for (const auto& r : h.representatives) reps.push_back(r.to_string());
        json j{{"model", m.id}, {"degree", coh_degree}, {"dimension", h.dimension},
               {"representatives", reps}};
        emit(opt, j,
             "dimension " + std::to_string(h.dimension) + " in degree " +
                 std::to_string(coh_degree));
        return 0;
    }
    if (*rel) {
        NamedModel y = resolve_model(rel_from, "", opt.truncation);
        NamedModel x = resolve_model(rel_to, "", opt.truncation);
        DGAMap phi = parse_map(*y.algebra, *x.algebra, rel_map);
        std::string why;
        if (!phi.valid(&why)) throw ValidationError("map literal is not a homomorphism: " + why);
        ConeCohomology h = relative_cohomology(phi, rel_degree);
        json reps = json::array();
        for (const auto& r : h.representatives)
            reps.push_back({{"top", r.top.to_string()}, {"bottom", r.bottom.to_string()}});
        json j{{"degree", rel_degree}, {"dimension", h.dimension}, {"representatives", reps}};
        emit(opt, j, "relative dimension " + std::to_string(h.dimension));
        return 0;
    }
    if (*obstruct_cmd || *extend_cmd) {
        NamedModel y = resolve_model(ob_y, "", opt.truncation);
        NamedModel x = resolve_model(ob_x, "", opt.truncation);
        StagedProblem sp = staged_problem(y, x, ob_stage, ob_map);
        ObstructionClass o = obstruction(sp.problem);
        if (*obstruct_cmd) {
            json classes = json::array();
            for (const auto& c : o.class_coords) classes.push_back(rat_vec_json(c));
            json j{{"degree", o.degree}, {"zero", o.zero()}, {"classes", classes}};
            emit(opt, j, o.zero() ? "obstruction vanishes" : "obstruction class is nonzero");
            return 0;
        }
        // extend: vanishing required
        Primitive prim = solve_primitive(sp.problem, o);  // throws NonzeroObstructionError
        ExtensionResult res = extend_with_primitive(sp.problem, prim);
        json j{{"map", write_map(res.f_tilde)},
               {"homotopy", write_homotopy(res.h_tilde)},
               {"verified", true}};
        emit(opt, j, write_map(res.f_tilde));
        return 0;
    }
    if (*hck) {
        NamedModel y = resolve_model(hck_from, "", opt.truncation);
        NamedModel x = resolve_model(hck_to, "", opt.truncation);
        DGAMap f = parse_map(*y.algebra, *x.algebra, hck_f);
        DGAMap g = parse_map(*y.algebra, *x.algebra, hck_g);
        Homotopy h = parse_homotopy(*y.algebra, *x.algebra, hck_h);
        std::string why;
        bool ok = is_homotopy(h, f, g, &why);
        json j{{"is_homotopy", ok}};
        if (!ok) j["why"] = why;
        emit(opt, j, ok ? "valid homotopy" : "not a homotopy: " + why);
        return 0;
    }
    if (*intow) {
        NamedModel y = resolve_model(iw_y, "", opt.truncation);
        NamedModel x = resolve_model(iw_x, "", opt.truncation);
        DGAMap phi = parse_map(*y.algebra, *x.algebra, iw_map);
        RepresentativeSpace w = construct_W(*x.algebra, y);
        HomotopeResult res = homotope_into_W(phi, w);
        json trace = json::array();
        for (const auto& t : res.trace)
            trace.push_back({{"degree", t.degree},
                             {"phi_norm", to_string(t.phi_norm)},
                             {"c_norm", to_string(t.c_norm)},
                             {"short_circuit", t.short_circuit}});
        json j{{"map", write_map(res.phi)}, {"trace", trace}, {"verified", true}};
        emit(opt, j, write_map(res.phi));
        return 0;
    }
    if (*classify_cmd) {
        const ModelPair& pair = builtin_pair(cl_pair);
        const NamedModel& y = builtin_model(pair.codomain);
        const NamedModel& x = builtin_model(pair.domain);
        DGAMap phi = parse_map(*y.algebra, *x.algebra, cl_map);
        auto tuple = classify_map(pair, phi);
        json j{{"pair", pair.id}, {"invariants", rat_vec_json(tuple)}};
        std::ostringstream text;
        for (const auto& c : tuple) text << to_string(c) << " ";
        emit(opt, j, text.str());
        return 0;
    }
    if (*count_torsion) {
        TorsionCount t = torsion_count(ct_d);
        json j;
        if (t.unbounded)
            j = {{"d", ct_d}, {"count", "unbounded"}};
        else
            j = {{"d", ct_d}, {"count", t.count.str()}};
        emit(opt, j, t.unbounded ? "unbounded" : t.count.str());
        return 0;
    }
    if (*count_density) {
        Int c = density_count(cd_a1, cd_a2, parse_rat(cd_radius));
        json j{{"alpha1", cd_a1}, {"alpha2", cd_a2}, {"radius", cd_radius},
               {"count", c.str()}};
        emit(opt, j, c.str());
        return 0;
    }
    if (*count_growth) {
        GrowthReport g = growth_count(cg_d, cg_oracle);
        json j = json::parse(growth_report_json(g));
        emit(opt, j, "count " + g.count.str(), growth_report_csv(g));
        return 0;
    }
    if (*count_gcd) {
        GcdProportion p = gcd_proportion_bounds(cgc_n, cgc_k);
        json j{{"N", cgc_n},
               {"k", cgc_k},
               {"observed", to_string(p.observed)},
               {"lower", to_string(p.lower)},
               {"upper", to_string(p.upper)},
               {"ok", p.ok}};
        emit(opt, j, to_string(p.observed) + (p.ok ? " within bounds" : " OUT OF BOUNDS"));
        return 0;
    }
    if (*bb) {
        BallBoundInput in;
        for (const auto& d : parse_rat_list(bb_dims))
            in.dims.push_back(static_cast<unsigned>(num(d).convert_to<long>()));
        for (const auto& p : bb_polys) in.polys.push_back(parse_rat_list(p));
        if (in.polys.empty()) in.polys.assign(in.dims.size(), {});
        in.radius = parse_rat(bb_radius);
        Rat bound = ball_count_bound(in);
        json j{{"radius", bb_radius}, {"bound", to_string(bound)}};
        emit(opt, j, to_string(bound));
        return 0;
    }
    if (*fl_predict) {
        FourLemmaKind kind =
            fl_kind == "injective" ? FourLemmaKind::Injective : FourLemmaKind::Surjective;
        Rat value = four_lemma_predict(kind, parse_rat(fl_c1), parse_rat(fl_c2),
                                       parse_rat(fl_c3), parse_rat(fl_c4), parse_rat(fl_tau),
                                       fl_rk1, fl_rk2, fl_rk3);
        json j{{"kind", fl_kind}, {"predicted", to_string(value)}};
        emit(opt, j, to_string(value));
        return 0;
    }
    if (*fl_verify) {
        long violations = 0, inconclusive = 0;
        json reports = json::array();
        for (long i = 0; i < fl_count; ++i) {
            QuadDiagram d = random_quad_diagram(opt.seed + static_cast<std::uint64_t>(i));
            for (FourLemmaKind kind : {FourLemmaKind::Injective, FourLemmaKind::Surjective}) {
                FourLemmaReport rep = four_lemma_verify(d, kind, fl_window);
                if (rep.inconclusive)
                    ++inconclusive;
                else if (!rep.ok)
                    ++violations;
                if (reports.size() < 4) reports.push_back(json::parse(four_lemma_report_json(rep)));
            }
        }
        json j{{"runs", fl_count},
               {"violations", violations},
               {"inconclusive", inconclusive},
               {"window", fl_window},
               {"seed", opt.seed},
               {"sample_reports", reports}};
        emit(opt, j,
             std::to_string(violations) + " violations, " + std::to_string(inconclusive) +
                 " inconclusive over " + std::to_string(fl_count) + " diagrams");
        return violations == 0 ? 0 : 2;
    }
    if (*fto) {
        CellComplexZ x;
        for (const auto& c : parse_rat_list(fto_cells))
            x.cells.push_back(static_cast<std::size_t>(num(c).convert_to<long>()));
        for (std::size_t k = 0; k + 1 < x.cells.size(); ++k) {
            std::string text = k < fto_boundaries.size() ? fto_boundaries[k] : "";
            x.boundary.push_back(parse_zmatrix(text, x.cells[k], x.cells[k + 1]));
        }
        std::vector<std::vector<Int>> coeffs;
        for (const auto& c : fto_coeffs) {
            std::vector<Int> orders;
            for (const auto& r : parse_rat_list(c)) orders.push_back(num(r));
            coeffs.push_back(orders);
        }
        Int bound = finite_to_one_bound(x, coeffs);
        json j{{"bound", bound.str()}};
        emit(opt, j, bound.str());
        return 0;
    }
    if (*repro) {
        int which = repro_which == "example1" ? 1 : repro_which == "example2" ? 2 : 3;
        auto results = acceptance::run_example(which);
        bool all = true;
        json lines = json::array();
        std::ostringstream text;
        for (const auto& r : results) {
            all = all && r.pass;
            lines.push_back({{"criterion", r.id},
                             {"name", r.name},
                             {"pass", r.pass},
                             {"seconds", r.seconds},
                             {"detail", r.detail}});
            text << acceptance::format_line(r) << "\n";
        }
        json j{{"example", repro_which}, {"pass", all}, {"criteria", lines}};
        emit(opt, j, text.str());
        return all ? 0 : 2;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const NotExactError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const NonzeroObstructionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const NotInWError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const DimensionTooLargeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const TPowerCapError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const InvalidProblemError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
