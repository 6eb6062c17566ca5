#include "qcstar/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "qcstar/acceptance.hpp"
#include "qcstar/expression.hpp"
#include "qcstar/graph.hpp"
#include "qcstar/independence.hpp"
#include "qcstar/ktheory.hpp"
#include "qcstar/morphism.hpp"
#include "qcstar/presentations.hpp"
#include "qcstar/representation.hpp"

namespace qcstar {

namespace {

using json = nlohmann::ordered_json;

constexpr const char* kSchema = "qcstar/1";

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// 12 significant digits, so identical runs print identical bytes.
double round12(double x) {
    if (!std::isfinite(x) || x == 0.0) return x;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return std::strtod(buf, nullptr);
}

json group_json(const AbelianGroup& g) {
    json torsion = json::array();
    for (const auto& d : g.torsion) torsion.push_back(d.convert_to<long long>());
    return json{{"free_rank", g.free_rank}, {"torsion", torsion}};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open '" + path + "': file not found");
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

Graph load_graph(const std::string& path, const std::string& builtin) {
    if (!builtin.empty() && !path.empty()) throw UsageError("give either a graph file or --builtin, not both");
    if (!builtin.empty()) return builtin_graph(builtin);
    if (path.empty()) throw UsageError("a graph file or --builtin is required");
    return parse_graph(read_file(path));
}

Rational parse_rational(const std::string& text) {
    try {
        return Rational(text);
    } catch (const std::exception&) {
        throw UsageError("not a rational number: '" + text + "'");
    }
}

struct Options {
    std::string format = "json";
    std::uint64_t seed = 0;

    std::string graph_file;
    std::string builtin;

    std::string algebra = "sphere";
    bool algebra_given = false;
    std::string s_param;
    std::string expr;
    std::string morphism;

    std::string rep = "rho";
    std::string generator = "P";
    double q = 0.5;
    long dim = 64;
    double theta = 0.0;
    double tolerance = -1.0;

    int kmax = 3;
    int lmax = 3;
    int nmax = 40;
    std::size_t trials = 100;
};

void emit(std::ostream& out, const Options& o, const json& j, const std::string& plain) {
    if (o.format == "plain")
        out << plain << '\n';
    else
        out << j.dump(2) << '\n';
}

json with_schema(json j) {
    json out{{"schema", kSchema}};
    for (auto& [k, v] : j.items()) out[k] = v;
    return out;
}

int cmd_graph_validate(const Options& o, std::ostream& out) {
    const Graph g = load_graph(o.graph_file, o.builtin);
    json edges = json::array();
    for (const auto& e : g.edges())
        edges.push_back({{"name", e.name}, {"source", g.vertices()[e.source]}, {"range", g.vertices()[e.range]}});
    emit(out, o, with_schema({{"valid", true}, {"vertices", g.vertices()}, {"edges", edges}}),
         "valid: " + std::to_string(g.vertex_count()) + " vertices, " + std::to_string(g.edge_count()) + " edges");
    return kExitOk;
}

int cmd_graph_ideals(const Options& o, std::ostream& out) {
    const Graph g = load_graph(o.graph_file, o.builtin);
    json sets = json::array();
    std::ostringstream plain;
    for (const auto& h : hereditary_saturated_sets(g)) {
        const auto names = vertex_names(g, h);
        sets.push_back(names);
        plain << "{";
        for (std::size_t i = 0; i < names.size(); ++i) plain << (i ? ", " : "") << names[i];
        plain << "}\n";
    }
    emit(out, o, with_schema({{"ideals", sets}}), plain.str());
    return kExitOk;
}

int cmd_ktheory(const Options& o, std::ostream& out) {
    const Graph g = load_graph(o.graph_file, o.builtin);
    const KGroups k = k_groups(g);
    emit(out, o, with_schema({{"k0", group_json(k.k0)}, {"k1", group_json(k.k1)}}),
         "K0 = " + k.k0.to_string() + "\nK1 = " + k.k1.to_string());
    return kExitOk;
}

PresentationPtr chosen_presentation(const Options& o) {
    PresentationParams params;
    if (!o.s_param.empty()) params.s = parse_rational(o.s_param);
    try {
        return presentation(o.algebra, params);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

Element parse_expr(const Options& o, const AlgebraPresentation& p) {
    try {
        return parse_element(o.expr, p.alphabet());
    } catch (const ExpressionError& e) {
        throw UsageError(std::string("expression: ") + e.what());
    }
}

int cmd_algebra_nf(const Options& o, std::ostream& out) {
    const PresentationPtr p = chosen_presentation(o);
    const Element x = parse_expr(o, *p);
    const Element nf = normal_form(x, *p);
    emit(out, o, with_schema({{"algebra", p->name()}, {"input", x.to_string()}, {"normal_form", nf.to_string()}}),
         nf.to_string());
    return kExitOk;
}

GeneratorMap chosen_morphism(const Options& o) {
    try {
        return named_morphism(o.morphism);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

int cmd_algebra_verify(const Options& o, std::ostream& out) {
    const GeneratorMap m = chosen_morphism(o);
    const MorphismReport r = verify_morphism(m);
    json rels = json::array();
    std::ostringstream plain;
    for (const auto& rel : r.relations) {
        rels.push_back({{"relation", rel.relation}, {"residue", rel.residue.to_string()}, {"zero", rel.residue.is_zero()}});
        plain << (rel.residue.is_zero() ? "ok    " : "FAIL  ") << rel.relation << "   residue " << rel.residue.to_string()
              << '\n';
    }
    json j{{"morphism", m.name()},
           {"source", m.source()->name()},
           {"target", m.target()->name()},
           {"relations", rels},
           {"star_compatible", m.star_compatible()},
           {"valid", r.valid()}};
    if (m.is_endomorphism()) j["involutive"] = is_involutive(m);
    emit(out, o, with_schema(j), plain.str() + (r.valid() ? "valid" : "INVALID"));
    return r.valid() && m.star_compatible() ? kExitOk : kExitCheckFailed;
}

int cmd_algebra_fixed(const Options& o, std::ostream& out) {
    const GeneratorMap m = chosen_morphism(o);
    if (!m.is_endomorphism()) throw UsageError(m.name() + " is not an automorphism");
    const Element x = parse_expr(o, *m.source());
    const bool fixed = is_fixed(m, x);
    emit(out, o,
         with_schema({{"morphism", m.name()},
                      {"element", normal_form(x, *m.source()).to_string()},
                      {"image", apply_morphism(m, x).to_string()},
                      {"fixed", fixed}}),
         fixed ? "fixed" : "not fixed");
    return kExitOk;
}

Representation chosen_rep(const Options& o) {
    try {
        return build_rep(o.rep, RepParams{o.q, o.dim, o.theta});
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

int cmd_rep_residuals(const Options& o, std::ostream& out) {
    const Representation r = chosen_rep(o);
    const PresentationPtr p = o.algebra_given ? chosen_presentation(o) : r.presentation();
    if (!(*p->alphabet() == *r.presentation()->alphabet()))
        throw UsageError("representation " + r.name() + " is not over algebra " + p->name());
    const double tol = o.tolerance >= 0 ? o.tolerance : 1e-10;
    const ResidualReport rep = relation_residuals(*p, r);
    json rels = json::array();
    std::ostringstream plain;
    for (const auto& rel : rep.relations) {
        rels.push_back({{"relation", rel.relation},
                        {"residual", round12(rel.residual)},
                        {"margin", rel.margin},
                        {"block_empty", rel.block_empty}});
        plain << std::setw(12) << std::scientific << std::setprecision(3) << rel.residual << "  " << rel.relation << '\n';
    }
    const bool pass = !rep.any_block_empty() && rep.max_residual() <= tol;
    emit(out, o,
         with_schema({{"algebra", p->name()},
                      {"representation", r.name()},
                      {"q", round12(o.q)},
                      {"dim", r.dim()},
                      {"tolerance", tol},
                      {"relations", rels},
                      {"max_residual", round12(rep.max_residual())},
                      {"pass", pass}}),
         plain.str() + (pass ? "pass" : "FAIL"));
    return pass ? kExitOk : kExitCheckFailed;
}

int cmd_rep_spectrum(const Options& o, std::ostream& out) {
    const Representation r = chosen_rep(o);
    std::vector<double> expected;
    try {
        diagonal_of(r, o.generator);
    } catch (const NonDiagonalGenerator& e) {
        throw UsageError(e.what());
    } catch (const AlgebraError& e) {
        throw UsageError(e.what());
    }
    try {
        expected = expected_spectrum(r.name(), o.generator, o.q, r.dim());
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const SpectrumReport s = spectrum_check(r, o.generator, expected);
    const double tol = o.tolerance >= 0 ? o.tolerance : 1e-12;
    json diag = json::array();
    for (double d : s.diagonal) diag.push_back(round12(d));
    const bool pass = s.max_deviation <= tol;
    emit(out, o,
         with_schema({{"representation", r.name()},
                      {"generator", o.generator},
                      {"q", round12(o.q)},
                      {"diagonal", diag},
                      {"max_deviation", round12(s.max_deviation)},
                      {"pass", pass}}),
         "max deviation " + std::to_string(s.max_deviation) + (pass ? " pass" : " FAIL"));
    return pass ? kExitOk : kExitCheckFailed;
}

int cmd_rep_independence(const Options& o, std::ostream& out) {
    IndependenceOptions opts;
    opts.q = o.q;
    opts.n_max = o.nmax;
    opts.trials = o.trials;
    opts.seed = o.seed;
    const double tol = o.tolerance >= 0 ? o.tolerance : 1e-8;
    const auto monomials = basis_family(o.kmax, o.lmax);
    IndependenceReport r;
    try {
        r = independence_check(monomials, opts);
    } catch (const InsufficientIndexBound& e) {
        throw UsageError(e.what());
    }
    const bool pass = r.full_rank() && r.max_recovery_error <= tol;
    emit(out, o,
         with_schema({{"monomials", r.monomials},
                      {"rank", r.rank},
                      {"largest_singular_value", round12(r.largest_singular_value)},
                      {"smallest_singular_value", round12(r.smallest_singular_value)},
                      {"trials", r.trials},
                      {"max_recovery_error", round12(r.max_recovery_error)},
                      {"pass", pass}}),
         "rank " + std::to_string(r.rank) + "/" + std::to_string(r.monomials) + ", recovery error " +
             std::to_string(r.max_recovery_error) + (pass ? " pass" : " FAIL"));
    return pass ? kExitOk : kExitCheckFailed;
}

int cmd_reproduce(const Options& o, std::ostream& out) {
    AcceptanceConfig cfg;
    cfg.q = o.q;
    cfg.dim = o.dim;
    cfg.seed = o.seed;
    const auto results = run_acceptance(cfg);
    bool all = true;
    json claims = json::array();
    std::ostringstream plain;
    for (const auto& c : results) {
        all = all && c.passed;
        claims.push_back({{"id", c.id}, {"claim", c.title}, {"status", c.passed ? "PASS" : "FAIL"}, {"detail", c.detail}});
        plain << (c.passed ? "PASS " : "FAIL ") << c.id << ". " << c.title << "  [" << c.detail << "]  "
              << std::fixed << std::setprecision(3) << c.seconds << " s\n";
    }
    emit(out, o, with_schema({{"q", round12(o.q)}, {"dim", o.dim}, {"seed", o.seed}, {"claims", claims}, {"pass", all}}),
         plain.str());
    return all ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    if (const char* env = std::getenv("QCSTAR_SEED")) {
        try {
            o.seed = std::stoull(env);
        } catch (const std::exception&) {
            err << "QCSTAR_SEED is not an unsigned integer\n";
            return kExitUsage;
        }
    }

    CLI::App app{"Graph C*-algebra K-theory and quantum-space algebra toolkit", "qcstar"};
    app.require_subcommand(1);
    app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "plain"}));
    app.add_option("--seed", o.seed, "seed for random checks (env QCSTAR_SEED)");

    auto add_graph_input = [&o](CLI::App* c) {
        c->add_option("file", o.graph_file, "graph DSL file");
        c->add_option("--builtin", o.builtin, "built-in graph G1, G2 or G3");
    };
    auto add_numeric = [&o](CLI::App* c) {
        c->add_option("--q", o.q, "deformation parameter in (0, 1)");
        c->add_option("--dim", o.dim, "truncation dimension");
    };

    auto* graph = app.add_subcommand("graph", "graph utilities");
    graph->require_subcommand(1);
    auto* g_validate = graph->add_subcommand("validate", "parse and validate a graph");
    add_graph_input(g_validate);
    auto* g_ideals = graph->add_subcommand("ideals", "hereditary saturated vertex sets");
    add_graph_input(g_ideals);

    auto* kt = app.add_subcommand("ktheory", "K-groups of a graph C*-algebra");
    add_graph_input(kt);

    auto* algebra = app.add_subcommand("algebra", "exact *-algebra computations");
    algebra->require_subcommand(1);
    auto* a_nf = algebra->add_subcommand("nf", "normal form of an expression");
    a_nf->add_option("--algebra", o.algebra, "sphere, disc, rp2 or suq2_mod_b");
    a_nf->add_option("--s", o.s_param, "sphere parameter, rational in [0, 1]");
    a_nf->add_option("--expr", o.expr, "element expression")->required();
    auto* a_verify = algebra->add_subcommand("verify-morphism", "check a morphism against every relation");
    a_verify->add_option("--name", o.morphism, "F, r1, r2, rp2-inclusion or disc-embedding")->required();
    auto* a_fixed = algebra->add_subcommand("fixed", "is an element fixed by an automorphism");
    a_fixed->add_option("--name", o.morphism, "r1 or r2")->required();
    a_fixed->add_option("--expr", o.expr, "element expression")->required();

    auto* rep = app.add_subcommand("rep", "truncated representations");
    rep->require_subcommand(1);
    auto* r_res = rep->add_subcommand("residuals", "relation residuals on the compressed block");
    r_res->add_option("--algebra", o.algebra, "presentation the relations come from");
    r_res->add_option("--rep", o.rep, "representation name");
    r_res->add_option("--theta", o.theta, "angle for rho_theta");
    r_res->add_option("--tol", o.tolerance, "residual tolerance");
    add_numeric(r_res);
    auto* r_spec = rep->add_subcommand("spectrum", "diagonal of a diagonal generator");
    r_spec->add_option("--rep", o.rep, "representation name");
    r_spec->add_option("--generator", o.generator, "generator name");
    r_spec->add_option("--tol", o.tolerance, "deviation tolerance");
    add_numeric(r_spec);
    auto* r_ind = rep->add_subcommand("independence", "rank and coefficient recovery for basis monomials");
    r_ind->add_option("--kmax", o.kmax);
    r_ind->add_option("--lmax", o.lmax);
    r_ind->add_option("--nmax", o.nmax);
    r_ind->add_option("--q", o.q);
    r_ind->add_option("--trials", o.trials);
    r_ind->add_option("--tol", o.tolerance, "recovery tolerance");

    auto* reproduce = app.add_subcommand("reproduce-paper", "run every acceptance claim");
    add_numeric(reproduce);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    }
    o.algebra_given = a_nf->count("--algebra") > 0 || r_res->count("--algebra") > 0;

    try {
        if (g_validate->parsed()) return cmd_graph_validate(o, out);
        if (g_ideals->parsed()) return cmd_graph_ideals(o, out);
        if (kt->parsed()) return cmd_ktheory(o, out);
        if (a_nf->parsed()) return cmd_algebra_nf(o, out);
        if (a_verify->parsed()) return cmd_algebra_verify(o, out);
        if (a_fixed->parsed()) return cmd_algebra_fixed(o, out);
        if (r_res->parsed()) return cmd_rep_residuals(o, out);
        if (r_spec->parsed()) return cmd_rep_spectrum(o, out);
        if (r_ind->parsed()) return cmd_rep_independence(o, out);
        if (reproduce->parsed()) return cmd_reproduce(o, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const GraphParseError& e) {
        err << "graph parse error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitCheckFailed;
    }
    err << "no command given\n";
    return kExitUsage;
}

}  // namespace qcstar
