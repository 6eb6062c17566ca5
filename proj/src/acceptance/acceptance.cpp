#include "qcstar/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include "qcstar/algebra.hpp"
#include "qcstar/graph.hpp"
#include "qcstar/independence.hpp"
#include "qcstar/ktheory.hpp"
#include "qcstar/morphism.hpp"
#include "qcstar/oracle/oracles.hpp"
#include "qcstar/presentations.hpp"
#include "qcstar/representation.hpp"
#include "qcstar/sampling.hpp"

namespace qcstar {

namespace {

using Index = Eigen::Index;

struct Outcome {
    bool passed;
    std::string detail;
};

std::string sci(double x) {
    std::ostringstream out;
    out.precision(3);
    out << std::scientific << x;
    return out.str();
}

Outcome claim_k_groups(const AcceptanceConfig&) {
    struct Expect {
        const char* graph;
        AbelianGroup k0;
    };
    const Expect expected[] = {
        {"G1", AbelianGroup{2, {}}},
        {"G2", AbelianGroup{1, {}}},
        {"G3", AbelianGroup{1, {Integer(2)}}},
    };
    bool ok = true;
    std::ostringstream d;
    for (const auto& e : expected) {
        const KGroups k = k_groups(builtin_graph(e.graph));
        ok = ok && k.k0 == e.k0 && k.k1.is_trivial();
        d << e.graph << ": K0=" << k.k0.to_string() << " K1=" << k.k1.to_string() << "; ";
    }
    return {ok, d.str()};
}

Outcome claim_morphisms(const AcceptanceConfig&) {
    bool ok = true;
    std::ostringstream d;
    for (const char* name : {"F", "rp2-inclusion", "r1", "r2"}) {
        const auto start = std::chrono::steady_clock::now();
        const GeneratorMap m = named_morphism(name);
        const MorphismReport r = verify_morphism(m);
        bool good = r.valid() && m.star_compatible();
        if (m.is_endomorphism()) good = good && is_involutive(m);
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        good = good && secs < 1.0;
        ok = ok && good;
        std::size_t zero = 0;
        for (const auto& rel : r.relations) zero += rel.residue.is_zero() ? 1 : 0;
        d << name << ": " << zero << "/" << r.relations.size() << " zero";
        if (m.is_endomorphism()) d << (is_involutive(m) ? ", involutive" : ", NOT involutive");
        d << " (" << sci(secs) << " s); ";
    }
    return {ok, d.str()};
}

Outcome claim_residuals(const AcceptanceConfig& cfg) {
    bool ok = true;
    std::ostringstream d;
    struct Case {
        const char* rep;
        PresentationPtr pres;
    };
    const Case cases[] = {{"rho", rp2_presentation()}, {"pi_pm", sphere_presentation()}};
    for (const auto& c : cases) {
        RepParams hi{cfg.q, cfg.dim, 0.0};
        RepParams lo{cfg.q, cfg.dim / 2, 0.0};
        const ResidualReport rh = relation_residuals(*c.pres, build_rep(c.rep, hi));
        const ResidualReport rl = relation_residuals(*c.pres, build_rep(c.rep, lo));
        const bool bound = !rh.any_block_empty() && rh.max_residual() <= cfg.residual_tolerance;
        const bool decay = !rl.any_block_empty() && rl.max_residual() >= cfg.decay_factor * rh.max_residual() &&
                           rl.max_residual() > 0.0;
        ok = ok && bound && decay;
        d << c.rep << ": max residual N=" << hi.dim << " " << sci(rh.max_residual()) << (bound ? " ok" : " FAIL")
          << ", N=" << lo.dim << " " << sci(rl.max_residual()) << ", decay "
          << (decay ? "ok" : "FAIL") << "; ";
    }
    return {ok, d.str()};
}

Outcome claim_spectrum(const AcceptanceConfig& cfg) {
    const Representation rho = build_rep("rho", RepParams{cfg.q, cfg.dim, 0.0});
    std::vector<double> expected;
    for (Index k = 0; k < cfg.dim; ++k) expected.push_back(std::pow(cfg.q, 4.0 * static_cast<double>(k)));
    const SpectrumReport direct = spectrum_check(rho, "P", expected);

    const auto& p = *rho.presentation();
    const Element p1 = normal_form(p.generator("P") * p.one(), p);
    const DenseOperator m = evaluate(p1, rho);
    double dev = 0.0;
    bool diagonal = true;
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.cols(); ++j) {
            if (i == j)
                dev = std::max(dev, std::abs(m(i, i) - expected[static_cast<std::size_t>(i)]));
            else if (m(i, j) != Complex(0.0))
                diagonal = false;
        }
    const bool ok = direct.max_deviation == 0.0 && diagonal && dev <= cfg.spectrum_tolerance;
    return {ok, "construction deviation " + sci(direct.max_deviation) + ", after normal form " + sci(dev) +
                    (diagonal ? "" : ", not diagonal")};
}

Outcome claim_independence(const AcceptanceConfig& cfg) {
    IndependenceOptions opts;
    opts.q = cfg.q;
    opts.n_max = cfg.n_max;
    opts.trials = cfg.recovery_trials;
    opts.seed = cfg.seed;
    opts.rank_threshold = cfg.rank_threshold;
    const auto monomials = basis_family(cfg.k_max, cfg.l_max);
    const IndependenceReport r = independence_check(monomials, opts);
    const bool ok = r.full_rank() && r.trials == cfg.recovery_trials && r.max_recovery_error <= cfg.recovery_tolerance;
    return {ok, "rank " + std::to_string(r.rank) + "/" + std::to_string(r.monomials) + ", sigma_min/sigma_max " +
                    sci(r.smallest_singular_value / r.largest_singular_value) + ", max recovery error " +
                    sci(r.max_recovery_error) + " over " + std::to_string(r.trials) + " vectors"};
}

Outcome claim_snf(const AcceptanceConfig& cfg) {
    std::mt19937_64 rng(cfg.seed);
    std::uniform_int_distribution<int> dim(1, 4), entry(-4, 4);
    std::size_t failures = 0, enumerated = 0;
    for (std::size_t t = 0; t < cfg.snf_samples; ++t) {
        const Index rows = dim(rng), cols = dim(rng);
        IntegerMatrix m(rows, cols);
        for (Index i = 0; i < rows; ++i)
            for (Index j = 0; j < cols; ++j) m(i, j) = entry(rng);
        const SNFResult r = smith_normal_form(m);
        bool ok = IntegerMatrix(r.U * m * r.V) == r.S;
        ok = ok && abs(oracle::determinant(r.U)) == 1 && abs(oracle::determinant(r.V)) == 1;
        for (Index i = 0; i < rows; ++i)
            for (Index j = 0; j < cols; ++j)
                if (i != j && r.S(i, j) != 0) ok = false;
        const auto diag = r.diagonal();
        for (std::size_t i = 0; i < diag.size(); ++i) {
            if (diag[i] < 0) ok = false;
            if (i + 1 < diag.size() && diag[i] != 0 && diag[i + 1] % diag[i] != 0) ok = false;
            if (i + 1 < diag.size() && diag[i] == 0 && diag[i + 1] != 0) ok = false;
        }
        const AbelianGroup coker = cokernel(m);
        ok = ok && coker.torsion_order() == oracle::torsion_order_by_minors(m);
        ok = ok && coker.free_rank == rows - oracle::rank_by_minors(m);
        if (auto by_cosets = oracle::torsion_order_by_cosets(m)) {
            ++enumerated;
            ok = ok && *by_cosets == coker.torsion_order();
        }
        failures += ok ? 0 : 1;
    }
    return {failures == 0, std::to_string(cfg.snf_samples - failures) + "/" + std::to_string(cfg.snf_samples) +
                               " matrices pass; " + std::to_string(enumerated) + " also checked by coset enumeration"};
}

struct SoundnessCase {
    const char* rep;
    PresentationPtr pres;
};

Outcome claim_soundness(const AcceptanceConfig& cfg) {
    const SoundnessCase cases[] = {
        {"pi_pm", sphere_presentation()},
        {"pi_disc", disc_presentation(1)},
        {"rho", rp2_presentation()},
        {"rho_pm", suq2_mod_b_presentation()},
    };
    bool ok = true;
    std::ostringstream d;
    std::mt19937_64 rng(cfg.seed);
    for (const auto& c : cases) {
        const AlgebraPresentation& p = *c.pres;
        // Normal forms carry coefficients like q^-12 whose cancellations lose
        // more digits than double has; the comparison runs in HighPrecision.
        const auto rep = build_rep<HighPrecision>(c.rep, RepParams{cfg.q, cfg.dim, 0.0});
        std::size_t idem_fail = 0, star_fail = 0, family_fail = 0, short_block = 0;
        double worst = 0.0;
        for (std::size_t t = 0; t < cfg.element_samples; ++t) {
            const Element x = random_element(p, rng);
            const Element nf = normal_form(x, p);
            if (normal_form(nf, p) != nf) ++idem_fail;
            if (normal_form(involution(normal_form(involution(x), p)), p) != nf) ++star_fail;
            for (const auto& [w, coeff] : nf.terms())
                if (!p.is_normal_monomial(w)) ++family_fail;
            const auto idx = rep.compressed_indices(margin_for_degree(rep, x.degree()));
            if (idx.empty()) {
                ++short_block;
                continue;
            }
            const BasicDenseOperator<HighPrecision> gap = evaluate(x, rep) - evaluate(nf, rep);
            worst = std::max(worst, max_abs_on(gap, idx));
        }
        const bool good = idem_fail == 0 && star_fail == 0 && family_fail == 0 && short_block == 0 &&
                          worst <= cfg.soundness_tolerance;
        ok = ok && good;
        d << p.name() << "/" << c.rep << ": eval gap " << sci(worst);
        if (idem_fail) d << ", " << idem_fail << " not idempotent";
        if (star_fail) d << ", " << star_fail << " star mismatches";
        if (family_fail) d << ", " << family_fail << " off-family monomials";
        if (short_block) d << ", " << short_block << " with no compressed block";
        d << "; ";
    }
    return {ok, d.str()};
}

Outcome claim_ideals(const AcceptanceConfig&) {
    const auto g1 = hereditary_saturated_sets(builtin_graph("G1"));
    const auto g2 = hereditary_saturated_sets(builtin_graph("G2"));
    const auto g3 = hereditary_saturated_sets(builtin_graph("G3"));
    const bool iso = inclusion_posets_isomorphic(g2, g3);
    const bool ok = g1.size() == 5 && g2.size() == 3 && g3.size() == 3 && iso;
    return {ok, "G1: " + std::to_string(g1.size()) + ", G2: " + std::to_string(g2.size()) +
                    ", G3: " + std::to_string(g3.size()) + " sets; G2 ~ G3 " + (iso ? "yes" : "no")};
}

Outcome claim_fixed_points(const AcceptanceConfig& cfg) {
    const auto sphere = sphere_presentation();
    const GeneratorMap r1 = morphism_r1(), r2 = morphism_r2();
    auto k_degree = [](const Word& w) { return std::count(w.begin(), w.end(), Symbol{0}); };  // K
    auto even_k = [&](const Word& w) { return k_degree(w) % 2 == 0; };
    auto even_total = [](const Word& w) { return w.size() % 2 == 0; };

    std::mt19937_64 rng(cfg.seed);
    std::size_t disagree = 0, fixed1 = 0, fixed2 = 0;
    for (std::size_t t = 0; t < cfg.element_samples; ++t) {
        // Thirds: even K-degree words, even length words, unrestricted.
        std::function<bool(const Word&)> keep;
        if (t % 3 == 0) keep = even_k;
        if (t % 3 == 1) keep = even_total;
        const Element x = random_element(*sphere, rng, {}, keep);
        const Element nf = normal_form(x, *sphere);
        bool pred1 = true, pred2 = true;
        for (const auto& [w, c] : nf.terms()) {
            pred1 = pred1 && even_k(w);
            pred2 = pred2 && even_total(w);
        }
        const bool f1 = is_fixed(r1, x), f2 = is_fixed(r2, x);
        fixed1 += f1 ? 1 : 0;
        fixed2 += f2 ? 1 : 0;
        if (f1 != pred1 || f2 != pred2) ++disagree;
    }
    return {disagree == 0, std::to_string(cfg.element_samples - disagree) + "/" +
                               std::to_string(cfg.element_samples) + " agree (" + std::to_string(fixed1) +
                               " r1-fixed, " + std::to_string(fixed2) + " r2-fixed)"};
}

struct ClaimSpec {
    const char* title;
    double time_limit;
    Outcome (*run)(const AcceptanceConfig&);
};

const ClaimSpec kClaims[] = {
    {"K-groups of G1, G2, G3", 0.1, claim_k_groups},
    {"morphisms F, rp2-inclusion, r1, r2 respect all relations", 4.0, claim_morphisms},
    {"relation residuals of rho and pi_+ + pi_-, and decay", 5.0, claim_residuals},
    {"spectrum of rho(P)", 5.0, claim_spectrum},
    {"basis independence by Vandermonde recovery", 10.0, claim_independence},
    {"Smith normal form property suite", 10.0, claim_snf},
    {"rewriting soundness suite", 30.0, claim_soundness},
    {"hereditary saturated lattices", 1.0, claim_ideals},
    {"fixed points of r1 and r2", 30.0, claim_fixed_points},
};

}  // namespace

ClaimResult run_claim(int id, const AcceptanceConfig& config) {
    if (id < 1 || id > 9) throw std::out_of_range("claim id must be 1..9");
    const ClaimSpec& spec = kClaims[id - 1];
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
        out = spec.run(config);
    } catch (const std::exception& e) {
        out = {false, std::string("error: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < spec.time_limit;
    if (!in_time) out.detail += " [over time limit]";
    return ClaimResult{id, spec.title, out.passed && in_time, out.detail, secs, spec.time_limit};
}

std::vector<ClaimResult> run_acceptance(const AcceptanceConfig& config) {
    std::vector<ClaimResult> out;
    for (int id = 1; id <= 9; ++id) out.push_back(run_claim(id, config));
    return out;
}

}  // namespace qcstar
