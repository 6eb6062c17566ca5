#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include <Eigen/SVD>

#include "qcstar/expression.hpp"
#include "qcstar/representation.hpp"
#include "qcstar/sampling.hpp"

using namespace qcstar;

namespace {

Element el(const char* text, const Representation& r) { return parse_element(text, r.presentation()->alphabet()); }

Complex entry(const Element& x, const Representation& r, Eigen::Index row, Eigen::Index col) {
    return evaluate(x, r)(row, col);
}

}  // namespace

TEST_CASE("rho on the first basis vectors") {
    const Representation rho = build_rep("rho", RepParams{0.5, 16, 0.0});
    const DenseOperator P = evaluate(el("P", rho), rho);
    CHECK(P(0, 0) == Complex(1.0));
    CHECK(evaluate(el("R", rho), rho).col(1).norm() == 0.0);
    const DenseOperator T = evaluate(el("T", rho), rho);
    CHECK(T(0, 1).real() == doctest::Approx(0.968245836).epsilon(1e-9));
    CHECK(T.col(1).norm() == doctest::Approx(std::abs(T(0, 1))));
}

TEST_CASE("rho_theta is a character") {
    const double theta = 0.7;
    const Representation r = build_rep("rho_theta", RepParams{0.5, 64, theta});
    CHECK(r.dim() == 1);
    CHECK(entry(el("P", r), r, 0, 0) == Complex(0.0));
    CHECK(entry(el("T", r), r, 0, 0) == Complex(0.0));
    CHECK(std::abs(entry(el("R", r), r, 0, 0) - std::polar(1.0, theta)) < 1e-15);
    CHECK(std::abs(entry(el("R* R", r), r, 0, 0) - 1.0) < 1e-15);
    CHECK(relation_residuals(*rp2_presentation(), r).max_residual() < 1e-15);
    // Distinct angles give distinct characters.
    const Representation other = build_rep("rho_theta", RepParams{0.5, 64, theta + 1.0});
    CHECK(std::abs(entry(el("R", r), r, 0, 0) - entry(el("R", other), other, 0, 0)) > 0.1);
    CHECK_THROWS_AS(build_rep<HighPrecision>("rho_theta"), std::invalid_argument);
}

TEST_CASE("evaluation basics") {
    const Representation rho = build_rep("rho", RepParams{0.5, 12, 0.0});
    CHECK(evaluate(el("1", rho), rho).isApprox(DenseOperator::Identity(12, 12)));
    CHECK(evaluate(el("P - P", rho), rho).norm() == 0.0);

    const Representation pi = build_rep("pi_plus", RepParams{0.5, 4, 0.0});
    const DenseOperator K = evaluate(el("K", pi), pi);
    const double want[] = {1.0, 0.25, 0.0625, 0.015625};
    for (Eigen::Index k = 0; k < 4; ++k) CHECK(K(k, k).real() == doctest::Approx(want[k]).epsilon(1e-15));
    CHECK((K - DenseOperator(K.diagonal().asDiagonal())).norm() == 0.0);

    CHECK_THROWS_AS(evaluate(rp2_presentation()->generator("P"), pi), AlgebraError);
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(build_rep("rho", RepParams{1.0, 16, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(build_rep("rho", RepParams{0.0, 16, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(build_rep("rho", RepParams{0.5, 2, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(build_rep("rho_zero"), std::invalid_argument);
}

TEST_CASE("relation residuals on the compressed block") {
    for (const char* name : {"rho", "pi_pm", "pi_plus", "pi_minus", "rho_pm", "pi_disc"}) {
        CAPTURE(name);
        const Representation r = build_rep(name, RepParams{0.5, 64, 0.0});
        const ResidualReport report = relation_residuals(*r.presentation(), r);
        CHECK(report.max_residual() <= 1e-10);
        CHECK_FALSE(report.any_block_empty());
    }
    const Representation pm = build_rep("pi_pm");
    CHECK(relation_residuals(*sphere_presentation(), pm).relations.size() == sphere_presentation()->rules().size());
    CHECK_THROWS_AS(relation_residuals(*rp2_presentation(), pm), AlgebraError);
}

TEST_CASE("a generator and its adjoint are conjugate transposes away from the boundary") {
    for (const char* name : {"rho", "pi_pm", "rho_pm", "pi_disc"}) {
        CAPTURE(name);
        const Representation r = build_rep(name, RepParams{0.5, 24, 0.0});
        const auto& a = *r.presentation()->alphabet();
        const auto idx = r.compressed_indices(r.shift_bound());
        for (Symbol s = 0; s < static_cast<Symbol>(a.size()); ++s) {
            const DenseOperator m = DenseOperator(r.image(s));
            const DenseOperator ms = DenseOperator(r.image(a.star(s)));
            CHECK(max_abs_on(DenseOperator(ms - m.adjoint()), idx) < 1e-15);
        }
    }
}

TEST_CASE("adjoint consistency for random elements") {
    std::mt19937_64 rng(4);
    SampleOptions opts;
    opts.max_degree = 4;
    for (const char* name : {"rho", "pi_pm"}) {
        const Representation r = build_rep(name, RepParams{0.5, 32, 0.0});
        for (int t = 0; t < 40; ++t) {
            const Element x = random_element(*r.presentation(), rng, opts);
            const auto idx = r.compressed_indices(margin_for_degree(r, x.degree()));
            const DenseOperator gap = evaluate(involution(x), r) - evaluate(x, r).adjoint();
            CHECK(max_abs_on(gap, idx) < 1e-12);
        }
    }
}

TEST_CASE("compressed block and margins") {
    const Representation pm = build_rep("pi_pm", RepParams{0.5, 10, 0.0});
    CHECK(pm.shift_bound() == 1);
    CHECK(pm.blocks().size() == 2);
    CHECK(pm.compressed_indices(3).size() == 14);
    CHECK(pm.compressed_indices(3).back() == 16);
    const Representation rho = build_rep("rho", RepParams{0.5, 10, 0.0});
    CHECK(rho.shift_bound() == 2);
    CHECK(margin_for_degree(rho, 1) == 2);
    CHECK(margin_for_degree(rho, 2) == 2);
    CHECK(margin_for_degree(rho, 6) == 10);
    CHECK(rho.compressed_indices(10).empty());
}

TEST_CASE("spectra of the diagonal generators") {
    const double q = 0.5;
    const Representation rho = build_rep("rho", RepParams{q, 32, 0.0});
    CHECK(spectrum_check(rho, "P", expected_spectrum("rho", "P", q, 32)).max_deviation == 0.0);

    const Representation plus = build_rep("rho_plus", RepParams{q, 16, 0.0});
    const SpectrumReport sp = spectrum_check(plus, "b", expected_spectrum("rho_plus", "b", q, 16));
    CHECK(sp.max_deviation == 0.0);
    for (double d : sp.diagonal) CHECK(d > 0.0);
    CHECK(sp.diagonal[0] == 0.25);

    const Representation minus = build_rep("rho_minus", RepParams{q, 16, 0.0});
    const SpectrumReport sm = spectrum_check(minus, "b", expected_spectrum("rho_minus", "b", q, 16));
    CHECK(sm.max_deviation == 0.0);
    for (double d : sm.diagonal) CHECK(d < 0.0);

    CHECK_THROWS_AS(diagonal_of(rho, "T"), NonDiagonalGenerator);
    CHECK_THROWS_AS(spectrum_check(rho, "R", std::vector<double>(32, 0.0)), NonDiagonalGenerator);
    CHECK_THROWS_AS(expected_spectrum("rho", "T", q, 32), std::invalid_argument);
}

TEST_CASE("high-precision and double instances agree") {
    const auto lo = build_rep("rho", RepParams{0.5, 20, 0.0});
    const auto hi = build_rep<HighPrecision>("rho", RepParams{0.5, 20, 0.0});
    const Element x = parse_element("R* T* P + (1/3) T R - 2", lo.presentation()->alphabet());
    const DenseOperator a = evaluate(x, lo);
    const BasicDenseOperator<HighPrecision> b = evaluate(x, hi);
    double worst = 0.0;
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            worst = std::max(worst, std::abs(a(i, j) - Complex(static_cast<double>(b(i, j)))));
    CHECK(worst < 1e-14);
}

TEST_CASE("sphere normal monomials stay independent under pi_+ + pi_-") {
    // pi_+- factor through F, so independence here is numerical evidence that
    // F is injective on the span of these monomials.
    const Representation pm = build_rep("pi_pm", RepParams{0.5, 24, 0.0});
    const auto a = pm.presentation()->alphabet();
    std::vector<Word> words;
    for (int i = 0; i <= 3; ++i)
        for (int j = 0; j <= 3; ++j)
            for (Symbol tail : {Symbol{1}, Symbol{2}}) {  // L, L*
                if (tail == 2 && j == 0) continue;
                Word w(static_cast<std::size_t>(i), Symbol{0});
                w.insert(w.end(), static_cast<std::size_t>(j), tail);
                words.push_back(w);
            }
    REQUIRE(words.size() == 28);
    const auto idx = pm.compressed_indices(margin_for_degree(pm, 6));
    Eigen::MatrixXcd stacked(static_cast<Eigen::Index>(idx.size() * idx.size()), static_cast<Eigen::Index>(words.size()));
    for (std::size_t c = 0; c < words.size(); ++c) {
        const DenseOperator m = evaluate(Element(a, words[c]), pm);
        Eigen::VectorXcd col(stacked.rows());
        Eigen::Index k = 0;
        for (Eigen::Index i : idx)
            for (Eigen::Index j : idx) col(k++) = m(i, j);
        stacked.col(static_cast<Eigen::Index>(c)) = col.normalized();
    }
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(stacked);
    const auto& sv = svd.singularValues();
    CHECK((sv.array() > 1e-10 * sv(0)).count() == 28);
}
