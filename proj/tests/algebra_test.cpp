#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "qcstar/expression.hpp"
#include "qcstar/presentations.hpp"
#include "qcstar/sampling.hpp"

using namespace qcstar;

namespace {

Element nf(const char* text, const PresentationPtr& p) { return normal_form(parse_element(text, p->alphabet()), *p); }

Element el(const char* text, const PresentationPtr& p) { return parse_element(text, p->alphabet()); }

}  // namespace

TEST_CASE("Laurent arithmetic") {
    const Laurent q = Laurent::q_power(1);
    const Laurent a = q * q - Laurent(1);
    CHECK(a * Laurent::q_power(-2) == Laurent(1) - Laurent::q_power(-2));
    CHECK((a - a).is_zero());
    CHECK(Laurent::monomial(Rational(3, 2), -4).to_string() == "(3/2)q^-4");
    CHECK(a.evaluate(0.5) == doctest::Approx(-0.75));
    CHECK(a.rescale_variable(2) == Laurent::q_power(4) - Laurent(1));
    CHECK(Laurent(5).is_constant());
    CHECK_FALSE(q.is_constant());
}

TEST_CASE("expression grammar") {
    const auto sphere = sphere_presentation();
    const auto& a = sphere->alphabet();
    CHECK(parse_element("K L", a) == sphere->generator("K") * sphere->generator("L"));
    CHECK(parse_element("L'", a) == parse_element("L*", a));
    CHECK(parse_element("(1/2) q^-2 K^3", a).to_string() == "(1/2)q^-2 K^3");
    CHECK(parse_element("(K + L)^2", a) == parse_element("K^2 + K L + L K + L^2", a));
    CHECK(parse_element("-K + 2", a) == parse_element("2 - K", a));
    CHECK(parse_element("0", a).is_zero());
}

TEST_CASE("expression errors point at the offending column") {
    const auto a = sphere_presentation()->alphabet();
    auto column = [&](const char* text) {
        try {
            parse_element(text, a);
        } catch (const ExpressionError& e) {
            return static_cast<long>(e.column());
        }
        return -1L;
    };
    CHECK(column("K + Z") == 4);
    CHECK(column("K +") >= 2);
    CHECK(column("(K") >= 0);
    CHECK(column("K^-1") >= 0);
    CHECK(column("1/0") >= 0);
}

TEST_CASE("rendered elements parse back") {
    const auto rp2 = rp2_presentation();
    std::mt19937_64 rng(1);
    for (int t = 0; t < 50; ++t) {
        const Element x = random_element(*rp2, rng);
        CHECK(parse_element(x.to_string(), rp2->alphabet()) == x);
    }
}

TEST_CASE("presentations contain the defining relations") {
    const auto sphere = sphere_presentation();
    CHECK(sphere->alphabet()->star(sphere->alphabet()->find("K")) == sphere->alphabet()->find("K"));
    CHECK(nf("L K", sphere) == el("q^2 K L", sphere));

    const auto disc = disc_presentation();
    CHECK(nf("x* x", disc) == el("q x x* + 1 - q", disc));

    const auto rp2 = rp2_presentation();
    CHECK(nf("T T", rp2) == el("q^2 P R", rp2));
    CHECK(nf("R* T", rp2) == normal_form(el("q^-2 T* (1 - P)", rp2), *rp2));

    CHECK_THROWS_AS(presentation("torus"), std::invalid_argument);
    CHECK_THROWS(presentation("sphere", PresentationParams{Rational(3, 2)}));
    CHECK_THROWS(presentation("sphere", PresentationParams{Rational(-1)}));
    CHECK(presentation("sphere", PresentationParams{Rational(0)})->name() == sphere_presentation(0)->name());
}

TEST_CASE("normal forms") {
    const auto sphere = sphere_presentation();
    CHECK(nf("1", sphere) == sphere->one());
    CHECK(nf("L* L", sphere) == el("1 - K^2", sphere));
    CHECK(nf("L L*", sphere) == el("1 - q^4 K^2", sphere));
    CHECK(nf("K L", sphere) == el("K L", sphere));

    const auto half = sphere_presentation(Rational(1, 2));
    CHECK(nf("L* L", half) == el("(3/4) K + 1/4 - K^2", half));

    const auto suq2 = suq2_mod_b_presentation();
    CHECK(nf("b b", suq2) == el("1 - a a*", suq2));
    CHECK(nf("b a", suq2) == el("q^-2 a b", suq2));
}

TEST_CASE("normal forms are idempotent, land in the normal family and respect the involution") {
    std::mt19937_64 rng(2);
    for (const auto& p : {sphere_presentation(), sphere_presentation(Rational(1, 3)), disc_presentation(),
                          rp2_presentation(), suq2_mod_b_presentation()}) {
        for (int t = 0; t < 60; ++t) {
            const Element x = random_element(*p, rng);
            const Element n = normal_form(x, *p);
            CHECK(normal_form(n, *p) == n);
            for (const auto& [w, c] : n.terms()) CHECK(p->is_normal_monomial(w));
            CHECK(normal_form(involution(normal_form(involution(x), *p)), *p) == n);
        }
    }
}

TEST_CASE("every rule set is confluent") {
    for (const auto& p : {sphere_presentation(), sphere_presentation(0), sphere_presentation(Rational(2, 5)),
                          disc_presentation(), disc_presentation(4), rp2_presentation(), suq2_mod_b_presentation()}) {
        CAPTURE(p->name());
        CHECK(unresolved_overlaps(*p).empty());
    }
}

TEST_CASE("dropping a rule leaves an unresolved overlap") {
    const auto rp2 = rp2_presentation();
    std::vector<RewriteRule> rules;
    for (std::size_t i = 0; i < rp2->rules().size(); ++i)
        if (rp2->rule_label(i).rfind("T T* ", 0) != 0) rules.push_back(rp2->rules()[i]);
    REQUIRE(rules.size() + 1 == rp2->rules().size());
    const AlgebraPresentation partial("partial", rp2->alphabet(), rules, [](const Word&) { return true; });
    CHECK_FALSE(unresolved_overlaps(partial).empty());
}

TEST_CASE("step budget") {
    const auto rp2 = rp2_presentation();
    CHECK_THROWS_AS(normal_form(el("R* R R* R T* T", rp2), *rp2, 2), RewriteBudgetExceeded);
    CHECK_NOTHROW(normal_form(el("R* R R* R T* T", rp2), *rp2));
}

TEST_CASE("element operations") {
    const auto sphere = sphere_presentation();
    const Element K = sphere->generator("K"), L = sphere->generator("L");
    CHECK((K * L).terms().size() == 1);
    CHECK((K * L).terms().begin()->first == Word{0, 1});
    CHECK(involution(K * L) == el("L* K", sphere));
    CHECK(normal_form(involution(K * L), *sphere) == el("q^-2 K L*", sphere));
    CHECK(power(K + L, 2) == el("K K + K L + L K + L L", sphere));
    CHECK(scale(K, Laurent::q_power(2)) == el("q^2 K", sphere));
    CHECK_THROWS_AS(K + rp2_presentation()->generator("P"), AlgebraError);
}

TEST_CASE("rules must decrease in the monomial order") {
    const auto a = sphere_presentation()->alphabet();
    std::vector<RewriteRule> rules{{Word{0, 1}, parse_element("L K", a)}};
    CHECK_THROWS_AS(AlgebraPresentation("bad", a, rules, [](const Word&) { return true; }), AlgebraError);
}
