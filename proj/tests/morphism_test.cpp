#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <limits>

#include "qcstar/expression.hpp"
#include "qcstar/morphism.hpp"
#include "qcstar/oracle/oracles.hpp"

using namespace qcstar;

namespace {

Element parse_in(const GeneratorMap& m, const char* text, bool target) {
    return parse_element(text, (target ? m.target() : m.source())->alphabet());
}

}  // namespace

TEST_CASE("generator images") {
    const GeneratorMap r1 = morphism_r1(), r2 = morphism_r2(), F = morphism_F();
    CHECK(apply_morphism(r1, parse_in(r1, "K", false)) == parse_in(r1, "-K", true));
    CHECK(apply_morphism(r2, parse_in(r2, "K L", false)) == parse_in(r2, "K L", true));
    CHECK(apply_morphism(F, parse_in(F, "K", false)) == parse_in(F, "q^-2 b", true));
    CHECK(apply_morphism(F, parse_in(F, "L*", false)) == parse_in(F, "a*", true));
}

TEST_CASE("every named morphism respects all relations") {
    for (const char* name : {"F", "r1", "r2", "rp2-inclusion", "disc-embedding"}) {
        const GeneratorMap m = named_morphism(name);
        CAPTURE(name);
        CHECK(m.star_compatible());
        const MorphismReport report = verify_morphism(m);
        CHECK(report.valid());
        for (const auto& r : report.relations) CHECK(r.residue.is_zero());
    }
    CHECK(verify_morphism(morphism_F()).relations.size() >= 4);
    CHECK(verify_morphism(morphism_rp2_inclusion()).relations.size() >= 16);
}

TEST_CASE("reflections are involutive") {
    CHECK(is_involutive(morphism_r1()));
    CHECK(is_involutive(morphism_r2()));
}

TEST_CASE("fixed points") {
    const GeneratorMap r1 = morphism_r1(), r2 = morphism_r2();
    auto e = [&](const char* text) { return parse_element(text, r1.source()->alphabet()); };
    CHECK(is_fixed(r1, e("L")));
    CHECK_FALSE(is_fixed(r1, e("K")));
    CHECK(is_fixed(r2, e("K^2")));
    CHECK(is_fixed(r2, e("K L")));
    CHECK_FALSE(is_fixed(r2, e("L")));
    // L K reduces to q^2 K L, so r1 flips it just as it flips K L.
    CHECK_FALSE(is_fixed(r1, e("L K")));
    CHECK(is_fixed(r1, e("L K^2 L* + 1")));
    CHECK_THROWS_AS(is_fixed(morphism_F(), parse_element("K", morphism_F().source()->alphabet())), AlgebraError);
}

TEST_CASE("a wrong image is reported, not thrown") {
    // x -> L does not satisfy the disc relation.
    const GeneratorMap bad("bad", disc_presentation(4), sphere_presentation(), {{"x", "L"}});
    CHECK_FALSE(verify_morphism(bad).valid());
}

TEST_CASE("undefined generators are rejected") {
    CHECK_THROWS(GeneratorMap("bad", sphere_presentation(), sphere_presentation(), {{"Z", "K"}}));
    CHECK_THROWS(GeneratorMap("bad", sphere_presentation(), sphere_presentation(), {{"K", "Z"}}));
    CHECK_THROWS_AS(named_morphism("r3"), std::invalid_argument);
}

TEST_CASE("Podles parameter change") {
    CHECK(param_c_to_s(0.0) == 0.0);
    CHECK(param_c_to_s(std::numeric_limits<double>::infinity()) == 1.0);
    CHECK(param_c_to_s(4.0 / 9.0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK_THROWS_AS(param_c_to_s(-1.0), std::invalid_argument);
    for (double s : {0.05, 0.3, 0.5, 0.77, 0.99})
        CHECK(param_c_to_s(oracle::podles_c_from_s(s)) == doctest::Approx(s).epsilon(1e-12));
}
