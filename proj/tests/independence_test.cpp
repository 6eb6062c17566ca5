#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qcstar/independence.hpp"

using namespace qcstar;

TEST_CASE("basis family size") {
    CHECK(basis_family(3, 3).size() == 60);
    CHECK(basis_family(0, 0).size() == 3);
    CHECK(to_string(BasisMonomial{BasisFamily::PRstarTstar, 2, 1}) == "P^2 R*^1 T*");
    CHECK_THROWS_AS(basis_element(BasisMonomial{BasisFamily::PRstar, 1, 0}, rp2_presentation()->alphabet()),
                    std::invalid_argument);
}

TEST_CASE("single monomial") {
    const std::vector<BasisMonomial> one{{BasisFamily::PR, 0, 0}};
    IndependenceOptions opts;
    opts.n_max = 4;
    opts.trials = 5;
    const IndependenceReport r = independence_check(one, opts);
    CHECK(r.rank == 1);
    CHECK(r.max_recovery_error == 0.0);
}

TEST_CASE("zero operator recovers zero coefficients") {
    const auto ms = basis_family(2, 2);
    const DenseOperator zero = DenseOperator::Zero(30, 30);
    for (double c : recover_coefficients(zero, ms, 0.5)) CHECK(c == 0.0);
}

TEST_CASE("recovery from a hand-built operator") {
    // 3 P R + (1/2) P^2 R under rho, read off in double precision.
    const Representation rho = build_rep("rho", RepParams{0.5, 24, 0.0});
    const auto a = rho.presentation()->alphabet();
    const std::vector<BasisMonomial> ms{{BasisFamily::PR, 0, 1}, {BasisFamily::PR, 1, 1}, {BasisFamily::PR, 2, 1}};
    const Element x = Laurent(3) * basis_element(ms[1], a) + Laurent(Rational(1, 2)) * basis_element(ms[2], a);
    const auto got = recover_coefficients(evaluate(x, rho), ms, 0.5);
    CHECK(got[0] == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(got[1] == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(got[2] == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("full family at the reference point") {
    const IndependenceReport r = independence_check(basis_family(3, 3));
    CHECK(r.full_rank());
    CHECK(r.max_recovery_error <= 1e-8);
}

TEST_CASE("a repeated monomial is detected as rank deficient") {
    auto ms = basis_family(1, 1);
    ms.push_back(ms.front());
    IndependenceOptions opts;
    opts.trials = 0;
    CHECK(independence_check(ms, opts).rank == static_cast<long>(ms.size()) - 1);
}

TEST_CASE("insufficient index bound") {
    IndependenceOptions opts;
    opts.n_max = 10;
    CHECK_THROWS_AS(independence_check(basis_family(3, 3), opts), InsufficientIndexBound);
    opts.n_max = 11;
    opts.trials = 1;
    CHECK_NOTHROW(independence_check(basis_family(3, 3), opts));
}
