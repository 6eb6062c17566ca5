#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>

#include "qcstar/ktheory.hpp"
#include "qcstar/oracle/oracles.hpp"

using namespace qcstar;

namespace {

IntegerMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows) {
    const auto r = static_cast<Eigen::Index>(rows.size());
    const auto c = static_cast<Eigen::Index>(rows.begin()->size());
    IntegerMatrix m = integer_matrix(r, c);
    Eigen::Index i = 0;
    for (const auto& row : rows) {
        Eigen::Index j = 0;
        for (long v : row) m(i, j++) = v;
        ++i;
    }
    return m;
}

IntegerMatrix random_matrix(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> dim(1, 4), entry(-6, 6), sparse(0, 3);
    IntegerMatrix m = integer_matrix(dim(rng), dim(rng));
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) = sparse(rng) == 0 ? 0 : entry(rng);
    return m;
}

void check_snf(const IntegerMatrix& m) {
    const SNFResult r = smith_normal_form(m);
    REQUIRE(IntegerMatrix(r.U * m * r.V) == r.S);
    CHECK(abs(oracle::determinant(r.U)) == 1);
    CHECK(abs(oracle::determinant(r.V)) == 1);
    for (Eigen::Index i = 0; i < r.S.rows(); ++i)
        for (Eigen::Index j = 0; j < r.S.cols(); ++j)
            if (i != j) CHECK(r.S(i, j) == 0);
    const auto d = r.diagonal();
    for (std::size_t i = 0; i < d.size(); ++i) {
        CHECK(d[i] >= 0);
        if (i + 1 < d.size()) {
            if (d[i] == 0)
                CHECK(d[i + 1] == 0);
            else
                CHECK(d[i + 1] % d[i] == 0);
        }
    }
    CHECK(r.rank() == oracle::rank_by_minors(m));
}

}  // namespace

TEST_CASE("Smith normal form of the Cuntz columns") {
    const SNFResult a = smith_normal_form(from_rows({{0}, {1}, {1}}));
    CHECK(a.S == from_rows({{1}, {0}, {0}}));
    const SNFResult b = smith_normal_form(from_rows({{0}, {2}}));
    CHECK(b.S == from_rows({{2}, {0}}));
}

TEST_CASE("zero matrix is its own normal form with identity transforms") {
    const SNFResult z = smith_normal_form(integer_matrix(2, 2));
    CHECK(z.S == integer_matrix(2, 2));
    CHECK(z.U == integer_identity(2));
    CHECK(z.V == integer_identity(2));
}

TEST_CASE("textbook 3x3 example") {
    const IntegerMatrix m = from_rows({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
    const auto d = smith_normal_form(m).diagonal();
    CHECK(d == std::vector<Integer>{2, 6, 12});
    check_snf(m);
}

TEST_CASE("entries beyond 64 bits") {
    IntegerMatrix m = integer_matrix(2, 2);
    m(0, 0) = Integer("340282366920938463463374607431768211456");  // 2^128
    m(1, 1) = Integer("18446744073709551616");                     // 2^64
    const auto d = smith_normal_form(m).diagonal();
    CHECK(d[0] == Integer("18446744073709551616"));
    CHECK(d[1] == Integer("340282366920938463463374607431768211456"));
}

TEST_CASE("cokernel and kernel") {
    CHECK(cokernel(from_rows({{0}, {1}, {1}})) == AbelianGroup{2, {}});
    CHECK(cokernel(from_rows({{0}, {2}})) == AbelianGroup{1, {2}});
    CHECK(cokernel(from_rows({{0}, {1}})) == AbelianGroup{1, {}});
    CHECK(kernel(from_rows({{0}, {1}, {1}})).is_trivial());
    CHECK(kernel(from_rows({{0}, {2}})).is_trivial());
    CHECK(kernel(integer_matrix(1, 1)) == AbelianGroup{1, {}});
    CHECK(cokernel(from_rows({{2, 0}, {0, 3}})) == AbelianGroup{0, {6}});
}

TEST_CASE("group rendering") {
    CHECK(AbelianGroup{2, {}}.to_string() == "Z^2");
    CHECK(AbelianGroup{1, {2}}.to_string() == "Z + Z_2");
    CHECK(AbelianGroup{}.to_string() == "0");
    CHECK(AbelianGroup{0, {2, 4}}.torsion_order() == 8);
}

TEST_CASE("K-groups of the built-in graphs") {
    const KGroups g1 = k_groups(builtin_graph("G1"));
    CHECK(g1.k0 == AbelianGroup{2, {}});
    CHECK(g1.k1.is_trivial());
    const KGroups g2 = k_groups(builtin_graph("G2"));
    CHECK(g2.k0 == AbelianGroup{1, {}});
    CHECK(g2.k1.is_trivial());
    const KGroups g3 = k_groups(builtin_graph("G3"));
    CHECK(g3.k0 == AbelianGroup{1, {2}});
    CHECK(g3.k1.is_trivial());
}

TEST_CASE("a sink-free cycle has K1 = Z") {
    const KGroups c = k_groups(parse_graph("vertex a\nvertex b\nedge e a b\nedge f b a"));
    CHECK(c.k0 == AbelianGroup{1, {}});
    CHECK(c.k1 == AbelianGroup{1, {}});
}

TEST_CASE("random matrices satisfy the normal form properties and match the minor oracles") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 400; ++t) {
        const IntegerMatrix m = random_matrix(rng);
        check_snf(m);
        const AbelianGroup c = cokernel(m);
        CHECK(c.torsion_order() == oracle::torsion_order_by_minors(m));
        CHECK(c.free_rank == m.rows() - oracle::rank_by_minors(m));
        CHECK(kernel(m).free_rank == m.cols() - oracle::rank_by_minors(m));
        if (auto by_cosets = oracle::torsion_order_by_cosets(m)) CHECK(*by_cosets == c.torsion_order());
    }
}

TEST_CASE("invariant factors do not depend on row and column order") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 100; ++t) {
        const IntegerMatrix m = random_matrix(rng);
        std::vector<Eigen::Index> rows(static_cast<std::size_t>(m.rows())), cols(static_cast<std::size_t>(m.cols()));
        std::iota(rows.begin(), rows.end(), 0);
        std::iota(cols.begin(), cols.end(), 0);
        std::shuffle(rows.begin(), rows.end(), rng);
        std::shuffle(cols.begin(), cols.end(), rng);
        IntegerMatrix p = integer_matrix(m.rows(), m.cols());
        for (Eigen::Index i = 0; i < m.rows(); ++i)
            for (Eigen::Index j = 0; j < m.cols(); ++j)
                p(i, j) = m(rows[static_cast<std::size_t>(i)], cols[static_cast<std::size_t>(j)]);
        CHECK(smith_normal_form(p).diagonal() == smith_normal_form(m).diagonal());
        CHECK(cokernel(p) == cokernel(m));
    }
}

TEST_CASE("oracle self-checks") {
    CHECK(oracle::determinant(from_rows({{2, 1}, {7, 4}})) == 1);
    CHECK(oracle::determinant(from_rows({{0, 1}, {1, 0}})) == -1);
    CHECK(oracle::rank_by_minors(from_rows({{1, 2}, {2, 4}})) == 1);
    CHECK(oracle::torsion_order_by_minors(from_rows({{2, 0}, {0, 3}})) == 6);
}
