#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "g2def/matrix.hpp"

using namespace g2def;

namespace {

FieldElem random_elem(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> idx(0, 15), num(-4, 4), den(1, 3), sparse(0, 2);
    if (sparse(rng) == 0) return FieldElem(0);
    FieldElem mono = FieldElem::radical(static_cast<unsigned>(idx(rng)) & 7u);
    if (idx(rng) & 8) mono = mono * FieldElem::imaginary_unit();
    return FieldElem(make_rational(num(rng), den(rng))) * mono;
}

FieldMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c) {
    FieldMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = random_elem(rng);
    return m;
}

} // namespace

TEST_CASE("rank") {
    CHECK(FieldMatrix::identity(4).rank() == 4);
    CHECK(FieldMatrix(3, 5).rank() == 0);

    // Second row is i times the first.
    FieldMatrix m(2, 2);
    m.at(0, 0) = FieldElem(1);
    m.at(0, 1) = FieldElem::imaginary_unit();
    m.at(1, 0) = FieldElem::imaginary_unit();
    m.at(1, 1) = FieldElem(-1);
    CHECK(m.rank() == 1);
}

TEST_CASE("nullspace basics") {
    CHECK(FieldMatrix::identity(3).nullspace().empty());

    auto basis = FieldMatrix(2, 3).nullspace();
    REQUIRE(basis.size() == 3);
    for (std::size_t k = 0; k < 3; ++k)
        for (std::size_t j = 0; j < 3; ++j)
            CHECK(basis[k][j] == (j == k ? FieldElem(1) : FieldElem(0)));

    FieldMatrix m(1, 2);
    m.at(0, 0) = FieldElem(1);
    m.at(0, 1) = FieldElem::sqrt5();
    auto ns = m.nullspace();
    REQUIRE(ns.size() == 1);
    CHECK(is_zero(m.apply(ns[0])));
    // Ray through (−√5, 1): normalize the free coordinate to 1.
    FieldVector x = ns[0][1].inv() * ns[0];
    CHECK(x[0] == -FieldElem::sqrt5());
    CHECK(x[1] == FieldElem(1));
}

TEST_CASE("degenerate shapes") {
    FieldMatrix zero_rows(0, 4);
    CHECK(zero_rows.rank() == 0);
    auto basis = zero_rows.nullspace();
    REQUIRE(basis.size() == 4);
    for (std::size_t k = 0; k < 4; ++k)
        for (std::size_t j = 0; j < 4; ++j)
            CHECK(basis[k][j] == (j == k ? FieldElem(1) : FieldElem(0)));

    FieldMatrix zero_cols(4, 0);
    CHECK(zero_cols.rank() == 0);
    CHECK(zero_cols.nullspace().empty());
}

TEST_CASE("rref is deterministic with first-nonzero pivots") {
    FieldMatrix m(3, 4);
    // Row space designed so the pivot search must skip a zero entry.
    m.at(0, 1) = FieldElem(2);
    m.at(0, 3) = FieldElem(1);
    m.at(1, 1) = FieldElem(2);
    m.at(1, 2) = FieldElem::sqrt2();
    m.at(2, 1) = FieldElem(4);
    m.at(2, 2) = FieldElem::sqrt2();
    m.at(2, 3) = FieldElem(1);
    FieldMatrix a(m), b(m);
    auto pa = a.rref();
    auto pb = b.rref();
    CHECK(pa == pb);
    CHECK(a == b);
    REQUIRE(pa.size() == 2);
    CHECK(pa[0] == 1);
    CHECK(pa[1] == 2);
    // Echelon invariants: unit pivots, zeros above and below.
    for (std::size_t r = 0; r < pa.size(); ++r) {
        CHECK(a.at(r, pa[r]) == FieldElem(1));
        for (std::size_t i = 0; i < a.rows(); ++i)
            if (i != r) CHECK(a.at(i, pa[r]).is_zero());
    }
}

TEST_CASE("nullspace vectors solve exactly; rank-nullity") {
    std::mt19937_64 rng(20260822);
    for (int trial = 0; trial < 40; ++trial) {
        std::uniform_int_distribution<std::size_t> dim(1, 6);
        FieldMatrix m = random_matrix(rng, dim(rng), dim(rng));
        auto ns = m.nullspace();
        REQUIRE(m.rank() + ns.size() == m.cols());
        for (const auto& x : ns) REQUIRE(is_zero(m.apply(x)));
    }
}

TEST_CASE("inverse") {
    FieldMatrix m(2, 2);
    m.at(0, 0) = FieldElem(1);
    m.at(0, 1) = FieldElem::sqrt2();
    m.at(1, 0) = FieldElem::imaginary_unit();
    m.at(1, 1) = FieldElem(3);
    FieldMatrix inv = m.inverse();
    CHECK(m * inv == FieldMatrix::identity(2));
    CHECK(inv * m == FieldMatrix::identity(2));

    FieldMatrix singular(2, 2);
    singular.at(0, 0) = FieldElem(1);
    singular.at(1, 0) = FieldElem(1);
    CHECK_THROWS_AS(singular.inverse(), invariant_violation);
}

TEST_CASE("product and transpose") {
    std::mt19937_64 rng(5);
    FieldMatrix a = random_matrix(rng, 3, 4), b = random_matrix(rng, 4, 2);
    CHECK((a * b).transpose() == b.transpose() * a.transpose());
    FieldVector v(4);
    for (auto& x : v) x = random_elem(rng);
    FieldVector lhs = (a * b).apply({random_elem(rng), random_elem(rng)});
    CHECK(lhs.size() == 3);
}
