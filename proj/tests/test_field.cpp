#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "g2def/field.hpp"

using namespace g2def;

namespace {

// Deterministic elements with small rational coefficients and a few terms.
FieldElem random_elem(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> idx(0, 15), num(-9, 9), den(1, 9), nterms(1, 3);
    FieldElem a;
    int k = nterms(rng);
    for (int t = 0; t < k; ++t) {
        FieldElem mono = FieldElem::radical(static_cast<unsigned>(idx(rng)) & 7u);
        if (idx(rng) & 8) mono = mono * FieldElem::imaginary_unit();
        a += FieldElem(make_rational(num(rng), den(rng))) * mono;
    }
    return a;
}

} // namespace

TEST_CASE("defining relations of the generators") {
    CHECK(FieldElem::sqrt5() * FieldElem::sqrt5() == FieldElem(5));
    CHECK(FieldElem::imaginary_unit() * FieldElem::imaginary_unit() == FieldElem(-1));
    CHECK(FieldElem::sqrt2() * FieldElem::sqrt3() == FieldElem::radical(3)); // √6
    CHECK(FieldElem::sqrt2() * FieldElem::sqrt5() == FieldElem::radical(5)); // √10
    CHECK(FieldElem::radical(3) * FieldElem::radical(5) ==
          FieldElem(2) * FieldElem::radical(6)); // √6·√10 = 2√15
}

TEST_CASE("inverses") {
    CHECK(FieldElem(2).inv() == FieldElem(make_rational(1, 2)));

    FieldElem one_plus_i = FieldElem(1) + FieldElem::imaginary_unit();
    FieldElem expected = (FieldElem(1) - FieldElem::imaginary_unit()) *
                         FieldElem(make_rational(1, 2));
    CHECK(one_plus_i.inv() == expected);

    CHECK(FieldElem::sqrt5().inv() ==
          FieldElem(make_rational(1, 5)) * FieldElem::sqrt5());

    CHECK_THROWS_AS(FieldElem(0).inv(), division_by_zero);

    // A dense element spanning several monomials still inverts exactly.
    FieldElem messy = FieldElem(make_rational(2, 3)) + FieldElem::sqrt2() -
                      FieldElem(make_rational(1, 7)) * FieldElem::radical(7) +
                      FieldElem::imaginary_unit() * FieldElem::sqrt3();
    CHECK(messy * messy.inv() == FieldElem(1));
}

TEST_CASE("field axioms on random elements") {
    std::mt19937_64 rng(20260822);
    for (int trial = 0; trial < 1000; ++trial) {
        FieldElem a = random_elem(rng), b = random_elem(rng), c = random_elem(rng);
        REQUIRE((a + b) + c == a + (b + c));
        REQUIRE(a * (b + c) == a * b + a * c);
        REQUIRE(a * b == b * a);
        REQUIRE((a * b) * c == a * (b * c));
        if (!a.is_zero()) REQUIRE(a * a.inv() == FieldElem(1));
    }
}

TEST_CASE("canonical form is unique") {
    // Same value assembled along different routes compares equal termwise.
    FieldElem a = FieldElem::sqrt2() * FieldElem::sqrt3() * FieldElem::sqrt5();
    FieldElem b = FieldElem::radical(7);
    CHECK(a == b);
    CHECK(a.terms().size() == 1);
    FieldElem diff = a - b;
    CHECK(diff.is_zero());
    CHECK(diff.terms().empty());
    // Distinct coefficient grids are distinct elements.
    CHECK(FieldElem::sqrt2() != FieldElem::sqrt3());
}

TEST_CASE("conjugation and parts") {
    FieldElem a = FieldElem(3) + FieldElem(2) * FieldElem::imaginary_unit() * FieldElem::sqrt5();
    CHECK(a.real_part() == FieldElem(3));
    CHECK(a.imag_part() == FieldElem(2) * FieldElem::sqrt5());
    CHECK(a.conj_i() == FieldElem(3) - FieldElem(2) * FieldElem::imaginary_unit() * FieldElem::sqrt5());
    CHECK(a.real_part() + FieldElem::imaginary_unit() * a.imag_part() == a);
    CHECK(FieldElem::sqrt2().conj_sqrt(0) == -FieldElem::sqrt2());
    CHECK(FieldElem::sqrt3().conj_sqrt(0) == FieldElem::sqrt3());
}

TEST_CASE("text encoding round trip") {
    FieldElem tau0 = FieldElem(make_rational(-12, 5)) * FieldElem::sqrt5();
    CHECK(tau0.str() == "-12/5*r5");
    CHECK(FieldElem::parse("-12/5*r5") == tau0);

    CHECK(FieldElem(0).str() == "0");
    CHECK(FieldElem::parse("0") == FieldElem(0));
    CHECK(FieldElem::imaginary_unit().str() == "i*1");
    CHECK(FieldElem::parse("i*1") == FieldElem::imaginary_unit());
    CHECK(FieldElem::parse("i") == FieldElem::imaginary_unit());

    FieldElem mixed = FieldElem(make_rational(1, 2)) - FieldElem(3) * FieldElem::radical(3) +
                      FieldElem::imaginary_unit() * FieldElem(make_rational(-2, 7)) *
                          FieldElem::radical(6);
    CHECK(mixed.str() == "1/2 + -3*r6 + i*-2/7*r15");
    CHECK(FieldElem::parse(mixed.str()) == mixed);

    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        FieldElem a = random_elem(rng);
        REQUIRE(FieldElem::parse(a.str()) == a);
    }

    CHECK_THROWS_AS(FieldElem::parse("1*r7"), parse_error);
    CHECK_THROWS_AS(FieldElem::parse("bogus"), parse_error);
    CHECK_THROWS_AS(FieldElem::parse(""), parse_error);
}

TEST_CASE("square roots of rationals") {
    CHECK(sqrt_of_rational(make_rational(4)) == FieldElem(2));
    CHECK(sqrt_of_rational(make_rational(1, 5)) ==
          FieldElem(make_rational(1, 5)) * FieldElem::sqrt5());
    CHECK(sqrt_of_rational(make_rational(24)) == FieldElem(2) * FieldElem::radical(3));
    CHECK(sqrt_of_rational(make_rational(9, 8)) ==
          FieldElem(make_rational(3, 4)) * FieldElem::sqrt2());
    CHECK(sqrt_of_rational(make_rational(0)) == FieldElem(0));
    CHECK(!sqrt_of_rational(make_rational(7)).has_value());
    CHECK(!sqrt_of_rational(make_rational(-1)).has_value());

    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> num(1, 400), den(1, 60);
    for (int trial = 0; trial < 200; ++trial) {
        Rational r = make_rational(num(rng), den(rng));
        auto root = sqrt_of_rational(r);
        if (root) REQUIRE(*root * *root == FieldElem(r));
    }
}

TEST_CASE("numeric approximation") {
    double r2 = FieldElem::sqrt2().approx().real();
    CHECK(std::abs(r2 - 1.4142135623730951) < 1e-12);
    std::complex<double> z =
        (FieldElem(2) + FieldElem::imaginary_unit() * FieldElem::sqrt3()).approx();
    CHECK(std::abs(z.real() - 2.0) < 1e-12);
    CHECK(std::abs(z.imag() - 1.7320508075688772) < 1e-12);
}
