#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "g2def/kform.hpp"

using namespace g2def;

namespace {

KForm sigma_form() {
    KForm s(7, 3);
    s.add_term({1, 2, 3}, FieldElem(1));
    s.add_term({1, 4, 5}, FieldElem(1));
    s.add_term({2, 4, 6}, FieldElem(1));
    s.add_term({3, 4, 7}, FieldElem(1));
    s.add_term({1, 6, 7}, FieldElem(-1));
    s.add_term({2, 5, 7}, FieldElem(1));
    s.add_term({3, 5, 6}, FieldElem(-1));
    return s;
}

FieldVector basis_vector(int i, int n = 7) {
    FieldVector X(n);
    X[i - 1] = FieldElem(1);
    return X;
}

KForm random_form(std::mt19937_64& rng, int n, int k) {
    std::uniform_int_distribution<int> num(-5, 5), den(1, 4), pick(1, n), cnt(1, 4),
        radical(0, 7), use_i(0, 3);
    KForm w(n, k);
    int terms = cnt(rng);
    for (int t = 0; t < terms; ++t) {
        std::vector<int> idx(k);
        for (int& v : idx) v = pick(rng);
        FieldElem c = FieldElem(make_rational(num(rng), den(rng))) *
                      FieldElem::radical(static_cast<unsigned>(radical(rng)));
        if (use_i(rng) == 0) c = c * FieldElem::imaginary_unit();
        w.add_term(std::move(idx), c);
    }
    return w;
}

} // namespace

TEST_CASE("wedge") {
    KForm e1 = KForm::monomial(7, {1}), e2 = KForm::monomial(7, {2});
    CHECK(wedge(e1, e2) == KForm::monomial(7, {1, 2}));
    CHECK(wedge(e2, e1) == -KForm::monomial(7, {1, 2}));

    KForm a = KForm::monomial(7, {1, 2, 3}) + KForm::monomial(7, {1, 4, 5});
    KForm b = KForm::monomial(7, {6, 7});
    CHECK(wedge(a, b) == KForm::monomial(7, {1, 2, 3, 6, 7}) + KForm::monomial(7, {1, 4, 5, 6, 7}));

    CHECK(wedge(KForm::monomial(7, {1, 2}), KForm::monomial(7, {2, 3})).is_zero());
    // Degree past n collapses to the zero form.
    CHECK(wedge(KForm::monomial(3, {1, 2, 3}), KForm::monomial(3, {1})).is_zero());
}

TEST_CASE("contraction") {
    KForm e12 = KForm::monomial(7, {1, 2});
    CHECK(contract(basis_vector(1), e12) == KForm::monomial(7, {2}));
    CHECK(contract(basis_vector(3), e12).is_zero());

    KForm expect = -KForm::monomial(7, {1, 3}) + KForm::monomial(7, {4, 6}) +
                   KForm::monomial(7, {5, 7});
    CHECK(contract(basis_vector(2), sigma_form()) == expect);
}

TEST_CASE("contraction is an anti-derivation and squares to zero") {
    std::mt19937_64 rng(20260822);
    std::uniform_int_distribution<int> deg(1, 3);
    for (int trial = 0; trial < 60; ++trial) {
        int ka = deg(rng), kb = deg(rng);
        KForm a = random_form(rng, 7, ka), b = random_form(rng, 7, kb);
        FieldVector X(7);
        for (auto& c : X) c = FieldElem(make_rational(
            std::uniform_int_distribution<int>(-3, 3)(rng)));
        KForm lhs = contract(X, wedge(a, b));
        KForm rhs = wedge(contract(X, a), b);
        KForm second = wedge(a, contract(X, b));
        rhs = (ka % 2 == 0) ? rhs + second : rhs - second;
        REQUIRE(lhs == rhs);
        if (ka >= 2) REQUIRE(contract(X, contract(X, a)).is_zero());
    }
}

TEST_CASE("hodge star") {
    CHECK(hodge(KForm::monomial(7, {1, 2, 3})) == KForm::monomial(7, {4, 5, 6, 7}));

    KForm star_sigma(7, 4);
    star_sigma.add_term({4, 5, 6, 7}, FieldElem(1));
    star_sigma.add_term({2, 3, 6, 7}, FieldElem(1));
    star_sigma.add_term({1, 3, 5, 7}, FieldElem(1));
    star_sigma.add_term({1, 2, 5, 6}, FieldElem(1));
    star_sigma.add_term({2, 3, 4, 5}, FieldElem(-1));
    star_sigma.add_term({1, 3, 4, 6}, FieldElem(1));
    star_sigma.add_term({1, 2, 4, 7}, FieldElem(-1));
    CHECK(hodge(sigma_form()) == star_sigma);

    // ∗∗ = id in every degree on R⁷, for both orientations.
    for (int k = 0; k <= 7; ++k)
        for (const MultiIndex& idx : all_multi_indices(7, k)) {
            KForm w = KForm::monomial(7, idx);
            CHECK(hodge(hodge(w)) == w);
            CHECK(hodge(hodge(w, -1), -1) == w);
        }
}

TEST_CASE("inner product") {
    CHECK(inner(KForm::monomial(7, {1, 2}), KForm::monomial(7, {1, 2})) == FieldElem(1));
    CHECK(inner(sigma_form(), sigma_form()) == FieldElem(7));
    CHECK(inner(hodge(sigma_form()), hodge(sigma_form())) == FieldElem(7));

    // Hodge is an isometry on random forms.
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        KForm a = random_form(rng, 7, 3), b = random_form(rng, 7, 3);
        REQUIRE(inner(hodge(a), hodge(b)) == inner(a, b));
    }
}

TEST_CASE("wedging map eps") {
    FormValuedCovector F = FormValuedCovector::zero(7, 1);
    F.components[0] = KForm::monomial(7, {2});
    CHECK(eps(F) == KForm::monomial(7, {1, 2}));

    FormValuedCovector G = FormValuedCovector::zero(7, 2);
    for (int i = 1; i <= 7; ++i) G.components[i - 1] = contract_basis(i, sigma_form());
    CHECK(eps(G) == sigma_form() * FieldElem(3));

    CHECK(eps(FormValuedCovector::zero(7, 2)).is_zero());
}

TEST_CASE("sum of basis wedge-contractions counts the degree") {
    for (int k = 1; k <= 7; ++k)
        for (const MultiIndex& idx : all_multi_indices(7, k)) {
            KForm w = KForm::monomial(7, idx);
            KForm sum(7, k);
            for (int i = 1; i <= 7; ++i)
                sum += wedge(KForm::monomial(7, {i}), contract_basis(i, w));
            REQUIRE(sum == w * FieldElem(k));
        }
}

TEST_CASE("multi-index enumeration") {
    CHECK(all_multi_indices(7, 2).size() == 21);
    CHECK(all_multi_indices(7, 3).size() == 35);
    CHECK(all_multi_indices(7, 0).size() == 1);
    CHECK(all_multi_indices(3, 5).empty());
    auto list = all_multi_indices(4, 2);
    CHECK(list.front() == MultiIndex{1, 2});
    CHECK(list.back() == MultiIndex{3, 4});
}

TEST_CASE("text encoding round trip") {
    KForm w = KForm::monomial(7, {1, 2, 3}) - KForm::monomial(7, {1, 6, 7});
    CHECK(w.str() == "1*e123 + -1*e167");
    CHECK(KForm::parse(w.str(), 7, 3) == w);

    KForm mixed = KForm::monomial(7, {1, 2}, FieldElem(1) + FieldElem::sqrt2()) +
                  KForm::monomial(7, {3, 4}, FieldElem::imaginary_unit());
    CHECK(mixed.str() == "(1 + 1*r2)*e12 + i*1*e34");
    CHECK(KForm::parse(mixed.str(), 7, 2) == mixed);

    CHECK(KForm::parse("0", 7, 3).is_zero());
    CHECK(KForm(7, 3).str() == "0");

    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 100; ++trial) {
        KForm a = random_form(rng, 7, 3);
        REQUIRE(KForm::parse(a.str(), 7, 3) == a);
    }
}

TEST_CASE("coordinate conversion") {
    auto threes = all_multi_indices(7, 3);
    KForm s = sigma_form();
    FieldVector coords = kform_coords(s, threes);
    CHECK(coords.size() == 35);
    CHECK(kform_from_coords(coords, threes, 7, 3) == s);
}
