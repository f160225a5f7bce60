#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "g2def/g2.hpp"

using namespace g2def;

namespace {

FieldVector basis_vec(int i) {
    FieldVector X(7);
    X[i - 1] = FieldElem(1);
    return X;
}

SymTensor random_traceless(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
    SymTensor h;
    for (int i = 1; i <= 7; ++i)
        for (int j = i + 1; j <= 7; ++j)
            h.set(i, j, FieldElem(make_rational(num(rng), den(rng))));
    FieldElem acc;
    for (int i = 1; i <= 6; ++i) {
        FieldElem d = FieldElem(make_rational(num(rng), den(rng)));
        h.set(i, i, d);
        acc += d;
    }
    h.set(7, 7, -acc);
    return h;
}

} // namespace

TEST_CASE("standard frame") {
    G2Frame f = standard_g2();
    CHECK(f.sigma.coeff({1, 2, 3}) == make_rational(1));
    CHECK(f.sigma.coeff({1, 6, 7}) == make_rational(-1));
    CHECK(f.star_sigma.coeff({2, 3, 4, 5}) == make_rational(-1));
    CHECK(f.star_sigma == hodge(f.sigma, 1));
    CHECK(f.sigma.terms().size() == 7);
    CHECK(f.star_sigma.terms().size() == 7);
}

TEST_CASE("metric normalization of the 3-form") {
    G2Frame f = standard_g2();
    CHECK(induces_metric(f.sigma, 1));
    CHECK(!induces_metric(f.sigma, -1));
    CHECK(!induces_metric(f.sigma * FieldElem(2), 1));
}

TEST_CASE("cross product") {
    G2Frame f = standard_g2();
    CHECK(cross(basis_vec(1), basis_vec(2), f) == basis_vec(3));
    CHECK(cross(basis_vec(1), basis_vec(6), f) == FieldElem(-1) * basis_vec(7));

    std::mt19937_64 rng(41);
    std::uniform_int_distribution<int> num(-3, 3), den(1, 2);
    for (int trial = 0; trial < 25; ++trial) {
        FieldVector X(7), Y(7);
        for (int i = 0; i < 7; ++i) {
            X[i] = FieldElem(make_rational(num(rng), den(rng)));
            Y[i] = FieldElem(make_rational(num(rng), den(rng)));
        }
        REQUIRE(is_zero(cross(X, X, f)));
        // |P(X,Y)|² = |X|²|Y|² − ⟨X,Y⟩².
        FieldVector p = cross(X, Y, f);
        REQUIRE(dot(p, p) == dot(X, X) * dot(Y, Y) - dot(X, Y) * dot(X, Y));
        // ⟨P(X,Y),Z⟩ = σ(X,Y,Z) pairing with the cross table is antisymmetric.
        REQUIRE(cross(X, Y, f) == FieldElem(-1) * cross(Y, X, f));
    }
}

TEST_CASE("two-form action conventions") {
    KForm e12 = KForm::monomial(7, {1, 2});
    CHECK(two_form_action(e12, basis_vec(1)) == basis_vec(2));
    CHECK(two_form_action(e12, basis_vec(2)) == FieldElem(-1) * basis_vec(1));
    CHECK(is_zero(two_form_action(e12, basis_vec(3))));

    // The form action matches the vector action under the metric.
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> num(-3, 3), pick(1, 7);
    for (int trial = 0; trial < 30; ++trial) {
        KForm alpha(7, 2);
        alpha.add_term({pick(rng), pick(rng) % 7 + 1, }, FieldElem(num(rng)));
        alpha.add_term({pick(rng), pick(rng) % 7 + 1}, FieldElem(num(rng)));
        FieldVector Y(7);
        for (int i = 0; i < 7; ++i) Y[i] = FieldElem(num(rng));
        REQUIRE(one_form(two_form_action(alpha, Y), 7) ==
                two_form_action(alpha, one_form(Y, 7)));
    }
}

TEST_CASE("so(7) Casimir eigenvalues on forms") {
    auto idx2 = all_multi_indices(7, 2);
    for (int p = 1; p <= 3; ++p) {
        for (const MultiIndex& idx : all_multi_indices(7, p)) {
            KForm w = KForm::monomial(7, idx);
            KForm acc(7, p);
            for (const MultiIndex& ij : idx2) {
                KForm alpha = KForm::monomial(7, ij);
                acc += two_form_action(alpha, two_form_action(alpha, w));
            }
            REQUIRE(acc == w * FieldElem(-p * (7 - p)));
        }
    }
}

TEST_CASE("p_action on the 3-form") {
    G2Frame f = standard_g2();
    for (int i = 1; i <= 7; ++i) {
        KForm lhs = p_action(basis_vec(i), f.sigma, f);
        CHECK(lhs == contract_basis(i, f.star_sigma) * FieldElem(3));
    }
}

TEST_CASE("projectors") {
    G2Frame f = standard_g2();
    ProjectorSet ps = projectors(f.sigma, 1);

    CHECK(ps.rank(Component::l3_27) == 27);
    CHECK(ps.rank(Component::l2_14) == 14);

    CHECK(ps.project(Component::l3_1, f.sigma) == f.sigma);
    CHECK(ps.project(Component::l3_7, f.sigma).is_zero());
    CHECK(ps.project(Component::l3_27, f.sigma).is_zero());

    KForm gamma = bryant_i(SymTensor::sym(1, 2), f);
    CHECK(ps.project(Component::l3_27, gamma) == gamma);
    CHECK(ps.project(Component::l3_1, gamma).is_zero());
    CHECK(ps.project(Component::l3_7, gamma).is_zero());

    // Idempotent, mutually orthogonal, summing to the identity — checked by
    // projecting every monomial.
    for (const MultiIndex& idx : all_multi_indices(7, 3)) {
        KForm w = KForm::monomial(7, idx);
        KForm a = ps.project(Component::l3_1, w), b = ps.project(Component::l3_7, w),
              c = ps.project(Component::l3_27, w);
        REQUIRE(a + b + c == w);
        REQUIRE(ps.project(Component::l3_1, a) == a);
        REQUIRE(ps.project(Component::l3_7, b) == b);
        REQUIRE(ps.project(Component::l3_27, c) == c);
        REQUIRE(ps.project(Component::l3_7, a).is_zero());
        REQUIRE(ps.project(Component::l3_27, b).is_zero());
        REQUIRE(ps.project(Component::l3_1, c).is_zero());
        // Self-adjointness: ⟨Pw, w'⟩ = ⟨w, Pw'⟩ spot check against σ.
        REQUIRE(inner(c, f.sigma) == inner(w, ps.project(Component::l3_27, f.sigma)));
    }
    for (const MultiIndex& idx : all_multi_indices(7, 2)) {
        KForm w = KForm::monomial(7, idx);
        KForm a = ps.project(Component::l2_7, w), b = ps.project(Component::l2_14, w);
        REQUIRE(a + b == w);
        REQUIRE(ps.project(Component::l2_7, a) == a);
        REQUIRE(ps.project(Component::l2_14, a).is_zero());
    }

    // Degree-4/5 companions are the Hodge conjugates.
    KForm w4 = KForm::monomial(7, {1, 2, 4, 6});
    CHECK(ps.project(Component::l4_1, w4) + ps.project(Component::l4_7, w4) +
              ps.project(Component::l4_27, w4) ==
          w4);
    CHECK(ps.project(Component::l4_27, hodge(gamma)) == hodge(gamma));
    KForm w5 = KForm::monomial(7, {1, 2, 3, 4, 5});
    CHECK(ps.project(Component::l5_7, w5) + ps.project(Component::l5_14, w5) == w5);

    CHECK_THROWS_AS(projectors(f.sigma * FieldElem(2), 1), invariant_violation);
}

TEST_CASE("Lambda3_27 coordinate basis") {
    G2Frame f = standard_g2();
    Lambda27Basis b = lambda27_basis(f.sigma, 1);
    CHECK(b.forms.size() == 27);
    KForm gamma = bryant_i(SymTensor::sym(2, 5), f);
    FieldVector x = b.coords(gamma);
    CHECK(b.form_of(x) == gamma);
    CHECK_THROWS_AS(b.coords(f.sigma), invariant_violation);
}

TEST_CASE("i map") {
    G2Frame f = standard_g2();
    KForm expect(7, 3);
    expect.add_term({1, 4, 6}, FieldElem(1));
    expect.add_term({1, 5, 7}, FieldElem(1));
    expect.add_term({2, 4, 5}, FieldElem(1));
    expect.add_term({2, 6, 7}, FieldElem(-1));
    CHECK(bryant_i(SymTensor::sym(1, 2), f) == expect);

    CHECK(bryant_i(SymTensor(), f).is_zero());

    SymTensor not_traceless = SymTensor::sym(1, 1); // trace 2
    CHECK_THROWS_AS(bryant_i(not_traceless, f), invariant_violation);

    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 10; ++trial) {
        SymTensor h = random_traceless(rng);
        KForm g = bryant_i(h, f);
        REQUIRE(wedge(g, f.sigma).is_zero());
        REQUIRE(wedge(g, f.star_sigma).is_zero());
    }
}

TEST_CASE("j map inverts i up to -8") {
    G2Frame f = standard_g2();
    SymTensor h12 = SymTensor::sym(1, 2);
    CHECK(bryant_j(bryant_i(h12, f), f) == h12 * FieldElem(-8));
    CHECK(bryant_j(KForm(7, 3), f).is_zero());
    CHECK_THROWS_AS(bryant_j(f.sigma, f), invariant_violation);

    for (const SymTensor& h : SymTensor::traceless_basis())
        REQUIRE(bryant_j(bryant_i(h, f), f) == h * FieldElem(-8));

    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 10; ++trial) {
        SymTensor h = random_traceless(rng);
        REQUIRE(bryant_j(bryant_i(h, f), f) == h * FieldElem(-8));
    }
}

TEST_CASE("identity suite passes on the standard frame") {
    CheckReport r = identity_suite(standard_g2());
    CHECK(r.checks.size() == 9);
    for (const auto& [name, ok] : r.checks) {
        INFO(name);
        CHECK(ok);
    }
}

TEST_CASE("equivariant-constant suite") {
    CheckReport r = schur_suite();
    CHECK(r.checks.size() == 12);
    for (const auto& [name, ok] : r.checks) {
        INFO(name);
        CHECK(ok);
    }
}

TEST_CASE("eigenvalue bookkeeping") {
    FieldElem tau0 = FieldElem(make_rational(-12, 5)) * FieldElem::sqrt5(); // −12/√5
    LaplaceBookkeeping bk = laplace_eigen_bookkeeping(tau0);
    CHECK(bk.c == FieldElem(-2) * FieldElem::sqrt5());
    CHECK(bk.root_minus_tau0 == -tau0);
    CHECK(bk.root_half_tau0 == tau0 * FieldElem(make_rational(1, 2)));
    CHECK(bk.eig_at_minus_tau0 == FieldElem(24));
    CHECK(bk.eig_at_half_tau0 == FieldElem(make_rational(48, 5)));
    CHECK(bk.eig_coclosed == FieldElem(make_rational(72, 5)));
    CHECK_THROWS_AS(laplace_eigen_bookkeeping(FieldElem(0)), invariant_violation);
}
