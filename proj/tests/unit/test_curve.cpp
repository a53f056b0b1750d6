#include "doctest.h"

#include <algorithm>

#include "ctr/fibersum.hpp"
#include "ctr/spectral_curve.hpp"

using namespace ctr;

namespace {

Poly<Rat> P(std::vector<long> c) {
    std::vector<Rat> v(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) v[i] = Rat(c[i]);
    return Poly<Rat>(std::move(v));
}

const RatFunc<Rat> Z = RatFunc<Rat>::var();

}  // namespace

TEST_CASE("curve x = z^2: exact local data") {
    SpectralCurve c(Z * Z, Z, 8);
    CHECK(c.sheet_degree() == 2);
    REQUIRE(c.branch_groups().size() == 1);
    const BranchGroup& g = c.branch_groups()[0];
    CHECK(!g.field);
    CHECK(g.alpha == NFElem(0));
    CHECK(g.a == NFElem(0));
    CHECK(g.c2 == NFElem(1));
    // sigma(w) = -w exactly
    for (int k = 1; k <= 8; ++k)
        CHECK(g.sigma.at(k) == (k == 1 ? NFElem(-1) : NFElem(0)));
    CHECK(g.y_u.at(1) == NFElem(1));

    REQUIRE(c.infinities().size() == 1);
    CHECK(c.infinities()[0].at_z_infinity);
    CHECK(c.infinities()[0].ram == 2);

    // E(X, Y) = Y^2 - X
    MultiPoly<Rat> e = implicit_equation(c);
    MultiPoly<Rat> expect =
        MultiPoly<Rat>::var(1) * MultiPoly<Rat>::var(1) - MultiPoly<Rat>::var(0);
    CHECK(e == expect);

    CHECK(c.base_point() == Rat(1));  // z = 0 is a branch point, z = 1 regular
}

TEST_CASE("curve x = z + 1/z: involution at alpha = 1 and implicit equation") {
    RatFunc<Rat> x(P({1, 0, 1}), P({0, 1}));
    SpectralCurve c(x, Z, 8);
    CHECK(c.sheet_degree() == 2);
    REQUIRE(c.branch_groups().size() == 2);

    // the other preimage of x(1 + w) is 1/(1 + w): sigma = -w + w^2 - w^3 ...
    const BranchGroup* g1 = nullptr;
    for (const auto& g : c.branch_groups())
        if (g.alpha == NFElem(1)) g1 = &g;
    REQUIRE(g1 != nullptr);
    for (int k = 1; k <= 8; ++k)
        CHECK(g1->sigma.at(k) == NFElem(k % 2 ? -1 : 1));

    // x = infinity is covered by z = 0 and z = infinity, both unramified
    REQUIRE(c.infinities().size() == 2);
    CHECK(c.infinities()[0].at_z_infinity);
    CHECK(c.infinities()[0].ram == 1);
    REQUIRE(c.infinities()[1].z0.has_value());
    CHECK(*c.infinities()[1].z0 == Rat(0));
    CHECK(c.infinities()[1].ram == 1);

    // E(X, Y) = Y^2 - X Y + 1
    MultiPoly<Rat> e = implicit_equation(c);
    MultiPoly<Rat> X = MultiPoly<Rat>::var(0), Y = MultiPoly<Rat>::var(1);
    CHECK(e == Y * Y - X * Y + MultiPoly<Rat>(1));
}

TEST_CASE("curve x = z^3 - 3z: rational branch points, cubic implicit equation") {
    RatFunc<Rat> x(P({0, -3, 0, 1}));
    SpectralCurve c(x, Z, 8);
    CHECK(c.sheet_degree() == 3);
    REQUIRE(c.branch_groups().size() == 2);
    std::vector<Rat> alphas;
    for (const auto& g : c.branch_groups()) {
        CHECK(!g.field);
        alphas.push_back(g.alpha.rational_value());
        CHECK(g.sigma.at(1) == NFElem(-1));
        // sigma is an involution: sigma(sigma(w)) = w
        Series<NFElem> ss = g.sigma.compose(g.sigma.normalized());
        CHECK(ss.at(1) == NFElem(1));
        for (int k = 2; k <= ss.order(); ++k) CHECK(ss.at(k).is_zero());
    }
    std::sort(alphas.begin(), alphas.end(),
              [](const Rat& a, const Rat& b) { return a.num() < b.num(); });
    CHECK(alphas[0] == Rat(-1));
    CHECK(alphas[1] == Rat(1));

    MultiPoly<Rat> e = implicit_equation(c);
    MultiPoly<Rat> X = MultiPoly<Rat>::var(0), Y = MultiPoly<Rat>::var(1);
    CHECK(e == Y.pow(3) - Y.scaled(Rat(3)) - X);
}

TEST_CASE("curve with an irrational branch group") {
    // x' = 3z^2 - 1 is irreducible over Q
    RatFunc<Rat> x(P({0, -1, 0, 1}));
    SpectralCurve c(x, Z, 8);
    REQUIRE(c.branch_groups().size() == 1);
    const BranchGroup& g = c.branch_groups()[0];
    REQUIRE(g.field);
    CHECK(g.field->degree() == 2);
    CHECK(g.sigma.at(1) == NFElem(-1));
    // trace of alpha^2 over the two conjugates: 1/3 + 1/3
    CHECK((g.alpha * g.alpha).conjugate_sum() == Rat(2, 3));
    // a = x(alpha) = alpha^3 - alpha = (1/3 - 1)alpha = -2/3 alpha
    CHECK(g.a == g.alpha.pow(3) - g.alpha);
}

TEST_CASE("curve admission rules") {
    CHECK_THROWS_AS(SpectralCurve(RatFunc<Rat>(1), Z, 4), DegenerateCurve);
    CHECK_THROWS_AS(SpectralCurve(Z, Z, 4), DegenerateCurve);
    // x = z^3: dx-numerator has a double root
    CHECK_THROWS_AS(SpectralCurve(Z.pow(3), Z, 4), NonSimpleBranchPoint);
    // y with dy = 0 at the branch point of x = z^2
    CHECK_THROWS_AS(SpectralCurve(Z * Z, Z * Z, 4), CuspDetected);
    // y with a pole at the branch point
    CHECK_THROWS_AS(SpectralCurve(Z * Z, Z.inverse(), 4), CuspDetected);
}

TEST_CASE("with_order extends local series consistently") {
    RatFunc<Rat> x(P({1, 0, 1}), P({0, 1}));
    SpectralCurve c(x, Z, 5);
    SpectralCurve c2 = c.with_order(11);
    CHECK(c2.order() == 11);
    CHECK(c.fingerprint() == c2.fingerprint());
    const BranchGroup& g = c.branch_groups()[0];
    Series<NFElem> s = local_involution(c, g, 11);
    CHECK(s.order() >= 11);
    for (int k = 1; k <= 5; ++k) CHECK(s.at(k) == g.sigma.at(k));
}

TEST_CASE("sheet sum of the Bergmann kernel collapses to the double pole in x") {
    // sum over the fiber of x = w^3 - 3w of B(w_i, p), computed as a trace in
    // Q(p)(X)[w]/(w^3 - 3w - X); the result must be dx dx'/(x - x')^2, i.e.
    // x'(p)/(X - x(p))^2 once the dw_i/dx Jacobian is included.
    using K1 = RatFunc<Rat>;   // Q(p)
    using F = RatFunc<K1>;     // Q(p)(X)
    K1 p = K1::var();
    F X = F::var();

    Poly<F> fiber({-X, F(K1(-3)), F(), F(1)});
    // g(w) = 1 / ((w - p)^2 (3w^2 - 3))
    Poly<F> wmp({F(-p), F(1)});
    Poly<F> xp({F(K1(-3)), F(), F(K1(3))});
    RatFunc<F> g(Poly<F>(1), wmp * wmp * xp);

    F lhs = fiber_sum(g, fiber);
    K1 xofp = p.pow(3) - K1(3) * p;
    K1 xpofp = K1(3) * p * p - K1(3);
    F rhs = F(xpofp) / ((X - F(xofp)) * (X - F(xofp)));
    CHECK(lhs == rhs);
}
