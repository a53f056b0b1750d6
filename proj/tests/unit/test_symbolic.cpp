#include "doctest.h"

#include "ctr/fibersum.hpp"
#include "ctr/hermite.hpp"
#include "ctr/linsolve.hpp"
#include "ctr/resultant.hpp"

using namespace ctr;

namespace {
using F = RatFunc<Rat>;      // field Q(X)
using PW = Poly<F>;          // polynomials in the fiber variable w
F X() { return F::var(); }
}  // namespace

TEST_CASE("fiber_sum basics") {
    PW w = PW::var();
    PW P = w * w * w - w.scaled(F(3)) - PW(X());
    CHECK(fiber_sum(RatFunc<F>(w), P) == F(0));
    CHECK(fiber_sum(RatFunc<F>(w * w), P) == F(6));
    // g = 1/(q - w) with q a second spectator: use coefficients in Q(q)
    // realized by viewing X as q: sum_i 1/(q - w_i) = P'(q)/P(q) with X=x(q).
    // Here take g = 1/(5 - w) at the field level: value P'(5)/P(5) with
    // symbolic X: (3*25-3)/(125-15-X) = 72/(110-X).
    RatFunc<F> g(PW(F(1)), PW(F(5)) - w);
    F expect = F(72) / (F(110) - X());
    CHECK(fiber_sum(g, P) == expect);
    // separability failure
    PW Q = (w - PW(F(1))) * (w - PW(F(1)));
    CHECK_THROWS_AS(fiber_sum(RatFunc<F>(w), Q), NonSeparable);
    // pole collision: pole at a root of P identically
    CHECK_THROWS_AS(fiber_sum(RatFunc<F>(PW(F(1)), P), P), PoleCollision);
}

TEST_CASE("solve_linear and nullspace") {
    using Row = std::vector<Rat>;
    std::vector<Row> A = {{Rat(2), Rat(1)}, {Rat(1), Rat(-1)}};
    auto x = solve_linear(A, {Rat(5), Rat(1)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == Rat(2));
    CHECK((*x)[1] == Rat(1));
    // inconsistent
    std::vector<Row> B = {{Rat(1), Rat(1)}, {Rat(2), Rat(2)}};
    CHECK(!solve_linear(B, {Rat(1), Rat(3)}).has_value());
    // underdetermined: free variable set to zero
    auto y = solve_linear(std::vector<Row>{{Rat(1), Rat(1)}}, {Rat(3)});
    REQUIRE(y.has_value());
    CHECK((*y)[0] == Rat(3));
    CHECK((*y)[1] == Rat(0));
    auto ns = nullspace(B);
    REQUIRE(ns.size() == 1);
    CHECK(ns[0][0] + ns[0][1] == Rat(0));
}

TEST_CASE("resultant eliminates the parameter") {
    using M = MultiPoly<Rat>;
    // eliminate z from X - z^2, Y - z: expect +-(Y^2 - X)
    M Xv = M::var(0), Yv = M::var(1);
    Poly<M> a(std::vector<M>{Xv, M(), M(-1)});  // X - z^2
    Poly<M> b(std::vector<M>{Yv, M(-1)});       // Y - z
    M r = resultant(a, b);
    M e = Yv * Yv - Xv;
    CHECK((r == e || r == -e));
    // x = z + 1/z, y = z: eliminate z from  z^2 - X z + 1,  z - Y
    Poly<M> a2(std::vector<M>{M(1), -Xv, M(1)});
    Poly<M> b2(std::vector<M>{-Yv, M(1)});
    M r2 = resultant(a2, b2);
    M e2 = Yv * Yv - Xv * Yv + M(1);
    CHECK((r2 == e2 || r2 == -e2));
}

TEST_CASE("hermite reduction and log ledger") {
    F z = F::var();
    // f = 1/z^2: integral -1/z, no logs
    auto [g1, r1] = hermite_reduce(F(1) / (z * z));
    CHECK(g1 == F(-1) / z);
    CHECK(r1.is_zero());
    // f = z - 1/z + 3/(z-2): rational part z^2/2, logs -ln z + 3 ln(z-2)
    F f = z - F(1) / z + F(3) / (z - F(2));
    PrimitiveQ p = primitive_with_logs(f);
    CHECK(p.tail.is_zero());
    CHECK(p.rational == (z * z) / F(2));
    REQUIRE(p.logs.size() == 2);
    Rat c0, c2;
    for (auto& [c, r] : p.logs) (r.is_zero() ? c0 : c2) = c;
    CHECK(c0 == Rat(-1));
    CHECK(c2 == Rat(3));
    // derivative check: d/dz(rational) + sum c/(z-r) == f
    F back = p.rational.derivative();
    for (auto& [c, r] : p.logs) back += F(Rat(c)) / (z - F(Rat(r)));
    CHECK(back == f);
    // mixed pole orders: 1/(z^2 (z-1)) = -1/z^2 - 1/z ... check via derivative
    F h = F(1) / (z * z * (z - F(1)));
    PrimitiveQ q = primitive_with_logs(h);
    CHECK(q.tail.is_zero());
    F back2 = q.rational.derivative();
    for (auto& [c, r] : q.logs) back2 += F(Rat(c)) / (z - F(Rat(r)));
    CHECK(back2 == h);
    // irrational log arguments stay in the tail
    PrimitiveQ t = primitive_with_logs(F(1) / (z * z - F(2)));
    CHECK(!t.tail.is_zero());
    CHECK(t.logs.empty());
}
