#include "doctest.h"

#include <cmath>
#include <set>

#include "ctr/cauchy.hpp"
#include "ctr/fibersum.hpp"
#include "ctr/free_energy.hpp"
#include "ctr/linsolve.hpp"

using namespace ctr;

namespace {

using MP = MultiPoly<Rat>;
using MRat = MultiRat<Rat>;

const RatFunc<Rat> Z = RatFunc<Rat>::var();

RatFunc<Rat> C(long n, long d = 1) { return RatFunc<Rat>(Rat(n, d)); }

SpectralCurve fixture(const Rat& T = Rat(1), int depth = 0, int order = 16) {
    CauchyBuildSpec spec;
    spec.x = cauchy_fixture_x();
    spec.T = T;
    spec.depth = depth;
    return build_cauchy_curve(spec, order);
}

}  // namespace

TEST_CASE("structure check on the cubic x = z^3 - 3z") {
    SpectralCurve c(Z.pow(3) - C(3) * Z, Z, 12);
    CubicStructureReport r = structure_check(c);
    // the curve has one triply ramified infinity, so it is not Cauchy-shaped,
    // but the algebraic normal form is still extracted exactly
    CHECK_FALSE(r.pass);
    CHECK_FALSE(r.three_simple_infinities);
    CHECK(r.failures.size() == 1);
    CHECK(r.y2_coefficient_vanishes);
    CHECK(r.sheet_sum_vanishes);
    // y^3 = (z^3 - 3z) + 3z, so R = 3 and D = x
    CHECK(r.rhat == C(3));
    CHECK(r.d == Z);
    CHECK(r.rhat_pole_order == 0);
    CHECK(r.d_pole_order == 0);

    // shifting y breaks the sheet sum
    SpectralCurve bad(Z.pow(3) - C(3) * Z, Z + C(1), 12);
    CubicStructureReport rb = structure_check(bad);
    CHECK_FALSE(rb.pass);
    CHECK_FALSE(rb.sheet_sum_vanishes);
    CHECK_FALSE(rb.y2_coefficient_vanishes);

    SpectralCurve quad(Z * Z, Z, 8);
    CHECK_THROWS_AS(structure_check(quad), NotCubic);
}

TEST_CASE("builder solves the fixture and extract_model inverts it") {
    SpectralCurve c = fixture();
    CHECK(structure_check(c).pass);

    ModelData md = extract_model(c);
    CHECK(md.T == Rat(1));
    CHECK(md.eta1.is_zero());
    CHECK(md.eta2.is_zero());
    CHECK(md.eps1 == Rat(-1));
    CHECK(md.eps2 == Rat(1));
    CHECK_FALSE(md.times.empty());

    // the labels: infinity_0 is z = infinity (bounded y), the outer two are
    // the finite poles in listed order, and T is the residue at the first
    InfinityLabels lab = classify_infinities(c);
    CHECK(lab.i0 == 0);
    RatFunc<Rat> ydx = c.y() * c.xprime();
    CHECK(residue_at_infinity(ydx).is_zero());
    CHECK(residue_at(ydx, Rat(1)) == Rat(1));
    CHECK(residue_at(ydx, Rat(-1)) == Rat(-1));

    // the model map is linear in y
    SpectralCurve c2(c.x(), c.y() * C(2), 16);
    ModelData md2 = extract_model(c2);
    CHECK(md2.T == Rat(2));
    for (const auto& [kj, t] : md.times) CHECK(md2.time(kj.first, kj.second) == Rat(2) * t);

    // eta is outside the supported class
    CauchyBuildSpec bad;
    bad.x = cauchy_fixture_x();
    bad.eta1 = Rat(1);
    CHECK_THROWS_AS(build_cauchy_curve(bad), Error);
}

TEST_CASE("y dx decomposes over the J-rows of its own model") {
    SpectralCurve c = fixture();
    ModelData md = extract_model(c);
    CHECK(ydx_decomposition_check(c, md).pass);

    ModelData wrong = md;
    wrong.times[{1, 1}] += Rat(1);
    CHECK_FALSE(ydx_decomposition_check(c, wrong).pass);

    // the two faces of the H operator: branch-point residues against Psi
    // versus -Sum_a t_a J_a, here on phi = omega_1^(1)
    CorrelatorCache cache(c.fingerprint());
    MultiDifferential w11 = omega(c, 1, 1, &cache);
    Rat hval = h_applied(c, w11).value.constant_value();
    auto upoly = [](const MP& p) {
        Poly<MP> u = p.as_poly_in(0);
        std::vector<Rat> coeffs(u.degree() + 1);
        for (int i = 0; i <= u.degree(); ++i) coeffs[i] = u.coeff(i).constant_value();
        return Poly<Rat>(std::move(coeffs));
    };
    Poly<Rat> den(1);
    for (const auto& [f, e] : w11.value.den()) den *= upoly(f).pow(e);
    RatFunc<Rat> phi(upoly(w11.value.num()), den);

    LogValue sum = j_apply(c, ModuliDirection::total_charge(), phi).scaled(md.T);
    for (const auto& [kj, t] : md.times)
        sum += j_apply(c, ModuliDirection::potential_time(kj.first, kj.second), phi)
                   .scaled(t);
    CHECK(sum.is_rational());
    CHECK(hval == -sum.q0);
}

TEST_CASE("loop equations hold at h = 1, 2 and fail for a corrupted cache") {
    SpectralCurve c = fixture(Rat(1), 0, 20);
    LoopEquationReport r1 = loop_equation_check(c, 1);
    CHECK(r1.pass);
    CHECK(r1.pole_order_at_zero <= 2);
    LoopEquationReport r2 = loop_equation_check(c, 2);
    CHECK(r2.pass);

    // pre-seed omega_1^(1) with a spurious pole at z = 3 (x = 4): the cache
    // is first-write-wins, so the recursion picks up the corrupted value
    CorrelatorCache bad(c.fingerprint());
    MultiDifferential w11 = omega(c, 1, 1);
    w11.value += MRat(MP(Rat(1)), {{MP::var(0) - MP(Rat(3)), 4}});
    bad.put(w11);
    CHECK_FALSE(loop_equation_check(c, 1, &bad).pass);
}

TEST_CASE("sheet-sum kernel identities") {
    CHECK(variation_identity_check(SpectralCurve(Z.pow(3) - C(3) * Z, Z, 8)).pass);
    CHECK(variation_identity_check(SpectralCurve(Z * Z, Z, 8)).pass);
    CHECK(variation_identity_check(fixture(Rat(1), 0, 8)).pass);
}

TEST_CASE("F1 gradient: omega route equals tau route in every direction") {
    SpectralCurve c = fixture();
    CorrelatorCache cache(c.fingerprint());
    ModelData md = extract_model(c);

    std::vector<ModuliDirection> dirs = {ModuliDirection::total_charge(),
                                         ModuliDirection::eta(1),
                                         ModuliDirection::eta(2)};
    std::set<int> degrees;
    for (const auto& [kj, t] : md.times) degrees.insert(kj.second);
    degrees.insert(1);
    for (int k : {1, 2})
        for (int j : degrees) dirs.push_back(ModuliDirection::potential_time(k, j));

    for (const auto& d : dirs) {
        F1Gradient g = f1_gradient(c, d, &cache);
        INFO("direction ", d.str());
        CHECK(g.agree);
        CHECK(g.via_omega == g.via_tau);
    }
}

TEST_CASE("planar free energy: finite-difference gradient oracle") {
    SpectralCurve c1 = fixture(Rat(1));
    RatFunc<Rat> x = c1.x(), y1 = c1.y();
    ModelData m1 = extract_model(c1);
    RatFunc<Rat> ydx = y1 * c1.xprime();

    auto f0 = [&](const RatFunc<Rat>& y) {
        SpectralCurve c(x, y, 16);
        return free_energy_0(c, extract_model(c)).to_double();
    };
    auto gradient_check = [&](const RatFunc<Rat>& v, const ModelData& mv) {
        // predicted slope: Sum_a dt_a J_a(y dx) with dt from the model of y1+v
        double predicted =
            (mv.T - m1.T).to_double() *
            j_apply(c1, ModuliDirection::total_charge(), ydx).to_double();
        std::set<std::pair<int, int>> keys;
        for (const auto& [kj, t] : m1.times) keys.insert(kj);
        for (const auto& [kj, t] : mv.times) keys.insert(kj);
        for (const auto& kj : keys) {
            Rat dt = mv.time(kj.first, kj.second) - m1.time(kj.first, kj.second);
            if (dt.is_zero()) continue;
            predicted += dt.to_double() *
                         j_apply(c1, ModuliDirection::potential_time(kj.first, kj.second), ydx)
                             .to_double();
        }
        auto central = [&](const Rat& eps) {
            RatFunc<Rat> ve(eps);
            return (f0(y1 + v * ve) - f0(y1 - v * ve)) / (2 * eps.to_double());
        };
        Rat d(1, 32);
        double slope = (4 * central(d / Rat(2)) - central(d)) / 3;  // Richardson
        INFO("predicted ", predicted, " measured ", slope);
        CHECK(std::abs(slope - predicted) < 1e-6);
    };

    // total-charge direction: the T = 2 solution minus the T = 1 solution
    SpectralCurve c2 = fixture(Rat(2));
    gradient_check(c2.y() - y1, extract_model(SpectralCurve(x, c2.y(), 16)));

    // potential-time direction: a trace-free, residue-free ansatz element
    // (nullspace of the depth-2 builder system), so T stays fixed
    RatFunc<Rat> v2;
    for (int depth = 2; depth <= 4 && v2.is_zero(); ++depth) {
        using F = RatFunc<Rat>;
        Poly<Rat> D(1);
        for (int i = 0; i < depth; ++i) D *= x.den();
        int dim = D.degree() + 1;
        std::vector<F> trace(dim);
        std::vector<Rat> res1(dim), res2(dim);
        Poly<F> P(std::vector<F>{
            F(Poly<Rat>(std::vector<Rat>{Rat(), Rat(-1)})),  // -X w^0 ... built below
        });
        {
            int d = std::max(x.num().degree(), x.den().degree());
            std::vector<F> pc(d + 1);
            for (int i = 0; i <= d; ++i)
                pc[i] = F(Poly<Rat>(std::vector<Rat>{x.num().coeff(i)})) -
                        F::var() * F(x.den().coeff(i));
            P = Poly<F>(std::move(pc));
        }
        for (int i = 0; i < dim; ++i) {
            RatFunc<Rat> bi(Poly<Rat>::monomial(Rat(1), i), D);
            trace[i] = fiber_sum(map_ratfunc<F>(bi, [](const Rat& q) { return F(q); }), P);
            res1[i] = residue_at(bi * c1.xprime(), Rat(1));
            res2[i] = residue_at(bi * c1.xprime(), Rat(-1));
        }
        Poly<Rat> L(1);
        for (int i = 0; i < dim; ++i)
            L = L * (trace[i].den() / Poly<Rat>::gcd(L, trace[i].den()));
        int maxdeg = -1;
        std::vector<Poly<Rat>> num(dim);
        for (int i = 0; i < dim; ++i) {
            num[i] = trace[i].num() * (L / trace[i].den());
            maxdeg = std::max(maxdeg, num[i].degree());
        }
        std::vector<std::vector<Rat>> A;
        for (int r = 0; r <= maxdeg; ++r) {
            std::vector<Rat> row(dim);
            for (int i = 0; i < dim; ++i) row[i] = num[i].coeff(r);
            A.push_back(std::move(row));
        }
        A.push_back(res1);
        A.push_back(res2);
        auto null = nullspace(A);
        if (null.empty()) continue;
        Poly<Rat> N;
        for (int i = 0; i < dim; ++i) N += Poly<Rat>::monomial(null[0][i], i);
        v2 = RatFunc<Rat>(N, D);
    }
    REQUIRE_FALSE(v2.is_zero());
    ModelData mdv = extract_model(SpectralCurve(x, y1 + v2, 16));
    CHECK(mdv.T == m1.T);
    gradient_check(v2, mdv);
}
