#include "ctr/cauchy.hpp"

#include <array>

#include "ctr/expand.hpp"
#include "ctr/factor.hpp"
#include "ctr/fibersum.hpp"
#include "ctr/free_energy.hpp"
#include "ctr/hermite.hpp"
#include "ctr/linsolve.hpp"
#include "ctr/resultant.hpp"
#include "local_frame.hpp"

namespace ctr {

namespace {

Poly<Rat> lin(const Rat& root) {
    return Poly<Rat>(std::vector<Rat>{-root, Rat(1)});
}

// Fiber polynomial P(w) = x_num(w) - X x_den(w) over F = Q(X).
Poly<RatFunc<Rat>> fiber_poly(const RatFunc<Rat>& x) {
    using F = RatFunc<Rat>;
    int d = std::max(x.num().degree(), x.den().degree());
    std::vector<F> c(d + 1);
    for (int i = 0; i <= d; ++i)
        c[i] = F(Poly<Rat>(std::vector<Rat>{x.num().coeff(i)})) -
               F::var() * F(x.den().coeff(i));
    return Poly<RatFunc<Rat>>(std::move(c));
}

struct Ep {
    bool at_inf = false;
    Rat z0;
};

Ep endpoint_of(const SpectralCurve& curve, int idx) {
    const InfinityPoint& ip = curve.infinities()[idx];
    if (ip.at_z_infinity) return {true, Rat()};
    return {false, *ip.z0};
}

Rat res_ep(const RatFunc<Rat>& f, const Ep& e) {
    return e.at_inf ? residue_at_infinity(f) : residue_at(f, e.z0);
}

int pole_order_at(const RatFunc<Rat>& f, const Ep& e) {
    if (f.is_zero()) return 0;
    if (e.at_inf) return std::max(0, f.num().degree() - f.den().degree());
    Poly<Rat> d = f.den(), l = lin(e.z0);
    int m = 0;
    while (!d.is_zero() && d.eval(e.z0).is_zero()) {
        d = d / l;
        ++m;
    }
    return m;
}

// True when the denominator is a pure power of the variable (poles at 0 only).
bool monomial_denominator(const Poly<Rat>& d) {
    for (int i = 0; i < d.degree(); ++i)
        if (!d.coeff(i).is_zero()) return false;
    return true;
}

}  // namespace

CubicStructureReport structure_check(const SpectralCurve& curve) {
    if (curve.sheet_degree() != 3)
        throw NotCubic("sheet degree is " + std::to_string(curve.sheet_degree()));
    CubicStructureReport rep;
    rep.three_simple_infinities = curve.has_cauchy_infinities();
    if (!rep.three_simple_infinities)
        rep.fail("the points over x = infinity are not three simple rational points");

    // eliminate z; unlike implicit_equation, tolerate a non-constant leading
    // Y-coefficient (the normal form divides by it)
    using MP = MultiPoly<Rat>;
    const RatFunc<Rat>&x = curve.x(), &y = curve.y();
    int dz = std::max({x.num().degree(), x.den().degree(), y.num().degree(),
                       y.den().degree()});
    std::vector<MP> ac(dz + 1), bc(dz + 1);
    for (int i = 0; i <= dz; ++i) {
        ac[i] = MP(x.num().coeff(i)) - MP::var(0) * MP(x.den().coeff(i));
        bc[i] = MP(y.num().coeff(i)) - MP::var(1) * MP(y.den().coeff(i));
    }
    MP r = resultant(Poly<MP>(std::move(ac)), Poly<MP>(std::move(bc)));
    if (r.is_zero() || r.degree(1) != 3) {
        rep.fail("elimination did not produce a cubic in y");
        return rep;
    }
    rep.y2_coefficient_vanishes = r.coeff_of(1, 2).is_zero();

    // the same fact through the symmetric-function route
    using F = RatFunc<Rat>;
    Poly<F> P = fiber_poly(x);
    RatFunc<F> yF = map_ratfunc<F>(y, [](const Rat& q) { return F(q); });
    F ssum = fiber_sum(yF, P);
    rep.sheet_sum_vanishes = ssum.is_zero();
    if (rep.y2_coefficient_vanishes != rep.sheet_sum_vanishes)
        rep.fail("y^2 coefficient and sheet sum of y disagree");
    if (!rep.sheet_sum_vanishes)
        rep.fail("sheet sum of y does not vanish: " + ssum.str("x"));

    Poly<Rat> p3 = detail::univariate_poly(r.coeff_of(1, 3), 0);
    rep.rhat = RatFunc<Rat>(-detail::univariate_poly(r.coeff_of(1, 1), 0), p3);
    rep.d = RatFunc<Rat>(-detail::univariate_poly(r.coeff_of(1, 0), 0), p3);
    RatFunc<Rat> E = y.pow(3) - rep.rhat.compose(x) * y - rep.d.compose(x);
    if (!E.is_zero()) rep.fail("y^3 - R(x) y - D(x) fails on the parametrization");

    auto pole_check = [&rep](const RatFunc<Rat>& f, int maxord, int& out,
                             const std::string& name) {
        if (!monomial_denominator(f.den())) {
            rep.fail(name + " has a pole away from x = 0: denominator " +
                     f.den().str("x"));
            return;
        }
        out = f.den().degree();
        if (out > maxord)
            rep.fail(name + " pole order " + std::to_string(out) + " exceeds " +
                     std::to_string(maxord));
    };
    pole_check(rep.rhat, 2, rep.rhat_pole_order, "R");
    pole_check(rep.d, 3, rep.d_pole_order, "D");
    return rep;
}

ModelData extract_model(const SpectralCurve& curve) {
    InfinityLabels lab = classify_infinities(curve);
    std::array<Ep, 3> e = {endpoint_of(curve, lab.i0), endpoint_of(curve, lab.i1),
                           endpoint_of(curve, lab.i2)};
    RatFunc<Rat> ydx = curve.y() * curve.xprime();

    Rat r0 = res_ep(ydx, e[0]), r1 = res_ep(ydx, e[1]), r2 = res_ep(ydx, e[2]);

    // residues away from the infinities would be hard-edge log charges
    auto [prim, rem] = hermite_reduce(ydx);
    if (!rem.is_zero()) {
        Poly<Rat> allowed(1);
        for (int i = 0; i < 3; ++i)
            if (!e[i].at_inf) allowed *= lin(e[i].z0);
        Poly<Rat> g = Poly<Rat>::gcd(rem.den(), allowed);
        if (g.degree() != rem.den().degree())
            throw Error("extract_model: y dx has residues away from the infinities "
                        "(hard-edge log charges are unsupported)");
    }
    if (!(r0 + r1 + r2).is_zero())
        throw ResidueInconsistency("infinity residues of y dx do not sum to zero");
    if (!r0.is_zero())
        throw Error("extract_model: nonzero residue at the bounded infinity "
                    "(eta-shifts require hard-edge log charges, unsupported)");

    ModelData md;
    md.T = r1;
    md.eps1 = -md.T;
    md.eps2 = md.T;

    // ydx / x^k can carry a residue at the outer infinities up to one below
    // the pole order of ydx there
    int kmax = std::max(pole_order_at(ydx, e[1]), pole_order_at(ydx, e[2])) - 1;
    for (int k = 1; k <= kmax; ++k) {
        RatFunc<Rat> f = ydx / curve.x().pow(k);
        Rat a1 = res_ep(f, e[1]), a2 = res_ep(f, e[2]);
        Rat t1 = Rat(2) * a1 + a2;
        Rat t2 = a1 + Rat(2) * a2;
        if (k % 2) t2 = -t2;
        if (!t1.is_zero()) md.times[{1, k}] = t1;
        if (!t2.is_zero()) md.times[{2, k}] = t2;
    }
    return md;
}

LoopEquationReport loop_equation_check(const SpectralCurve& curve, int h,
                                       CorrelatorCache* cache) {
    if (h < 1) throw Error("loop_equation_check: h must be at least 1");
    LoopEquationReport rep;
    CorrelatorCache local(curve.fingerprint());
    if (!cache) cache = &local;

    const RatFunc<Rat>&x = curve.x(), &xp = curve.xprime(), &y = curve.y();
    std::vector<RatFunc<Rat>> W1(h + 1);
    for (int m = 1; m <= h; ++m)
        W1[m] = detail::to_univariate(omega(curve, 1, m, cache).value, 0) / xp;

    RatFunc<Rat> w2d;
    if (h == 1) {
        // regularized diagonal of (B - dx dx/(x-x')^2) / dx dx in the
        // z-uniformizer
        RatFunc<Rat> x2 = xp.derivative(), x3 = x2.derivative();
        w2d = x2 * x2 / (xp.pow(4) * RatFunc<Rat>(4)) - x3 / (xp.pow(3) * RatFunc<Rat>(6));
    } else {
        w2d = detail::diagonal_univariate(omega(curve, 2, h - 1, cache).value) / (xp * xp);
    }

    RatFunc<Rat> g = RatFunc<Rat>(2) * y * W1[h];
    for (int m = 1; m <= h - 1; ++m) g -= W1[m] * W1[h - m];
    g -= w2d;

    using F = RatFunc<Rat>;
    Poly<F> P = fiber_poly(x);
    RatFunc<F> gF = map_ratfunc<F>(g, [](const Rat& q) { return F(q); });
    F S = fiber_sum(gF, P);

    if (!monomial_denominator(S.den())) {
        rep.fail("S(x) has poles away from x = 0: denominator " + S.den().str("x"));
        return rep;
    }
    rep.pole_order_at_zero = S.den().degree();
    if (rep.pole_order_at_zero > 2)
        rep.fail("S(x) pole order at x = 0 is " + std::to_string(rep.pole_order_at_zero));
    rep.polynomial_degree =
        S.is_zero() ? -1 : S.num().degree() - S.den().degree();
    return rep;
}

RatFunc<Rat> cauchy_fixture_x() {
    Poly<Rat> num(std::vector<Rat>{Rat(), Rat(5, 3), Rat(), Rat(1)});
    Poly<Rat> den(std::vector<Rat>{Rat(-1), Rat(), Rat(1)});
    return RatFunc<Rat>(std::move(num), std::move(den));
}

SpectralCurve build_cauchy_curve(const CauchyBuildSpec& spec, int order) {
    if (!spec.eta1.is_zero() || !spec.eta2.is_zero())
        throw Error("build_cauchy_curve: nonzero eta needs hard-edge poles of y dx "
                    "(unsupported)");
    const RatFunc<Rat>& x = spec.x;
    if (x.num().degree() != x.den().degree() + 1)
        throw Error("build_cauchy_curve: x must have a simple pole at z = infinity");
    std::vector<Rat> zs;
    for (const auto& [f, m] : factor_rationals(x.den())) {
        if (f.degree() != 1 || m != 1)
            throw Error("build_cauchy_curve: finite poles of x must be simple with "
                        "rational location");
        zs.push_back(-f.coeff(0));
    }
    if (zs.size() != 2)
        throw Error("build_cauchy_curve: x must have exactly two finite poles");

    using F = RatFunc<Rat>;
    Poly<F> P = fiber_poly(x);
    RatFunc<Rat> xp = x.derivative();

    bool any_solution = false;
    for (int m = 1 + spec.depth; m <= 3 + spec.depth; ++m) {
        Poly<Rat> D = (lin(zs[0]) * lin(zs[1])).pow(m);
        int dim = D.degree() + 1;  // numerator degree <= deg D keeps y bounded at z = inf
        std::vector<F> trace(dim);
        std::vector<Rat> res1(dim), res2(dim);
        for (int i = 0; i < dim; ++i) {
            RatFunc<Rat> bi(Poly<Rat>::monomial(Rat(1), i), D);
            trace[i] = fiber_sum(map_ratfunc<F>(bi, [](const Rat& q) { return F(q); }), P);
            res1[i] = residue_at(bi * xp, zs[0]);
            res2[i] = residue_at(bi * xp, zs[1]);
        }
        Poly<Rat> L(1);
        for (int i = 0; i < dim; ++i) {
            Poly<Rat> g = Poly<Rat>::gcd(L, trace[i].den());
            L = L * (trace[i].den() / g);
        }
        std::vector<Poly<Rat>> num(dim);
        int maxdeg = -1;
        for (int i = 0; i < dim; ++i) {
            num[i] = trace[i].num() * (L / trace[i].den());
            maxdeg = std::max(maxdeg, num[i].degree());
        }
        std::vector<std::vector<Rat>> A;
        std::vector<Rat> b;
        for (int r = 0; r <= maxdeg; ++r) {
            std::vector<Rat> row(dim);
            for (int i = 0; i < dim; ++i) row[i] = num[i].coeff(r);
            A.push_back(std::move(row));
            b.push_back(Rat());
        }
        A.push_back(res1);
        b.push_back(spec.T + spec.eta1);
        A.push_back(res2);
        b.push_back(-(spec.T + spec.eta2));
        auto sol = solve_linear(A, b);
        if (!sol) continue;
        Poly<Rat> N;
        for (int i = 0; i < dim; ++i) N += Poly<Rat>::monomial((*sol)[i], i);
        if (N.is_zero()) continue;
        any_solution = true;
        try {
            SpectralCurve c(x, RatFunc<Rat>(N, D), order);
            if (structure_check(c).pass) return c;
        } catch (const CuspDetected&) {
        } catch (const NonSimpleBranchPoint&) {
        } catch (const DegenerateCurve&) {
        }
    }
    if (any_solution)
        throw DegenerateCurve("build_cauchy_curve: solutions exist but none is admitted");
    throw InfeasibleConstraints("build_cauchy_curve: no nonzero y meets the constraints");
}

// Both kernel identities are rational in two variables.  One variable stays
// fully symbolic; the other is specialized at more rational points than the
// p-degree of the cross-multiplied difference (bounded by the x-degrees), so
// agreement at all samples is an exact two-variable proof.
CheckReport variation_identity_check(const SpectralCurve& curve) {
    CheckReport rep;
    using F = RatFunc<Rat>;
    const RatFunc<Rat>&x = curve.x(), &xp = curve.xprime();
    Poly<F> P = fiber_poly(x);  // fiber over symbolic X
    RatFunc<F> xpw = map_ratfunc<F>(xp, [](const Rat& q) { return F(q); });

    int samples = 16 + 8 * (x.num().degree() + x.den().degree());
    int done = 0;
    bool neg_done = false;
    for (long k = 2; done < samples && k < 100 * samples; ++k) {
        Rat p(k);
        if (x.has_pole_at(p) || curve.dx_numerator().eval(p).is_zero()) continue;
        Rat xv = x.eval(p), xpv = xp.eval(p);

        // full sheet sum, X symbolic:
        //   Sum_i 1/((w_i - p)^2 x'(w_i)) = x'(p)/(X - x(p))^2
        Poly<F> lin(std::vector<F>{F(-p), F(1)});
        RatFunc<F> g = RatFunc<F>(1) / (RatFunc<F>(lin * lin) * xpw);
        F lhs;
        try {
            lhs = fiber_sum(g, P);
        } catch (const PoleCollision&) {
            continue;
        } catch (const NonSeparable&) {
            continue;  // p sits over a critical value of x
        }
        F rhs = F(xpv) * (F::var() - F(xv)).pow(2).inverse();
        if (!(lhs == rhs)) {
            rep.fail("sheet-sum kernel identity fails at p = " + p.str());
            return rep;
        }
        if (!neg_done) {
            if (lhs * F(2) == rhs) {
                rep.fail("negative control: doubled kernel also passes");
                return rep;
            }
            neg_done = true;
        }

        // one sheet removed at the rational point p, spectator p' symbolic:
        // the sum over the other preimages of x(p) has the double pole of the
        // full sum minus the local B-diagonal
        Poly<Rat> Pp = x.num() - x.den() * Poly<Rat>(std::vector<Rat>{xv});
        Poly<Rat> cof, remq;
        Poly<Rat>::divrem(Pp, Poly<Rat>(std::vector<Rat>{-p, Rat(1)}), cof, remq);
        if (!remq.is_zero()) {
            rep.fail("removed sheet is not on the fiber");
            return rep;
        }
        Poly<F> linq(std::vector<F>{-F::var(), F(1)});
        RatFunc<F> h = RatFunc<F>(1) / (RatFunc<F>(linq * linq) * xpw);
        F l2;
        try {
            l2 = fiber_sum(h, map_poly<F>(cof, [](const Rat& q) { return F(q); }));
        } catch (const PoleCollision&) {
            continue;
        } catch (const NonSeparable&) {
            continue;  // p sits over a critical value of x
        }
        F full = xp * (F(xv) - x).pow(2).inverse();
        F diag = ((F(p) - F::var()).pow(2) * F(xpv)).inverse();
        if (!(l2 == full - diag)) {
            rep.fail("one-sheet-removed kernel identity fails at p = " + p.str());
            return rep;
        }
        ++done;
    }
    if (done < samples)
        rep.fail("not enough regular sample points for the kernel identities");
    return rep;
}

}  // namespace ctr
