#include "ctr/spectral_curve.hpp"

#include <algorithm>

#include "ctr/factor.hpp"
#include "ctr/resultant.hpp"

namespace ctr {

namespace {

BranchGroup build_group(const RatFunc<Rat>& x, const RatFunc<Rat>& y,
                        const RatFunc<Rat>& xp, const Poly<Rat>& modulus,
                        int order) {
    BranchGroup g;
    g.modulus = modulus.monic();
    if (g.modulus.degree() > 8)
        throw IrreducibilityFailure("branch factor degree " +
                                    std::to_string(g.modulus.degree()) +
                                    " beyond supported bound");
    if (g.modulus.degree() == 1) {
        g.alpha = NFElem(-g.modulus.coeff(0));
    } else {
        g.field = std::make_shared<const NumberField>(g.modulus, "A");
        g.alpha = NFElem::generator(g.field);
    }
    RatFunc<NFElem> xn = lift_nf(x), yn = lift_nf(y), xpn = lift_nf(xp);

    g.a = xn.eval(g.alpha);
    // the square root costs one order, so expand x one past the target
    Series<NFElem> xw = laurent_expand(xn, g.alpha, order + 1);
    g.t = xw - Series<NFElem>::constant(g.a, order + 1);
    if (!g.t.at(1).is_zero())
        throw Error("internal: branch point is not a critical point");
    g.c2 = g.t.at(2);
    if (g.c2.is_zero())
        throw NonSimpleBranchPoint("dx has a zero of order > 1 at a branch point");

    // u = w (1 + ...) with u^2 = (x - a)/c2, then the involution by reversion
    g.u = series_sqrt_unit(g.t.scaled(g.c2.inverse()).normalized());
    g.w_of_u = g.u.reversion();
    g.sigma = g.w_of_u.compose((-g.u).normalized());
    if (!(g.sigma.at(1) == NFElem(-1)))
        throw Error("internal: involution derivative is not -1");

    g.y_w = laurent_expand(yn, g.alpha, order);
    if (!g.y_w.is_zero_to_order() && g.y_w.valuation() < 0)
        throw CuspDetected("y has a pole at a branch point");
    g.y_u = g.y_w.compose(g.w_of_u);
    if (g.y_u.at(1).is_zero())
        throw CuspDetected("dy vanishes at a branch point (y'(alpha) = 0)");
    g.xp_w = laurent_expand(xpn, g.alpha, order);
    return g;
}

}  // namespace

SpectralCurve::SpectralCurve(RatFunc<Rat> x, RatFunc<Rat> y, int order)
    : x_(std::move(x)), y_(std::move(y)), order_(order) {
    if (x_.num().degree() <= 0 && x_.den().degree() <= 0)
        throw DegenerateCurve("x is constant");
    d_ = std::max(x_.num().degree(), x_.den().degree());
    if (d_ < 2) throw DegenerateCurve("sheet degree must be at least 2");
    xp_ = x_.derivative();
    if (xp_.is_zero()) throw DegenerateCurve("dx vanishes identically");
    dxnum_ = xp_.num().monic();

    for (const auto& [factor, mult] : factor_rationals(dxnum_)) {
        if (mult > 1)
            throw NonSimpleBranchPoint("repeated root of the dx-numerator: " +
                                       factor.str());
        groups_.push_back(build_group(x_, y_, xp_, factor, order_));
    }

    // points above x = infinity: finite poles of x plus possibly z = infinity
    for (const auto& [factor, mult] : factor_rationals(x_.den())) {
        InfinityPoint ip;
        ip.minimal = factor;
        ip.ram = mult;
        if (factor.degree() == 1) ip.z0 = -factor.coeff(0);
        inf_.push_back(std::move(ip));
    }
    if (x_.num().degree() > x_.den().degree()) {
        InfinityPoint ip;
        ip.at_z_infinity = true;
        ip.ram = x_.num().degree() - x_.den().degree();
        inf_.insert(inf_.begin(), std::move(ip));
    }
    int ramsum = 0;
    for (const auto& ip : inf_) ramsum += ip.ram * std::max(1, ip.minimal.degree());
    if (ramsum != d_) throw Error("internal: ramification indices do not sum to d");

    // default base point: smallest non-negative integer that is regular
    for (long k = 0;; ++k) {
        Rat o(k);
        if (is_regular_base(o)) {
            o_ = o;
            break;
        }
        if (k > 1000) throw DegenerateCurve("no regular base point found");
    }
}

bool SpectralCurve::is_regular_base(const Rat& o) const {
    if (x_.has_pole_at(o) || y_.has_pole_at(o)) return false;
    if (dxnum_.eval(o).is_zero()) return false;
    return true;
}

void SpectralCurve::set_base_point(const Rat& o) {
    if (!is_regular_base(o)) throw Error("base point not regular");
    o_ = o;
}

std::uint64_t SpectralCurve::fingerprint() const {
    return fnv1a(x_.str() + "|" + y_.str());
}

bool SpectralCurve::has_cauchy_infinities() const {
    if (d_ != 3 || inf_.size() != 3) return false;
    for (const auto& ip : inf_) {
        if (ip.ram != 1) return false;
        if (!ip.at_z_infinity && !ip.z0.has_value()) return false;
    }
    return true;
}

Series<NFElem> local_involution(const SpectralCurve& curve, const BranchGroup& g,
                                int order) {
    if (order <= curve.order()) return g.sigma;
    return build_group(curve.x(), curve.y(), curve.xprime(), g.modulus, order).sigma;
}

MultiPoly<Rat> implicit_equation(const SpectralCurve& curve) {
    using MP = MultiPoly<Rat>;
    const RatFunc<Rat>&x = curve.x(), &y = curve.y();
    int dz = std::max({x.num().degree(), x.den().degree(), y.num().degree(),
                       y.den().degree()});
    // a(z) = x_num - X x_den, b(z) = y_num - Y y_den, eliminate z
    std::vector<MP> ac(dz + 1), bc(dz + 1);
    for (int i = 0; i <= dz; ++i) {
        ac[i] = MP(x.num().coeff(i)) - MP::var(0) * MP(x.den().coeff(i));
        bc[i] = MP(y.num().coeff(i)) - MP::var(1) * MP(y.den().coeff(i));
    }
    MP r = resultant(Poly<MP>(std::move(ac)), Poly<MP>(std::move(bc)));
    if (r.is_zero()) throw EliminationFailure("vanishing resultant");
    int dy = r.degree(1);
    if (dy != curve.sheet_degree())
        throw EliminationFailure("parametrization is not birational onto its image");
    MP lead = r.coeff_of(1, dy);
    if (!lead.is_constant())
        throw EliminationFailure("leading Y-coefficient depends on X");
    r = r.scaled(lead.constant_value().inverse());
    // verify E(x(z), y(z)) = 0 exactly
    RatFunc<Rat> check;
    for (const auto& [e, c] : r.terms()) {
        RatFunc<Rat> term{Poly<Rat>(c)};
        if (!e.empty() && e[0]) term = term * x.pow(e[0]);
        if (e.size() > 1 && e[1]) term = term * y.pow(e[1]);
        check += term;
    }
    if (!check.is_zero())
        throw EliminationFailure("implicit equation fails on the parametrization");
    return r;
}

}  // namespace ctr
