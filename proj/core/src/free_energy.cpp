#include "ctr/free_energy.hpp"

#include <array>
#include <cmath>
#include <future>

#include "ctr/expand.hpp"
#include "ctr/factor.hpp"
#include "ctr/hermite.hpp"
#include "local_frame.hpp"

namespace ctr {

using detail::MR;
using detail::MPn;
using detail::SR;

// ---------------------------------------------------------------------------
// LogValue

namespace {

constexpr long kTrialDivisionBound = 1000000;

// Split |r| into prime powers by trial division; the residual cofactor (if
// any) stays as a single atom.  Appends (coeff * exponent, prime) pairs.
void split_log_arg(const Rat& c, const Rat& r,
                   std::vector<std::pair<Rat, Rat>>& out) {
    auto split_int = [&](mpz_class n, const Rat& coeff) {
        if (n < 0) n = -n;
        if (n == 0) throw Error("LogValue: log of zero");
        for (long p = 2; p <= kTrialDivisionBound && n > 1; p = (p == 2 ? 3 : p + 2)) {
            if (mpz_class(p) * p > n) break;
            long e = 0;
            while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
                n /= p;
                ++e;
            }
            if (e) out.emplace_back(coeff * Rat(e), Rat(mpz_class(p)));
        }
        if (n > 1) out.emplace_back(coeff, Rat(n));
    };
    split_int(r.num(), c);
    split_int(r.den(), -c);
}

void canonicalize_logs(std::vector<std::pair<Rat, Rat>>& logs) {
    std::vector<std::pair<Rat, Rat>> atoms;
    for (const auto& [c, r] : logs) {
        if (c.is_zero()) continue;
        split_log_arg(c, r, atoms);
    }
    std::sort(atoms.begin(), atoms.end(),
              [](const auto& a, const auto& b) { return a.second < b.second; });
    logs.clear();
    for (const auto& [c, r] : atoms) {
        if (r.is_one()) continue;
        if (!logs.empty() && logs.back().second == r)
            logs.back().first += c;
        else
            logs.emplace_back(c, r);
    }
    logs.erase(std::remove_if(logs.begin(), logs.end(),
                              [](const auto& t) { return t.first.is_zero(); }),
               logs.end());
}

}  // namespace

void LogValue::add_log(const Rat& c, const Rat& r) {
    if (c.is_zero()) return;
    logs.emplace_back(c, r);
    canonicalize_logs(logs);
}

LogValue& LogValue::operator+=(const LogValue& o) {
    q0 += o.q0;
    for (const auto& [c, r] : o.logs) logs.emplace_back(c, r);
    canonicalize_logs(logs);
    return *this;
}

LogValue LogValue::scaled(const Rat& k) const {
    LogValue v;
    v.q0 = q0 * k;
    if (!k.is_zero())
        for (const auto& [c, r] : logs) v.logs.emplace_back(c * k, r);
    return v;
}

double LogValue::to_double() const {
    double v = q0.to_double();
    for (const auto& [c, r] : logs) v += c.to_double() * std::log(r.to_double());
    return v;
}

std::string LogValue::str() const {
    std::string s = q0.str();
    for (const auto& [c, r] : logs)
        s += " + (" + c.str() + ")*ln(" + r.str() + ")";
    return s;
}

// ---------------------------------------------------------------------------
// Psi

namespace {

double eval_double(const RatFunc<Rat>& f, double z) {
    auto horner = [&](const Poly<Rat>& p) {
        double v = 0;
        for (int i = p.degree(); i >= 0; --i) v = v * z + p.coeff(i).to_double();
        return v;
    };
    return horner(f.num()) / horner(f.den());
}

}  // namespace

double PsiPrimitive::eval(double z) const {
    double v = eval_double(rational, z);
    double o = base.to_double();
    for (const auto& [c, r] : logs) {
        double rr = r.to_double();
        v += c.to_double() * (std::log(std::fabs(z - rr)) - std::log(std::fabs(o - rr)));
    }
    return v;
}

PsiPrimitive psi(const SpectralCurve& curve, std::optional<Rat> o) {
    RatFunc<Rat> f = curve.y() * curve.xprime();
    PrimitiveQ p = primitive_with_logs(f);
    if (!p.tail.is_zero())
        throw Error("psi: y dx carries residues at irrational points");
    PsiPrimitive out;
    out.base = o ? *o : curve.base_point();
    if (f.has_pole_at(out.base))
        throw Error("psi: base point is a pole of y dx");
    out.rational = p.rational - RatFunc<Rat>(p.rational.eval(out.base));
    out.logs = std::move(p.logs);
    return out;
}

// ---------------------------------------------------------------------------
// Infinity labels

InfinityLabels classify_infinities(const SpectralCurve& curve) {
    if (!curve.has_cauchy_infinities())
        throw RamifiedInfinity("curve lacks three simple infinities");
    const RatFunc<Rat>& y = curve.y();
    InfinityLabels lab;
    for (int i = 0; i < 3; ++i) {
        const InfinityPoint& ip = curve.infinities()[i];
        bool bounded = ip.at_z_infinity ? y.num().degree() <= y.den().degree()
                                        : !y.has_pole_at(*ip.z0);
        if (bounded) {
            if (lab.i0 >= 0)
                throw Error("classify_infinities: y bounded at more than one infinity");
            lab.i0 = i;
        } else {
            (lab.i1 < 0 ? lab.i1 : lab.i2) = i;
        }
    }
    if (lab.i0 < 0 || lab.i2 < 0)
        throw Error("classify_infinities: could not identify the bounded infinity");
    return lab;
}

std::string ModuliDirection::str() const {
    switch (kind) {
        case DirKind::potential:
            return "t_" + std::to_string(j) + "^(" + std::to_string(k) + ")";
        case DirKind::total_charge:
            return "T";
        case DirKind::eta:
            return "eta^(" + std::to_string(k) + ")";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// H operator

namespace {

// Local primitive of y dx at a branch group (constant of integration free --
// all uses are against residue-free differentials where it cancels).
Series<NFElem> psi_local(const BranchGroup& g) {
    return (g.y_w * g.xp_w).integral();
}

MultiRat<Rat> h_apply_level(const SpectralCurve& curve, const MultiDifferential& phi) {
    int var = phi.n - 1;
    MR lifted = detail::lift_mr(phi.value);
    MultiRat<Rat> total;
    for (const BranchGroup& g : curve.branch_groups()) {
        SR local = SR::zero(g.sigma.order());
        local.set(0, MR(MPn(g.alpha)));
        local.set(1, MR(1));
        SR phis = substitute_series(lifted, var, local);
        if (!phis.residue().is_zero())
            throw ResidueObstruction("H: differential has a nonzero residue at " +
                                     g.modulus.str());
        MR res = (phis * detail::embed(psi_local(g))).residue();
        total -= detail::fold_group(g, res);
    }
    return total;
}

MultiRat<Rat> h_omega_level(const SpectralCurve& curve, int n, int h,
                            SplittingRule rule,
                            const std::function<MultiRat<Rat>(int, int)>& fetch,
                            int jobs) {
    const auto& groups = curve.branch_groups();
    auto one = [&](const BranchGroup& g) {
        detail::LocalFrame fr = detail::make_frame(g);
        SR bracket = detail::assemble_bracket(fr, n + 1, h, rule, fetch);
        Series<NFElem> pl = psi_local(g);
        SR dpsi = detail::embed(pl - pl.compose(g.sigma.normalized()));
        MR res = (dpsi * bracket * fr.kden_inv).residue();
        return detail::fold_group(g, res);
    };
    std::vector<MultiRat<Rat>> parts(groups.size());
    if (jobs > 1 && groups.size() > 1) {
        std::vector<std::future<MultiRat<Rat>>> fut;
        for (const auto& g : groups)
            fut.push_back(std::async(std::launch::async, [&, gp = &g]() { return one(*gp); }));
        for (std::size_t i = 0; i < fut.size(); ++i) parts[i] = fut[i].get();
    } else {
        for (std::size_t i = 0; i < groups.size(); ++i) parts[i] = one(groups[i]);
    }
    MultiRat<Rat> total;
    for (const auto& p : parts) total += p.scaled(Rat(1, 2));
    // the residue variable was 0; spectators 1..n come down to 0..n-1
    if (n == 0) return total;
    std::vector<int> perm(n + 1);
    for (int i = 1; i <= n; ++i) perm[i] = i - 1;
    perm[0] = n;  // unused slot, kept clear of the live ids
    return total.relabeled(perm);
}

}  // namespace

MultiDifferential h_applied(const SpectralCurve& curve, const MultiDifferential& phi) {
    if (phi.n < 1) throw Error("h_applied: no variable to act on");
    MultiDifferential out{phi.n - 1, phi.h, {}};
    if (phi.value.is_zero()) return out;
    if (phi.n == 2 && phi.h == 0) {
        // omega_2^(0) = B: the one admissible input with a non-branch pole;
        // the diagonal residue gives H B = -y dx in closed form.
        out.value = -detail::to_multirat(curve.y() * curve.xprime(), 0);
        return out;
    }
    SpectralCurve cur = curve;
    for (;;) {
        try {
            out.value = h_apply_level(cur, phi);
            return out;
        } catch (const InsufficientPrecision&) {
            if (2 * cur.order() > max_series_order()) throw;
            cur = curve.with_order(2 * cur.order());
        }
    }
}

MultiRat<Rat> h_omega(const SpectralCurve& curve, int n, int h,
                      CorrelatorCache* cache, SplittingRule rule, int jobs) {
    if (n < 0 || h < 0 || (n + 1 == 1 && h == 0))
        throw Error("h_omega: invalid (n, h)");
    CorrelatorCache local(curve.fingerprint());
    if (!cache) cache = &local;
    cache->check_curve(curve);
    auto fetch = [&](int n2, int h2) {
        return omega(curve, n2, h2, cache, rule, jobs).value;
    };
    SpectralCurve cur = curve;
    for (;;) {
        try {
            return h_omega_level(cur, n, h, rule, fetch, jobs);
        } catch (const InsufficientPrecision&) {
            if (2 * cur.order() > max_series_order()) throw;
            cur = curve.with_order(2 * cur.order());
        }
    }
}

Rat free_energy_h(const SpectralCurve& curve, int h, CorrelatorCache* cache) {
    if (h < 2) throw Error("free_energy_h: h must be at least 2");
    MultiDifferential w1h = omega(curve, 1, h, cache);
    MultiRat<Rat> hv = h_applied(curve, w1h).value;
    return hv.constant_value() / Rat(2 * h - 2);
}

CheckReport dilaton_check(const SpectralCurve& curve, int n, int h,
                          CorrelatorCache* cache, SplittingRule rule, int jobs) {
    if (2 * h + n - 2 <= 0) throw Error("dilaton_check: outside the stable range");
    CheckReport rep;
    MultiRat<Rat> lhs =
        omega(curve, n, h, cache, rule, jobs).value.scaled(Rat(2 - n - 2 * h));
    MultiRat<Rat> rhs = h_omega(curve, n, h, cache, rule, jobs);
    if (!(lhs == rhs))
        rep.fail("dilaton identity fails at (n,h) = (" + std::to_string(n) + "," +
                 std::to_string(h) + ")");
    return rep;
}

// ---------------------------------------------------------------------------
// J operators

namespace {

template <class K>
struct EndpointK {
    bool at_inf = false;
    K z0;
};

template <class K>
K res_ep(const RatFunc<K>& f, const EndpointK<K>& e) {
    return e.at_inf ? residue_at_infinity(f) : residue_at(f, e.z0);
}

// Value of f at the endpoint; f must stay finite there.
template <class K>
K eval_ep(const RatFunc<K>& f, const EndpointK<K>& e) {
    if (f.is_zero()) return K();
    if (!e.at_inf) return f.eval(e.z0);
    int dn = f.num().degree(), dd = f.den().degree();
    if (dn < dd) return K();
    if (dn == dd) return f.num().lc() * f.den().lc().inverse();
    throw Error("j-row: primitive grows at an endpoint");
}

template <class K>
void integral_endpoints(const ModuliDirection& dir,
                        const std::array<EndpointK<K>, 3>& e,
                        const EndpointK<K>*& from, const EndpointK<K>*& to) {
    switch (dir.kind) {
        case DirKind::total_charge:
            from = &e[2];
            to = &e[1];
            return;
        case DirKind::eta:
            if (dir.k == 1) {
                from = &e[0];
                to = &e[1];
            } else {
                from = &e[2];
                to = &e[0];
            }
            return;
        default:
            throw Error("integral_endpoints: residue direction");
    }
}

// One row of the moduli table over a generic coefficient field, for
// differentials whose primitive is rational and finite at the endpoints
// (kernel rows and omega_1^(1)); the full regularized version over Q lives
// in j_apply below.
template <class K>
K j_row(const RatFunc<K>& x, const std::array<EndpointK<K>, 3>& e,
        const ModuliDirection& dir, const RatFunc<K>& phi) {
    if (phi.is_zero()) return K();
    if (dir.kind == DirKind::potential) {
        // weighted residues of x^j phi / j; the 1/j and the k = 2 sign make
        // the row exactly dual to the residue extraction of t_j^(k)
        RatFunc<K> f = x.pow(dir.j) * phi;
        K r0 = res_ep(f, e[0]), r1 = res_ep(f, e[1]), r2 = res_ep(f, e[2]);
        K w = (K(3) * K(dir.j)).inverse();
        if (dir.k == 1) return (K(2) * r1 - r0 - r2) * w;
        K v = (K(2) * r2 - r0 - r1) * w;
        return dir.j % 2 ? -v : v;
    }
    auto [g, r] = hermite_reduce(phi);
    if (!r.is_zero()) throw Error("j-row: differential carries residues");
    const EndpointK<K>*from, *to;
    integral_endpoints(dir, e, from, to);
    return eval_ep(g, *to) - eval_ep(g, *from);
}

struct Endpoint {
    bool at_inf = false;
    Rat z0;
};

Endpoint endpoint_of(const SpectralCurve& curve, int idx) {
    const InfinityPoint& ip = curve.infinities()[idx];
    if (ip.at_z_infinity) return {true, Rat()};
    return {false, *ip.z0};
}

template <class K>
EndpointK<K> lift_endpoint(const Endpoint& e) {
    return {e.at_inf, e.at_inf ? K() : K(e.z0)};
}

Rat res_endpoint(const RatFunc<Rat>& f, const Endpoint& e) {
    return e.at_inf ? residue_at_infinity(f) : residue_at(f, e.z0);
}

int pole_order_at(const RatFunc<Rat>& f, const Endpoint& e) {
    if (f.is_zero()) return 0;
    if (e.at_inf) return std::max(0, f.num().degree() - f.den().degree());
    Poly<Rat> d = f.den();
    Poly<Rat> lin(std::vector<Rat>{-e.z0, Rat(1)});
    int m = 0;
    while (!d.is_zero() && d.eval(e.z0).is_zero()) {
        d = d / lin;
        ++m;
    }
    return m;
}

// Finite part of U + sum c ln(z - r) at an infinity point of x, after
// subtracting the singular polynomial-in-x and ln(x) parts.  The infinity is
// simple, so x has a plain first-order pole in the local coordinate.
LogValue finite_part(const RatFunc<Rat>& x, const RatFunc<Rat>& U,
                     const std::vector<std::pair<Rat, Rat>>& logs,
                     const Endpoint& e) {
    int kmax = pole_order_at(U, e);
    int ord = kmax + 4;
    Series<Rat> S = e.at_inf ? laurent_expand_at_infinity(U, ord)
                             : laurent_expand(U, e.z0, ord);
    Series<Rat> X = e.at_inf ? laurent_expand_at_infinity(x, ord)
                             : laurent_expand(x, e.z0, ord);
    if (X.valuation() != -1)
        throw RamifiedInfinity("regularized integral at a ramified infinity");
    Rat lead = X.at(-1);

    // peel c_k x^k from the top pole order down
    std::vector<Series<Rat>> xpow;  // x^1 .. x^kmax
    if (kmax >= 1) {
        xpow.push_back(X);
        for (int k = 2; k <= kmax; ++k) xpow.push_back(xpow.back() * X);
    }
    for (int k = kmax; k >= 1; --k) {
        Rat c = S.at(-k) / xpow[k - 1].at(-k);
        if (!c.is_zero()) S -= xpow[k - 1].scaled(c);
    }
    for (int j = S.low(); j < 0; ++j)
        if (!S.at(j).is_zero())
            throw Error("regularized integral: singular part not polynomial in x");

    LogValue v;
    v.q0 = S.at(0);
    for (const auto& [c, r] : logs) {
        if (e.at_inf) {
            // ln(z - r) - ln x -> -ln|lead| as z -> infinity
            v.add_log(-c, lead);
        } else if (r == e.z0) {
            // ln(z - z0) + ln x -> ln|lead| (x ~ lead/(z - z0))
            v.add_log(c, lead);
        } else {
            v.add_log(c, e.z0 - r);
        }
    }
    return v;
}

}  // namespace

LogValue j_apply(const SpectralCurve& curve, const ModuliDirection& dir,
                 const RatFunc<Rat>& phi) {
    if (phi.is_zero()) return LogValue();
    InfinityLabels lab = classify_infinities(curve);
    std::array<Endpoint, 3> e = {endpoint_of(curve, lab.i0), endpoint_of(curve, lab.i1),
                                 endpoint_of(curve, lab.i2)};
    if (dir.kind == DirKind::potential) {
        RatFunc<Rat> f = curve.x().pow(dir.j) * phi;
        Rat r0 = res_endpoint(f, e[0]), r1 = res_endpoint(f, e[1]),
            r2 = res_endpoint(f, e[2]);
        Rat v;
        if (dir.k == 1)
            v = (Rat(2) * r1 - r0 - r2) / Rat(3 * dir.j);
        else {
            v = (Rat(2) * r2 - r0 - r1) / Rat(3 * dir.j);
            if (dir.j % 2) v = -v;
        }
        return LogValue(v);
    }
    PrimitiveQ p = primitive_with_logs(phi);
    if (!p.tail.is_zero())
        throw Error("j_apply: differential carries residues at irrational points");
    const Endpoint *from, *to;
    switch (dir.kind) {
        case DirKind::total_charge:
            from = &e[2];
            to = &e[1];
            break;
        case DirKind::eta:
            if (dir.k == 1) {
                from = &e[0];
                to = &e[1];
            } else {
                from = &e[2];
                to = &e[0];
            }
            break;
        default:
            throw Error("j_apply: unreachable");
    }
    return finite_part(curve.x(), p.rational, p.logs, *to) -
           finite_part(curve.x(), p.rational, p.logs, *from);
}

RatFunc<Rat> j_apply_bergmann(const SpectralCurve& curve, const ModuliDirection& dir) {
    using K = RatFunc<Rat>;  // field of functions of the spectator p
    InfinityLabels lab = classify_infinities(curve);
    std::array<EndpointK<K>, 3> e = {lift_endpoint<K>(endpoint_of(curve, lab.i0)),
                                     lift_endpoint<K>(endpoint_of(curve, lab.i1)),
                                     lift_endpoint<K>(endpoint_of(curve, lab.i2))};
    RatFunc<K> x = map_ratfunc<K>(curve.x(), [](const Rat& r) { return K(r); });
    // B(z, p)/dz dp = 1/(z - p)^2
    Poly<K> lin(std::vector<K>{-K::var(), K(1)});
    RatFunc<K> b(Poly<K>(1), lin * lin);
    return j_row<K>(x, e, dir, b);
}

CheckReport ydx_decomposition_check(const SpectralCurve& curve, const ModelData& model) {
    CheckReport rep;
    RatFunc<Rat> rhs;
    for (const auto& [kj, t] : model.times)
        rhs += j_apply_bergmann(curve, ModuliDirection::potential_time(kj.first, kj.second)) *
               RatFunc<Rat>(t);
    rhs += j_apply_bergmann(curve, ModuliDirection::total_charge()) * RatFunc<Rat>(model.T);
    if (!model.eta1.is_zero())
        rhs += j_apply_bergmann(curve, ModuliDirection::eta(1)) * RatFunc<Rat>(model.eta1);
    if (!model.eta2.is_zero())
        rhs += j_apply_bergmann(curve, ModuliDirection::eta(2)) * RatFunc<Rat>(model.eta2);
    RatFunc<Rat> lhs = curve.y() * curve.xprime();
    if (!(lhs == rhs))
        rep.fail("y dx != sum of t_a J_a(B): difference " + (lhs - rhs).str());
    return rep;
}

LogValue free_energy_0(const SpectralCurve& curve, const ModelData& model) {
    RatFunc<Rat> ydx = curve.y() * curve.xprime();
    LogValue twoF;
    for (const auto& [kj, t] : model.times)
        twoF += j_apply(curve, ModuliDirection::potential_time(kj.first, kj.second), ydx)
                    .scaled(t);
    twoF += j_apply(curve, ModuliDirection::total_charge(), ydx).scaled(model.T);
    // t_{-1}^{(nu)} mu^{(nu)} with mu^{(nu)} = (-1)^nu \int_{inf_0}^{inf_nu} y dx
    if (!model.tm1_1.is_zero())
        twoF += j_apply(curve, ModuliDirection::eta(1), ydx).scaled(-model.tm1_1);
    if (!model.tm1_2.is_zero())
        twoF += j_apply(curve, ModuliDirection::eta(2), ydx).scaled(-model.tm1_2);
    return twoF.scaled(Rat(1, 2));
}

F1Gradient f1_gradient(const SpectralCurve& curve, const ModuliDirection& dir,
                       CorrelatorCache* cache) {
    F1Gradient out;

    // (i) right-hand side of the gradient formula
    MultiDifferential w11 = omega(curve, 1, 1, cache);
    LogValue jw = j_apply(curve, dir, detail::to_univariate(w11.value, 0));
    if (!jw.is_rational())
        throw Error("f1_gradient: unexpected log terms in J(omega_1^(1))");
    out.via_omega = -jw.q0;

    // (ii) tau-function assembly from the branch-point jets
    InfinityLabels lab = classify_infinities(curve);
    std::array<EndpointK<NFElem>, 3> e = {
        lift_endpoint<NFElem>(endpoint_of(curve, lab.i0)),
        lift_endpoint<NFElem>(endpoint_of(curve, lab.i1)),
        lift_endpoint<NFElem>(endpoint_of(curve, lab.i2))};
    RatFunc<NFElem> xn = lift_nf(curve.x());
    Rat total;
    for (const BranchGroup& g : curve.branch_groups()) {
        using SK = Series<RatFunc<NFElem>>;
        int ord = g.w_of_u.order();
        // beta_k(z) = [u^k] w'(u) / (z - alpha - w(u))^2
        SK den = SK::zero(ord);
        den.set(0, RatFunc<NFElem>(Poly<NFElem>(std::vector<NFElem>{-g.alpha, NFElem(1)})));
        for (int k = 1; k <= ord; ++k) {
            NFElem v = g.w_of_u.at(k);
            if (!v.is_zero()) den.set(k, RatFunc<NFElem>(-v));
        }
        SK F = den.inverse();
        F = F * F;
        Series<NFElem> wp = g.w_of_u.derivative();
        SK wps = SK::zero(wp.order());
        for (int k = 0; k <= wp.order(); ++k) {
            NFElem v = wp.at(k);
            if (!v.is_zero()) wps.set(k, RatFunc<NFElem>(v));
        }
        F = F * wps;
        NFElem jb0 = j_row<NFElem>(xn, e, dir, F.at(0));
        NFElem jb2 = j_row<NFElem>(xn, e, dir, F.at(2));

        NFElem y1 = g.y_u.at(1), y3 = g.y_u.at(3);
        NFElem a2 = g.w_of_u.at(2), a3 = g.w_of_u.at(3);
        NFElem su = NFElem(6) * a3 - NFElem(6) * a2 * a2;  // S_B(alpha) * c2
        NFElem c2inv = g.c2.inverse();

        NFElem da = -(jb0 / y1);                    // partial of the branch value a
        NFElem dyp = (NFElem(2) * jb2 - NFElem(6) * (y3 / y1) * jb0) *
                     (NFElem(4) * y1 * g.c2).inverse();  // partial ln y'(alpha)
        NFElem val = (su * c2inv * da - dyp) * NFElem(24).inverse();
        total += val.conjugate_sum();
    }
    out.via_tau = total;
    out.agree = out.via_omega == out.via_tau;
    return out;
}

CheckReport homogeneity_check(const SpectralCurve& curve, int h, const Rat& kappa) {
    if (kappa.is_zero()) throw Error("homogeneity_check: kappa must be nonzero");
    CheckReport rep;
    Rat f = free_energy_h(curve, h);
    SpectralCurve scaled(curve.x(), curve.y() * RatFunc<Rat>(kappa), curve.order());
    Rat fs = free_energy_h(scaled, h);
    Rat expect = f * kappa.pow(2 - 2 * h);
    if (fs != expect)
        rep.fail("F^(" + std::to_string(h) + ") scales by " +
                 (f.is_zero() ? std::string("-") : (fs / f).str()) + ", expected kappa^" +
                 std::to_string(2 - 2 * h));
    return rep;
}

}  // namespace ctr
