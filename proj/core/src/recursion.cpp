#include "ctr/recursion.hpp"

#include <atomic>
#include <future>

#include "ctr/hermite.hpp"
#include "local_frame.hpp"

namespace ctr {

using detail::MR;
using detail::MPn;
using detail::SR;

MultiRat<Rat> bergmann() {
    using MP = MultiPoly<Rat>;
    MP d = MP::var(0) - MP::var(1);
    return MultiRat<Rat>(MP(1), {{d, 2}});
}

namespace {
std::atomic<int> g_max_order{4096};
}  // namespace

int max_series_order() { return g_max_order.load(); }
void set_max_series_order(int order) { g_max_order.store(order); }

namespace {

// One branch group's contribution to -2 * omega_n^(h) (sign and the kernel's
// 1/2 are applied by the caller, after the fold).
MultiRat<Rat> group_contribution(
    const BranchGroup& g, int n, int h, SplittingRule rule,
    const std::function<MultiRat<Rat>(int, int)>& fetch) {
    detail::LocalFrame fr = detail::make_frame(g);
    SR bracket = detail::assemble_bracket(fr, n, h, rule, fetch);
    SR ds = detail::pole_series(0, fr.q_sub) - detail::pole_series(0, fr.sq_sub);
    MR res = (ds * bracket * fr.kden_inv).residue();
    return detail::fold_group(g, res);
}

MultiRat<Rat> compute_level(const SpectralCurve& curve, int n, int h,
                            SplittingRule rule,
                            const std::function<MultiRat<Rat>(int, int)>& fetch,
                            int jobs) {
    const auto& groups = curve.branch_groups();
    std::vector<MultiRat<Rat>> parts(groups.size());
    if (jobs > 1 && groups.size() > 1) {
        std::vector<std::future<MultiRat<Rat>>> fut;
        for (const auto& g : groups)
            fut.push_back(std::async(std::launch::async, [&, gp = &g]() {
                return group_contribution(*gp, n, h, rule, fetch);
            }));
        for (std::size_t i = 0; i < fut.size(); ++i) parts[i] = fut[i].get();
    } else {
        for (std::size_t i = 0; i < groups.size(); ++i)
            parts[i] = group_contribution(groups[i], n, h, rule, fetch);
    }
    MultiRat<Rat> total;
    for (const auto& p : parts) total -= p.scaled(Rat(1, 2));
    return total;
}

}  // namespace

MultiDifferential omega(const SpectralCurve& curve, int n, int h,
                        CorrelatorCache* cache, SplittingRule rule, int jobs) {
    if (n < 1 || h < 0) throw Error("omega: invalid (n, h)");
    CorrelatorCache local(curve.fingerprint());
    if (!cache) cache = &local;
    cache->check_curve(curve);
    if (auto hit = cache->get(n, h)) return *hit;

    MultiDifferential md{n, h, {}};
    if (n == 1 && h == 0) {
        md.value = detail::to_multirat(curve.y() * curve.xprime(), 0);
    } else if (n == 2 && h == 0) {
        md.value = bergmann();
    } else {
        auto fetch = [&](int n2, int h2) {
            return omega(curve, n2, h2, cache, rule, jobs).value;
        };
        SpectralCurve cur = curve;
        for (;;) {
            try {
                md.value = compute_level(cur, n, h, rule, fetch, jobs);
                break;
            } catch (const InsufficientPrecision&) {
                if (2 * cur.order() > max_series_order()) throw;
                cur = curve.with_order(2 * cur.order());
            }
        }
    }
    cache->put(md);
    return md;
}

MultiDifferential omega11_closed(const SpectralCurve& curve) {
    MultiRat<Rat> total;
    for (const BranchGroup& g : curve.branch_groups()) {
        int ord = g.w_of_u.order();
        // z(u) = alpha + w(u) substituted into 1/(p - z)^2, times dz/du
        SR zu = SR::zero(ord);
        zu.set(0, MR(MPn(g.alpha)));
        for (int k = 1; k <= ord; ++k) {
            NFElem v = g.w_of_u.at(k);
            if (!v.is_zero()) zu.set(k, MR(MPn(v)));
        }
        SR inv = detail::pole_series(0, zu);
        SR F = inv * inv * detail::embed(g.w_of_u.derivative());
        MR F0 = F.at(0), F2 = F.at(2);

        NFElem y1 = g.y_u.at(1), y3 = g.y_u.at(3);
        NFElem a2 = g.w_of_u.at(2), a3 = g.w_of_u.at(3);
        // Schwarzian of z(u) at u = 0: the diagonal constant of B in u
        NFElem su = NFElem(6) * a3 - NFElem(6) * a2 * a2;
        NFElem c2inv = g.c2.inverse();

        MR val = F2.scaled((NFElem(48) * y1 * g.c2).inverse()) +
                 F0.scaled((su * (NFElem(24) * y1).inverse() -
                            y3 * (NFElem(16) * y1 * y1).inverse()) *
                           c2inv);
        total += detail::fold_group(g, val);
    }
    return MultiDifferential{1, 1, std::move(total)};
}

Series<MultiRat<NFElem>> dS_kernel(const SpectralCurve& curve,
                                   const BranchGroup& g, int order) {
    Series<NFElem> sigma =
        order <= g.sigma.order() ? g.sigma : local_involution(curve, g, order);
    SR q = SR::zero(sigma.order());
    q.set(0, MR(MPn(g.alpha)));
    q.set(1, MR(1));
    SR sq = SR::zero(sigma.order());
    sq.set(0, MR(MPn(g.alpha)));
    for (int k = 1; k <= sigma.order(); ++k) {
        NFElem v = sigma.at(k);
        if (!v.is_zero()) sq.set(k, MR(MPn(v)));
    }
    return (detail::pole_series(0, q) - detail::pole_series(0, sq))
        .truncated(order);
}

StructureReport verify_structure(const SpectralCurve& curve,
                                 const MultiDifferential& md) {
    StructureReport rep;
    const MultiRat<Rat>& v = md.value;
    if (2 * md.h + md.n - 2 <= 0) {
        rep.fail("structure checks apply to the stable range only");
        return rep;
    }

    // symmetry under all transpositions with the first variable
    for (int i = 1; i < md.n; ++i) {
        std::vector<int> perm(md.n);
        for (int k = 0; k < md.n; ++k) perm[k] = k;
        perm[0] = i;
        perm[i] = 0;
        if (!(v.relabeled(perm) == v))
            rep.fail("not symmetric under swapping arguments 0 and " +
                     std::to_string(i));
    }

    // poles confined to branch points, in each variable separately
    for (const auto& [f, e] : v.den()) {
        rep.max_pole_order = std::max(rep.max_pole_order, e);
        int var = -1;
        bool univ = true;
        for (int i = 0; i <= f.max_var(); ++i)
            if (f.depends_on(i)) {
                if (var >= 0) univ = false;
                var = i;
            }
        if (!univ || var < 0) {
            rep.fail("denominator factor couples several variables: " + f.str());
            continue;
        }
        Poly<MultiPoly<Rat>> u = f.as_poly_in(var);
        std::vector<Rat> cs(u.degree() + 1);
        bool con = true;
        for (int i = 0; i <= u.degree() && con; ++i) {
            if (!u.coeff(i).is_constant()) con = false;
            else cs[i] = u.coeff(i).constant_value();
        }
        Poly<Rat> fp(std::move(cs));
        if (!con) {
            rep.fail("denominator factor is not univariate: " + f.str());
            continue;
        }
        for (const auto& [part, mult] : squarefree_parts(fp))
            if (!part.divides(curve.dx_numerator()))
                rep.fail("pole away from the branch points: " + f.str());
    }

    // vanishing residue at every branch point, in every variable
    for (int i = 0; i < md.n; ++i) {
        MR lifted = detail::lift_mr(v);
        for (const BranchGroup& g : curve.branch_groups()) {
            SR local = SR::zero(g.sigma.order());
            local.set(0, MR(MPn(g.alpha)));
            local.set(1, MR(1));
            MR res = substitute_series(lifted, i, local).residue();
            if (!res.is_zero())
                rep.fail("nonzero residue in variable " + std::to_string(i) +
                         " at branch factor " + g.modulus.str());
        }
    }

    // O(z^-2) decay at infinity in every variable
    for (int i = 0; i < md.n; ++i) {
        int dn = v.num().degree(i), dd = 0;
        for (const auto& [f, e] : v.den()) dd += e * f.degree(i);
        if (dn > dd - 2)
            rep.fail("insufficient decay at infinity in variable " +
                     std::to_string(i));
    }
    return rep;
}

}  // namespace ctr
