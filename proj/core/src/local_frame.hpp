#pragma once

// Shared internals of the residue recursion: per-branch-group local frames,
// the splitting-sum assembly and the trace fold back to Q.  Used by the
// recursion and free-energy translation units only.

#include <functional>
#include <vector>

#include "ctr/multirat.hpp"
#include "ctr/recursion.hpp"
#include "ctr/spectral_curve.hpp"

namespace ctr::detail {

using MR = MultiRat<NFElem>;
using MPn = MultiPoly<NFElem>;
using SR = Series<MR>;

inline SR embed(const Series<NFElem>& s) {
    SR r = SR::zero(s.order());
    for (int k = s.low(); k <= s.order(); ++k) {
        NFElem v = s.at(k);
        if (!v.is_zero()) r.set(k, MR(MPn(v)));
    }
    return r;
}

inline MR lift_mr(const MultiRat<Rat>& f) {
    return f.mapped([](const Rat& r) { return NFElem(r); });
}

inline MultiRat<Rat> to_multirat(const RatFunc<Rat>& f, int var) {
    using MP = MultiPoly<Rat>;
    MP n = MP::from_univariate(f.num(), var);
    if (f.den().degree() == 0) return MultiRat<Rat>(n);
    return MultiRat<Rat>(n, {{MP::from_univariate(f.den(), var), 1}});
}

// Everything local the recursion needs at one branch group.
struct LocalFrame {
    const BranchGroup* g = nullptr;
    Series<NFElem> sigma_prime;
    SR q_sub;      // alpha + w
    SR sq_sub;     // alpha + sigma(w)
    SR kden_inv;   // 1 / ((y(w) - y(sigma w)) x'(w))
};

inline LocalFrame make_frame(const BranchGroup& g) {
    LocalFrame f;
    f.g = &g;
    f.sigma_prime = g.sigma.derivative();
    int ord = g.sigma.order();
    f.q_sub = SR::zero(ord);
    f.q_sub.set(0, MR(MPn(g.alpha)));
    f.q_sub.set(1, MR(1));
    f.sq_sub = SR::zero(ord);
    f.sq_sub.set(0, MR(MPn(g.alpha)));
    for (int k = 1; k <= ord; ++k) {
        NFElem v = g.sigma.at(k);
        if (!v.is_zero()) f.sq_sub.set(k, MR(MPn(v)));
    }
    Series<NFElem> dy = g.y_w - g.y_w.compose(g.sigma.normalized());
    f.kden_inv = embed((dy * g.xp_w).normalized().inverse());
    return f;
}

// 1 / (p_var - s(w)) as a series in w.
inline SR pole_series(int var, const SR& s) {
    return (SR::constant(MR::var(var), s.order()) - s).inverse();
}

// The bracket of the residue formula for the target omega_n^(h): the
// omega_{n+1}^{(h-1)}(q, sigma q, p_K) term plus the splitting sum, with the
// sigma-side Jacobian attached.  Spectator variables are 1..n-1; fetch
// returns the already computed omega_{n'}^{(h')} in variables 0..n'-1.
inline SR assemble_bracket(
    const LocalFrame& fr, int n, int h, SplittingRule rule,
    const std::function<MultiRat<Rat>(int, int)>& fetch) {
    int ord = fr.q_sub.order();
    int A = n, B = n + 1;  // substitution slots, clear of all target ids
    SR sp = embed(fr.sigma_prime);
    SR q = SR::zero(ord);

    if (h >= 1) {
        MultiRat<Rat> w = fetch(n + 1, h - 1);
        std::vector<int> perm(n + 1);
        perm[0] = A;
        perm[1] = B;
        for (int i = 2; i <= n; ++i) perm[i] = i - 1;
        MR lifted = lift_mr(w.relabeled(perm));
        q += substitute_series_multi(lifted, {{A, fr.q_sub}, {B, fr.sq_sub}}) * sp;
    }

    int s = n - 1;
    for (int m = 0; m <= h; ++m) {
        if (rule == SplittingRule::literal && (m < 1 || m > h - 1)) continue;
        for (unsigned mask = 0; mask < (1u << s); ++mask) {
            std::vector<int> J, Jc;
            for (int i = 0; i < s; ++i)
                (mask >> i & 1 ? J : Jc).push_back(i + 1);
            if (rule == SplittingRule::full) {
                if (m == 0 && J.empty()) continue;       // omega_1^(0) factor
                if (m == h && Jc.empty()) continue;
            }
            std::vector<int> p1(static_cast<std::size_t>(J.size()) + 1);
            p1[0] = A;
            for (std::size_t i = 0; i < J.size(); ++i) p1[i + 1] = J[i];
            MR f1 = lift_mr(fetch(static_cast<int>(J.size()) + 1, m).relabeled(p1));
            std::vector<int> p2(static_cast<std::size_t>(Jc.size()) + 1);
            p2[0] = B;
            for (std::size_t i = 0; i < Jc.size(); ++i) p2[i + 1] = Jc[i];
            MR f2 = lift_mr(
                fetch(static_cast<int>(Jc.size()) + 1, h - m).relabeled(p2));
            q += substitute_series(f1, A, fr.q_sub) *
                 (substitute_series(f2, B, fr.sq_sub) * sp);
        }
    }
    return q;
}

// Trace of a residue back down to Q.  Denominator factors are either already
// rational or of the exact form (x_v - alpha); the latter are rewritten via
// m(x_v)/(x_v - alpha) so the whole expression becomes polynomial in alpha
// and the conjugate sum applies coefficient-wise.
inline MultiRat<Rat> fold_group(const BranchGroup& g, const MR& r) {
    using MP = MultiPoly<Rat>;
    auto rational_poly = [](const MPn& p, MP& out) {
        out = MP();
        for (const auto& [e, c] : p.terms()) {
            if (!c.is_rational()) return false;
            out.add_term(e, c.rational_value());
        }
        return true;
    };

    MPn num = r.num();
    std::vector<MultiRat<Rat>::Factor> den;
    for (const auto& [f, e] : r.den()) {
        MP frat;
        if (rational_poly(f, frat)) {
            den.push_back({std::move(frat), e});
            continue;
        }
        // must be x_v - alpha for the group's alpha
        int v = -1;
        for (int i = 0; i <= f.max_var(); ++i)
            if (f.depends_on(i)) {
                if (v >= 0) throw Error("fold: multivariate irrational factor");
                v = i;
            }
        MPn expect = MPn::var(v) - MPn(g.alpha);
        if (v < 0 || f.degree(v) != 1 || f != expect)
            throw Error("fold: unexpected irrational denominator factor " + f.str());
        // cofactor m(X)/(X - alpha) by synthetic division (exact: m(alpha)=0)
        const Poly<Rat>& m = g.modulus;
        int d = m.degree();
        std::vector<NFElem> qc(d);
        qc[d - 1] = NFElem(1);
        for (int i = d - 2; i >= 0; --i)
            qc[i] = NFElem(m.coeff(i + 1)) + g.alpha * qc[i + 1];
        MPn cof;
        for (int i = 0; i < d; ++i)
            cof += MPn::var(v).pow(i).scaled(qc[i]);
        num *= cof.pow(e);
        den.push_back({MP::from_univariate(m, v), e});
    }

    MP folded;
    for (const auto& [e, c] : num.terms()) folded.add_term(e, c.conjugate_sum());
    return MultiRat<Rat>(std::move(folded), std::move(den));
}

// A MultiPoly that only involves `var`, as a dense univariate polynomial.
inline Poly<Rat> univariate_poly(const MultiPoly<Rat>& p, int var) {
    Poly<MultiPoly<Rat>> u = p.as_poly_in(var);
    std::vector<Rat> c(u.degree() + 1);
    for (int i = 0; i <= u.degree(); ++i) {
        if (!u.coeff(i).is_constant())
            throw Error("univariate_poly: polynomial involves another variable");
        c[i] = u.coeff(i).constant_value();
    }
    return Poly<Rat>(std::move(c));
}

inline RatFunc<Rat> to_univariate(const MultiRat<Rat>& f, int var) {
    Poly<Rat> num = univariate_poly(f.num(), var);
    Poly<Rat> den(1);
    for (const auto& [fac, e] : f.den()) den *= univariate_poly(fac, var).pow(e);
    return RatFunc<Rat>(std::move(num), std::move(den));
}

// f(z, z) for a two-variable MultiRat whose denominator factors are each
// univariate (true of correlators away from the unstable (2,0) case).
inline RatFunc<Rat> diagonal_univariate(const MultiRat<Rat>& f) {
    auto collapse = [](const MultiPoly<Rat>& p) {
        Poly<Rat> r;
        for (const auto& [e, c] : p.terms()) {
            int d = 0;
            for (int x : e) d += x;
            r += Poly<Rat>::monomial(c, d);
        }
        return r;
    };
    Poly<Rat> num = collapse(f.num());
    Poly<Rat> den(1);
    for (const auto& [fac, e] : f.den()) {
        Poly<Rat> fd = collapse(fac);
        if (fd.is_zero()) throw Error("diagonal_univariate: factor vanishes on the diagonal");
        den *= fd.pow(e);
    }
    return RatFunc<Rat>(std::move(num), std::move(den));
}

}  // namespace ctr::detail
