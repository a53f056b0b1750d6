#pragma once

#include <utility>
#include <vector>

#include "ctr/factor.hpp"
#include "ctr/fibersum.hpp"
#include "ctr/ratfunc.hpp"

namespace ctr {

// Squarefree decomposition over any field of characteristic zero (Yun).
template <class F>
std::vector<std::pair<Poly<F>, int>> squarefree_parts(const Poly<F>& f) {
    std::vector<std::pair<Poly<F>, int>> out;
    if (f.degree() < 1) return out;
    Poly<F> a = f.monic();
    Poly<F> g = Poly<F>::gcd(a, a.derivative());
    Poly<F> b = a / g;
    Poly<F> c = a.derivative() / g;
    Poly<F> d = c - b.derivative();
    for (int i = 1; !b.is_zero() && b.degree() > 0; ++i) {
        Poly<F> p = Poly<F>::gcd(b, d);
        if (p.degree() > 0) out.emplace_back(p, i);
        b = b / p;
        c = d / p;
        d = c - b.derivative();
    }
    return out;
}

// Hermite reduction: f = g' + r with the denominator of r squarefree.
// Returns (g, r).  Pure field arithmetic; no factorization.
template <class F>
std::pair<RatFunc<F>, RatFunc<F>> hermite_reduce(const RatFunc<F>& f) {
    RatFunc<F> g;         // accumulated rational part
    Poly<F> A = f.num(), D = f.den();
    // split off the polynomial part first
    Poly<F> q, rem;
    Poly<F>::divrem(A, D, q, rem);
    g = g + RatFunc<F>(q.integral());
    A = rem;
    while (true) {
        auto parts = squarefree_parts(D);
        int m = 0;
        Poly<F> V;
        for (const auto& [p, e] : parts)
            if (e > m) {
                m = e;
                V = p;
            }
        if (m <= 1) break;
        Poly<F> U = D / V.pow(m);
        // choose B with (1-m) B U V' = A (mod V); then
        // A/(U V^m) - d/dz(B V^{1-m}) has denominator U V^{m-1}
        Poly<F> W = (U * V.derivative()).scaled(F(static_cast<long>(1 - m)));
        Poly<F> B = (A % V) * inverse_mod(W, V) % V;
        Poly<F> numer = A - W * B - U * B.derivative() * V;
        Poly<F> A1 = numer / V;  // exact by construction
        g = g + RatFunc<F>(B, V.pow(m - 1));
        A = A1;
        D = U * V.pow(m - 1);
        Poly<F> cg = Poly<F>::gcd(A, D);
        if (cg.degree() > 0) {
            A = A / cg;
            D = D / cg;
        }
        if (A.is_zero()) break;
    }
    return {g, RatFunc<F>(A, D)};
}

// Full primitive over Q with an explicit log ledger:
//   integral f dz = rational + sum coeff * ln(z - root) + tail
// The tail is the unsplit remainder over irreducible denominator factors of
// degree > 1; callers that need a total answer assert it is zero.
struct PrimitiveQ {
    RatFunc<Rat> rational;
    std::vector<std::pair<Rat, Rat>> logs;  // (coeff, root)
    RatFunc<Rat> tail;
};

inline PrimitiveQ primitive_with_logs(const RatFunc<Rat>& f) {
    auto [g, r] = hermite_reduce(f);
    PrimitiveQ out;
    out.rational = g;
    if (r.is_zero()) return out;
    Poly<Rat> A = r.num(), D = r.den();
    for (const auto& [p, mult] : factor_rationals(D)) {
        if (p.degree() != 1) continue;
        Rat root = -p.coeff(0);
        if (!D.eval(root).is_zero()) continue;  // already peeled by a gcd step
        Rat c = A.eval(root) / D.derivative().eval(root);
        out.logs.emplace_back(c, root);
        // peel the simple pole off the remainder
        A = A - (D / p).scaled(c);
        Poly<Rat> cg = Poly<Rat>::gcd(A, D);
        if (cg.degree() > 0) {
            if (A.is_zero()) { D = Poly<Rat>(1); break; }
            A = A / cg;
            D = D / cg;
        }
    }
    out.tail = RatFunc<Rat>(A, D);
    return out;
}

}  // namespace ctr
