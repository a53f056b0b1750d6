#pragma once

#include "ctr/errors.hpp"
#include "ctr/poly.hpp"
#include "ctr/ratfunc.hpp"

namespace ctr {

// Extended Euclid: inverse of a modulo m over a field F.
template <class F>
Poly<F> inverse_mod(const Poly<F>& a, const Poly<F>& m) {
    Poly<F> r0 = m, r1 = a % m;
    Poly<F> s0, s1(1);
    while (!r1.is_zero()) {
        Poly<F> q, r2;
        Poly<F>::divrem(r0, r1, q, r2);
        Poly<F> s2 = s0 - q * s1;
        r0 = r1;
        r1 = r2;
        s0 = s1;
        s1 = s2;
    }
    if (r0.degree() != 0) throw NotInvertible("inverse_mod: not coprime to modulus");
    return (s0.scaled(r0.coeff(0).inverse())) % m;
}

// Sum of g over the roots of P (the fiber over a point), as an exact element
// of the coefficient field.  With F = RatFunc<Rat> carrying a spectator X
// this is the sheet sum Sum_i g(w_i(X)): the trace of g in F[w]/(P), i.e.
// reduce A/B mod P and contract with the Newton power sums of P.
template <class F>
F fiber_sum(const RatFunc<F>& g, const Poly<F>& P) {
    if (P.degree() < 1) throw Error("fiber_sum: constant fiber polynomial");
    if (Poly<F>::gcd(P, P.derivative()).degree() > 0)
        throw NonSeparable("fiber_sum: fiber polynomial not separable");
    if (Poly<F>::gcd(g.den(), P).degree() > 0)
        throw PoleCollision("fiber_sum: pole of g on the fiber");
    Poly<F> r = (g.num() % P) * inverse_mod(g.den(), P) % P;
    std::vector<F> p = power_sums(P, std::max(0, r.degree()));
    F s;
    for (int k = 0; k <= r.degree(); ++k) s = s + r.coeff(k) * p[k];
    return s;
}

}  // namespace ctr
