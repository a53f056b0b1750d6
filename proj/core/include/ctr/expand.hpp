#pragma once

#include "ctr/numfield.hpp"
#include "ctr/ratfunc.hpp"
#include "ctr/series.hpp"

namespace ctr {

// Laurent expansion of f around z = center, guaranteed to the given order.
template <class K>
Series<K> laurent_expand(const RatFunc<K>& f, const K& center, int order) {
    if (f.is_zero()) return Series<K>::zero(order);
    // shift so the center is 0; the pole order there bounds the precision
    // loss from the denominator inverse
    Poly<K> n = f.num().shifted(center), d = f.den().shifted(center);
    int v = 0;
    while (d.coeff(v).is_zero()) ++v;
    int hi = order + 2 * v;
    return (Series<K>::template from_poly<K>(n, hi) *
            Series<K>::template from_poly<K>(d, hi).inverse())
        .truncated(order);
}

// Expansion in s = 1/z around s = 0 (i.e. around infinity).
template <class K>
Series<K> laurent_expand_at_infinity(const RatFunc<K>& f, int order) {
    return laurent_expand(f.at_inverse_variable(), K(), order);
}

// Res_{z=center} f(z) dz.
template <class K>
K residue_at(const RatFunc<K>& f, const K& center) {
    return laurent_expand(f, center, 0).residue();
}

// Res_{z=inf} f(z) dz = -Res_{s=0} f(1/s) / s^2 ds.
template <class K>
K residue_at_infinity(const RatFunc<K>& f) {
    Series<K> s = laurent_expand_at_infinity(f, 2);
    // [s^{-1}] of f(1/s)/s^2 is [s^1] of f(1/s)
    return -s.at(1);
}

// Coefficient lift into a larger field (e.g. Q into a number field).
template <class K2, class K, class F>
Poly<K2> map_poly(const Poly<K>& p, F f) {
    std::vector<K2> c(p.degree() + 1);
    for (int i = 0; i <= p.degree(); ++i) c[i] = f(p.coeff(i));
    return Poly<K2>(std::move(c));
}
template <class K2, class K, class F>
RatFunc<K2> map_ratfunc(const RatFunc<K>& r, F f) {
    return RatFunc<K2>(map_poly<K2>(r.num(), f), map_poly<K2>(r.den(), f));
}

inline Poly<NFElem> lift_nf(const Poly<Rat>& p) {
    return map_poly<NFElem>(p, [](const Rat& r) { return NFElem(r); });
}
inline RatFunc<NFElem> lift_nf(const RatFunc<Rat>& r) {
    return map_ratfunc<NFElem>(r, [](const Rat& q) { return NFElem(q); });
}

// Square root of a rational-coefficient series; the leading coefficient must
// be an exact rational square.
inline Series<Rat> series_sqrt(const Series<Rat>& s) {
    return s.sqrt_with([](const Rat& a) {
        Rat r;
        if (!a.sqrt_exact(r))
            throw NonSquareLeadingCoefficient("series_sqrt: leading coefficient " +
                                              a.str() + " is not a rational square");
        return r;
    });
}

// Square root over any coefficient ring, restricted to unit leading
// coefficient; local parameters are normalized before this is called so no
// field extension can be needed.
template <class R>
Series<R> series_sqrt_unit(const Series<R>& s) {
    return s.sqrt_with([](const R& a) {
        if (!(a == R(1)))
            throw NonSquareLeadingCoefficient(
                "series_sqrt_unit: leading coefficient not 1");
        return R(1);
    });
}

}  // namespace ctr
