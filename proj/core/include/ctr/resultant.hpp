#pragma once

#include <vector>

#include "ctr/errors.hpp"
#include "ctr/multipoly.hpp"

namespace ctr {

// Determinant of a square matrix over MultiPoly<K> by Bareiss fraction-free
// elimination; every division is exact in the polynomial ring.
template <class K>
MultiPoly<K> bareiss_determinant(std::vector<std::vector<MultiPoly<K>>> m) {
    using MP = MultiPoly<K>;
    const int n = static_cast<int>(m.size());
    if (n == 0) return MP(1);
    MP prev(1);
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m[k][k].is_zero()) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (!m[i][k].is_zero()) {
                    p = i;
                    break;
                }
            if (p < 0) return MP();  // singular
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                MP t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                MP q;
                if (!MP::try_divide(t, prev, q))
                    throw EliminationFailure("bareiss: inexact division");
                m[i][j] = std::move(q);
            }
        prev = m[k][k];
    }
    return sign < 0 ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

// Resultant in the elimination variable of two polynomials whose coefficients
// are multivariate polynomials (the Sylvester determinant).
template <class K>
MultiPoly<K> resultant(const Poly<MultiPoly<K>>& a, const Poly<MultiPoly<K>>& b) {
    using MP = MultiPoly<K>;
    int da = a.degree(), db = b.degree();
    if (da < 0 || db < 0) return MP();
    if (da == 0) return a.coeff(0).pow(db);
    if (db == 0) return b.coeff(0).pow(da);
    int n = da + db;
    std::vector<std::vector<MP>> m(n, std::vector<MP>(n));
    for (int i = 0; i < db; ++i)
        for (int j = 0; j <= da; ++j) m[i][i + j] = a.coeff(da - j);
    for (int i = 0; i < da; ++i)
        for (int j = 0; j <= db; ++j) m[db + i][i + j] = b.coeff(db - j);
    return bareiss_determinant(std::move(m));
}

}  // namespace ctr
