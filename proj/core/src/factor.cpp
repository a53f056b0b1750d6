#include "ctr/factor.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "ctr/errors.hpp"

namespace ctr {

std::vector<std::pair<Poly<Rat>, int>> squarefree_decomposition(const Poly<Rat>& f) {
    std::vector<std::pair<Poly<Rat>, int>> out;
    if (f.degree() < 1) return out;
    Poly<Rat> a = f.monic();
    Poly<Rat> g = Poly<Rat>::gcd(a, a.derivative());
    Poly<Rat> b = a / g;
    Poly<Rat> c = a.derivative() / g;
    Poly<Rat> d = c - b.derivative();
    for (int i = 1; !b.is_zero() && b.degree() > 0; ++i) {
        Poly<Rat> p = Poly<Rat>::gcd(b, d);
        if (p.degree() > 0) out.emplace_back(p, i);
        b = b / p;
        c = d / p;
        d = c - b.derivative();
    }
    return out;
}

namespace {

using cplx = std::complex<double>;

cplx ceval(const std::vector<double>& c, cplx z) {
    cplx r = 0;
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) r = r * z + c[i];
    return r;
}

// Durand-Kerner on a monic polynomial given by its coefficient doubles.
std::vector<cplx> numeric_roots(const std::vector<double>& c) {
    int d = static_cast<int>(c.size()) - 1;
    double radius = 1.0;
    for (int i = 0; i < d; ++i)
        radius = std::max(radius, 2.0 * std::pow(std::fabs(c[i]), 1.0 / (d - i)));
    std::vector<cplx> r(d);
    for (int i = 0; i < d; ++i) {
        double th = 2.0 * M_PI * i / d + 0.4;  // avoid real axis symmetry traps
        r[i] = radius * cplx(std::cos(th), std::sin(th)) * (0.4 + 0.6 * (i + 1.0) / d);
    }
    for (int it = 0; it < 2000; ++it) {
        double moved = 0;
        for (int i = 0; i < d; ++i) {
            cplx num = ceval(c, r[i]);
            cplx den = 1;
            for (int j = 0; j < d; ++j)
                if (j != i) den *= (r[i] - r[j]);
            if (std::abs(den) < 1e-300) {
                r[i] += cplx(1e-4, 1e-4);
                continue;
            }
            cplx delta = num / den;
            r[i] -= delta;
            moved = std::max(moved, std::abs(delta));
        }
        if (moved < 1e-14) break;
    }
    return r;
}

// Round a double to the nearest integer Rat; fails if not close.
bool round_int(double x, Rat& out, double tol) {
    double n = std::nearbyint(x);
    if (std::fabs(x - n) > tol) return false;
    if (std::fabs(n) > 9.0e15) return false;
    out = Rat(static_cast<long>(n));
    return true;
}

// Factor a monic squarefree polynomial with integer coefficients (given as
// Rats) into monic irreducible integer factors, by subset search over the
// numeric roots with exact-division certification.
std::vector<Poly<Rat>> factor_monic_int(const Poly<Rat>& g) {
    std::vector<Poly<Rat>> out;
    Poly<Rat> rem = g;
    while (rem.degree() > 1) {
        int d = rem.degree();
        std::vector<double> cd(d + 1);
        for (int i = 0; i <= d; ++i) cd[i] = rem.coeff(i).to_double();
        std::vector<cplx> roots = numeric_roots(cd);
        bool split = false;
        for (int sz = 1; sz <= d / 2 && !split; ++sz) {
            // iterate over subsets of {0..d-1} of size sz
            std::vector<int> idx(sz);
            for (int i = 0; i < sz; ++i) idx[i] = i;
            while (true) {
                // candidate = prod (z - roots[idx])
                std::vector<cplx> cc(sz + 1, 0.0);
                cc[0] = 1.0;
                int len = 1;
                for (int i = 0; i < sz; ++i) {
                    cc[len] = cc[len - 1];
                    for (int k = len - 1; k >= 1; --k) cc[k] = cc[k - 1] - roots[idx[i]] * cc[k];
                    cc[0] = -roots[idx[i]] * cc[0];
                    ++len;
                }
                bool ok = true;
                std::vector<Rat> cand(sz + 1);
                for (int k = 0; k <= sz && ok; ++k) {
                    if (std::fabs(cc[k].imag()) > 1e-5) ok = false;
                    else ok = round_int(cc[k].real(), cand[k], 1e-5);
                }
                if (ok) {
                    Poly<Rat> candidate{std::vector<Rat>(cand.begin(), cand.end())};
                    if (candidate.degree() == sz && candidate.divides(rem)) {
                        out.push_back(candidate);
                        rem = rem / candidate;
                        split = true;
                        break;
                    }
                }
                // next subset
                int i = sz - 1;
                while (i >= 0 && idx[i] == d - sz + i) --i;
                if (i < 0) break;
                ++idx[i];
                for (int j = i + 1; j < sz; ++j) idx[j] = idx[j - 1] + 1;
            }
        }
        if (!split) {
            out.push_back(rem);  // certified-by-exhaustion irreducible
            rem = Poly<Rat>(1);
        }
    }
    if (rem.degree() == 1) out.push_back(rem);
    return out;
}

// lcm of coefficient denominators.
mpz_class denom_lcm(const Poly<Rat>& f) {
    mpz_class l = 1;
    for (const Rat& c : f.coeffs()) {
        mpz_class d = c.den();
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    return l;
}

}  // namespace

std::vector<std::pair<Poly<Rat>, int>> factor_rationals(const Poly<Rat>& f) {
    std::vector<std::pair<Poly<Rat>, int>> out;
    if (f.degree() < 1) return out;
    for (const auto& [g, mult] : squarefree_decomposition(f)) {
        if (g.degree() == 1) {
            out.emplace_back(g, mult);
            continue;
        }
        // Scale to a monic integer polynomial: if g = z^d + sum a_i z^i with
        // a_i = p_i / q_i, substitute z = y / L with L the denominator lcm
        // times enough of itself; G(y) = L^d g(y/L) is monic with integer
        // coefficients, and roots y = L z.
        mpz_class L = denom_lcm(g);
        Rat Lr{L};
        std::vector<Rat> gc(g.degree() + 1);
        Rat p(1);
        for (int i = g.degree(); i >= 0; --i) {
            gc[i] = g.coeff(i) * p;
            p *= Lr;
        }
        Poly<Rat> G{std::move(gc)};
        for (Poly<Rat> h : factor_monic_int(G)) {
            // undo the scaling: factor of g is h(L z) / L^deg, monic
            int dh = h.degree();
            std::vector<Rat> hc(dh + 1);
            Rat q(1);
            for (int i = dh; i >= 0; --i) {  // hc[i] = h_i / L^{dh-i}
                hc[i] = h.coeff(i) / q;
                q *= Lr;
            }
            out.emplace_back(Poly<Rat>{std::move(hc)}, mult);
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
        return a.first.str() < b.first.str();
    });
    return out;
}

std::vector<std::pair<Rat, int>> rational_roots(const Poly<Rat>& f) {
    std::vector<std::pair<Rat, int>> out;
    for (const auto& [g, mult] : factor_rationals(f))
        if (g.degree() == 1) out.emplace_back(-g.coeff(0), mult);  // g monic: z + c
    return out;
}

bool is_irreducible(const Poly<Rat>& f) {
    if (f.degree() < 1) return false;
    auto fs = factor_rationals(f);
    return fs.size() == 1 && fs[0].second == 1 && fs[0].first.degree() == f.degree();
}

}  // namespace ctr
