#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "ctr/errors.hpp"
#include "ctr/rational.hpp"

namespace ctr {

// Dense univariate polynomial over a field K.
//
// K must be default-constructible to zero, constructible from long, and
// support +,-,*,/, ==, is_zero(), inverse(), str().  Rat, NFElem, RatFunc<K>
// and MultiRat<K> all qualify, so polynomials nest (e.g. Poly<RatFunc<Rat>>
// is a polynomial in w with coefficients rational in X).
template <class K>
class Poly {
public:
    Poly() = default;
    Poly(long n) {
        if (n != 0) c_.push_back(K(n));
    }
    explicit Poly(const K& k) {
        if (!k.is_zero()) c_.push_back(k);
    }
    explicit Poly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly monomial(const K& k, int deg) {
        Poly p;
        if (k.is_zero()) return p;
        p.c_.assign(deg + 1, K());
        p.c_[deg] = k;
        return p;
    }
    static Poly var() { return monomial(K(1), 1); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for 0
    const std::vector<K>& coeffs() const { return c_; }
    K coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : K();
    }
    const K& lc() const {
        if (is_zero()) throw Error("Poly::lc of zero polynomial");
        return c_.back();
    }

    Poly operator-() const {
        Poly r = *this;
        for (auto& k : r.c_) k = -k;
        return r;
    }
    friend Poly operator+(const Poly& a, const Poly& b) {
        Poly r;
        r.c_.resize(std::max(a.c_.size(), b.c_.size()), K());
        for (size_t i = 0; i < r.c_.size(); ++i)
            r.c_[i] = a.coeff(i) + b.coeff(i);
        r.trim();
        return r;
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly r;
        if (a.is_zero() || b.is_zero()) return r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, K());
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (size_t j = 0; j < b.c_.size(); ++j)
                r.c_[i + j] = r.c_[i + j] + a.c_[i] * b.c_[j];
        }
        r.trim();
        return r;
    }
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly scaled(const K& k) const {
        Poly r = *this;
        if (k.is_zero()) return Poly();
        for (auto& x : r.c_) x = x * k;
        r.trim();
        return r;
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        return (a - b).is_zero();
    }

    // Evaluation in any ring R accepting R = R*K-style mixed products is not
    // attempted; we evaluate at a K point (Horner).
    K eval(const K& x) const {
        K r;
        for (int i = degree(); i >= 0; --i) r = r * x + c_[i];
        return r;
    }

    Poly derivative() const {
        Poly r;
        if (c_.size() <= 1) return r;
        r.c_.resize(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = c_[i] * K(static_cast<long>(i));
        r.trim();
        return r;
    }

    // Antiderivative with zero constant term.
    Poly integral() const {
        Poly r;
        if (is_zero()) return r;
        r.c_.assign(c_.size() + 1, K());
        for (size_t i = 0; i < c_.size(); ++i)
            r.c_[i + 1] = c_[i] * K(static_cast<long>(i + 1)).inverse();
        r.trim();
        return r;
    }

    // Taylor shift: returns p(z + a).
    Poly shifted(const K& a) const {
        Poly r;
        for (int i = degree(); i >= 0; --i) {
            // r = r*(z+a) + c_i
            Poly zr = Poly::var() * r + r.scaled(a);
            r = zr + Poly(c_[i]);
        }
        return r;
    }

    // Returns p(z^-1) * z^deg, i.e. the reversed coefficient list.
    Poly reversed() const {
        Poly r = *this;
        std::reverse(r.c_.begin(), r.c_.end());
        r.trim();
        return r;
    }

    static void divrem(const Poly& a, const Poly& b, Poly& q, Poly& r) {
        if (b.is_zero()) throw Error("Poly::divrem by zero");
        q = Poly();
        r = a;
        K binv = b.lc().inverse();
        while (!r.is_zero() && r.degree() >= b.degree()) {
            int d = r.degree() - b.degree();
            K f = r.lc() * binv;
            q += Poly::monomial(f, d);
            r -= b * Poly::monomial(f, d);
        }
    }
    friend Poly operator/(const Poly& a, const Poly& b) {
        Poly q, r;
        divrem(a, b, q, r);
        return q;
    }
    friend Poly operator%(const Poly& a, const Poly& b) {
        Poly q, r;
        divrem(a, b, q, r);
        return r;
    }
    bool divides(const Poly& a) const {
        Poly q, r;
        divrem(a, *this, q, r);
        return r.is_zero();
    }

    Poly monic() const {
        if (is_zero()) return *this;
        return scaled(lc().inverse());
    }

    static Poly gcd(Poly a, Poly b) {
        while (!b.is_zero()) {
            Poly r = a % b;
            a = b;
            b = r;
        }
        return a.monic();
    }

    Poly pow(long e) const {
        Poly r(1), b = *this;
        while (e) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

    std::string str(const std::string& v = "z") const {
        if (is_zero()) return "0";
        std::string s;
        for (int i = 0; i <= degree(); ++i) {
            if (c_[i].is_zero()) continue;
            if (!s.empty()) s += " + ";
            s += "(" + c_[i].str() + ")";
            if (i >= 1) s += "*" + v;
            if (i >= 2) s += "^" + std::to_string(i);
        }
        return s;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<K> c_;
};

// Newton power sums p_1..p_n of the roots of a monic-normalizable polynomial,
// from its coefficients (Newton's identities).  p_0 = degree.
template <class K>
std::vector<K> power_sums(const Poly<K>& f, int n) {
    int d = f.degree();
    if (d < 0) throw Error("power_sums of zero polynomial");
    K lcinv = f.lc().inverse();
    // e_k with sign: f = lc * (z^d - s1 z^{d-1} + ...): use a_i = coeff(d-i)/lc
    std::vector<K> a(d + 1);
    for (int i = 0; i <= d; ++i) a[i] = f.coeff(d - i) * lcinv;
    std::vector<K> p(n + 1);
    p[0] = K(d);
    for (int k = 1; k <= n; ++k) {
        // p_k + a_1 p_{k-1} + ... + a_{k-1} p_1 + k a_k = 0
        K s;
        for (int i = 1; i < k; ++i)
            if (i <= d) s = s + a[i] * p[k - i];
        if (k <= d) s = s + K(static_cast<long>(k)) * a[k];
        p[k] = -s;
    }
    return p;
}

}  // namespace ctr
