#pragma once

#include <string>
#include <utility>

#include "ctr/poly.hpp"

namespace ctr {

// Reduced rational function num/den over a field K; den monic and coprime to
// num.  Forms a field itself, so RatFunc<Rat> serves as the coefficient field
// Q(X) wherever a symbolic parameter is needed (fiber sums, loop-equation
// checks).
template <class K>
class RatFunc {
public:
    RatFunc() : num_(), den_(1) {}
    RatFunc(long n) : num_(n), den_(1) {}
    explicit RatFunc(const K& k) : num_(k), den_(1) {}
    explicit RatFunc(Poly<K> num) : num_(std::move(num)), den_(1) {}
    RatFunc(Poly<K> num, Poly<K> den) : num_(std::move(num)), den_(std::move(den)) {
        reduce();
    }

    static RatFunc var() { return RatFunc(Poly<K>::var()); }

    const Poly<K>& num() const { return num_; }
    const Poly<K>& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_poly() const { return den_.degree() == 0; }

    RatFunc operator-() const { return RatFunc(-num_, den_, no_reduce{}); }
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        Poly<K> g = Poly<K>::gcd(a.den_, b.den_);
        Poly<K> da = a.den_ / g, db = b.den_ / g;
        return RatFunc(a.num_ * db + b.num_ * da, da * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw Error("RatFunc: division by zero");
        return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return (a.num_ * b.den_ - b.num_ * a.den_).is_zero();
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    RatFunc inverse() const {
        if (is_zero()) throw Error("RatFunc: inverse of zero");
        return RatFunc(den_, num_);
    }

    RatFunc derivative() const {
        return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(),
                       den_ * den_);
    }

    K eval(const K& x) const {
        K d = den_.eval(x);
        if (d.is_zero()) throw Error("RatFunc::eval at a pole");
        return num_.eval(x) * d.inverse();
    }

    bool has_pole_at(const K& x) const { return den_.eval(x).is_zero(); }

    // f(1/s) as a rational function of s.
    RatFunc at_inverse_variable() const {
        int n = num_.degree(), d = den_.degree(), m = std::max(n, d);
        Poly<K> nn = num_.reversed() * Poly<K>::var().pow(m - (n < 0 ? m : n));
        Poly<K> dd = den_.reversed() * Poly<K>::var().pow(m - d);
        if (num_.is_zero()) return RatFunc();
        return RatFunc(nn, dd);
    }

    // f(g) for rational g.
    RatFunc compose(const RatFunc& g) const {
        RatFunc n, d;
        for (int i = num_.degree(); i >= 0; --i) n = n * g + RatFunc(num_.coeff(i));
        for (int i = den_.degree(); i >= 0; --i) d = d * g + RatFunc(den_.coeff(i));
        return n / d;
    }

    RatFunc pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        RatFunc r(1), b = *this;
        while (e) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

    std::string str(const std::string& v = "z") const {
        if (is_poly()) return num_.str(v);
        return "(" + num_.str(v) + ")/(" + den_.str(v) + ")";
    }

private:
    struct no_reduce {};
    RatFunc(Poly<K> n, Poly<K> d, no_reduce) : num_(std::move(n)), den_(std::move(d)) {}
    void reduce() {
        if (den_.is_zero()) throw Error("RatFunc: zero denominator");
        if (num_.is_zero()) {
            den_ = Poly<K>(1);
            return;
        }
        Poly<K> g = Poly<K>::gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
        K l = den_.lc().inverse();
        den_ = den_.scaled(l);
        num_ = num_.scaled(l);
    }
    Poly<K> num_, den_;
};

}  // namespace ctr
