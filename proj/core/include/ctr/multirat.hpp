#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "ctr/multipoly.hpp"
#include "ctr/series.hpp"

namespace ctr {

// Multivariate rational function: sparse numerator over a kept-factored
// denominator  num / prod_i f_i^{e_i}.  The factors are normalized (lex
// leading coefficient 1, deterministic order) and in practice univariate --
// correlator denominators are products of per-variable pole factors -- but
// nothing requires that.  Cancellation is opportunistic: after every
// operation each factor is divided out of the numerator as often as it
// goes exactly.  MultiRat satisfies the coefficient-field concept, so it can
// sit inside Series and Poly.
template <class K>
class MultiRat {
public:
    using MP = MultiPoly<K>;
    using Factor = std::pair<MP, int>;

    MultiRat() = default;
    MultiRat(long n) : num_(n) {}
    explicit MultiRat(const K& k) : num_(k) {}
    explicit MultiRat(MP num) : num_(std::move(num)) {}
    MultiRat(MP num, std::vector<Factor> den)
        : num_(std::move(num)), den_(std::move(den)) {
        normalize();
    }

    static MultiRat var(int id) { return MultiRat(MP::var(id)); }

    const MP& num() const { return num_; }
    const std::vector<Factor>& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_poly() const { return den_.empty(); }
    bool is_constant() const { return den_.empty() && num_.is_constant(); }
    K constant_value() const {
        if (!is_constant()) throw Error("MultiRat: not a constant");
        return num_.constant_value();
    }

    MP den_expanded() const {
        MP d(1);
        for (const auto& [f, e] : den_) d *= f.pow(e);
        return d;
    }

    MultiRat operator-() const { return raw(-num_, den_); }
    friend MultiRat operator+(const MultiRat& a, const MultiRat& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        // merged denominator: per factor the max exponent
        std::vector<Factor> d = a.den_;
        for (const auto& fb : b.den_) {
            auto it = std::find_if(d.begin(), d.end(),
                                   [&](const Factor& f) { return f.first == fb.first; });
            if (it == d.end()) d.push_back(fb);
            else it->second = std::max(it->second, fb.second);
        }
        MP na = a.num_, nb = b.num_;
        for (const auto& [f, e] : d) {
            na *= f.pow(e - a.exponent_of(f));
            nb *= f.pow(e - b.exponent_of(f));
        }
        return MultiRat(na + nb, std::move(d));
    }
    friend MultiRat operator-(const MultiRat& a, const MultiRat& b) { return a + (-b); }
    friend MultiRat operator*(const MultiRat& a, const MultiRat& b) {
        std::vector<Factor> d = a.den_;
        for (const auto& fb : b.den_) {
            auto it = std::find_if(d.begin(), d.end(),
                                   [&](const Factor& f) { return f.first == fb.first; });
            if (it == d.end()) d.push_back(fb);
            else it->second += fb.second;
        }
        return MultiRat(a.num_ * b.num_, std::move(d));
    }
    friend MultiRat operator/(const MultiRat& a, const MultiRat& b) { return a * b.inverse(); }
    MultiRat& operator+=(const MultiRat& o) { return *this = *this + o; }
    MultiRat& operator-=(const MultiRat& o) { return *this = *this - o; }
    MultiRat& operator*=(const MultiRat& o) { return *this = *this * o; }
    MultiRat& operator/=(const MultiRat& o) { return *this = *this / o; }

    friend bool operator==(const MultiRat& a, const MultiRat& b) {
        return (a.num_ * b.den_expanded() - b.num_ * a.den_expanded()).is_zero();
    }
    friend bool operator!=(const MultiRat& a, const MultiRat& b) { return !(a == b); }

    MultiRat inverse() const {
        if (is_zero()) throw NotInvertible("MultiRat: inverse of zero");
        MP n(1);
        for (const auto& [f, e] : den_) n *= f.pow(e);
        std::vector<Factor> d;
        if (!num_.is_constant()) d.push_back({num_, 1});
        else n = n.scaled(num_.constant_value().inverse());
        if (!d.empty()) return MultiRat(std::move(n), std::move(d));
        return raw(std::move(n), {});
    }

    MultiRat scaled(const K& k) const { return MultiRat(num_.scaled(k), den_); }

    MultiRat derivative(int var) const {
        // d/dv [ n / prod f^e ] = n' / D  -  n * sum e f'/f / D
        MultiRat r = raw(num_.derivative(var), den_);
        for (std::size_t i = 0; i < den_.size(); ++i) {
            if (!den_[i].first.depends_on(var)) continue;
            std::vector<Factor> d = den_;
            d[i].second += 1;
            r -= MultiRat(num_ * den_[i].first.derivative(var) *
                              MP(K(static_cast<long>(den_[i].second))),
                          std::move(d));
        }
        return r;
    }

    bool depends_on(int var) const {
        if (num_.depends_on(var)) return true;
        for (const auto& [f, e] : den_)
            if (f.depends_on(var)) return true;
        return false;
    }
    int max_var() const {
        int m = num_.max_var();
        for (const auto& [f, e] : den_) m = std::max(m, f.max_var());
        return m;
    }

    // Substitute a K value for var; throws on a denominator zero.
    MultiRat substituted(int var, const K& val) const {
        MP n = num_.substituted(var, val);
        std::vector<Factor> d;
        for (const auto& [f, e] : den_) {
            MP fs = f.substituted(var, val);
            if (fs.is_zero()) throw Error("MultiRat::substituted hits a pole");
            d.push_back({std::move(fs), e});
        }
        return MultiRat(std::move(n), std::move(d));
    }

    MultiRat pow(long n) const {
        if (n < 0) return inverse().pow(-n);
        MultiRat r(1), b = *this;
        while (n) {
            if (n & 1) r *= b;
            b *= b;
            n >>= 1;
        }
        return r;
    }

    MultiRat relabeled(const std::vector<int>& perm) const {
        std::vector<Factor> d;
        for (const auto& [f, e] : den_) d.push_back({f.relabeled(perm), e});
        return MultiRat(num_.relabeled(perm), std::move(d));
    }

    template <class F>
    auto mapped(F f) const -> MultiRat<decltype(f(std::declval<K>()))> {
        using K2 = decltype(f(std::declval<K>()));
        MultiRat<K2> r(num_.mapped(f));
        for (const auto& [fac, e] : den_)
            r = r * MultiRat<K2>(MultiPoly<K2>(1),
                                 {{fac.mapped(f), e}});
        return r;
    }

    std::string str(const std::function<std::string(int)>& name =
                        [](int i) { return "x" + std::to_string(i); }) const {
        std::string s = "(" + num_.str(name) + ")";
        for (const auto& [f, e] : den_) {
            s += "/(" + f.str(name) + ")";
            if (e > 1) s += "^" + std::to_string(e);
        }
        return s;
    }

private:
    static MultiRat raw(MP n, std::vector<Factor> d) {
        MultiRat r;
        r.num_ = std::move(n);
        r.den_ = std::move(d);
        if (r.num_.is_zero()) r.den_.clear();
        return r;
    }

    int exponent_of(const MP& f) const {
        for (const auto& [g, e] : den_)
            if (g == f) return e;
        return 0;
    }

    void normalize() {
        if (num_.is_zero()) {
            den_.clear();
            return;
        }
        std::vector<Factor> d;
        for (auto& [f, e] : den_) {
            if (f.is_zero()) throw Error("MultiRat: zero denominator factor");
            if (e == 0 || f.is_constant()) {
                if (f.is_constant() && e != 0)
                    num_ = num_.scaled(f.constant_value().inverse().pow(e));
                continue;
            }
            // leading-coefficient normalization for a canonical factor form
            K lc = f.terms().rbegin()->second;
            if (!(lc == K(1))) {
                f = f.scaled(lc.inverse());
                num_ = num_.scaled(lc.inverse().pow(e));
            }
            auto it = std::find_if(d.begin(), d.end(),
                                   [&](const Factor& g) { return g.first == f; });
            if (it == d.end()) d.push_back({std::move(f), e});
            else it->second += e;
        }
        den_ = std::move(d);
        // opportunistic cancellation
        for (auto& [f, e] : den_) {
            while (e > 0) {
                MP q;
                if (!MP::try_divide(num_, f, q)) break;
                num_ = std::move(q);
                --e;
            }
        }
        den_.erase(std::remove_if(den_.begin(), den_.end(),
                                  [](const Factor& f) { return f.second == 0; }),
                   den_.end());
        std::sort(den_.begin(), den_.end(), [](const Factor& a, const Factor& b) {
            if (a.first.term_count() != b.first.term_count())
                return a.first.term_count() < b.first.term_count();
            return a.first.str() < b.first.str();
        });
    }

    MP num_;
    std::vector<Factor> den_;
};

// Joint substitution of series (all in the same expansion variable w) for a
// set of variables of a polynomial.  Substituting into polynomials is always
// safe; inversion happens once per denominator factor afterwards, which is
// what makes diagonal substitutions like f(q(w), sigma(q(w))) sound.
template <class K>
Series<MultiRat<K>> substitute_poly_series(
    const MultiPoly<K>& p,
    const std::vector<std::pair<int, Series<MultiRat<K>>>>& subs, std::size_t from,
    int order) {
    using SR = Series<MultiRat<K>>;
    while (from < subs.size() && !p.depends_on(subs[from].first)) ++from;
    if (from == subs.size()) return SR::constant(MultiRat<K>(p), order);
    int var = subs[from].first;
    const SR& s = subs[from].second;
    Poly<MultiPoly<K>> u = p.as_poly_in(var);
    SR acc = SR::constant(MultiRat<K>(), order);
    for (int i = u.degree(); i >= 0; --i)
        acc = acc * s + substitute_poly_series(u.coeff(i), subs, from + 1, order);
    return acc;
}

// Substitute series for several variables of f simultaneously.  The main
// bridge from global rational data to local expansions at a point.
template <class K>
Series<MultiRat<K>> substitute_series_multi(
    const MultiRat<K>& f,
    const std::vector<std::pair<int, Series<MultiRat<K>>>>& subs) {
    using SR = Series<MultiRat<K>>;
    int order = subs.empty() ? 0 : subs[0].second.order();
    for (const auto& [v, s] : subs) order = std::min(order, s.order());
    auto touched = [&](const MultiPoly<K>& p) {
        for (const auto& [v, s] : subs)
            if (p.depends_on(v)) return true;
        return false;
    };
    SR r = substitute_poly_series(f.num(), subs, 0, order);
    for (const auto& [fac, e] : f.den()) {
        if (!touched(fac)) {
            r = r.scaled(MultiRat<K>(MultiPoly<K>(1), {{fac, e}}));
            continue;
        }
        SR d = substitute_poly_series(fac, subs, 0, order).inverse();
        for (int i = 0; i < e; ++i) r = r * d;
    }
    return r;
}

template <class K>
Series<MultiRat<K>> substitute_series(const MultiRat<K>& f, int var,
                                      const Series<MultiRat<K>>& s) {
    return substitute_series_multi(f, {{var, s}});
}

}  // namespace ctr
