#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "ctr/poly.hpp"

namespace ctr {

// Sparse multivariate polynomial over K.  Variables are small integer ids
// whose meaning (p_1, p_2, ..., a spectator X, ...) is assigned by the
// caller; exponent vectors are stored with trailing zeros trimmed so the
// same monomial has one key regardless of how many variables are in play.
// std::map keys give a deterministic term order (lex) for serialization,
// equality and division.
template <class K>
class MultiPoly {
public:
    using Exp = std::vector<int>;

    MultiPoly() = default;
    MultiPoly(long n) {
        if (n != 0) t_[Exp{}] = K(n);
    }
    explicit MultiPoly(const K& k) {
        if (!k.is_zero()) t_[Exp{}] = k;
    }

    static MultiPoly var(int id) { return monomial(K(1), unit_exp(id)); }
    static MultiPoly monomial(const K& k, Exp e) {
        MultiPoly p;
        if (!k.is_zero()) {
            trim(e);
            p.t_[std::move(e)] = k;
        }
        return p;
    }

    template <class K2>
    static MultiPoly from_univariate(const Poly<K2>& p, int var) {
        MultiPoly r;
        for (int i = 0; i <= p.degree(); ++i) {
            K c = K(p.coeff(i));
            if (!c.is_zero()) r.t_[i == 0 ? Exp{} : exp_of(var, i)] = c;
        }
        return r;
    }

    bool is_zero() const { return t_.empty(); }
    bool is_constant() const {
        return t_.empty() || (t_.size() == 1 && t_.begin()->first.empty());
    }
    K constant_value() const {
        if (is_zero()) return K();
        if (!is_constant()) throw Error("MultiPoly: not a constant");
        return t_.begin()->second;
    }
    const std::map<Exp, K>& terms() const { return t_; }
    std::size_t term_count() const { return t_.size(); }

    int degree(int var) const {
        if (is_zero()) return -1;
        int d = 0;
        for (const auto& [e, c] : t_)
            if (var < static_cast<int>(e.size())) d = std::max(d, e[var]);
        return d;
    }
    bool depends_on(int var) const {
        for (const auto& [e, c] : t_)
            if (var < static_cast<int>(e.size()) && e[var] > 0) return true;
        return false;
    }
    // Largest variable id appearing, or -1.
    int max_var() const {
        int m = -1;
        for (const auto& [e, c] : t_) m = std::max(m, static_cast<int>(e.size()) - 1);
        return m;
    }

    MultiPoly operator-() const {
        MultiPoly r = *this;
        for (auto& [e, c] : r.t_) c = -c;
        return r;
    }
    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly r = a;
        for (const auto& [e, c] : b.t_) r.add_term(e, c);
        return r;
    }
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly r = a;
        for (const auto& [e, c] : b.t_) r.add_term(e, -c);
        return r;
    }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly r;
        for (const auto& [ea, ca] : a.t_)
            for (const auto& [eb, cb] : b.t_) {
                Exp e(std::max(ea.size(), eb.size()), 0);
                for (std::size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
                for (std::size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }
    MultiPoly& operator+=(const MultiPoly& o) {
        for (const auto& [e, c] : o.t_) add_term(e, c);
        return *this;
    }
    MultiPoly& operator-=(const MultiPoly& o) {
        for (const auto& [e, c] : o.t_) add_term(e, -c);
        return *this;
    }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    MultiPoly scaled(const K& k) const {
        MultiPoly r;
        if (k.is_zero()) return r;
        for (const auto& [e, c] : t_) r.add_term(e, c * k);
        return r;
    }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return (a - b).is_zero();
    }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    // Coefficient of var^k: a polynomial in the remaining variables.
    MultiPoly coeff_of(int var, int k) const {
        MultiPoly r;
        for (const auto& [e, c] : t_) {
            int ev = var < static_cast<int>(e.size()) ? e[var] : 0;
            if (ev != k) continue;
            Exp e2 = e;
            if (var < static_cast<int>(e2.size())) e2[var] = 0;
            r.add_term(e2, c);
        }
        return r;
    }

    // View as univariate in var, with MultiPoly coefficients free of var.
    Poly<MultiPoly> as_poly_in(int var) const {
        std::vector<MultiPoly> cs(degree(var) + 1);
        if (is_zero()) return Poly<MultiPoly>();
        for (int k = 0; k < static_cast<int>(cs.size()); ++k) cs[k] = coeff_of(var, k);
        return Poly<MultiPoly>(std::move(cs));
    }
    static MultiPoly collect(const Poly<MultiPoly>& p, int var) {
        MultiPoly r, v = MultiPoly::var(var);
        for (int i = p.degree(); i >= 0; --i) r = r * v + p.coeff(i);
        return r;
    }

    MultiPoly derivative(int var) const {
        MultiPoly r;
        for (const auto& [e, c] : t_) {
            int ev = var < static_cast<int>(e.size()) ? e[var] : 0;
            if (ev == 0) continue;
            Exp e2 = e;
            e2[var] -= 1;
            r.add_term(e2, c * K(static_cast<long>(ev)));
        }
        return r;
    }

    // Substitute a K value for one variable (the workhorse for pinning a
    // spectator point).
    MultiPoly substituted(int var, const K& val) const {
        MultiPoly r;
        for (const auto& [e, c] : t_) {
            int ev = var < static_cast<int>(e.size()) ? e[var] : 0;
            Exp e2 = e;
            if (ev) e2[var] = 0;
            K cv = c;
            for (int i = 0; i < ev; ++i) cv = cv * val;
            r.add_term(e2, cv);
        }
        return r;
    }

    MultiPoly pow(long n) const {
        MultiPoly r(1), b = *this;
        while (n) {
            if (n & 1) r *= b;
            b *= b;
            n >>= 1;
        }
        return r;
    }

    // Exact multivariate division (lex leading-term reduction).  Returns
    // false if b does not divide a.
    static bool try_divide(const MultiPoly& a, const MultiPoly& b, MultiPoly& q) {
        if (b.is_zero()) throw Error("MultiPoly: division by zero");
        q = MultiPoly();
        MultiPoly r = a;
        const auto& lb = *b.t_.rbegin();
        K lbinv = lb.second.inverse();
        while (!r.is_zero()) {
            const auto& la = *r.t_.rbegin();
            Exp e(std::max(la.first.size(), lb.first.size()), 0);
            bool ok = la.first.size() >= lb.first.size();
            for (std::size_t i = 0; i < la.first.size() && ok; ++i) {
                int bi = i < lb.first.size() ? lb.first[i] : 0;
                if (la.first[i] < bi) ok = false;
                e[i] = la.first[i] - bi;
            }
            if (!ok) return false;
            MultiPoly t = monomial(la.second * lbinv, e);
            q += t;
            r -= t * b;
        }
        return true;
    }

    // Rename variables: new id of variable i is perm[i] (perm must cover all
    // appearing variables and be injective on them).
    MultiPoly relabeled(const std::vector<int>& perm) const {
        MultiPoly r;
        for (const auto& [e, c] : t_) {
            Exp e2;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                int ni = perm[i];
                if (ni >= static_cast<int>(e2.size())) e2.resize(ni + 1, 0);
                e2[ni] = e[i];
            }
            r.add_term(std::move(e2), c);
        }
        return r;
    }

    template <class F>
    auto mapped(F f) const -> MultiPoly<decltype(f(std::declval<K>()))> {
        MultiPoly<decltype(f(std::declval<K>()))> r;
        for (const auto& [e, c] : t_) r.add_term(e, f(c));
        return r;
    }

    std::string str(const std::function<std::string(int)>& name = default_name) const {
        if (is_zero()) return "0";
        std::string s;
        for (const auto& [e, c] : t_) {
            if (!s.empty()) s += " + ";
            s += "(" + c.str() + ")";
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                s += "*" + name(static_cast<int>(i));
                if (e[i] > 1) s += "^" + std::to_string(e[i]);
            }
        }
        return s;
    }

    // Shared with mapped() across instantiations.
    void add_term(Exp e, const K& c) {
        if (c.is_zero()) return;
        trim(e);
        auto it = t_.find(e);
        if (it == t_.end()) {
            t_.emplace(std::move(e), c);
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

private:
    static std::string default_name(int i) { return "x" + std::to_string(i); }
    static Exp unit_exp(int id) { return exp_of(id, 1); }
    static Exp exp_of(int id, int k) {
        Exp e(id + 1, 0);
        e[id] = k;
        return e;
    }
    static void trim(Exp& e) {
        while (!e.empty() && e.back() == 0) e.pop_back();
    }

    std::map<Exp, K> t_;
};

}  // namespace ctr
