#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "ctr/errors.hpp"
#include "ctr/poly.hpp"

namespace ctr {

// Truncated Laurent series Sum_{k=lo}^{hi} c_k w^k with tracked precision:
// coefficients are certified exact for exponents <= hi; reading past hi
// throws InsufficientPrecision.  The expansion center is context the caller
// carries (see LaurentExpansion in expand.hpp for the public op).
//
// R is any commutative ring with K-style interface; division is only ever
// required of leading coefficients.
template <class R>
class Series {
public:
    Series() : lo_(0), hi_(-1) {}  // empty: nothing known

    static Series zero(int hi) {
        Series s;
        s.lo_ = hi + 1;
        s.hi_ = hi;
        return s;
    }
    static Series constant(const R& v, int hi) {
        Series s = zero(hi);
        if (hi >= 0) s.set(0, v);
        return s;
    }
    static Series monomial(const R& v, int k, int hi) {
        Series s = zero(hi);
        s.set(k, v);
        return s;
    }
    // w itself, known exactly up to order hi.
    static Series identity(int hi) { return monomial(R(1), 1, hi); }

    template <class K>
    static Series from_poly(const Poly<K>& p, int hi) {
        Series s = zero(hi);
        for (int i = 0; i <= p.degree() && i <= hi; ++i) s.set(i, R(p.coeff(i)));
        return s;
    }

    int order() const { return hi_; }  // guaranteed order
    int low() const { return lo_; }

    R at(int k) const {
        if (k > hi_)
            throw InsufficientPrecision("series coefficient " + std::to_string(k) +
                                        " beyond guaranteed order " + std::to_string(hi_));
        if (k < lo_ || k - lo_ >= static_cast<int>(c_.size())) return R();
        return c_[k - lo_];
    }

    void set(int k, const R& v) {
        if (k > hi_) throw Error("Series::set beyond order");
        if (c_.empty()) {
            lo_ = k;
            c_.push_back(v);
            return;
        }
        if (k < lo_) {
            c_.insert(c_.begin(), lo_ - k, R());
            lo_ = k;
        }
        if (k - lo_ >= static_cast<int>(c_.size())) c_.resize(k - lo_ + 1);
        c_[k - lo_] = v;
    }

    // Exponent of the first nonzero certified coefficient.
    // Throws if the series is zero to its guaranteed order (valuation unknown).
    int valuation() const {
        for (int k = lo_; k <= hi_; ++k)
            if (!at(k).is_zero()) return k;
        throw InsufficientPrecision("valuation: series vanishes to guaranteed order");
    }

    bool is_zero_to_order() const {
        for (int k = lo_; k <= hi_; ++k)
            if (!at(k).is_zero()) return false;
        return true;
    }

    Series truncated(int hi) const {
        if (hi > hi_) throw InsufficientPrecision("truncate beyond guaranteed order");
        Series s = zero(hi);
        for (int k = lo_; k <= hi; ++k) s.set(k, at(k));
        return s;
    }

    // Multiply by w^k.
    Series shifted(int k) const {
        Series s = *this;
        s.lo_ += k;
        s.hi_ += k;
        return s;
    }

    Series operator-() const {
        Series s = *this;
        for (auto& v : s.c_) v = -v;
        return s;
    }
    friend Series operator+(const Series& a, const Series& b) {
        int hi = std::min(a.hi_, b.hi_);
        Series s = zero(hi);
        int lo = std::min(a.lo_, b.lo_);
        for (int k = lo; k <= hi; ++k) s.set(k, a.at(k) + b.at(k));
        return s;
    }
    friend Series operator-(const Series& a, const Series& b) { return a + (-b); }
    friend Series operator*(const Series& a, const Series& b) {
        int hi = std::min(a.hi_ + b.lo_, b.hi_ + a.lo_);
        Series s = zero(hi);
        for (int i = a.lo_; i <= a.hi_; ++i) {
            if (i >= static_cast<int>(a.lo_ + a.c_.size())) break;
            const R& ai = a.c_[i - a.lo_];
            if (ai.is_zero()) continue;
            for (int j = b.lo_; j <= b.hi_ && i + j <= hi; ++j) {
                R bj = b.at(j);
                if (bj.is_zero()) continue;
                s.set(i + j, s.at(i + j) + ai * bj);
            }
        }
        return s;
    }
    Series& operator+=(const Series& o) { return *this = *this + o; }
    Series& operator-=(const Series& o) { return *this = *this - o; }
    Series& operator*=(const Series& o) { return *this = *this * o; }

    Series scaled(const R& r) const {
        Series s = *this;
        for (auto& v : s.c_) v = v * r;
        return s;
    }

    // 1/f.  Needs the valuation; result guaranteed to order hi - 2*val.
    Series inverse() const {
        int v = valuation();
        int n = hi_ - v;              // relative order of the unit part
        Series u = zero(n);           // f * w^{-v}, normalized to start at 0
        for (int k = 0; k <= n; ++k) u.set(k, at(k + v));
        R a0inv = u.at(0).inverse();
        Series r = zero(n);
        r.set(0, a0inv);
        for (int k = 1; k <= n; ++k) {
            R s;
            for (int j = 1; j <= k; ++j) s = s + u.at(j) * r.at(k - j);
            r.set(k, -(s * a0inv));
        }
        return r.shifted(-v).truncated(hi_ - 2 * v);
    }

    friend Series operator/(const Series& a, const Series& b) { return a * b.inverse(); }

    // d/dw termwise.
    Series derivative() const {
        Series s = zero(hi_ - 1);
        for (int k = lo_; k <= hi_; ++k) {
            if (k == 0) continue;
            if (k - 1 <= s.hi_) s.set(k - 1, at(k) * R(static_cast<long>(k)));
        }
        return s;
    }

    // Antiderivative with zero constant; requires vanishing residue.
    Series integral() const {
        if (lo_ <= -1 && !at(-1).is_zero())
            throw Error("Series::integral: nonzero residue term");
        Series s = zero(hi_ + 1);
        for (int k = lo_; k <= hi_; ++k) {
            if (k == -1) continue;
            s.set(k + 1, at(k) * R(static_cast<long>(k + 1)).inverse());
        }
        return s;
    }

    // Coefficient of w^{-1}.
    R residue() const {
        if (hi_ < -1)
            throw InsufficientPrecision("residue: guaranteed order below -1");
        return lo_ > -1 ? R() : at(-1);
    }

    // Drop stored zeros below the valuation so lo_ reflects it (tightens the
    // precision bookkeeping of products involving this series).
    Series normalized() const {
        Series s = zero(hi_);
        bool lead = true;
        for (int k = lo_; k <= hi_; ++k) {
            R v = at(k);
            if (lead && v.is_zero()) continue;
            lead = false;
            s.set(k, v);
        }
        return s;
    }

    // f(g) where g has valuation >= 1.  Conservative precision: the positive
    // part of f is certified to min(hi_f, hi_g); negative powers of g go
    // through inverse() and carry its (weaker) guarantee.
    Series compose(const Series& gin) const {
        Series g = gin.normalized();
        if (!g.is_zero_to_order() && g.valuation() < 1)
            throw Error("Series::compose: inner series must vanish at 0");
        int cap = std::min(hi_, g.hi_);
        Series pos = zero(cap);  // Horner over k >= 0
        for (int k = std::max(hi_, 0); k >= 0; --k) {
            if (k < std::max(hi_, 0)) {
                pos = pos * g;
                if (pos.order() > cap) pos = pos.truncated(cap);
            }
            pos = pos + Series::constant(k <= hi_ ? at(k) : R(), cap);
        }
        Series s = pos;
        if (lo_ < 0) {
            Series ginv = g.inverse();
            Series gpow = Series::constant(R(1), ginv.order());
            for (int k = 1; k <= -lo_; ++k) {
                gpow = gpow * ginv;
                if (!at(-k).is_zero()) s = s + gpow.scaled(at(-k));
                else s = s + zero(gpow.order());  // keep the precision honest
            }
        }
        return s;
    }

    // Functional inverse of a series with valuation exactly 1.
    // Returns r with (*this).compose(r) = w to the guaranteed order.
    Series reversion() const {
        if (lo_ <= 0) {
            for (int k = lo_; k <= std::min(0, hi_); ++k)
                if (!at(k).is_zero())
                    throw NotInvertible("reversion: nonzero constant/negative part");
        }
        if (hi_ < 1 || at(1).is_zero())
            throw NotInvertible("reversion: vanishing linear coefficient");
        int n = hi_;
        R c1inv = at(1).inverse();
        Series r = zero(n);
        r.set(1, c1inv);
        // Solve [w^k] f(r(w)) = 0 order by order; with r_k still 0 the
        // discrepancy at order k is linear in r_k with slope c1.
        for (int k = 2; k <= n; ++k) {
            R err = this->compose(r).at(k);
            r.set(k, -(err * c1inv));
        }
        return r;
    }

    // Square root: even valuation, leading coefficient must have a square
    // root supplied by R's sqrt hook (see series_sqrt in expand.hpp for the
    // public op with the field-extension policy).
    template <class SqrtFn>
    Series sqrt_with(SqrtFn leading_sqrt) const {
        int v = valuation();
        if (v % 2 != 0) throw OddLeadingOrder("series_sqrt: odd leading order");
        int n = hi_ - v;
        Series u = zero(n);
        for (int k = 0; k <= n; ++k) u.set(k, at(k + v));
        R a0 = u.at(0);
        R r0 = leading_sqrt(a0);  // throws NonSquareLeadingCoefficient
        Series r = zero(n);
        r.set(0, r0);
        R inv2r0 = (r0 + r0).inverse();
        for (int k = 1; k <= n; ++k) {
            // (r^2)_k = a_k  =>  2 r0 r_k = a_k - sum_{j=1}^{k-1} r_j r_{k-j}
            R s;
            for (int j = 1; j < k; ++j) s = s + r.at(j) * r.at(k - j);
            r.set(k, (u.at(k) - s) * inv2r0);
        }
        return r.shifted(v / 2).truncated(hi_ - v / 2);
    }

private:
    int lo_, hi_;
    std::vector<R> c_;
};

}  // namespace ctr
