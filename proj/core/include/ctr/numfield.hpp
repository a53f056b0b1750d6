#pragma once

#include <memory>
#include <string>
#include <utility>

#include "ctr/poly.hpp"
#include "ctr/rational.hpp"

namespace ctr {

// Q[t]/(m) for a monic squarefree m.  Branch points of a curve come in Galois
// groups, one NumberField per irreducible factor of the x'-numerator; all the
// per-branch-point local data lives in the corresponding field and is folded
// back to Q by conjugate sums (traces).
class NumberField {
public:
    explicit NumberField(Poly<Rat> modulus, std::string varname = "t")
        : m_(std::move(modulus)), var_(std::move(varname)) {
        if (m_.degree() < 1) throw Error("NumberField: constant modulus");
        m_ = m_.monic();
        if (Poly<Rat>::gcd(m_, m_.derivative()).degree() > 0)
            throw NonSeparable("NumberField: modulus not squarefree");
    }

    const Poly<Rat>& modulus() const { return m_; }
    int degree() const { return m_.degree(); }
    const std::string& varname() const { return var_; }

    // p_k = sum of k-th powers of the roots; grown on demand.
    Rat power_sum(int k) const {
        if (k >= static_cast<int>(psums_.size())) {
            int target = std::max(k, 2 * static_cast<int>(psums_.size()) + 4);
            psums_ = power_sums(m_, target);
        }
        return psums_[k];
    }

private:
    Poly<Rat> m_;
    std::string var_;
    mutable std::vector<Rat> psums_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

// Element of a NumberField, or a plain rational when the field pointer is
// null.  The null convention is what lets NFElem satisfy the coefficient
// concept (default-construct to 0, construct from long) without threading a
// field through every generic algorithm; arithmetic adopts the non-null field
// of either operand.
class NFElem {
public:
    NFElem() = default;
    NFElem(long n) : rep_(n) {}
    explicit NFElem(const Rat& r) : rep_(Poly<Rat>(r)) {}
    NFElem(FieldPtr f, Poly<Rat> rep) : field_(std::move(f)), rep_(std::move(rep)) {
        if (field_) rep_ = rep_ % field_->modulus();
    }

    // The generator t of the field.
    static NFElem generator(FieldPtr f) { return NFElem(std::move(f), Poly<Rat>::var()); }

    const FieldPtr& field() const { return field_; }
    const Poly<Rat>& rep() const { return rep_; }
    bool is_zero() const { return rep_.is_zero(); }
    bool is_rational() const { return rep_.degree() <= 0; }
    Rat rational_value() const {
        if (!is_rational()) throw Error("NFElem: not rational");
        return rep_.coeff(0);
    }

    NFElem operator-() const { return NFElem(field_, -rep_, raw{}); }
    friend NFElem operator+(const NFElem& a, const NFElem& b) {
        FieldPtr f = join(a, b);
        return NFElem(f, a.rep_ + b.rep_, raw{});
    }
    friend NFElem operator-(const NFElem& a, const NFElem& b) { return a + (-b); }
    friend NFElem operator*(const NFElem& a, const NFElem& b) {
        FieldPtr f = join(a, b);
        Poly<Rat> p = a.rep_ * b.rep_;
        if (f) p = p % f->modulus();
        return NFElem(f, std::move(p), raw{});
    }
    friend NFElem operator/(const NFElem& a, const NFElem& b) { return a * b.inverse(); }
    NFElem& operator+=(const NFElem& o) { return *this = *this + o; }
    NFElem& operator-=(const NFElem& o) { return *this = *this - o; }
    NFElem& operator*=(const NFElem& o) { return *this = *this * o; }
    NFElem& operator/=(const NFElem& o) { return *this = *this / o; }

    friend bool operator==(const NFElem& a, const NFElem& b) {
        return (a - b).is_zero();
    }
    friend bool operator!=(const NFElem& a, const NFElem& b) { return !(a == b); }

    // Extended Euclid against the modulus.  Nonzero elements are invertible
    // because the modulus is irreducible for genuine fields; for merely
    // squarefree moduli a zero divisor raises NotInvertible.
    NFElem inverse() const {
        if (is_zero()) throw NotInvertible("NFElem: inverse of zero");
        if (!field_) return NFElem(Rat(), rep_.coeff(0).inverse(), raw_rat{});
        Poly<Rat> r0 = field_->modulus(), r1 = rep_;
        Poly<Rat> s0, s1(1);  // s tracks the cofactor of rep_
        while (!r1.is_zero()) {
            Poly<Rat> q, r2;
            Poly<Rat>::divrem(r0, r1, q, r2);
            Poly<Rat> s2 = s0 - q * s1;
            r0 = r1; r1 = r2;
            s0 = s1; s1 = s2;
        }
        if (r0.degree() != 0)
            throw NotInvertible("NFElem: zero divisor mod " + field_->modulus().str());
        return NFElem(field_, s0.scaled(r0.coeff(0).inverse()), raw{});
    }

    NFElem pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        NFElem r(1), b = *this;
        while (e) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }

    // Sum over all embeddings into Qbar (the trace); a rational number.
    Rat conjugate_sum() const {
        if (!field_) return rep_.coeff(0);
        Rat s;
        for (int k = 0; k <= rep_.degree(); ++k)
            s += rep_.coeff(k) * field_->power_sum(k);
        return s;
    }

    std::string str() const {
        return rep_.str(field_ ? field_->varname() : "t");
    }

private:
    struct raw {};
    struct raw_rat {};
    NFElem(FieldPtr f, Poly<Rat> rep, raw) : field_(std::move(f)), rep_(std::move(rep)) {}
    NFElem(const Rat&, const Rat& v, raw_rat) : rep_(Poly<Rat>(v)) {}

    static FieldPtr join(const NFElem& a, const NFElem& b) {
        if (a.field_ && b.field_) {
            if (a.field_ != b.field_ && a.field_->modulus() != b.field_->modulus())
                throw Error("NFElem: mixing distinct number fields");
            return a.field_;
        }
        return a.field_ ? a.field_ : b.field_;
    }

    FieldPtr field_;
    Poly<Rat> rep_;
};

}  // namespace ctr
