#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ctr {

// Arbitrary-precision rational, canonical form (reduced, positive denominator).
// Thin wrapper over GMP's mpq_class; exists so the rest of the library sees a
// single value type with a stable textual form.
class Rat {
public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}
    Rat(long n, long d) : v_(n, d) { canonicalize(); }
    explicit Rat(const mpq_class& q) : v_(q) { canonicalize(); }
    explicit Rat(const mpz_class& z) : v_(z) {}

    // Parses "p/q" or "p" (decimal integers).
    static Rat parse(const std::string& s) {
        Rat r;
        if (s.empty()) throw std::invalid_argument("Rat::parse: empty string");
        if (r.v_.set_str(s, 10) != 0)
            throw std::invalid_argument("Rat::parse: bad rational '" + s + "'");
        r.canonicalize();
        return r;
    }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }

    const mpz_class num() const { return v_.get_num(); }
    const mpz_class den() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    Rat operator-() const { Rat r; r.v_ = -v_; return r; }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw std::domain_error("Rat: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }

    Rat inverse() const {
        if (is_zero()) throw std::domain_error("Rat: inverse of zero");
        Rat r;
        r.v_ = 1 / v_;
        return r;
    }

    Rat pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        Rat r(1), b = *this;
        while (e) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

    double to_double() const { return v_.get_d(); }

    std::string str() const { return v_.get_str(); }

    // True and the exact square root if *this is a square of a rational.
    bool sqrt_exact(Rat& out) const {
        if (sign() < 0) return false;
        mpz_class n = v_.get_num(), d = v_.get_den(), rn, rd;
        mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
        mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
        if (rn * rn != n || rd * rd != d) return false;
        out = Rat(mpq_class(rn, rd));
        return true;
    }

private:
    void canonicalize() { v_.canonicalize(); }
    mpq_class v_;
};

inline Rat abs(const Rat& a) { return a.sign() < 0 ? -a : a; }

// FNV-1a over a string; stable across runs, used for curve fingerprints.
inline std::uint64_t fnv1a(const std::string& s, std::uint64_t h = 1469598103934665603ull) {
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace ctr
