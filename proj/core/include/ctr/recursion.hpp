#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "ctr/multirat.hpp"
#include "ctr/spectral_curve.hpp"

namespace ctr {

// Correlator differential omega_n^(h): value in variables 0..n-1 with an
// implicit factor dz_0 ... dz_{n-1}.
struct MultiDifferential {
    int n = 0;
    int h = 0;
    MultiRat<Rat> value;
};

// How the quadratic splitting sum of the residue formula ranges over (m, J).
// `full` is the rule the identities require (all m, all J, no omega_1^(0)
// factor); `literal` restricts to 1 <= m <= h-1 and exists as a negative
// control for the dilaton test.
enum class SplittingRule { full, literal };

class CorrelatorCache {
public:
    explicit CorrelatorCache(std::uint64_t fingerprint = 0) : fp_(fingerprint) {}

    std::uint64_t fingerprint() const { return fp_; }

    std::optional<MultiDifferential> get(int n, int h) const {
        std::lock_guard<std::mutex> lk(mu_);
        auto it = map_.find({n, h});
        if (it == map_.end()) return std::nullopt;
        return it->second;
    }
    void put(const MultiDifferential& md) {
        std::lock_guard<std::mutex> lk(mu_);
        map_.emplace(std::make_pair(md.n, md.h), md);
    }
    void check_curve(const SpectralCurve& curve) const {
        if (fp_ != 0 && fp_ != curve.fingerprint())
            throw CacheMismatch("cache fingerprint does not match the curve");
    }
    std::vector<std::pair<int, int>> keys() const {
        std::lock_guard<std::mutex> lk(mu_);
        std::vector<std::pair<int, int>> ks;
        for (const auto& [k, v] : map_) ks.push_back(k);
        return ks;
    }

private:
    std::uint64_t fp_;
    mutable std::mutex mu_;
    std::map<std::pair<int, int>, MultiDifferential> map_;
};

// B(p,q) = dp dq / (p-q)^2 in the uniformizer (genus zero), vars 0 and 1.
MultiRat<Rat> bergmann();

// Cap on the automatic order-doubling retries shared by omega and the
// free-energy operations; InsufficientPrecision surfaces past it.
int max_series_order();
void set_max_series_order(int order);

// The correlator omega_n^(h) by the residue recursion (base cases y dx and
// B).  InsufficientPrecision is retried internally with doubled curve order.
MultiDifferential omega(const SpectralCurve& curve, int n, int h,
                        CorrelatorCache* cache = nullptr,
                        SplittingRule rule = SplittingRule::full, int jobs = 1);

// Closed form for omega_1^(1) from the branch-point jets; must equal
// omega(curve, 1, 1) exactly.
MultiDifferential omega11_closed(const SpectralCurve& curve);

// dS_{p,sigma(p)}(q) expanded at a branch group: series in the local shift w
// with coefficients rational in q (variable 0).
Series<MultiRat<NFElem>> dS_kernel(const SpectralCurve& curve,
                                   const BranchGroup& g, int order);

struct StructureReport {
    bool pass = true;
    std::vector<std::string> failures;
    int max_pole_order = 0;
    void fail(std::string msg) {
        pass = false;
        failures.push_back(std::move(msg));
    }
};

// Symmetry, pole confinement, residue-freeness and infinity decay of a
// computed correlator (2h+n-2 > 0).
StructureReport verify_structure(const SpectralCurve& curve,
                                 const MultiDifferential& md);

}  // namespace ctr
