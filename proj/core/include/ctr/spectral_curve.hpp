#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ctr/expand.hpp"
#include "ctr/multipoly.hpp"
#include "ctr/numfield.hpp"
#include "ctr/series.hpp"

namespace ctr {

// One Galois orbit of branch points: all roots of one irreducible factor of
// the dx-numerator, handled symbolically through a single NumberField.  All
// series are in the shift variable w (z = alpha + w).  The normalized local
// parameter u satisfies u^2 = (x - a)/c2 and u = w + O(w^2), so that the
// paper's parameter is zeta = sqrt(c2) * u without ever extending the field;
// formulas using zeta-jets carry explicit powers of c2 instead.
struct BranchGroup {
    FieldPtr field;          // null when the factor is linear (rational alpha)
    Poly<Rat> modulus;       // monic irreducible factor of the dx-numerator
    NFElem alpha;            // the branch point (generator of the field)
    NFElem a;                // critical value x(alpha)
    NFElem c2;               // (x - a) = c2 w^2 (1 + ...)
    Series<NFElem> t;        // x(alpha + w) - a
    Series<NFElem> u;        // normalized local parameter as a series in w
    Series<NFElem> w_of_u;   // reversion of u
    Series<NFElem> sigma;    // local involution: sigma(alpha + w) = alpha + sigma(w)
    Series<NFElem> y_w;      // y(alpha + w)
    Series<NFElem> y_u;      // y in the u parameter
    Series<NFElem> xp_w;     // x'(alpha + w) (dz-derivative)
};

struct InfinityPoint {
    bool at_z_infinity = false;
    std::optional<Rat> z0;   // finite rational preimage (unset for irrational)
    Poly<Rat> minimal;       // minimal polynomial of the preimage(s) if finite
    int ram = 1;             // ramification index = pole order of x
};

class SpectralCurve {
public:
    // build_curve: validates admission rules and populates branch data to the
    // requested series order.
    SpectralCurve(RatFunc<Rat> x, RatFunc<Rat> y, int order);

    const RatFunc<Rat>& x() const { return x_; }
    const RatFunc<Rat>& y() const { return y_; }
    const RatFunc<Rat>& xprime() const { return xp_; }
    int sheet_degree() const { return d_; }
    int order() const { return order_; }
    const std::vector<BranchGroup>& branch_groups() const { return groups_; }
    const std::vector<InfinityPoint>& infinities() const { return inf_; }
    const Poly<Rat>& dx_numerator() const { return dxnum_; }  // monic, all branch factors

    Rat base_point() const { return o_; }
    void set_base_point(const Rat& o);

    // Same curve rebuilt with a higher guaranteed series order.
    SpectralCurve with_order(int order) const {
        SpectralCurve c(x_, y_, order);
        c.set_base_point(o_);
        return c;
    }

    std::uint64_t fingerprint() const;

    // True when the curve has sheet degree 3 with three simple infinities at
    // rational (or z = infinity) preimages.
    bool has_cauchy_infinities() const;

private:
    bool is_regular_base(const Rat& o) const;

    RatFunc<Rat> x_, y_, xp_;
    int d_ = 0;
    int order_ = 0;
    Rat o_;
    Poly<Rat> dxnum_;
    std::vector<BranchGroup> groups_;
    std::vector<InfinityPoint> inf_;
};

// Local involution as a series in z - alpha (thin accessor over the group
// data, recomputed at the requested order if needed).
Series<NFElem> local_involution(const SpectralCurve& curve, const BranchGroup& g,
                                int order);

// Implicit plane equation E(X, Y), normalized monic in Y; variable ids:
// 0 = X, 1 = Y.
MultiPoly<Rat> implicit_equation(const SpectralCurve& curve);

}  // namespace ctr
