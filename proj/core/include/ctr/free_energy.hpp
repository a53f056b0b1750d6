#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ctr/cauchy.hpp"
#include "ctr/recursion.hpp"
#include "ctr/report.hpp"
#include "ctr/spectral_curve.hpp"

namespace ctr {

// Exact value of the form q0 + sum_i q_i ln(r_i) with positive rational
// arguments.  add_log canonicalizes: negative arguments are replaced by their
// absolute value (all evaluations in this library are of real regularized
// integrals where only |.| survives), arguments are split into prime powers
// by trial division so multiplicatively dependent terms merge, r = 1 drops.
struct LogValue {
    Rat q0;
    std::vector<std::pair<Rat, Rat>> logs;  // (q_i, r_i), r_i > 1, sorted

    LogValue() = default;
    explicit LogValue(Rat v) : q0(std::move(v)) {}

    void add_log(const Rat& c, const Rat& r);

    LogValue& operator+=(const LogValue& o);
    friend LogValue operator+(LogValue a, const LogValue& b) { return a += b; }
    friend LogValue operator-(const LogValue& a, const LogValue& b) {
        return a + b.scaled(Rat(-1));
    }
    LogValue scaled(const Rat& k) const;
    friend bool operator==(const LogValue& a, const LogValue& b) {
        return a.q0 == b.q0 && a.logs == b.logs;
    }
    bool is_rational() const { return logs.empty(); }
    double to_double() const;
    std::string str() const;
};

// Primitive of y dx with an explicit log ledger:
//   Psi(z) = rational(z) + sum_i c_i ( ln(z - r_i) - ln(o - r_i) ),
// rational(o) = 0.  The log offsets at o are transcendental constants carried
// symbolically; every downstream use (branch-point residues, regularized
// integral differences) is independent of them.
struct PsiPrimitive {
    RatFunc<Rat> rational;
    std::vector<std::pair<Rat, Rat>> logs;  // (coeff, root): coeff * ln(z - root)
    Rat base;                               // o

    // Numeric evaluation of Psi(z) (real parts; |.| inside the logs).
    double eval(double z) const;
};

// The antiderivative of y dx normalized at the base point (default: the
// curve's).  The rational part is exact; simple poles of y dx produce log
// terms.  Throws Error when y dx has irreducible higher-degree denominator
// factors carrying residues (outside the supported class).
PsiPrimitive psi(const SpectralCurve& curve, std::optional<Rat> o = std::nullopt);

// One row of the moduli table: either a weighted-residue recipe (potential
// time t_j^{(k)}) or a regularized integral between two infinity points
// (total charge T, eta^{(k)}).
enum class DirKind { potential, total_charge, eta };
struct ModuliDirection {
    DirKind kind = DirKind::total_charge;
    int k = 0;  // side 1 or 2 (potential, eta)
    int j = 0;  // power of x (potential)

    static ModuliDirection potential_time(int k, int j) { return {DirKind::potential, k, j}; }
    static ModuliDirection total_charge() { return {DirKind::total_charge, 0, 0}; }
    static ModuliDirection eta(int k) { return {DirKind::eta, k, 0}; }
    std::string str() const;
};

// Indices into curve.infinities(): i0 is the point where y stays bounded,
// i1/i2 the two others in listed order.  Requires the Cauchy shape (three
// simple infinities, exactly one with bounded y); RamifiedInfinity otherwise.
struct InfinityLabels {
    int i0 = -1, i1 = -1, i2 = -1;
};
InfinityLabels classify_infinities(const SpectralCurve& curve);

// H applied in the last variable of phi: minus the sum over branch points of
// Res phi * Psi, folded to Q.  The branch-point residues of phi must vanish
// (ResidueObstruction otherwise) -- this is what makes the result independent
// of the primitive's normalization.  The unstable (n,h) = (2,0) input is the
// one case with a non-branch pole; there the diagonal residue gives the
// closed form H omega_2^(0) = -y dx.
MultiDifferential h_applied(const SpectralCurve& curve, const MultiDifferential& phi);

// H composed with the residue recursion for omega_{n+1}^(h), evaluated
// without materializing the (n+1)-variable correlator: the recursion kernel's
// dS factor is replaced by (Psi(q) - Psi(sigma q))/2 under the residue.
// Returns the n-variable value of H omega_{n+1}^(h) (variables 0..n-1).
MultiRat<Rat> h_omega(const SpectralCurve& curve, int n, int h,
                      CorrelatorCache* cache = nullptr,
                      SplittingRule rule = SplittingRule::full, int jobs = 1);

// F^(h) = (1/(2-2h)) Sum Res Psi omega_1^(h) for h >= 2.
Rat free_energy_h(const SpectralCurve& curve, int h, CorrelatorCache* cache = nullptr);

// Dilaton identity (2-n-2h) omega_n^(h) = H omega_{n+1}^(h), checked exactly
// for 2h+n-2 > 0.  The rule parameter is the negative-control hook: under the
// literal splitting both sides are computed with the restricted sum and the
// identity must fail.
CheckReport dilaton_check(const SpectralCurve& curve, int n, int h,
                          CorrelatorCache* cache = nullptr,
                          SplittingRule rule = SplittingRule::full, int jobs = 1);

// J-operator row applied to the rational differential phi dz: weighted
// residues at the infinities for potential directions, regularized integrals
// between infinity points (polynomial-in-x and ln x singular parts
// subtracted) for T and eta directions.
LogValue j_apply(const SpectralCurve& curve, const ModuliDirection& dir,
                 const RatFunc<Rat>& phi);

// J_a(B(., p)) as an exact rational differential in the spectator p (var of
// the returned RatFunc).
RatFunc<Rat> j_apply_bergmann(const SpectralCurve& curve, const ModuliDirection& dir);

// y dx = Sum_a t_a J_a(B(., p)) over the extracted model, as an exact
// identity of rational differentials.
CheckReport ydx_decomposition_check(const SpectralCurve& curve, const ModelData& model);

// Planar free energy 2 F^(0) = Sum_a t_a J_a(y dx), assembled from the model
// data (the t_{-1} directions enter through mu^(nu) = (-1)^nu times the
// regularized integral from infinity_0 to infinity_nu).
LogValue free_energy_0(const SpectralCurve& curve, const ModelData& model);

// The gradient of F^(1) along one moduli direction, computed two independent
// ways: via -J_a(omega_1^(1)) and via the tau-function assembly from the
// branch-point jets; agree is the exact comparison.
struct F1Gradient {
    Rat via_omega;
    Rat via_tau;
    bool agree = false;
};
F1Gradient f1_gradient(const SpectralCurve& curve, const ModuliDirection& dir,
                       CorrelatorCache* cache = nullptr);

// Homogeneity of F^(h): under y -> kappa y the value scales by
// kappa^(2-2h), exactly.
CheckReport homogeneity_check(const SpectralCurve& curve, int h, const Rat& kappa);

}  // namespace ctr
