#pragma once

#include <map>
#include <utility>

#include "ctr/recursion.hpp"
#include "ctr/report.hpp"
#include "ctr/spectral_curve.hpp"

namespace ctr {

// Moduli data of a genus-zero Cauchy curve: the potential times, the total
// charge and the eta-shifts, read off from residues of y dx at the three
// points over x = infinity.  The supported class has no hard-edge log
// charges: y dx is regular over the fiber x = 0, so t_{-1}^{(k)} = 0 and
// eta^{(k)} = (2 t_{-1}^{(k)} + t_{-1}^{(3-k)})/3 = 0; the total charge is
// then determined by the infinity residues alone.
struct ModelData {
    std::map<std::pair<int, int>, Rat> times;  // (k in {1,2}, j >= 1) -> t_j^{(k)}
    Rat T;                                     // total charge
    Rat eta1, eta2;                            // eta^{(1)}, eta^{(2)}
    Rat tm1_1, tm1_2;                          // log charges t_{-1}^{(k)}
    Rat eps1, eps2;                            // filling fractions (-1)^k (T + eta^{(k)})

    Rat time(int k, int j) const {
        auto it = times.find({k, j});
        return it == times.end() ? Rat() : it->second;
    }
};

// Shape report for the cubic curve E(x,y) = y^3 - R(x) y - D(x): the y^2
// coefficient must vanish (equivalently the sheet sum of y), R may have a
// pole only at x = 0 of order <= 2 and D only at x = 0 of order <= 3.
struct CubicStructureReport : CheckReport {
    bool three_simple_infinities = false;
    bool y2_coefficient_vanishes = false;
    bool sheet_sum_vanishes = false;
    RatFunc<Rat> rhat;            // R(x)
    RatFunc<Rat> d;               // D(x)
    int rhat_pole_order = 0;      // pole order of R at x = 0
    int d_pole_order = 0;         // pole order of D at x = 0
};

// Eliminates z from (x(z), y(z)), normalizes the cubic and checks the Cauchy
// shape.  Throws NotCubic when the sheet degree is not 3; shape violations
// are reported, not thrown.
CubicStructureReport structure_check(const SpectralCurve& curve);

// Reads the model data off the curve: potential times from the residues of
// y dx / x^k at the two outer infinities, T and the eta's from the plain
// residues.  Requires three simple infinities (RamifiedInfinity otherwise)
// and y dx regular away from them (no hard-edge charges); the three infinity
// residues must sum to zero (ResidueInconsistency otherwise).
ModelData extract_model(const SpectralCurve& curve);

struct LoopEquationReport : CheckReport {
    int pole_order_at_zero = 0;   // pole order of S(x) at x = 0 (must be <= 2)
    int polynomial_degree = 0;    // degree of the polynomial part of S(x)
};

// Quadratic loop equation at order h: the sheet-symmetric combination
//   S(x) = Sum_k [ 2 y W_1^(h) - Sum_{m=1}^{h-1} W_1^(m) W_1^(h-m) - W_2^(h-1) ]
// with W_n = omega_n / dx...dx must be a rational function of x with poles
// confined to x = 0 of order <= 2.  The h = 1 case uses the regularized
// diagonal of omega_2^(0) - dx dx/(x-x')^2 in the z-uniformizer.
LoopEquationReport loop_equation_check(const SpectralCurve& curve, int h,
                                       CorrelatorCache* cache = nullptr);

// Builder input: x with three simple infinities (one of them at z = infinity
// where the y-ansatz stays bounded, two at finite rational poles of x where
// the ansatz may have poles).  depth raises the ansatz pole multiplicity
// beyond the minimal 1 when the minimal system is infeasible.
struct CauchyBuildSpec {
    RatFunc<Rat> x;
    Rat T = Rat(1);
    Rat eta1, eta2;   // only 0 is realizable without hard-edge poles
    int depth = 0;
};

// Solves the linear system {sheet sum of y = 0, Res ydx at the outer
// infinities = T + eta} over a rational y-ansatz and returns the admitted
// curve.  InfeasibleConstraints when no nonzero solution exists at any
// supported depth; DegenerateCurve when admission rejects the solution.
SpectralCurve build_cauchy_curve(const CauchyBuildSpec& spec, int order = 16);

// The committed fixture: x = z (z^2 + 5/3) / (z^2 - 1), whose dx-numerator
// splits into two rational quadratics (two branch groups, degree-2 fields).
RatFunc<Rat> cauchy_fixture_x();

// Exact sheet-sum identities of the kernel: Sum_i B(q^(i), p) =
// dx(q) dx(p) / (x(q) - x(p))^2 as a two-spectator rational identity, its
// one-sheet-removed corollary, and a wrong-normalization negative control.
CheckReport variation_identity_check(const SpectralCurve& curve);

}  // namespace ctr
