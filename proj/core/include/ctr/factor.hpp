#pragma once

#include <utility>
#include <vector>

#include "ctr/poly.hpp"
#include "ctr/rational.hpp"

namespace ctr {

// Yun's algorithm: f = lc * prod g_i^i with the g_i squarefree, pairwise
// coprime and monic.  Returns the (g_i, i) pairs with nontrivial g_i.
std::vector<std::pair<Poly<Rat>, int>> squarefree_decomposition(const Poly<Rat>& f);

// Monic irreducible factors of f over Q with multiplicities (content dropped).
// Factors of the squarefree parts are located numerically and certified by
// exact division, so every returned factor is exact; intended for the
// moderate degrees arising from curve data.
std::vector<std::pair<Poly<Rat>, int>> factor_rationals(const Poly<Rat>& f);

// All roots of f in Q with multiplicities.
std::vector<std::pair<Rat, int>> rational_roots(const Poly<Rat>& f);

bool is_irreducible(const Poly<Rat>& f);

}  // namespace ctr
