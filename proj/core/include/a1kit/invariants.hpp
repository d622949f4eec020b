#pragma once

#include <map>

#include "a1kit/module.hpp"

namespace a1kit {

/// Dimension-per-degree table with finite support; zero entries are dropped.
using GradedDims = std::map<int, int>;

enum class MargolisOp { Q0, Q1 };

/// The differential of the Margolis homology at degree d. Q0 acts through
/// Sq1 (degree +1); Q1 (degree +3) is the composite Sq1 Sq2 + Sq2 Sq1, which
/// stays defined even where intermediate degrees leave the support.
GF2Matrix margolis_differential(const A1Module& m, MargolisOp which, int d);

/// Homology of the module with respect to Q0 or Q1. Vanishes on free
/// modules.
GradedDims margolis_homology(const A1Module& m, MargolisOp which);

/// The dims table, normalized.
GradedDims poincare_series(const A1Module& m);

/// Alternating sum of dimensions (the degreewise Euler characteristic).
int euler_characteristic(const A1Module& m);

}  // namespace a1kit
