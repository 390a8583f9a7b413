#pragma once

#include <map>
#include <string>

#include "dbsc/diagram.hpp"

namespace dbsc {

// Exact coordinate values attached to seed vertices; every vertex (frozen and
// unfrozen) carries a nonzero rational.
using CoordAssignment = std::map<std::string, Rational>;

// Cluster Poisson mutation at an unfrozen vertex c:
//   X'_c = 1/X_c,   X'_a = X_a X_c^{[eps_ac]+} (1 + X_c)^{-eps_ac}  (a != c).
// Errors when X_c = -1 (pole) or a fractional exponent would be needed.
CoordAssignment xMutated(const CoordAssignment& x, const Seed& s, const std::string& c);

// Cluster K2 mutation at c:
//   A'_c = A_c^{-1} (prod_b A_b^{[-eps_cb]+}) (1 + prod_b A_b^{eps_cb});
// other values unchanged. Errors when the exchange binomial vanishes.
CoordAssignment aMutated(const CoordAssignment& a, const Seed& s, const std::string& c);

// Ensemble map on unfrozen vertices: X_c = prod_a A_a^{eps_ca}.
CoordAssignment pMap(const CoordAssignment& a, const Seed& s);

enum class ReflectionSide { Left, Right };

// Frozen-variable action of the reflection on level i: the boundary frozen X
// on level i is inverted and the matching boundary frozen X on every other
// level j is rescaled by X_i^{-C_ij}; unfrozen values are untouched. The
// action is an involution.
CoordAssignment reflectionFrozenAction(const CoordAssignment& x, const StringDiagram& sd,
                                       const CartanData& cartan, int level, ReflectionSide side);

enum class LocalCase { A2, B2, G2 };

struct VerifyReport {
    int trials = 0;
    int poleResamples = 0;
    // per coordinate label, X side and A side separately
    std::map<std::string, int> xMismatches;
    std::map<std::string, int> aMismatches;

    bool allMatch() const {
        for (const auto& [k, v] : xMismatches)
            if (v) return false;
        for (const auto& [k, v] : aMismatches)
            if (v) return false;
        return true;
    }
};

// Builds the local string-diagram seed of the braid-move picture for the
// case, samples positive rational coordinates (numerators and denominators
// uniform in [1,97], deterministic in rngSeed), runs the move's mutation
// script on both coordinate systems, and compares every resulting value
// against the closed formulas (the B2/G2 cases via their fixed
// F-polynomials with the monomial substitution X_k = prod_l A_l^{eps_kl}).
VerifyReport verifyBraidMoveFormulas(LocalCase localCase, int trials, unsigned long long rngSeed);

// Flagged extra case: the node swap (-i, i) -> (i, -i) on one level. The
// local seed is rebuilt from the two-triangle trapezoid with the same letter
// on both bases; the fourth coordinate follows X'_d = X_d (1 + X_b)^{-C_ij}.
VerifyReport verifyNodeSwapFormulas(const CartanData& cartan, int level, int trials,
                                    unsigned long long rngSeed);

}  // namespace dbsc
