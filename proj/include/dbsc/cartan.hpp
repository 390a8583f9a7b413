#pragma once

#include <string>
#include <vector>

#include "dbsc/error.hpp"

namespace dbsc {

// Symmetrizable generalized Cartan matrix with minimal symmetrizer and an
// optional corank (extra torus levels beyond the rank). All simple-reflection
// indices in the public API are 1-based, matching braid-letter conventions;
// storage is 0-based.
//
// Convention: cij(i,j) = <alpha_i^vee, alpha_j>. For B2 the orientation is
// fixed as C(1,2) = -2, C(2,1) = -1 (node 1 long, D = [2,1]); for G2 it is
// C(1,2) = -3, C(2,1) = -1 (D = [3,1]).
struct CartanData {
    int rank = 0;
    int corank = 0;
    std::vector<std::vector<int>> C;  // rank x rank
    std::vector<int> D;               // minimal symmetrizer, gcd 1
    bool typeA = false;               // structurally an A_rank matrix; enables the permutation representation

    int levels() const { return rank + corank; }

    int cij(int i, int j) const { return C[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)]; }
    int di(int i) const { return D[static_cast<size_t>(i - 1)]; }
    // Multiplier for a string on a given level: D_i below the rank, 1 above.
    int levelMultiplier(int level) const { return level <= rank ? di(level) : 1; }

    void validate() const;

    // Recognized labels: A1..A9, B2..B4, C3, D4, G2, F4.
    static CartanData fromName(const std::string& name);
    static CartanData fromMatrix(std::vector<std::vector<int>> C, std::vector<int> D, int corank);
};

// Braid exponent m_ij: 2, 3, 4, 6 according to C_ij*C_ji = 0, 1, 2, 3, or
// kInfiniteBraidExponent when the product is >= 4. Errors on i == j.
inline constexpr int kInfiniteBraidExponent = 0;
int braidExponent(const CartanData& cartan, int i, int j);

}  // namespace dbsc
