#pragma once

#include <optional>

#include "dbsc/diagram.hpp"

namespace dbsc {

// Unfrozen seed of the one-triangulation cell with all letters on the bottom
// base (the empty-top trapezoid is a triangle). Closed strings on level i are
// named "i:1".."i:t_i".
Seed bottomWordSeed(const BraidWord& word);

// The maximal green sequence L_1...L_n for a bottom word (i_1..i_n): L_k
// mutates (i_k,1),...,(i_k,t_k) where t_k counts later occurrences of i_k.
MutationScript maximalGreenSequence(const BraidWord& word);

// Donaldson-Thomas transformation data: the maximal green sequence for the
// word d b^o followed by the per-level reversal bijection
// (i, j) -> (i, t_i + 1 - j) on closed strings. Construction verifies
// c = -P_sigma, post-sigma c = -id, and that sigma restores the seed.
struct DtScript {
    Seed initial;
    MutationScript script;  // relabel field carries sigma
};

DtScript dtScript(const BraidWord& b, const BraidWord& d);

// Least k <= maxPower with identity c-matrix (and the relabeling absorbed),
// tracking DT^k with principal coefficients; nullopt when no such k exists
// within the bound.
std::optional<int> dtOrder(const DtScript& ds, int maxPower);

// Proper 2-coloring of a Dynkin diagram; +1 black, -1 white. Vertex 1 is
// black. Errors when the diagram admits no bipartite coloring.
struct BipartiteDynkin {
    CartanData cartan;
    std::vector<int> color;  // per vertex, +1 or -1

    int colorOf(int i) const { return color[static_cast<size_t>(i - 1)]; }
};

BipartiteDynkin bipartiteDynkin(const CartanData& cartan);

// Square product seed on I x I': vertices "i:i'", all unfrozen, exchange
// matrix from the two bipartite seeds (eps_ab = c(a) C_ba off-diagonal),
// multipliers D_i D'_i' rescaled to gcd 1. A product vertex is black when
// the two factor colors agree; the two classes are internally disconnected.
struct SquareProduct {
    Seed seed;
    std::vector<std::string> black;
    std::vector<std::string> white;
};

SquareProduct squareProduct(const BipartiteDynkin& left, const BipartiteDynkin& right);

// tau = tau_- o tau_+: all black vertices then all white (each class is
// pairwise non-adjacent, which is asserted). tau preserves the seed.
MutationScript zamolodchikovTau(const SquareProduct& sp);

// Least k <= maxPower with Za^k giving the identity c-matrix.
std::optional<int> zaOrder(const SquareProduct& sp, int maxPower);

// Least k <= maxPower such that the c-matrix of Za^k is a permutation matrix
// P_sigma for some seed automorphism sigma (reported alongside k).
struct PermutedOrder {
    int power;
    std::map<std::string, std::string> sigma;
};
std::optional<PermutedOrder> zaOrderUpToPermutation(const SquareProduct& sp, int maxPower);

// Alternating products b w b w ... / w b w b ... of the coloring's black and
// white lifts, n+1 factors each; the cell for this pair carries the square
// product quiver.
std::pair<BraidWord, BraidWord> squareProductBraids(const BipartiteDynkin& delta, int n);

}  // namespace dbsc
