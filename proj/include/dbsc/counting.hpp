#pragma once

#include "dbsc/braid.hpp"
#include "dbsc/polynomial.hpp"

namespace dbsc {

// Transition weight P_i^{u,v} of the counting recursion:
//   q    if v = s_i u and l(s_i u) < l(u),
//   q-1  if v = u     and l(s_i u) > l(u),
//   1    if v = s_i u and l(s_i u) > l(u),
//   0    otherwise.
Polynomial stepWeight(const CartanData& cartan, int i, const WeylElement& u, const WeylElement& v);

struct CountResult {
    Polynomial f;         // point count of the decorated cell
    RationalFunction g;   // f / (q-1)^{2 r~}, in normal form
    int rTilde = 0;
    std::vector<int> wordUsed;  // the word of d b^o fed to the recursion
};

// Point-count polynomial of the cell for (b, d) via the forward dynamic
// program over Weyl-group states along the word d b^o, starting and ending
// at the identity, times (q-1)^{r~} for the terminal decoration.
CountResult countF(const CartanData& cartan, const BraidWord& b, const BraidWord& d);

// Independent brute-force oracle for type A over a small finite field:
// enumerates the two chains of complete flags in F_q^{r+1} from the fixed
// transverse left edge, requires the terminal pair transverse, and scales by
// (q-1)^r for the terminal decoration. Budget: r <= 2, q in {2,3,4}, total
// word length <= 5.
BigInt bruteForceF(int rank, const BraidWord& b, const BraidWord& d, int q);

// 1 - ord_{q=1}(g); reported as a conjectural component count.
long long componentLowerBound(const RationalFunction& g);

}  // namespace dbsc
