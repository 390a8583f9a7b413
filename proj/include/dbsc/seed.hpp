#pragma once

#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "dbsc/matrix.hpp"

namespace dbsc {

// An ordered list of mutations plus an optional terminal vertex relabeling.
// Steps name unfrozen vertices of the seed they are applied to at that point.
struct MutationScript {
    std::vector<std::string> steps;
    std::map<std::string, std::string> relabel;  // empty entries mean identity

    bool relabelIsIdentity() const {
        for (const auto& [from, to] : relabel)
            if (from != to) return false;
        return true;
    }
};

// Append `next` after `first`. Valid only when `first` has an identity
// relabeling (the flip scripts used for normalization all do).
MutationScript composeScripts(const MutationScript& first, const MutationScript& next);

// Seed: ordered vertex list, frozen subset, exchange matrix over Rational
// (integral outside frozen x frozen), positive integer multipliers.
struct Seed {
    std::vector<std::string> vertices;
    std::vector<char> frozen;      // parallel to vertices
    std::vector<long long> d;      // multipliers, parallel to vertices
    MatQ eps;                      // vertices x vertices

    int size() const { return static_cast<int>(vertices.size()); }
    int indexOf(const std::string& name) const;
    bool isFrozen(const std::string& name) const { return frozen[indexOf(name)] != 0; }

    // Checks eps * diag(d)^{-1} skew-symmetric and the integrality pattern.
    void validate() const;

    friend bool operator==(const Seed& a, const Seed& b) {
        return a.vertices == b.vertices && a.frozen == b.frozen && a.d == b.d && a.eps == b.eps;
    }
};

// Mutation at an unfrozen vertex c:
//   eps'_ab = -eps_ab if c in {a,b},
//             eps_ab + [eps_ac]+ [eps_cb]+ - [-eps_ac]+ [-eps_cb]+ otherwise.
Seed mutated(const Seed& s, const std::string& c);

// Applies steps in order, then the terminal relabeling.
Seed applyScript(const Seed& s, const MutationScript& script);

// Restriction to unfrozen vertices with multipliers rescaled to gcd 1.
Seed unfrozenPart(const Seed& s);

// Langlands dual: eps^vee_ab = -eps_ba, d^vee_a = lcm(d)/d_a.
Seed langlandsDual(const Seed& s);

// True iff sigma preserves the frozen set, the multipliers, and every eps
// entry. sigma must be total on s1's vertices.
bool seedIsomorphic(const Seed& s1, const Seed& s2, const std::map<std::string, std::string>& sigma);

enum class VertexColor { Green, Red };

// Seed with principal coefficients: one frozen auxiliary per unfrozen base
// vertex, exchange matrix [[eps, id], [-id, 0]]. Base vertex slots are fixed;
// relabelings move data between slots so that a slot always answers for the
// same vertex name. The upper-right block is the c-matrix of the mutations
// applied so far; row sign coherence is asserted after every mutation.
class FramedSeed {
public:
    explicit FramedSeed(const Seed& base);

    int baseSize() const { return n_; }
    const Seed& inner() const { return s_; }
    const Seed& initialBase() const { return base0_; }

    void mutate(const std::string& vertexName);
    void applySteps(const std::vector<std::string>& steps);

    // Relabel vertices by a bijection sigma on base vertex names: the data of
    // the vertex named v moves to the slot of sigma(v).
    void relabel(const std::map<std::string, std::string>& sigma);

    // Current base exchange matrix (the unfrozen block).
    MatQ baseEps() const;
    // Integer c-matrix (rows: base vertices, columns: auxiliaries).
    MatQ cMatrix() const;
    bool cMatrixIsIdentity() const { return cMatrix().isIdentity(); }

    VertexColor color(const std::string& vertexName) const;
    bool allRed() const;
    bool allGreen() const;

private:
    void assertRowSignCoherence() const;

    Seed s_;
    Seed base0_;
    int n_;
};

// c-matrix of a script run on a seed (framed with principal coefficients);
// the script's terminal relabeling is applied.
MatQ cMatrixOfScript(const Seed& base, const MutationScript& script);

// g-matrix via tropical duality: inverse transpose of the c-matrix of the
// same script run on the Langlands dual seed.
MatQ gMatrixOfScript(const Seed& base, const MutationScript& script);

}  // namespace dbsc
