#pragma once

#include <map>
#include <string>
#include <vector>

#include "dbsc/braid.hpp"
#include "dbsc/seed.hpp"

namespace dbsc {

// Which base carries a triangle's labeled edge. A Top triangle consumes the
// next letter of the top word and contributes a node -i; a Bottom triangle
// consumes the next bottom letter and contributes a node +i. This is the 0/1
// encoding of triangulations by orientation vectors.
enum class TriSide : char { Top = 'T', Bottom = 'B' };

std::vector<TriSide> parsePattern(const std::string& text);
std::string patternString(const std::vector<TriSide>& pattern);

struct Triangulation {
    BraidWord top;
    BraidWord bottom;
    std::vector<TriSide> pattern;  // one symbol per triangle, left to right

    size_t triangleCount() const { return pattern.size(); }
    // Letter consumed by triangle k.
    int letterOf(size_t k) const;
};

// Validates the symbol counts against the word lengths
// (error "Wrong Triangulation!" on mismatch).
Triangulation buildTriangulation(BraidWord top, BraidWord bottom, std::vector<TriSide> pattern);

// String identifier (level, ordinal): ordinal j means the (j+1)-th string on
// the level counting from the left. Rendered "level:ordinal".
struct StringId {
    int level = 0;
    int ord = 0;

    std::string str() const { return std::to_string(level) + ":" + std::to_string(ord); }
    static StringId parse(const std::string& text);
    friend bool operator==(const StringId& a, const StringId& b) { return a.level == b.level && a.ord == b.ord; }
    friend bool operator<(const StringId& a, const StringId& b) {
        return a.level != b.level ? a.level < b.level : a.ord < b.ord;
    }
};

struct DiagramNode {
    int triangle = 0;  // position in the triangulation
    int level = 0;     // 1..rank
    int sign = 0;      // +1 for bottom labels, -1 for top labels
};

// Levels with signed nodes cut into strings. Level i holds the nodes of all
// triangles labeled s_i, in triangle order; levels above the rank carry no
// nodes and exactly one open string.
struct StringDiagram {
    int levels = 0;                               // r~ = rank + corank
    std::vector<DiagramNode> nodes;               // triangle order
    std::vector<std::vector<int>> levelNodeTris;  // per level (1-based via helpers), ascending
    std::vector<std::vector<int>> levelNodeSigns;

    int nodeCount(int level) const { return static_cast<int>(levelNodeTris[level - 1].size()); }
    int stringCount(int level) const { return nodeCount(level) + 1; }
    bool isClosed(const StringId& s) const { return s.ord >= 1 && s.ord <= nodeCount(s.level) - 1; }
    std::vector<StringId> allStrings() const;

    // Ordinal of the string on `level` whose open triangle interval contains
    // triangle index t; errors if a node of that level sits at t.
    int stringAt(int level, int triangle) const;
};

StringDiagram makeStringDiagram(const Triangulation& t, const CartanData& cartan);

// Seed amalgamated from the node contributions: strings are vertices, closed
// strings unfrozen, d_a the level multiplier, and for every node n at level i
// with flanking strings a (left), b (right) and, per level j != i, the string
// c over n's triangle:
//   eps_ab += -s,            eps_ba += +s,
//   eps_ac += -s*C_ji/2,     eps_bc += +s*C_ji/2,
//   eps_ca += +s*C_ij/2,     eps_cb += -s*C_ij/2,
// where s is the node sign. Entries stay integral except possibly between
// two open strings; this is validated.
Seed seedFromDiagram(const StringDiagram& sd, const CartanData& cartan);

struct DiagramMove {
    Triangulation result;
    MutationScript script;
};

// Flips the diagonal shared by triangles k and k+1 (one Top, one Bottom).
// Equal letters mutate the closed string between the two nodes; distinct
// letters leave the seed unchanged.
DiagramMove flipDiagonal(const Triangulation& t, size_t k);

enum class BaseSide { Top, Bottom };

// Braid move on a base word at position pos. Requires the moved letters to
// occupy consecutive triangles of that base. Scripts follow the local
// pictures: [] for m=2; [a] for m=3 (a between the two nodes of the first
// letter's level); [a,b,a] for m=4 (a on the long-root level); for m=6 the
// ten-step sequence d,c,b,a,d,b,d,c,a,d when the subword starts with the
// long root, and its reversal d,a,c,d,b,d,a,b,c,d otherwise.
DiagramMove braidMoveOnBase(const Triangulation& t, BaseSide side, size_t pos);

// Flips diagonals until the triangles of the base letters pos..pos+m-1 are
// consecutive, so that braidMoveOnBase applies. The returned script carries
// the accumulated flip mutations (identity relabeling).
DiagramMove normalizeForBaseMove(const Triangulation& t, BaseSide side, size_t pos);

// 180-degree rotation: top'/bottom' are the reversed bottom/top words and the
// pattern is reversed with Top/Bottom exchanged.
Triangulation transposed(const Triangulation& t);

// Transposition bijection (i, j) -> (i, n_i - j) onto the strings of the
// transposed diagram; an involution and a seed isomorphism.
std::map<std::string, std::string> transpositionBijection(const StringDiagram& sd);

}  // namespace dbsc
