#include "dbsc/diagram.hpp"

#include <algorithm>

namespace dbsc {

std::vector<TriSide> parsePattern(const std::string& text) {
    std::vector<TriSide> out;
    for (char ch : text) {
        if (ch == ' ') continue;
        if (ch == 'T' || ch == 't')
            out.push_back(TriSide::Top);
        else if (ch == 'B' || ch == 'b')
            out.push_back(TriSide::Bottom);
        else
            fail(std::string("bad pattern symbol: ") + ch);
    }
    return out;
}

std::string patternString(const std::vector<TriSide>& pattern) {
    std::string s;
    for (TriSide p : pattern) s += static_cast<char>(p);
    return s;
}

int Triangulation::letterOf(size_t k) const {
    size_t seen = 0;
    for (size_t j = 0; j < k; ++j)
        if (pattern[j] == pattern[k]) ++seen;
    return pattern[k] == TriSide::Top ? top.letters[seen] : bottom.letters[seen];
}

Triangulation buildTriangulation(BraidWord top, BraidWord bottom, std::vector<TriSide> pattern) {
    size_t tops = 0;
    for (TriSide p : pattern)
        if (p == TriSide::Top) ++tops;
    require(tops == top.size() && pattern.size() - tops == bottom.size(), "Wrong Triangulation!");
    return Triangulation{std::move(top), std::move(bottom), std::move(pattern)};
}

StringId StringId::parse(const std::string& text) {
    auto colon = text.find(':');
    require(colon != std::string::npos, "bad string id: " + text);
    try {
        return StringId{std::stoi(text.substr(0, colon)), std::stoi(text.substr(colon + 1))};
    } catch (const std::exception&) {
        fail("bad string id: " + text);
    }
}

std::vector<StringId> StringDiagram::allStrings() const {
    std::vector<StringId> out;
    for (int level = 1; level <= levels; ++level)
        for (int ord = 0; ord < stringCount(level); ++ord) out.push_back({level, ord});
    return out;
}

int StringDiagram::stringAt(int level, int triangle) const {
    const auto& tris = levelNodeTris[level - 1];
    int ord = 0;
    for (int t : tris) {
        require(t != triangle, "string lookup hit a node");
        if (t < triangle) ++ord;
    }
    return ord;
}

StringDiagram makeStringDiagram(const Triangulation& t, const CartanData& cartan) {
    StringDiagram sd;
    sd.levels = cartan.levels();
    sd.levelNodeTris.assign(sd.levels, {});
    sd.levelNodeSigns.assign(sd.levels, {});
    size_t topSeen = 0, bottomSeen = 0;
    for (size_t k = 0; k < t.triangleCount(); ++k) {
        int letter, sign;
        if (t.pattern[k] == TriSide::Top) {
            letter = t.top.letters[topSeen++];
            sign = -1;
        } else {
            letter = t.bottom.letters[bottomSeen++];
            sign = +1;
        }
        require(letter >= 1 && letter <= cartan.rank, "letter outside the Cartan rank");
        sd.nodes.push_back({static_cast<int>(k), letter, sign});
        sd.levelNodeTris[letter - 1].push_back(static_cast<int>(k));
        sd.levelNodeSigns[letter - 1].push_back(sign);
    }
    return sd;
}

Seed seedFromDiagram(const StringDiagram& sd, const CartanData& cartan) {
    Seed seed;
    std::map<StringId, int> index;
    for (const StringId& s : sd.allStrings()) {
        index[s] = seed.size();
        seed.vertices.push_back(s.str());
        seed.frozen.push_back(sd.isClosed(s) ? 0 : 1);
        seed.d.push_back(cartan.levelMultiplier(s.level));
    }
    seed.eps = MatQ(seed.size(), seed.size());

    for (const DiagramNode& node : sd.nodes) {
        int i = node.level;
        int ordBefore = 0;
        for (int t : sd.levelNodeTris[i - 1])
            if (t < node.triangle) ++ordBefore;
        int a = index[{i, ordBefore}];      // left flank
        int b = index[{i, ordBefore + 1}];  // right flank
        Rational s(node.sign);
        seed.eps.at(a, b) += -s;
        seed.eps.at(b, a) += s;
        for (int j = 1; j <= sd.levels; ++j) {
            if (j == i) continue;
            int cji = (j <= cartan.rank) ? cartan.cij(j, i) : 0;
            int cij = (j <= cartan.rank) ? cartan.cij(i, j) : 0;
            if (cji == 0 && cij == 0) continue;
            int c = index[{j, sd.stringAt(j, node.triangle)}];
            seed.eps.at(a, c) += -s * Rational(cji, 2);
            seed.eps.at(b, c) += s * Rational(cji, 2);
            seed.eps.at(c, a) += s * Rational(cij, 2);
            seed.eps.at(c, b) += -s * Rational(cij, 2);
        }
    }
    seed.validate();
    return seed;
}

namespace {

// Triangle indices (pattern positions) of the side's letters pos..pos+m-1.
std::vector<int> blockTriangles(const Triangulation& t, BaseSide side, size_t pos, size_t m) {
    TriSide want = side == BaseSide::Top ? TriSide::Top : TriSide::Bottom;
    std::vector<int> out;
    size_t seen = 0;
    for (size_t k = 0; k < t.pattern.size() && out.size() < m; ++k) {
        if (t.pattern[k] != want) continue;
        if (seen >= pos) out.push_back(static_cast<int>(k));
        ++seen;
    }
    require(out.size() == m, "braid move block exceeds the base word");
    return out;
}

const std::vector<int>& baseLetters(const Triangulation& t, BaseSide side) {
    return side == BaseSide::Top ? t.top.letters : t.bottom.letters;
}

// Nodes on `level` strictly left of triangle index `tri`.
int nodesBefore(const StringDiagram& sd, int level, int tri) {
    int n = 0;
    for (int t : sd.levelNodeTris[level - 1])
        if (t < tri) ++n;
    return n;
}

}  // namespace

DiagramMove flipDiagonal(const Triangulation& t, size_t k) {
    require(k + 1 < t.triangleCount(), "flip position out of range");
    require(t.pattern[k] != t.pattern[k + 1], "no flippable quadrilateral at this position");
    int letterLeft = t.letterOf(k);
    int letterRight = t.letterOf(k + 1);

    Triangulation flipped = t;
    std::swap(flipped.pattern[k], flipped.pattern[k + 1]);

    MutationScript script;
    if (letterLeft == letterRight) {
        // The two adjacent nodes on this level switch; mutate the closed
        // string between them.
        StringDiagram sd = makeStringDiagram(t, *t.bottom.cartan);
        int ord = nodesBefore(sd, letterLeft, static_cast<int>(k)) + 1;
        script.steps.push_back(StringId{letterLeft, ord}.str());
    }
    return DiagramMove{std::move(flipped), std::move(script)};
}

DiagramMove braidMoveOnBase(const Triangulation& t, BaseSide side, size_t pos) {
    const CartanData& cartan = *t.bottom.cartan;
    const std::vector<int>& word = baseLetters(t, side);
    require(pos + 1 < word.size(), "braid move position out of range");
    int x = word[pos], y = word[pos + 1];
    require(x != y, "braid move requires two distinct letters");
    int m = braidExponent(cartan, x, y);
    require(m != kInfiniteBraidExponent, "infinite braid exponent");
    require(pos + static_cast<size_t>(m) <= word.size(), "word too short for the braid relation");
    for (int k = 0; k < m; ++k)
        require(word[pos + k] == (k % 2 == 0 ? x : y), "subword does not alternate");

    std::vector<int> block = blockTriangles(t, side, pos, static_cast<size_t>(m));
    for (size_t k = 0; k + 1 < block.size(); ++k)
        require(block[k + 1] == block[k] + 1, "moved letters must occupy consecutive triangles");

    StringDiagram sd = makeStringDiagram(t, cartan);
    int px = nodesBefore(sd, x, block[0]);  // nodes on level x left of the block
    int py = nodesBefore(sd, y, block[0]);

    Triangulation moved = t;
    std::vector<int>& outWord = side == BaseSide::Top ? moved.top.letters : moved.bottom.letters;
    for (int k = 0; k < m; ++k) outWord[pos + k] = (k % 2 == 0 ? y : x);

    MutationScript script;
    auto id = [](int level, int ord) { return StringId{level, ord}.str(); };
    switch (m) {
        case 2:
            break;
        case 3: {
            script.steps.push_back(id(x, px + 1));
            // Ordinals shift: level x loses a node to level y.
            for (int ord = px + 1; ord < sd.stringCount(x); ++ord)
                script.relabel[id(x, ord)] = ord == px + 1 ? id(y, py + 1) : id(x, ord - 1);
            for (int ord = sd.stringCount(y) - 1; ord >= py + 1; --ord) script.relabel[id(y, ord)] = id(y, ord + 1);
            break;
        }
        case 4: {
            int longRoot = cartan.cij(x, y) == -2 ? x : y;
            int shortRoot = longRoot == x ? y : x;
            int pl = longRoot == x ? px : py;
            int ps = longRoot == x ? py : px;
            std::string a = id(longRoot, pl + 1), b = id(shortRoot, ps + 1);
            script.steps = {a, b, a};
            break;
        }
        case 6: {
            int longRoot = cartan.cij(x, y) == -3 ? x : y;
            int shortRoot = longRoot == x ? y : x;
            int pl = longRoot == x ? px : py;
            int ps = longRoot == x ? py : px;
            std::string a = id(longRoot, pl + 1), b = id(longRoot, pl + 2);
            std::string c = id(shortRoot, ps + 1), d = id(shortRoot, ps + 2);
            if (x == longRoot)
                script.steps = {d, c, b, a, d, b, d, c, a, d};
            else
                script.steps = {d, a, c, d, b, d, a, b, c, d};
            break;
        }
        default:
            fail("unsupported braid exponent");
    }
    return DiagramMove{std::move(moved), std::move(script)};
}

DiagramMove normalizeForBaseMove(const Triangulation& t, BaseSide side, size_t pos) {
    const std::vector<int>& word = baseLetters(t, side);
    require(pos + 1 < word.size(), "braid move position out of range");
    int x = word[pos], y = word[pos + 1];
    require(x != y, "braid move requires two distinct letters");
    int m = braidExponent(*t.bottom.cartan, x, y);
    require(m != kInfiniteBraidExponent, "infinite braid exponent");

    Triangulation cur = t;
    MutationScript total;
    // Pull each block triangle leftward until it sits next to its predecessor.
    for (int k = 1; k < m; ++k) {
        std::vector<int> block = blockTriangles(cur, side, pos, static_cast<size_t>(m));
        int target = block[k - 1] + 1;
        for (int at = block[k]; at > target; --at) {
            DiagramMove flip = flipDiagonal(cur, static_cast<size_t>(at - 1));
            cur = flip.result;
            total = composeScripts(total, flip.script);
        }
    }
    return DiagramMove{std::move(cur), std::move(total)};
}

Triangulation transposed(const Triangulation& t) {
    std::vector<TriSide> pattern(t.pattern.rbegin(), t.pattern.rend());
    for (TriSide& p : pattern) p = p == TriSide::Top ? TriSide::Bottom : TriSide::Top;
    return buildTriangulation(reversed(t.bottom), reversed(t.top), std::move(pattern));
}

std::map<std::string, std::string> transpositionBijection(const StringDiagram& sd) {
    std::map<std::string, std::string> out;
    for (const StringId& s : sd.allStrings())
        out[s.str()] = StringId{s.level, sd.nodeCount(s.level) - s.ord}.str();
    return out;
}

}  // namespace dbsc
