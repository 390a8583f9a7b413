#pragma once

#include <memory>
#include <vector>

#include "dbsc/diagram.hpp"
#include "dbsc/seed.hpp"

namespace dbsc::testing {

inline std::shared_ptr<const CartanData> cartanPtr(const std::string& name) {
    return std::make_shared<const CartanData>(CartanData::fromName(name));
}

inline Triangulation bottomTriangulation(const std::vector<int>& letters,
                                         const std::shared_ptr<const CartanData>& cartan) {
    return buildTriangulation(BraidWord{{}, cartan}, makeBraid(letters, cartan),
                              std::vector<TriSide>(letters.size(), TriSide::Bottom));
}

inline Seed fullSeedOfBottomWord(const std::vector<int>& letters,
                                 const std::shared_ptr<const CartanData>& cartan) {
    Triangulation t = bottomTriangulation(letters, cartan);
    return seedFromDiagram(makeStringDiagram(t, *cartan), *cartan);
}

// All words of the given length over letters 1..rank.
inline std::vector<std::vector<int>> allWords(int rank, int length) {
    std::vector<std::vector<int>> out{{}};
    for (int pos = 0; pos < length; ++pos) {
        std::vector<std::vector<int>> next;
        for (const auto& w : out)
            for (int letter = 1; letter <= rank; ++letter) {
                auto copy = w;
                copy.push_back(letter);
                next.push_back(std::move(copy));
            }
        out = std::move(next);
    }
    return out;
}

// Deterministic generator for property tests.
class Rng {
public:
    explicit Rng(unsigned long long seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}

    unsigned long long next() {
        state_ ^= state_ << 13;
        state_ ^= state_ >> 7;
        state_ ^= state_ << 17;
        return state_;
    }
    int below(int n) { return static_cast<int>(next() % static_cast<unsigned long long>(n)); }

private:
    unsigned long long state_;
};

}  // namespace dbsc::testing
