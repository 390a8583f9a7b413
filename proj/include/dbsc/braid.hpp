#pragma once

#include <memory>
#include <string>
#include <vector>

#include "dbsc/cartan.hpp"
#include "dbsc/weyl.hpp"

namespace dbsc {

// A positive braid word: 1-based simple-reflection indices over an attached
// Cartan datum. Immutable once built.
struct BraidWord {
    std::vector<int> letters;
    std::shared_ptr<const CartanData> cartan;

    size_t size() const { return letters.size(); }
    bool empty() const { return letters.empty(); }

    friend bool operator==(const BraidWord& a, const BraidWord& b) { return a.letters == b.letters; }
};

// Accepts whitespace- or comma-separated indices with optional "s" prefixes
// ("1 2 1", "s1,s2,s1"); the empty string parses to the empty word.
BraidWord parseBraid(const std::string& text, std::shared_ptr<const CartanData> cartan);

BraidWord makeBraid(std::vector<int> letters, std::shared_ptr<const CartanData> cartan);

// b = s_{i_1}...s_{i_p}  ->  b^o = s_{i_p}...s_{i_1}.
BraidWord reversed(const BraidWord& b);

BraidWord concat(const BraidWord& a, const BraidWord& b);

// Replaces the alternating subword of length m_ij starting at pos (0-based)
// by the alternation starting with the other letter. Errors when the subword
// does not alternate to the full braid exponent or when m_ij is infinite.
BraidWord applyBraidMove(const BraidWord& b, size_t pos);

enum class BraidEq { False, True, Undecided };

// Breadth-first search over the braid-move graph from a. True when b is
// reached, False when a's component is exhausted below the cap, Undecided
// when the cap on explored words is hit.
BraidEq braidsEqual(const BraidWord& a, const BraidWord& b, size_t nodeCap);

// Projection to the Weyl group: s_{i_1}...s_{i_n} via left multiplication.
WeylElement wordWeylElement(const BraidWord& b);

}  // namespace dbsc
