#include "dbsc/braid.hpp"

#include <deque>
#include <unordered_set>

namespace dbsc {

namespace {

std::string wordKey(const std::vector<int>& letters) {
    std::string s;
    for (int v : letters) {
        s += std::to_string(v);
        s += ',';
    }
    return s;
}

}  // namespace

BraidWord makeBraid(std::vector<int> letters, std::shared_ptr<const CartanData> cartan) {
    require(cartan != nullptr, "braid word requires Cartan data");
    for (int v : letters)
        require(v >= 1 && v <= cartan->rank, "index out of range: " + std::to_string(v));
    return BraidWord{std::move(letters), std::move(cartan)};
}

BraidWord parseBraid(const std::string& text, std::shared_ptr<const CartanData> cartan) {
    std::vector<int> letters;
    std::string token;
    auto flush = [&]() {
        if (token.empty()) return;
        std::string digits = token;
        if (digits[0] == 's' || digits[0] == 'S') digits.erase(0, 1);
        size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(digits, &used);
        } catch (const std::exception&) {
            fail("not a valid braid letter: " + token);
        }
        require(used == digits.size() && !digits.empty(), "not a valid braid letter: " + token);
        letters.push_back(value);
        token.clear();
    };
    for (char ch : text) {
        if (ch == ' ' || ch == '\t' || ch == '\n' || ch == ',')
            flush();
        else
            token += ch;
    }
    flush();
    return makeBraid(std::move(letters), std::move(cartan));
}

BraidWord reversed(const BraidWord& b) {
    std::vector<int> out(b.letters.rbegin(), b.letters.rend());
    return BraidWord{std::move(out), b.cartan};
}

BraidWord concat(const BraidWord& a, const BraidWord& b) {
    std::vector<int> out = a.letters;
    out.insert(out.end(), b.letters.begin(), b.letters.end());
    return BraidWord{std::move(out), a.cartan ? a.cartan : b.cartan};
}

BraidWord applyBraidMove(const BraidWord& b, size_t pos) {
    require(pos + 1 < b.size(), "braid move position out of range");
    int x = b.letters[pos], y = b.letters[pos + 1];
    require(x != y, "braid move requires two distinct letters");
    int m = braidExponent(*b.cartan, x, y);
    require(m != kInfiniteBraidExponent, "infinite braid exponent");
    require(pos + static_cast<size_t>(m) <= b.size(), "word too short for the braid relation");
    for (int k = 0; k < m; ++k)
        require(b.letters[pos + k] == (k % 2 == 0 ? x : y), "subword does not alternate");
    BraidWord out = b;
    for (int k = 0; k < m; ++k) out.letters[pos + k] = (k % 2 == 0 ? y : x);
    return out;
}

BraidEq braidsEqual(const BraidWord& a, const BraidWord& b, size_t nodeCap) {
    if (a.size() != b.size()) return BraidEq::False;
    if (a.letters == b.letters) return BraidEq::True;
    std::unordered_set<std::string> seen;
    std::deque<std::vector<int>> frontier;
    seen.insert(wordKey(a.letters));
    frontier.push_back(a.letters);
    const CartanData& cartan = *a.cartan;
    while (!frontier.empty()) {
        std::vector<int> cur = std::move(frontier.front());
        frontier.pop_front();
        for (size_t pos = 0; pos + 1 < cur.size(); ++pos) {
            int x = cur[pos], y = cur[pos + 1];
            if (x == y) continue;
            int m = braidExponent(cartan, x, y);
            if (m == kInfiniteBraidExponent || pos + static_cast<size_t>(m) > cur.size()) continue;
            bool alternates = true;
            for (int k = 0; k < m && alternates; ++k) alternates = cur[pos + k] == (k % 2 == 0 ? x : y);
            if (!alternates) continue;
            std::vector<int> next = cur;
            for (int k = 0; k < m; ++k) next[pos + k] = (k % 2 == 0 ? y : x);
            if (next == b.letters) return BraidEq::True;
            if (seen.insert(wordKey(next)).second) {
                if (seen.size() > nodeCap) return BraidEq::Undecided;
                frontier.push_back(std::move(next));
            }
        }
    }
    return BraidEq::False;
}

WeylElement wordWeylElement(const BraidWord& b) {
    WeylElement w = WeylElement::identity(*b.cartan);
    for (size_t k = b.size(); k-- > 0;) w = w.leftMultiplied(*b.cartan, b.letters[k]);
    return w;
}

}  // namespace dbsc
