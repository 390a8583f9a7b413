#include "dbsc/counting.hpp"

#include <map>
#include <unordered_map>

namespace dbsc {

Polynomial stepWeight(const CartanData& cartan, int i, const WeylElement& u, const WeylElement& v) {
    WeylElement siu = u.leftMultiplied(cartan, i);
    bool rises = u.lengthIncreasesLeft(cartan, i);
    if (v == siu) return rises ? Polynomial::constant(1) : Polynomial({0, 1});
    if (v == u && rises) return Polynomial({-1, 1});
    return Polynomial();
}

CountResult countF(const CartanData& cartan, const BraidWord& b, const BraidWord& d) {
    CountResult result;
    result.rTilde = cartan.levels();
    result.wordUsed = d.letters;
    for (size_t k = b.size(); k-- > 0;) result.wordUsed.push_back(b.letters[k]);

    // states: Weyl element -> accumulated weight, advanced letter by letter.
    struct State {
        WeylElement u;
        Polynomial weight;
    };
    std::unordered_map<std::string, State> states;
    WeylElement e = WeylElement::identity(cartan);
    states.emplace(e.key(), State{e, Polynomial::constant(1)});

    Polynomial qPoly({0, 1});
    Polynomial qMinusOne({-1, 1});
    for (int letter : result.wordUsed) {
        std::unordered_map<std::string, State> next;
        auto add = [&](const WeylElement& u, Polynomial w) {
            auto [it, fresh] = next.try_emplace(u.key(), State{u, Polynomial()});
            it->second.weight = fresh ? std::move(w) : it->second.weight + w;
        };
        for (auto& [key, st] : states) {
            WeylElement moved = st.u.leftMultiplied(cartan, letter);
            if (st.u.lengthIncreasesLeft(cartan, letter)) {
                add(st.u, st.weight * qMinusOne);
                add(moved, st.weight);
            } else {
                add(moved, st.weight * qPoly);
            }
        }
        states = std::move(next);
    }

    Polynomial atIdentity;
    auto it = states.find(e.key());
    if (it != states.end()) atIdentity = it->second.weight;
    result.f = atIdentity * Polynomial::qMinusOnePow(result.rTilde);
    result.g = dividePolyByQMinusOnePower(result.f, 2LL * result.rTilde);
    return result;
}

namespace {

// Arithmetic in F_q for q in {2, 3, 4}; q = 4 is F_2[x]/(x^2 + x + 1) with
// elements 0, 1, 2 = x, 3 = x + 1.
class Gf {
public:
    explicit Gf(int q) : q_(q) {
        require(q == 2 || q == 3 || q == 4, "unsupported field size");
    }

    int q() const { return q_; }

    int add(int a, int b) const { return q_ == 4 ? (a ^ b) : (a + b) % q_; }
    int neg(int a) const { return q_ == 4 ? a : (q_ - a) % q_; }
    int mul(int a, int b) const {
        if (q_ != 4) return (a * b) % q_;
        if (a == 0 || b == 0) return 0;
        static constexpr int table[3][3] = {{1, 2, 3}, {2, 3, 1}, {3, 1, 2}};
        return table[a - 1][b - 1];
    }
    int inv(int a) const {
        require(a != 0, "inverse of zero");
        for (int b = 1; b < q_; ++b)
            if (mul(a, b) == 1) return b;
        fail("field inverse not found");
    }

private:
    int q_;
};

using Vec = std::vector<int>;
using Basis = std::vector<Vec>;  // rows

// Reduced row echelon form; canonical representative of the row span.
Basis rref(const Gf& gf, Basis rows) {
    size_t n = rows.empty() ? 0 : rows[0].size();
    size_t head = 0;
    for (size_t col = 0; col < n && head < rows.size(); ++col) {
        size_t pivot = head;
        while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[head], rows[pivot]);
        int inv = gf.inv(rows[head][col]);
        for (size_t j = 0; j < n; ++j) rows[head][j] = gf.mul(rows[head][j], inv);
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r == head || rows[r][col] == 0) continue;
            int factor = rows[r][col];
            for (size_t j = 0; j < n; ++j)
                rows[r][j] = gf.add(rows[r][j], gf.neg(gf.mul(factor, rows[head][j])));
        }
        ++head;
    }
    rows.resize(head);
    return rows;
}

int rankOf(const Gf& gf, Basis rows) { return static_cast<int>(rref(gf, std::move(rows)).size()); }

std::string basisKey(const Basis& b) {
    std::string s;
    for (const Vec& row : b) {
        for (int v : row) s += static_cast<char>('0' + v);
        s += ';';
    }
    return s;
}

// A complete flag as the canonical bases of its proper subspaces (dims 1..n-1).
using Flag = std::vector<Basis>;

std::string flagKey(const Flag& f) {
    std::string s;
    for (const Basis& b : f) {
        s += basisKey(b);
        s += '|';
    }
    return s;
}

// Flags at Tits distance s_j from f: replace the dimension-j subspace by any
// other subspace nested between its neighbors.
std::vector<Flag> adjacentFlags(const Gf& gf, const Flag& f, int j, int n) {
    Basis below = j >= 2 ? f[j - 2] : Basis{};
    Basis above;
    if (j < n - 1) {
        above = f[j];
    } else {
        for (int k = 0; k < n; ++k) {
            Vec e(n, 0);
            e[k] = 1;
            above.push_back(e);
        }
    }
    // Two directions spanning above / below.
    std::vector<Vec> extra;
    Basis probe = below;
    int probeRank = rankOf(gf, probe);
    for (const Vec& v : above) {
        Basis trial = probe;
        trial.push_back(v);
        if (rankOf(gf, trial) > probeRank) {
            probe.push_back(v);
            ++probeRank;
            extra.push_back(v);
            if (extra.size() == 2) break;
        }
    }
    require(extra.size() == 2, "flag step: expected a rank-two quotient");

    std::vector<Flag> out;
    std::string current = basisKey(f[j - 1]);
    auto push = [&](const Vec& v) {
        Basis candidate = below;
        candidate.push_back(v);
        candidate = rref(gf, candidate);
        if (basisKey(candidate) == current) return;
        Flag g = f;
        g[j - 1] = std::move(candidate);
        out.push_back(std::move(g));
    };
    push(extra[1]);
    for (int t = 0; t < gf.q(); ++t) {
        Vec v(extra[0].size());
        for (size_t k = 0; k < v.size(); ++k) v[k] = gf.add(extra[0][k], gf.mul(t, extra[1][k]));
        push(v);
    }
    return out;
}

bool transverse(const Gf& gf, const Flag& a, const Flag& b, int n) {
    for (int i = 1; i <= n - 1; ++i) {
        Basis joined = a[i - 1];
        const Basis& other = b[n - i - 1];
        joined.insert(joined.end(), other.begin(), other.end());
        if (rankOf(gf, joined) != n) return false;
    }
    return true;
}

// Chain ends with multiplicity, starting from `start` and stepping by `word`.
std::map<std::string, std::pair<Flag, BigInt>> chainEnds(const Gf& gf, const Flag& start,
                                                         const std::vector<int>& word, int n) {
    std::map<std::string, std::pair<Flag, BigInt>> cur;
    cur[flagKey(start)] = {start, 1};
    for (int letter : word) {
        std::map<std::string, std::pair<Flag, BigInt>> next;
        for (auto& [key, entry] : cur)
            for (Flag& g : adjacentFlags(gf, entry.first, letter, n)) {
                auto it = next.try_emplace(flagKey(g), std::pair<Flag, BigInt>{g, 0}).first;
                it->second.second += entry.second;
            }
        cur = std::move(next);
    }
    return cur;
}

}  // namespace

BigInt bruteForceF(int rank, const BraidWord& b, const BraidWord& d, int q) {
    require(rank >= 1 && rank <= 2, "budget exceeded: oracle rank must be 1 or 2");
    require(q == 2 || q == 3 || q == 4, "budget exceeded: q must be 2, 3, or 4");
    require(b.size() + d.size() <= 5, "budget exceeded: total word length must be <= 5");
    for (int letter : b.letters) require(letter <= rank, "letter exceeds oracle rank");
    for (int letter : d.letters) require(letter <= rank, "letter exceeds oracle rank");

    Gf gf(q);
    int n = rank + 1;
    Flag standard, opposite;
    for (int dim = 1; dim <= n - 1; ++dim) {
        Basis s, o;
        for (int k = 0; k < dim; ++k) {
            Vec e(n, 0), eo(n, 0);
            e[k] = 1;
            eo[n - 1 - k] = 1;
            s.push_back(e);
            o.push_back(eo);
        }
        standard.push_back(rref(gf, s));
        opposite.push_back(rref(gf, o));
    }

    // Top-chain steps s_i change the dimension-i subspace. The bottom chain
    // lives on the opposite-Borel side, where the distance-s_j step changes
    // the subspace of complementary dimension n - j.
    std::vector<int> bottomDims;
    for (int letter : d.letters) bottomDims.push_back(n - letter);
    auto topEnds = chainEnds(gf, standard, b.letters, n);
    auto bottomEnds = chainEnds(gf, opposite, bottomDims, n);
    BigInt raw = 0;
    for (auto& [tk, tEntry] : topEnds)
        for (auto& [bk, bEntry] : bottomEnds)
            if (transverse(gf, tEntry.first, bEntry.first, n)) raw += tEntry.second * bEntry.second;

    BigInt torus = 1;
    for (int k = 0; k < rank; ++k) torus *= (q - 1);
    return raw * torus;
}

long long componentLowerBound(const RationalFunction& g) {
    require(!g.isZero(), "component bound of the zero function");
    return 1 - g.orderAtOne();
}

}  // namespace dbsc
