#include "dbsc/dt.hpp"

#include <numeric>

namespace dbsc {

Seed bottomWordSeed(const BraidWord& word) {
    Triangulation t = buildTriangulation(BraidWord{{}, word.cartan}, word,
                                         std::vector<TriSide>(word.size(), TriSide::Bottom));
    return unfrozenPart(seedFromDiagram(makeStringDiagram(t, *word.cartan), *word.cartan));
}

MutationScript maximalGreenSequence(const BraidWord& word) {
    MutationScript script;
    size_t n = word.size();
    for (size_t k = 0; k < n; ++k) {
        int tk = 0;
        for (size_t l = k + 1; l < n; ++l)
            if (word.letters[l] == word.letters[k]) ++tk;
        for (int j = 1; j <= tk; ++j) script.steps.push_back(StringId{word.letters[k], j}.str());
    }
    return script;
}

DtScript dtScript(const BraidWord& b, const BraidWord& d) {
    BraidWord w = concat(d, reversed(b));
    require(!w.empty(), "d b^o must be nonempty");
    Seed initial = bottomWordSeed(w);
    MutationScript script = maximalGreenSequence(w);

    // Per-level reversal on closed strings: (i, j) -> (i, t_i + 1 - j).
    std::map<int, int> closedPerLevel;
    for (const auto& name : initial.vertices) {
        StringId s = StringId::parse(name);
        closedPerLevel[s.level] = std::max(closedPerLevel[s.level], s.ord);
    }
    for (const auto& name : initial.vertices) {
        StringId s = StringId::parse(name);
        script.relabel[name] = StringId{s.level, closedPerLevel[s.level] + 1 - s.ord}.str();
    }

    // Self-verification: c = -P_sigma before the relabeling, c = -id after,
    // and sigma carries the final seed back to the initial one.
    FramedSeed f(initial);
    f.applySteps(script.steps);
    MatQ c = f.cMatrix();
    int n = initial.size();
    for (int a = 0; a < n; ++a) {
        int target = initial.indexOf(script.relabel.at(initial.vertices[a]));
        for (int bcol = 0; bcol < n; ++bcol)
            require(c.at(a, bcol) == Rational(bcol == target ? -1 : 0),
                    "DT verification failed: c-matrix is not -P_sigma");
    }
    f.relabel(script.relabel);
    require(f.cMatrix() == -MatQ::identity(n), "DT verification failed: post-sigma c-matrix is not -id");
    require(f.baseEps() == initial.eps, "DT verification failed: sigma does not restore the seed");
    return DtScript{std::move(initial), std::move(script)};
}

std::optional<int> dtOrder(const DtScript& ds, int maxPower) {
    FramedSeed f(ds.initial);
    for (int k = 1; k <= maxPower; ++k) {
        f.applySteps(ds.script.steps);
        f.relabel(ds.script.relabel);
        if (f.cMatrixIsIdentity()) {
            require(f.baseEps() == ds.initial.eps, "trivial c-matrix with a changed seed");
            return k;
        }
    }
    return std::nullopt;
}

BipartiteDynkin bipartiteDynkin(const CartanData& cartan) {
    std::vector<int> color(cartan.rank, 0);
    for (int start = 1; start <= cartan.rank; ++start) {
        if (color[start - 1] != 0) continue;
        color[start - 1] = 1;
        std::vector<int> stack{start};
        while (!stack.empty()) {
            int i = stack.back();
            stack.pop_back();
            for (int j = 1; j <= cartan.rank; ++j) {
                if (j == i || cartan.cij(i, j) == 0) continue;
                if (color[j - 1] == 0) {
                    color[j - 1] = -color[i - 1];
                    stack.push_back(j);
                } else {
                    require(color[j - 1] == -color[i - 1], "coloring not bipartite");
                }
            }
        }
    }
    return BipartiteDynkin{cartan, std::move(color)};
}

SquareProduct squareProduct(const BipartiteDynkin& left, const BipartiteDynkin& right) {
    const CartanData& L = left.cartan;
    const CartanData& R = right.cartan;
    SquareProduct out;
    Seed& seed = out.seed;
    auto name = [](int i, int ip) { return std::to_string(i) + ":" + std::to_string(ip); };

    long long g = 0;
    for (int i = 1; i <= L.rank; ++i)
        for (int ip = 1; ip <= R.rank; ++ip) g = std::gcd(g, static_cast<long long>(L.di(i)) * R.di(ip));
    for (int i = 1; i <= L.rank; ++i)
        for (int ip = 1; ip <= R.rank; ++ip) {
            seed.vertices.push_back(name(i, ip));
            seed.frozen.push_back(0);
            seed.d.push_back(static_cast<long long>(L.di(i)) * R.di(ip) / g);
            if (left.colorOf(i) * right.colorOf(ip) == 1)
                out.black.push_back(seed.vertices.back());
            else
                out.white.push_back(seed.vertices.back());
        }
    int n = seed.size();
    seed.eps = MatQ(n, n);
    // Factor exchange matrices eps_ab = c(a) C_ba; the product couples equal
    // second (resp. first) components with a -c(i') (resp. c(i)) twist.
    auto epsL = [&](int i, int j) { return i == j ? 0 : left.colorOf(i) * L.cij(j, i); };
    auto epsR = [&](int ip, int jp) { return ip == jp ? 0 : right.colorOf(ip) * R.cij(jp, ip); };
    int row = 0;
    for (int i = 1; i <= L.rank; ++i)
        for (int ip = 1; ip <= R.rank; ++ip, ++row) {
            int col = 0;
            for (int j = 1; j <= L.rank; ++j)
                for (int jp = 1; jp <= R.rank; ++jp, ++col) {
                    if (ip == jp && i != j)
                        seed.eps.at(row, col) = static_cast<long long>(-right.colorOf(ip)) * epsL(i, j);
                    else if (i == j && ip != jp)
                        seed.eps.at(row, col) = static_cast<long long>(left.colorOf(i)) * epsR(ip, jp);
                }
        }
    seed.validate();
    return out;
}

MutationScript zamolodchikovTau(const SquareProduct& sp) {
    auto assertDisconnected = [&](const std::vector<std::string>& cls) {
        for (const auto& a : cls)
            for (const auto& b : cls)
                require(sp.seed.eps.at(sp.seed.indexOf(a), sp.seed.indexOf(b)).isZero(),
                        "same-colored vertices are adjacent; coloring bug");
    };
    assertDisconnected(sp.black);
    assertDisconnected(sp.white);
    MutationScript script;
    script.steps = sp.black;
    script.steps.insert(script.steps.end(), sp.white.begin(), sp.white.end());
    return script;
}

std::optional<int> zaOrder(const SquareProduct& sp, int maxPower) {
    MutationScript tau = zamolodchikovTau(sp);
    FramedSeed f(sp.seed);
    for (int k = 1; k <= maxPower; ++k) {
        f.applySteps(tau.steps);
        require(f.baseEps() == sp.seed.eps, "tau does not preserve the square-product seed");
        if (f.cMatrixIsIdentity()) return k;
    }
    return std::nullopt;
}

std::optional<PermutedOrder> zaOrderUpToPermutation(const SquareProduct& sp, int maxPower) {
    MutationScript tau = zamolodchikovTau(sp);
    FramedSeed f(sp.seed);
    int n = sp.seed.size();
    for (int k = 1; k <= maxPower; ++k) {
        f.applySteps(tau.steps);
        MatQ c = f.cMatrix();
        std::map<std::string, std::string> sigma;
        bool isPerm = true;
        for (int a = 0; a < n && isPerm; ++a) {
            int ones = 0, target = -1;
            for (int b = 0; b < n; ++b) {
                if (c.at(a, b) == Rational(1)) {
                    ++ones;
                    target = b;
                } else if (!c.at(a, b).isZero()) {
                    isPerm = false;
                }
            }
            isPerm &= ones == 1;
            if (isPerm) sigma[sp.seed.vertices[a]] = sp.seed.vertices[target];
        }
        if (isPerm && seedIsomorphic(sp.seed, sp.seed, sigma)) return PermutedOrder{k, std::move(sigma)};
    }
    return std::nullopt;
}

std::pair<BraidWord, BraidWord> squareProductBraids(const BipartiteDynkin& delta, int n) {
    std::vector<int> blacks, whites;
    for (int i = 1; i <= delta.cartan.rank; ++i)
        (delta.colorOf(i) == 1 ? blacks : whites).push_back(i);
    auto cartan = std::make_shared<const CartanData>(delta.cartan);
    std::vector<int> p, q;
    for (int f = 0; f < n + 1; ++f) {
        const std::vector<int>& pf = f % 2 == 0 ? whites : blacks;
        const std::vector<int>& qf = f % 2 == 0 ? blacks : whites;
        p.insert(p.end(), pf.begin(), pf.end());
        q.insert(q.end(), qf.begin(), qf.end());
    }
    return {makeBraid(std::move(p), cartan), makeBraid(std::move(q), cartan)};
}

}  // namespace dbsc
