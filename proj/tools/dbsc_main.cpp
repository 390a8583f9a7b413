#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <mutex>
#include <thread>

#include "dbsc/json_io.hpp"

namespace {

using namespace dbsc;

std::shared_ptr<const CartanData> resolveCartan(const std::string& type, const std::string& cartanFile) {
    require(type.empty() != cartanFile.empty(), "give exactly one of --type and --cartan");
    if (!type.empty()) return std::make_shared<const CartanData>(CartanData::fromName(type));
    std::ifstream in(cartanFile);
    require(static_cast<bool>(in), "cannot open " + cartanFile);
    Json j = Json::parse(in);
    return std::make_shared<const CartanData>(cartanFromJson(j));
}

Triangulation triangulationFor(const std::shared_ptr<const CartanData>& cartan, const std::string& top,
                               const std::string& bottom, const std::string& pattern) {
    BraidWord topWord = parseBraid(top, cartan);
    BraidWord bottomWord = parseBraid(bottom, cartan);
    std::vector<TriSide> sides;
    if (pattern.empty())
        // Default: all top triangles first is not canonical; use bottom-first
        // order matching the d b^o reading (bottom letters then top letters).
        sides = parsePattern(std::string(bottomWord.size(), 'B') + std::string(topWord.size(), 'T'));
    else
        sides = parsePattern(pattern);
    return buildTriangulation(std::move(topWord), std::move(bottomWord), std::move(sides));
}

void printSeed(const Seed& seed, bool asJson) {
    if (asJson) {
        std::cout << toJson(seed).dump(2) << "\n";
        return;
    }
    std::cout << "vertices (" << seed.size() << "):";
    for (int i = 0; i < seed.size(); ++i)
        std::cout << " " << seed.vertices[i] << (seed.frozen[i] ? "*" : "") << "[d=" << seed.d[i] << "]";
    std::cout << "\n  (* = frozen)\nepsilon:\n";
    for (int a = 0; a < seed.size(); ++a) {
        std::cout << "  " << seed.vertices[a] << ":";
        for (int b = 0; b < seed.size(); ++b) std::cout << " " << seed.eps.at(a, b).str();
        std::cout << "\n";
    }
}

void printCount(const CountResult& r, bool asJson) {
    if (asJson) {
        std::cout << toJson(r).dump(2) << "\n";
        return;
    }
    std::cout << "f = " << r.f.strDescending() << "\n";
    std::cout << "  = " << r.f.strAscending() << "\n";
    std::cout << "g = " << r.g.str() << "\n";
    std::cout << "conjectural component count = " << componentLowerBound(r.g) << "\n";
}

std::string joinSteps(const std::vector<std::string>& steps) {
    std::string s;
    for (size_t i = 0; i < steps.size(); ++i) s += (i ? "," : "") + steps[i];
    return s;
}

struct Instance {
    std::string type, cartanFile, top, bottom;
};

std::vector<Instance> readInstances(const std::string& path) {
    std::ifstream in(path);
    require(static_cast<bool>(in), "cannot open " + path);
    Json j = Json::parse(in);
    require(j.is_array(), "instance file must hold a JSON array");
    std::vector<Instance> out;
    for (const auto& item : j) {
        Instance inst;
        if (item.contains("type")) inst.type = item.at("type").get<std::string>();
        if (item.contains("cartan")) inst.cartanFile = item.at("cartan").get<std::string>();
        if (item.contains("top")) inst.top = item.at("top").get<std::string>();
        if (item.contains("bottom")) inst.bottom = item.at("bottom").get<std::string>();
        out.push_back(std::move(inst));
    }
    return out;
}

// Runs fn over the instances on `jobs` threads; output lines are printed in
// input order once all workers finish.
void runBatch(const std::vector<Instance>& instances, int jobs,
              const std::function<std::string(const Instance&)>& fn) {
    std::vector<std::string> lines(instances.size());
    std::mutex nextLock;
    size_t next = 0;
    auto worker = [&]() {
        for (;;) {
            size_t mine;
            {
                std::lock_guard<std::mutex> hold(nextLock);
                if (next >= instances.size()) return;
                mine = next++;
            }
            try {
                lines[mine] = fn(instances[mine]);
            } catch (const std::exception& ex) {
                lines[mine] = std::string("error: ") + ex.what();
            }
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < std::max(1, jobs); ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    for (const auto& line : lines) std::cout << line << "\n";
}

int runCli(int argc, char** argv) {
    CLI::App app{"Exact engines for the cluster combinatorics of double Bott-Samelson cells"};
    app.require_subcommand(1);

    std::string type, cartanFile, top, bottom, pattern, word, seedFile, scriptText;
    std::string instancesFile, leftType, aWord, bWord;
    bool asJson = false, permuted = false;
    int maxPower = 64, rightRank = 1, jobs = 1, qValue = 2;
    long long cap = 100000;

    // Exactly one Cartan source, enforced at parse time.
    auto addCartanOpts = [&](CLI::App* cmd, bool required = true) {
        auto* group = cmd->add_option_group("cartan");
        group->add_option("--type", type, "Cartan type label (A1..A9, B2..B4, C3, D4, G2, F4)");
        group->add_option("--cartan", cartanFile, "custom Cartan JSON file");
        if (required)
            group->require_option(1);
        else
            group->require_option(0, 1);
    };

    auto* seedCmd = app.add_subcommand("seed", "print the seed of a triangulation");
    addCartanOpts(seedCmd);
    seedCmd->add_option("--top", top, "top braid word");
    seedCmd->add_option("--bottom", bottom, "bottom braid word");
    seedCmd->add_option("--pattern", pattern, "triangle pattern, e.g. TBTB");
    seedCmd->add_flag("--json", asJson);

    auto* mutateCmd = app.add_subcommand("mutate", "apply a mutation script to a seed file");
    mutateCmd->add_option("--seed", seedFile, "seed JSON file")->required();
    mutateCmd->add_option("--script", scriptText, "comma-separated vertex ids")->required();
    mutateCmd->add_flag("--json", asJson);

    auto* mgsCmd = app.add_subcommand("mgs", "maximal green sequence for a bottom word");
    addCartanOpts(mgsCmd);
    mgsCmd->add_option("--word", word, "braid word")->required();
    mgsCmd->add_flag("--json", asJson);

    auto* dtCheckCmd = app.add_subcommand("dt-check", "verify the DT script (c = -id criterion)");
    addCartanOpts(dtCheckCmd);
    dtCheckCmd->add_option("--top", top, "braid word b");
    dtCheckCmd->add_option("--bottom", bottom, "braid word d");
    dtCheckCmd->add_flag("--json", asJson);

    auto* dtOrderCmd = app.add_subcommand("dt-order", "order of the DT transformation");
    addCartanOpts(dtOrderCmd, /*required=*/false);
    dtOrderCmd->add_option("--top", top, "braid word b");
    dtOrderCmd->add_option("--bottom", bottom, "braid word d");
    dtOrderCmd->add_option("--max", maxPower, "power cap (default 64)");
    dtOrderCmd->add_option("--instances", instancesFile, "JSON file with a batch of instances");
    dtOrderCmd->add_option("--jobs", jobs, "worker threads for --instances");

    auto* zaCmd = app.add_subcommand("za", "Zamolodchikov order of a square product with A_n");
    zaCmd->add_option("--left", leftType, "left Dynkin type label")->required();
    zaCmd->add_option("--right-rank", rightRank, "rank n of the right factor A_n")->required();
    zaCmd->add_option("--max", maxPower, "power cap (default: the h+n+1 bound)");
    zaCmd->add_flag("--permuted", permuted, "also report the least power trivial up to a seed automorphism");

    auto* countCmd = app.add_subcommand("count", "point-count polynomials f and g");
    addCartanOpts(countCmd, /*required=*/false);
    countCmd->add_option("--top", top, "braid word b");
    countCmd->add_option("--bottom", bottom, "braid word d");
    countCmd->add_flag("--json", asJson);
    countCmd->add_option("--instances", instancesFile, "JSON file with a batch of instances");
    countCmd->add_option("--jobs", jobs, "worker threads for --instances");

    auto* oracleCmd = app.add_subcommand("oracle", "brute-force count over F_q with DP cross-check");
    oracleCmd->add_option("--type", type, "A1 or A2")->required();
    oracleCmd->add_option("--top", top, "braid word b");
    oracleCmd->add_option("--bottom", bottom, "braid word d");
    oracleCmd->add_option("--q", qValue, "field size (2, 3, or 4)")->required();

    auto* braidEqCmd = app.add_subcommand("braid-eq", "bounded braid-word equality search");
    addCartanOpts(braidEqCmd);
    braidEqCmd->add_option("--a", aWord, "first word")->required();
    braidEqCmd->add_option("--b", bWord, "second word")->required();
    braidEqCmd->add_option("--cap", cap, "explored-node cap");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        std::cout << app.help();
        return 0;
    }

    if (seedCmd->parsed()) {
        auto cartan = resolveCartan(type, cartanFile);
        Triangulation t = triangulationFor(cartan, top, bottom, pattern);
        printSeed(seedFromDiagram(makeStringDiagram(t, *cartan), *cartan), asJson);
    } else if (mutateCmd->parsed()) {
        std::ifstream in(seedFile);
        require(static_cast<bool>(in), "cannot open " + seedFile);
        Seed seed = seedFromJson(Json::parse(in));
        MutationScript script;
        std::string token;
        for (char ch : scriptText + ",") {
            if (ch == ',') {
                if (!token.empty()) script.steps.push_back(token);
                token.clear();
            } else if (ch != ' ') {
                token += ch;
            }
        }
        printSeed(applyScript(seed, script), asJson);
    } else if (mgsCmd->parsed()) {
        auto cartan = resolveCartan(type, cartanFile);
        BraidWord w = parseBraid(word, cartan);
        require(!w.empty(), "word must be nonempty");
        MutationScript script = maximalGreenSequence(w);
        FramedSeed f(bottomWordSeed(w));
        Json trace = Json::array();
        std::vector<std::string> traceLines;
        for (const auto& step : script.steps) {
            std::string colors;
            for (const auto& v : f.inner().vertices) {
                if (f.inner().isFrozen(v)) continue;
                colors += f.color(v) == VertexColor::Green ? 'g' : 'r';
            }
            traceLines.push_back(colors + "  mutate " + step);
            trace.push_back(Json{{"colors", colors}, {"mutate", step}});
            f.mutate(step);
        }
        std::string finalColors;
        for (const auto& v : f.inner().vertices)
            if (!f.inner().isFrozen(v)) finalColors += f.color(v) == VertexColor::Green ? 'g' : 'r';
        if (asJson) {
            std::cout << Json{{"script", script.steps}, {"trace", trace}, {"final", finalColors}}.dump(2)
                      << "\n";
        } else {
            std::cout << "script " << joinSteps(script.steps) << "\n";
            for (const auto& line : traceLines) std::cout << line << "\n";
            std::cout << finalColors << "  final\n";
        }
    } else if (dtCheckCmd->parsed()) {
        auto cartan = resolveCartan(type, cartanFile);
        DtScript ds = dtScript(parseBraid(top, cartan), parseBraid(bottom, cartan));
        if (asJson)
            std::cout << dtScriptToJson(ds).dump(2) << "\n";
        else
            std::cout << "DT script verified (c = -P_sigma, post-sigma c = -id), " << ds.script.steps.size()
                      << " mutations\nscript " << joinSteps(ds.script.steps) << "\n";
    } else if (dtOrderCmd->parsed()) {
        auto runOne = [&](const Instance& inst) {
            auto cartan = resolveCartan(inst.type, inst.cartanFile);
            DtScript ds = dtScript(parseBraid(inst.top, cartan), parseBraid(inst.bottom, cartan));
            auto order = dtOrder(ds, maxPower);
            std::string head = "(" + inst.top + " ; " + inst.bottom + ") DT order ";
            return head + (order ? std::to_string(*order) : "not found within " + std::to_string(maxPower));
        };
        if (!instancesFile.empty()) {
            runBatch(readInstances(instancesFile), jobs, runOne);
        } else {
            std::cout << runOne(Instance{type, cartanFile, top, bottom}) << "\n";
        }
    } else if (zaCmd->parsed()) {
        BipartiteDynkin left = bipartiteDynkin(CartanData::fromName(leftType));
        BipartiteDynkin right = bipartiteDynkin(CartanData::fromName("A" + std::to_string(rightRank)));
        SquareProduct sp = squareProduct(left, right);
        int bound = coxeterNumber(left.cartan) + rightRank + 1;
        int capPower = zaCmd->count("--max") ? maxPower : bound;
        auto order = zaOrder(sp, capPower);
        std::cout << "Za order = " << (order ? std::to_string(*order) : "> " + std::to_string(capPower))
                  << " (bound " << bound << ")\n";
        if (permuted) {
            auto p = zaOrderUpToPermutation(sp, capPower);
            if (p)
                std::cout << "trivial up to a seed automorphism at power " << p->power << "\n";
            else
                std::cout << "no permuted triviality within " << capPower << "\n";
        }
    } else if (countCmd->parsed()) {
        auto runOne = [&](const Instance& inst) {
            auto cartan = resolveCartan(inst.type, inst.cartanFile);
            CountResult r = countF(*cartan, parseBraid(inst.top, cartan), parseBraid(inst.bottom, cartan));
            return "(" + inst.top + " ; " + inst.bottom + ") g = " + r.g.str();
        };
        if (!instancesFile.empty()) {
            runBatch(readInstances(instancesFile), jobs, runOne);
        } else {
            auto cartan = resolveCartan(type, cartanFile);
            printCount(countF(*cartan, parseBraid(top, cartan), parseBraid(bottom, cartan)), asJson);
        }
    } else if (oracleCmd->parsed()) {
        require(type == "A1" || type == "A2", "oracle supports types A1 and A2");
        auto cartan = std::make_shared<const CartanData>(CartanData::fromName(type));
        BraidWord b = parseBraid(top, cartan), d = parseBraid(bottom, cartan);
        BigInt raw = bruteForceF(cartan->rank, b, d, qValue);
        CountResult r = countF(*cartan, b, d);
        BigInt dp = r.f.eval(qValue);
        std::cout << "brute force: " << raw.str() << "\n";
        std::cout << "DP f(" << qValue << ") = " << dp.str() << "\n";
        std::cout << (raw == dp ? "agreement" : "MISMATCH") << "\n";
        require(raw == dp, "oracle disagrees with the DP");
    } else if (braidEqCmd->parsed()) {
        auto cartan = resolveCartan(type, cartanFile);
        BraidEq verdict = braidsEqual(parseBraid(aWord, cartan), parseBraid(bWord, cartan),
                                      static_cast<size_t>(cap));
        std::cout << (verdict == BraidEq::True ? "true" : verdict == BraidEq::False ? "false" : "undecided")
                  << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return runCli(argc, argv);
    } catch (const CLI::ParseError& ex) {
        std::cerr << ex.what() << "\n";
        return 2;
    } catch (const std::exception& ex) {
        std::cerr << ex.what() << "\n";
        return 1;
    }
}
