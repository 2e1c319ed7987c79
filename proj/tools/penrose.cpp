// Command-line driver: runs the verification stages, exports CSV reports,
// and renders the SVG figures.  Exit code 0 means every requested stage
// passed.

#include "CLI11.hpp"
#include "penrose/inflation.hpp"
#include "penrose/orbit.hpp"
#include "penrose/svg.hpp"
#include "penrose/torus4.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <map>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace penrose;
namespace fs = std::filesystem;

namespace {

struct Config {
    int window = 50;
    int samples = 10000;
    int rounds = 10;
    int jobs = 1;
    std::string out = "out";
};

struct Report {
    std::string stage;
    long checks = 0;
    std::vector<std::string> failures;
    double wallMs = 0;
    std::string csv;  // deterministic CSV body, written to <out>/<stage>.csv
    bool pass() const { return failures.empty(); }
};

// Lazily loaded shared assets, validated once.
struct Assets {
    PolygonSet partition;
    TypeTable table;
    PolygonSet dyn;
    std::vector<std::pair<long, long>> centers;
    std::vector<ShadowTriple> triples;

    Assets() : partition(loadPartition()), table(buildTypeTable(partition, 30)) {
        dyn = loadDynPolygons();
        centers = loadGeneCenters();
        triples = loadShadowTriples();
        if (partition.raw.size() != 27 || dyn.raw.size() != 75 || centers.size() != 75 ||
            triples.size() != 75) {
            throw DataError("asset counts must be 26/75/75/75");
        }
    }
};

Assets& assets() {
    static Assets a;
    return a;
}

std::string pointStr(long x, long y) {
    return "(" + std::to_string(x) + "," + std::to_string(y) + ")";
}

// ---------------------------------------------------------------------------
// Stages.
// ---------------------------------------------------------------------------

Report stagePinwheel(const Config& cfg) {
    Report rep{"verify-pinwheel"};
    auto& A = assets();
    (void)A;
    long half = std::max(1, cfg.samples / 2);

    auto checkOne = [&](const GoldenRat& x, int sign, const std::string& what) {
        RatPoint p{x, GoldenRat(sign)};
        try {
            if (pinwheel(p) != returnMap(p)) {
                rep.failures.push_back("pinwheel != return map at " + what);
            }
        } catch (const UndefinedPoint& e) {
            rep.failures.push_back("undefined dynamics at " + what + ": " + e.what());
        }
        ++rep.checks;
    };

    // Evenly spaced samples in (0, 10), endpoints excluded.
    for (long i = 1; i <= half; ++i) {
        checkOne(GoldenRat(10 * i, 0, half + 1), i % 2 ? 1 : -1,
                 "x=10*" + std::to_string(i) + "/" + std::to_string(half + 1));
    }
    // Return-coordinate values of lattice points, T in (0, 100).
    long got = 0;
    for (long R = 0; got < half; ++R) {
        auto tryPoint = [&](long x, long y) {
            if (got >= half) return;
            GoldenReal t = fundamentalT(x, y);
            if (t.sign() <= 0 || t >= GoldenReal(100)) return;
            ++got;
            checkOne(GoldenRat(t), ((x + y) % 2 + 2) % 2 ? -1 : 1, "T" + pointStr(x, y));
        };
        if (R == 0) {
            tryPoint(0, 0);
            continue;
        }
        for (long x = -R; x <= R; ++x) {
            tryPoint(x, -R);
            tryPoint(x, R);
        }
        for (long y = -R + 1; y <= R - 1; ++y) {
            tryPoint(-R, y);
            tryPoint(R, y);
        }
    }
    return rep;
}

Report stageClassification(const Config& cfg) {
    Report rep{"verify-classification"};
    auto& A = assets();
    for (long x = -cfg.window; x <= cfg.window; ++x) {
        for (long y = -cfg.window; y <= cfg.window; ++y) {
            if (!inHalfPlaneH(x, y)) continue;
            int type = classify(A.partition, x, y);
            std::vector<EdgeVec> edges;
            for (int eps : {+1, -1}) {
                Partner pr = partnerByReturnOrbit(x, y, eps);
                EdgeVec e{(int)(pr.point.first - x), (int)(pr.point.second - y)};
                if (e.first == 0 && e.second == 0) continue;
                if (std::find(edges.begin(), edges.end(), e) == edges.end()) edges.push_back(e);
            }
            std::sort(edges.begin(), edges.end());
            ++rep.checks;
            if (edges != A.table[type].edges) {
                rep.failures.push_back("edge pattern mismatch at " + pointStr(x, y) + " type " +
                                       std::to_string(type));
            }
        }
    }
    return rep;
}

Report stageEmbedding(const Config& cfg) {
    Report rep{"verify-embedding"};
    auto& A = assets();
    EmbeddingReport e = checkEmbedding(A.partition, A.table, cfg.window);
    rep.checks = e.verticesChecked;
    if (!e.forbiddenPairFree) rep.failures.push_back("forbidden adjacent type pair found");
    if (!e.crossingFree) rep.failures.push_back("two graph edges cross");
    return rep;
}

Report stageGenes(const Config&) {
    Report rep{"verify-genes"};
    auto& A = assets();
    for (int j = 0; j < 75; ++j) {
        ++rep.checks;
        DynPolyReport r = verifyDynPolygon(A.partition, A.table, A.dyn, A.centers, j);
        if (!r.ok()) {
            rep.failures.push_back("stored polygon " + std::to_string(j) +
                                   (r.verticesClosedOk ? "" : " fails closed vertex check") +
                                   (r.edgesOpenOk ? "" : " fails open edge check"));
            continue;
        }
        Itinerary it = itinerary(A.partition, A.table, A.centers[j], 3);
        GoldenPoint seed = psiLiftReduced(A.centers[j].first, A.centers[j].second);
        ConvexPolygon got = computeDynPolygon(A.partition, it, seed, &A.dyn.poly[j]);
        bool same = got.size() == A.dyn.poly[j].size();
        if (same) {
            std::size_t n = got.size(), off = n;
            for (std::size_t s = 0; s < n; ++s) {
                if (got[s] == A.dyn.poly[j][0]) off = s;
            }
            if (off == n) {
                same = false;
            } else {
                for (std::size_t i = 0; i < n && same; ++i) {
                    same = got[(off + i) % n] == A.dyn.poly[j][i];
                }
            }
        }
        if (!same) {
            rep.failures.push_back("recomputed polygon " + std::to_string(j) +
                                   " differs from the stored one");
        }
    }
    return rep;
}

Report stageShadowing(const Config&) {
    Report rep{"verify-shadowing"};
    auto& A = assets();
    std::ostringstream csv;
    csv << "gene,m,n,sheet,q\n";
    for (int j = 0; j < 75; ++j) {
        ++rep.checks;
        try {
            InflationMap g = findGamma(A.partition, A.table, A.dyn, A.centers, A.triples, j);
            csv << j << ',' << g.m << ',' << g.n << ',' << g.sheet << ',' << g.q() << '\n';
            ShadowReport r = verifyShadowing(A.partition, A.table, A.dyn, A.centers, A.triples, j);
            if (!r.ok()) {
                rep.failures.push_back(
                    "gene " + std::to_string(j) +
                    (r.containmentOk ? "" : ": similarity image leaves the shadow sequences") +
                    (r.endpointOk ? "" : ": endpoints further than 3 from the dilated core"));
            }
        } catch (const std::exception& e) {
            rep.failures.push_back("gene " + std::to_string(j) + ": " + e.what());
        }
    }
    rep.csv = csv.str();
    return rep;
}

Report stageCoherence(const Config&) {
    Report rep{"verify-coherence"};
    auto& A = assets();
    CoherenceReport r = verifyCoherence(A.partition, A.table, A.dyn, A.centers, A.triples, 1024);
    rep.checks = r.checked;
    if (!r.pairsOk) rep.failures.push_back("some shadow pair could not be matched exactly");
    if (!r.orderOk) rep.failures.push_back("shadow points out of order along the strand");
    const std::vector<std::pair<LatticePoint, LatticePoint>> expect{
        {{1, 1}, {3, 4}}, {{1, 2}, {3, 9}}, {{1, 3}, {3, 13}}, {{2, 4}, {8, 18}}};
    for (std::size_t i = 0; i < expect.size(); ++i) {
        if (i >= r.firstPairs.size() || r.firstPairs[i] != expect[i]) {
            rep.failures.push_back("leading pair " + std::to_string(i) + " differs");
        }
    }
    std::ostringstream csv;
    csv << "g_x,g_y,shadow_x,shadow_y\n";
    for (const auto& pr : r.firstPairs) {
        csv << pr.first.first << ',' << pr.first.second << ',' << pr.second.first << ','
            << pr.second.second << '\n';
    }
    rep.csv = csv.str();
    return rep;
}

Report stageCensus(const Config&) {
    Report rep{"census"};
    auto& A = assets();
    std::ostringstream csv;
    csv << "depth,direction,genes,extended\n";
    CensusResult base;
    bool first = true;
    for (int depth : {10, 13}) {
        for (int dir : {+1, -1}) {
            CensusResult r = geneCensus(A.partition, A.table, depth, dir);
            csv << depth << ',' << (dir > 0 ? "fwd" : "bwd") << ',' << r.genes.size() << ','
                << r.extended.size() << '\n';
            ++rep.checks;
            std::string where = " at depth " + std::to_string(depth) +
                                (dir > 0 ? " forward" : " backward");
            if (r.genes.size() != 75) {
                rep.failures.push_back("gene census is " + std::to_string(r.genes.size()) +
                                       where + " (expected 75)");
            }
            if (r.extended.size() != 89) {
                rep.failures.push_back("extended census is " + std::to_string(r.extended.size()) +
                                       where + " (expected 89)");
            }
            if (first) {
                base = r;
                first = false;
            } else if (r.genes != base.genes || r.extended != base.extended) {
                rep.failures.push_back("census type sets differ" + where);
            }
        }
    }
    rep.csv = csv.str();
    return rep;
}

Report stagePartition(const Config& cfg) {
    Report rep{"verify-partition"};
    auto& A = assets();
    PartitionReport r = verifyPartition(A.partition, A.table, cfg.rounds, cfg.jobs);
    rep.checks = r.tilesChecked;
    if (r.tilesOk != r.tilesChecked) {
        rep.failures.push_back(std::to_string(r.tilesChecked - r.tilesOk) +
                               " lifted tiles failed the itinerary check");
    }
    if (!r.componentGapOk) rep.failures.push_back("undefined-set component gap below bound");
    if (!r.stretchOk) rep.failures.push_back("sample gap exceeded the stretch bound");
    if (!r.adjacentPairsOk) rep.failures.push_back("adjacent tiles share a branch-edge pair");
    if (!r.displacementsOk) rep.failures.push_back("a return displacement left the edge table");
    return rep;
}

Report stageGap(const Config&) {
    Report rep{"gap-check"};
    auto& A = assets();
    auto bwd = traceGamma0(A.partition, A.table, 1 << 13, -1);
    auto fwd = traceGamma0(A.partition, A.table, 1 << 13, +1);
    std::vector<LatticePoint> both = bwd;
    both.insert(both.end(), fwd.begin(), fwd.end());
    GapReport r = gapCheck(A.partition, both, 2000);
    rep.checks = r.pointsChecked + r.type3Checked;
    if (!r.psiImagesClear) rep.failures.push_back("a sample image came within 1e-4 of the tile");
    if (!r.heightGapOk) rep.failures.push_back("a type-3 vertex has height in the gap range");
    if (!r.diagonalOk) rep.failures.push_back("the window image is not the tile diagonal");
    std::ostringstream csv;
    csv << "points,min_dist_sq_approx,type3,clear,height_gap_ok,diagonal_ok\n";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.3e", r.minDistSq.approx());
    csv << r.pointsChecked << ',' << buf << ',' << r.type3Checked << ',' << r.psiImagesClear
        << ',' << r.heightGapOk << ',' << r.diagonalOk << '\n';
    rep.csv = csv.str();
    return rep;
}

Report stageDescent(const Config&) {
    Report rep{"descent-check"};
    DescentReport r = descentCheck(100);
    rep.checks = r.pairsTested;
    if (r.survivors != 0) {
        rep.failures.push_back(std::to_string(r.survivors) +
                               " even ring points were not excluded");
    }
    std::ostringstream csv;
    csv << "pairs,window_hits,survivors,max_iterations\n"
        << r.pairsTested << ',' << r.windowHits << ',' << r.survivors << ',' << r.maxIterations
        << '\n';
    rep.csv = csv.str();
    return rep;
}

Report stageRising(const Config&) {
    Report rep{"rising-profile"};
    auto& A = assets();
    auto bwd = traceGamma0(A.partition, A.table, 1 << 14, -1);
    auto fwd = traceGamma0(A.partition, A.table, 1 << 14, +1);
    auto prof = risingProfile(bwd, fwd);
    rep.checks = (long)prof.size();

    // The forward strand must reach height 100.
    GoldenReal maxV;
    for (const auto& p : fwd) {
        GoldenReal v = heightV(p.first, p.second);
        if (v > maxV) maxV = v;
    }
    if (maxV < GoldenReal(100)) rep.failures.push_back("forward strand stays below height 100");

    // Heights separate strictly by the 2-adic valuation of the index.
    std::map<int, std::pair<GoldenReal, GoldenReal>> byNu;  // nu -> (min, max)
    for (const auto& e : prof) {
        auto it = byNu.find(e.nu);
        if (it == byNu.end()) {
            byNu.emplace(e.nu, std::make_pair(e.height, e.height));
        } else {
            if (e.height < it->second.first) it->second.first = e.height;
            if (e.height > it->second.second) it->second.second = e.height;
        }
    }
    int prevNu = -1;
    for (auto it = byNu.begin(); it != byNu.end(); ++it) {
        if (prevNu >= 0 && !(byNu[prevNu].second < it->second.first)) {
            rep.failures.push_back("heights at valuation " + std::to_string(it->first) +
                                   " do not dominate valuation " + std::to_string(prevNu));
        }
        prevNu = it->first;
    }

    std::ostringstream csv;
    csv << "n,nu,steps,height_approx,prefix_match\n";
    char buf[40];
    for (const auto& e : prof) {
        std::snprintf(buf, sizeof buf, "%.6f", e.height.approx());
        csv << e.n << ',' << e.nu << ',' << e.steps << ',' << buf << ',' << e.prefixMatch << '\n';
    }
    rep.csv = csv.str();
    return rep;
}

const std::vector<std::pair<std::string, Report (*)(const Config&)>> kStages{
    {"verify-pinwheel", stagePinwheel},
    {"verify-classification", stageClassification},
    {"verify-embedding", stageEmbedding},
    {"verify-genes", stageGenes},
    {"verify-shadowing", stageShadowing},
    {"verify-coherence", stageCoherence},
    {"census", stageCensus},
    {"verify-partition", stagePartition},
    {"gap-check", stageGap},
    {"descent-check", stageDescent},
    {"rising-profile", stageRising},
};

int runVerify(const std::string& stage, const Config& cfg) {
    std::vector<std::pair<std::string, Report (*)(const Config&)>> todo;
    for (const auto& s : kStages) {
        if (stage == "all" || stage == s.first) todo.push_back(s);
    }
    if (todo.empty()) {
        std::cerr << "unknown stage: " << stage << "\n";
        return 2;
    }
    fs::create_directories(cfg.out);
    bool allPass = true;
    for (const auto& s : todo) {
        auto t0 = std::chrono::steady_clock::now();
        Report rep = s.second(cfg);
        rep.wallMs = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                               t0)
                         .count();
        if (!rep.csv.empty()) {
            std::ofstream f(fs::path(cfg.out) / (rep.stage + ".csv"));
            f << rep.csv;
        }
        std::cout << (rep.pass() ? "[ PASS ] " : "[ FAIL ] ") << rep.stage
                  << "  checks=" << rep.checks << "  (" << (long)rep.wallMs << " ms)\n";
        for (std::size_t i = 0; i < rep.failures.size() && i < 8; ++i) {
            std::cout << "         " << rep.failures[i] << "\n";
        }
        if (rep.failures.size() > 8) {
            std::cout << "         ... and " << rep.failures.size() - 8 << " more\n";
        }
        allPass = allPass && rep.pass();
    }
    std::cout << (allPass ? "proof status: PASS\n" : "proof status: FAIL\n");
    return allPass ? 0 : 1;
}

int runTrace(int steps, const std::string& direction) {
    auto& A = assets();
    auto trace = traceGamma0(A.partition, A.table, steps, direction == "fwd" ? +1 : -1);
    std::cout << "step,x,y,type,T_approx,v_approx\n";
    char buf[80];
    for (std::size_t i = 0; i < trace.size(); ++i) {
        auto [x, y] = trace[i];
        std::snprintf(buf, sizeof buf, "%zu,%ld,%ld,%d,%.9f,%.9f", i, x, y,
                      classify(A.partition, x, y), fundamentalT(x, y).approx(),
                      heightV(x, y).approx());
        std::cout << buf << '\n';
    }
    return 0;
}

int runRender(const std::string& kind, const Config& cfg, int gene) {
    auto& A = assets();
    std::string svg;
    if (kind == "torus-partition") {
        svg = renderTorusPartition(A.partition);
    } else if (kind == "graph-window") {
        svg = renderGraphWindow(A.partition, A.table, std::min(cfg.window, 20));
    } else if (kind == "dynpoly-overlay") {
        svg = renderDynPolyOverlay(A.partition, A.dyn);
    } else if (kind == "gene-shadow") {
        svg = renderGeneShadow(A.partition, A.table, A.centers, A.triples, gene);
    } else {
        std::cerr << "unknown render kind: " << kind << "\n";
        return 2;
    }
    fs::create_directories(cfg.out);
    fs::path file = fs::path(cfg.out) / (kind + ".svg");
    std::ofstream(file) << svg;
    std::cout << "wrote " << file.string() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of the unbounded outer billiards orbits"};
    app.require_subcommand(1);

    Config cfg;
    std::string stage = "all", direction = "fwd", kind;
    int steps = 1024, gene = 0;

    auto* verify = app.add_subcommand("verify", "run verification stages");
    verify->add_option("stage", stage, "stage name or 'all'");
    verify->add_option("--window", cfg.window, "lattice window half-width");
    verify->add_option("--samples", cfg.samples, "sample count for the factorization check");
    verify->add_option("--rounds", cfg.rounds, "subdivision rounds for the tile sweep");
    verify->add_option("--jobs", cfg.jobs, "worker threads");
    verify->add_option("--out", cfg.out, "report directory");

    auto* trace = app.add_subcommand("trace", "print a strand trace as CSV");
    trace->add_option("--steps", steps, "number of steps")->required();
    trace->add_option("--direction", direction, "fwd or bwd")
        ->check(CLI::IsMember({"fwd", "bwd"}));

    auto* render = app.add_subcommand("render", "write an SVG figure");
    render->add_option("kind", kind,
                       "graph-window | torus-partition | dynpoly-overlay | gene-shadow")
        ->required();
    render->add_option("--window", cfg.window, "lattice window half-width");
    render->add_option("--gene", gene, "gene index for gene-shadow")->check(CLI::Range(0, 74));
    render->add_option("--out", cfg.out, "output directory");

    CLI11_PARSE(app, argc, argv);

    try {
        verifyManifest(dataDir());
        if (verify->parsed()) return runVerify(stage, cfg);
        if (trace->parsed()) return runTrace(steps, direction);
        if (render->parsed()) return runRender(kind, cfg, gene);
    } catch (const DataError& e) {
        std::cerr << "data error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
