// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one pass/fail line per criterion.  Exit status 0 iff all pass.
//
//   acceptance --cli <path to the singer binary> --data <fixtures dir>

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "singer/certify.hpp"
#include "singer/generator.hpp"
#include "singer/reference.hpp"

using namespace singer;
namespace fs = std::filesystem;

namespace {

std::string g_cli;
std::string g_data;
fs::path g_tmp;

struct CliResult {
    int exit_code = -1;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    CliResult r;
    FILE* pipe = popen((g_cli + " " + args + " 2>/dev/null").c_str(), "r");
    if (!pipe) return r;
    char buf[4096];
    while (size_t n = fread(buf, 1, sizeof buf, pipe)) r.out.append(buf, n);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct Corpus {
    std::vector<LabeledTriangulation> inputs;
    std::vector<Certificate> certs;
    int planted = 0;
    double sweep_seconds = 0;
};

GeneratorConfig corpus_config(int seed) {
    GeneratorConfig cfg;
    cfg.seed = static_cast<std::uint64_t>(seed);
    cfg.target_vertices = 8 + (seed * 37 + 11) % 53;  // 8..60
    cfg.plant3 = (seed % 5 == 0 && cfg.target_vertices >= 14) ? 1 : 0;
    cfg.plant4 = (seed % 3 == 0 && cfg.target_vertices >= 16) ? 1 : 0;
    return cfg;
}

template <typename F>
void walk(const LabeledTriangulation& L, const CertTree& t, F&& f) {
    f(L, t.node);
    if (const auto* split = std::get_if<NodeCircuitSplit>(&t.node)) {
        SplitResult s = split_along_circuit(L, split->circuit);
        walk(s.first, *split->left, f);
        walk(s.second, *split->right, f);
    }
}

int tree_depth(const CertTree& t) {
    if (const auto* split = std::get_if<NodeCircuitSplit>(&t.node))
        return 1 + std::max(tree_depth(*split->left), tree_depth(*split->right));
    return 1;
}

// ---- criteria ------------------------------------------------------------

bool criterion_soundness(Corpus& corpus, std::string& detail) {
    const auto t0 = std::chrono::steady_clock::now();
    for (int seed = 1; seed <= 200; ++seed) {
        GeneratorConfig cfg = corpus_config(seed);
        if (cfg.plant3 + cfg.plant4 > 0) ++corpus.planted;
        LabeledTriangulation L = generate(cfg);
        try {
            Certificate cert = certify(L);
            VerificationReport report = verify(L, cert);
            if (!report.accepted) {
                detail = "seed " + std::to_string(seed) + ": verification rejected (" +
                         report.failures.front().path + ": " + report.failures.front().reason + ")";
                return false;
            }
            corpus.inputs.push_back(std::move(L));
            corpus.certs.push_back(std::move(cert));
        } catch (const InternalContradiction& e) {
            detail = "seed " + std::to_string(seed) + ": internal contradiction: " + e.what();
            return false;
        }
    }
    corpus.sweep_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::ostringstream ss;
    ss.setf(std::ios::fixed);
    ss.precision(1);
    ss << "200 inputs, " << corpus.planted << " planted (need >= 50), " << corpus.sweep_seconds
       << "s (budget 60s)";
    detail = ss.str();
    return corpus.planted >= 50 && corpus.sweep_seconds < 60.0;
}

bool criterion_euler(const Corpus& corpus, std::string& detail) {
    int checked = 0;
    for (size_t i = 0; i < corpus.inputs.size(); ++i) {
        fs::path file = g_tmp / ("corpus-" + std::to_string(i) + ".json");
        std::ofstream(file) << canonical_document(corpus.inputs[i]) << "\n";
        CliResult r = run_cli("euler " + file.string());
        if (r.exit_code != 0 || r.out != "0/1\n") {
            detail = "corpus input " + std::to_string(i) + ": euler printed '" + r.out + "'";
            return false;
        }
        ++checked;
    }
    for (const char* name : {"octahedron", "icosahedron", "simplex_affine"}) {
        CliResult r = run_cli("euler " + (fs::path(g_data) / (std::string(name) + ".json")).string());
        if (r.exit_code != 0 || r.out != "0/1\n") {
            detail = std::string(name) + ": euler printed '" + r.out + "'";
            return false;
        }
        ++checked;
    }
    detail = std::to_string(checked) + " inputs, all exactly 0/1";
    return true;
}

bool criterion_named_fixtures(std::string& detail) {
    {
        Certificate c = certify(fixtures::icosahedron());
        const auto* n = std::get_if<NodeEuclideanReduction>(&c.root.node);
        if (!n || !n->euclidean_vertices.empty() || !n->transcript || !n->transcript->pass) {
            detail = "icosahedron: expected EuclideanReduction with empty T and a passing transcript";
            return false;
        }
    }
    {
        Certificate c = certify(fixtures::octahedron());
        const auto* n = std::get_if<NodeSuspension>(&c.root.node);
        if (!n || n->n != 4) {
            detail = "octahedron: expected SuspensionCase n=4, got " + summary_line(c.root.node);
            return false;
        }
    }
    {
        Certificate c = certify(fixtures::simplex_affine());
        const auto* n = std::get_if<NodeBaseSimplex>(&c.root.node);
        if (!n || !n->euclidean || !(n->gram == GramClass{GramClass::Kind::PositiveSemidefinite, 1})) {
            detail = "affine simplex: expected BaseSimplexEuclidean with PSD corank 1";
            return false;
        }
    }
    {
        Certificate c = certify(fixtures::simplex_534());
        const auto* n = std::get_if<NodeBaseSimplex>(&c.root.node);
        if (!n || n->euclidean || n->gram.kind != GramClass::Kind::Indefinite) {
            detail = "5-3-4 simplex: expected BaseSimplexHyperbolic with an indefinite form";
            return false;
        }
    }
    detail = "icosahedron, octahedron, affine and 5-3-4 simplices as expected";
    return true;
}

bool criterion_andreev_units(std::string& detail) {
    auto exactly_fails = [](const LabeledTriangulation& L, const std::string& id,
                            std::string& why) -> std::optional<AndreevCondition> {
        AndreevTranscript t = andreev_check(LabeledCellComplex::from_triangulation(L));
        std::optional<AndreevCondition> failing;
        for (const auto& c : t.conditions) {
            if (c.pass) continue;
            if (c.id != id) {
                why = "condition (" + c.id + ") failed, expected only (" + id + ")";
                return std::nullopt;
            }
            failing = c;
        }
        if (!failing) why = "condition (" + id + ") did not fail";
        return failing;
    };

    std::string why;
    auto c4 = exactly_fails(fixtures::prism_all_right_angles(), "iv", why);
    if (!c4) {
        detail = "prism: " + why;
        return false;
    }
    if (c4->failures().size() != 1 || c4->failures()[0].vertices != std::vector<int>{3, 4}) {
        detail = "prism: condition (iv) witness is not the suspension-point pair";
        return false;
    }
    auto c2 = exactly_fails(fixtures::planted_affine_clique(), "ii", why);
    if (!c2) {
        detail = "affine clique: " + why;
        return false;
    }
    if (c2->failures().size() != 1 || c2->failures()[0].vertices != std::vector<int>{0, 1, 2}) {
        detail = "affine clique: condition (ii) witness is not {0,1,2}";
        return false;
    }
    auto c3 = exactly_fails(fixtures::octahedron(), "iii", why);
    if (!c3) {
        detail = "octahedron: " + why;
        return false;
    }
    if (c3->failures().size() != 3) {
        detail = "octahedron: expected the three equators as condition (iii) witnesses";
        return false;
    }
    detail = "prism fails (iv), affine clique fails (ii), octahedron fails (iii); witnesses correct";
    return true;
}

bool criterion_non_adjacency(const Corpus& corpus, std::string& detail) {
    int nodes = 0, violations = 0;
    for (size_t i = 0; i < corpus.inputs.size(); ++i) {
        walk(corpus.inputs[i], corpus.certs[i].root,
             [&](const LabeledTriangulation& piece, const CertNode& node) {
                 const auto* n = std::get_if<NodeEuclideanReduction>(&node);
                 if (!n) return;
                 ++nodes;
                 for (size_t a = 0; a < n->euclidean_vertices.size(); ++a)
                     for (size_t b = a + 1; b < n->euclidean_vertices.size(); ++b)
                         if (piece.adjacent(n->euclidean_vertices[a], n->euclidean_vertices[b]))
                             ++violations;
             });
    }
    detail = std::to_string(nodes) + " reduction nodes, " + std::to_string(violations) + " violations";
    return violations == 0 && nodes > 0;
}

bool criterion_bookkeeping(const Corpus& corpus, std::string& detail) {
    int splits = 0;
    bool ok = true;
    std::string first_failure;
    for (size_t i = 0; i < corpus.inputs.size() && ok; ++i) {
        if (tree_depth(corpus.certs[i].root) > corpus.inputs[i].vertex_count()) {
            ok = false;
            first_failure = "recursion depth exceeds the vertex count";
            break;
        }
        walk(corpus.inputs[i], corpus.certs[i].root,
             [&](const LabeledTriangulation& piece, const CertNode& node) {
                 const auto* split = std::get_if<NodeCircuitSplit>(&node);
                 if (!split || !ok) return;
                 ++splits;
                 SplitResult s = split_along_circuit(piece, split->circuit);
                 // both children keep the shared circuit; the two cone
                 // points are the only new vertices
                 if (s.first.vertex_count() + s.second.vertex_count() !=
                     piece.vertex_count() + split->circuit.cycle.size() + 2) {
                     ok = false;
                     first_failure = "vertex accounting failed";
                     return;
                 }
                 if (!metric_flag_check(s.first).pass || !metric_flag_check(s.second).pass) {
                     ok = false;
                     first_failure = "a split child is not metric flag";
                     return;
                 }
                 const VertexClass expect = split->circuit.kind == EmptyEuclideanCircuit::Kind::Three
                                                ? VertexClass::Euclid3
                                                : VertexClass::Euclid4;
                 if (classify_vertex(s.first, s.cap_first) != expect ||
                     classify_vertex(s.second, s.cap_second) != expect) {
                     ok = false;
                     first_failure = "a cap vertex is not Euclidean of the matching kind";
                 }
             });
    }
    detail = ok ? std::to_string(splits) + " splits checked (children share the circuit: V1+V2 = V+|C|+2)"
                : first_failure;
    return ok && splits > 0;
}

bool criterion_oracles(const Corpus& corpus, std::string& detail) {
    int small_inputs = 0;
    for (const LabeledTriangulation& L : corpus.inputs) {
        if (L.vertex_count() > 12) continue;
        ++small_inputs;
        if (enumerate_cliques3(L) != reference::cliques3_bruteforce(L)) {
            detail = "3-clique enumeration disagrees with brute force";
            return false;
        }
        auto got = enumerate_chordless_4_circuits(L);
        auto want = reference::chordless4_bruteforce(L);
        if (got.size() != want.size()) {
            detail = "chordless 4-circuit count disagrees with brute force";
            return false;
        }
        for (size_t i = 0; i < got.size(); ++i) {
            std::array<int, 4> g{got[i].vertices[0], got[i].vertices[1], got[i].vertices[2],
                                 got[i].vertices[3]};
            if (g != want[i]) {
                detail = "chordless 4-circuit list disagrees with brute force";
                return false;
            }
        }
    }
    int orders = 0;
    for (int p = 2; p <= 6; ++p)
        for (int q = p; q <= 6; ++q)
            for (int r = q; r <= 6; ++r) {
                LabelMatrix lm(3);
                lm.set(0, 1, p);
                lm.set(1, 2, q);
                lm.set(0, 2, r);
                if (!is_spherical(lm)) continue;
                ++orders;
                Rational order = spherical_order(lm);
                if (Rational(oracles::coxeter_group_order_bfs(p, q, r)) != order) {
                    detail = "order of the (" + std::to_string(p) + "," + std::to_string(q) + "," +
                             std::to_string(r) + ") group disagrees with the BFS enumeration";
                    return false;
                }
            }
    detail = std::to_string(small_inputs) + " corpus inputs with V <= 12 against brute force; " +
             std::to_string(orders) + " spherical triples against group BFS";
    return small_inputs > 0 && orders >= 8;
}

bool criterion_determinism(std::string& detail) {
    for (const char* name :
         {"octahedron", "icosahedron", "simplex_affine", "simplex_534", "prism_right_angled"}) {
        fs::path input = fs::path(g_data) / (std::string(name) + ".json");
        fs::path out1 = g_tmp / (std::string(name) + ".cert1.json");
        fs::path out2 = g_tmp / (std::string(name) + ".cert2.json");
        CliResult r1 = run_cli("certify " + input.string() + " -o " + out1.string());
        CliResult r2 = run_cli("certify " + input.string() + " -o " + out2.string());
        if (r1.exit_code != 0 || r2.exit_code != 0) {
            detail = std::string(name) + ": certify exited non-zero";
            return false;
        }
        std::string b1 = read_file(out1), b2 = read_file(out2);
        if (b1.empty() || b1 != b2) {
            detail = std::string(name) + ": certificate files differ between runs";
            return false;
        }
    }
    detail = "re-running certify is byte-identical on every fixture";
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    for (int i = 1; i + 1 < argc; ++i) {
        if (std::string(argv[i]) == "--cli") g_cli = argv[i + 1];
        if (std::string(argv[i]) == "--data") g_data = argv[i + 1];
    }
    if (g_cli.empty() || g_data.empty()) {
        std::cerr << "usage: acceptance --cli <singer binary> --data <fixtures dir>\n";
        return 2;
    }
    g_tmp = fs::temp_directory_path() / ("singer-acceptance-" + std::to_string(::getpid()));
    fs::create_directories(g_tmp);

    Corpus corpus;
    int failed = 0;
    auto report = [&](const char* name, bool ok, const std::string& detail) {
        std::printf("[%s] %s: %s\n", ok ? "PASS" : "FAIL", name, detail.c_str());
        if (!ok) ++failed;
    };

    std::string detail;
    bool ok = criterion_soundness(corpus, detail);
    report("soundness sweep (200 seeds certify + verify)", ok, detail);
    if (!ok) {
        std::printf("corpus incomplete; skipping dependent criteria\n");
        return 1;
    }
    ok = criterion_euler(corpus, detail);
    report("chi^2 oracle (euler = 0/1 on corpus + fixtures)", ok, detail);
    ok = criterion_named_fixtures(detail);
    report("named fixture certificates", ok, detail);
    ok = criterion_andreev_units(detail);
    report("Andreev unit suite", ok, detail);
    ok = criterion_non_adjacency(corpus, detail);
    report("Euclidean non-adjacency at reduction nodes", ok, detail);
    ok = criterion_bookkeeping(corpus, detail);
    report("decomposition bookkeeping at circuit splits", ok, detail);
    ok = criterion_oracles(corpus, detail);
    report("oracle equivalence (enumeration + group orders)", ok, detail);
    ok = criterion_determinism(detail);
    report("byte-determinism of certify", ok, detail);

    fs::remove_all(g_tmp);
    return failed == 0 ? 0 : 1;
}
