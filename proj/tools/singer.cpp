// Command-line surface: validate, certify, verify, euler, andreev, gen.
// Exit codes: 0 ok, 2 invalid input, 3 verification reject, 4 internal
// contradiction (with an artifact dump for inspection).

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "singer/certify.hpp"
#include "singer/digest.hpp"
#include "singer/generator.hpp"

using json = nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalidInput = 2;
constexpr int kExitReject = 3;
constexpr int kExitContradiction = 4;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw singer::Error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw singer::Error("cannot write " + path);
    out << bytes;
}

singer::LabeledTriangulation load(const std::string& path) {
    return singer::parse_triangulation(read_file(path));
}

json metric_flag_json(const singer::LabeledTriangulation& L, const singer::MetricFlagReport& report) {
    json violations = json::array();
    for (const auto& v : report.violations) {
        json jv;
        jv["clause"] = std::string(1, v.clause);
        jv["clique"] = v.clique;
        json names = json::array();
        for (int x : v.clique) names.push_back(L.name(x));
        jv["names"] = std::move(names);
        jv["detail"] = v.detail;
        violations.push_back(std::move(jv));
    }
    json j;
    j["pass"] = report.pass;
    j["violations"] = std::move(violations);
    return j;
}

int cmd_validate(const std::string& file, bool as_json) {
    singer::LabeledTriangulation L = load(file);
    singer::MetricFlagReport report = singer::metric_flag_check(L);
    if (as_json) {
        json j = metric_flag_json(L, report);
        j["vertices"] = L.vertex_count();
        j["edges"] = L.edge_count();
        j["triangles"] = L.triangle_count();
        std::cout << j.dump() << "\n";
    } else if (report.pass) {
        std::cout << "ok: metric flag triangulation of S^2 with V=" << L.vertex_count()
                  << " E=" << L.edge_count() << " F=" << L.triangle_count() << "\n";
    } else {
        std::cout << "invalid: " << report.violations.size() << " metric-flag violation(s)\n";
        for (const auto& v : report.violations) {
            std::cout << "  clause (" << v.clause << ") at {";
            for (size_t i = 0; i < v.clique.size(); ++i) std::cout << (i ? "," : "") << L.name(v.clique[i]);
            std::cout << "}: " << v.detail << "\n";
        }
    }
    return report.pass ? kExitOk : kExitInvalidInput;
}

int cmd_certify(const std::string& file, const std::string& out_path, bool as_json) {
    singer::LabeledTriangulation L = load(file);
    singer::require_metric_flag(L);
    singer::Certificate cert = singer::certify(L);
    const std::string bytes = singer::serialize(cert) + "\n";
    if (!out_path.empty()) {
        write_file(out_path, bytes);
        if (as_json) {
            json j;
            j["certificate_file"] = out_path;
            j["root_kind"] = singer::node_kind(cert.root.node);
            j["summary"] = singer::summary_line(cert.root.node);
            std::cout << j.dump() << "\n";
        } else {
            std::cout << singer::summary_tree(cert.root);
        }
    } else {
        std::cout << bytes;
        std::cerr << singer::summary_tree(cert.root);
    }
    return kExitOk;
}

int cmd_verify(const std::string& file, const std::string& cert_path, bool as_json) {
    singer::LabeledTriangulation L = load(file);
    singer::Certificate cert = singer::deserialize(read_file(cert_path));
    singer::VerificationReport report = singer::verify(L, cert);
    if (as_json) {
        json j;
        j["accepted"] = report.accepted;
        json fails = json::array();
        for (const auto& f : report.failures) {
            json jf;
            jf["path"] = f.path;
            jf["reason"] = f.reason;
            fails.push_back(std::move(jf));
        }
        j["failures"] = std::move(fails);
        std::cout << j.dump() << "\n";
    } else if (report.accepted) {
        std::cout << "accepted\n";
    } else {
        std::cout << "rejected\n";
        for (const auto& f : report.failures) std::cout << "  " << f.path << ": " << f.reason << "\n";
    }
    return report.accepted ? kExitOk : kExitReject;
}

int cmd_euler(const std::string& file, bool as_json) {
    singer::LabeledTriangulation L = load(file);
    const std::string chi = singer::rational_string(singer::l2_euler_characteristic(L));
    if (as_json) {
        json j;
        j["euler_characteristic"] = chi;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << chi << "\n";
    }
    return kExitOk;
}

int cmd_andreev(const std::string& file, bool as_json) {
    singer::LabeledTriangulation L = load(file);
    singer::require_metric_flag(L);
    singer::LabeledCellComplex X = singer::LabeledCellComplex::from_triangulation(L);
    singer::AndreevTranscript t = singer::andreev_check(X);
    if (as_json) {
        std::cout << singer::transcript_json(t) << "\n";
    } else {
        std::cout << (t.pass ? "pass" : "fail") << "\n";
        for (const auto& c : t.conditions) {
            std::cout << "  (" << c.id << ") " << (c.pass ? "pass" : "FAIL") << ", " << c.instances.size()
                      << " instance(s)\n";
            for (const auto& inst : c.failures()) {
                std::cout << "      " << inst.what << " {";
                for (size_t i = 0; i < inst.vertices.size(); ++i)
                    std::cout << (i ? "," : "") << L.name(inst.vertices[i]);
                std::cout << "} " << inst.note << "\n";
            }
        }
    }
    return kExitOk;
}

int cmd_gen(std::uint64_t seed, int vertices, int plant3, int plant4, std::vector<int> palette,
            const std::string& out_path) {
    singer::GeneratorConfig config;
    config.seed = seed;
    config.target_vertices = vertices;
    config.plant3 = plant3;
    config.plant4 = plant4;
    if (!palette.empty()) config.palette = std::move(palette);
    singer::LabeledTriangulation L = singer::generate(config);
    const std::string bytes = singer::canonical_document(L) + "\n";
    if (out_path.empty())
        std::cout << bytes;
    else
        write_file(out_path, bytes);
    return kExitOk;
}

int dump_contradiction(const singer::InternalContradiction& e) {
    const std::string path = "singer-contradiction-" +
                             singer::sha256_hex(std::string(e.what()) + e.witness_json).substr(0, 12) +
                             ".json";
    json j;
    j["error"] = e.what();
    j["witness"] = e.witness_json;
    try {
        write_file(path, j.dump(2) + "\n");
        std::cerr << "internal contradiction: " << e.what() << "\nartifacts dumped to " << path << "\n";
    } catch (const std::exception&) {
        std::cerr << "internal contradiction: " << e.what() << " (artifact dump failed)\n";
    }
    return kExitContradiction;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"certification engine for l2-acyclicity of Davis complexes over 2-sphere nerves"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable output");

    std::string file, cert_path, out_path;

    CLI::App* validate = app.add_subcommand("validate", "parse and run the metric flag check");
    validate->add_option("file", file)->required();

    CLI::App* certify = app.add_subcommand("certify", "produce an acyclicity certificate");
    certify->add_option("file", file)->required();
    certify->add_option("-o,--output", out_path, "certificate file (default: stdout)");

    CLI::App* verify = app.add_subcommand("verify", "independently re-check a certificate");
    verify->add_option("file", file)->required();
    verify->add_option("certificate", cert_path)->required();

    CLI::App* euler = app.add_subcommand("euler", "exact l2 Euler characteristic");
    euler->add_option("file", file)->required();

    CLI::App* andreev = app.add_subcommand("andreev", "Andreev transcript of the dual polytope");
    andreev->add_option("file", file)->required();

    std::uint64_t seed = 1;
    int vertices = 12, plant3 = 0, plant4 = 0;
    std::vector<int> palette;
    CLI::App* gen = app.add_subcommand("gen", "generate a metric flag triangulation");
    gen->add_option("--seed", seed, "generator seed")->required();
    gen->add_option("--vertices", vertices, "target vertex count")->required();
    gen->add_option("--plant-3", plant3, "empty Euclidean 3-circuits to plant");
    gen->add_option("--plant-4", plant4, "empty Euclidean 4-circuits to plant");
    gen->add_option("--palette", palette, "label palette (default 2 3 4 5)");
    gen->add_option("-o,--output", out_path, "output file (default: stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate->parsed()) return cmd_validate(file, as_json);
        if (certify->parsed()) return cmd_certify(file, out_path, as_json);
        if (verify->parsed()) return cmd_verify(file, cert_path, as_json);
        if (euler->parsed()) return cmd_euler(file, as_json);
        if (andreev->parsed()) return cmd_andreev(file, as_json);
        if (gen->parsed()) return cmd_gen(seed, vertices, plant3, plant4, palette, out_path);
    } catch (const singer::InternalContradiction& e) {
        return dump_contradiction(e);
    } catch (const singer::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    }
    return kExitOk;
}
