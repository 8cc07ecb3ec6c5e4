#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pbei/graphs.hpp"
#include "pbei/groebner.hpp"
#include "pbei/ideals.hpp"
#include "pbei/resolution.hpp"
#include "pbei/theorems.hpp"

namespace {

using namespace pbei;

Graph family_graph(const std::string& spec) {
    auto bad = [&]() -> Graph {
        throw CLI::ValidationError(
            "--family", "unknown family '" + spec +
                            "' (expected path:n, cycle:n, complete:n, "
                            "complete_bipartite:a,b, claw, diamond)");
    };
    if (spec == "claw") return claw_graph();
    if (spec == "diamond") return diamond_graph();
    auto colon = spec.find(':');
    if (colon == std::string::npos) return bad();
    std::string name = spec.substr(0, colon), args = spec.substr(colon + 1);
    try {
        if (name == "path") return path_graph(std::stoi(args));
        if (name == "cycle") return cycle_graph(std::stoi(args));
        if (name == "complete") return complete_graph(std::stoi(args));
        if (name == "complete_bipartite") {
            auto comma = args.find(',');
            if (comma == std::string::npos) return bad();
            return complete_bipartite_graph(std::stoi(args.substr(0, comma)),
                                            std::stoi(args.substr(comma + 1)));
        }
    } catch (const std::invalid_argument&) {
        return bad();
    }
    return bad();
}

struct InputOpts {
    std::string family;
    std::string graph6;
    std::string edge_list_path;
};

void add_input_flags(CLI::App* cmd, InputOpts& in) {
    auto* f = cmd->add_option("--family", in.family,
                              "named family: path:n, cycle:n, complete:n, "
                              "complete_bipartite:a,b, claw, diamond");
    auto* g = cmd->add_option("--graph6", in.graph6, "graph in graph6 format");
    auto* e = cmd->add_option("--edge-list", in.edge_list_path, "path to an edge-list file");
    f->excludes(g)->excludes(e);
    g->excludes(e);
}

Graph load_graph(const InputOpts& in) {
    if (!in.family.empty()) return family_graph(in.family);
    if (!in.graph6.empty()) return from_graph6(in.graph6);
    if (!in.edge_list_path.empty()) {
        std::ifstream f(in.edge_list_path);
        if (!f) throw std::runtime_error("cannot open " + in.edge_list_path);
        std::string text((std::istreambuf_iterator<char>(f)),
                         std::istreambuf_iterator<char>());
        return parse_edge_list(text);
    }
    throw std::runtime_error("no input graph: pass --family, --graph6, or --edge-list");
}

std::uint64_t default_characteristic() {
    if (const char* env = std::getenv("PBEI_CHAR")) return std::stoull(env);
    return 32003;
}

OrderTag order_from_string(const std::string& s) {
    if (s == "degrevlex") return OrderTag::degrevlex;
    if (s == "lex") return OrderTag::lex;
    throw CLI::ValidationError("--order", "expected degrevlex or lex");
}

int run_betti(const InputOpts& in, IdealKind kind, std::uint64_t characteristic,
              const std::string& order, const std::string& oracle, int jmax,
              const std::string& format) {
    Graph g = load_graph(in);
    RingPtr ring = make_ring(g.n(), characteristic, order_from_string(order));
    IdealGenerators gens = build_ideal(kind, g, ring);
    BettiTable table;
    if (oracle == "schreyer") {
        table = betti_table_schreyer(gens);
    } else if (oracle == "koszul") {
        table = betti_table_koszul(gens, jmax);
    } else {
        throw CLI::ValidationError("--oracle", "expected schreyer or koszul");
    }
    if (format == "text" || format == "both") {
        std::cout << table.diagram();
        if (table.complete)
            std::cout << "reg = " << regularity(table) << ", pd = "
                      << projective_dimension(table)
                      << ", pure = " << (is_pure(table) ? "yes" : "no") << "\n";
    }
    if (format == "json" || format == "both") std::cout << table.to_json() << "\n";
    return 0;
}

int run_verify(const std::vector<std::string>& claims, int n_max,
               std::uint64_t characteristic, int jobs, const std::string& report_path) {
    CheckConfig cfg;
    cfg.characteristic = characteristic;
    cfg.jobs = jobs;
    std::vector<std::string> ids = claims;
    if (ids.empty())
        for (const auto& c : claim_registry()) ids.push_back(c.id);
    std::ofstream report;
    std::ostream* jsonl = nullptr;
    if (!report_path.empty()) {
        report.open(report_path);
        if (!report) throw std::runtime_error("cannot write " + report_path);
        jsonl = &report;
    }
    SweepSummary summary;
    sweep(n_max, ids, cfg, &summary, jsonl ? jsonl : &std::cout);
    std::cerr << "checked: pass " << summary.passed << ", fail " << summary.failed
              << ", skipped " << summary.skipped << "\n";
    long hard_failures = 0;
    for (const auto& f : summary.failures) {
        const Claim* c = find_claim(f.claim_id);
        bool probe = c && c->probe;
        std::cerr << (probe ? "probe counterexample: " : "FAIL: ") << f.claim_id << " on "
                  << f.graph6 << " witness " << f.witness << "\n";
        if (!probe) ++hard_failures;
    }
    return hard_failures == 0 ? 0 : 1;
}

int run_ideal(const InputOpts& in, IdealKind kind, std::uint64_t characteristic,
              const std::string& order, const std::string& show,
              const std::string& colon_edge, bool phi, bool eta) {
    Graph g = load_graph(in);
    RingPtr ring = make_ring(g.n(), characteristic, order_from_string(order));
    IdealGenerators gens = build_ideal(kind, g, ring);
    if (!colon_edge.empty()) {
        auto comma = colon_edge.find(',');
        if (comma == std::string::npos)
            throw CLI::ValidationError("--colon-edge", "expected i,j");
        std::pair<int, int> e{std::stoi(colon_edge.substr(0, comma)),
                              std::stoi(colon_edge.substr(comma + 1))};
        gens = colon_generators_combinatorial(g, e, ring);
    } else if (phi) {
        auto bp = bipartition(g);
        if (!bp) throw std::runtime_error("--phi requires a bipartite graph");
        gens = apply_phi(gens, *bp);
    } else if (eta) {
        gens = apply_eta(gens);
    }
    if (show == "gb") {
        GroebnerBasis gb = buchberger(gens);
        for (const auto& p : gb.basis) std::cout << p.to_string() << "\n";
    } else if (show == "gens") {
        for (const auto& p : gens.gens) std::cout << p.to_string() << "\n";
    } else {
        throw CLI::ValidationError("--show", "expected gens or gb");
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Betti tables and theorem checks for graph binomial ideals"};
    app.require_subcommand(1);

    std::uint64_t characteristic = default_characteristic();
    std::string order = "degrevlex";
    std::string kind_name = "parity";

    // betti
    auto* betti = app.add_subcommand("betti", "minimal graded Betti table of S/I");
    InputOpts betti_in;
    add_input_flags(betti, betti_in);
    std::string oracle = "schreyer", format = "both";
    int jmax = 8;
    betti->add_option("--ideal,--kind", kind_name, "parity|binomial|lss|permanental");
    betti->add_option("--char", characteristic, "field characteristic (0 or prime)");
    betti->add_option("--order", order, "degrevlex|lex");
    betti->add_option("--oracle", oracle, "schreyer (complete) or koszul (partial)");
    betti->add_option("--jmax", jmax, "internal degree cutoff for the koszul oracle");
    betti->add_option("--format", format, "text|json|both");

    // verify
    auto* verify = app.add_subcommand("verify", "sweep claim checks over small graphs");
    std::vector<std::string> claims;
    int n_max = 5, jobs = 1;
    std::string report_path;
    verify->add_option("--claims", claims, "claim ids (default: all)")->delimiter(',');
    verify->add_option("--n-max", n_max, "largest vertex count");
    verify->add_option("--char", characteristic, "field characteristic (0 or prime)");
    verify->add_option("--jobs", jobs, "parallel workers");
    verify->add_option("--report", report_path, "write JSON-lines report to this path");
    verify->add_flag_callback("--list", [] {
        for (const auto& c : claim_registry())
            std::cout << c.id << (c.external ? " [external]" : "")
                      << (c.probe ? " [probe]" : "") << "  " << c.description << "\n";
        std::exit(0);
    }, "list registered claims and exit");

    // ideal
    auto* ideal = app.add_subcommand("ideal", "print generators or Groebner bases");
    InputOpts ideal_in;
    add_input_flags(ideal, ideal_in);
    std::string show = "gens", colon_edge;
    bool phi = false, eta = false;
    ideal->add_option("--kind,--ideal", kind_name, "parity|binomial|lss|permanental");
    ideal->add_option("--char", characteristic, "field characteristic (0 or prime)");
    ideal->add_option("--order", order, "degrevlex|lex");
    ideal->add_option("--show", show, "gens|gb");
    ideal->add_option("--colon-edge", colon_edge,
                      "edge i,j: print generators of I_{G\\e} : gbar_e");
    ideal->add_flag("--phi", phi, "apply the bipartite swap isomorphism Phi");
    ideal->add_flag("--eta", eta, "apply the change of coordinates eta");

    CLI11_PARSE(app, argc, argv);

    try {
        if (betti->parsed())
            return run_betti(betti_in, ideal_kind_from_string(kind_name), characteristic,
                             order, oracle, jmax, format);
        if (verify->parsed())
            return run_verify(claims, n_max, characteristic, jobs, report_path);
        if (ideal->parsed())
            return run_ideal(ideal_in, ideal_kind_from_string(kind_name), characteristic,
                             order, show, colon_edge, phi, eta);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
