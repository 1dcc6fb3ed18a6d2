#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "equicut/analysis.hpp"
#include "equicut/catalog.hpp"
#include "equicut/cutcone.hpp"
#include "equicut/doubling.hpp"

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitParse = 2;
constexpr int kExitLimit = 3;
constexpr int kExitBudget = 4;

struct InputOptions {
    std::string name;
    std::string file;
    long long cut_limit = 16;
    long long node_budget = 100000;
    bool force = false;
    bool text = false;
};

void add_common(CLI::App* cmd, InputOptions& in) {
    auto* name = cmd->add_option("--name", in.name, "catalog graph name, e.g. petersen, c5, k23");
    auto* file = cmd->add_option("--file", in.file, "graph file: 'v m' header plus edge lines");
    name->excludes(file);
    cmd->add_option("--cut-limit", in.cut_limit, "vertex limit for full cut generation");
    cmd->add_option("--node-budget", in.node_budget, "branch-and-bound node budget");
    cmd->add_flag("--force", in.force, "lift the cut generation limit for this input");
    cmd->add_flag("--text", in.text, "human-readable output instead of JSON");
    cmd->add_flag("--json", [](int64_t) {}, "JSON output (default)");
}

equicut::Graph load_graph(const InputOptions& in) {
    if (!in.name.empty()) return equicut::graph_by_name(in.name);
    if (!in.file.empty()) {
        std::ifstream stream(in.file);
        if (!stream) throw equicut::ParseError("cannot open " + in.file);
        return equicut::Graph::from_text(stream);
    }
    throw equicut::ParseError("provide --name or --file");
}

equicut::CutConeOptions solver_options(const InputOptions& in, int vertices) {
    equicut::CutConeOptions opt;
    opt.cut_limit = static_cast<int>(in.cut_limit);
    opt.node_budget = in.node_budget;
    if (in.force && vertices > opt.cut_limit) opt.cut_limit = vertices;
    return opt;
}

int run_analyze(const InputOptions& in) {
    equicut::Graph g = load_graph(in);
    equicut::AnalysisReport report = equicut::analyze(g, solver_options(in, g.vertex_count()));
    std::cout << (in.text ? report.to_text() : report.to_json()) << "\n";
    if (report.limited && !in.force) return kExitLimit;
    return 0;
}

int run_embed(const InputOptions& in, long long requested_scale) {
    equicut::Graph g = load_graph(in);
    equicut::CutConeOptions opt = solver_options(in, g.vertex_count());
    if (g.vertex_count() > opt.cut_limit) {
        std::cerr << "graph exceeds the cut generation limit; pass --force\n";
        return kExitLimit;
    }
    std::optional<equicut::EmbeddingCertificate> cert = equicut::l1_certificate(g, opt);
    if (!cert) {
        std::cerr << "graph is not l1-embeddable\n";
        return kExitMismatch;
    }
    equicut::Realization r = equicut::realization_from_certificate(g, *cert);
    if (requested_scale > 0) {
        if (requested_scale % r.scale() != 0) {
            std::cerr << "requested scale must be a multiple of " << r.scale() << "\n";
            return kExitParse;
        }
        r = equicut::replicate_columns(r, requested_scale / r.scale());
    }
    std::cout << r.to_text();
    return 0;
}

int run_double(const InputOptions& in) {
    equicut::Graph g = load_graph(in);
    equicut::CutConeOptions opt = solver_options(in, g.vertex_count());
    equicut::Graph doubled = equicut::diametral_doubling(g);
    if (g.vertex_count() > opt.cut_limit) {
        std::cerr << "base graph exceeds the cut generation limit; pass --force\n";
        return kExitLimit;
    }
    std::optional<equicut::EmbeddingCertificate> cert = equicut::l1_certificate(g, opt);
    if (!cert) {
        std::cerr << "base graph is not l1-embeddable\n";
        return kExitMismatch;
    }
    equicut::Realization base = equicut::realization_from_certificate(g, *cert);
    equicut::DoublingDecomposition dec = equicut::doubling_realization(g, base);
    if (in.text) {
        std::cout << doubled.to_text();
        std::cout << dec.header_json() << "\n";
        std::cout << dec.assembled().to_text();
    } else {
        nlohmann::ordered_json j;
        j["doubled_graph"] = doubled.to_text();
        j["decomposition"] = nlohmann::ordered_json::parse(dec.header_json());
        j["realization"] = dec.assembled().to_text();
        std::cout << j.dump() << "\n";
    }
    return 0;
}

int run_verify(const std::string& filter, const InputOptions& in) {
    equicut::CutConeOptions opt;
    opt.cut_limit = static_cast<int>(in.cut_limit);
    opt.node_budget = in.node_budget;
    std::vector<equicut::CatalogCheck> checks;
    auto matches = [&](const std::string& name) {
        return filter.empty() || name.find(filter) != std::string::npos;
    };
    for (const equicut::CatalogEntry& entry : equicut::catalog_entries()) {
        if (!matches(entry.name)) continue;
        auto rows = equicut::verify_catalog_entry(entry, opt);
        checks.insert(checks.end(), rows.begin(), rows.end());
    }
    if (matches("census6")) {
        auto rows = equicut::verify_census6(opt);
        checks.insert(checks.end(), rows.begin(), rows.end());
    }
    if (matches("doublings")) {
        auto rows = equicut::verify_doubling_identities();
        checks.insert(checks.end(), rows.begin(), rows.end());
    }
    bool failed = false;
    size_t widest = 0;
    for (const auto& c : checks) widest = std::max(widest, c.entry.size() + c.property.size());
    for (const auto& c : checks) {
        failed = failed || c.failed();
        std::string head = c.entry + "." + c.property;
        std::cout << head << std::string(widest + 2 - head.size() + 1, ' ') << "expected "
                  << c.expected << ", got " << c.computed << "  [" << c.status << "]\n";
    }
    std::cout << (failed ? "FAIL" : "OK") << " (" << checks.size() << " checks)\n";
    return failed ? kExitMismatch : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"cut-cone analysis of graph metrics: l1 recognition, size, scale, "
                 "rigidity, equicut certificates, and diametral doubling"};
    app.require_subcommand(1);

    InputOptions analyze_in, embed_in, double_in, verify_in;
    long long embed_scale = 0;
    std::string filter;

    CLI::App* analyze = app.add_subcommand("analyze", "full metric report for one graph");
    add_common(analyze, analyze_in);
    CLI::App* embed = app.add_subcommand("embed", "print a hypercube realization");
    add_common(embed, embed_in);
    embed->add_option("--scale", embed_scale, "emit the realization at this scale");
    CLI::App* dbl = app.add_subcommand("double", "diametral doubling plus block realization");
    add_common(dbl, double_in);
    CLI::App* verify = app.add_subcommand("verify-catalog", "run the named-graph regression table");
    verify->add_option("--filter", filter, "only entries containing this substring");
    verify->add_option("--cut-limit", verify_in.cut_limit, "vertex limit for full cut generation");
    verify->add_option("--node-budget", verify_in.node_budget, "branch-and-bound node budget");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? kExitParse : 0;
    }

    try {
        if (analyze->parsed()) return run_analyze(analyze_in);
        if (embed->parsed()) return run_embed(embed_in, embed_scale);
        if (dbl->parsed()) return run_double(double_in);
        return run_verify(filter, verify_in);
    } catch (const equicut::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const equicut::UnknownFamily& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const equicut::UnknownEntry& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const equicut::BadParameters& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const equicut::SizeLimitExceeded& e) {
        std::cerr << "limit exceeded: " << e.what() << "\n";
        return kExitLimit;
    } catch (const equicut::NodeBudgetExceeded& e) {
        std::cerr << "budget exhausted: " << e.what() << "\n";
        return kExitBudget;
    } catch (const equicut::ScaleSearchInconclusive& e) {
        std::cerr << "budget exhausted: " << e.what() << "\n";
        return kExitBudget;
    } catch (const equicut::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMismatch;
    }
}
