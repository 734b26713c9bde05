#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "specbounds/batch.hpp"
#include "specbounds/bounds.hpp"
#include "specbounds/generators.hpp"
#include "specbounds/graph6.hpp"
#include "specbounds/invariants.hpp"
#include "specbounds/json_io.hpp"
#include "specbounds/limits.hpp"
#include "specbounds/verify.hpp"

namespace {

constexpr int kExitFailure = 1;  // claim or row failure
constexpr int kExitUsage = 2;    // usage or parse error

using specbounds::Graph;

// Collect (label, graph) pairs from either a literal graph6 argument or a
// file of graph6 lines.
std::vector<std::pair<std::string, Graph>> load_graphs(const std::string& literal,
                                                       const std::string& path) {
    std::vector<std::pair<std::string, Graph>> out;
    if (!literal.empty() && !path.empty())
        throw std::invalid_argument("give either a graph6 argument or --file, not both");
    if (!literal.empty()) {
        out.emplace_back(literal, specbounds::parse_graph6(literal));
        return out;
    }
    if (path.empty()) throw std::invalid_argument("need a graph6 argument or --file");
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        try {
            out.emplace_back(line, specbounds::parse_graph6(line));
        } catch (const specbounds::Graph6Error& error) {
            throw std::invalid_argument(path + ":" + std::to_string(line_no) + ": " + error.what());
        }
    }
    return out;
}

std::vector<std::string> split_claims(const std::string& list) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= list.size()) {
        std::size_t comma = list.find(',', start);
        if (comma == std::string::npos) comma = list.size();
        if (comma > start) out.push_back(list.substr(start, comma - start));
        start = comma + 1;
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"smallest adjacency eigenvalue and its combinatorial upper bounds"};
    app.require_subcommand(1);

    std::string family_text;
    CLI::App* family_cmd = app.add_subcommand("family", "print a parametrized family graph as graph6");
    family_cmd->add_option("spec", family_text,
                           "complete:N | cycle:N | path:N | multipartite:K,T | "
                           "regbipartite:D,T | joinh:S | grid:A,B")
        ->required();

    std::string inv_g6, inv_file;
    CLI::App* inv_cmd = app.add_subcommand("invariants", "exact invariants as JSON, one line per graph");
    inv_cmd->add_option("graph6", inv_g6, "graph6 line");
    inv_cmd->add_option("--file", inv_file, "file of graph6 lines");

    std::string bounds_g6, bounds_file;
    int nikiforov_r = 0;
    CLI::App* bounds_cmd = app.add_subcommand("bounds", "bound report as JSON, one line per graph");
    bounds_cmd->add_option("graph6", bounds_g6, "graph6 line");
    bounds_cmd->add_option("--file", bounds_file, "file of graph6 lines");
    bounds_cmd->add_option("--nikiforov-r", nikiforov_r,
                           "override r (default max(2, omega); K_{r+1}-freeness is verified)");

    std::string batch_input, batch_format = "csv";
    bool batch_strict = false;
    CLI::App* batch_cmd = app.add_subcommand("batch", "evaluate a graph6 corpus");
    batch_cmd->add_option("--input", batch_input, "graph6 file")->required();
    batch_cmd->add_option("--format", batch_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    batch_cmd->add_flag("--strict", batch_strict, "fail on oversize graphs instead of skipping");

    std::string claims_list;
    int max_s = 4;
    CLI::App* verify_cmd = app.add_subcommand("verify-paper", "run the claim verification suite");
    verify_cmd->add_option("--claims", claims_list,
                           "comma-separated subset of prop-3.1,sec-3.2,sec-3.3,ex-3.4,"
                           "thm-4.2a,thm-4.2b");
    verify_cmd->add_option("--max-s", max_s, "largest s for the ex-3.4 family (default 4)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (family_cmd->parsed()) {
            specbounds::FamilySpec spec = specbounds::FamilySpec::parse(family_text);
            std::cout << specbounds::to_graph6(specbounds::generate(spec)) << "\n";
            return 0;
        }

        if (inv_cmd->parsed()) {
            for (const auto& [label, g] : load_graphs(inv_g6, inv_file)) {
                try {
                    std::cout << to_json(specbounds::compute_invariants(g)).dump() << "\n";
                } catch (const specbounds::SizeLimitError& error) {
                    std::cerr << label << ": " << error.what() << "\n";
                    return kExitFailure;
                }
            }
            return 0;
        }

        if (bounds_cmd->parsed()) {
            std::optional<int> r;
            if (nikiforov_r != 0) r = nikiforov_r;
            bool all_ok = true;
            for (const auto& [label, g] : load_graphs(bounds_g6, bounds_file)) {
                try {
                    specbounds::BoundReport report = specbounds::evaluate_bounds(g, r);
                    if (!report.chain_ok) all_ok = false;
                    std::cout << to_json(report).dump() << "\n";
                } catch (const std::exception& error) {
                    std::cerr << label << ": " << error.what() << "\n";
                    return kExitFailure;
                }
            }
            return all_ok ? 0 : kExitFailure;
        }

        if (batch_cmd->parsed()) {
            std::ifstream in(batch_input);
            if (!in) {
                std::cerr << "cannot open " << batch_input << "\n";
                return kExitUsage;
            }
            specbounds::BatchResult result;
            try {
                result = specbounds::run_batch(in, {batch_strict});
            } catch (const specbounds::BatchParseError& error) {
                std::cerr << batch_input << ": " << error.what() << "\n";
                return kExitUsage;
            } catch (const specbounds::SizeLimitError& error) {
                std::cerr << batch_input << ": " << error.what() << "\n";
                return kExitFailure;
            }
            if (batch_format == "json") {
                specbounds::write_json(result, std::cout);
            } else {
                specbounds::write_csv(result, std::cout);
                specbounds::write_summary(result.summary, std::cerr);
            }
            return result.all_ok ? 0 : kExitFailure;
        }

        if (verify_cmd->parsed()) {
            specbounds::VerifyOptions options;
            options.claims = split_claims(claims_list);
            options.max_s = max_s;
            long failed = 0;
            for (const specbounds::ClaimResult& claim : specbounds::verify_paper(options)) {
                if (!claim.pass) ++failed;
                std::cout << (claim.pass ? "PASS " : "FAIL ") << claim.id << " [" << claim.params
                          << "] expected: " << claim.expected << " | computed: " << claim.computed
                          << "\n";
            }
            std::cout << (failed == 0 ? "all claims hold" : std::to_string(failed) + " claim(s) failed")
                      << "\n";
            return failed == 0 ? 0 : kExitFailure;
        }
    } catch (const specbounds::Graph6Error& error) {
        std::cerr << error.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& error) {
        std::cerr << error.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& error) {
        std::cerr << error.what() << "\n";
        return kExitFailure;
    }
    return 0;
}
