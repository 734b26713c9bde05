#include "specbounds/batch.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>

#include "specbounds/graph6.hpp"
#include "specbounds/invariants.hpp"
#include "specbounds/json_io.hpp"
#include "specbounds/limits.hpp"
#include "specbounds/spectral.hpp"

namespace specbounds {

namespace {

constexpr double kSharpTolerance = 1e-7;

std::string format_double(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.10g", value);
    return buffer;
}

std::string format_root(const RootRatio& r) {
    return std::to_string(r.num) + "/sqrt(" + std::to_string(r.radicand) + ")";
}

std::string trimmed(std::string line) {
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n' || line.back() == ' '))
        line.pop_back();
    std::size_t start = 0;
    while (start < line.size() && line[start] == ' ') ++start;
    return line.substr(start);
}

}  // namespace

BatchRow evaluate_batch_row(const std::string& graph6_line, const Graph& g) {
    BatchRow row;
    row.graph6 = graph6_line;
    row.n = g.vertex_count();
    row.m = g.edge_count();
    if (row.n == 0) {
        row.skipped = true;
        row.skip_reason = "empty graph";
        return row;
    }

    row.lambda = lambda_min(g);
    if (row.n >= 2) {
        EtaBound eta_bound = bound_eta(g);
        IotaBound iota_bound = bound_iota(g);
        row.eta = eta_bound.value;
        row.iota = iota_bound.value;
        row.eta_sharp = std::abs(row.lambda - row.eta->value()) <= kSharpTolerance;
        row.iota_sharp = std::abs(row.lambda - to_double(*row.iota)) <= kSharpTolerance;

        bool chain = row.lambda <= row.eta->value() + 1e-8 &&
                     compare(row.eta->negated(), -*row.iota) >= 0;
        if (row.m >= 1) {
            row.explicit_bound = bound_explicit(g);
            const int r = std::max(2, clique_number(g));
            row.nikiforov = NikiforovValue{r, bound_nikiforov(g, r)};
            row.explicit_sharp =
                std::abs(row.lambda - to_double(*row.explicit_bound)) <= kSharpTolerance;
            chain = chain && *row.iota <= *row.explicit_bound;
            row.comparison_ok = comparison_check(g).ok();
        }
        row.chain_ok = chain;
    }
    return row;
}

BatchResult run_batch(std::istream& input, const BatchOptions& options) {
    BatchResult result;
    double gap_sum = 0.0;
    std::string line;
    for (int line_no = 1; std::getline(input, line); ++line_no) {
        const std::string text = trimmed(line);
        if (text.empty()) continue;

        Graph g;
        try {
            g = parse_graph6(text);
        } catch (const Graph6Error& error) {
            throw BatchParseError(line_no, error.what());
        }

        BatchRow row;
        try {
            row = evaluate_batch_row(text, g);
        } catch (const SizeLimitError& error) {
            if (options.strict) throw;
            row = BatchRow{};
            row.graph6 = text;
            row.n = g.vertex_count();
            row.m = g.edge_count();
            row.skipped = true;
            row.skip_reason = error.what();
        }

        if (row.skipped) {
            ++result.summary.skipped;
        } else {
            if (!row.chain_ok) result.all_ok = false;
            if (row.eta_sharp) ++result.summary.eta_sharp;
            if (row.iota_sharp) ++result.summary.iota_sharp;
            if (row.explicit_sharp) ++result.summary.explicit_sharp;
            if (row.eta) {
                const double gap = row.eta->value() - row.lambda;
                if (result.summary.gap_count == 0 || gap < result.summary.min_gap)
                    result.summary.min_gap = gap;
                gap_sum += gap;
                ++result.summary.gap_count;
            }
        }
        ++result.summary.rows;
        result.rows.push_back(std::move(row));
    }
    if (result.summary.gap_count > 0)
        result.summary.mean_gap = gap_sum / static_cast<double>(result.summary.gap_count);
    return result;
}

void write_csv(const BatchResult& result, std::ostream& out) {
    out << "graph6,n,m,lambda,eta,iota,explicit,nik_r,nik,chain_ok,"
           "eta_sharp,iota_sharp,explicit_sharp,comparison_ok\n";
    for (const BatchRow& row : result.rows) {
        out << row.graph6 << ',' << row.n << ',' << row.m << ',';
        if (row.skipped) {
            out << ",,,,,,,,,,skipped:" << row.skip_reason << '\n';
            continue;
        }
        out << format_double(row.lambda) << ',';
        if (row.eta) out << format_root(*row.eta);
        out << ',';
        if (row.iota) out << to_string(*row.iota);
        out << ',';
        if (row.explicit_bound) out << to_string(*row.explicit_bound);
        out << ',';
        if (row.nikiforov) out << row.nikiforov->r;
        out << ',';
        if (row.nikiforov) out << to_string(row.nikiforov->value);
        out << ',';
        out << (row.chain_ok ? "true" : "false") << ',' << (row.eta_sharp ? "true" : "false") << ','
            << (row.iota_sharp ? "true" : "false") << ',' << (row.explicit_sharp ? "true" : "false")
            << ',' << (row.comparison_ok ? "true" : "false") << '\n';
    }
}

void write_json(const BatchResult& result, std::ostream& out) {
    nlohmann::json rows = nlohmann::json::array();
    for (const BatchRow& row : result.rows) {
        nlohmann::json j;
        j["graph6"] = row.graph6;
        j["n"] = row.n;
        j["m"] = row.m;
        if (row.skipped) {
            j["skipped"] = true;
            j["reason"] = row.skip_reason;
            rows.push_back(std::move(j));
            continue;
        }
        j["lambda"] = row.lambda;
        j["eta"] = row.eta ? json_root_ratio(*row.eta) : nlohmann::json(nullptr);
        j["iota"] = row.iota ? json_rational_value(*row.iota) : nlohmann::json(nullptr);
        j["explicit"] =
            row.explicit_bound ? json_rational_value(*row.explicit_bound) : nlohmann::json(nullptr);
        if (row.nikiforov) {
            j["nikiforov"] = json_rational_value(row.nikiforov->value);
            j["nikiforov"]["r"] = row.nikiforov->r;
        } else {
            j["nikiforov"] = nullptr;
        }
        j["chain_ok"] = row.chain_ok;
        j["eta_sharp"] = row.eta_sharp;
        j["iota_sharp"] = row.iota_sharp;
        j["explicit_sharp"] = row.explicit_sharp;
        j["comparison_ok"] = row.comparison_ok;
        rows.push_back(std::move(j));
    }
    nlohmann::json summary{{"rows", result.summary.rows},
                           {"skipped", result.summary.skipped},
                           {"eta_sharp", result.summary.eta_sharp},
                           {"iota_sharp", result.summary.iota_sharp},
                           {"explicit_sharp", result.summary.explicit_sharp}};
    if (result.summary.gap_count > 0) {
        summary["min_gap"] = result.summary.min_gap;
        summary["mean_gap"] = result.summary.mean_gap;
    }
    out << nlohmann::json{{"rows", std::move(rows)}, {"summary", std::move(summary)}}.dump()
        << '\n';
}

void write_summary(const BatchSummary& summary, std::ostream& out) {
    out << "rows: " << summary.rows << " (skipped: " << summary.skipped << ")\n"
        << "sharp rows: eta=" << summary.eta_sharp << " iota=" << summary.iota_sharp
        << " explicit=" << summary.explicit_sharp << "\n";
    if (summary.gap_count > 0)
        out << "gap (-eta - lambda): min=" << format_double(summary.min_gap)
            << " mean=" << format_double(summary.mean_gap) << "\n";
}

}  // namespace specbounds
