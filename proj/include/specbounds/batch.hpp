#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "specbounds/bounds.hpp"

namespace specbounds {

/// Parse failure inside a batch input, with the 1-based line number.
class BatchParseError : public std::runtime_error {
public:
    BatchParseError(int line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

struct BatchOptions {
    bool strict = false;  // fail on oversize graphs instead of skipping
};

/// One graph6 line, fully evaluated. Bounds that require n >= 2 or m >= 1
/// stay unset on degenerate rows. Sharpness flags compare the float
/// rendering of each bound against lambda at 1e-7.
struct BatchRow {
    std::string graph6;
    int n = 0;
    long m = 0;
    bool skipped = false;
    std::string skip_reason;

    double lambda = 0.0;
    std::optional<RootRatio> eta;  // -eta as exact pair
    std::optional<BigRat> iota;    // -iota
    std::optional<BigRat> explicit_bound;
    std::optional<NikiforovValue> nikiforov;

    bool chain_ok = true;
    bool eta_sharp = false;
    bool iota_sharp = false;
    bool explicit_sharp = false;
    bool comparison_ok = true;
};

struct BatchSummary {
    long rows = 0;
    long skipped = 0;
    long eta_sharp = 0;
    long iota_sharp = 0;
    long explicit_sharp = 0;
    long gap_count = 0;      // rows contributing to the gap statistics
    double min_gap = 0.0;    // (-eta) - lambda
    double mean_gap = 0.0;
};

struct BatchResult {
    std::vector<BatchRow> rows;
    BatchSummary summary;
    bool all_ok = true;  // chain_ok on every non-skipped row
};

/// Evaluate one already-parsed graph into a row.
BatchRow evaluate_batch_row(const std::string& graph6_line, const Graph& g);

/// Run every line of input. Throws BatchParseError on malformed lines and
/// SizeLimitError for oversize graphs under strict mode; otherwise oversize
/// rows are marked skipped and counted.
BatchResult run_batch(std::istream& input, const BatchOptions& options = {});

/// Fixed-column CSV: graph6,n,m,lambda,eta,iota,explicit,nik_r,nik,chain_ok,
/// eta_sharp,iota_sharp,explicit_sharp,comparison_ok. Doubles use 10
/// significant digits; exact values render as -e/sqrt(p) or num/den.
void write_csv(const BatchResult& result, std::ostream& out);

/// {"rows": [...], "summary": {...}}
void write_json(const BatchResult& result, std::ostream& out);

/// Human-readable summary block (row counts, sharp counts, gap stats).
void write_summary(const BatchSummary& summary, std::ostream& out);

}  // namespace specbounds
