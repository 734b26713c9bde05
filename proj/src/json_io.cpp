#include "specbounds/json_io.hpp"

#include <cstdint>
#include <limits>

namespace specbounds {

nlohmann::json json_int(const BigInt& value) {
    static const BigInt lo = std::numeric_limits<std::int64_t>::min();
    static const BigInt hi = std::numeric_limits<std::int64_t>::max();
    if (value >= lo && value <= hi) return value.convert_to<std::int64_t>();
    return value.str();
}

nlohmann::json json_rational(const BigRat& q) {
    return {{"num", json_int(numerator(q))}, {"den", json_int(denominator(q))}};
}

nlohmann::json json_rational_value(const BigRat& q) {
    nlohmann::json j = json_rational(q);
    j["value"] = to_double(q);
    return j;
}

nlohmann::json json_root_ratio(const RootRatio& r) {
    return {{"e", std::abs(r.num)}, {"p", r.radicand}, {"value", r.value()}};
}

nlohmann::json json_witness(const BipartiteWitness& w) {
    return {{"subset", w.subset}, {"left", w.left}, {"right", w.right}, {"edges", w.edges}};
}

nlohmann::json to_json(const Spectrum& s) { return nlohmann::json(s.values); }

nlohmann::json to_json(const InvariantReport& report) {
    nlohmann::json j;
    j["n"] = report.n;
    j["m"] = report.m;
    j["alpha"] = {{"value", report.alpha.size}, {"witness", report.alpha.witness}};
    j["omega"] = report.omega;
    j["chi"] = {{"value", report.chi.chi}, {"coloring", report.chi.colors}};
    j["theta"] = json_rational(report.theta_value);
    if (report.eta_result) {
        j["eta"] = json_root_ratio(report.eta_result->value);
        j["eta"]["witness"] = json_witness(report.eta_result->witness);
        j["iota"] = json_rational_value(report.iota_result->value);
        j["iota"]["witness"] = json_witness(report.iota_result->witness);
    } else {
        j["eta"] = nullptr;
        j["iota"] = nullptr;
    }
    j["mad"] = json_rational_value(report.mad_result.value);
    j["mad"]["witness"] = report.mad_result.witness;
    return j;
}

nlohmann::json to_json(const BoundReport& report) {
    nlohmann::json j;
    j["n"] = report.n;
    j["m"] = report.m;
    j["lambda_min"] = report.lambda_min;
    j["witness_bound"] = json_root_ratio(report.eta.value);
    j["witness_bound"]["witness"] = json_witness(report.eta.witness);
    j["eta_bound"] = json_root_ratio(report.eta.value);
    j["iota_bound"] = json_rational_value(report.iota.value);
    j["explicit_bound"] = json_rational_value(report.explicit_bound);
    if (report.nikiforov) {
        j["nikiforov"] = json_rational_value(report.nikiforov->value);
        j["nikiforov"]["r"] = report.nikiforov->r;
    } else {
        j["nikiforov"] = nullptr;
    }
    j["chain_ok"] = report.chain_ok;
    j["comparison_applicable"] = report.comparison_applicable;
    j["comparison_ok"] = report.comparison_ok;
    return j;
}

}  // namespace specbounds
