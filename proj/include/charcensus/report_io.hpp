#pragma once

#include <span>
#include <string>

#include <json.hpp>

#include "charcensus/bigint.hpp"
#include "charcensus/census.hpp"

namespace charcensus {

inline std::string render_ratio(const CensusReport& r) {
    return ratio_decimal(r.numerator, r.denominator, 6);
}

inline constexpr const char* census_csv_header = "n,kind,params,numerator,denominator,ratio";

/// CSV per the fixed schema: header line, one row per report, LF endings.
inline std::string census_csv(std::span<const CensusReport> reports) {
    std::string out = census_csv_header;
    out += '\n';
    for (const auto& r : reports) {
        out += std::to_string(r.n);
        out += ',';
        out += r.kind;
        out += ',';
        out += r.params;
        out += ',';
        out += r.numerator.str();
        out += ',';
        out += r.denominator.str();
        out += ',';
        out += render_ratio(r);
        out += '\n';
    }
    return out;
}

/// JSON array mirroring the CSV fields; counts as exact decimal strings.
inline nlohmann::ordered_json census_json(std::span<const CensusReport> reports) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : reports) {
        nlohmann::ordered_json obj;
        obj["n"] = r.n;
        obj["kind"] = r.kind;
        obj["params"] = r.params;
        obj["numerator"] = r.numerator.str();
        obj["denominator"] = r.denominator.str();
        obj["ratio"] = render_ratio(r);
        arr.push_back(std::move(obj));
    }
    return arr;
}

inline std::string census_text(std::span<const CensusReport> reports) {
    std::string out;
    for (const auto& r : reports) {
        out += "n=" + std::to_string(r.n) + " kind=" + r.kind + " params=" + r.params +
               " count=" + r.numerator.str() + "/" + r.denominator.str() +
               " ratio=" + render_ratio(r) + "\n";
    }
    return out;
}

}  // namespace charcensus
