#include "primemat/report.hpp"

#include <charconv>

#include <json.hpp>

namespace primemat {

std::string_view to_string(ClaimStatus status) {
    switch (status) {
        case ClaimStatus::verified: return "verified";
        case ClaimStatus::counterexample: return "counterexample";
        case ClaimStatus::witness_not_found: return "witness-not-found-below-limit";
    }
    return "unknown";
}

const DetailValue* ClaimReport::detail(std::string_view key) const {
    for (const auto& [k, v] : details)
        if (k == key) return &v;
    return nullptr;
}

std::string format_ratio(double value) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

std::string to_json(const ClaimReport& report, bool include_timing) {
    nlohmann::ordered_json j;
    j["claim"] = report.claim;
    j["range"] = {report.range_lo, report.range_hi};
    j["status"] = std::string(to_string(report.status));
    if (report.status == ClaimStatus::counterexample)
        j["counterexample"] = report.counterexample;
    else
        j["witnesses"] = report.witnesses;
    if (!report.details.empty()) {
        nlohmann::ordered_json d = nlohmann::ordered_json::object();
        for (const auto& [key, value] : report.details)
            std::visit([&](const auto& v) { d[key] = v; }, value);
        j["details"] = std::move(d);
    }
    if (include_timing)
        j["elapsed_ms"] = report.elapsed_ms;
    else
        j["elapsed_ms"] = nullptr;
    return j.dump();
}

}  // namespace primemat
