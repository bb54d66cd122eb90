#pragma once

#include <array>
#include <chrono>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "corepart/cache.hpp"
#include "corepart/enumerate.hpp"
#include "corepart/formulas.hpp"
#include "corepart/serialize.hpp"

namespace corepart {

/// One checked cell of the conjecture grid: does the enumerated number of
/// (s, s+r)-core partitions with d-distinct parts equal the predicted value?
struct VerificationRecord {
    int d = 0;
    int r = 0;
    int s = 0;
    std::int64_t enumerated = 0;
    std::int64_t predicted = 0;
    bool match = true;
    double wall_ms = 0.0;
    std::vector<Partition> witnesses;  // enumerated partitions, kept only on mismatch
};

struct VerificationReport {
    int d_max = 0;
    int s_max = 0;
    std::string engine;
    std::vector<VerificationRecord> records;
    std::int64_t checked = 0;
    std::int64_t matched = 0;
    std::int64_t mismatched = 0;
    std::optional<std::array<int, 3>> first_mismatch;  // (d, r, s)
    double total_wall_ms = 0.0;
};

/// Sweeps 1 <= d <= d_max, 1 <= r <= d, 1 <= s <= s_max and compares the
/// enumerated counts against the closed-form prediction.  A mismatch is data,
/// not an error: it is recorded (with the offending partition list) and the
/// sweep continues.
inline VerificationReport verify_conjecture(int d_max, int s_max, Engine engine = Engine::Both,
                                            const CacheConfig* cache = nullptr) {
    if (d_max < 1) throw std::invalid_argument("verify_conjecture: d_max must be >= 1");
    if (s_max < 1) throw std::invalid_argument("verify_conjecture: s_max must be >= 1");
    VerificationReport report;
    report.d_max = d_max;
    report.s_max = s_max;
    report.engine = engine_name(engine);
    const auto sweep_start = std::chrono::steady_clock::now();
    for (int d = 1; d <= d_max; ++d) {
        for (int r = 1; r <= d; ++r) {
            for (int s = 1; s <= s_max; ++s) {
                VerificationRecord rec;
                rec.d = d;
                rec.r = r;
                rec.s = s;
                const auto cell_start = std::chrono::steady_clock::now();
                EnumerationQuery q{CoreSpec{s, s + r}, d, std::nullopt, engine};
                EnumerationResult res = cache ? run_query_cached(q, *cache) : run_query(q);
                rec.wall_ms = std::chrono::duration<double, std::milli>(
                                  std::chrono::steady_clock::now() - cell_start)
                                  .count();
                rec.enumerated = res.count;
                rec.predicted = conjectured_count(d, r, s);
                rec.match = rec.enumerated == rec.predicted;
                ++report.checked;
                if (rec.match) {
                    ++report.matched;
                } else {
                    ++report.mismatched;
                    rec.witnesses = res.partitions;
                    if (!report.first_mismatch) report.first_mismatch = std::array<int, 3>{d, r, s};
                }
                report.records.push_back(std::move(rec));
            }
        }
    }
    report.total_wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - sweep_start)
            .count();
    return report;
}

inline Json json_of_verification(const VerificationReport& report) {
    Json j;
    j["d_max"] = report.d_max;
    j["s_max"] = report.s_max;
    j["engine"] = report.engine;
    Json records = Json::array();
    for (const auto& rec : report.records) {
        Json e;
        e["d"] = rec.d;
        e["r"] = rec.r;
        e["s"] = rec.s;
        e["enumerated"] = rec.enumerated;
        e["predicted"] = rec.predicted;
        e["match"] = rec.match;
        e["wall_ms"] = rec.wall_ms;
        if (!rec.match) {
            Json w = Json::array();
            for (const auto& p : rec.witnesses) w.push_back(json_of_partition(p));
            e["witnesses"] = w;
        }
        records.push_back(std::move(e));
    }
    j["records"] = records;
    Json summary;
    summary["checked"] = report.checked;
    summary["matched"] = report.matched;
    summary["mismatched"] = report.mismatched;
    if (report.first_mismatch) {
        const auto& fm = *report.first_mismatch;
        summary["first_mismatch"] = Json{{"d", fm[0]}, {"r", fm[1]}, {"s", fm[2]}};
    } else {
        summary["first_mismatch"] = nullptr;
    }
    summary["total_wall_ms"] = report.total_wall_ms;
    j["summary"] = summary;
    return j;
}

inline std::string format_verification(const VerificationReport& report) {
    std::ostringstream out;
    out << "conjecture check: 1 <= d <= " << report.d_max << ", 1 <= r <= d, 1 <= s <= "
        << report.s_max << " (engine " << report.engine << ")\n";
    out << "checked " << report.checked << " cells: " << report.matched << " matched, "
        << report.mismatched << " mismatched (" << report.total_wall_ms << " ms)\n";
    for (const auto& rec : report.records) {
        if (rec.match) continue;
        out << "MISMATCH d=" << rec.d << " r=" << rec.r << " s=" << rec.s << ": enumerated "
            << rec.enumerated << ", predicted " << rec.predicted << "; witnesses:";
        for (const auto& p : rec.witnesses) out << ' ' << to_brace_string(p);
        out << '\n';
    }
    if (report.first_mismatch) {
        const auto& fm = *report.first_mismatch;
        out << "first mismatch at d=" << fm[0] << " r=" << fm[1] << " s=" << fm[2] << '\n';
    }
    return out.str();
}

} // namespace corepart
