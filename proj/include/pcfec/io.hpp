// Result serialization: CSV rows and JSON documents, both embedding the
// resolved configuration and master seed for replay.
#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "pcfec/simkit.hpp"

namespace pcfec {

inline constexpr int kResultSchemaVersion = 1;

struct RunInfo {
    std::string kind; // "ber", "threshold", "sweep-t", "ncg"
    std::uint64_t seed = 0;
    std::vector<std::pair<std::string, std::string>> config; // resolved key/value pairs
};

// Header comments carry the resolved config; the column set is fixed.
void write_ber_csv(std::ostream& out, const RunInfo& info, const std::vector<BerPoint>& points);

nlohmann::json to_json(const BerPoint& p);
nlohmann::json to_json(const ThresholdResult& r);

// { schema_version, kind, seed, config, results }
nlohmann::json make_document(const RunInfo& info, nlohmann::json results);

void write_json_file(const std::string& path, const nlohmann::json& doc);
void write_csv_file(const std::string& path, const RunInfo& info,
                    const std::vector<BerPoint>& points);

} // namespace pcfec
