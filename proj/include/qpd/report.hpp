#pragma once

// Structured output: JSON documents (rows as records), CSV exports of payoff
// grids, payoff-table config ingestion and atomic file writes.

#include <filesystem>
#include <string>
#include <optional>

#include "json.hpp"
#include "qpd/closed_form.hpp"
#include "qpd/comms.hpp"
#include "qpd/equilibrium.hpp"
#include "qpd/game.hpp"

namespace qpd {

using Json = nlohmann::ordered_json;

Json to_json(const PayoffTriple& t);
Json to_json(const StrategyParams& p);
Json to_json(const Profile& p);
Json to_json(const PayoffTable& t);
Json to_json(const GridSpec& g);
Json to_json(const Verdict& v);
Json to_json(const EquilibriumReport& r);
Json to_json(const FourCaseScan& scan);
Json to_json(const ComparisonReport& r, bool include_samples);
Json to_json(const ProtocolTable& t);
Json to_json(const TableComparison& c);
Json to_json(const DecodeResult& d);
Json to_json(const InfoRelation& r);

// Schema: an object with exactly the keys "000" ... "111", each mapping to a
// 3-element array of finite numbers (Alice, Bob, Charlie). Throws
// std::invalid_argument on any deviation.
PayoffTable payoff_table_from_json(const nlohmann::json& doc);
PayoffTable load_payoff_table(const std::filesystem::path& path);

// Delimited-table exports.
std::string protocol_table_csv(const ProtocolTable& table,
                               const std::optional<ProtocolTable>& fixture);
std::string payoff_table_csv(const PayoffTable& table);

// Writes to a sibling temporary file and renames it into place, so the target
// either keeps its old content or holds the complete new content.
void write_atomic(const std::filesystem::path& path, const std::string& content);

// Canonical serialization used for every report file (2-space indent, trailing newline).
std::string dump(const Json& doc);

}  // namespace qpd
