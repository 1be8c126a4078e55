#include "qpd/report.hpp"

#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "qpd/angle.hpp"

namespace qpd {

Json to_json(const PayoffTriple& t) {
  return Json{{"alice", t.alice}, {"bob", t.bob}, {"charlie", t.charlie}};
}

Json to_json(const StrategyParams& p) {
  return Json{{"theta", p.theta()}, {"alpha", p.alpha()}, {"beta", p.beta()}};
}

Json to_json(const Profile& p) {
  return Json{{"alice", to_json(p.alice)}, {"bob", to_json(p.bob)}, {"charlie", to_json(p.charlie)}};
}

Json to_json(const PayoffTable& t) {
  Json out = Json::object();
  for (std::size_t b = 0; b < kOutcomes; ++b) {
    out[outcome_label(b)] = Json::array({t[b].alice, t[b].bob, t[b].charlie});
  }
  return out;
}

Json to_json(const GridSpec& g) {
  return Json{{"theta_points", g.theta_points},
              {"alpha_points", g.alpha_points},
              {"beta_points", g.beta_points}};
}

Json to_json(const Verdict& v) {
  return Json{{"name", v.name},
              {"passed", v.passed},
              {"hard", v.hard},
              {"measured", v.measured},
              {"detail", v.detail}};
}

Json to_json(const EquilibriumReport& r) {
  Json best = Json::object();
  Json gaps = Json::object();
  for (Player k : kPlayers) {
    const auto i = static_cast<std::size_t>(k);
    gaps[std::string(player_name(k))] = r.gaps[i];
    best[std::string(player_name(k))] = to_json(r.best_deviation[i]);
  }
  return Json{{"case", case_label(r.payoff_case)},
              {"gamma", r.gamma},
              {"delta", r.delta},
              {"profile", to_json(r.profile)},
              {"payoffs", to_json(r.payoffs)},
              {"best_response_gap", gaps},
              {"best_deviation", best},
              {"tol", r.tol},
              {"grid_nash", r.is_nash}};
}

Json to_json(const FourCaseScan& scan) {
  Json cases = Json::array();
  for (const auto& c : scan.cases) {
    Json entries = Json::array();
    for (const auto& e : c.entries) {
      entries.push_back(Json{{"theta", e.theta_label}, {"report", to_json(e.report)}});
    }
    cases.push_back(Json{{"case", case_label(c.payoff_case)}, {"profiles", entries}});
  }
  Json verdicts = Json::array();
  for (const auto& v : scan.verdicts) verdicts.push_back(to_json(v));
  return Json{{"opponent_phases", opponent_phases_name(scan.phases)},
              {"tol", scan.tol},
              {"cases", cases},
              {"verdicts", verdicts}};
}

Json to_json(const ComparisonReport& r, bool include_samples) {
  Json out{{"reference", r.reference_name},
           {"candidate", r.candidate_name},
           {"region", region_name(r.region)},
           {"seed", r.seed},
           {"sample_count", r.samples.size()},
           {"max_abs_diff", r.max_abs_diff},
           {"mean_abs_diff", r.mean_abs_diff}};
  if (include_samples) {
    Json samples = Json::array();
    for (const auto& s : r.samples) {
      samples.push_back(Json{{"gamma", s.gamma},
                             {"delta", s.delta},
                             {"profile", to_json(s.profile)},
                             {"reference", to_json(s.reference)},
                             {"candidate", to_json(s.candidate)},
                             {"diff", to_json(s.diff)}});
    }
    out["samples"] = samples;
  }
  return out;
}

Json to_json(const ProtocolTable& t) {
  Json rows = Json::array();
  for (std::size_t row = 0; row < 4; ++row) {
    for (std::size_t col = 0; col < kColumns; ++col) {
      const ColumnMove m = column_move(col);
      rows.push_back(Json{{"codeword", codewords()[row].bits},
                          {"alice_operation", codewords()[row].label},
                          {"theta_bob", m.theta_bob},
                          {"theta_charlie", m.theta_charlie},
                          {"payoffs", to_json(t.entries[row][col])}});
    }
  }
  Json out{{"name", t.name}, {"provenance", provenance_name(t.provenance)}};
  out["gamma"] = t.gamma ? Json(*t.gamma) : Json(nullptr);
  out["delta"] = t.delta ? Json(*t.delta) : Json(nullptr);
  out["entries"] = rows;
  return out;
}

Json to_json(const TableComparison& c) {
  Json rows = Json::array();
  for (std::size_t row = 0; row < 4; ++row) {
    for (std::size_t col = 0; col < kColumns; ++col) {
      rows.push_back(Json{{"codeword", codewords()[row].bits},
                          {"column", column_label(col)},
                          {"oracle_minus_fixture", to_json(c.diff[row][col])}});
    }
  }
  return Json{{"fixture", c.fixture},
              {"gamma", c.gamma},
              {"delta", c.delta},
              {"max_abs_diff", c.max_abs_diff},
              {"mismatched_entries", c.mismatched_entries},
              {"entries", rows}};
}

Json to_json(const DecodeResult& d) {
  Json cands = Json::array();
  for (std::size_t i : d.candidates) {
    cands.push_back(Json{{"codeword", codewords()[i].bits}, {"alice_operation", codewords()[i].label}});
  }
  return Json{{"candidates", cands}, {"bits_resolved", d.bits_resolved}};
}

Json to_json(const InfoRelation& r) {
  Json verdicts = Json::array();
  for (const auto& v : r.verdicts) verdicts.push_back(to_json(v));
  return Json{{"source", r.source},
              {"visibility", visibility_name(r.model.visibility)},
              {"rounding", r.model.rounding},
              {"I_PP", r.info[0]},
              {"I_PE", r.info[1]},
              {"I_EP", r.info[2]},
              {"I_EE", r.info[3]},
              {"verdicts", verdicts}};
}

PayoffTable payoff_table_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw std::invalid_argument("payoff table: expected a JSON object");
  if (doc.size() != kOutcomes) {
    throw std::invalid_argument("payoff table: expected exactly 8 outcome keys, got " +
                                std::to_string(doc.size()));
  }
  std::array<PayoffTriple, kOutcomes> entries{};
  std::array<bool, kOutcomes> seen{};
  for (const auto& [key, value] : doc.items()) {
    const std::size_t b = outcome_index(key);
    if (!value.is_array() || value.size() != 3) {
      throw std::invalid_argument("payoff table: '" + key + "' must map to a 3-element array");
    }
    for (const auto& x : value) {
      if (!x.is_number()) {
        throw std::invalid_argument("payoff table: '" + key + "' contains a non-number");
      }
    }
    entries[b] = {value[0].get<double>(), value[1].get<double>(), value[2].get<double>()};
    seen[b] = true;
  }
  for (std::size_t b = 0; b < kOutcomes; ++b) {
    if (!seen[b]) throw std::invalid_argument("payoff table: missing outcome " + outcome_label(b));
  }
  return PayoffTable(entries);
}

PayoffTable load_payoff_table(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open payoff table '" + path.string() + "'");
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument("payoff table '" + path.string() + "': " + e.what());
  }
  return payoff_table_from_json(doc);
}

std::string protocol_table_csv(const ProtocolTable& table,
                               const std::optional<ProtocolTable>& fixture) {
  std::ostringstream out;
  out << "codeword,alice_operation,theta_bob,theta_charlie,alice,bob,charlie";
  if (fixture) {
    out << ",fixture_alice,fixture_bob,fixture_charlie,diff_alice,diff_bob,diff_charlie";
  }
  out << '\n';
  for (std::size_t row = 0; row < 4; ++row) {
    for (std::size_t col = 0; col < kColumns; ++col) {
      const ColumnMove m = column_move(col);
      const PayoffTriple& v = table.entries[row][col];
      out << codewords()[row].bits << ',' << codewords()[row].label << ','
          << (m.theta_bob == 0.0 ? "0" : "pi") << ',' << (m.theta_charlie == 0.0 ? "0" : "pi")
          << ',' << format_double(v.alice) << ',' << format_double(v.bob) << ','
          << format_double(v.charlie);
      if (fixture) {
        const PayoffTriple& f = fixture->entries[row][col];
        out << ',' << format_double(f.alice) << ',' << format_double(f.bob) << ','
            << format_double(f.charlie) << ',' << format_double(v.alice - f.alice) << ','
            << format_double(v.bob - f.bob) << ',' << format_double(v.charlie - f.charlie);
      }
      out << '\n';
    }
  }
  return out.str();
}

std::string payoff_table_csv(const PayoffTable& table) {
  std::ostringstream out;
  out << "outcome,alice,bob,charlie\n";
  for (std::size_t b = 0; b < kOutcomes; ++b) {
    out << outcome_label(b) << ',' << format_double(table[b].alice) << ','
        << format_double(table[b].bob) << ',' << format_double(table[b].charlie) << '\n';
  }
  return out.str();
}

void write_atomic(const std::filesystem::path& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path dir = path.has_parent_path() ? path.parent_path() : fs::path(".");
  std::random_device rd;
  const fs::path tmp = dir / ("." + path.filename().string() + ".tmp" + std::to_string(rd()));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write '" + tmp.string() + "'");
    out << content;
    out.flush();
    if (!out) {
      out.close();
      fs::remove(tmp);
      throw std::runtime_error("write failed for '" + tmp.string() + "'");
    }
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp);
    throw std::runtime_error("cannot move report into place at '" + path.string() +
                             "': " + ec.message());
  }
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace qpd
