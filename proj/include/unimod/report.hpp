#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "unimod/lemmas.hpp"

namespace unimod {

using Json = nlohmann::ordered_json;

struct CheckRecord {
  std::string id;
  std::string statement;
  std::string status;  // pass | fail | flagged | info
  std::optional<double> deviation;
  std::optional<double> tolerance;
  std::string detail;
};

struct Report {
  std::string subcommand;
  Json config = Json::object();
  std::vector<CheckRecord> checks;
  std::vector<ConventionRecord> conventions;

  void add(CheckRecord record) { checks.push_back(std::move(record)); }
  void add_pass(const std::string& id, const std::string& statement, const std::string& detail = "");
  void add_fail(const std::string& id, const std::string& statement, const std::string& detail = "");
  void add_info(const std::string& id, const std::string& statement, const std::string& detail = "");
  void add_bool(const std::string& id, const std::string& statement, bool pass,
                const std::string& detail = "");
  /// One summary record per lemma report; failing case ids are listed in the
  /// detail.
  void absorb(const LemmaReport& lemma, const std::string& statement);
  void merge(const Report& other, const std::string& prefix);

  int count(const std::string& status) const;
  bool ok() const { return count("fail") == 0; }

  Json to_json() const;
  std::string to_text() const;
  std::string render(const std::string& format) const;  // "text" | "structured"
};

}  // namespace unimod
