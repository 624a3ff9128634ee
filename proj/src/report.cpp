#include "unimod/report.hpp"

#include <sstream>

namespace unimod {

void Report::add_pass(const std::string& id, const std::string& statement,
                      const std::string& detail) {
  add(CheckRecord{id, statement, "pass", std::nullopt, std::nullopt, detail});
}

void Report::add_fail(const std::string& id, const std::string& statement,
                      const std::string& detail) {
  add(CheckRecord{id, statement, "fail", std::nullopt, std::nullopt, detail});
}

void Report::add_info(const std::string& id, const std::string& statement,
                      const std::string& detail) {
  add(CheckRecord{id, statement, "info", std::nullopt, std::nullopt, detail});
}

void Report::add_bool(const std::string& id, const std::string& statement, bool pass,
                      const std::string& detail) {
  pass ? add_pass(id, statement, detail) : add_fail(id, statement, detail);
}

void Report::absorb(const LemmaReport& lemma, const std::string& statement) {
  std::string detail = std::to_string(lemma.cases.size() - lemma.fail_count()) + "/" +
                       std::to_string(lemma.cases.size()) + " cases";
  if (!lemma.all_pass()) {
    detail += "; failing:";
    int listed = 0;
    for (const auto& c : lemma.cases) {
      if (c.pass) continue;
      if (listed == 10) {
        detail += " ...";
        break;
      }
      detail += " " + c.id;
      ++listed;
    }
  }
  add_bool(lemma.id, statement, lemma.all_pass(), detail);
}

void Report::merge(const Report& other, const std::string& prefix) {
  for (CheckRecord record : other.checks) {
    record.id = prefix + record.id;
    checks.push_back(std::move(record));
  }
  for (const auto& convention : other.conventions) {
    bool present = false;
    for (const auto& existing : conventions)
      if (existing.id == convention.id) present = true;
    if (!present) conventions.push_back(convention);
  }
}

int Report::count(const std::string& status) const {
  int n = 0;
  for (const auto& c : checks)
    if (c.status == status) ++n;
  return n;
}

Json Report::to_json() const {
  Json out = Json::object();
  out["subcommand"] = subcommand;
  out["config"] = config;
  Json check_array = Json::array();
  for (const auto& c : checks) {
    Json item = Json::object();
    item["id"] = c.id;
    item["statement"] = c.statement;
    item["status"] = c.status;
    if (c.deviation) item["deviation"] = *c.deviation;
    if (c.tolerance) item["tolerance"] = *c.tolerance;
    if (!c.detail.empty()) item["detail"] = c.detail;
    check_array.push_back(std::move(item));
  }
  out["checks"] = std::move(check_array);
  Json convention_array = Json::array();
  for (const auto& c : conventions) {
    Json item = Json::object();
    item["id"] = c.id;
    item["resolved"] = c.resolved;
    item["note"] = c.note;
    item["verified"] = c.verified;
    convention_array.push_back(std::move(item));
  }
  out["conventions"] = std::move(convention_array);
  Json summary = Json::object();
  summary["pass"] = count("pass");
  summary["fail"] = count("fail");
  summary["flagged"] = count("flagged");
  summary["info"] = count("info");
  summary["ok"] = ok();
  out["summary"] = std::move(summary);
  return out;
}

std::string Report::to_text() const {
  std::ostringstream out;
  out << "== " << subcommand << " ==\n";
  out << "config: " << config.dump() << "\n\n";
  for (const auto& c : checks) {
    out << "[" << c.status << "] " << c.id;
    if (c.deviation) out << "  dev=" << Json(*c.deviation).dump();
    if (c.tolerance) out << " tol=" << Json(*c.tolerance).dump();
    if (!c.detail.empty()) out << "  (" << c.detail << ")";
    out << "\n    " << c.statement << "\n";
  }
  if (!conventions.empty()) {
    out << "\nresolved conventions:\n";
    for (const auto& c : conventions) {
      out << "  [" << (c.verified ? "verified" : "UNVERIFIED") << "] " << c.id << ": " << c.resolved
          << "\n    " << c.note << "\n";
    }
  }
  out << "\nsummary: pass=" << count("pass") << " fail=" << count("fail")
      << " flagged=" << count("flagged") << " info=" << count("info")
      << " -> " << (ok() ? "OK" : "FAILED") << "\n";
  return out.str();
}

std::string Report::render(const std::string& format) const {
  if (format == "structured") return to_json().dump(2) + "\n";
  return to_text();
}

}  // namespace unimod
