#pragma once

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "qdf/rational.hpp"

namespace qdf {

enum class Status { Pass, Fail, Inconclusive, Axiom };

inline const char* status_str(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Inconclusive: return "inconclusive";
    case Status::Axiom: return "axiom";
  }
  return "?";
}

/// One verification record. Status is pass exactly when expected equals
/// computed; recorded facts are surfaced with status axiom, never consumed
/// silently. `millis` is -1 unless timing was requested (timed output is
/// not byte-stable, so it is opt-in).
struct VerificationReport {
  std::string id;
  std::string citation;
  std::string expected;
  std::string computed;
  std::string provenance;  // paper | trivial | derived | axiom
  Status status = Status::Fail;
  long long millis = -1;
};

inline VerificationReport check(std::string id, std::string citation, std::string provenance,
                                std::string expected, std::string computed) {
  VerificationReport r;
  r.id = std::move(id);
  r.citation = std::move(citation);
  r.provenance = std::move(provenance);
  r.expected = std::move(expected);
  r.computed = std::move(computed);
  r.status = (r.expected == r.computed) ? Status::Pass : Status::Fail;
  return r;
}

inline VerificationReport axiom_record(std::string id, std::string citation,
                                       std::string statement) {
  VerificationReport r;
  r.id = std::move(id);
  r.citation = std::move(citation);
  r.provenance = "axiom";
  r.expected = statement;
  r.computed = "recorded fact, consumed as stated";
  r.status = Status::Axiom;
  return r;
}

inline VerificationReport inconclusive_record(std::string id, std::string citation,
                                              std::string expected, std::string computed) {
  VerificationReport r;
  r.id = std::move(id);
  r.citation = std::move(citation);
  r.provenance = "derived";
  r.expected = std::move(expected);
  r.computed = std::move(computed);
  r.status = Status::Inconclusive;
  return r;
}

inline bool any_failed(const std::vector<VerificationReport>& rs) {
  return std::any_of(rs.begin(), rs.end(),
                     [](const VerificationReport& r) { return r.status == Status::Fail; });
}

/// Stable order for merged suites: lexicographic in the check id.
inline void sort_by_id(std::vector<VerificationReport>& rs) {
  std::stable_sort(rs.begin(), rs.end(),
                   [](const VerificationReport& a, const VerificationReport& b) {
                     return a.id < b.id;
                   });
}

inline std::string to_table(const std::vector<VerificationReport>& rs, bool timings = false) {
  std::size_t wid = 4;
  for (const auto& r : rs) wid = std::max(wid, r.id.size());
  std::ostringstream os;
  for (const auto& r : rs) {
    os << std::left << std::setw(6) << ("[" + std::string(status_str(r.status)) + "]")
       << " " << std::setw(static_cast<int>(wid)) << r.id << "  expected " << r.expected
       << "  |  computed " << r.computed << "  (" << r.provenance << "; " << r.citation << ")";
    if (timings && r.millis >= 0) os << "  " << r.millis << "ms";
    os << "\n";
  }
  int pass = 0, fail = 0, axio = 0, inc = 0;
  for (const auto& r : rs) {
    switch (r.status) {
      case Status::Pass: ++pass; break;
      case Status::Fail: ++fail; break;
      case Status::Axiom: ++axio; break;
      case Status::Inconclusive: ++inc; break;
    }
  }
  os << pass << " passed, " << fail << " failed, " << axio << " axioms, " << inc
     << " inconclusive\n";
  return os.str();
}

inline nlohmann::ordered_json to_json_record(const VerificationReport& r, bool timings) {
  nlohmann::ordered_json j;
  j["id"] = r.id;
  j["citation"] = r.citation;
  j["expected"] = r.expected;
  j["computed"] = r.computed;
  j["provenance"] = r.provenance;
  j["status"] = status_str(r.status);
  if (timings && r.millis >= 0) j["millis"] = r.millis;
  return j;
}

/// Aggregate document: {records: [...], summary: {...}}.
inline std::string to_json(const std::vector<VerificationReport>& rs, bool timings = false) {
  nlohmann::ordered_json doc;
  doc["records"] = nlohmann::ordered_json::array();
  int pass = 0, fail = 0, axio = 0, inc = 0;
  for (const auto& r : rs) {
    doc["records"].push_back(to_json_record(r, timings));
    switch (r.status) {
      case Status::Pass: ++pass; break;
      case Status::Fail: ++fail; break;
      case Status::Axiom: ++axio; break;
      case Status::Inconclusive: ++inc; break;
    }
  }
  doc["summary"] = {{"pass", pass}, {"fail", fail}, {"axiom", axio}, {"inconclusive", inc}};
  return doc.dump(2) + "\n";
}

/// Line-delimited records, one JSON object per line.
inline std::string to_jsonl(const std::vector<VerificationReport>& rs, bool timings = false) {
  std::ostringstream os;
  for (const auto& r : rs) os << to_json_record(r, timings).dump() << "\n";
  return os.str();
}

}  // namespace qdf
