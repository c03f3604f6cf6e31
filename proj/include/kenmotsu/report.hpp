#pragma once

// Verification reports: one record per identity or theorem check.
//
// Each record carries the observed outcome and the outcome it is expected to
// have. A printed formula that is known to be wrong is expected to fail; when
// it does, the record's status is "erratum" rather than "fail". The report
// is ok iff no record has status "fail".

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "kenmotsu/printer.hpp"
#include "kenmotsu/tensor.hpp"

namespace kenmotsu {

enum class Outcome { holds, fails, not_applicable };

inline std::string outcome_name(Outcome o) {
  switch (o) {
    case Outcome::holds: return "holds";
    case Outcome::fails: return "fails";
    case Outcome::not_applicable: return "not-applicable";
  }
  return "?";
}

inline Outcome outcome_from_name(const std::string& s) {
  if (s == "holds") return Outcome::holds;
  if (s == "fails") return Outcome::fails;
  if (s == "not-applicable") return Outcome::not_applicable;
  throw std::invalid_argument("unknown outcome '" + s + "'");
}

enum class Status { pass, fail, erratum, not_applicable };

inline std::string status_name(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::erratum: return "erratum";
    case Status::not_applicable: return "not-applicable";
  }
  return "?";
}

struct CheckRecord {
  std::string id;
  std::string anchor;  // the formula under test
  Outcome observed = Outcome::holds;
  Outcome expected = Outcome::holds;
  std::string residual = "0";     // first nonzero defect component
  std::vector<std::size_t> index;  // 1-based frame indices of that component
  std::string notes;

  Status status() const {
    if (observed != expected) return Status::fail;
    switch (observed) {
      case Outcome::holds: return Status::pass;
      case Outcome::fails: return Status::erratum;
      case Outcome::not_applicable: return Status::not_applicable;
    }
    return Status::fail;
  }

  bool ok() const { return status() != Status::fail; }

  friend bool operator==(const CheckRecord&, const CheckRecord&) = default;
};

// Flattened components of a tensor (or scalar) that should vanish.
struct Defect {
  std::vector<Expr> values;
  std::size_t dim = 0;
  std::size_t rank = 0;

  Defect() = default;
  Defect(const Expr& e) : values{e}, dim(1) {}
  template <int Up, int Down>
  Defect(const Tensor<Up, Down>& t) : values(t.components()), dim(t.dim()), rank(Up + Down) {}

  bool is_zero() const {
    for (const auto& v : values) {
      if (!v.is_zero()) return false;
    }
    return true;
  }

  // 1-based index of a flat position.
  std::vector<std::size_t> index(std::size_t flat) const {
    std::vector<std::size_t> idx(rank);
    for (std::size_t k = rank; k-- > 0;) {
      idx[k] = flat % dim + 1;
      flat /= dim;
    }
    return idx;
  }

  std::optional<std::size_t> first_nonzero() const {
    for (std::size_t k = 0; k < values.size(); ++k) {
      if (!values[k].is_zero()) return k;
    }
    return std::nullopt;
  }

  Defect substitute(const std::map<std::string, Expr>& bindings) const {
    Defect d = *this;
    for (auto& v : d.values) v = v.substitute(bindings);
    return d;
  }

  Defect operator-(const Defect& o) const {
    Defect d = *this;
    for (std::size_t k = 0; k < values.size(); ++k) d.values[k] -= o.values.at(k);
    return d;
  }
};

inline void fill_residual(CheckRecord& r, const Defect& defect) {
  if (auto bad = defect.first_nonzero()) {
    r.observed = Outcome::fails;
    r.residual = to_string(defect.values[*bad]);
    r.index = defect.index(*bad);
  } else {
    r.observed = Outcome::holds;
    r.residual = "0";
    r.index.clear();
  }
}

// Builds a record from a defect that should vanish identically.
inline CheckRecord defect_record(std::string id, std::string anchor, const Defect& defect,
                                 Outcome expected = Outcome::holds, std::string notes = {}) {
  CheckRecord r{std::move(id), std::move(anchor)};
  r.expected = expected;
  r.notes = std::move(notes);
  fill_residual(r, defect);
  return r;
}

struct ReportSummary {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t erratum = 0;
  std::size_t not_applicable = 0;

  std::size_t total() const { return pass + fail + erratum + not_applicable; }
  friend bool operator==(const ReportSummary&, const ReportSummary&) = default;
};

class VerificationReport {
 public:
  VerificationReport() = default;
  explicit VerificationReport(std::string subject) : subject_(std::move(subject)) {}

  const std::string& subject() const { return subject_; }
  void set_subject(std::string s) { subject_ = std::move(s); }

  // Parameter bindings the report was computed under ("symbolic" if free).
  const std::map<std::string, std::string>& parameters() const { return parameters_; }
  void set_parameter(const std::string& name, std::string value) { parameters_[name] = std::move(value); }

  void add(CheckRecord r) {
    auto pos = std::upper_bound(records_.begin(), records_.end(), r.id,
                                [](const std::string& id, const CheckRecord& x) { return id < x.id; });
    records_.insert(pos, std::move(r));
  }

  void merge(const VerificationReport& other) {
    for (const auto& r : other.records_) add(r);
  }

  const std::vector<CheckRecord>& records() const { return records_; }

  const CheckRecord* find(const std::string& id) const {
    for (const auto& r : records_) {
      if (r.id == id) return &r;
    }
    return nullptr;
  }

  ReportSummary summary() const {
    ReportSummary s;
    for (const auto& r : records_) {
      switch (r.status()) {
        case Status::pass: ++s.pass; break;
        case Status::fail: ++s.fail; break;
        case Status::erratum: ++s.erratum; break;
        case Status::not_applicable: ++s.not_applicable; break;
      }
    }
    return s;
  }

  bool ok() const { return summary().fail == 0; }

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;

 private:
  std::string subject_;
  std::map<std::string, std::string> parameters_;
  std::vector<CheckRecord> records_;
};

using ordered_json = nlohmann::ordered_json;

inline ordered_json to_json(const CheckRecord& r) {
  ordered_json j;
  j["id"] = r.id;
  j["anchor"] = r.anchor;
  j["status"] = status_name(r.status());
  j["observed"] = outcome_name(r.observed);
  j["expected"] = outcome_name(r.expected);
  j["residual"] = r.residual;
  j["index"] = r.index;
  j["notes"] = r.notes;
  return j;
}

inline ordered_json to_json(const VerificationReport& report) {
  ordered_json j;
  j["subject"] = report.subject();
  ordered_json params = ordered_json::object();
  for (const auto& [k, v] : report.parameters()) params[k] = v;
  j["parameters"] = params;
  ordered_json records = ordered_json::array();
  for (const auto& r : report.records()) records.push_back(to_json(r));
  j["records"] = records;
  const ReportSummary s = report.summary();
  j["summary"] = {{"total", s.total()},
                  {"pass", s.pass},
                  {"fail", s.fail},
                  {"erratum", s.erratum},
                  {"not-applicable", s.not_applicable}};
  return j;
}

inline CheckRecord record_from_json(const ordered_json& j) {
  CheckRecord r;
  r.id = j.at("id").get<std::string>();
  r.anchor = j.at("anchor").get<std::string>();
  r.observed = outcome_from_name(j.at("observed").get<std::string>());
  r.expected = outcome_from_name(j.at("expected").get<std::string>());
  r.residual = j.at("residual").get<std::string>();
  r.index = j.at("index").get<std::vector<std::size_t>>();
  r.notes = j.at("notes").get<std::string>();
  if (status_name(r.status()) != j.at("status").get<std::string>()) {
    throw std::invalid_argument("record '" + r.id + "': status disagrees with outcomes");
  }
  return r;
}

inline VerificationReport report_from_json(const ordered_json& j) {
  VerificationReport report(j.at("subject").get<std::string>());
  for (const auto& [k, v] : j.at("parameters").items()) report.set_parameter(k, v.get<std::string>());
  for (const auto& r : j.at("records")) report.add(record_from_json(r));
  return report;
}

inline std::string to_text(const VerificationReport& report) {
  std::ostringstream os;
  os << "report for " << report.subject();
  if (!report.parameters().empty()) {
    os << " (";
    bool first = true;
    for (const auto& [k, v] : report.parameters()) {
      os << (first ? "" : ", ") << k << " = " << v;
      first = false;
    }
    os << ')';
  }
  os << '\n';
  std::size_t width = 0;
  for (const auto& r : report.records()) width = std::max(width, r.id.size());
  for (const auto& r : report.records()) {
    std::string tag = status_name(r.status());
    os << tag << std::string(15 - tag.size(), ' ') << r.id << std::string(width - r.id.size() + 2, ' ')
       << r.anchor << '\n';
    if (r.observed == Outcome::fails) {
      os << "               residual";
      if (!r.index.empty()) {
        os << " at (";
        for (std::size_t k = 0; k < r.index.size(); ++k) os << (k ? "," : "") << r.index[k];
        os << ')';
      }
      os << ": " << r.residual << '\n';
    }
    if (!r.notes.empty()) os << "               note: " << r.notes << '\n';
  }
  const ReportSummary s = report.summary();
  os << s.total() << " checks: " << s.pass << " pass, " << s.fail << " fail, " << s.erratum << " erratum, "
     << s.not_applicable << " not applicable\n";
  return os.str();
}

}  // namespace kenmotsu
