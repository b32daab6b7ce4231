#pragma once

#include <string>

#include <json.hpp>

#include "bicyclic/core.hpp"

// Machine-readable verdicts.  nlohmann::json objects keep their keys
// sorted, so serialized reports are byte-stable for identical inputs.

namespace bicyclic {

using json = nlohmann::json;

enum class Status { Pass, Fail, InfiniteOutcome };

inline const char* status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::InfiniteOutcome: return "infinite-outcome";
  }
  return "unknown";
}

inline json elem_to_json(const Elem& e) {
  return json{{"domain", domain_name(e.domain)}, {"i", e.first}, {"j", e.second}};
}

inline json box_to_json(const Box& b) {
  return json{{"lo1", b.lo1}, {"hi1", b.hi1}, {"lo2", b.lo2}, {"hi2", b.hi2}};
}

inline json elems_to_json(const std::vector<Elem>& es) {
  json a = json::array();
  for (const Elem& e : es) a.push_back(elem_to_json(e));
  return a;
}

struct CertReport {
  std::string check_name;
  Status status = Status::Pass;
  json witnesses = json::array();
  json params = json::object();
  double elapsed_ms = 0.0;

  explicit CertReport(std::string name = "") : check_name(std::move(name)) {}

  bool passed() const { return status == Status::Pass; }

  json to_json() const {
    return json{{"check", check_name},
                {"status", status_name(status)},
                {"witnesses", witnesses},
                {"params", params}};
  }
};

}  // namespace bicyclic
