#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "bicyclic/core.hpp"
#include "bicyclic/families.hpp"
#include "bicyclic/report.hpp"

// Config ingestion: family descriptions from declarative JSON documents or
// compact "kind:k:X" strings, window syntax, and element parsing.

namespace bicyclic {

inline json indexset_to_json(const IndexSet& x) {
  json j{{"prefix", x.prefix}};
  if (x.tail) {
    j["tail"] = json{{"start", x.tail->start}, {"step", x.tail->step}};
  } else {
    j["tail"] = nullptr;
  }
  return j;
}

inline IndexSet ingest_indexset(const json& doc) {
  IndexSet out;
  if (doc.is_string()) {
    const std::string name = doc.get<std::string>();
    if (name == "evens") return evens();
    if (name == "odds") return odds();
    if (name == "squares16") return squares16();
    throw std::invalid_argument("unknown index-set preset: " + name);
  }
  for (const auto& v : doc.at("prefix")) {
    out.prefix.push_back(v.get<long long>());
  }
  if (doc.contains("tail") && !doc.at("tail").is_null()) {
    out.tail = IndexSet::Tail{doc.at("tail").at("start").get<long long>(),
                              doc.at("tail").at("step").get<long long>()};
  }
  out.validate();
  return out;
}

inline Family ingest_family(const json& doc) {
  const std::string kind = doc.at("kind").get<std::string>();
  auto level = [&]() { return doc.at("k").get<long long>(); };
  auto xset = [&]() { return ingest_indexset(doc.at("X")); };
  Family f;
  if (kind == "cplus") {
    f = family_cplus();
  } else if (kind == "cminus") {
    f = family_cminus();
  } else if (kind == "cplusk") {
    f = family_cplusk(level());
  } else if (kind == "cpluskx") {
    f = family_cpluskx(level(), xset());
  } else if (kind == "cminuskx") {
    f = family_cminuskx(level(), xset());
  } else if (kind == "czplus") {
    f = family_czplus();
  } else if (kind == "czminus") {
    f = family_czminus();
  } else if (kind == "czshift") {
    f = family_czshift(level());
  } else if (kind == "czpluskx") {
    f = family_czpluskx(level(), xset());
  } else if (kind == "ex37") {
    f = family_ex37();
  } else if (kind == "ltilde") {
    f = family_ltilde(doc.at("i0").get<long long>());
  } else {
    throw std::invalid_argument("unknown family kind: " + kind);
  }
  f.validate();
  return f;
}

inline json family_to_json(const Family& f) {
  json j;
  switch (f.kind) {
    case FamilyKind::CPlus: j["kind"] = "cplus"; break;
    case FamilyKind::CMinus: j["kind"] = "cminus"; break;
    case FamilyKind::CPlusK: j["kind"] = "cplusk"; j["k"] = f.k; break;
    case FamilyKind::CPlusKX: j["kind"] = "cpluskx"; break;
    case FamilyKind::CMinusKX: j["kind"] = "cminuskx"; break;
    case FamilyKind::CZPlus: j["kind"] = "czplus"; break;
    case FamilyKind::CZMinus: j["kind"] = "czminus"; break;
    case FamilyKind::CZPlusShift: j["kind"] = "czshift"; j["k"] = f.k; break;
    case FamilyKind::CZPlusKX: j["kind"] = "czpluskx"; break;
    case FamilyKind::Ex37: j["kind"] = "ex37"; break;
    case FamilyKind::LTilde: j["kind"] = "ltilde"; j["i0"] = f.k; break;
  }
  if (f.kind == FamilyKind::CPlusKX || f.kind == FamilyKind::CMinusKX ||
      f.kind == FamilyKind::CZPlusKX) {
    j["k"] = f.k;
    j["X"] = indexset_to_json(f.index_set());
  }
  return j;
}

// Compact spec strings: "cpluskx:1:evens", "czshift:-1", "ltilde:0", or a
// raw JSON document.
inline Family parse_family(const std::string& spec) {
  if (!spec.empty() && spec.front() == '{') {
    return ingest_family(json::parse(spec));
  }
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  std::string part;
  while (std::getline(ss, part, ':')) parts.push_back(part);
  if (parts.empty()) throw std::invalid_argument("empty family spec");
  json doc{{"kind", parts[0]}};
  if (parts[0] == "ltilde") {
    if (parts.size() != 2) throw std::invalid_argument("ltilde:<i0>");
    doc["i0"] = std::stoll(parts[1]);
  } else if (parts.size() >= 2) {
    doc["k"] = std::stoll(parts[1]);
  }
  if (parts.size() >= 3) doc["X"] = parts[2];
  return ingest_family(doc);
}

// Window syntax: "a..b" or "a..b,c..d", inclusive.
inline Box parse_window(const std::string& spec) {
  auto parse_range = [](const std::string& s) -> std::pair<long long, long long> {
    const auto pos = s.find("..");
    if (pos == std::string::npos) {
      throw std::invalid_argument("window range must look like a..b");
    }
    return {std::stoll(s.substr(0, pos)), std::stoll(s.substr(pos + 2))};
  };
  const auto comma = spec.find(',');
  if (comma == std::string::npos) {
    const auto [lo, hi] = parse_range(spec);
    return Box{lo, hi, lo, hi};
  }
  const auto [lo1, hi1] = parse_range(spec.substr(0, comma));
  const auto [lo2, hi2] = parse_range(spec.substr(comma + 1));
  return Box{lo1, hi1, lo2, hi2};
}

// "i,j" element syntax.
inline Elem parse_elem(Domain d, const std::string& spec) {
  const auto comma = spec.find(',');
  if (comma == std::string::npos) {
    throw std::invalid_argument("element must look like i,j");
  }
  return elem(d, std::stoll(spec.substr(0, comma)),
              std::stoll(spec.substr(comma + 1)));
}

inline bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

}  // namespace bicyclic
