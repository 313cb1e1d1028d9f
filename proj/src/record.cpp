#include "hvector/record.hpp"

#include "hvector/error.hpp"

namespace hvector {

OutputRecord make_flag_record(std::string input, const FlagVector& f) {
  OutputRecord r;
  r.input = std::move(input);
  r.dim = f.dim();
  for (DimSet s : all_dimsets(f.dim())) r.flag.emplace_back(s.elements(), f.get(s));
  return r;
}

OutputRecord make_record(std::string input, const FlagVector& f, const KeyedPoly& h,
                         const HPoly& toric) {
  OutputRecord r = make_flag_record(std::move(input), f);
  r.h.emplace();
  r.h->emplace_back("e", h.component(Key()).coeffs());
  for (const auto& [k, p] : h.terms()) {
    if (!k.is_empty()) r.h->emplace_back(k.to_string(), p.coeffs());
  }
  r.toric = toric.coeffs();
  return r;
}

nlohmann::ordered_json to_json(const OutputRecord& r) {
  nlohmann::ordered_json j;
  j["input"] = r.input;
  j["dim"] = r.dim;
  auto flag = nlohmann::ordered_json::array();
  for (const auto& [set, value] : r.flag) flag.push_back({set, value});
  j["flag"] = std::move(flag);
  if (r.h) {
    auto h = nlohmann::ordered_json::array();
    for (const auto& [key, coeffs] : *r.h) h.push_back({key, coeffs});
    j["h"] = std::move(h);
  }
  if (r.toric) j["toric"] = *r.toric;
  return j;
}

namespace {

bool is_int_array(const nlohmann::json& j) {
  if (!j.is_array()) return false;
  for (const auto& v : j) {
    if (!v.is_number_integer()) return false;
  }
  return true;
}

}  // namespace

bool matches_record_schema(const nlohmann::json& j) {
  if (!j.is_object()) return false;
  for (const auto& [name, value] : j.items()) {
    if (name != "input" && name != "dim" && name != "flag" && name != "h" && name != "toric") {
      return false;
    }
  }
  if (!j.contains("input") || !j["input"].is_string()) return false;
  if (!j.contains("dim") || !j["dim"].is_number_integer()) return false;
  if (!j.contains("flag") || !j["flag"].is_array()) return false;
  for (const auto& entry : j["flag"]) {
    if (!entry.is_array() || entry.size() != 2 || !is_int_array(entry[0]) ||
        !entry[1].is_number_integer()) {
      return false;
    }
  }
  if (j.contains("h")) {
    if (!j["h"].is_array()) return false;
    for (const auto& entry : j["h"]) {
      if (!entry.is_array() || entry.size() != 2 || !entry[0].is_string() ||
          !is_int_array(entry[1])) {
        return false;
      }
    }
  }
  if (j.contains("toric") && !is_int_array(j["toric"])) return false;
  return true;
}

OutputRecord record_from_json(const nlohmann::json& j) {
  if (!matches_record_schema(j)) throw DomainError("JSON does not match the record schema");
  OutputRecord r;
  r.input = j["input"].get<std::string>();
  r.dim = j["dim"].get<int>();
  for (const auto& entry : j["flag"]) {
    r.flag.emplace_back(entry[0].get<std::vector<int>>(), entry[1].get<std::int64_t>());
  }
  if (j.contains("h")) {
    r.h.emplace();
    for (const auto& entry : j["h"]) {
      r.h->emplace_back(entry[0].get<std::string>(), entry[1].get<std::vector<std::int64_t>>());
    }
  }
  if (j.contains("toric")) r.toric = j["toric"].get<std::vector<std::int64_t>>();
  return r;
}

KeyedPoly record_h(const OutputRecord& r) {
  if (!r.h) throw DomainError("record has no h field");
  KeyedPoly out(r.dim);
  for (const auto& [key, coeffs] : *r.h) out.add(Key::parse(key), HPoly(coeffs));
  return out;
}

FlagVector record_flag(const OutputRecord& r) {
  FlagVector::Entries entries;
  for (const auto& [set, value] : r.flag) entries.emplace(DimSet::from_elements(set), value);
  return FlagVector(r.dim, std::move(entries));
}

}  // namespace hvector
