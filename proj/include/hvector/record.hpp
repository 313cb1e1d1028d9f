#ifndef HVECTOR_RECORD_HPP
#define HVECTOR_RECORD_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "hvector/flag.hpp"
#include "hvector/hpoly.hpp"

namespace hvector {

// One evaluated input, as emitted by the CLI.
//
// JSON form:
//   {"input": str, "dim": int, "flag": [[[int...], int]...],
//    "h": [[keystr, [int...]]...], "toric": [int...]}
// "h" and "toric" are absent from flag-only records.  Every dimension
// set appears in "flag", zeros included, in canonical order; "h" lists
// keys in canonical order with the key e first.
struct OutputRecord {
  std::string input;
  int dim = 0;
  std::vector<std::pair<std::vector<int>, std::int64_t>> flag;
  std::optional<std::vector<std::pair<std::string, std::vector<std::int64_t>>>> h;
  std::optional<std::vector<std::int64_t>> toric;

  friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

OutputRecord make_flag_record(std::string input, const FlagVector& f);
OutputRecord make_record(std::string input, const FlagVector& f, const KeyedPoly& h,
                         const HPoly& toric);

nlohmann::ordered_json to_json(const OutputRecord& r);
// Throws DomainError when j does not match the record schema.
OutputRecord record_from_json(const nlohmann::json& j);
// True when j matches the record schema exactly (no extra fields).
bool matches_record_schema(const nlohmann::json& j);

// Rebuilds the keyed polynomial held in a record's "h" field.
KeyedPoly record_h(const OutputRecord& r);
FlagVector record_flag(const OutputRecord& r);

}  // namespace hvector

#endif  // HVECTOR_RECORD_HPP
