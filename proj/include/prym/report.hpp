#pragma once

#include "prym/errors.hpp"
#include "prym/f2.hpp"
#include "prym/int_mat.hpp"
#include "prym/involution.hpp"

#include "json.hpp"

#include <string>

namespace prym {

inline constexpr int kSchemaVersion = 1;

using Json = nlohmann::json; // std::map-backed: keys serialize sorted

// JSON number when the value fits in 64 bits, decimal string otherwise.
Json integer_json(const Integer& v);

// Exact value of num/2 as a reduced decimal or fraction string: "0", "2",
// "1/2", "-3/2".
std::string half_coord(const Integer& num);

Json half_vec_json(const HalfVec& v);
Json f2_mat_json(const F2Mat& m);
Json bits_json(const std::vector<std::uint8_t>& bits);

Json error_report(const Error& e);

// Report envelope: payload plus schema_version, serialized with a fixed
// indent so equal reports are byte-identical.
std::string dump_report(Json payload);

} // namespace prym
