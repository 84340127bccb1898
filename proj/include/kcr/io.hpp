#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "kcr/families.hpp"
#include "kcr/spectral.hpp"

namespace kcr::io {

using nlohmann::json;

// Malformed input; the message names the offending field path.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kMaxSweepInstances = 1'000'000;

// {"rank", "colors": [{"kind": "D"|"T", "size": n}], "involution"}.
// "rank" is optional but must match the color count when present.
GraphSpec parse_spec(const json& doc, const std::string& path = "$");
// One spec, or {"specs": [...]}.
std::vector<GraphSpec> parse_specs(const json& doc);
// Like parse_specs, but sizes may be {"min": a, "max": b} and the
// involution may be "both". Expands to every instance, sorted by parameter
// tuple; throws InputError past `limit` instances.
std::vector<GraphSpec> expand_sweep(const json& doc, std::size_t limit = kMaxSweepInstances);

json integer_to_json(const Integer& v);
Integer integer_from_json(const json& j, const std::string& path = "$");

json spec_to_json(const GraphSpec& spec);
json group_to_json(const FinAbGroup& g);
FinAbGroup group_from_json(const json& j, const std::string& path = "$");
json kgroup_to_json(const KGroup& g);
KGroup kgroup_from_json(const json& j, const std::string& path = "$");
json certificate_to_json(const ConvergenceCertificate& c);
ConvergenceCertificate certificate_from_json(const json& j, const std::string& path = "$");
json table_to_json(const KTheoryTable& t);
KTheoryTable table_from_json(const json& j);
json invariants_to_json(const FamilyInvariants& inv);

// 8-column KO/KU layout.
std::string format_table(const KTheoryTable& t);

}  // namespace kcr::io
