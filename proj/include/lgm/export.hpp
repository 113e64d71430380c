// Deterministic serialization of rings and verification reports.
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "lgm/amodel.hpp"
#include "lgm/bmodel.hpp"
#include "lgm/check.hpp"
#include "lgm/mirror.hpp"

namespace lgm {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kSchema = "lg-mirror-ring/1";

enum class Format { Json, Markdown, Csv, Text };

/// "json", "md"/"markdown", "csv", "text".
std::optional<Format> parse_format(std::string_view token);

/// "e2", "-3*broad", "1/2*e3 + e4", "0".
std::string format_element(const LinearCombination& v, const StateSpace& space);
/// Same for Milnor coordinates, with monomial labels.
std::string format_element(const LinearCombination& v, const MilnorRing& ring);

Json ring_to_json(const FrobeniusAlgebra& alg);
std::string ring_to_markdown(const FrobeniusAlgebra& alg);
std::string ring_to_csv(const FrobeniusAlgebra& alg);

Json milnor_to_json(const MilnorRing& ring);
std::string milnor_to_markdown(const MilnorRing& ring);
std::string milnor_to_csv(const MilnorRing& ring);

Json checks_to_json(const std::vector<CheckResult>& checks);
Json mirror_report_to_json(const MirrorReport& rep, const StateSpace& space);
Json pairing_comparison_to_json(const PairingComparison& cmp);

/// Pretty JSON, newline-terminated.
std::string dump(const Json& doc);

}  // namespace lgm
