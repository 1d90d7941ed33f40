#pragma once

#include <string>
#include <string_view>

#include "rcoptoric/blockpath.hpp"
#include "rcoptoric/markov.hpp"
#include "rcoptoric/symmetry.hpp"
#include "rcoptoric/toric_maps.hpp"
#include "rcoptoric/verify.hpp"

namespace rcoptoric {

// JSON renderings of every report and artifact, as strings so the JSON
// implementation stays out of the installed interface. All output is
// deterministic: fixed key order, two-space indentation, no trailing
// newline.

std::string to_json(const ValidationReport& report);
std::string to_json(const RegularityReport& report);
std::string to_json(const RcopVerdict& verdict);
std::string to_json(const BlockResult& result);
std::string to_json(const GroupDescription& group);
std::string to_json(const PathDescriptor& path);
std::string to_json(const ExponentMatrix& matrix);
std::string to_json(const RowspanReport& report);
std::string to_json(const std::vector<MarkovMove>& moves);
std::string to_json(const AuditReport& report);
std::string to_json(const FiberCertification& cert);
std::string to_json(const VanishingReport& report);
std::string to_json(const JordanReport& report);
std::string to_json(const DimensionReport& report);

/// Reads a move list as emitted by to_json(moves); each move is normalized.
std::vector<MarkovMove> parse_moves(std::string_view json_text);

} // namespace rcoptoric
