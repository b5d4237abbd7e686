#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "minorforge/grassmann_detrep.hpp"
#include "minorforge/group_action.hpp"
#include "minorforge/hyperdet.hpp"
#include "minorforge/matrix.hpp"
#include "minorforge/minor_map.hpp"
#include "minorforge/multipoly.hpp"

namespace minorforge::json_io {

using json = nlohmann::json;

inline constexpr const char* kFormat = "minorforge/1";

/// Resolves the ring from an explicit flag and/or the document's "ring" field.
RingDescriptor resolve_ring(const json& doc, const std::optional<RingDescriptor>& flag);
RingValue parse_value(const RingDescriptor& ring, const json& v);

json to_json(const RingValue& v);
json to_json(const MultiPoly& f);
json to_json(const MinorVector& a);
json to_json(const SymMatrix& m);
json to_json(const Matrix& m);
json to_json(const GroupElement& g);
json to_json(const PluckerSquareVector& q);
json to_json(const OrbitEquationId& id);
json to_json(const DetRep& rep);
json to_json(const MembershipFailure& f);
json to_json(const HypdetReport& r);

MultiPoly poly_from_json(const json& doc, const std::optional<RingDescriptor>& ring = std::nullopt);
MinorVector vector_from_json(const json& doc, const std::optional<RingDescriptor>& ring = std::nullopt);
SymMatrix sym_matrix_from_json(const json& doc, const std::optional<RingDescriptor>& ring = std::nullopt);
/// Rectangular matrix from {"rows": [...]} (ring as above).
Matrix matrix_from_json(const json& doc, const RingDescriptor& ring);
GroupElement group_from_json(const json& doc, const std::optional<RingDescriptor>& ring = std::nullopt);
PluckerSquareVector plucker_from_json(const json& doc, const std::optional<RingDescriptor>& ring = std::nullopt);

/// Reads a JSON document from a path, or standard input for "-".
json read_file(const std::string& path);

}  // namespace minorforge::json_io
