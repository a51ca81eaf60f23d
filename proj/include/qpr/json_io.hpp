#pragma once

#include <cstdint>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "qpr/dual_engine.hpp"
#include "qpr/frame_lab.hpp"
#include "qpr/quasi_rep.hpp"
#include "qpr/wigner_cv.hpp"

namespace qpr {

using Json = nlohmann::json;

// Operator format: {"dim": d, "re": [[..]], "im": [[..]]}. Hermiticity is
// validated on load; doubles round-trip exactly.
Json operator_to_json(const HermitianOperator& a);
HermitianOperator operator_from_json(const Json& j);

// Frame format: {"dim": d, "labels": [...], "elements": [operator, ...]}.
// The loader re-validates invariants and rejects sum != I beyond 1e-8.
Json frame_to_json(const Frame& f);
Frame frame_from_json(const Json& j);

// Dual format mirrors the frame format plus "parent_frame_hash", the content
// hash of the parent frame file, so mismatched pairings are rejected.
Json dual_to_json(const DualFrame& d, const std::string& parent_frame_hash);
DualFrame dual_from_json(const Json& j, std::string* parent_frame_hash = nullptr);

Json negativity_report_to_json(const NegativityReport& r);

Json wigner_grid_to_json(const WignerGrid& w);
WignerGrid wigner_grid_from_json(const Json& j);
std::string wigner_grid_to_csv(const WignerGrid& w);  // "q,p,W" rows

// FNV-1a 64-bit over raw bytes, as a 16-digit hex string.
std::string fnv1a_hex(const std::string& bytes);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

// Convenience file wrappers (parse + validate + descriptive errors).
HermitianOperator load_operator(const std::string& path);
Frame load_frame(const std::string& path);
DualFrame load_dual(const std::string& path, std::string* parent_frame_hash = nullptr);
FockState load_fock_state(const std::string& path);

void save_json(const std::string& path, const Json& j);

}  // namespace qpr
