#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "fspt/crt.hpp"
#include "fspt/triple.hpp"

namespace fspt {

using Json = nlohmann::json;

/// Schema violation with a JSON-pointer-style location.
struct SchemaError : std::runtime_error {
  SchemaError(std::string ptr, const std::string& message)
      : std::runtime_error(ptr + ": " + message), pointer(std::move(ptr)) {}
  std::string pointer;
};

// --- serialization (canonical: inline groups, reduced fractions) -----------

Json group_to_json(const FiniteGroup& g);
Json cochain_to_json(const BitCochain& x);
Json cochain_to_json(const PhaseCochain& x);
Json triple_to_json(const PD0Triple& t);
Json pentuple_to_json(const CRTPentuple& p);
Json equiv_certificate_to_json(const EquivCertificate& cert);
Json reduction_certificate_to_json(const ReductionCertificate& cert);

// --- parsing (strict; throws SchemaError with the failing location) --------
// base_dir resolves file references in cochain "group" fields.

GroupPtr group_from_json(const Json& j, const std::string& ptr);
BitCochain bit_cochain_from_json(const Json& j, const std::string& ptr,
                                 const std::filesystem::path& base_dir);
PhaseCochain phase_cochain_from_json(const Json& j, const std::string& ptr,
                                     const std::filesystem::path& base_dir);
PD0Triple triple_from_json(const Json& j, const std::filesystem::path& base_dir);
CRTPentuple pentuple_from_json(const Json& j, const std::filesystem::path& base_dir);

// --- files ------------------------------------------------------------------

Json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const Json& j);

GroupPtr load_group(const std::filesystem::path& path);
PD0Triple load_triple(const std::filesystem::path& path);
CRTPentuple load_pentuple(const std::filesystem::path& path);

/// Canonical bytes: sorted keys, two-space indent, trailing newline.
std::string canonical_dump(const Json& j);

/// FNV-1a 64-bit digest of the canonical serialization, as fixed-width hex.
std::string digest(const Json& j);

}  // namespace fspt
