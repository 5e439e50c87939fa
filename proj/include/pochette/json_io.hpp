#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "pochette/diagram.hpp"
#include "pochette/slope.hpp"
#include "pochette/surgery.hpp"

namespace pochette::json_io {

using nlohmann::json;

/// Strict diagram decoding: unknown fields are rejected, required fields
/// must be present, zero linking entries are dropped.
diagram::HandleDiagram diagram_from_json(const json& j);
json diagram_to_json(const diagram::HandleDiagram& d);

diagram::HandleDiagram load_diagram(const std::filesystem::path& path);
void save_diagram(const diagram::HandleDiagram& d,
                  const std::filesystem::path& path);

json profile_to_json(const diagram::HomologyProfile& p);
json group_to_json(const intlin::AbelianGroup& g);

/// Machine-readable surgery certificate. Key order is canonical (sorted),
/// so serialized certificates are byte-stable.
json certificate_json(long long p, long long q, slope::Mod2Framing eps,
                      const surgery::SurgeryHypotheses& hyp,
                      const diagram::HomologyProfile& x_profile,
                      const surgery::SurgeryResult& result,
                      surgery::HomeoVerdict verdict);

/// Structural check mirroring data/certificate.schema.json; throws
/// ParseError on violations.
void check_certificate_structure(const json& cert);

diagram::SurgeryTemplate load_surgery_template(const std::filesystem::path& path);

}  // namespace pochette::json_io
