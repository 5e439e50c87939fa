#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "pochette/diagram.hpp"

namespace pochette::families {

/// Constants of a family transcription, loaded from its data file.
/// The drawings fix these only as artwork; the values here are a reading
/// validated by the homological gates (chi = 2, exact S^4 profile, full
/// chain cancellation).
struct FamilyDescriptor {
  std::string name;
  std::string note;
  long long pm_knot_count = 0;           // +-1-framed knots
  long long pochette_entwined_n_knots = 0;  // trailing n-knots linking the dot
  std::string u_entwined_knot;           // knot entwined with the 0-framed unknot
  long long u_entwined_linking = 1;
};

FamilyDescriptor load_family_descriptor(const std::filesystem::path& path);

struct FamilyBuild {
  diagram::HandleDiagram diagram;
  diagram::PochetteDesignation designation;
};

/// Handle data for the first 4-sphere family: k >= 2, n has k^2 - 1
/// entries (framings), sign is the +-1 framing choice.
FamilyBuild build_fig1(long long k, const std::vector<long long>& n,
                       long long sign, const FamilyDescriptor& desc);

/// Handle data for the second 4-sphere family: s, t >= 1, m has s entries
/// summing to zero, n has s*t + 1 entries.
FamilyBuild build_fig2(long long s, long long t,
                       const std::vector<long long>& m,
                       const std::vector<long long>& n, long long sign,
                       const FamilyDescriptor& desc);

}  // namespace pochette::families
