#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pochette/intlin.hpp"
#include "pochette/slope.hpp"

namespace pochette::diagram {

/// A framed 2-handle: attaching-circle data at the algebraic level only.
/// `linking` maps dotted-circle ids to signed algebraic linking numbers;
/// `two_linking` records linking with other 2-handles (symmetric);
/// `meridian` marks the presence of a 0-framed meridian.
struct TwoHandle {
  std::string id;
  long long framing = 0;
  std::map<std::string, long long> linking;
  std::map<std::string, long long> two_linking;
  bool meridian = false;

  friend bool operator==(const TwoHandle&, const TwoHandle&) = default;
};

/// Abstract handle data for a 4-manifold built on one implicit 0-handle:
/// dotted circles, framed 2-handles, and bare 3-/4-handle counts.
struct HandleDiagram {
  std::vector<std::string> one_handles;
  std::vector<TwoHandle> two_handles;
  long long n3 = 0;
  long long n4 = 0;
  std::string name;

  friend bool operator==(const HandleDiagram&, const HandleDiagram&) = default;
};

/// The sub-diagram spanning an embedded pochette: one dotted circle plus
/// one 0-framed 2-handle algebraically split from every dotted circle.
struct PochetteDesignation {
  std::string one_handle_id;
  std::string two_handle_id;
};

struct HomologyProfile {
  std::array<intlin::AbelianGroup, 5> h;

  friend bool operator==(const HomologyProfile&, const HomologyProfile&) = default;
};

HomologyProfile s4_profile();
bool is_s4_profile(const HomologyProfile& p);

/// Structural checks: unique ids, linking maps referencing existing ids,
/// symmetric two_linking, at most one 4-handle.
void validate(const HandleDiagram& d);

/// Pochette invariants on top of validate(): designated handles exist,
/// the 2-handle is 0-framed and its linking column is identically zero.
void validate_designation(const HandleDiagram& d, const PochetteDesignation& poch);

/// Rows = dotted circles (in diagram order), columns = 2-handles.
intlin::IntMatrix linking_matrix(const HandleDiagram& d);

long long euler_characteristic(const HandleDiagram& d);

/// Homology of the closed orientable manifold presented by the diagram:
/// H1 = coker of the linking matrix, H2 from the Euler characteristic and
/// duality (free rank chi - 2 + 2 b1, torsion = torsion of H1), H3 = Z^b1.
HomologyProfile homology_closed(const HandleDiagram& d);

bool is_homology_sphere(const HandleDiagram& d);

/// Chain-level handle cancellation: repeatedly removes (1-handle,2-handle)
/// pairs on unit linking entries after column operations mirroring handle
/// slides, then (2-handle,3-handle) pairs for null columns. Homology
/// profile is preserved exactly; fixed point returned when nothing cancels.
HandleDiagram cancel_chain_pairs(const HandleDiagram& d);

/// Surgery transformation pattern, loaded from a template data file.
/// The combinatorics transcribe drawn link patterns and are gated by the
/// homological postcondition in transform_diagram.
struct SurgeryPattern {
  bool carve_designated_two_handle = true;
  bool undot_designated_one_handle = true;
  std::string new_dot_linking;        // "p" or an integer literal
  std::string band_with_undotted;     // "q" or an integer literal
  std::string new_framing;            // "eps" or an integer literal
  std::string entwined_framing_shift; // "eps" or an integer literal
  bool slide_entwined_off_new_dot = true;
  bool meridians_required_unless_unit_p = true;
  long long extra_three_handles = 1;
};

struct SurgeryTemplate {
  SurgeryPattern general;     // p/q != 0/1
  SurgeryPattern zero_slope;  // p/q  = 0/1
  std::string note;
};

/// Rewrites the diagram for the pochette surgery of the given slope and
/// framing. Preconditions: designation invariants; simply-connected-shaped
/// input homology; for |p| != 1 every 2-handle entwined with the dotted
/// circle carries a 0-framed meridian. The output's homology profile is
/// checked against the algebraic surgery prediction.
HandleDiagram transform_diagram(const HandleDiagram& d,
                                const PochetteDesignation& poch, long long p,
                                long long q, slope::Mod2Framing eps,
                                const SurgeryTemplate& tpl);

}  // namespace pochette::diagram
