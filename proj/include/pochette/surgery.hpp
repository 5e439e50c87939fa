#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pochette/diagram.hpp"
#include "pochette/intlin.hpp"
#include "pochette/slope.hpp"

namespace pochette::surgery {

/// Hypotheses of the surgery-homology results. All three boolean maps are
/// caller-asserted: they concern maps not recoverable from linking data.
/// Simple connectivity of the surgered manifold is likewise declared,
/// never computed.
struct SurgeryHypotheses {
  bool t2_zero = true;               // H2(X) -> H2(X, E(P_e)) vanishes
  bool l_nullhomologous = true;      // i11([l]) = 0
  bool h2_image_constrained = true;  // i21(H2(dP)) inside Z[B_e] + Z[S]
  std::optional<bool> simply_connected_result;

  bool homological() const {
    return t2_zero && l_nullhomologous && h2_image_constrained;
  }
};

enum class Classification {
  HomologySphere,
  SameHomologyAsX,
  TorsionH1,
  HypothesesNotMet,
};

std::string to_string(Classification c);

/// Homology of the surgered manifold. h2/h3 are populated only where the
/// source results pin them down: for |p| = 1 (full profile = input) and
/// for a homology-sphere conclusion. Degrees the results leave open stay
/// empty rather than being extrapolated.
struct SurgeryResult {
  intlin::AbelianGroup h0;
  std::optional<intlin::AbelianGroup> h1;
  std::optional<intlin::AbelianGroup> h2;
  std::optional<intlin::AbelianGroup> h3;
  intlin::AbelianGroup h4;
  Classification classification = Classification::HypothesesNotMet;
  long long torsion_order = 0;  // |p|; 0 means free Z in degree 1
  std::vector<intlin::Int> mv_divisors;  // elementary divisors of the MV matrix
};

/// Homology of the pochette exterior E(P_e) for a simply-connected closed
/// input: (Z[x_e], Z[m_e], Z[B_e] + H2(X), 0, 0). Throws HypothesesNotMet
/// when t2_zero is not asserted or the profile is not of the right shape.
diagram::HomologyProfile exterior_homology(const diagram::HomologyProfile& x,
                                           const SurgeryHypotheses& hyp);

/// Image of H2(dP) in H2(E(P_e)): [B] -> (sign ambiguous) p [B_e],
/// [S] -> 0. Requires all three homological hypotheses.
struct I21Values {
  long long b_image_magnitude = 0;  // |p|, sign not determined
  long long s_image = 0;            // always 0
};

I21Values i21_values(long long p, long long q, slope::Mod2Framing eps,
                     const SurgeryHypotheses& hyp);

/// Mayer-Vietoris computation of H_*(X(e, p/q, eps)) from the input
/// profile. The degree-1 map Z[m] + Z[l] -> Z[m_e] + Z[l] has columns
/// m -> (p, 0) and l -> (0, 1); H1 is its cokernel.
SurgeryResult surgery_homology(const diagram::HomologyProfile& x, long long p,
                               long long q, slope::Mod2Framing eps,
                               const SurgeryHypotheses& hyp);

enum class HomeoVerdict { Homeomorphic, NotHomeomorphic, Indeterminate };

std::string to_string(HomeoVerdict v);

/// Homeomorphism criterion: surgered manifold is homeomorphic to X iff it
/// is simply connected (declared) and |p| = 1. Indeterminate when |p| = 1
/// but pi_1 is undeclared, or when the homological hypotheses fail.
HomeoVerdict homeomorphism_criterion(const SurgeryResult& result, long long p,
                                     long long q,
                                     const SurgeryHypotheses& hyp);

/// True exactly for slope 1/0 with framing 1.
bool is_gluck(long long p, long long q, slope::Mod2Framing eps);

}  // namespace pochette::surgery
