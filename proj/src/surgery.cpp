#include "pochette/surgery.hpp"

#include <stdexcept>

namespace pochette::surgery {

namespace {

long long abs_ll(long long x) { return x < 0 ? -x : x; }

const intlin::AbelianGroup kZ{1, {}};
const intlin::AbelianGroup kTrivial{0, {}};

void require_simply_connected_closed(const diagram::HomologyProfile& x) {
  bool ok = x.h[0] == kZ && x.h[1].is_trivial() && x.h[2].torsion.empty() &&
            x.h[3].is_trivial() && x.h[4] == kZ;
  if (!ok)
    throw HypothesesNotMet(
        "input profile is not that of a simply-connected closed 4-manifold");
}

}  // namespace

std::string to_string(Classification c) {
  switch (c) {
    case Classification::HomologySphere: return "homology_sphere";
    case Classification::SameHomologyAsX: return "same_homology_as_x";
    case Classification::TorsionH1: return "torsion_h1";
    case Classification::HypothesesNotMet: return "hypotheses_not_met";
  }
  throw std::logic_error("unreachable classification");
}

std::string to_string(HomeoVerdict v) {
  switch (v) {
    case HomeoVerdict::Homeomorphic: return "homeomorphic";
    case HomeoVerdict::NotHomeomorphic: return "not_homeomorphic";
    case HomeoVerdict::Indeterminate: return "indeterminate";
  }
  throw std::logic_error("unreachable verdict");
}

diagram::HomologyProfile exterior_homology(const diagram::HomologyProfile& x,
                                           const SurgeryHypotheses& hyp) {
  if (!hyp.t2_zero)
    throw HypothesesNotMet("exterior homology needs t2 = 0");
  require_simply_connected_closed(x);
  diagram::HomologyProfile e;
  e.h[0] = kZ;  // Z[x_e]
  e.h[1] = kZ;  // Z[m_e]
  e.h[2] = intlin::AbelianGroup{1 + x.h[2].free_rank, {}};  // Z[B_e] + H2(X)
  e.h[3] = kTrivial;
  e.h[4] = kTrivial;
  return e;
}

I21Values i21_values(long long p, long long q, slope::Mod2Framing /*eps*/,
                     const SurgeryHypotheses& hyp) {
  if (!hyp.homological())
    throw HypothesesNotMet("i21 values need t2 = 0, i11([l]) = 0 and the "
                           "constrained H2 image");
  slope::require_slope_pair(p, q);
  return I21Values{abs_ll(p), 0};
}

SurgeryResult surgery_homology(const diagram::HomologyProfile& x, long long p,
                               long long q, slope::Mod2Framing eps,
                               const SurgeryHypotheses& hyp) {
  slope::require_slope_pair(p, q);
  require_simply_connected_closed(x);
  (void)eps;  // homology cannot see the mod 2 framing

  SurgeryResult res;
  res.h0 = kZ;
  res.h4 = kZ;
  if (!hyp.homological()) {
    res.classification = Classification::HypothesesNotMet;
    return res;
  }

  // MV degree-1 block: m -> (p, 0), l -> (0, 1) on (Z[m_e], Z[l]).
  intlin::IntMatrix mv(2, 2);
  mv.at(0, 0) = p;
  mv.at(1, 1) = 1;
  res.h1 = intlin::cokernel(mv);

  intlin::SmithDecomposition snf = intlin::smith_normal_form(mv);
  for (std::size_t i = 0; i < 2; ++i)
    if (snf.d.at(i, i) != 0) res.mv_divisors.push_back(snf.d.at(i, i));

  res.torsion_order = abs_ll(p);
  if (abs_ll(p) == 1) {
    res.h1 = x.h[1];
    res.h2 = x.h[2];
    res.h3 = x.h[3];
    res.classification = diagram::is_s4_profile(x)
                             ? Classification::HomologySphere
                             : Classification::SameHomologyAsX;
    if (res.classification == Classification::HomologySphere) {
      // homology-sphere conclusion pins H2 = 0
      res.h2 = kTrivial;
      res.h3 = kTrivial;
    }
  } else {
    res.classification = Classification::TorsionH1;
  }
  return res;
}

HomeoVerdict homeomorphism_criterion(const SurgeryResult& result, long long p,
                                     long long q,
                                     const SurgeryHypotheses& hyp) {
  (void)q;
  if (!hyp.homological() ||
      result.classification == Classification::HypothesesNotMet)
    return HomeoVerdict::Indeterminate;
  if (abs_ll(p) != 1) return HomeoVerdict::NotHomeomorphic;
  if (!hyp.simply_connected_result.has_value())
    return HomeoVerdict::Indeterminate;
  return *hyp.simply_connected_result ? HomeoVerdict::Homeomorphic
                                      : HomeoVerdict::NotHomeomorphic;
}

bool is_gluck(long long p, long long q, slope::Mod2Framing eps) {
  return slope::normalize_slope(p, q) == slope::SlopeFraction{1, 0} &&
         eps.value == 1;
}

}  // namespace pochette::surgery
