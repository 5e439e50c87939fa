#include <doctest.h>

#include <numeric>

#include "pochette/families.hpp"
#include "pochette/json_io.hpp"
#include "pochette/surgery.hpp"
#include "support.hpp"

using namespace pochette;
using families::FamilyBuild;
using families::FamilyDescriptor;
using intlin::AbelianGroup;

namespace {

const std::string kDataDir = POCHETTE_DATA_DIR;

FamilyDescriptor fig1_desc() {
  return families::load_family_descriptor(kDataDir + "/templates/fig1.json");
}
FamilyDescriptor fig2_desc() {
  return families::load_family_descriptor(kDataDir + "/templates/fig2.json");
}

std::vector<long long> ramp(std::size_t len) {
  std::vector<long long> out(len);
  for (std::size_t i = 0; i < len; ++i)
    out[i] = static_cast<long long>(i % 5) - 2;
  return out;
}

void check_family_diagram(const FamilyBuild& b) {
  diagram::validate_designation(b.diagram, b.designation);
  CHECK(diagram::euler_characteristic(b.diagram) == 2);
  CHECK(diagram::is_homology_sphere(b.diagram));
  diagram::HandleDiagram reduced = diagram::cancel_chain_pairs(b.diagram);
  CHECK(reduced.one_handles.empty());
  CHECK(reduced.two_handles.empty());
  CHECK(reduced.n3 == 0);
}

}  // namespace

TEST_CASE("family descriptors load from the data directory") {
  CHECK(fig1_desc().name == "fig1");
  CHECK(fig1_desc().pm_knot_count == 7);
  CHECK(fig2_desc().u_entwined_knot == "N1");
  CHECK(fig2_desc().note.find("figure transcription") != std::string::npos);
}

TEST_CASE("fig1 instances are 4-sphere data") {
  for (long long k : {2, 3, 4})
    for (long long sign : {1LL, -1LL}) {
      FamilyBuild b = families::build_fig1(k, ramp(k * k - 1), sign, fig1_desc());
      CAPTURE(k);
      check_family_diagram(b);
    }
}

TEST_CASE("fig1 parameter validation") {
  CHECK_THROWS_AS(families::build_fig1(1, {}, 1, fig1_desc()), Error);
  CHECK_THROWS_AS(families::build_fig1(2, {1, 2}, 1, fig1_desc()), Error);
  CHECK_THROWS_AS(families::build_fig1(2, ramp(3), 2, fig1_desc()), Error);
}

TEST_CASE("fig2 instances are 4-sphere data") {
  for (long long s : {1, 2})
    for (long long t : {1, 2}) {
      std::vector<long long> m(s, 0);
      if (s == 2) m = {3, -3};
      FamilyBuild b =
          families::build_fig2(s, t, m, ramp(s * t + 1), -1, fig2_desc());
      CAPTURE(s);
      CAPTURE(t);
      check_family_diagram(b);
    }
}

TEST_CASE("fig2 parameter validation") {
  // the m-tuple must sum to zero
  CHECK_THROWS_AS(families::build_fig2(2, 1, {1, 1}, ramp(3), 1, fig2_desc()),
                  Error);
  CHECK_THROWS_AS(families::build_fig2(0, 1, {}, {}, 1, fig2_desc()), Error);
  CHECK_THROWS_AS(families::build_fig2(1, 1, {0}, {1}, 1, fig2_desc()), Error);
  CHECK_NOTHROW(families::build_fig2(2, 1, {1, -1}, ramp(3), 1, fig2_desc()));
}

TEST_CASE("transform output matches the algebraic prediction on the corpus") {
  diagram::SurgeryTemplate tpl =
      json_io::load_surgery_template(kDataDir + "/templates/surgery_pattern.json");
  std::vector<FamilyBuild> corpus;
  corpus.push_back(families::build_fig1(2, ramp(3), 1, fig1_desc()));
  corpus.push_back(families::build_fig1(3, ramp(8), -1, fig1_desc()));
  corpus.push_back(families::build_fig2(2, 2, {1, -1}, ramp(5), 1, fig2_desc()));

  surgery::SurgeryHypotheses hyp;
  for (const FamilyBuild& b : corpus)
    for (long long p = -5; p <= 5; ++p)
      for (long long q = -5; q <= 5; ++q) {
        if (p == 0 && q == 0) continue;
        if (std::gcd(std::abs(p), std::abs(q)) != 1) continue;
        for (int e : {0, 1}) {
          CAPTURE(b.diagram.name);
          CAPTURE(p);
          CAPTURE(q);
          diagram::HandleDiagram out = diagram::transform_diagram(
              b.diagram, b.designation, p, q, slope::make_mod2(e), tpl);
          diagram::HomologyProfile got = diagram::homology_closed(out);
          surgery::SurgeryResult want = surgery::surgery_homology(
              diagram::homology_closed(b.diagram), p, q, slope::make_mod2(e),
              hyp);
          CHECK(got.h[0] == want.h0);
          CHECK(got.h[4] == want.h4);
          REQUIRE(want.h1.has_value());
          CHECK(got.h[1] == *want.h1);
          if (want.h2) CHECK(got.h[2] == *want.h2);
          if (want.h3) CHECK(got.h[3] == *want.h3);
          // degrees the surgery result leaves open are still pinned on the
          // diagram side by duality: torsion(H2) = torsion(H1), H3 = Z^b1
          CHECK(got.h[2].torsion == got.h[1].torsion);
          CHECK(got.h[3] == AbelianGroup{got.h[1].free_rank, {}});
        }
      }
}
