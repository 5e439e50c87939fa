#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

#include "pochette/json_io.hpp"
#include "support.hpp"

using namespace pochette;
using json_io::json;

namespace {

const std::string kDataDir = POCHETTE_DATA_DIR;

json minimal_diagram_json() {
  return json::parse(R"({
    "name": "t",
    "one_handles": ["c"],
    "two_handles": [{"id": "u", "framing": 0},
                    {"id": "k", "framing": -1, "linking": {"c": 1}, "meridian": true}],
    "n3": 1,
    "n4": 1
  })");
}

}  // namespace

TEST_CASE("diagram decoding accepts the documented format") {
  diagram::HandleDiagram d = json_io::diagram_from_json(minimal_diagram_json());
  CHECK(d.one_handles == std::vector<std::string>{"c"});
  REQUIRE(d.two_handles.size() == 2);
  CHECK(d.two_handles[1].linking.at("c") == 1);
  CHECK(d.two_handles[1].meridian);
  CHECK(d.n3 == 1);
}

TEST_CASE("diagram decoding is strict") {
  SUBCASE("unknown top-level field") {
    json j = minimal_diagram_json();
    j["extra"] = 1;
    CHECK_THROWS_AS(json_io::diagram_from_json(j), ParseError);
  }
  SUBCASE("unknown 2-handle field") {
    json j = minimal_diagram_json();
    j["two_handles"][0]["color"] = "red";
    CHECK_THROWS_AS(json_io::diagram_from_json(j), ParseError);
  }
  SUBCASE("missing required field") {
    json j = minimal_diagram_json();
    j.erase("n3");
    CHECK_THROWS_AS(json_io::diagram_from_json(j), ParseError);
  }
  SUBCASE("non-integer linking") {
    json j = minimal_diagram_json();
    j["two_handles"][1]["linking"]["c"] = 1.5;
    CHECK_THROWS_AS(json_io::diagram_from_json(j), ParseError);
  }
  SUBCASE("dangling ids are rejected on load") {
    json j = minimal_diagram_json();
    j["two_handles"][1]["linking"] = {{"ghost", 1}};
    CHECK_THROWS_AS(json_io::diagram_from_json(j), DanglingReference);
  }
  SUBCASE("asymmetric two_linking is rejected on load") {
    json j = minimal_diagram_json();
    j["two_handles"][0]["two_linking"] = {{"k", 1}};
    CHECK_THROWS_AS(json_io::diagram_from_json(j), AsymmetricLinking);
  }
  SUBCASE("negative handle counts are rejected") {
    json j = minimal_diagram_json();
    j["n3"] = -1;
    CHECK_THROWS_AS(json_io::diagram_from_json(j), Error);
  }
  SUBCASE("two_handles must be an array") {
    json j = minimal_diagram_json();
    j["two_handles"] = 7;
    CHECK_THROWS_AS(json_io::diagram_from_json(j), ParseError);
  }
  SUBCASE("top level must be an object") {
    CHECK_THROWS_AS(json_io::diagram_from_json(json::array()), ParseError);
  }
}

TEST_CASE("diagram round-trips through JSON") {
  std::mt19937_64 rng(5150);
  for (int it = 0; it < 40; ++it) {
    diagram::HandleDiagram d = testing::random_closed_diagram(rng);
    diagram::HandleDiagram back =
        json_io::diagram_from_json(json_io::diagram_to_json(d));
    CHECK(back == d);
  }
}

TEST_CASE("diagram file save/load") {
  namespace fs = std::filesystem;
  fs::path path = fs::temp_directory_path() / "pochette_test_diagram.json";
  diagram::HandleDiagram d = testing::cancelling_pair(true);
  json_io::save_diagram(d, path);
  CHECK(json_io::load_diagram(path) == d);
  fs::remove(path);
  CHECK_THROWS_AS(json_io::load_diagram(path), ParseError);
}

TEST_CASE("certificates are canonical and schema-shaped") {
  surgery::SurgeryHypotheses hyp;
  diagram::HomologyProfile s4 = diagram::s4_profile();
  surgery::SurgeryResult r =
      surgery::surgery_homology(s4, 5, 2, slope::Mod2Framing{1}, hyp);
  surgery::HomeoVerdict v = surgery::homeomorphism_criterion(r, 5, 2, hyp);
  json cert = json_io::certificate_json(5, 2, slope::Mod2Framing{1}, hyp, s4, r, v);

  CHECK(cert["classification"] == "torsion_h1");
  CHECK(cert["torsion_order"] == 5);
  CHECK(cert["mv_elementary_divisors"] == json::array({1, 5}));
  CHECK(cert["profile"]["h1"]["torsion"] == json::array({5}));
  CHECK(cert["profile"]["h2"].is_null());
  CHECK(cert["homeomorphic_to_x"] == "not_homeomorphic");
  CHECK(cert["gluck"] == false);
  CHECK(cert["hypotheses"]["simply_connected_result"].is_null());

  CHECK_NOTHROW(json_io::check_certificate_structure(cert));
  // deterministic: dump -> parse -> dump is byte-stable
  std::string once = cert.dump(2);
  CHECK(json::parse(once).dump(2) == once);

  SUBCASE("structure check rejects unknown fields") {
    cert["surprise"] = 1;
    CHECK_THROWS_AS(json_io::check_certificate_structure(cert), ParseError);
  }
}

TEST_CASE("certificate bytes match the golden file") {
  surgery::SurgeryHypotheses hyp;
  diagram::HomologyProfile s4 = diagram::s4_profile();
  surgery::SurgeryResult r =
      surgery::surgery_homology(s4, 5, 2, slope::Mod2Framing{1}, hyp);
  surgery::HomeoVerdict v = surgery::homeomorphism_criterion(r, 5, 2, hyp);
  std::string got =
      json_io::certificate_json(5, 2, slope::Mod2Framing{1}, hyp, s4, r, v)
          .dump(2) +
      "\n";

  std::ifstream in(std::string(POCHETTE_GOLDEN_DIR) +
                   "/certificate_5_2_eps1.json");
  REQUIRE(in.good());
  std::string want((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  CHECK(got == want);
}

TEST_CASE("shipped data files parse and stay strict") {
  diagram::SurgeryTemplate tpl =
      json_io::load_surgery_template(kDataDir + "/templates/surgery_pattern.json");
  CHECK(tpl.general.new_dot_linking == "p");
  CHECK(tpl.general.band_with_undotted == "q");
  CHECK(tpl.zero_slope.new_dot_linking == "0");
  CHECK(tpl.zero_slope.band_with_undotted == "1");
  CHECK(tpl.general.extra_three_handles == 1);

  for (const char* name : {"diagram.schema.json", "certificate.schema.json"}) {
    std::ifstream in(kDataDir + "/" + name);
    REQUIRE(in.good());
    json schema;
    in >> schema;
    CHECK(schema["additionalProperties"] == false);
  }

  SUBCASE("template loader rejects unknown fields") {
    std::ifstream in(kDataDir + "/templates/surgery_pattern.json");
    json j;
    in >> j;
    j["general"]["twist"] = 3;
    namespace fs = std::filesystem;
    fs::path path = fs::temp_directory_path() / "pochette_bad_template.json";
    std::ofstream out(path);
    out << j.dump();
    out.close();
    CHECK_THROWS_AS(json_io::load_surgery_template(path), ParseError);
    fs::remove(path);
  }
}
