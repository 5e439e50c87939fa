#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pochette/families.hpp"
#include "pochette/gluing.hpp"
#include "pochette/json_io.hpp"
#include "pochette/surgery.hpp"

#ifndef POCHETTE_DATA_DIR
#define POCHETTE_DATA_DIR "data"
#endif

namespace {

namespace fs = std::filesystem;
using namespace pochette;

long long abs_ll(long long x) { return x < 0 ? -x : x; }

struct SlopeArg {
  long long p = 1;
  long long q = 0;
};

SlopeArg parse_slope_arg(const std::string& text) {
  slope::SlopeFraction s = slope::parse_slope(text);
  // word length and lift length grow linearly with the quotients
  if (std::abs(s.p) > 1000000 || std::abs(s.q) > 1000000)
    throw ParseError("slope out of range: |p|, |q| must be at most 10^6");
  return SlopeArg{s.p, s.q};
}

diagram::PochetteDesignation parse_pochette_arg(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos || comma == 0 || comma + 1 == text.size())
    throw ParseError("--pochette expects '<1-handle-id>,<2-handle-id>'");
  return diagram::PochetteDesignation{text.substr(0, comma),
                                      text.substr(comma + 1)};
}

std::string profile_line(const diagram::HomologyProfile& p) {
  std::string out;
  for (int i = 0; i < 5; ++i) {
    if (i) out += ", ";
    out += "H" + std::to_string(i) + " = " + p.h[i].to_string();
  }
  return out;
}

int run_homology(const std::string& path, bool as_json) {
  diagram::HandleDiagram d = json_io::load_diagram(path);
  diagram::HomologyProfile prof = diagram::homology_closed(d);
  if (as_json) {
    json_io::json j;
    j["name"] = d.name;
    j["euler_characteristic"] = diagram::euler_characteristic(d);
    j["profile"] = json_io::profile_to_json(prof);
    j["homology_sphere"] = diagram::is_s4_profile(prof);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "diagram: " << (d.name.empty() ? path : d.name) << "\n";
    std::cout << "chi = " << diagram::euler_characteristic(d) << "\n";
    std::cout << profile_line(prof) << "\n";
    std::cout << (diagram::is_s4_profile(prof) ? "homology 4-sphere: yes"
                                               : "homology 4-sphere: no")
              << "\n";
  }
  return 0;
}

int run_word(const SlopeArg& s, int eps_value, bool lift, bool as_json) {
  slope::Mod2Framing eps = slope::make_mod2(eps_value);
  gluing::MoveWord w = gluing::synthesize_word(s.p, s.q, eps);
  gluing::H1Action act = gluing::compose_h1(w);
  auto [x, y] = act.apply(1, 0);
  if (as_json) {
    json_io::json j;
    j["slope"] = slope::to_string(slope::normalize_slope(s.p, s.q));
    j["eps"] = eps.value;
    j["word"] = gluing::to_string(w);
    j["h1_action"] = {{act.entry[0][0], act.entry[0][1]},
                      {act.entry[1][0], act.entry[1][1]}};
    j["image_of_m"] = {x, y};
    j["det"] = act.det();
    if (lift) {
      gluing::LiftWord lw = gluing::natural_lift(s.p, s.q);
      auto [em, el] = gluing::exponent_sums(lw);
      j["lift"] = gluing::to_string(lw);
      j["lift_exponent_sums"] = {em, el};
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "word: " << gluing::to_string(w) << "\n";
    std::cout << "h1 action: [[" << act.entry[0][0] << ", " << act.entry[0][1]
              << "], [" << act.entry[1][0] << ", " << act.entry[1][1]
              << "]]  (det " << act.det() << ")\n";
    std::cout << "[m] -> " << x << "[m] + " << y << "[l]\n";
    if (lift) {
      gluing::LiftWord lw = gluing::natural_lift(s.p, s.q);
      auto [em, el] = gluing::exponent_sums(lw);
      std::cout << "lift: " << gluing::to_string(lw) << "  (exponent sums "
                << em << ", " << el << ")\n";
    }
  }
  return 0;
}

int run_surgery(const std::string& path, const std::string& pochette_arg,
                const SlopeArg& s, int eps_value, const std::string& mode,
                const surgery::SurgeryHypotheses& hyp,
                const std::string& out_path, const std::string& data_dir,
                bool as_json) {
  slope::Mod2Framing eps = slope::make_mod2(eps_value);
  diagram::HandleDiagram d = json_io::load_diagram(path);
  diagram::PochetteDesignation poch = parse_pochette_arg(pochette_arg);
  diagram::validate_designation(d, poch);
  diagram::HomologyProfile x_profile = diagram::homology_closed(d);
  surgery::SurgeryResult result =
      surgery::surgery_homology(x_profile, s.p, s.q, eps, hyp);
  surgery::HomeoVerdict verdict =
      surgery::homeomorphism_criterion(result, s.p, s.q, hyp);
  json_io::json cert =
      json_io::certificate_json(s.p, s.q, eps, hyp, x_profile, result, verdict);

  if (mode == "diagram") {
    diagram::SurgeryTemplate tpl = json_io::load_surgery_template(
        fs::path(data_dir) / "templates" / "surgery_pattern.json");
    diagram::HandleDiagram out_d =
        diagram::transform_diagram(d, poch, s.p, s.q, eps, tpl);
    diagram::HomologyProfile dprof = diagram::homology_closed(out_d);
    bool match = true;
    if (result.h1) match = match && dprof.h[1] == *result.h1;
    if (result.h2) match = match && dprof.h[2] == *result.h2;
    if (result.h3) match = match && dprof.h[3] == *result.h3;
    json_io::json dj;
    dj["profile"] = json_io::profile_to_json(dprof);
    dj["matches_prediction"] = match;
    cert["diagram"] = dj;
  }

  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw ParseError("cannot write certificate to " + out_path);
    out << cert.dump(2) << "\n";
  }
  if (as_json) {
    std::cout << cert.dump(2) << "\n";
  } else {
    std::cout << "surgery " << slope::to_string(slope::normalize_slope(s.p, s.q))
              << " eps=" << eps.value << " on "
              << (d.name.empty() ? path : d.name) << "\n";
    std::cout << "classification: " << surgery::to_string(result.classification)
              << "\n";
    auto show = [](const std::optional<intlin::AbelianGroup>& g) {
      return g ? g->to_string() : std::string("not computed");
    };
    std::cout << "H0 = " << result.h0.to_string() << ", H1 = " << show(result.h1)
              << ", H2 = " << show(result.h2) << ", H3 = " << show(result.h3)
              << ", H4 = " << result.h4.to_string() << "\n";
    std::cout << "homeomorphic to X: " << surgery::to_string(verdict) << "\n";
    if (cert.contains("diagram"))
      std::cout << "diagram route matches prediction: "
                << (cert["diagram"]["matches_prediction"].get<bool>() ? "yes"
                                                                      : "no")
                << "\n";
  }
  return 0;
}

int run_family(const std::string& name, long long k, long long s, long long t,
               std::vector<long long> m, std::vector<long long> n,
               long long sign, std::string out_path,
               const std::string& data_dir) {
  families::FamilyDescriptor desc = families::load_family_descriptor(
      fs::path(data_dir) / "templates" / (name + ".json"));
  families::FamilyBuild build;
  if (name == "fig1") {
    if (n.empty()) n.assign(static_cast<std::size_t>(k * k - 1), 0);
    build = families::build_fig1(k, n, sign, desc);
  } else if (name == "fig2") {
    if (m.empty()) m.assign(static_cast<std::size_t>(s), 0);
    if (n.empty()) n.assign(static_cast<std::size_t>(s * t + 1), 0);
    build = families::build_fig2(s, t, m, n, sign, desc);
  } else {
    throw ParseError("unknown family '" + name + "' (expected fig1 or fig2)");
  }
  if (out_path.empty()) out_path = name + ".json";
  json_io::save_diagram(build.diagram, out_path);
  std::cout << "wrote " << out_path << " (pochette: "
            << build.designation.one_handle_id << ","
            << build.designation.two_handle_id << ")\n";
  return 0;
}

// Exhaustive checks of the word/lift/homology laws; exit 1 on any failure.
int run_verify(long long range, const std::string& data_dir) {
  int failures = 0;
  auto section = [&failures](const std::string& name, long long cases,
                             long long bad) {
    if (bad == 0) {
      std::cout << "ok " << name << " (" << cases << " cases)\n";
    } else {
      std::cout << "FAIL " << name << ": " << bad << " of " << cases
                << " cases\n";
      ++failures;
    }
  };

  auto coprime_pairs = [](long long bound) {
    std::vector<std::pair<long long, long long>> out;
    for (long long p = -bound; p <= bound; ++p)
      for (long long q = -bound; q <= bound; ++q) {
        if (p == 0 && q == 0) continue;
        if (std::gcd(abs_ll(p), abs_ll(q)) != 1) continue;
        out.emplace_back(p, q);
      }
    return out;
  };

  {
    long long cases = 0, bad = 0;
    for (auto [p, q] : coprime_pairs(range)) {
      for (int e : {0, 1}) {
        ++cases;
        if (!gluing::verify_word(p, q, slope::make_mod2(e))) ++bad;
      }
      // the framing is invisible to the composed H1 action
      if (!(gluing::compose_h1(gluing::synthesize_word(p, q, slope::make_mod2(0))) ==
            gluing::compose_h1(gluing::synthesize_word(p, q, slope::make_mod2(1)))))
        ++bad;
    }
    section("gluing-word-theorem", cases, bad);
  }
  {
    long long cases = 0, bad = 0;
    for (auto [p, q] : coprime_pairs(range)) {
      ++cases;
      gluing::LiftWord w = gluing::natural_lift(p, q);
      auto [em, el] = gluing::exponent_sums(w);
      bool ok = em == p && el == q;
      if (p != 0 && q != 0) {
        long long mcount = 0;
        for (const auto& letter : w.letters)
          if (letter.generator == gluing::Generator::MPrime)
            mcount += abs_ll(letter.exponent);
        ok = ok && mcount == abs_ll(p);
      }
      if (!ok) ++bad;
    }
    section("natural-lift-abelianization", cases, bad);
  }
  {
    long long cases = 0, bad = 0;
    const long long bound = std::min<long long>(range, 20);
    for (auto [p, q] : coprime_pairs(bound))
      for (int e : {0, 1}) {
        ++cases;
        gluing::Mag2 mag = gluing::compose_h2_magnitudes(
            gluing::synthesize_word(p, q, slope::make_mod2(e)));
        if (mag[0][0] != abs_ll(p) || mag[1][0] != abs_ll(q)) ++bad;
      }
    section("h2-magnitude-law", cases, bad);
  }
  {
    long long cases = 0, bad = 0;
    const diagram::HomologyProfile s4 = diagram::s4_profile();
    const surgery::SurgeryHypotheses hyp;
    for (auto [p, q] : coprime_pairs(range)) {
      ++cases;
      surgery::SurgeryResult r0 =
          surgery::surgery_homology(s4, p, q, slope::make_mod2(0), hyp);
      surgery::SurgeryResult r1 =
          surgery::surgery_homology(s4, p, q, slope::make_mod2(1), hyp);
      surgery::SurgeryResult rneg =
          surgery::surgery_homology(s4, -p, -q, slope::make_mod2(0), hyp);
      bool ok = r0.h0 == intlin::AbelianGroup{1, {}} &&
                r0.h4 == intlin::AbelianGroup{1, {}} && r0.h1.has_value();
      if (ok) {
        const intlin::AbelianGroup expected =
            p == 0 ? intlin::AbelianGroup{1, {}}
                   : (abs_ll(p) == 1
                          ? intlin::AbelianGroup{0, {}}
                          : intlin::AbelianGroup{0, {intlin::Int(abs_ll(p))}});
        ok = *r0.h1 == expected;
      }
      if (ok && abs_ll(p) == 1)
        ok = r0.classification == surgery::Classification::HomologySphere &&
             r0.h2 && r0.h2->is_trivial() && r0.h3 && r0.h3->is_trivial();
      // homology cannot see eps or the simultaneous sign
      ok = ok && r0.h1 == r1.h1 && r0.classification == r1.classification &&
           r0.h1 == rneg.h1 && r0.mv_divisors == rneg.mv_divisors;
      std::vector<intlin::Int> expected_div =
          p == 0 ? std::vector<intlin::Int>{1}
                 : std::vector<intlin::Int>{1, intlin::Int(abs_ll(p))};
      ok = ok && r0.mv_divisors == expected_div;
      if (!ok) ++bad;
    }
    section("surgery-homology-theorem", cases, bad);
  }
  {
    long long cases = 0, bad = 0;
    diagram::SurgeryTemplate tpl = json_io::load_surgery_template(
        fs::path(data_dir) / "templates" / "surgery_pattern.json");
    std::vector<families::FamilyBuild> builds;
    builds.push_back(families::build_fig1(
        2, {1, -2, 3}, 1,
        families::load_family_descriptor(fs::path(data_dir) / "templates" /
                                         "fig1.json")));
    builds.push_back(families::build_fig2(
        2, 1, {1, -1}, {2, 0, -1}, -1,
        families::load_family_descriptor(fs::path(data_dir) / "templates" /
                                         "fig2.json")));
    for (const families::FamilyBuild& b : builds)
      for (auto [p, q] : coprime_pairs(std::min<long long>(range, 5)))
        for (int e : {0, 1}) {
          ++cases;
          try {
            diagram::HandleDiagram out = diagram::transform_diagram(
                b.diagram, b.designation, p, q, slope::make_mod2(e), tpl);
            diagram::HomologyProfile prof = diagram::homology_closed(out);
            bool ok = true;
            if (abs_ll(p) == 1)
              ok = diagram::is_s4_profile(prof);
            else if (p == 0)
              ok = prof.h[1] == intlin::AbelianGroup{1, {}};
            else
              ok = prof.h[1] ==
                   intlin::AbelianGroup{0, {intlin::Int(abs_ll(p))}};
            if (!ok) ++bad;
          } catch (const Error&) {
            ++bad;
          }
        }
    section("diagram-transform-consistency", cases, bad);
  }

  if (failures == 0) {
    std::cout << "verify: all sections passed (range " << range << ")\n";
    return 0;
  }
  std::cout << "verify: " << failures << " section(s) failed\n";
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pochette surgery calculus: gluing words, handle-diagram "
               "homology, surgery certificates"};
  app.require_subcommand(1);
  std::string data_dir = POCHETTE_DATA_DIR;
  app.add_option("--data", data_dir, "data directory with templates")
      ->capture_default_str();

  std::string diagram_path, pochette_arg, slope_text = "1/0", mode = "algebraic";
  std::string out_path, family_name;
  int eps_value = 0;
  bool lift = false, as_json = false;
  long long range = 30, k = 2, s = 1, t = 1, sign = 1;
  std::vector<long long> m_values, n_values;
  std::string pi1 = "unknown";
  surgery::SurgeryHypotheses hyp;

  CLI::App* cmd_homology =
      app.add_subcommand("homology", "homology profile of a diagram file");
  cmd_homology->add_option("path", diagram_path, "diagram JSON file")
      ->required();
  cmd_homology->add_flag("--json", as_json, "machine-readable output");

  CLI::App* cmd_surgery =
      app.add_subcommand("surgery", "surgery certificate for a diagram");
  cmd_surgery->add_option("path", diagram_path, "diagram JSON file")->required();
  cmd_surgery->add_option("--pochette", pochette_arg, "1-handle,2-handle ids")
      ->required();
  cmd_surgery->add_option("--slope", slope_text, "slope p/q or inf")->required();
  cmd_surgery->add_option("--eps", eps_value, "mod 2 framing (0 or 1)")
      ->required();
  cmd_surgery->add_option("--mode", mode, "algebraic | diagram")
      ->check(CLI::IsMember({"algebraic", "diagram"}))
      ->capture_default_str();
  cmd_surgery->add_option("--out", out_path, "write certificate JSON here");
  cmd_surgery->add_flag("--json", as_json, "print certificate JSON");
  cmd_surgery->add_flag("!--no-t2-zero", hyp.t2_zero, "drop the t2 = 0 hypothesis");
  cmd_surgery->add_flag("!--no-l-null", hyp.l_nullhomologous,
                        "drop the i11([l]) = 0 hypothesis");
  cmd_surgery->add_flag("!--no-h2-constrained", hyp.h2_image_constrained,
                        "drop the constrained-H2-image hypothesis");
  cmd_surgery->add_option("--pi1", pi1, "declared pi_1 of the result")
      ->check(CLI::IsMember({"true", "false", "unknown"}))
      ->capture_default_str();

  CLI::App* cmd_word =
      app.add_subcommand("word", "gluing word E_{p/q,eps} and its H1 action");
  cmd_word->add_option("--slope", slope_text, "slope p/q or inf")->required();
  cmd_word->add_option("--eps", eps_value, "mod 2 framing (0 or 1)")->required();
  cmd_word->add_flag("--lift", lift, "also print the natural lift");
  cmd_word->add_flag("--json", as_json, "machine-readable output");

  CLI::App* cmd_verify =
      app.add_subcommand("verify", "exhaustive checks of the calculus laws");
  cmd_verify->add_option("--range", range, "slope bound")->capture_default_str();

  CLI::App* cmd_family =
      app.add_subcommand("family", "instantiate a 4-sphere family diagram");
  cmd_family->add_option("name", family_name, "fig1 | fig2")->required();
  cmd_family->add_option("--k", k, "fig1 parameter k >= 2");
  cmd_family->add_option("--s", s, "fig2 parameter s >= 1");
  cmd_family->add_option("--t", t, "fig2 parameter t >= 1");
  cmd_family->add_option("--m", m_values, "fig2 framings, sum must be 0")
      ->delimiter(',');
  cmd_family->add_option("--n", n_values, "framing tuple")->delimiter(',');
  cmd_family->add_option("--sign", sign, "+1 or -1 framing choice")
      ->capture_default_str();
  cmd_family->add_option("--out", out_path, "output diagram path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*cmd_homology) return run_homology(diagram_path, as_json);
    if (*cmd_word)
      return run_word(parse_slope_arg(slope_text), eps_value, lift, as_json);
    if (*cmd_surgery) {
      if (pi1 == "true") hyp.simply_connected_result = true;
      if (pi1 == "false") hyp.simply_connected_result = false;
      return run_surgery(diagram_path, pochette_arg, parse_slope_arg(slope_text),
                         eps_value, mode, hyp, out_path, data_dir, as_json);
    }
    if (*cmd_verify) return run_verify(range, data_dir);
    if (*cmd_family)
      return run_family(family_name, k, s, t, m_values, n_values, sign,
                        out_path, data_dir);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
