#include "pochette/json_io.hpp"

#include <fstream>
#include <limits>
#include <set>

namespace pochette::json_io {

namespace {

void require_keys(const json& j, const std::set<std::string>& required,
                  const std::set<std::string>& optional,
                  const std::string& where) {
  if (!j.is_object()) throw ParseError(where + ": expected a JSON object");
  for (const auto& [key, value] : j.items())
    if (!required.count(key) && !optional.count(key))
      throw ParseError(where + ": unknown field '" + key + "'");
  for (const std::string& key : required)
    if (!j.contains(key))
      throw ParseError(where + ": missing field '" + key + "'");
}

long long as_int(const json& j, const std::string& where) {
  if (!j.is_number_integer())
    throw ParseError(where + ": expected an integer");
  return j.get<long long>();
}

std::map<std::string, long long> as_int_map(const json& j,
                                            const std::string& where) {
  if (!j.is_object()) throw ParseError(where + ": expected an object");
  std::map<std::string, long long> out;
  for (const auto& [key, value] : j.items()) {
    long long v = as_int(value, where + "." + key);
    if (v != 0) out[key] = v;
  }
  return out;
}

long long small(const intlin::Int& v, const std::string& where) {
  if (v > std::numeric_limits<long long>::max() ||
      v < std::numeric_limits<long long>::min())
    throw ParseError(where + ": value too large for certificate output");
  return v.convert_to<long long>();
}

}  // namespace

diagram::HandleDiagram diagram_from_json(const json& j) {
  require_keys(j, {"one_handles", "two_handles", "n3", "n4"}, {"name"},
               "diagram");
  diagram::HandleDiagram d;
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw ParseError("diagram.name: expected a string");
    d.name = j["name"].get<std::string>();
  }
  if (!j["one_handles"].is_array())
    throw ParseError("diagram.one_handles: expected an array");
  for (const json& id : j["one_handles"]) {
    if (!id.is_string())
      throw ParseError("diagram.one_handles: expected string ids");
    d.one_handles.push_back(id.get<std::string>());
  }
  if (!j["two_handles"].is_array())
    throw ParseError("diagram.two_handles: expected an array");
  for (const json& h : j["two_handles"]) {
    require_keys(h, {"id", "framing"}, {"linking", "two_linking", "meridian"},
                 "two_handle");
    diagram::TwoHandle th;
    if (!h["id"].is_string()) throw ParseError("two_handle.id: expected a string");
    th.id = h["id"].get<std::string>();
    th.framing = as_int(h["framing"], "two_handle.framing");
    if (h.contains("linking")) th.linking = as_int_map(h["linking"], "linking");
    if (h.contains("two_linking"))
      th.two_linking = as_int_map(h["two_linking"], "two_linking");
    if (h.contains("meridian")) {
      if (!h["meridian"].is_boolean())
        throw ParseError("two_handle.meridian: expected a boolean");
      th.meridian = h["meridian"].get<bool>();
    }
    d.two_handles.push_back(th);
  }
  d.n3 = as_int(j["n3"], "diagram.n3");
  d.n4 = as_int(j["n4"], "diagram.n4");
  diagram::validate(d);
  return d;
}

json diagram_to_json(const diagram::HandleDiagram& d) {
  json j;
  j["name"] = d.name;
  j["one_handles"] = d.one_handles;
  json handles = json::array();
  for (const diagram::TwoHandle& h : d.two_handles) {
    json hj;
    hj["id"] = h.id;
    hj["framing"] = h.framing;
    hj["linking"] = json::object();
    for (const auto& [id, v] : h.linking)
      if (v != 0) hj["linking"][id] = v;
    if (!h.two_linking.empty()) {
      hj["two_linking"] = json::object();
      for (const auto& [id, v] : h.two_linking)
        if (v != 0) hj["two_linking"][id] = v;
    }
    if (h.meridian) hj["meridian"] = true;
    handles.push_back(hj);
  }
  j["two_handles"] = handles;
  j["n3"] = d.n3;
  j["n4"] = d.n4;
  return j;
}

diagram::HandleDiagram load_diagram(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open diagram file " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParseError("bad JSON in " + path.string() + ": " + e.what());
  }
  return diagram_from_json(j);
}

void save_diagram(const diagram::HandleDiagram& d,
                  const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write diagram file " + path.string());
  out << diagram_to_json(d).dump(2) << "\n";
}

json group_to_json(const intlin::AbelianGroup& g) {
  json j;
  j["free_rank"] = g.free_rank;
  json torsion = json::array();
  for (const intlin::Int& t : g.torsion) torsion.push_back(small(t, "torsion"));
  j["torsion"] = torsion;
  return j;
}

json profile_to_json(const diagram::HomologyProfile& p) {
  json j;
  for (int i = 0; i < 5; ++i) j["h" + std::to_string(i)] = group_to_json(p.h[i]);
  return j;
}

json certificate_json(long long p, long long q, slope::Mod2Framing eps,
                      const surgery::SurgeryHypotheses& hyp,
                      const diagram::HomologyProfile& x_profile,
                      const surgery::SurgeryResult& result,
                      surgery::HomeoVerdict verdict) {
  json j;
  j["slope"] = std::to_string(p) + "/" + std::to_string(q);
  j["slope_canonical"] = slope::to_string(slope::normalize_slope(p, q));
  j["eps"] = eps.value;
  json h;
  h["t2_zero"] = hyp.t2_zero;
  h["l_nullhomologous"] = hyp.l_nullhomologous;
  h["h2_image_constrained"] = hyp.h2_image_constrained;
  h["simply_connected_result"] =
      hyp.simply_connected_result.has_value()
          ? json(*hyp.simply_connected_result)
          : json(nullptr);
  j["hypotheses"] = h;
  j["x_profile"] = profile_to_json(x_profile);

  json prof;
  prof["h0"] = group_to_json(result.h0);
  prof["h1"] = result.h1 ? group_to_json(*result.h1) : json(nullptr);
  prof["h2"] = result.h2 ? group_to_json(*result.h2) : json(nullptr);
  prof["h3"] = result.h3 ? group_to_json(*result.h3) : json(nullptr);
  prof["h4"] = group_to_json(result.h4);
  j["profile"] = prof;

  j["classification"] = surgery::to_string(result.classification);
  j["torsion_order"] = result.torsion_order;
  json divisors = json::array();
  for (const intlin::Int& d : result.mv_divisors)
    divisors.push_back(small(d, "mv divisor"));
  j["mv_elementary_divisors"] = divisors;
  j["homeomorphic_to_x"] = surgery::to_string(verdict);
  j["gluck"] = surgery::is_gluck(p, q, eps);
  return j;
}

void check_certificate_structure(const json& cert) {
  require_keys(cert,
               {"slope", "slope_canonical", "eps", "hypotheses", "x_profile",
                "profile", "classification", "torsion_order",
                "mv_elementary_divisors", "homeomorphic_to_x", "gluck"},
               {"diagram"}, "certificate");
  require_keys(cert["hypotheses"],
               {"t2_zero", "l_nullhomologous", "h2_image_constrained",
                "simply_connected_result"},
               {}, "certificate.hypotheses");
  for (const char* key : {"h0", "h1", "h2", "h3", "h4"}) {
    const json& g = cert["profile"].at(key);
    if (g.is_null()) continue;
    require_keys(g, {"free_rank", "torsion"}, {},
                 std::string("certificate.profile.") + key);
  }
  if (!cert["mv_elementary_divisors"].is_array())
    throw ParseError("certificate.mv_elementary_divisors: expected an array");
  slope::parse_slope(cert["slope"].get<std::string>());
}

namespace {

diagram::SurgeryPattern pattern_from_json(const json& j, const std::string& where) {
  require_keys(j,
               {"carve_designated_two_handle", "undot_designated_one_handle",
                "new_dot_linking", "band_with_undotted", "new_framing",
                "entwined_framing_shift", "slide_entwined_off_new_dot",
                "meridians_required_unless_unit_p", "extra_three_handles"},
               {}, where);
  diagram::SurgeryPattern p;
  p.carve_designated_two_handle = j["carve_designated_two_handle"].get<bool>();
  p.undot_designated_one_handle = j["undot_designated_one_handle"].get<bool>();
  p.new_dot_linking = j["new_dot_linking"].get<std::string>();
  p.band_with_undotted = j["band_with_undotted"].get<std::string>();
  p.new_framing = j["new_framing"].get<std::string>();
  p.entwined_framing_shift = j["entwined_framing_shift"].get<std::string>();
  p.slide_entwined_off_new_dot = j["slide_entwined_off_new_dot"].get<bool>();
  p.meridians_required_unless_unit_p =
      j["meridians_required_unless_unit_p"].get<bool>();
  p.extra_three_handles = as_int(j["extra_three_handles"], where);
  return p;
}

}  // namespace

diagram::SurgeryTemplate load_surgery_template(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open surgery template " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParseError("bad JSON in " + path.string() + ": " + e.what());
  }
  require_keys(j, {"general", "zero_slope"}, {"note"}, "surgery template");
  diagram::SurgeryTemplate tpl;
  tpl.general = pattern_from_json(j["general"], "surgery template.general");
  tpl.zero_slope = pattern_from_json(j["zero_slope"], "surgery template.zero_slope");
  if (j.contains("note")) tpl.note = j["note"].get<std::string>();
  return tpl;
}

}  // namespace pochette::json_io
