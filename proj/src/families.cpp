#include "pochette/families.hpp"

#include <fstream>
#include <numeric>

#include <json.hpp>

namespace pochette::families {

FamilyDescriptor load_family_descriptor(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open family descriptor " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("bad JSON in " + path.string() + ": " + e.what());
  }
  FamilyDescriptor d;
  d.name = j.at("name").get<std::string>();
  d.note = j.value("note", "");
  d.pm_knot_count = j.at("pm_knot_count").get<long long>();
  d.pochette_entwined_n_knots = j.value("pochette_entwined_n_knots", 0LL);
  d.u_entwined_knot = j.at("u_entwined_knot").get<std::string>();
  d.u_entwined_linking = j.value("u_entwined_linking", 1LL);
  return d;
}

namespace {

void check_sign(long long sign) {
  if (sign != 1 && sign != -1) throw Error("family: sign must be +1 or -1");
}

diagram::TwoHandle knot(std::string id, long long framing) {
  diagram::TwoHandle h;
  h.id = std::move(id);
  h.framing = framing;
  return h;
}

void entwine_with_u(diagram::HandleDiagram& d, const std::string& knot_id,
                    long long value) {
  for (diagram::TwoHandle& h : d.two_handles) {
    if (h.id == knot_id) h.two_linking["u"] = value;
    if (h.id == "u") h.two_linking[knot_id] = value;
  }
}

}  // namespace

FamilyBuild build_fig1(long long k, const std::vector<long long>& n,
                       long long sign, const FamilyDescriptor& desc) {
  if (k < 2) throw Error("fig1: k must be an integer greater than one");
  check_sign(sign);
  const long long knots = k * k - 1;
  if (static_cast<long long>(n.size()) != knots)
    throw Error("fig1: n must have k^2 - 1 = " + std::to_string(knots) +
                " entries, got " + std::to_string(n.size()));
  if (desc.pm_knot_count < 1 || desc.pochette_entwined_n_knots > knots)
    throw Error("fig1: descriptor constants out of range");

  diagram::HandleDiagram d;
  d.name = "fig1(k=" + std::to_string(k) + ")";
  d.n3 = 1;
  d.n4 = 1;
  d.one_handles.push_back("c");
  const long long dots = knots + desc.pm_knot_count - 1;
  for (long long i = 1; i <= dots; ++i)
    d.one_handles.push_back("d" + std::to_string(i));

  d.two_handles.push_back(knot("u", 0));
  for (long long i = 1; i <= knots; ++i) {
    diagram::TwoHandle h = knot("K" + std::to_string(i), n[i - 1]);
    h.linking["d" + std::to_string(i)] = 1;
    if (i > knots - desc.pochette_entwined_n_knots) {
      h.linking["c"] = 1;
      h.meridian = true;
    }
    d.two_handles.push_back(h);
  }
  for (long long j = 1; j < desc.pm_knot_count; ++j) {
    diagram::TwoHandle h = knot("B" + std::to_string(j), sign);
    h.linking["d" + std::to_string(knots + j)] = 1;
    d.two_handles.push_back(h);
  }
  diagram::TwoHandle last = knot("B" + std::to_string(desc.pm_knot_count), sign);
  last.linking["c"] = 1;
  last.meridian = true;
  d.two_handles.push_back(last);

  entwine_with_u(d, desc.u_entwined_knot, desc.u_entwined_linking);
  diagram::validate(d);
  return FamilyBuild{d, diagram::PochetteDesignation{"c", "u"}};
}

FamilyBuild build_fig2(long long s, long long t,
                       const std::vector<long long>& m,
                       const std::vector<long long>& n, long long sign,
                       const FamilyDescriptor& desc) {
  if (s < 1 || t < 1) throw Error("fig2: s and t must be positive");
  check_sign(sign);
  if (static_cast<long long>(m.size()) != s)
    throw Error("fig2: m must have s = " + std::to_string(s) + " entries");
  if (std::accumulate(m.begin(), m.end(), 0LL) != 0)
    throw Error("fig2: the entries of m must sum to zero");
  const long long nknots = s * t + 1;
  if (static_cast<long long>(n.size()) != nknots)
    throw Error("fig2: n must have s*t + 1 = " + std::to_string(nknots) +
                " entries, got " + std::to_string(n.size()));
  if (desc.pm_knot_count < 1)
    throw Error("fig2: descriptor constants out of range");

  diagram::HandleDiagram d;
  d.name = "fig2(s=" + std::to_string(s) + ",t=" + std::to_string(t) + ")";
  d.n3 = 1;
  d.n4 = 1;
  d.one_handles.push_back("c");
  const long long dots = nknots + s + desc.pm_knot_count - 1;
  for (long long i = 1; i <= dots; ++i)
    d.one_handles.push_back("d" + std::to_string(i));

  d.two_handles.push_back(knot("u", 0));
  for (long long i = 1; i <= nknots; ++i) {
    diagram::TwoHandle h = knot("N" + std::to_string(i), n[i - 1]);
    h.linking["d" + std::to_string(i)] = 1;
    if (i == nknots) {
      h.linking["c"] = 1;
      h.meridian = true;
    }
    d.two_handles.push_back(h);
  }
  for (long long i = 1; i <= s; ++i) {
    diagram::TwoHandle h = knot("M" + std::to_string(i), m[i - 1]);
    h.linking["d" + std::to_string(nknots + i)] = 1;
    h.linking["c"] = 1;
    h.meridian = true;
    d.two_handles.push_back(h);
  }
  for (long long j = 1; j < desc.pm_knot_count; ++j) {
    diagram::TwoHandle h = knot("B" + std::to_string(j), sign);
    h.linking["d" + std::to_string(nknots + s + j)] = 1;
    d.two_handles.push_back(h);
  }
  diagram::TwoHandle last = knot("B" + std::to_string(desc.pm_knot_count), sign);
  last.linking["c"] = 1;
  last.meridian = true;
  d.two_handles.push_back(last);

  entwine_with_u(d, desc.u_entwined_knot, desc.u_entwined_linking);
  diagram::validate(d);
  return FamilyBuild{d, diagram::PochetteDesignation{"c", "u"}};
}

}  // namespace pochette::families
