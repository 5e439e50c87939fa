#include "pochette/diagram.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace pochette::diagram {

namespace {

long long abs_ll(long long x) { return x < 0 ? -x : x; }

const TwoHandle* find_two_handle(const HandleDiagram& d, const std::string& id) {
  for (const TwoHandle& h : d.two_handles)
    if (h.id == id) return &h;
  return nullptr;
}

long long linking_of(const TwoHandle& h, const std::string& one_handle_id) {
  auto it = h.linking.find(one_handle_id);
  return it == h.linking.end() ? 0 : it->second;
}

// Resolves a pattern field that is either "p"/"q"/"eps" or an integer.
long long resolve_field(const std::string& field, long long p, long long q,
                        int eps) {
  if (field == "p") return p;
  if (field == "q") return q;
  if (field == "eps") return eps;
  try {
    std::size_t pos = 0;
    long long v = std::stoll(field, &pos);
    if (pos == field.size()) return v;
  } catch (const std::exception&) {
  }
  throw ParseError("surgery template: bad symbolic field '" + field + "'");
}

}  // namespace

HomologyProfile s4_profile() {
  HomologyProfile p;
  p.h[0] = intlin::AbelianGroup{1, {}};
  p.h[4] = intlin::AbelianGroup{1, {}};
  return p;
}

bool is_s4_profile(const HomologyProfile& p) { return p == s4_profile(); }

void validate(const HandleDiagram& d) {
  if (d.n3 < 0 || d.n4 < 0) throw Error("negative handle count");
  if (d.n4 > 1)
    throw MultipleTopHandles("diagram has " + std::to_string(d.n4) +
                             " 4-handles");
  std::set<std::string> ids;
  for (const std::string& id : d.one_handles)
    if (!ids.insert(id).second) throw Error("duplicate handle id '" + id + "'");
  for (const TwoHandle& h : d.two_handles)
    if (!ids.insert(h.id).second)
      throw Error("duplicate handle id '" + h.id + "'");

  std::set<std::string> dots(d.one_handles.begin(), d.one_handles.end());
  for (const TwoHandle& h : d.two_handles) {
    for (const auto& [id, v] : h.linking)
      if (!dots.count(id))
        throw DanglingReference("2-handle '" + h.id +
                                "' links unknown dotted circle '" + id + "'");
    for (const auto& [id, v] : h.two_linking) {
      if (id == h.id)
        throw DanglingReference("2-handle '" + h.id + "' linked with itself");
      const TwoHandle* other = find_two_handle(d, id);
      if (other == nullptr)
        throw DanglingReference("2-handle '" + h.id +
                                "' linked with unknown 2-handle '" + id + "'");
      auto back = other->two_linking.find(h.id);
      if (back == other->two_linking.end() || back->second != v)
        throw AsymmetricLinking("two_linking between '" + h.id + "' and '" +
                                id + "' is not symmetric");
    }
  }
}

void validate_designation(const HandleDiagram& d, const PochetteDesignation& poch) {
  validate(d);
  if (std::find(d.one_handles.begin(), d.one_handles.end(),
                poch.one_handle_id) == d.one_handles.end())
    throw DanglingReference("designated 1-handle '" + poch.one_handle_id +
                            "' not in diagram");
  const TwoHandle* u = find_two_handle(d, poch.two_handle_id);
  if (u == nullptr)
    throw DanglingReference("designated 2-handle '" + poch.two_handle_id +
                            "' not in diagram");
  if (u->framing != 0)
    throw PatternPreconditionFailed("designated 2-handle must be 0-framed");
  // Boundary-sum structure: the designated 2-handle is algebraically
  // split from every dotted circle, not only the designated one.
  for (const auto& [id, v] : u->linking)
    if (v != 0)
      throw PatternPreconditionFailed(
          "designated 2-handle must have zero linking with dotted circles");
}

intlin::IntMatrix linking_matrix(const HandleDiagram& d) {
  validate(d);
  intlin::IntMatrix m(d.one_handles.size(), d.two_handles.size());
  for (std::size_t c = 0; c < d.two_handles.size(); ++c)
    for (std::size_t r = 0; r < d.one_handles.size(); ++r)
      m.at(r, c) = linking_of(d.two_handles[c], d.one_handles[r]);
  return m;
}

long long euler_characteristic(const HandleDiagram& d) {
  validate(d);
  return 1 - static_cast<long long>(d.one_handles.size()) +
         static_cast<long long>(d.two_handles.size()) - d.n3 + d.n4;
}

HomologyProfile homology_closed(const HandleDiagram& d) {
  validate(d);
  if (d.n4 != 1)
    throw NotClosed("closed-manifold homology needs exactly one 4-handle");
  HomologyProfile p;
  p.h[0] = intlin::AbelianGroup{1, {}};
  p.h[1] = intlin::cokernel(linking_matrix(d));
  const long long b1 = static_cast<long long>(p.h[1].free_rank);
  const long long b2 = euler_characteristic(d) - 2 + 2 * b1;
  if (b2 < 0)
    throw InconsistentDiagram("second Betti number would be " +
                              std::to_string(b2));
  p.h[2] = intlin::AbelianGroup{static_cast<std::size_t>(b2), p.h[1].torsion};
  p.h[3] = intlin::AbelianGroup{static_cast<std::size_t>(b1), {}};
  p.h[4] = intlin::AbelianGroup{1, {}};
  return p;
}

bool is_homology_sphere(const HandleDiagram& d) {
  return is_s4_profile(homology_closed(d));
}

HandleDiagram cancel_chain_pairs(const HandleDiagram& d) {
  validate(d);
  if (d.n4 != 1) throw NotClosed("chain cancellation is for closed diagrams");
  HandleDiagram out = d;

  auto drop_zeroes = [](std::map<std::string, long long>& m) {
    for (auto it = m.begin(); it != m.end();)
      it = it->second == 0 ? m.erase(it) : std::next(it);
  };

  for (;;) {
    // first unit pivot in (dot order, 2-handle order)
    std::size_t dot_idx = out.one_handles.size();
    std::size_t h_idx = out.two_handles.size();
    for (std::size_t r = 0; r < out.one_handles.size() && dot_idx == out.one_handles.size(); ++r)
      for (std::size_t c = 0; c < out.two_handles.size(); ++c) {
        long long v = linking_of(out.two_handles[c], out.one_handles[r]);
        if (v == 1 || v == -1) {
          dot_idx = r;
          h_idx = c;
          break;
        }
      }
    if (dot_idx == out.one_handles.size()) break;

    const std::string dot = out.one_handles[dot_idx];
    const TwoHandle pivot = out.two_handles[h_idx];
    const long long s = linking_of(pivot, dot);
    // slide every other 2-handle off the dot over the pivot handle
    for (std::size_t c = 0; c < out.two_handles.size(); ++c) {
      if (c == h_idx) continue;
      TwoHandle& k = out.two_handles[c];
      long long a = linking_of(k, dot);
      if (a == 0) continue;
      for (const auto& [r, v] : pivot.linking) k.linking[r] -= a * s * v;
      drop_zeroes(k.linking);
    }
    out.one_handles.erase(out.one_handles.begin() + dot_idx);
    out.two_handles.erase(out.two_handles.begin() + h_idx);
    for (TwoHandle& k : out.two_handles) {
      k.linking.erase(dot);
      k.two_linking.erase(pivot.id);
    }
  }

  // null columns cancel against 3-handles
  for (;;) {
    if (out.n3 == 0) break;
    auto it = std::find_if(out.two_handles.begin(), out.two_handles.end(),
                           [](const TwoHandle& h) {
                             for (const auto& [id, v] : h.linking)
                               if (v != 0) return false;
                             return true;
                           });
    if (it == out.two_handles.end()) break;
    const std::string gone = it->id;
    out.two_handles.erase(it);
    for (TwoHandle& k : out.two_handles) k.two_linking.erase(gone);
    out.n3 -= 1;
  }
  return out;
}

HandleDiagram transform_diagram(const HandleDiagram& d,
                                const PochetteDesignation& poch, long long p,
                                long long q, slope::Mod2Framing eps,
                                const SurgeryTemplate& tpl) {
  validate_designation(d, poch);
  slope::require_slope_pair(p, q);
  const HomologyProfile x_profile = homology_closed(d);
  if (!x_profile.h[1].is_trivial())
    throw PatternPreconditionFailed(
        "surgery transformation needs a simply-connected-shaped diagram");

  const bool zero_slope = slope::normalize_slope(p, q) == slope::SlopeFraction{0, 1};
  const SurgeryPattern& pattern = zero_slope ? tpl.zero_slope : tpl.general;

  if (abs_ll(p) != 1 && pattern.meridians_required_unless_unit_p) {
    for (const TwoHandle& k : d.two_handles) {
      if (k.id == poch.two_handle_id) continue;
      if (linking_of(k, poch.one_handle_id) != 0 && !k.meridian)
        throw MissingMeridians("2-handle '" + k.id +
                               "' entwined with the dotted circle needs a "
                               "0-framed meridian for |p| != 1");
    }
  }

  const long long lk_new_dot = resolve_field(pattern.new_dot_linking, p, q, eps.value);
  const long long band = resolve_field(pattern.band_with_undotted, p, q, eps.value);
  const long long gm_framing = resolve_field(pattern.new_framing, p, q, eps.value);
  const long long framing_shift =
      resolve_field(pattern.entwined_framing_shift, p, q, eps.value);

  const std::string dot_id = poch.two_handle_id + ".dot";
  const std::string undot_id = poch.one_handle_id + ".undot";
  const std::string gm_id = "gm." + poch.two_handle_id;

  for (const std::string& id : {dot_id, undot_id, gm_id})
    if (find_two_handle(d, id) != nullptr ||
        std::find(d.one_handles.begin(), d.one_handles.end(), id) !=
            d.one_handles.end())
      throw PatternPreconditionFailed("derived handle id '" + id +
                                      "' collides with the input diagram");

  HandleDiagram out;
  out.name = (d.name.empty() ? "diagram" : d.name) + " | surgery " +
             std::to_string(p) + "/" + std::to_string(q) +
             " eps=" + std::to_string(eps.value);
  out.n3 = d.n3 + pattern.extra_three_handles;
  out.n4 = d.n4;

  for (const std::string& id : d.one_handles) {
    if (id == poch.one_handle_id) {
      if (pattern.carve_designated_two_handle) out.one_handles.push_back(dot_id);
    } else {
      out.one_handles.push_back(id);
    }
  }

  TwoHandle undot;
  undot.id = undot_id;
  undot.framing = 0;

  TwoHandle gm;
  gm.id = gm_id;
  gm.framing = gm_framing;
  if (lk_new_dot != 0) gm.linking[dot_id] = lk_new_dot;
  if (band != 0) {
    gm.two_linking[undot_id] = band;
    undot.two_linking[gm_id] = band;
  }

  std::vector<TwoHandle> rewritten;
  for (const TwoHandle& k : d.two_handles) {
    if (k.id == poch.two_handle_id) continue;
    TwoHandle copy = k;
    long long entwined = linking_of(k, poch.one_handle_id);
    copy.linking.erase(poch.one_handle_id);
    copy.two_linking.erase(poch.two_handle_id);
    if (entwined != 0) {
      copy.framing += framing_shift;
      // the old geometric winding with the carved circle survives as
      // 2-handle/2-handle linking with the undotted component
      copy.two_linking[undot_id] = entwined;
      undot.two_linking[copy.id] = entwined;
    }
    if (!pattern.slide_entwined_off_new_dot && entwined != 0)
      copy.linking[dot_id] = entwined;
    rewritten.push_back(copy);
  }

  for (const TwoHandle& k : d.two_handles) {
    if (k.id == poch.two_handle_id) {
      if (pattern.undot_designated_one_handle) out.two_handles.push_back(undot);
    } else {
      auto it = std::find_if(rewritten.begin(), rewritten.end(),
                             [&](const TwoHandle& h) { return h.id == k.id; });
      out.two_handles.push_back(*it);
    }
  }
  out.two_handles.push_back(gm);

  validate(out);

  // homological postcondition gate
  const HomologyProfile got = homology_closed(out);
  const intlin::AbelianGroup z{1, {}};
  bool ok = got.h[0] == z && got.h[4] == z;
  if (abs_ll(p) == 1) {
    ok = ok && got == x_profile;
  } else if (p == 0) {
    ok = ok && got.h[1] == z;
  } else {
    ok = ok && got.h[1] == intlin::AbelianGroup{0, {intlin::Int(abs_ll(p))}};
  }
  if (!ok)
    throw PatternPreconditionFailed(
        "surgery template output does not match the algebraic prediction");
  return out;
}

}  // namespace pochette::diagram
