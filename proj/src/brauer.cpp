#include "surfalg/brauer.hpp"

#include <algorithm>
#include <queue>

namespace surfalg {

int BrauerGraph::vertex_index(const std::string& id) const {
  auto it = vertex_idx_.find(id);
  if (it == vertex_idx_.end()) throw Error("UnknownVertex", "no ribbon vertex '" + id + "'");
  return it->second;
}

int BrauerGraph::edge_index(const std::string& id) const {
  auto it = edge_idx_.find(id);
  if (it == edge_idx_.end()) throw Error("UnknownEdge", "no edge '" + id + "'");
  return it->second;
}

int BrauerGraph::edge_of_half(const std::string& h) const {
  auto it = half_to_edge_.find(h);
  if (it == half_to_edge_.end()) throw Error("UnknownHalfEdge", "no half-edge '" + h + "'");
  return it->second;
}

int BrauerGraph::vertex_of_half(const std::string& h) const {
  auto it = half_to_vertex_.find(h);
  if (it == half_to_vertex_.end()) throw Error("UnknownHalfEdge", "no half-edge '" + h + "'");
  return it->second;
}

const std::string& BrauerGraph::partner(const std::string& h) const {
  auto it = half_partner_.find(h);
  if (it == half_partner_.end()) throw Error("UnknownHalfEdge", "no half-edge '" + h + "'");
  return it->second;
}

BrauerGraph BrauerGraph::validate(const RawBrauerGraph& raw) {
  std::vector<std::string> diags;
  BrauerGraph g;

  std::vector<RawBrauerVertex> vs = raw.vertices;
  std::sort(vs.begin(), vs.end(),
            [](const RawBrauerVertex& a, const RawBrauerVertex& b) { return a.id < b.id; });
  for (size_t i = 0; i + 1 < vs.size(); ++i)
    if (vs[i].id == vs[i + 1].id) diags.push_back("duplicate ribbon vertex '" + vs[i].id + "'");
  std::vector<RawBrauerEdge> es = raw.edges;
  std::sort(es.begin(), es.end(),
            [](const RawBrauerEdge& a, const RawBrauerEdge& b) { return a.id < b.id; });
  for (size_t i = 0; i + 1 < es.size(); ++i)
    if (es[i].id == es[i + 1].id) diags.push_back("duplicate edge '" + es[i].id + "'");
  if (es.empty()) diags.push_back("a Brauer graph needs at least one edge");
  if (vs.empty()) diags.push_back("no ribbon vertices");
  if (!diags.empty()) throw ValidationError(diags);

  for (size_t i = 0; i < vs.size(); ++i) {
    g.vertex_ids_.push_back(vs[i].id);
    g.vertex_idx_[vs[i].id] = static_cast<int>(i);
    if (vs[i].multiplicity < 1)
      diags.push_back("multiplicity of '" + vs[i].id + "' must be >= 1");
    g.multiplicity_.push_back(vs[i].multiplicity);
    g.cyclic_.push_back(vs[i].cyclic_order);
  }
  for (size_t i = 0; i < es.size(); ++i) {
    g.edge_ids_.push_back(es[i].id);
    g.edge_idx_[es[i].id] = static_cast<int>(i);
    g.edge_halves_.push_back(es[i].half_edges);
  }

  // Each half-edge belongs to exactly one edge and sits in exactly one
  // cyclic order.
  for (int e = 0; e < g.edge_count(); ++e) {
    for (const std::string& h : g.edge_halves_[e]) {
      if (g.half_to_edge_.count(h))
        diags.push_back("half-edge '" + h + "' listed by more than one edge");
      g.half_to_edge_[h] = e;
    }
    const auto& [h1, h2] = std::pair{g.edge_halves_[e][0], g.edge_halves_[e][1]};
    if (h1 == h2)
      diags.push_back("edge '" + g.edge_ids_[e] + "' repeats a half-edge");
    g.half_partner_[h1] = h2;
    g.half_partner_[h2] = h1;
  }
  std::map<std::string, int> seen_in_cyclic;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.cyclic_[v].empty())
      diags.push_back("ribbon vertex '" + g.vertex_ids_[v] + "' has no attached half-edges");
    for (const std::string& h : g.cyclic_[v]) {
      if (!g.half_to_edge_.count(h))
        diags.push_back("cyclic order of '" + g.vertex_ids_[v] + "' mentions unknown half-edge '" +
                        h + "'");
      if (seen_in_cyclic.count(h))
        diags.push_back("half-edge '" + h + "' appears in more than one cyclic order");
      seen_in_cyclic[h] = v;
      g.half_to_vertex_[h] = v;
    }
  }
  for (const auto& [h, e] : g.half_to_edge_)
    if (!seen_in_cyclic.count(h))
      diags.push_back("half-edge '" + h + "' of edge '" + g.edge_ids_[e] +
                      "' is attached to no vertex");
  if (!diags.empty()) throw ValidationError(diags);

  // Connectivity over the vertex-edge incidence.
  std::vector<std::vector<int>> adj(g.vertex_count());
  for (int e = 0; e < g.edge_count(); ++e) {
    int v1 = g.vertex_of_half(g.edge_halves_[e][0]);
    int v2 = g.vertex_of_half(g.edge_halves_[e][1]);
    adj[v1].push_back(v2);
    adj[v2].push_back(v1);
  }
  std::vector<char> seen(g.vertex_count(), 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  int count = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        q.push(w);
      }
  }
  if (count != g.vertex_count()) diags.push_back("Disconnected: graph is not connected");
  if (!diags.empty()) throw ValidationError(diags);

  // Canonical rotation of every cyclic order.
  for (auto& cyc : g.cyclic_) {
    auto min_it = std::min_element(cyc.begin(), cyc.end());
    std::rotate(cyc.begin(), min_it, cyc.end());
  }
  return g;
}

WeightedBiserialQuiver brauer_to_biserial(const BrauerGraph& g) {
  RawQuiver raw;
  raw.vertices = g.edge_ids();

  // Arrow per half-edge h: edge(h) -> edge(successor of h at its vertex).
  std::map<std::string, std::string> succ;
  for (int v = 0; v < g.vertex_count(); ++v) {
    const auto& cyc = g.cyclic_order(v);
    for (size_t i = 0; i < cyc.size(); ++i) succ[cyc[i]] = cyc[(i + 1) % cyc.size()];
  }
  for (const auto& [h, h_next] : succ)
    raw.arrows.push_back(
        {h, g.edge_ids()[g.edge_of_half(h)], g.edge_ids()[g.edge_of_half(h_next)]});

  // f(h) = partner(successor(h)): the companion permutation whose bar-twist
  // recovers the cyclic successor map as g.
  std::map<std::string, std::string> f;
  for (const auto& [h, h_next] : succ) f[h] = g.partner(h_next);

  BiserialQuiver bq = BiserialQuiver::validate(raw, f);

  std::map<std::string, int> weights;
  for (const auto& orbit : bq.g_orbits().orbits) {
    const std::string& rep = bq.arrow_id(orbit[0]);
    weights[rep] = g.multiplicity(g.vertex_of_half(rep));
  }
  return WeightedBiserialQuiver::create(std::move(bq), weights);
}

BrauerGraph biserial_to_brauer(const WeightedBiserialQuiver& w) {
  const BiserialQuiver& bq = w.quiver();
  RawBrauerGraph raw;
  const auto& dec = w.g_orbits();
  for (size_t oi = 0; oi < dec.orbits.size(); ++oi) {
    RawBrauerVertex v;
    v.id = "v_" + w.orbit_rep(static_cast<int>(oi));
    v.multiplicity = w.orbit_weight(static_cast<int>(oi));
    for (int a : dec.orbits[oi]) v.cyclic_order.push_back("h_" + bq.arrow_id(a));
    raw.vertices.push_back(std::move(v));
  }
  for (int v = 0; v < bq.vertex_count(); ++v) {
    const auto& out = bq.arrows_from(v);
    raw.edges.push_back(
        {bq.vertex_id(v), {"h_" + bq.arrow_id(out[0]), "h_" + bq.arrow_id(out[1])}});
  }
  return BrauerGraph::validate(raw);
}

LoopKind classify_loop(const BrauerGraph& g, const std::string& arrow_id) {
  WeightedBiserialQuiver w = brauer_to_biserial(g);
  const BiserialQuiver& bq = w.quiver();
  int a = bq.arrow_index(arrow_id);
  if (!bq.is_loop(a)) return LoopKind::NotALoop;
  return bq.g(a) == a ? LoopKind::External : LoopKind::Internal;
}

std::vector<std::vector<std::string>> green_walks(const BiserialQuiver& bq) {
  std::vector<std::vector<std::string>> walks;
  for (const auto& orbit : bq.f_orbits().orbits) {
    std::vector<std::string> walk;
    for (int a : orbit) walk.push_back(bq.vertex_id(bq.source(a)));
    walks.push_back(std::move(walk));
  }
  return walks;
}

std::optional<RibbonIsomorphism> ribbon_isomorphic(const BrauerGraph& a, const BrauerGraph& b,
                                                   int max_edges) {
  if (a.edge_count() > max_edges || b.edge_count() > max_edges)
    throw Error("SizeLimitExceeded",
                "ribbon isomorphism search limited to " + std::to_string(max_edges) + " edges");
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
    return std::nullopt;

  auto signature = [](const BrauerGraph& g) {
    std::vector<std::pair<int, int>> sig;
    for (int v = 0; v < g.vertex_count(); ++v) sig.push_back({g.valency(v), g.multiplicity(v)});
    std::sort(sig.begin(), sig.end());
    return sig;
  };
  if (signature(a) != signature(b)) return std::nullopt;

  const int nv = a.vertex_count();

  // An isomorphism is forced once one vertex image and a rotation of its
  // cyclic order are chosen: edge pairing drags the half-edge map across the
  // graph one vertex at a time.
  for (int image0 = 0; image0 < nv; ++image0) {
    if (a.valency(0) != b.valency(image0) || a.multiplicity(0) != b.multiplicity(image0)) continue;
    for (int rot = 0; rot < a.valency(0); ++rot) {
      std::map<std::string, std::string> hmap;
      std::vector<int> vmap(nv, -1);
      std::vector<char> vused(nv, 0);
      bool ok = true;

      auto assign_vertex = [&](int va, int vb, int offset) {
        if (a.valency(va) != b.valency(vb) || a.multiplicity(va) != b.multiplicity(vb))
          return false;
        if (vused[vb]) return false;
        vmap[va] = vb;
        vused[vb] = 1;
        const auto& ca = a.cyclic_order(va);
        const auto& cb = b.cyclic_order(vb);
        for (size_t i = 0; i < ca.size(); ++i)
          hmap[ca[i]] = cb[(i + offset) % cb.size()];
        return true;
      };

      if (!assign_vertex(0, image0, rot)) continue;
      std::queue<int> work;
      work.push(0);
      while (ok && !work.empty()) {
        int va = work.front();
        work.pop();
        for (const std::string& h : a.cyclic_order(va)) {
          const std::string& h2 = a.partner(h);
          const std::string& hb = hmap.at(h);
          const std::string& hb2 = b.partner(hb);
          int wa = a.vertex_of_half(h2);
          int wb = b.vertex_of_half(hb2);
          if (vmap[wa] < 0) {
            // Align the whole cyclic order of wa through this half-edge.
            const auto& ca = a.cyclic_order(wa);
            const auto& cb = b.cyclic_order(wb);
            int pos_a = static_cast<int>(std::find(ca.begin(), ca.end(), h2) - ca.begin());
            int pos_b = static_cast<int>(std::find(cb.begin(), cb.end(), hb2) - cb.begin());
            int offset = (pos_b - pos_a + static_cast<int>(cb.size())) % static_cast<int>(cb.size());
            if (!assign_vertex(wa, wb, offset)) {
              ok = false;
              break;
            }
            work.push(wa);
          } else {
            if (vmap[wa] != wb || hmap.at(h2) != hb2) {
              ok = false;
              break;
            }
          }
        }
      }
      if (!ok) continue;
      for (int v = 0; v < nv && ok; ++v)
        if (vmap[v] < 0) ok = false;  // unreachable on connected input
      if (!ok) continue;

      // Edge map must be consistent for both half-edges.
      std::map<std::string, std::string> emap;
      std::vector<char> eused(a.edge_count(), 0);
      for (int e = 0; e < a.edge_count() && ok; ++e) {
        const auto& halves = a.edge_half_edges(e);
        int eb1 = b.edge_of_half(hmap.at(halves[0]));
        int eb2 = b.edge_of_half(hmap.at(halves[1]));
        if (eb1 != eb2 || eused[eb1]) {
          ok = false;
          break;
        }
        eused[eb1] = 1;
        emap[a.edge_ids()[e]] = b.edge_ids()[eb1];
      }
      if (!ok) continue;

      RibbonIsomorphism iso;
      for (int v = 0; v < nv; ++v) iso.vertex_map[a.vertex_ids()[v]] = b.vertex_ids()[vmap[v]];
      iso.edge_map = std::move(emap);
      return iso;
    }
  }
  return std::nullopt;
}

}  // namespace surfalg
