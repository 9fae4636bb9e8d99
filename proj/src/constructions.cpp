#include "surfalg/constructions.hpp"

#include <algorithm>
#include <queue>

#include "surfalg/iso.hpp"

namespace surfalg {

namespace {

// Split a validated-shape raw quiver into connected components and build a
// weighted quiver for each, inheriting f, weights and border by id.
std::vector<WeightedBiserialQuiver> split_components(
    const RawQuiver& raw, const std::map<std::string, std::string>& f,
    const std::map<std::string, int>& weight_by_arrow,
    const std::map<std::string, Scalar>& border_by_vertex) {
  std::map<std::string, int> comp;
  int n_comp = 0;
  std::map<std::string, std::vector<std::string>> adj;
  for (const Arrow& a : raw.arrows) {
    adj[a.source].push_back(a.target);
    adj[a.target].push_back(a.source);
  }
  for (const std::string& v : raw.vertices) {
    if (comp.count(v)) continue;
    std::queue<std::string> q;
    q.push(v);
    comp[v] = n_comp;
    while (!q.empty()) {
      std::string u = q.front();
      q.pop();
      for (const std::string& t : adj[u])
        if (!comp.count(t)) {
          comp[t] = n_comp;
          q.push(t);
        }
    }
    ++n_comp;
  }

  // Stable order: components sorted by their smallest vertex id, which is
  // the order vertices are first discovered in since raw.vertices is sorted.
  std::vector<WeightedBiserialQuiver> out;
  for (int c = 0; c < n_comp; ++c) {
    RawQuiver part;
    for (const std::string& v : raw.vertices)
      if (comp[v] == c) part.vertices.push_back(v);
    std::map<std::string, std::string> part_f;
    std::map<std::string, int> part_w;
    std::map<std::string, Scalar> part_b;
    for (const Arrow& a : raw.arrows)
      if (comp[a.source] == c) {
        part.arrows.push_back(a);
        part_f[a.id] = f.at(a.id);
        part_w[a.id] = weight_by_arrow.at(a.id);
      }
    for (const auto& [v, b] : border_by_vertex)
      if (comp.count(v) && comp.at(v) == c) part_b[v] = b;
    out.push_back(WeightedBiserialQuiver::create(
        BiserialQuiver::validate(part, part_f), part_w, part_b));
  }
  return out;
}

void require_fresh(std::set<std::string>& used, const std::string& id, const char* what) {
  if (!used.insert(id).second)
    throw Error("NameCollision", std::string(what) + " id '" + id + "' already in use");
}

// Base of a derived name. Ids ending in a prime (as produced by an earlier
// application) are parenthesized first, so iterated constructions stay
// collision-free: (a')' and (a'')' cannot meet a'' or a''', and eps_(a')
// differs from eps_a + prime.
std::string mangle(const std::string& id) {
  if (!id.empty() && id.back() == '\'') return "(" + id + ")";
  return id;
}

}  // namespace

std::vector<WeightedBiserialQuiver> reduce(const WeightedBiserialQuiver& w,
                                           const IdempotentSelection& sel) {
  const BiserialQuiver& bq = w.quiver();
  if (sel.vertices.empty()) throw Error("EmptySelection", "keep at least one vertex");
  std::vector<char> keep(bq.vertex_count(), 0);
  for (const std::string& v : sel.vertices) keep[bq.vertex_index(v)] = 1;

  // The g-run of an arrow starting in the selection: chase g until the
  // target lands in the selection again. Terminates because the g-cycle
  // closes up at the (selected) source.
  std::vector<int> run_last(bq.arrow_count(), -1);
  RawQuiver raw;
  for (int v = 0; v < bq.vertex_count(); ++v)
    if (keep[v]) raw.vertices.push_back(bq.vertex_id(v));
  for (int a = 0; a < bq.arrow_count(); ++a) {
    if (!keep[bq.source(a)]) continue;
    int last = a;
    while (!keep[bq.target(last)]) last = bq.g(last);
    run_last[a] = last;
    raw.arrows.push_back(
        {bq.arrow_id(a), bq.vertex_id(bq.source(a)), bq.vertex_id(bq.target(last))});
  }

  std::map<std::string, std::string> f;
  std::map<std::string, int> weight_by_arrow;
  for (int a = 0; a < bq.arrow_count(); ++a) {
    if (run_last[a] < 0) continue;
    f[bq.arrow_id(a)] = bq.arrow_id(bq.f(run_last[a]));
    weight_by_arrow[bq.arrow_id(a)] = w.weight_of(a);
  }

  std::map<std::string, Scalar> border;
  for (const auto& [v, b] : w.border())
    if (keep[v]) border[bq.vertex_id(v)] = b;

  return split_components(raw, f, weight_by_arrow, border);
}

namespace {

WeightedBiserialQuiver star_like(const WeightedBiserialQuiver& w,
                                 const std::vector<char>& keep_arrow, bool carry_border,
                                 StarProvenance* prov) {
  const BiserialQuiver& bq = w.quiver();

  std::set<std::string> used;
  RawQuiver raw;
  for (const std::string& v : bq.vertices()) {
    require_fresh(used, v, "vertex");
    raw.vertices.push_back(v);
  }
  for (int a = 0; a < bq.arrow_count(); ++a)
    if (!keep_arrow[a]) {
      std::string xv = "x_" + mangle(bq.arrow_id(a));
      require_fresh(used, xv, "vertex");
      raw.vertices.push_back(xv);
    }

  used.clear();
  StarProvenance local;
  StarProvenance& p = prov ? *prov : local;
  for (int a = 0; a < bq.arrow_count(); ++a) {
    const std::string& id = bq.arrow_id(a);
    if (keep_arrow[a]) {
      require_fresh(used, id, "arrow");
      raw.arrows.push_back({id, bq.vertex_id(bq.source(a)), bq.vertex_id(bq.target(a))});
      p.kept.insert(id);
    } else {
      std::string base = mangle(id);
      std::string prime = base + "'", dprime = base + "''", eps = "eps_" + base;
      require_fresh(used, prime, "arrow");
      require_fresh(used, dprime, "arrow");
      require_fresh(used, eps, "arrow");
      raw.arrows.push_back({prime, bq.vertex_id(bq.source(a)), "x_" + base});
      raw.arrows.push_back({dprime, "x_" + base, bq.vertex_id(bq.target(a))});
      raw.arrows.push_back({eps, "x_" + mangle(bq.arrow_id(bq.f(a))), "x_" + base});
      p.primed_origin[prime] = id;
      p.primed_origin[dprime] = id;
      p.eps_origin[eps] = id;
    }
  }

  // Processed arrows come in whole f-orbits, so f(a) is processed exactly
  // when a is; the permutation below is therefore total.
  std::map<std::string, std::string> f;
  for (int a = 0; a < bq.arrow_count(); ++a) {
    const std::string& id = bq.arrow_id(a);
    std::string base = mangle(id);
    if (keep_arrow[a]) {
      f[id] = bq.arrow_id(bq.f(a));
    } else {
      f[base + "''"] = mangle(bq.arrow_id(bq.f(a))) + "'";
      f[base + "'"] = "eps_" + mangle(bq.arrow_id(bq.f_inv(a)));
      f["eps_" + base] = base + "''";
    }
  }

  BiserialQuiver enlarged = BiserialQuiver::validate(raw, f);

  std::map<std::string, int> weights;
  for (const auto& orbit : enlarged.g_orbits().orbits) {
    const std::string& first = enlarged.arrow_id(orbit[0]);
    int m;
    if (p.eps_origin.count(first)) {
      m = 1;
    } else if (p.kept.count(first)) {
      m = w.weight_of(bq.arrow_index(first));
    } else {
      m = w.weight_of(bq.arrow_index(p.primed_origin.at(first)));
    }
    weights[first] = m;
  }

  std::map<std::string, Scalar> border;
  if (carry_border) {
    auto reduced_border = enlarged.border_vertices();
    for (const auto& [v, b] : w.border()) {
      const std::string& vid = bq.vertex_id(v);
      if (std::binary_search(reduced_border.begin(), reduced_border.end(), vid))
        border[vid] = b;
    }
  }
  return WeightedBiserialQuiver::create(std::move(enlarged), weights, border);
}

}  // namespace

WeightedBiserialQuiver star(const WeightedBiserialQuiver& w, StarProvenance* prov, bool minimal) {
  const BiserialQuiver& bq = w.quiver();
  std::vector<char> keep(bq.arrow_count(), 0);
  if (minimal) {
    for (const auto& orbit : bq.f_orbits().orbits) {
      bool has_loop = false;
      for (int a : orbit) has_loop = has_loop || bq.is_loop(a);
      bool keep_orbit = (orbit.size() == 1 && has_loop) || (orbit.size() == 3 && !has_loop);
      if (keep_orbit)
        for (int a : orbit) keep[a] = 1;
    }
  }
  return star_like(w, keep, /*carry_border=*/false, prov);
}

WeightedBiserialQuiver double_star(const WeightedBiserialQuiver& w) { return star(star(w)); }

WeightedBiserialQuiver sharp(const WeightedBiserialQuiver& w) {
  const BiserialQuiver& bq = w.quiver();
  std::vector<char> keep(bq.arrow_count(), 0);
  bool any = false;
  for (int a = 0; a < bq.arrow_count(); ++a)
    if (bq.is_loop(a) && bq.f(a) == a) {
      keep[a] = 1;
      any = true;
    }
  if (!any) throw Error("EmptyBorder", "quiver has no border loops");
  return star_like(w, keep, /*carry_border=*/true, nullptr);
}

BrauerGraph barycentric_division(const BrauerGraph& g) {
  WeightedBiserialQuiver w = brauer_to_biserial(g);
  const BiserialQuiver& bq = w.quiver();
  StarProvenance prov;
  WeightedBiserialQuiver enlarged = star(w, &prov);
  BrauerGraph shadow = biserial_to_brauer(enlarged);

  // Rename the ribbon vertices: augmented ones take the name of the vertex
  // of g they came from, each eps-orbit takes the name of its f-orbit.
  auto f_orbits = bq.f_orbits();
  RawBrauerGraph raw;
  for (int v = 0; v < shadow.vertex_count(); ++v) {
    RawBrauerVertex rv;
    rv.multiplicity = shadow.multiplicity(v);
    rv.cyclic_order = shadow.cyclic_order(v);
    // Vertex ids from biserial_to_brauer are "v_<rep arrow of the orbit>".
    std::string rep = shadow.vertex_ids()[v].substr(2);
    if (prov.eps_origin.count(rep)) {
      int a = bq.arrow_index(prov.eps_origin.at(rep));
      int oi = f_orbits.position[a].first;
      rv.id = "v_F_" + bq.arrow_id(f_orbits.orbits[oi][0]);
    } else {
      const std::string& half = prov.primed_origin.at(rep);
      rv.id = g.vertex_ids()[g.vertex_of_half(half)];
    }
    raw.vertices.push_back(std::move(rv));
  }
  for (int e = 0; e < shadow.edge_count(); ++e)
    raw.edges.push_back({shadow.edge_ids()[e], shadow.edge_half_edges(e)});
  return BrauerGraph::validate(raw);
}

std::pair<WeightedBiserialQuiver, IdempotentSelection> periodic_envelope(
    const WeightedBiserialQuiver& w) {
  IdempotentSelection sel;
  for (const std::string& v : w.quiver().vertices()) sel.vertices.insert(v);

  WeightedBiserialQuiver out = star(w);
  for (int round = 0; round < 2; ++round) {
    bool good = true;
    for (int a = 0; a < out.quiver().arrow_count() && good; ++a)
      good = out.weight_of(a) * out.n_of(a) >= 3;
    if (good) break;
    out = star(out);
  }

  std::map<std::string, Scalar> params;
  for (size_t oi = 0; oi < out.g_orbits().orbits.size(); ++oi)
    params[out.orbit_rep(static_cast<int>(oi))] = Scalar::one();
  WeightedBiserialQuiver with_params = WeightedBiserialQuiver::create(
      out.quiver(), out.weights_by_rep(), {}, params);
  return {with_params, sel};
}

WeightedBiserialQuiver tetrahedral_quiver() {
  RawQuiver raw;
  raw.vertices = {"1", "2", "3", "4", "5", "6"};
  raw.arrows = {
      {"nu", "1", "6"},      {"delta", "1", "5"}, {"epsilon", "2", "5"}, {"rho", "2", "6"},
      {"sigma", "3", "2"},   {"alpha", "3", "1"}, {"gamma", "4", "1"},   {"beta", "4", "2"},
      {"xi", "5", "3"},      {"eta", "5", "4"},   {"omega", "6", "4"},   {"mu", "6", "3"},
  };
  std::map<std::string, std::string> f = {
      {"alpha", "nu"},     {"nu", "mu"},    {"mu", "alpha"},   {"delta", "eta"},
      {"eta", "gamma"},    {"gamma", "delta"}, {"rho", "omega"}, {"omega", "beta"},
      {"beta", "rho"},     {"epsilon", "xi"},  {"xi", "sigma"},  {"sigma", "epsilon"},
  };
  BiserialQuiver bq = BiserialQuiver::validate(raw, f);
  std::map<std::string, int> weights;
  std::map<std::string, Scalar> params;
  for (const auto& orbit : bq.g_orbits().orbits) {
    weights[bq.arrow_id(orbit[0])] = 1;
    params[bq.arrow_id(orbit[0])] = Scalar::one();
  }
  return WeightedBiserialQuiver::create(std::move(bq), weights, {}, params);
}

bool is_singular_tetrahedral(const WeightedBiserialQuiver& w) {
  for (size_t oi = 0; oi < w.g_orbits().orbits.size(); ++oi) {
    if (w.orbit_weight(static_cast<int>(oi)) != 1) return false;
    if (w.has_params() && !w.param_of_orbit(static_cast<int>(oi)).is_one()) return false;
  }
  if (w.quiver().vertex_count() != 6 || !w.quiver().is_triangulation()) return false;

  // Compare structure only; weights and parameters are already known to be
  // trivial on both sides.
  WeightedBiserialQuiver bare = WeightedBiserialQuiver::create(
      w.quiver(), w.weights_by_rep());
  WeightedBiserialQuiver reference = tetrahedral_quiver();
  WeightedBiserialQuiver bare_reference = WeightedBiserialQuiver::create(
      reference.quiver(), reference.weights_by_rep());
  return isomorphic(bare, bare_reference).has_value();
}

}  // namespace surfalg
