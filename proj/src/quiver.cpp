#include "surfalg/quiver.hpp"

#include <algorithm>
#include <queue>

namespace surfalg {

namespace {

// Deterministic splitmix64-based generator; std::uniform_int_distribution is
// implementation-defined, so bounded draws are done by rejection here.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n).
  std::uint64_t below(std::uint64_t n) {
    std::uint64_t limit = ~0ull - (~0ull % n);
    std::uint64_t v = next();
    while (v >= limit) v = next();
    return v % n;
  }

  bool coin() { return next() & 1ull; }

private:
  std::uint64_t state_;
};

bool connected_undirected(int n_vertices, const std::vector<int>& src,
                          const std::vector<int>& tgt) {
  if (n_vertices == 0) return false;
  std::vector<std::vector<int>> adj(n_vertices);
  for (size_t a = 0; a < src.size(); ++a) {
    adj[src[a]].push_back(tgt[a]);
    adj[tgt[a]].push_back(src[a]);
  }
  std::vector<char> seen(n_vertices, 0);
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
  return count == n_vertices;
}

}  // namespace

int BiserialQuiver::vertex_index(const std::string& id) const {
  auto it = vertex_idx_.find(id);
  if (it == vertex_idx_.end()) throw Error("UnknownVertex", "no vertex '" + id + "'");
  return it->second;
}

int BiserialQuiver::arrow_index(const std::string& id) const {
  auto it = arrow_idx_.find(id);
  if (it == arrow_idx_.end()) throw Error("UnknownArrow", "no arrow '" + id + "'");
  return it->second;
}

BiserialQuiver BiserialQuiver::validate(const RawQuiver& raw,
                                        const std::map<std::string, std::string>& f) {
  std::vector<std::string> diags;

  BiserialQuiver q;
  q.vertices_ = raw.vertices;
  std::sort(q.vertices_.begin(), q.vertices_.end());
  q.vertices_.erase(std::unique(q.vertices_.begin(), q.vertices_.end()), q.vertices_.end());
  if (q.vertices_.size() != raw.vertices.size())
    diags.push_back("duplicate vertex ids");
  if (q.vertices_.empty()) diags.push_back("no vertices");
  for (size_t i = 0; i < q.vertices_.size(); ++i) q.vertex_idx_[q.vertices_[i]] = static_cast<int>(i);

  q.arrows_ = raw.arrows;
  std::sort(q.arrows_.begin(), q.arrows_.end(),
            [](const Arrow& a, const Arrow& b) { return a.id < b.id; });
  for (size_t i = 0; i + 1 < q.arrows_.size(); ++i)
    if (q.arrows_[i].id == q.arrows_[i + 1].id)
      diags.push_back("duplicate arrow id '" + q.arrows_[i].id + "'");
  for (size_t i = 0; i < q.arrows_.size(); ++i) q.arrow_idx_[q.arrows_[i].id] = static_cast<int>(i);

  const int nv = static_cast<int>(q.vertices_.size());
  const int na = static_cast<int>(q.arrows_.size());
  q.source_.resize(na);
  q.target_.resize(na);
  std::vector<int> out_deg(nv, 0), in_deg(nv, 0);
  bool endpoints_ok = true;
  for (int a = 0; a < na; ++a) {
    const Arrow& ar = q.arrows_[a];
    auto si = q.vertex_idx_.find(ar.source);
    auto ti = q.vertex_idx_.find(ar.target);
    if (si == q.vertex_idx_.end()) {
      diags.push_back("arrow '" + ar.id + "' has undeclared source '" + ar.source + "'");
      endpoints_ok = false;
      continue;
    }
    if (ti == q.vertex_idx_.end()) {
      diags.push_back("arrow '" + ar.id + "' has undeclared target '" + ar.target + "'");
      endpoints_ok = false;
      continue;
    }
    q.source_[a] = si->second;
    q.target_[a] = ti->second;
    ++out_deg[si->second];
    ++in_deg[ti->second];
  }
  if (!endpoints_ok) throw ValidationError(diags);

  for (int v = 0; v < nv; ++v) {
    if (out_deg[v] != 2)
      diags.push_back("NotTwoRegular: vertex '" + q.vertices_[v] + "' is the source of " +
                      std::to_string(out_deg[v]) + " arrows (expected 2)");
    if (in_deg[v] != 2)
      diags.push_back("NotTwoRegular: vertex '" + q.vertices_[v] + "' is the target of " +
                      std::to_string(in_deg[v]) + " arrows (expected 2)");
  }
  if (na != 2 * nv)
    diags.push_back("NotTwoRegular: " + std::to_string(na) + " arrows for " +
                    std::to_string(nv) + " vertices (expected " + std::to_string(2 * nv) + ")");

  // f must be a bijection on exactly the declared arrows.
  q.f_.assign(na, -1);
  std::vector<int> hits(na, 0);
  for (const auto& [from, to] : f) {
    auto fi = q.arrow_idx_.find(from);
    auto ti = q.arrow_idx_.find(to);
    if (fi == q.arrow_idx_.end()) {
      diags.push_back("NotBijective: f defined on unknown arrow '" + from + "'");
      continue;
    }
    if (ti == q.arrow_idx_.end()) {
      diags.push_back("NotBijective: f('" + from + "') = unknown arrow '" + to + "'");
      continue;
    }
    q.f_[fi->second] = ti->second;
    ++hits[ti->second];
  }
  for (int a = 0; a < na; ++a) {
    if (q.f_[a] < 0) diags.push_back("NotBijective: f undefined on arrow '" + q.arrows_[a].id + "'");
    if (hits[a] > 1) diags.push_back("NotBijective: arrow '" + q.arrows_[a].id + "' has " +
                                     std::to_string(hits[a]) + " preimages under f");
  }
  if (!diags.empty()) throw ValidationError(diags);

  // Admissibility: f(a) starts where a ends.
  for (int a = 0; a < na; ++a)
    if (q.source_[q.f_[a]] != q.target_[a])
      diags.push_back("NotAdmissible: f('" + q.arrows_[a].id + "') = '" +
                      q.arrows_[q.f_[a]].id + "' does not start at the target of '" +
                      q.arrows_[a].id + "'");

  if (!connected_undirected(nv, q.source_, q.target_))
    diags.push_back("Disconnected: underlying graph is not connected");

  if (!diags.empty()) throw ValidationError(diags);

  // Derived structure. 2-regularity guarantees exactly two arrows per vertex
  // in each direction; keep them sorted by arrow id (== index order).
  q.out_.assign(nv, {-1, -1});
  q.in_.assign(nv, {-1, -1});
  for (int a = 0; a < na; ++a) {
    auto& o = q.out_[q.source_[a]];
    (o[0] < 0 ? o[0] : o[1]) = a;
    auto& i = q.in_[q.target_[a]];
    (i[0] < 0 ? i[0] : i[1]) = a;
  }
  q.bar_.resize(na);
  for (int v = 0; v < nv; ++v) {
    q.bar_[q.out_[v][0]] = q.out_[v][1];
    q.bar_[q.out_[v][1]] = q.out_[v][0];
  }
  q.f_inv_.resize(na);
  for (int a = 0; a < na; ++a) q.f_inv_[q.f_[a]] = a;
  q.g_.resize(na);
  for (int a = 0; a < na; ++a) q.g_[a] = q.bar_[q.f_[a]];
  return q;
}

bool BiserialQuiver::is_triangulation() const {
  for (int a = 0; a < arrow_count(); ++a)
    if (f_[f_[f_[a]]] != a) return false;
  return true;
}

std::vector<int> BiserialQuiver::border_vertex_indices() const {
  std::vector<int> out;
  for (int a = 0; a < arrow_count(); ++a)
    if (is_loop(a) && f_[a] == a) out.push_back(source_[a]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> BiserialQuiver::border_vertices() const {
  std::vector<std::string> out;
  for (int v : border_vertex_indices()) out.push_back(vertices_[v]);
  return out;
}

std::vector<std::vector<int>> BiserialQuiver::self_folded_triangles() const {
  if (!is_triangulation())
    throw Error("NotTriangulation", "f^3 is not the identity");
  std::vector<std::vector<int>> out;
  for (const auto& orbit : f_orbits().orbits) {
    if (orbit.size() != 3) continue;
    bool has_loop = false;
    for (int a : orbit) has_loop = has_loop || is_loop(a);
    if (has_loop) out.push_back(orbit);
  }
  return out;
}

OrbitDecomposition BiserialQuiver::orbits(const std::vector<int>& perm) const {
  const int na = arrow_count();
  if (static_cast<int>(perm.size()) != na)
    throw Error("NotBijective", "permutation size mismatch");
  std::vector<int> hits(na, 0);
  for (int a = 0; a < na; ++a) {
    if (perm[a] < 0 || perm[a] >= na) throw Error("NotBijective", "value out of range");
    ++hits[perm[a]];
  }
  for (int a = 0; a < na; ++a)
    if (hits[a] != 1) throw Error("NotBijective", "not a bijection");

  OrbitDecomposition dec;
  std::vector<char> seen(na, 0);
  for (int start = 0; start < na; ++start) {
    if (seen[start]) continue;
    // Arrows are sorted by id, so the smallest index in the cycle is also
    // the lexicographically smallest id; starting the scan there yields the
    // canonical rotation directly.
    std::vector<int> orbit;
    int a = start;
    do {
      seen[a] = 1;
      orbit.push_back(a);
      a = perm[a];
    } while (a != start);
    dec.orbits.push_back(std::move(orbit));
  }
  dec.position.assign(na, {-1, -1});
  for (size_t oi = 0; oi < dec.orbits.size(); ++oi)
    for (size_t slot = 0; slot < dec.orbits[oi].size(); ++slot)
      dec.position[dec.orbits[oi][slot]] = {static_cast<int>(oi), static_cast<int>(slot)};
  return dec;
}

OrbitDecomposition orbits_of_mapping(const std::map<std::string, std::string>& perm,
                                     const std::set<std::string>& arrows,
                                     std::vector<std::string>* ids_out) {
  std::vector<std::string> ids(arrows.begin(), arrows.end());
  std::map<std::string, int> idx;
  for (size_t i = 0; i < ids.size(); ++i) idx[ids[i]] = static_cast<int>(i);

  const int n = static_cast<int>(ids.size());
  std::vector<int> p(n, -1), hits(n, 0);
  for (const auto& [from, to] : perm) {
    auto fi = idx.find(from);
    auto ti = idx.find(to);
    if (fi == idx.end() || ti == idx.end())
      throw Error("NotBijective", "mapping mentions arrow outside the given set");
    p[fi->second] = ti->second;
    ++hits[ti->second];
  }
  for (int i = 0; i < n; ++i)
    if (p[i] < 0 || hits[i] != 1) throw Error("NotBijective", "mapping is not a bijection");

  OrbitDecomposition dec;
  std::vector<char> seen(n, 0);
  for (int start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<int> orbit;
    int a = start;
    do {
      seen[a] = 1;
      orbit.push_back(a);
      a = p[a];
    } while (a != start);
    dec.orbits.push_back(std::move(orbit));
  }
  dec.position.assign(n, {-1, -1});
  for (size_t oi = 0; oi < dec.orbits.size(); ++oi)
    for (size_t slot = 0; slot < dec.orbits[oi].size(); ++slot)
      dec.position[dec.orbits[oi][slot]] = {static_cast<int>(oi), static_cast<int>(slot)};
  if (ids_out) *ids_out = std::move(ids);
  return dec;
}

WeightedBiserialQuiver WeightedBiserialQuiver::create(
    BiserialQuiver bq, const std::map<std::string, int>& weights,
    const std::map<std::string, Scalar>& border, const std::map<std::string, Scalar>& params) {
  WeightedBiserialQuiver w;
  w.bq_ = std::move(bq);
  w.g_orbits_ = w.bq_.g_orbits();
  const int n_orbits = static_cast<int>(w.g_orbits_.orbits.size());

  std::vector<std::string> diags;
  w.weights_.assign(n_orbits, 0);
  for (const auto& [id, m] : weights) {
    int a;
    try {
      a = w.bq_.arrow_index(id);
    } catch (const Error&) {
      diags.push_back("weight names unknown arrow '" + id + "'");
      continue;
    }
    if (m < 1) diags.push_back("weight for '" + id + "' must be positive");
    int orbit = w.g_orbits_.position[a].first;
    if (w.weights_[orbit] != 0 && w.weights_[orbit] != m)
      diags.push_back("conflicting weights for the orbit of '" + id + "'");
    w.weights_[orbit] = m;
  }
  for (int oi = 0; oi < n_orbits; ++oi)
    if (w.weights_[oi] == 0)
      diags.push_back("missing weight for the orbit of '" + w.orbit_rep(oi) + "'");

  auto border_set = w.bq_.border_vertex_indices();
  for (const auto& [vid, b] : border) {
    int v;
    try {
      v = w.bq_.vertex_index(vid);
    } catch (const Error&) {
      diags.push_back("border value names unknown vertex '" + vid + "'");
      continue;
    }
    if (!std::binary_search(border_set.begin(), border_set.end(), v))
      diags.push_back("border value on non-border vertex '" + vid + "'");
    else
      w.border_[v] = b;
  }

  for (const auto& [id, c] : params) {
    int a;
    try {
      a = w.bq_.arrow_index(id);
    } catch (const Error&) {
      diags.push_back("parameter names unknown arrow '" + id + "'");
      continue;
    }
    if (c.is_zero()) diags.push_back("parameter for '" + id + "' must be nonzero");
    int orbit = w.g_orbits_.position[a].first;
    auto it = w.params_.find(orbit);
    if (it != w.params_.end() && !(it->second == c))
      diags.push_back("conflicting parameters for the orbit of '" + id + "'");
    w.params_[orbit] = c;
  }
  if (!params.empty())
    for (int oi = 0; oi < n_orbits; ++oi)
      if (!w.params_.count(oi))
        diags.push_back("missing parameter for the orbit of '" + w.orbit_rep(oi) + "'");

  if (!diags.empty()) throw ValidationError(diags);

  // Reject the two-dimensional algebra: a single vertex whose two loops both
  // carry a length-times-weight product of one.
  if (w.bq_.vertex_count() == 1) {
    bool all_one = true;
    for (int oi = 0; oi < n_orbits; ++oi)
      all_one = all_one && (w.orbit_length(oi) * w.orbit_weight(oi) == 1);
    if (all_one)
      throw Error("ExcludedDegenerate",
                  "one vertex with two weight-one fixed loops is excluded");
  }
  return w;
}

Scalar WeightedBiserialQuiver::border_value(int v) const {
  auto it = border_.find(v);
  return it == border_.end() ? Scalar::zero() : it->second;
}

Scalar WeightedBiserialQuiver::param_of_orbit(int orbit) const {
  auto it = params_.find(orbit);
  if (it == params_.end())
    throw Error("MissingParameter", "no parameter for orbit of '" + orbit_rep(orbit) + "'");
  return it->second;
}

std::map<std::string, int> WeightedBiserialQuiver::weights_by_rep() const {
  std::map<std::string, int> out;
  for (size_t oi = 0; oi < g_orbits_.orbits.size(); ++oi)
    out[orbit_rep(static_cast<int>(oi))] = weights_[oi];
  return out;
}

std::map<std::string, Scalar> WeightedBiserialQuiver::border_by_id() const {
  std::map<std::string, Scalar> out;
  for (const auto& [v, b] : border_) out[bq_.vertex_id(v)] = b;
  return out;
}

std::map<std::string, Scalar> WeightedBiserialQuiver::params_by_rep() const {
  std::map<std::string, Scalar> out;
  for (const auto& [oi, c] : params_) out[orbit_rep(oi)] = c;
  return out;
}

BiserialQuiver random_biserial_quiver(int n_vertices, std::uint64_t seed) {
  if (n_vertices < 1) throw Error("BadArgument", "need at least one vertex");
  Rng rng(seed);

  int width = 1;
  for (int t = n_vertices - 1; t >= 10; t /= 10) ++width;
  auto pad = [width](int k) {
    std::string s = std::to_string(k);
    while (static_cast<int>(s.size()) < width) s = "0" + s;
    return s;
  };

  const int n_arrows = 2 * n_vertices;
  for (int attempt = 0; attempt < 10000; ++attempt) {
    // Out-slot k belongs to vertex k/2; match out-slots to in-slots by a
    // random permutation (Fisher-Yates).
    std::vector<int> in_slot(n_arrows);
    for (int i = 0; i < n_arrows; ++i) in_slot[i] = i;
    for (int i = n_arrows - 1; i > 0; --i)
      std::swap(in_slot[i], in_slot[rng.below(static_cast<std::uint64_t>(i + 1))]);

    RawQuiver raw;
    for (int v = 0; v < n_vertices; ++v) raw.vertices.push_back("v" + pad(v));
    std::vector<int> src(n_arrows), tgt(n_arrows);
    for (int k = 0; k < n_arrows; ++k) {
      src[k] = k / 2;
      tgt[k] = in_slot[k] / 2;
      raw.arrows.push_back({"a" + pad(k / 2) + (k % 2 ? "y" : "x"), raw.vertices[src[k]],
                            raw.vertices[tgt[k]]});
    }
    if (!connected_undirected(n_vertices, src, tgt)) continue;

    // One coin per vertex decides which incoming arrow maps to which
    // outgoing arrow under f.
    std::vector<std::vector<int>> incoming(n_vertices);
    for (int k = 0; k < n_arrows; ++k) incoming[tgt[k]].push_back(k);
    std::map<std::string, std::string> f;
    for (int v = 0; v < n_vertices; ++v) {
      int first = 2 * v, second = 2 * v + 1;  // out-slots of v
      bool flip = rng.coin();
      f[raw.arrows[incoming[v][0]].id] = raw.arrows[flip ? second : first].id;
      f[raw.arrows[incoming[v][1]].id] = raw.arrows[flip ? first : second].id;
    }
    return BiserialQuiver::validate(raw, f);
  }
  throw Error("GenerationFailed", "no connected sample after 10000 attempts");
}

WeightedBiserialQuiver random_weighted_biserial_quiver(int n_vertices, std::uint64_t seed,
                                                       int max_weight) {
  if (max_weight < 1) throw Error("BadArgument", "max_weight must be positive");
  BiserialQuiver bq = random_biserial_quiver(n_vertices, seed);
  Rng rng(seed ^ 0xa5a5a5a5a5a5a5a5ull);
  auto dec = bq.g_orbits();
  std::map<std::string, int> weights;
  std::vector<int> picked;
  for (size_t oi = 0; oi < dec.orbits.size(); ++oi)
    picked.push_back(1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_weight))));
  bool degenerate = bq.vertex_count() == 1;
  for (size_t oi = 0; oi < dec.orbits.size(); ++oi)
    degenerate = degenerate && (static_cast<int>(dec.orbits[oi].size()) * picked[oi] == 1);
  if (degenerate) picked[0] = 2;
  for (size_t oi = 0; oi < dec.orbits.size(); ++oi)
    weights[bq.arrow_id(dec.orbits[oi][0])] = picked[oi];
  return WeightedBiserialQuiver::create(std::move(bq), weights);
}

}  // namespace surfalg
