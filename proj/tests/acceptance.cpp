// Acceptance suite: runs the checks the toolkit must satisfy, one line per
// criterion. Exit status is the number of failed criteria.
//
//   acceptance                 run everything
//   acceptance --criterion N   run a single criterion

#include <chrono>
#include <cstring>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <vector>

#include "surfalg/constructions.hpp"
#include "surfalg/io.hpp"
#include "surfalg/iso.hpp"
#include "surfalg/presentation.hpp"
#include "surfalg/surface.hpp"

using namespace surfalg;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

WeightedBiserialQuiver fixture(const std::string& name) {
  return io::load_quiver(read_file(std::string(FIXTURES_DIR) + "/" + name)).wbq;
}

BrauerGraph brauer_fixture(const std::string& name) {
  return io::load_brauer(read_file(std::string(FIXTURES_DIR) + "/" + name)).graph;
}

struct Check {
  bool ok = true;
  std::string detail;

  void require(bool condition, const std::string& what) {
    if (!condition) {
      ok = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

std::vector<int> sorted_lengths(const OrbitDecomposition& dec) {
  auto l = dec.lengths();
  std::sort(l.begin(), l.end());
  return l;
}

bool contains_cycle(const BiserialQuiver& bq, const OrbitDecomposition& dec,
                    std::vector<std::string> cycle) {
  for (const auto& orbit : dec.orbits) {
    if (orbit.size() != cycle.size()) continue;
    for (size_t r = 0; r < cycle.size(); ++r) {
      bool match = true;
      for (size_t i = 0; i < cycle.size() && match; ++i)
        match = bq.arrow_id(orbit[i]) == cycle[(i + r) % cycle.size()];
      if (match) return true;
    }
  }
  return false;
}

int weight_at(const WeightedBiserialQuiver& w, const std::string& arrow) {
  return w.weight_of(w.quiver().arrow_index(arrow));
}

// The shared random corpus: 500 weighted biserial quivers, at most six
// vertices, weights at most three.
std::vector<WeightedBiserialQuiver> corpus() {
  std::vector<WeightedBiserialQuiver> out;
  for (std::uint64_t seed = 0; seed < 500; ++seed)
    out.push_back(random_weighted_biserial_quiver(1 + seed % 6, seed, 3));
  return out;
}

// Seeded border scalars on every border vertex, for the border-preserving
// checks.
WeightedBiserialQuiver with_border_scalars(const WeightedBiserialQuiver& w, std::uint64_t seed) {
  std::map<std::string, Scalar> border;
  std::uint64_t state = seed;
  for (const std::string& v : w.quiver().border_vertices()) {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    border[v] = Scalar::rational(static_cast<std::int64_t>(state % 9) - 4,
                                 1 + static_cast<std::int64_t>(state % 4));
  }
  return WeightedBiserialQuiver::create(w.quiver(), w.weights_by_rep(), border);
}

IdempotentSelection original_vertices(const WeightedBiserialQuiver& w) {
  IdempotentSelection sel;
  for (const std::string& v : w.quiver().vertices()) sel.vertices.insert(v);
  return sel;
}

std::string power_path(const std::vector<std::string>& arrows, int power = 1) {
  std::string out;
  for (int rep = 0; rep < power; ++rep)
    for (const auto& a : arrows) {
      if (!out.empty()) out += "*";
      out += a;
    }
  return out;
}

std::set<std::string> relation_strings(const AlgebraPresentation& pres) {
  std::set<std::string> out;
  for (const Relation& r : pres.relations) out.insert(r.str(pres.wbq.quiver()));
  return out;
}

// --- criteria ---------------------------------------------------------

Check criterion_1() {
  Check c;
  WeightedBiserialQuiver w = brauer_to_biserial(brauer_fixture("ex28_brauer.json"));
  const BiserialQuiver& bq = w.quiver();
  c.require(bq.vertex_count() == 8, "expected 8 vertices");
  c.require(bq.arrow_count() == 16, "expected 16 arrows");
  c.require(sorted_lengths(bq.g_orbits()) == std::vector<int>{1, 1, 1, 6, 7},
            "g-orbit lengths != {1,1,1,6,7}");
  c.require(sorted_lengths(bq.f_orbits()) == std::vector<int>{2, 3, 11},
            "f-orbit lengths != {11,2,3}");
  return c;
}

Check criterion_2() {
  Check c;
  {
    WeightedBiserialQuiver out = star(fixture("ex44.json"));  // weights (2, 3)
    const BiserialQuiver& bq = out.quiver();
    auto fo = bq.f_orbits();
    c.require(contains_cycle(bq, fo, {"alpha''", "beta'", "eps_alpha"}),
              "f-orbit (a'' b' eps_a) missing");
    c.require(contains_cycle(bq, fo, {"beta''", "alpha'", "eps_beta"}),
              "f-orbit (b'' a' eps_b) missing");
    auto go = bq.g_orbits();
    c.require(contains_cycle(bq, go, {"alpha'", "alpha''"}), "g-orbit (a' a'') missing");
    c.require(contains_cycle(bq, go, {"beta'", "beta''"}), "g-orbit (b' b'') missing");
    c.require(contains_cycle(bq, go, {"eps_alpha", "eps_beta"}),
              "g-orbit (eps_a eps_b) missing");
    c.require(go.orbits.size() == 3 && fo.orbits.size() == 2, "orbit counts off");
    c.require(weight_at(out, "alpha'") == 2 && weight_at(out, "beta'") == 3 &&
                  weight_at(out, "eps_alpha") == 1,
              "weights != (m, n, 1)");
  }
  {
    WeightedBiserialQuiver out = star(fixture("ex45.json"));  // weight 2
    const BiserialQuiver& bq = out.quiver();
    auto fo = bq.f_orbits();
    c.require(contains_cycle(bq, fo, {"alpha''", "alpha'", "eps_alpha"}),
              "f-orbit (a'' a' eps_a) missing");
    c.require(contains_cycle(bq, fo, {"beta''", "beta'", "eps_beta"}),
              "f-orbit (b'' b' eps_b) missing");
    auto go = bq.g_orbits();
    c.require(contains_cycle(bq, go, {"alpha'", "alpha''", "beta'", "beta''"}),
              "g-orbit (a' a'' b' b'') missing");
    c.require(contains_cycle(bq, go, {"eps_alpha"}) && contains_cycle(bq, go, {"eps_beta"}),
              "singleton eps orbits missing");
    c.require(weight_at(out, "alpha'") == 2 && weight_at(out, "eps_alpha") == 1 &&
                  weight_at(out, "eps_beta") == 1,
              "weights != (m, 1, 1)");
  }
  return c;
}

Check criterion_3() {
  Check c;
  WeightedBiserialQuiver out = star(fixture("ex28.json"));
  const BiserialQuiver& bq = out.quiver();
  c.require(bq.vertex_count() == 24, "expected 24 vertices");
  c.require(bq.arrow_count() == 48, "expected 48 arrows");
  auto fo = bq.f_orbits().lengths();
  c.require(fo.size() == 16, "expected 16 f-orbits");
  c.require(std::count(fo.begin(), fo.end(), 3) == static_cast<long>(fo.size()),
            "f-orbits not all of length 3");
  c.require(sorted_lengths(bq.g_orbits()) == std::vector<int>{2, 2, 2, 2, 3, 11, 12, 14},
            "g-orbit lengths != {12,14,11,2,2,2,3,2}");
  return c;
}

Check criterion_4() {
  Check c;
  WeightedBiserialQuiver w = fixture("sec5.json");
  WeightedBiserialQuiver out = sharp(w);
  const BiserialQuiver& bq = out.quiver();
  c.require(bq.vertex_count() == 8, "expected 8 vertices");
  c.require(bq.arrow_count() == 16, "expected 16 arrows");
  c.require(sorted_lengths(bq.g_orbits()) == std::vector<int>{4, 12},
            "g-orbit lengths != {12,4}");
  c.require(bq.border_vertices() == std::vector<std::string>{"1", "2", "3", "4"},
            "border set not preserved");
  c.require(out.border_by_id() == w.border_by_id(), "border scalars not intact");
  return c;
}

Check criterion_5() {
  Check c;
  int bordered = 0;
  std::uint64_t seed = 0;
  for (const WeightedBiserialQuiver& w : corpus()) {
    ++seed;
    auto components = reduce(star(w), original_vertices(w));
    if (components.size() != 1) {
      c.require(false, "star reduction split into components");
      break;
    }
    if (!isomorphic(w, components[0], 16)) {
      c.require(false, "star round trip lost the quiver");
      break;
    }
    if (!w.quiver().border_vertices().empty()) {
      ++bordered;
      WeightedBiserialQuiver b = with_border_scalars(w, seed);
      auto sharp_components = reduce(sharp(b), original_vertices(b));
      if (sharp_components.size() != 1 || !isomorphic(b, sharp_components[0], 16)) {
        c.require(false, "sharp round trip lost the quiver");
        break;
      }
    }
  }
  c.require(bordered > 50, "too few bordered samples in the corpus");
  if (c.ok) c.detail = std::to_string(bordered) + " bordered samples";
  return c;
}

Check criterion_6() {
  Check c;
  for (const WeightedBiserialQuiver& w : corpus()) {
    const BiserialQuiver& bq = w.quiver();
    WeightedBiserialQuiver out = star(w);
    const BiserialQuiver& sq = out.quiver();
    bool ok = sq.is_triangulation();
    for (int a = 0; a < sq.arrow_count() && ok; ++a)
      ok = !(sq.is_loop(a) && sq.f(a) == a);
    auto f_dec = bq.f_orbits();
    for (int a = 0; a < bq.arrow_count() && ok; ++a) {
      const std::string& id = bq.arrow_id(a);
      ok = out.n_of(sq.arrow_index("eps_" + id)) ==
               static_cast<int>(f_dec.orbits[f_dec.position[a].first].size()) &&
           out.n_of(sq.arrow_index(id + "'")) == 2 * w.n_of(a);
    }
    if (!ok) {
      c.require(false, "star structural law failed");
      break;
    }
    WeightedBiserialQuiver twice = double_star(w);
    bool loopless = true;
    for (int a = 0; a < twice.quiver().arrow_count(); ++a)
      loopless = loopless && !twice.quiver().is_loop(a);
    if (!loopless || !twice.quiver().self_folded_triangles().empty()) {
      c.require(false, "double star kept a loop or self-folded triangle");
      break;
    }
  }
  return c;
}

Check criterion_7() {
  Check c;
  for (const WeightedBiserialQuiver& w : corpus()) {
    AlgebraPresentation pres =
        w.has_border() ? relations_border(w) : relations_biserial(w);
    long long formula = dimension(w);
    long long enumerated = static_cast<long long>(basis_paths(pres).size());
    long long cartan_total = 0;
    for (const auto& row : cartan_matrix(pres))
      for (long long entry : row) cartan_total += entry;
    if (formula != enumerated || formula != cartan_total) {
      c.require(false, "dimension mismatch: formula " + std::to_string(formula) +
                           ", basis " + std::to_string(enumerated) + ", cartan " +
                           std::to_string(cartan_total));
      break;
    }
  }
  return c;
}

Check criterion_8() {
  Check c;
  {
    WeightedBiserialQuiver w = WeightedBiserialQuiver::create(
        fixture("ex33.json").quiver(), {{"alpha", 2}, {"beta", 3}});
    std::set<std::string> expected{
        "alpha*beta = 0", "beta*gamma = 0", "gamma*alpha = 0", "sigma*delta = 0",
        "delta*omega = 0", "omega*sigma = 0", "xi*xi = 0", "eta*eta = 0",
        power_path({"alpha", "omega", "eta", "sigma", "gamma", "xi"}, 2) + " = 1 * " +
            power_path({"xi", "alpha", "omega", "eta", "sigma", "gamma"}, 2),
        power_path({"eta", "sigma", "gamma", "xi", "alpha", "omega"}, 2) + " = 1 * " +
            power_path({"sigma", "gamma", "xi", "alpha", "omega", "eta"}, 2),
        power_path({"beta", "delta"}, 3) + " = 1 * " +
            power_path({"omega", "eta", "sigma", "gamma", "xi", "alpha"}, 2),
        power_path({"delta", "beta"}, 3) + " = 1 * " +
            power_path({"gamma", "xi", "alpha", "omega", "eta", "sigma"}, 2)};
    c.require(relation_strings(relations_biserial(w)) == expected,
              "disk-quiver relation set mismatch");
  }
  {
    std::set<std::string> expected{
        "alpha1*alpha2 = 0", "alpha2*alpha3 = 0", "alpha3*alpha1 = 0",
        "beta1*beta2 = 0",   "beta2*beta3 = 0",   "beta3*beta1 = 0",
        power_path({"alpha1", "beta2", "alpha3", "beta1", "alpha2", "beta3"}) + " = 1 * " +
            power_path({"beta1", "alpha2", "beta3", "alpha1", "beta2", "alpha3"}),
        power_path({"alpha2", "beta3", "alpha1", "beta2", "alpha3", "beta1"}) + " = 1 * " +
            power_path({"beta2", "alpha3", "beta1", "alpha2", "beta3", "alpha1"}),
        power_path({"alpha3", "beta1", "alpha2", "beta3", "alpha1", "beta2"}) + " = 1 * " +
            power_path({"beta3", "alpha1", "beta2", "alpha3", "beta1", "alpha2"})};
    c.require(relation_strings(relations_biserial(fixture("ex35.json"))) == expected,
              "Markov relation set mismatch");
  }
  {
    std::set<std::string> expected{
        "alpha1*alpha2 = 1 * " + power_path({"beta1", "alpha2", "beta3", "alpha1", "beta2"}),
        "alpha2*alpha3 = 1 * " + power_path({"beta2", "alpha3", "beta1", "alpha2", "beta3"}),
        "alpha3*alpha1 = 1 * " + power_path({"beta3", "alpha1", "beta2", "alpha3", "beta1"}),
        "beta1*beta2 = 1 * " + power_path({"alpha1", "beta2", "alpha3", "beta1", "alpha2"}),
        "beta2*beta3 = 1 * " + power_path({"alpha2", "beta3", "alpha1", "beta2", "alpha3"}),
        "beta3*beta1 = 1 * " + power_path({"alpha3", "beta1", "alpha2", "beta3", "alpha1"}),
        "alpha1*alpha2*beta3 = 0", "alpha2*alpha3*beta1 = 0", "alpha3*alpha1*beta2 = 0",
        "beta1*beta2*alpha3 = 0", "beta2*beta3*alpha1 = 0", "beta3*beta1*alpha2 = 0"};
    c.require(relation_strings(relations_weighted_triangulation(fixture("ex35.json"))) ==
                  expected,
              "Markov quadratic relation set mismatch (weight 1)");

    WeightedBiserialQuiver two = WeightedBiserialQuiver::create(
        fixture("ex35.json").quiver(), {{"alpha1", 2}});
    auto rels = relation_strings(relations_weighted_triangulation(two));
    std::string expected_rhs =
        "alpha1*alpha2 = 1 * " +
        power_path({"beta1", "alpha2", "beta3", "alpha1", "beta2", "alpha3"}) + "*" +
        power_path({"beta1", "alpha2", "beta3", "alpha1", "beta2"});
    c.require(rels.count(expected_rhs) == 1,
              "Markov quadratic relation set mismatch (weight 2)");
  }
  return c;
}

Check criterion_9() {
  Check c;
  for (const char* name : {"ex28_brauer.json", "ex410_brauer.json"}) {
    BrauerGraph g = brauer_fixture(name);
    if (!ribbon_isomorphic(g, biserial_to_brauer(brauer_to_biserial(g)), 16)) {
      c.require(false, std::string("fixture round trip failed: ") + name);
      return c;
    }
  }
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    // Random ribbon graphs with at most 8 edges, reached through the
    // one-to-one correspondence with weighted quivers.
    WeightedBiserialQuiver w = random_weighted_biserial_quiver(1 + seed % 8, seed, 3);
    BrauerGraph g = biserial_to_brauer(w);
    if (!ribbon_isomorphic(g, biserial_to_brauer(brauer_to_biserial(g)), 16)) {
      c.require(false, "random round trip failed at seed " + std::to_string(seed));
      break;
    }
  }
  return c;
}

Check criterion_10() {
  Check c;
  BrauerGraph g = brauer_fixture("ex410_brauer.json");
  BrauerGraph out = barycentric_division(g);

  c.require(out.vertex_count() == 7,
            "expected 7 ribbon vertices, got " + std::to_string(out.vertex_count()));

  std::map<std::string, int> valency, multiplicity;
  std::vector<std::pair<std::string, int>> new_vertices;
  for (int v = 0; v < out.vertex_count(); ++v) {
    valency[out.vertex_ids()[v]] = out.valency(v);
    if (out.vertex_ids()[v].rfind("v_F_", 0) == 0)
      new_vertices.push_back({out.vertex_ids()[v], out.multiplicity(v)});
  }
  // u = the triangle orbit (alpha beta gamma), v = the square orbit, w = the
  // fixed loop, drawn with valencies 3, 4 and 1.
  c.require(valency.count("v_F_h3a") && valency["v_F_h3a"] == 3, "valency of u != 3");
  c.require(valency.count("v_F_h1x") && valency["v_F_h1x"] == 4, "valency of v != 4");
  c.require(valency.count("v_F_h1y") && valency["v_F_h1y"] == 1, "valency of w != 1");
  for (const auto& [id, e] : new_vertices)
    c.require(e == 1, "new vertex " + id + " has multiplicity != 1");
  c.require(green_walks(brauer_to_biserial(g).quiver()).size() == 3,
            "green walk count != 3");
  return c;
}

Check criterion_11() {
  Check c;
  SurfaceReport markov = surface_report(fixture("ex35.json").quiver());
  c.require(markov.euler_characteristic == 0 && markov.genus && *markov.genus == 1,
            "Markov quiver should have chi = 0, genus 1");
  SurfaceReport sphere = surface_report(star(fixture("ex45.json")).quiver());
  c.require(sphere.euler_characteristic == 2 && sphere.genus && *sphere.genus == 0,
            "enlarged one-vertex quiver should have chi = 2, genus 0");
  int checked = 0;
  for (const WeightedBiserialQuiver& w : corpus()) {
    auto border = w.quiver().border_vertices();
    if (border.empty()) continue;
    WeightedBiserialQuiver out = sharp(w);
    // Single-vertex enlargements (both loops already on the border) fall
    // under the stated single-vertex exclusion of the surface invariants.
    if (out.quiver().vertex_count() < 2) continue;
    ++checked;
    SurfaceReport r = surface_report(out.quiver());
    if (r.n_border_loops != static_cast<int>(border.size())) {
      c.require(false, "border loop count not preserved");
      break;
    }
  }
  c.require(checked > 50, "too few bordered samples");
  return c;
}

Check criterion_12() {
  Check c;
  WeightedBiserialQuiver tetra = fixture("tetrahedral.json");
  c.require(is_singular_tetrahedral(tetra), "fixture not detected");
  WeightedBiserialQuiver heavier = WeightedBiserialQuiver::create(
      tetra.quiver(), {{"alpha", 2}, {"beta", 1}, {"gamma", 1}, {"mu", 1}}, {},
      tetra.params_by_rep());
  c.require(!is_singular_tetrahedral(heavier), "weight 2 instance wrongly detected");
  for (const WeightedBiserialQuiver& w : corpus()) {
    auto [enlarged, sel] = periodic_envelope(w);
    if (is_singular_tetrahedral(enlarged)) {
      c.require(false, "an envelope output was detected as tetrahedral");
      break;
    }
  }
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) only = std::atoi(argv[i + 1]);

  struct Entry {
    int number;
    const char* name;
    std::function<Check()> run;
    double budget_seconds;
  };
  const std::vector<Entry> entries = {
      {1, "eight-edge graph to quiver", criterion_1, 1.0},
      {2, "one-vertex enlargements match the listed orbits", criterion_2, 1.0},
      {3, "enlargement of the eight-vertex quiver", criterion_3, 1.0},
      {4, "border-preserving enlargement of the square", criterion_4, 1.0},
      {5, "500 random round trips through reduce", criterion_5, 300.0},
      {6, "structural laws of the enlargements", criterion_6, 300.0},
      {7, "dimension agreement on the corpus", criterion_7, 300.0},
      {8, "relation sets match the worked examples", criterion_8, 1.0},
      {9, "ribbon graph round trips", criterion_9, 300.0},
      {10, "barycentric division of the four-edge graph", criterion_10, 1.0},
      {11, "surface invariants", criterion_11, 300.0},
      {12, "tetrahedral detection", criterion_12, 300.0},
  };

  int failures = 0;
  for (const Entry& entry : entries) {
    if (only != 0 && entry.number != only) continue;
    auto start = std::chrono::steady_clock::now();
    Check c;
    try {
      c = entry.run();
    } catch (const std::exception& e) {
      c.ok = false;
      c.detail = std::string("exception: ") + e.what();
    }
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (elapsed > entry.budget_seconds) {
      c.ok = false;
      if (!c.detail.empty()) c.detail += "; ";
      c.detail += "over time budget";
    }
    std::printf("[%s] criterion %2d: %s (%.2fs)%s%s\n", c.ok ? "PASS" : "FAIL", entry.number,
                entry.name, elapsed, c.detail.empty() ? "" : " -- ", c.detail.c_str());
    if (!c.ok) ++failures;
  }
  return failures;
}
