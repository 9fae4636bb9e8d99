#include "surfalg/presentation.hpp"

#include <algorithm>

namespace surfalg {

std::string Path::str(const BiserialQuiver& bq) const {
  if (arrows.empty()) return "e_" + bq.vertex_id(start);
  std::string out;
  for (int a : arrows) {
    if (!out.empty()) out += "*";
    out += bq.arrow_id(a);
  }
  return out;
}

std::string Relation::str(const BiserialQuiver& bq) const {
  if (kind == RelationKind::MonomialZero) return left.str(bq) + " = 0";
  return left.str(bq) + " = " + scalar.str() + " * " + right->str(bq);
}

namespace {

void check_path(const BiserialQuiver& bq, const Path& p) {
  int at = p.start;
  for (int a : p.arrows) {
    if (bq.source(a) != at)
      throw Error("BadPath", "arrows do not compose at '" + bq.arrow_id(a) + "'");
    at = bq.target(a);
  }
}

void check_relation(const BiserialQuiver& bq, const Relation& r) {
  check_path(bq, r.left);
  if (r.kind == RelationKind::BinomialEquality) {
    check_path(bq, *r.right);
    if (r.scalar.is_zero()) throw Error("BadRelation", "zero scalar in a binomial");
    if (r.left.start != r.right->start || r.left.end(bq) != r.right->end(bq))
      throw Error("BadRelation", "binomial sides are not parallel");
  }
}

void finish(AlgebraPresentation& pres) {
  const BiserialQuiver& bq = pres.wbq.quiver();
  for (const Relation& r : pres.relations) check_relation(bq, r);
  for (int a = 0; a < bq.arrow_count(); ++a) {
    if (pres.wbq.weight_of(a) * pres.wbq.n_of(a) == 1)
      pres.virtual_loops.push_back(a);
    else
      pres.gabriel_arrows.push_back(a);
  }
}

}  // namespace

Path cycle_B(const WeightedBiserialQuiver& w, int arrow) {
  const BiserialQuiver& bq = w.quiver();
  Path p;
  p.start = bq.source(arrow);
  int n = w.n_of(arrow), m = w.weight_of(arrow);
  for (int rep = 0; rep < m; ++rep) {
    int a = arrow;
    for (int k = 0; k < n; ++k) {
      p.arrows.push_back(a);
      a = bq.g(a);
    }
  }
  return p;
}

Path path_A(const WeightedBiserialQuiver& w, int arrow) {
  if (w.weight_of(arrow) * w.n_of(arrow) < 2)
    throw Error("TooShort", "cycle of '" + w.quiver().arrow_id(arrow) + "' has length 1");
  Path p = cycle_B(w, arrow);
  p.arrows.pop_back();
  return p;
}

AlgebraPresentation relations_biserial(const WeightedBiserialQuiver& w) {
  const BiserialQuiver& bq = w.quiver();
  AlgebraPresentation pres;
  pres.wbq = w;
  pres.kind = PresentationKind::Biserial;
  for (int a = 0; a < bq.arrow_count(); ++a) {
    Relation r;
    r.kind = RelationKind::MonomialZero;
    r.left = Path{bq.source(a), {a, bq.f(a)}};
    pres.relations.push_back(std::move(r));
  }
  for (int v = 0; v < bq.vertex_count(); ++v) {
    const auto& out = bq.arrows_from(v);  // sorted by id
    Relation r;
    r.kind = RelationKind::BinomialEquality;
    r.left = cycle_B(w, out[0]);
    r.scalar = Scalar::one();
    r.right = cycle_B(w, out[1]);
    pres.relations.push_back(std::move(r));
  }
  finish(pres);
  return pres;
}

AlgebraPresentation relations_border(const WeightedBiserialQuiver& w) {
  const BiserialQuiver& bq = w.quiver();
  auto border = bq.border_vertex_indices();
  if (border.empty()) throw Error("EmptyBorder", "quiver has no border loops");

  AlgebraPresentation pres;
  pres.wbq = w;
  pres.kind = PresentationKind::Border;
  for (int a = 0; a < bq.arrow_count(); ++a) {
    bool border_loop = bq.is_loop(a) && bq.f(a) == a;
    Scalar b = border_loop ? w.border_value(bq.source(a)) : Scalar::zero();
    Relation r;
    if (border_loop && !b.is_zero()) {
      r.kind = RelationKind::BinomialEquality;
      r.left = Path{bq.source(a), {a, a}};
      r.scalar = b;
      r.right = cycle_B(w, a);
    } else {
      r.kind = RelationKind::MonomialZero;
      r.left = Path{bq.source(a), {a, bq.f(a)}};
    }
    pres.relations.push_back(std::move(r));
  }
  for (int v = 0; v < bq.vertex_count(); ++v) {
    const auto& out = bq.arrows_from(v);
    Relation r;
    r.kind = RelationKind::BinomialEquality;
    r.left = cycle_B(w, out[0]);
    r.scalar = Scalar::one();
    r.right = cycle_B(w, out[1]);
    pres.relations.push_back(std::move(r));
  }
  finish(pres);
  return pres;
}

AlgebraPresentation relations_weighted_triangulation(const WeightedBiserialQuiver& w) {
  const BiserialQuiver& bq = w.quiver();
  if (!bq.is_triangulation()) throw Error("NotTriangulation", "f^3 is not the identity");
  std::string small;
  for (int a = 0; a < bq.arrow_count(); ++a)
    if (w.weight_of(a) * w.n_of(a) < 3) {
      if (!small.empty()) small += ", ";
      small += "'" + bq.arrow_id(a) + "'";
    }
  if (!small.empty())
    throw Error("WeightTooSmall", "m*n < 3 for arrows " + small);

  AlgebraPresentation pres;
  pres.wbq = w;
  pres.kind = PresentationKind::WeightedTriangulation;
  for (int a = 0; a < bq.arrow_count(); ++a) {
    Relation r;
    r.kind = RelationKind::BinomialEquality;
    r.left = Path{bq.source(a), {a, bq.f(a)}};
    int other = bq.bar(a);
    r.scalar = w.has_params() ? w.param_of_orbit(w.orbit_of_arrow(other)) : Scalar::one();
    r.right = path_A(w, other);
    pres.relations.push_back(std::move(r));
  }
  for (int a = 0; a < bq.arrow_count(); ++a) {
    Relation r;
    r.kind = RelationKind::MonomialZero;
    int fa = bq.f(a);
    r.left = Path{bq.source(a), {a, fa, bq.g(fa)}};
    pres.relations.push_back(std::move(r));
  }
  finish(pres);
  return pres;
}

std::vector<Path> basis_paths(const AlgebraPresentation& pres) {
  if (pres.kind == PresentationKind::WeightedTriangulation)
    throw Error("UnsupportedKind", "basis enumeration needs a biserial or border presentation");
  const BiserialQuiver& bq = pres.wbq.quiver();
  std::vector<Path> basis;
  for (int v = 0; v < bq.vertex_count(); ++v) {
    basis.push_back(Path{v, {}});
    const auto& out = bq.arrows_from(v);
    for (int a : out) {
      Path full = cycle_B(pres.wbq, a);
      for (int len = 1; len < full.length(); ++len)
        basis.push_back(Path{v, {full.arrows.begin(), full.arrows.begin() + len}});
    }
    basis.push_back(cycle_B(pres.wbq, out[0]));  // one socle element per vertex
  }
  return basis;
}

long long dimension(const WeightedBiserialQuiver& w) {
  long long dim = 0;
  for (size_t oi = 0; oi < w.g_orbits().orbits.size(); ++oi) {
    long long n = w.orbit_length(static_cast<int>(oi));
    dim += w.orbit_weight(static_cast<int>(oi)) * n * n;
  }
  return dim;
}

long long dimension(const AlgebraPresentation& pres) { return dimension(pres.wbq); }

std::vector<std::vector<long long>> cartan_matrix(const AlgebraPresentation& pres) {
  const BiserialQuiver& bq = pres.wbq.quiver();
  std::vector<std::vector<long long>> cartan(
      bq.vertex_count(), std::vector<long long>(bq.vertex_count(), 0));
  for (const Path& p : basis_paths(pres)) ++cartan[p.start][p.end(bq)];
  return cartan;
}

RawQuiver gabriel_quiver(const AlgebraPresentation& pres) {
  const BiserialQuiver& bq = pres.wbq.quiver();
  RawQuiver out;
  out.vertices = bq.vertices();
  for (int a : pres.gabriel_arrows)
    out.arrows.push_back(bq.arrows()[a]);
  return out;
}

}  // namespace surfalg
