#include "gpla/relation.hpp"

namespace gpla {

namespace {

Constraint eq_row(Eigen::Index dim, std::initializer_list<std::pair<Eigen::Index, Rat>> coeffs,
                  Rat constant = 0) {
  Vec v = Vec::Zero(dim);
  for (const auto& [i, c] : coeffs) v[i] = c;
  return Constraint({std::move(v), std::move(constant)}, Rel::Eq);
}

Constraint ge_row(Eigen::Index dim, std::initializer_list<std::pair<Eigen::Index, Rat>> coeffs,
                  Rat constant = 0) {
  Vec v = Vec::Zero(dim);
  for (const auto& [i, c] : coeffs) v[i] = c;
  return Constraint({std::move(v), std::move(constant)}, Rel::Ge);
}

PLRelation eval_generator(const Generator& g) {
  Arity a = generator_arity(g);
  Polyhedron p(a.left + a.right);
  switch (g.tag) {
    case GenTag::Dup:
      p.add(eq_row(3, {{0, 1}, {1, -1}}));
      p.add(eq_row(3, {{0, 1}, {2, -1}}));
      break;
    case GenTag::Del:
      break;
    case GenTag::Codup:
      p.add(eq_row(3, {{0, 1}, {2, -1}}));
      p.add(eq_row(3, {{1, 1}, {2, -1}}));
      break;
    case GenTag::Codel:
      break;
    case GenTag::Add:
      p.add(eq_row(3, {{0, 1}, {1, 1}, {2, -1}}));
      break;
    case GenTag::Zero:
      p.add(eq_row(1, {{0, 1}}));
      break;
    case GenTag::Coadd:
      p.add(eq_row(3, {{1, 1}, {2, 1}, {0, -1}}));
      break;
    case GenTag::Cozero:
      p.add(eq_row(1, {{0, 1}}));
      break;
    case GenTag::One:
      p.add(eq_row(1, {{0, 1}}, -1));
      break;
    case GenTag::Coone:
      p.add(eq_row(1, {{0, 1}}, -1));
      break;
    case GenTag::Geq:
      p.add(ge_row(2, {{0, 1}, {1, -1}}));
      break;
    case GenTag::Leq:
      p.add(ge_row(2, {{1, 1}, {0, -1}}));
      break;
    case GenTag::Scalar:
      p.add(eq_row(2, {{0, g.value}, {1, -1}}));
      break;
    case GenTag::Coscalar:
      p.add(eq_row(2, {{0, 1}, {1, -g.value}}));
      break;
  }
  p.tidy();
  return PLRelation::single(a, std::move(p));
}

Polyhedron diagonal(int n) {
  Polyhedron p(2 * n);
  for (int i = 0; i < n; ++i) p.add(eq_row(2 * n, {{i, 1}, {n + i, -1}}));
  p.tidy();
  return p;
}

}  // namespace

PLRelation eval(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Gen:
      return eval_generator(t.generator());
    case Term::Kind::Id:
      return PLRelation::single(t.arity(), diagonal(t.id_width()));
    case Term::Kind::Swap: {
      Polyhedron p(4);
      p.add(eq_row(4, {{0, 1}, {3, -1}}));
      p.add(eq_row(4, {{1, 1}, {2, -1}}));
      p.tidy();
      return PLRelation::single({2, 2}, std::move(p));
    }
    case Term::Kind::Seq:
      return compose_rel(eval(t.first()), eval(t.second()));
    case Term::Kind::Par:
      return tensor_rel(eval(t.first()), eval(t.second()));
    case Term::Kind::Union:
      return union_rel(eval(t.first()), eval(t.second()));
  }
  throw InternalError("unknown term kind");
}

PLRelation compose_rel(const PLRelation& r, const PLRelation& s) {
  if (r.arity.right != s.arity.left)
    throw ArityMismatch("composition of relations with mismatched boundary");
  int n = r.arity.left, m = r.arity.right, l = s.arity.right;
  PLRelation out{{n, l}, {}};
  for (const auto& p : r.polys)
    for (const auto& q : s.polys) {
      Polyhedron joint = intersect(direct_sum(p, Polyhedron::full_space(l)),
                                   direct_sum(Polyhedron::full_space(n), q));
      for (int k = 0; k < m; ++k) joint = eliminate(joint, n);
      if (!is_empty(joint)) out.polys.push_back(std::move(joint));
    }
  return out;
}

PLRelation tensor_rel(const PLRelation& r, const PLRelation& s) {
  int n1 = r.arity.left, m1 = r.arity.right;
  int n2 = s.arity.left, m2 = s.arity.right;
  // direct_sum order (L1, R1, L2, R2) -> convention order (L1, L2, R1, R2).
  std::vector<int> perm(n1 + m1 + n2 + m2);
  for (int i = 0; i < n1; ++i) perm[i] = i;
  for (int i = 0; i < m1; ++i) perm[n1 + i] = n1 + n2 + i;
  for (int i = 0; i < n2; ++i) perm[n1 + m1 + i] = n1 + i;
  for (int i = 0; i < m2; ++i) perm[n1 + m1 + n2 + i] = n1 + n2 + m1 + i;
  PLRelation out{{n1 + n2, m1 + m2}, {}};
  for (const auto& p : r.polys)
    for (const auto& q : s.polys) out.polys.push_back(reindex(direct_sum(p, q), perm));
  return out;
}

PLRelation union_rel(const PLRelation& r, const PLRelation& s) {
  if (!(r.arity == s.arity)) throw ArityMismatch("union of relations with different arities");
  PLRelation out = r;
  out.polys.insert(out.polys.end(), s.polys.begin(), s.polys.end());
  return out;
}

PLRelation opposite_rel(const PLRelation& r) {
  int n = r.arity.left, m = r.arity.right;
  std::vector<int> perm(n + m);
  for (int i = 0; i < n; ++i) perm[i] = m + i;
  for (int i = 0; i < m; ++i) perm[n + i] = i;
  PLRelation out{{m, n}, {}};
  for (const auto& p : r.polys) out.polys.push_back(reindex(p, perm));
  return out;
}

bool member(const Point& x, const PLRelation& r) {
  if (x.size() != r.dim()) throw DimensionMismatch("membership point of wrong dimension");
  for (const auto& p : r.polys)
    if (p.contains(x)) return true;
  return false;
}

PLRelation drop_empty_cells(const PLRelation& r) {
  PLRelation out{r.arity, {}};
  for (const auto& p : r.polys)
    if (!is_empty(p)) out.polys.push_back(p);
  return out;
}

}  // namespace gpla
