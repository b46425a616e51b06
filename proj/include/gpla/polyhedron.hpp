#pragma once

// Exact polyhedra in H-representation over an ordered field, with
// Fourier-Motzkin projection as the workhorse for emptiness, ranges of
// affine forms, and point sampling.
//
// Constraints are stored normalized: coefficient rows are integer-primitive
// (cleared denominators, gcd 1), equalities additionally have their first
// nonzero coefficient positive. The all-zero inequality with nonnegative
// constant is dropped on construction; infeasible constant rows are kept so
// emptiness is detectable from the residue of a full projection.

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "gpla/errors.hpp"
#include "gpla/rational.hpp"

namespace gpla {

/// An affine form a.x + b over an ambient space of dimension coeffs.size().
template <class Scalar>
struct LinExprT {
  VecT<Scalar> coeffs;
  Scalar constant{0};

  LinExprT() : coeffs(0) {}
  LinExprT(VecT<Scalar> c, Scalar k) : coeffs(std::move(c)), constant(std::move(k)) {}

  Eigen::Index dim() const { return coeffs.size(); }

  Scalar eval(const VecT<Scalar>& x) const {
    if (x.size() != coeffs.size()) throw DimensionMismatch("affine form evaluated at point of wrong dimension");
    return coeffs.dot(x) + constant;
  }

  bool is_zero() const {
    if (constant != 0) return false;
    for (Eigen::Index i = 0; i < coeffs.size(); ++i)
      if (coeffs[i] != 0) return false;
    return true;
  }
};

enum class Rel { Ge, Eq };  // expr >= 0  /  expr == 0

namespace detail {

/// Scales (coeffs, constant) to the integer-primitive representative.
/// No-op on the all-zero row.
template <class Scalar>
void make_primitive(LinExprT<Scalar>& e) {
  Int den_lcm = 1;
  for (Eigen::Index i = 0; i < e.coeffs.size(); ++i)
    den_lcm = lcm(den_lcm, denominator(e.coeffs[i]));
  den_lcm = lcm(den_lcm, denominator(e.constant));
  Int num_gcd = 0;
  auto acc = [&](const Scalar& v) {
    Int n = numerator(v * Scalar(den_lcm));
    num_gcd = gcd(num_gcd, abs(n));
  };
  for (Eigen::Index i = 0; i < e.coeffs.size(); ++i) acc(e.coeffs[i]);
  acc(e.constant);
  if (num_gcd == 0) return;
  Scalar scale = Scalar(den_lcm) / Scalar(num_gcd);
  e.coeffs *= scale;
  e.constant *= scale;
}

template <class Scalar>
int leading_sign(const LinExprT<Scalar>& e) {
  for (Eigen::Index i = 0; i < e.coeffs.size(); ++i)
    if (e.coeffs[i] != 0) return sign_of(e.coeffs[i]);
  return sign_of(e.constant);
}

template <class Scalar>
int compare_vec(const VecT<Scalar>& a, const VecT<Scalar>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return -1;
    if (a[i] > b[i]) return 1;
  }
  return 0;
}

}  // namespace detail

/// A single constraint expr >= 0 or expr == 0, normalized on construction.
template <class Scalar>
struct ConstraintT {
  LinExprT<Scalar> expr;
  Rel rel{Rel::Ge};

  ConstraintT() = default;
  ConstraintT(LinExprT<Scalar> e, Rel r) : expr(std::move(e)), rel(r) { normalize(); }

  void normalize() {
    detail::make_primitive(expr);
    if (rel == Rel::Eq && detail::leading_sign(expr) < 0) {
      expr.coeffs = -expr.coeffs;
      expr.constant = -expr.constant;
    }
  }

  bool coeffs_all_zero() const {
    for (Eigen::Index i = 0; i < expr.coeffs.size(); ++i)
      if (expr.coeffs[i] != 0) return false;
    return true;
  }

  bool trivially_true() const {
    if (!coeffs_all_zero()) return false;
    return rel == Rel::Ge ? expr.constant >= 0 : expr.constant == 0;
  }

  bool trivially_false() const {
    if (!coeffs_all_zero()) return false;
    return rel == Rel::Ge ? expr.constant < 0 : expr.constant != 0;
  }

  bool satisfied_by(const VecT<Scalar>& x) const {
    Scalar v = expr.eval(x);
    return rel == Rel::Ge ? v >= 0 : v == 0;
  }

  friend bool operator==(const ConstraintT& a, const ConstraintT& b) {
    return a.rel == b.rel && a.expr.constant == b.expr.constant &&
           detail::compare_vec(a.expr.coeffs, b.expr.coeffs) == 0;
  }
};

/// Closed convex set { x in Q^dim | all constraints hold }.
/// The empty set has no canonical representation; use is_empty().
template <class Scalar>
struct PolyhedronT {
  Eigen::Index dim{0};
  std::vector<ConstraintT<Scalar>> constraints;

  PolyhedronT() = default;
  explicit PolyhedronT(Eigen::Index d) : dim(d) {}
  PolyhedronT(Eigen::Index d, std::vector<ConstraintT<Scalar>> cs) : dim(d) {
    for (auto& c : cs) add(std::move(c));
    tidy();
  }

  static PolyhedronT full_space(Eigen::Index d) { return PolyhedronT(d); }

  void add(ConstraintT<Scalar> c) {
    if (c.expr.dim() != dim) throw DimensionMismatch("constraint dimension does not match polyhedron");
    if (c.trivially_true()) return;
    constraints.push_back(std::move(c));
  }

  /// Sorts rows, removes duplicates, and drops inequalities dominated by an
  /// identical-coefficient row with a weaker constant.
  void tidy() {
    auto cmp = [](const ConstraintT<Scalar>& a, const ConstraintT<Scalar>& b) {
      int c = detail::compare_vec(a.expr.coeffs, b.expr.coeffs);
      if (c != 0) return c < 0;
      if (a.rel != b.rel) return a.rel == Rel::Eq;  // equalities first
      return a.expr.constant < b.expr.constant;     // strongest Ge first
    };
    std::sort(constraints.begin(), constraints.end(), cmp);
    std::vector<ConstraintT<Scalar>> out;
    std::size_t i = 0;
    while (i < constraints.size()) {
      std::size_t j = i;
      while (j < constraints.size() &&
             detail::compare_vec(constraints[j].expr.coeffs, constraints[i].expr.coeffs) == 0)
        ++j;
      std::optional<Scalar> eq_min;
      for (std::size_t k = i; k < j; ++k) {
        const auto& c = constraints[k];
        if (c.rel == Rel::Eq) {
          if (!(k > i && constraints[k - 1] == c)) out.push_back(c);
          if (!eq_min || c.expr.constant < *eq_min) eq_min = c.expr.constant;
        } else {
          // Only the smallest constant binds; an equality a.x = -b makes
          // a.x + b' >= 0 redundant whenever b' >= b.
          bool first_ge = k == i || constraints[k - 1].rel == Rel::Eq;
          if (first_ge && !(eq_min && c.expr.constant >= *eq_min)) out.push_back(c);
        }
      }
      i = j;
    }
    constraints = std::move(out);
  }

  bool has_trivially_false_row() const {
    for (const auto& c : constraints)
      if (c.trivially_false()) return true;
    return false;
  }

  bool contains(const VecT<Scalar>& x) const {
    if (x.size() != dim) throw DimensionMismatch("membership query of wrong dimension");
    for (const auto& c : constraints)
      if (!c.satisfied_by(x)) return false;
    return true;
  }
};

/// The exact image of a polyhedron under an affine form: empty, or a closed
/// interval whose finite endpoints are attained.
template <class Scalar>
struct IntervalT {
  bool empty{true};
  std::optional<Scalar> lo;  // nullopt = -infinity
  std::optional<Scalar> hi;  // nullopt = +infinity

  static IntervalT make_empty() { return IntervalT{}; }
  static IntervalT range(std::optional<Scalar> lo, std::optional<Scalar> hi) {
    return IntervalT{false, std::move(lo), std::move(hi)};
  }

  bool subset_of_zero() const { return empty || (lo && hi && *lo == 0 && *hi == 0); }
  bool subset_of_nonneg() const { return empty || (lo && *lo >= 0); }
  bool subset_of_nonpos() const { return empty || (hi && *hi <= 0); }
};

// ---------------------------------------------------------------------------
// Operations

template <class Scalar>
PolyhedronT<Scalar> intersect(const PolyhedronT<Scalar>& p, const PolyhedronT<Scalar>& q) {
  if (p.dim != q.dim) throw DimensionMismatch("intersection of polyhedra of different dimensions");
  PolyhedronT<Scalar> out(p.dim);
  for (const auto& c : p.constraints) out.add(c);
  for (const auto& c : q.constraints) out.add(c);
  out.tidy();
  return out;
}

/// Coordinates of p first, then q's; constraints padded with zeros.
template <class Scalar>
PolyhedronT<Scalar> direct_sum(const PolyhedronT<Scalar>& p, const PolyhedronT<Scalar>& q) {
  PolyhedronT<Scalar> out(p.dim + q.dim);
  for (const auto& c : p.constraints) {
    VecT<Scalar> v = VecT<Scalar>::Zero(out.dim);
    v.head(p.dim) = c.expr.coeffs;
    out.add(ConstraintT<Scalar>({std::move(v), c.expr.constant}, c.rel));
  }
  for (const auto& c : q.constraints) {
    VecT<Scalar> v = VecT<Scalar>::Zero(out.dim);
    v.tail(q.dim) = c.expr.coeffs;
    out.add(ConstraintT<Scalar>({std::move(v), c.expr.constant}, c.rel));
  }
  out.tidy();
  return out;
}

/// perm maps old coordinate i to new coordinate perm[i].
template <class Scalar>
PolyhedronT<Scalar> reindex(const PolyhedronT<Scalar>& p, const std::vector<int>& perm) {
  if (static_cast<Eigen::Index>(perm.size()) != p.dim) throw InvalidPermutation("permutation size does not match dimension");
  std::vector<bool> seen(perm.size(), false);
  for (int t : perm) {
    if (t < 0 || t >= static_cast<int>(perm.size()) || seen[t]) throw InvalidPermutation("not a bijection");
    seen[t] = true;
  }
  PolyhedronT<Scalar> out(p.dim);
  for (const auto& c : p.constraints) {
    VecT<Scalar> v = VecT<Scalar>::Zero(p.dim);
    for (Eigen::Index i = 0; i < p.dim; ++i) v[perm[i]] = c.expr.coeffs[i];
    out.add(ConstraintT<Scalar>({std::move(v), c.expr.constant}, c.rel));
  }
  out.tidy();
  return out;
}

namespace detail {

template <class Scalar>
LinExprT<Scalar> drop_coord(const LinExprT<Scalar>& e, Eigen::Index var) {
  VecT<Scalar> v(e.coeffs.size() - 1);
  for (Eigen::Index i = 0, j = 0; i < e.coeffs.size(); ++i)
    if (i != var) v[j++] = e.coeffs[i];
  return {std::move(v), e.constant};
}

/// r - (r[var]/pivot[var]) * pivot; eliminates var from r. The pivot must be
/// an equality, so the combination preserves r's relation either way.
template <class Scalar>
LinExprT<Scalar> pivot_out(const LinExprT<Scalar>& r, const LinExprT<Scalar>& pivot, Eigen::Index var) {
  Scalar f = r.coeffs[var] / pivot.coeffs[var];
  return {VecT<Scalar>(r.coeffs - f * pivot.coeffs), r.constant - f * pivot.constant};
}

}  // namespace detail

/// Existential projection: x in result iff some value can be inserted at
/// position var to land in p. Gauss-eliminates through an equality when one
/// mentions var, otherwise pairs opposite-signed inequality rows.
template <class Scalar>
PolyhedronT<Scalar> eliminate(const PolyhedronT<Scalar>& p, Eigen::Index var) {
  if (var < 0 || var >= p.dim) throw DimensionMismatch("eliminated variable out of range");
  PolyhedronT<Scalar> out(p.dim - 1);

  const ConstraintT<Scalar>* pivot = nullptr;
  for (const auto& c : p.constraints)
    if (c.rel == Rel::Eq && c.expr.coeffs[var] != 0) {
      pivot = &c;
      break;
    }

  if (pivot) {
    for (const auto& c : p.constraints) {
      if (&c == pivot) continue;
      LinExprT<Scalar> e = c.expr.coeffs[var] != 0 ? detail::pivot_out(c.expr, pivot->expr, var) : c.expr;
      out.add(ConstraintT<Scalar>(detail::drop_coord(e, var), c.rel));
    }
    out.tidy();
    return out;
  }

  std::vector<const ConstraintT<Scalar>*> pos, neg;
  for (const auto& c : p.constraints) {
    Scalar a = c.expr.coeffs[var];
    if (a == 0) {
      out.add(ConstraintT<Scalar>(detail::drop_coord(c.expr, var), c.rel));
    } else if (a > 0) {
      pos.push_back(&c);
    } else {
      neg.push_back(&c);
    }
  }
  for (const auto* a : pos)
    for (const auto* b : neg) {
      Scalar alpha = a->expr.coeffs[var];   // > 0
      Scalar beta = -b->expr.coeffs[var];   // > 0
      LinExprT<Scalar> e{VecT<Scalar>(alpha * b->expr.coeffs + beta * a->expr.coeffs),
                         alpha * b->expr.constant + beta * a->expr.constant};
      out.add(ConstraintT<Scalar>(detail::drop_coord(e, var), Rel::Ge));
    }
  out.tidy();
  return out;
}

template <class Scalar>
bool is_empty(const PolyhedronT<Scalar>& p) {
  PolyhedronT<Scalar> cur = p;
  while (true) {
    if (cur.has_trivially_false_row()) return true;
    if (cur.dim == 0) return false;
    cur = eliminate(cur, 0);
  }
}

/// Exact image {f(x) | x in p}. Adjoins t = f(x) and projects out x.
template <class Scalar>
IntervalT<Scalar> range_of(const PolyhedronT<Scalar>& p, const LinExprT<Scalar>& f) {
  if (f.dim() != p.dim) throw DimensionMismatch("affine form dimension does not match polyhedron");
  PolyhedronT<Scalar> q(p.dim + 1);
  for (const auto& c : p.constraints) {
    VecT<Scalar> v = VecT<Scalar>::Zero(q.dim);
    v.head(p.dim) = c.expr.coeffs;
    q.add(ConstraintT<Scalar>({std::move(v), c.expr.constant}, c.rel));
  }
  {
    VecT<Scalar> v(q.dim);
    v.head(p.dim) = f.coeffs;
    v[p.dim] = Scalar(-1);
    q.add(ConstraintT<Scalar>({std::move(v), f.constant}, Rel::Eq));
  }
  q.tidy();
  for (Eigen::Index k = 0; k < p.dim; ++k) q = eliminate(q, 0);

  std::optional<Scalar> lo, hi;
  for (const auto& c : q.constraints) {
    Scalar a = c.expr.coeffs[0];
    Scalar b = c.expr.constant;
    if (a == 0) {
      if (c.trivially_false()) return IntervalT<Scalar>::make_empty();
      continue;
    }
    Scalar bound = -b / a;
    if (c.rel == Rel::Eq) {
      if (!lo || bound > *lo) lo = bound;
      if (!hi || bound < *hi) hi = bound;
    } else if (a > 0) {
      if (!lo || bound > *lo) lo = bound;
    } else {
      if (!hi || bound < *hi) hi = bound;
    }
  }
  if (lo && hi && *lo > *hi) return IntervalT<Scalar>::make_empty();
  return IntervalT<Scalar>::range(std::move(lo), std::move(hi));
}

/// Deterministic witness of nonemptiness via back-substitution along the
/// elimination stack: each coordinate is chosen as the midpoint of its
/// feasible interval, bound+-1 on half-lines, 0 when unconstrained.
template <class Scalar>
std::optional<VecT<Scalar>> sample_point(const PolyhedronT<Scalar>& p) {
  if (p.has_trivially_false_row()) return std::nullopt;
  if (p.dim == 0) return VecT<Scalar>(0);

  auto rest = sample_point(eliminate(p, 0));
  if (!rest) return std::nullopt;
  const VecT<Scalar>& x = *rest;

  auto value_at = [&](const ConstraintT<Scalar>& c) {
    // Solve c.expr = 0 for coordinate 0 given the remaining coordinates.
    Scalar acc = c.expr.constant;
    for (Eigen::Index i = 1; i < p.dim; ++i) acc += c.expr.coeffs[i] * x[i - 1];
    return -acc / c.expr.coeffs[0];
  };

  std::optional<Scalar> lo, hi;
  std::optional<Scalar> pinned;
  for (const auto& c : p.constraints) {
    Scalar a = c.expr.coeffs[0];
    if (a == 0) continue;
    Scalar bound = value_at(c);
    if (c.rel == Rel::Eq) {
      if (!pinned) pinned = bound;
    } else if (a > 0) {
      if (!lo || bound > *lo) lo = bound;
    } else {
      if (!hi || bound < *hi) hi = bound;
    }
  }

  Scalar v;
  if (pinned) {
    v = *pinned;
  } else if (lo && hi) {
    if (*lo > *hi) throw InternalError("back-substitution interval is empty");
    v = (*lo + *hi) / 2;
  } else if (lo) {
    v = *lo + 1;
  } else if (hi) {
    v = *hi - 1;
  } else {
    v = 0;
  }

  VecT<Scalar> out(p.dim);
  out[0] = v;
  out.tail(p.dim - 1) = x;
  if (!p.contains(out)) throw InternalError("sampled point violates a constraint");
  return out;
}

/// A point of p with f > 0, when one exists. Targets the top of the range so
/// the strictness is as robust as the geometry allows.
template <class Scalar>
std::optional<VecT<Scalar>> strict_witness(const PolyhedronT<Scalar>& p, const LinExprT<Scalar>& f) {
  IntervalT<Scalar> r = range_of(p, f);
  if (r.empty || (r.hi && *r.hi <= 0)) return std::nullopt;
  Scalar target;
  if (r.hi) {
    target = *r.hi;
  } else {
    Scalar base = r.lo && *r.lo > 0 ? *r.lo : Scalar(0);
    target = base + 1;
  }
  PolyhedronT<Scalar> q = p;
  q.add(ConstraintT<Scalar>({f.coeffs, f.constant - target}, Rel::Eq));
  q.tidy();
  auto w = sample_point(q);
  if (!w) throw InternalError("strict witness target not attained");
  return w;
}

// Rational instantiations used throughout the engine.
using LinExpr = LinExprT<Rat>;
using Constraint = ConstraintT<Rat>;
using Polyhedron = PolyhedronT<Rat>;
using Interval = IntervalT<Rat>;

std::string to_string(const LinExpr& e);
std::string to_string(const Constraint& c);

}  // namespace gpla
