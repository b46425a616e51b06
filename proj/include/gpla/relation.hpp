#pragma once

// The semantic side: a piecewise-linear relation of arity (n, m) is a
// finite union of polyhedra over n + m coordinates.
//
// Coordinate convention, fixed once and used everywhere:
//
//   left ports first, right ports second, each top to bottom:
//
//        x0 ---+------+--- x_n
//        ...   | term |     ...
//      x_{n-1}-+------+--- x_{n+m-1}
//
// Tensoring interleaves blocks to (left1, left2, right1, right2); that
// reindexing is the only permutation site in the evaluator.

#include <vector>

#include "gpla/polyhedron.hpp"
#include "gpla/term.hpp"

namespace gpla {

struct PLRelation {
  Arity arity;
  std::vector<Polyhedron> polys;  // each of dim arity.left + arity.right

  Eigen::Index dim() const { return arity.left + arity.right; }

  /// Union over an empty cell list denotes the empty relation.
  static PLRelation empty(Arity a) { return PLRelation{a, {}}; }
  static PLRelation single(Arity a, Polyhedron p) { return PLRelation{a, {std::move(p)}}; }
};

/// Structural recursion over the term; generators evaluate to single cells,
/// composition and tensor act pairwise on cells, union concatenates.
PLRelation eval(const Term& t);

/// Relational composition; the middle coordinates are projected out by
/// Fourier-Motzkin and empty product cells are dropped eagerly.
PLRelation compose_rel(const PLRelation& r, const PLRelation& s);

PLRelation tensor_rel(const PLRelation& r, const PLRelation& s);

PLRelation union_rel(const PLRelation& r, const PLRelation& s);

/// Swaps the left and right blocks; arity reversed.
PLRelation opposite_rel(const PLRelation& r);

/// Point membership: satisfied by some cell.
bool member(const Point& x, const PLRelation& r);

/// Cells that denote the empty set removed.
PLRelation drop_empty_cells(const PLRelation& r);

}  // namespace gpla
