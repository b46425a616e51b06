#pragma once

// Shared-hyperplane normal forms for piecewise-linear relations. Every cell
// is the intersection of one sign condition (= 0, >= 0, <= 0) per hyperplane,
// with the pointwise-least valuation that still denotes the cell.
//
// Hyperplane identity: H and -H normalize to one stored form (integer
// primitive, first nonzero coefficient positive); valuations are read
// relative to the stored orientation.

#include <optional>
#include <string>
#include <vector>

#include "gpla/polyhedron.hpp"
#include "gpla/relation.hpp"

namespace gpla {

/// A nonzero affine form up to positive scaling and global sign.
struct Hyperplane {
  LinExpr form;  // normalized representative

  explicit Hyperplane(LinExpr raw);

  Eigen::Index dim() const { return form.dim(); }
  friend bool operator==(const Hyperplane& a, const Hyperplane& b) {
    return a.form.constant == b.form.constant &&
           detail::compare_vec(a.form.coeffs, b.form.coeffs) == 0;
  }
};

enum class Sign { Zero, NonNeg, NonPos };

char sign_char(Sign s);

/// Containment order on sign conditions: Zero below both half-sides.
bool sign_below(Sign a, Sign b);

struct Cell {
  std::vector<Sign> valuation;  // one entry per shared hyperplane
  friend bool operator==(const Cell&, const Cell&) = default;
};

struct PLNormalForm {
  Arity arity;
  std::vector<Hyperplane> hyperplanes;  // dim = arity.left + arity.right
  std::vector<Cell> cells;              // nonempty, deduplicated valuations

  Eigen::Index dim() const { return arity.left + arity.right; }
};

/// Pointwise-least sign valuation of p over the given hyperplanes, computed
/// by exact range queries; nullopt when p crosses some hyperplane.
std::optional<std::vector<Sign>> minimal_valuation(const Polyhedron& p,
                                                   const std::vector<Hyperplane>& hs);

struct PolyNf {
  std::vector<Hyperplane> hyperplanes;
  std::vector<Sign> valuation;
};

/// Normal form of a single nonempty polyhedron: its own (normalized,
/// deduplicated) constraint rows as hyperplanes, with the minimal valuation.
/// Throws EmptyInput on the empty polyhedron.
PolyNf poly_nf(const Polyhedron& p);

/// Splits every cell against h (both closed sides, empty pieces dropped) and
/// recomputes minimal valuations; the denotation is unchanged and the
/// hyperplane set grows by exactly {h}. No-op if h is already present.
PLNormalForm add_hyperplane(const PLNormalForm& nf, const Hyperplane& h);

/// Normal form of a whole relation: per-cell normal forms refined to one
/// shared hyperplane list, duplicate valuations merged. The empty relation
/// yields zero cells.
PLNormalForm pl_nf(const PLRelation& r);

Polyhedron cell_polyhedron(const PLNormalForm& nf, const Cell& c);

/// A point of the cell at which every NonNeg hyperplane is strictly positive
/// and every NonPos one strictly negative (exactly the valuation's slack).
/// Averages one strict witness per non-Zero hyperplane; pure sample when the
/// valuation is all Zero.
Point interior_point(const PLNormalForm& nf, const Cell& c);

PLRelation nf_relation(const PLNormalForm& nf);

std::string to_string(const Hyperplane& h);
std::string to_string(const Cell& c);

}  // namespace gpla
