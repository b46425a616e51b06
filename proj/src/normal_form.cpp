#include "gpla/normal_form.hpp"

#include <algorithm>

namespace gpla {

Hyperplane::Hyperplane(LinExpr raw) : form(std::move(raw)) {
  if (form.is_zero()) throw ZeroHyperplane("hyperplane must be a nonzero affine form");
  detail::make_primitive(form);
  if (detail::leading_sign(form) < 0) {
    form.coeffs = -form.coeffs;
    form.constant = -form.constant;
  }
}

char sign_char(Sign s) {
  switch (s) {
    case Sign::Zero: return '0';
    case Sign::NonNeg: return '+';
    case Sign::NonPos: return '-';
  }
  throw InternalError("unknown sign");
}

bool sign_below(Sign a, Sign b) { return a == b || a == Sign::Zero; }

std::optional<std::vector<Sign>> minimal_valuation(const Polyhedron& p,
                                                   const std::vector<Hyperplane>& hs) {
  std::vector<Sign> out;
  out.reserve(hs.size());
  for (const auto& h : hs) {
    if (h.dim() != p.dim) throw DimensionMismatch("hyperplane dimension does not match polyhedron");
    Interval r = range_of(p, h.form);
    if (r.subset_of_zero())
      out.push_back(Sign::Zero);
    else if (r.subset_of_nonneg())
      out.push_back(Sign::NonNeg);
    else if (r.subset_of_nonpos())
      out.push_back(Sign::NonPos);
    else
      return std::nullopt;  // p crosses h
  }
  return out;
}

PolyNf poly_nf(const Polyhedron& p) {
  if (is_empty(p)) throw EmptyInput("the empty polyhedron has no normal form");
  std::vector<Hyperplane> hs;
  for (const auto& c : p.constraints) {
    Hyperplane h(c.expr);
    if (std::find(hs.begin(), hs.end(), h) == hs.end()) hs.push_back(std::move(h));
  }
  auto val = minimal_valuation(p, hs);
  if (!val) throw InternalError("a polyhedron must be representable over its own rows");
  return {std::move(hs), std::move(*val)};
}

namespace {

Constraint sign_constraint(const Hyperplane& h, Sign s) {
  switch (s) {
    case Sign::Zero: return Constraint(h.form, Rel::Eq);
    case Sign::NonNeg: return Constraint(h.form, Rel::Ge);
    case Sign::NonPos: return Constraint({Vec(-h.form.coeffs), -h.form.constant}, Rel::Ge);
  }
  throw InternalError("unknown sign");
}

void push_cell(std::vector<Cell>& cells, Cell c) {
  if (std::find(cells.begin(), cells.end(), c) == cells.end()) cells.push_back(std::move(c));
}

/// Refines one nonempty polyhedron against a hyperplane list: the pieces
/// cut out by all sign choices that meet p, each with its minimal valuation.
std::vector<Cell> refine(const Polyhedron& p, const std::vector<Hyperplane>& hs) {
  std::vector<Polyhedron> pieces{p};
  for (const auto& h : hs) {
    std::vector<Polyhedron> next;
    for (const auto& piece : pieces) {
      Interval r = range_of(piece, h.form);
      bool below = !r.subset_of_nonneg();  // reaches strictly negative values
      bool above = !r.subset_of_nonpos();  // reaches strictly positive values
      if (below && above) {
        Polyhedron hi = piece, lo = piece;
        hi.add(sign_constraint(h, Sign::NonNeg));
        hi.tidy();
        lo.add(sign_constraint(h, Sign::NonPos));
        lo.tidy();
        next.push_back(std::move(hi));
        next.push_back(std::move(lo));
      } else {
        next.push_back(piece);  // sign already determined; no cut needed
      }
    }
    pieces = std::move(next);
  }
  std::vector<Cell> out;
  for (const auto& piece : pieces) {
    auto val = minimal_valuation(piece, hs);
    if (!val) throw InternalError("refined piece must be representable over the shared hyperplanes");
    push_cell(out, Cell{std::move(*val)});
  }
  return out;
}

}  // namespace

PLNormalForm add_hyperplane(const PLNormalForm& nf, const Hyperplane& h) {
  if (h.dim() != nf.dim()) throw DimensionMismatch("hyperplane dimension does not match normal form");
  if (std::find(nf.hyperplanes.begin(), nf.hyperplanes.end(), h) != nf.hyperplanes.end()) return nf;
  PLNormalForm out{nf.arity, nf.hyperplanes, {}};
  out.hyperplanes.push_back(h);
  for (const auto& cell : nf.cells) {
    Polyhedron p = cell_polyhedron(nf, cell);
    for (const auto& piece_val : refine(p, out.hyperplanes)) push_cell(out.cells, piece_val);
  }
  return out;
}

PLNormalForm pl_nf(const PLRelation& r) {
  PLRelation live = drop_empty_cells(r);
  PLNormalForm out{r.arity, {}, {}};
  if (live.polys.empty()) return out;
  for (const auto& p : live.polys)
    for (const auto& c : p.constraints) {
      Hyperplane h(c.expr);
      if (std::find(out.hyperplanes.begin(), out.hyperplanes.end(), h) == out.hyperplanes.end())
        out.hyperplanes.push_back(std::move(h));
    }
  for (const auto& p : live.polys)
    for (const auto& c : refine(p, out.hyperplanes)) push_cell(out.cells, c);
  return out;
}

Polyhedron cell_polyhedron(const PLNormalForm& nf, const Cell& c) {
  if (c.valuation.size() != nf.hyperplanes.size())
    throw DimensionMismatch("cell valuation length does not match hyperplane count");
  Polyhedron p(nf.dim());
  for (std::size_t i = 0; i < nf.hyperplanes.size(); ++i)
    p.add(sign_constraint(nf.hyperplanes[i], c.valuation[i]));
  p.tidy();
  return p;
}

Point interior_point(const PLNormalForm& nf, const Cell& c) {
  Polyhedron p = cell_polyhedron(nf, c);
  std::vector<Point> witnesses;
  for (std::size_t i = 0; i < nf.hyperplanes.size(); ++i) {
    if (c.valuation[i] == Sign::Zero) continue;
    LinExpr f = nf.hyperplanes[i].form;
    if (c.valuation[i] == Sign::NonPos) {
      f.coeffs = -f.coeffs;
      f.constant = -f.constant;
    }
    auto w = strict_witness(p, f);
    if (!w) throw InternalError("minimal valuation guarantees a strict witness for " +
                                to_string(nf.hyperplanes[i]));
    witnesses.push_back(std::move(*w));
  }
  if (witnesses.empty()) {
    auto x = sample_point(p);
    if (!x) throw InternalError("normal-form cell must be nonempty");
    return *x;
  }
  // The average stays in the (convex) cell and keeps every strict inequality
  // strict, since each witness is nonnegative on all the others' forms.
  Point acc = Point::Zero(p.dim);
  for (const auto& w : witnesses) acc += w;
  return acc / Rat(static_cast<int>(witnesses.size()));
}

PLRelation nf_relation(const PLNormalForm& nf) {
  PLRelation out{nf.arity, {}};
  for (const auto& c : nf.cells) out.polys.push_back(cell_polyhedron(nf, c));
  return out;
}

std::string to_string(const Hyperplane& h) { return to_string(h.form); }

std::string to_string(const Cell& c) {
  std::string out;
  for (Sign s : c.valuation) out += sign_char(s);
  return out;
}

}  // namespace gpla
