#include "gpla/decide.hpp"

namespace gpla {

std::string to_string(const Verdict& v) {
  if (v.holds) return "holds";
  return "fails at " + to_string(v.counterexample);
}

Verdict subset(const PLRelation& d, const PLRelation& c) {
  if (!(d.arity == c.arity)) throw ArityMismatch("inclusion of relations with different arities");

  PLNormalForm nd = pl_nf(d);
  PLNormalForm nc = pl_nf(c);
  for (const auto& h : nc.hyperplanes) nd = add_hyperplane(nd, h);
  for (const auto& h : nd.hyperplanes) nc = add_hyperplane(nc, h);

  for (const auto& cell : nd.cells) {
    Point x = interior_point(nd, cell);
    const Cell* host = nullptr;
    for (const auto& cc : nc.cells)
      if (cell_polyhedron(nc, cc).contains(x)) {
        host = &cc;
        break;
      }
    if (!host) {
      if (!member(x, d) || member(x, c))
        throw InternalError("counterexample failed its own membership check");
      return Verdict::fail(std::move(x));
    }
    // The interior point pins the sign of every non-Zero hyperplane, so the
    // host cell's valuation must dominate entrywise; anything else is a bug.
    for (std::size_t k = 0; k < nd.hyperplanes.size(); ++k)
      if (!sign_below(cell.valuation[k], host->valuation[k]))
        throw InternalError("valuation dominance violated at hyperplane " +
                            to_string(nd.hyperplanes[k]));
  }
  return Verdict::pass();
}

Verdict equal(const PLRelation& d, const PLRelation& c) {
  Verdict v = subset(d, c);
  if (!v.holds) return v;
  return subset(c, d);
}

Verdict subset_terms(const Term& t, const Term& u) { return subset(eval(t), eval(u)); }

Verdict equal_terms(const Term& t, const Term& u) { return equal(eval(t), eval(u)); }

}  // namespace gpla
