#pragma once

// Decides inclusion and equality of piecewise-linear relations: both sides
// are brought to normal form over one shared hyperplane set, and each cell
// of the left is tested by membership of one of its interior points in the
// right. Verdicts are exact; a failing inclusion carries a rational
// counterexample that is in the left relation and not in the right.

#include <string>

#include "gpla/normal_form.hpp"
#include "gpla/relation.hpp"
#include "gpla/term.hpp"

namespace gpla {

struct Verdict {
  bool holds{true};
  Point counterexample;  // meaningful when !holds

  static Verdict pass() { return {}; }
  static Verdict fail(Point x) { return {false, std::move(x)}; }
};

std::string to_string(const Verdict& v);

/// Is the denotation of d contained in the denotation of c?
Verdict subset(const PLRelation& d, const PLRelation& c);

Verdict equal(const PLRelation& d, const PLRelation& c);

Verdict subset_terms(const Term& t, const Term& u);
Verdict equal_terms(const Term& t, const Term& u);

}  // namespace gpla
