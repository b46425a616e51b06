#include "gpla/polyhedron.hpp"

namespace gpla {

std::string to_string(const LinExpr& e) {
  std::string out;
  bool first = true;
  for (Eigen::Index i = 0; i < e.coeffs.size(); ++i) {
    const Rat& c = e.coeffs[i];
    if (c == 0) continue;
    if (first) {
      if (c == -1)
        out += "-";
      else if (c != 1)
        out += to_string(c) + "*";
    } else {
      out += c > 0 ? " + " : " - ";
      Rat a = abs(c);
      if (a != 1) out += to_string(a) + "*";
    }
    out += "x" + std::to_string(i);
    first = false;
  }
  if (e.constant != 0 || first) {
    if (first) {
      out += to_string(e.constant);
    } else {
      out += e.constant > 0 ? " + " : " - ";
      out += to_string(Rat(abs(e.constant)));
    }
  }
  return out;
}

std::string to_string(const Constraint& c) {
  return to_string(c.expr) + (c.rel == Rel::Ge ? " >= 0" : " = 0");
}

}  // namespace gpla
