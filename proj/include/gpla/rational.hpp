#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include <optional>
#include <string>
#include <vector>

namespace gpla {

/// Exact rational scalar. All core computations are over Q; floating point
/// is not used anywhere in the engine.
using Rat = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

template <class Scalar>
using VecT = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <class Scalar>
using MatT = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using Vec = VecT<Rat>;
using Mat = MatT<Rat>;

/// A rational point, coordinates in ambient order.
using Point = Vec;

inline int sign_of(const Rat& x) {
  if (x > 0) return 1;
  if (x < 0) return -1;
  return 0;
}

/// Canonical text form: "p" when the denominator is 1, else "p/q".
inline std::string to_string(const Rat& x) {
  if (denominator(x) == 1) return numerator(x).str();
  return numerator(x).str() + "/" + denominator(x).str();
}

/// Parses "p", "-p", "p/q", "-p/q". Returns nullopt on malformed input.
std::optional<Rat> parse_rat(const std::string& text);

std::string to_string(const Point& p);

}  // namespace gpla
