#pragma once

// Derived diagrams: matrix and affine encodings, the n-fold union
// generators, the axes-union "+" generator, the one-sided diode relations,
// max / abs / ReLU, and an exact ReLU-network encoder. Each builder returns
// a Term with a pinned denotation; the test suite enforces the denotation,
// which is the normative part.

#include <utility>
#include <vector>

#include "gpla/normal_form.hpp"
#include "gpla/term.hpp"

namespace gpla {

/// Parallel stack of terms; the empty stack is the empty diagram.
Term par_fold(const std::vector<Term>& ts);

Term del_block(int n);   // n -> 0, discard all
Term dup_tree(int k);    // 1 -> k copies (k = 0 discards)
Term add_tree(int k);    // k -> 1 sum (k = 0 is the constant 0)

/// n -> m term denoting { (x, y) | y = A x }: each nonzero entry is a
/// scalar wire from its column port to its row port.
Term matrix_term(const Mat& a);

/// { (x, y) | y = A x + b }.
Term affine_term(const Mat& a, const Vec& b);

/// The n -> 1 affine map of a (nonzero) hyperplane.
Term hyperplane_term(const Hyperplane& h);

/// 2n -> n: projection onto the first n-block union projection onto the
/// second.
Term union_gen(int n);

/// 1 -> 1: the union of the two axes, x = 0 or y = 0.
Term plus_gen();

/// 1 -> 2 copier that duplicates both the free-value and the zero states:
/// relates x to (a, b) with |a| + |b| = x.
Term dup_abs();

/// 1 -> 1: { x >= 0, y = 0 } union { x = 0, y <= 0 }.
Term L_gen();

/// Mirror image of L: { x <= 0, y = 0 } union { x = 0, y >= 0 }.
Term diode_term();

Term max_term();   // 2 -> 1, graph of max
Term abs_term();   // 1 -> 1, graph of |x|
Term relu_term();  // 1 -> 1, graph of max(0, x)

/// Exact input-output relation of a ReLU network; every affine layer is
/// followed by coordinatewise ReLU. The empty network is the single wire.
Term relu_network(const std::vector<std::pair<Mat, Vec>>& layers);

}  // namespace gpla
