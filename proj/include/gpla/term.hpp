#pragma once

// Diagram terms: generators, identities, wire crossings, sequential and
// parallel composition, and binary union. Terms are immutable values built
// through arity-checking factories, so every Term in existence is well
// typed and its arity is known without recomputation.

#include <memory>
#include <string>
#include <vector>

#include "gpla/errors.hpp"
#include "gpla/rational.hpp"

namespace gpla {

enum class GenTag {
  Dup,       // 1 -> 2, copy
  Del,       // 1 -> 0, discard
  Codup,     // 2 -> 1, equal inputs
  Codel,     // 0 -> 1, free value
  Add,       // 2 -> 1, sum
  Zero,      // 0 -> 1, constant 0
  Coadd,     // 1 -> 2, split into a sum
  Cozero,    // 1 -> 0, force 0
  One,       // 0 -> 1, constant 1
  Coone,     // 1 -> 0, force 1
  Geq,       // 1 -> 1, left >= right
  Leq,       // 1 -> 1, left <= right
  Scalar,    // 1 -> 1, right = r * left
  Coscalar,  // 1 -> 1, left = r * right
};

struct Generator {
  GenTag tag;
  Rat value{0};  // meaningful for Scalar/Coscalar only

  friend bool operator==(const Generator& a, const Generator& b) {
    if (a.tag != b.tag) return false;
    if (a.tag == GenTag::Scalar || a.tag == GenTag::Coscalar) return a.value == b.value;
    return true;
  }
};

struct Arity {
  int left{0};
  int right{0};
  friend bool operator==(const Arity&, const Arity&) = default;
  int total() const { return left + right; }
};

Arity generator_arity(const Generator& g);
std::string generator_name(const Generator& g);

class Term {
 public:
  enum class Kind { Gen, Id, Swap, Seq, Par, Union };

  static Term gen(Generator g);
  static Term id(int n);
  static Term swap();
  static Term seq(Term a, Term b);
  static Term par(Term a, Term b);
  static Term unite(Term a, Term b);

  Kind kind() const;
  Arity arity() const;
  const Generator& generator() const;  // Kind::Gen only
  int id_width() const;                // Kind::Id only
  Term first() const;                  // binary nodes
  Term second() const;

  bool operator==(const Term& other) const;

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

inline Arity arity(const Term& t) { return t.arity(); }

/// Fully parenthesized canonical text; parse(print(t)) == t.
std::string print(const Term& t);

/// Mirror image: generators swapped with their duals, sequencing reversed.
/// An involution; semantically the opposite relation.
Term dual(const Term& t);

/// Block symmetry n + m -> m + n built from Swap and Id.
Term sym(int n, int m);

/// cup(n): 2n -> 0 identifying the two n-blocks componentwise;
/// cap(n): 0 -> 2n, its mirror. They satisfy the snake equations.
Term cup(int n);
Term cap(int n);

/// Wires permuted so input i exits at position perm[i]; built from
/// adjacent crossings.
Term permutation_term(const std::vector<int>& perm);

// Short builders for the generator alphabet.
inline Term dup() { return Term::gen({GenTag::Dup}); }
inline Term del() { return Term::gen({GenTag::Del}); }
inline Term codup() { return Term::gen({GenTag::Codup}); }
inline Term codel() { return Term::gen({GenTag::Codel}); }
inline Term add() { return Term::gen({GenTag::Add}); }
inline Term zero() { return Term::gen({GenTag::Zero}); }
inline Term coadd() { return Term::gen({GenTag::Coadd}); }
inline Term cozero() { return Term::gen({GenTag::Cozero}); }
inline Term one() { return Term::gen({GenTag::One}); }
inline Term coone() { return Term::gen({GenTag::Coone}); }
inline Term geq() { return Term::gen({GenTag::Geq}); }
inline Term leq() { return Term::gen({GenTag::Leq}); }
inline Term scalar(Rat r) { return Term::gen({GenTag::Scalar, std::move(r)}); }
inline Term coscalar(Rat r) { return Term::gen({GenTag::Coscalar, std::move(r)}); }
inline Term id1() { return Term::id(1); }

// Diagram expressions read left to right: a >> b composes, a & b stacks,
// a | b joins.
inline Term operator>>(Term a, Term b) { return Term::seq(std::move(a), std::move(b)); }
inline Term operator&(Term a, Term b) { return Term::par(std::move(a), std::move(b)); }
inline Term operator|(Term a, Term b) { return Term::unite(std::move(a), std::move(b)); }

}  // namespace gpla
