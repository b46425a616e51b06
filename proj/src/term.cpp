#include "gpla/term.hpp"

#include <utility>

namespace gpla {

Arity generator_arity(const Generator& g) {
  switch (g.tag) {
    case GenTag::Dup: return {1, 2};
    case GenTag::Del: return {1, 0};
    case GenTag::Codup: return {2, 1};
    case GenTag::Codel: return {0, 1};
    case GenTag::Add: return {2, 1};
    case GenTag::Zero: return {0, 1};
    case GenTag::Coadd: return {1, 2};
    case GenTag::Cozero: return {1, 0};
    case GenTag::One: return {0, 1};
    case GenTag::Coone: return {1, 0};
    case GenTag::Geq: return {1, 1};
    case GenTag::Leq: return {1, 1};
    case GenTag::Scalar: return {1, 1};
    case GenTag::Coscalar: return {1, 1};
  }
  throw InternalError("unknown generator tag");
}

std::string generator_name(const Generator& g) {
  switch (g.tag) {
    case GenTag::Dup: return "dup";
    case GenTag::Del: return "del";
    case GenTag::Codup: return "codup";
    case GenTag::Codel: return "codel";
    case GenTag::Add: return "add";
    case GenTag::Zero: return "zero";
    case GenTag::Coadd: return "coadd";
    case GenTag::Cozero: return "cozero";
    case GenTag::One: return "one";
    case GenTag::Coone: return "coone";
    case GenTag::Geq: return "geq";
    case GenTag::Leq: return "leq";
    case GenTag::Scalar: return "scl(" + to_string(g.value) + ")";
    case GenTag::Coscalar: return "coscl(" + to_string(g.value) + ")";
  }
  throw InternalError("unknown generator tag");
}

struct Term::Node {
  Kind kind;
  Arity arity;
  Generator gen{GenTag::Dup};
  int width{0};
  std::shared_ptr<const Node> a, b;
};

Term Term::gen(Generator g) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Gen;
  n->arity = generator_arity(g);
  n->gen = std::move(g);
  return Term(std::move(n));
}

Term Term::id(int width) {
  if (width < 0) throw TypeError("identity width must be nonnegative");
  auto n = std::make_shared<Node>();
  n->kind = Kind::Id;
  n->arity = {width, width};
  n->width = width;
  return Term(std::move(n));
}

Term Term::swap() {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Swap;
  n->arity = {2, 2};
  return Term(std::move(n));
}

Term Term::seq(Term a, Term b) {
  Arity aa = a.arity(), ab = b.arity();
  if (aa.right != ab.left)
    throw TypeError("cannot compose " + print(a) + " : " + std::to_string(aa.left) + "->" +
                    std::to_string(aa.right) + " with " + print(b) + " : " + std::to_string(ab.left) +
                    "->" + std::to_string(ab.right));
  auto n = std::make_shared<Node>();
  n->kind = Kind::Seq;
  n->arity = {aa.left, ab.right};
  n->a = a.node_;
  n->b = b.node_;
  return Term(std::move(n));
}

Term Term::par(Term a, Term b) {
  Arity aa = a.arity(), ab = b.arity();
  auto n = std::make_shared<Node>();
  n->kind = Kind::Par;
  n->arity = {aa.left + ab.left, aa.right + ab.right};
  n->a = a.node_;
  n->b = b.node_;
  return Term(std::move(n));
}

Term Term::unite(Term a, Term b) {
  Arity aa = a.arity(), ab = b.arity();
  if (!(aa == ab))
    throw TypeError("union of terms with different arities: " + print(a) + " and " + print(b));
  auto n = std::make_shared<Node>();
  n->kind = Kind::Union;
  n->arity = aa;
  n->a = a.node_;
  n->b = b.node_;
  return Term(std::move(n));
}

Term::Kind Term::kind() const { return node_->kind; }
Arity Term::arity() const { return node_->arity; }

const Generator& Term::generator() const {
  if (node_->kind != Kind::Gen) throw InternalError("generator() on a non-generator term");
  return node_->gen;
}

int Term::id_width() const {
  if (node_->kind != Kind::Id) throw InternalError("id_width() on a non-identity term");
  return node_->width;
}

Term Term::first() const {
  if (!node_->a) throw InternalError("first() on a leaf term");
  return Term(node_->a);
}

Term Term::second() const {
  if (!node_->b) throw InternalError("second() on a leaf term");
  return Term(node_->b);
}

bool Term::operator==(const Term& other) const {
  if (node_ == other.node_) return true;
  if (node_->kind != other.node_->kind) return false;
  switch (node_->kind) {
    case Kind::Gen: return node_->gen == other.node_->gen;
    case Kind::Id: return node_->width == other.node_->width;
    case Kind::Swap: return true;
    default: return first() == other.first() && second() == other.second();
  }
}

std::string print(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Gen: return generator_name(t.generator());
    case Term::Kind::Id: return "id(" + std::to_string(t.id_width()) + ")";
    case Term::Kind::Swap: return "sw";
    case Term::Kind::Seq: return "(" + print(t.first()) + " ; " + print(t.second()) + ")";
    case Term::Kind::Par: return "(" + print(t.first()) + " & " + print(t.second()) + ")";
    case Term::Kind::Union: return "(" + print(t.first()) + " | " + print(t.second()) + ")";
  }
  throw InternalError("unknown term kind");
}

namespace {

Generator dual_generator(const Generator& g) {
  switch (g.tag) {
    case GenTag::Dup: return {GenTag::Codup};
    case GenTag::Codup: return {GenTag::Dup};
    case GenTag::Del: return {GenTag::Codel};
    case GenTag::Codel: return {GenTag::Del};
    case GenTag::Add: return {GenTag::Coadd};
    case GenTag::Coadd: return {GenTag::Add};
    case GenTag::Zero: return {GenTag::Cozero};
    case GenTag::Cozero: return {GenTag::Zero};
    case GenTag::One: return {GenTag::Coone};
    case GenTag::Coone: return {GenTag::One};
    case GenTag::Geq: return {GenTag::Leq};
    case GenTag::Leq: return {GenTag::Geq};
    case GenTag::Scalar: return {GenTag::Coscalar, g.value};
    case GenTag::Coscalar: return {GenTag::Scalar, g.value};
  }
  throw InternalError("unknown generator tag");
}

}  // namespace

Term dual(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Gen: return Term::gen(dual_generator(t.generator()));
    case Term::Kind::Id: return t;
    case Term::Kind::Swap: return t;
    case Term::Kind::Seq: return Term::seq(dual(t.second()), dual(t.first()));
    case Term::Kind::Par: return Term::par(dual(t.first()), dual(t.second()));
    case Term::Kind::Union: return Term::unite(dual(t.first()), dual(t.second()));
  }
  throw InternalError("unknown term kind");
}

Term sym(int n, int m) {
  if (n < 0 || m < 0) throw TypeError("symmetry blocks must be nonnegative");
  if (n == 0) return Term::id(m);
  if (m == 0) return Term::id(n);
  if (n == 1 && m == 1) return Term::swap();
  if (n == 1) {
    // Walk the single wire across m wires, one crossing at a time.
    return Term::seq(Term::par(Term::swap(), Term::id(m - 1)),
                     Term::par(Term::id(1), sym(1, m - 1)));
  }
  return Term::seq(Term::par(Term::id(n - 1), sym(1, m)),
                   Term::par(sym(n - 1, m), Term::id(1)));
}

Term cup(int n) {
  if (n < 0) throw TypeError("cup width must be nonnegative");
  if (n == 0) return Term::id(0);
  Term cup1 = codup() >> del();
  if (n == 1) return cup1;
  // [x1, x2..xn, y1, y2..yn] -> [x1, y1, x2..xn, y2..yn], then peel a pair.
  Term shuffle = Term::par(Term::id(1), Term::par(sym(n - 1, 1), Term::id(n - 1)));
  return shuffle >> Term::par(cup1, cup(n - 1));
}

Term cap(int n) { return dual(cup(n)); }

Term permutation_term(const std::vector<int>& perm) {
  int n = static_cast<int>(perm.size());
  std::vector<bool> seen(perm.size(), false);
  for (int t : perm) {
    if (t < 0 || t >= n || seen[t]) throw InvalidPermutation("not a bijection");
    seen[t] = true;
  }
  // Selection sort with adjacent crossings; cur[pos] = input wire at pos.
  std::vector<int> cur(perm.size());
  for (int i = 0; i < n; ++i) cur[i] = i;
  Term out = Term::id(n);
  for (int target = 0; target < n; ++target) {
    int pos = target;
    while (perm[cur[pos]] != target) ++pos;
    for (; pos > target; --pos) {
      out = out >> (Term::id(pos - 1) & Term::swap() & Term::id(n - pos - 1));
      std::swap(cur[pos - 1], cur[pos]);
    }
  }
  return out;
}

}  // namespace gpla
