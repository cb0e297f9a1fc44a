#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pmv/ints.hpp"

namespace pmv {

// An element of a structural group: the flattened coordinate vector. Its
// interpretation (tuple-tree shape, group law, order) comes from the
// GroupExpr it is paired with.
using GroupElement = std::vector<Int>;

enum class Ordering { Less, Equal, Greater, Incomparable };

class ShapeError : public std::invalid_argument {
 public:
  explicit ShapeError(const std::string& what) : std::invalid_argument(what) {}
};

/// Structural description of a lattice-ordered group built from Z, the
/// trivial group, lexicographic products, direct products, and the linearly
/// ordered integer Heisenberg group (Z^3 with twisted third coordinate).
class GroupExpr {
 public:
  enum class Kind { Trivial, Z, Lex, Direct, Heis };

  static GroupExpr trivial() { return GroupExpr(Kind::Trivial, {}); }
  static GroupExpr z() { return GroupExpr(Kind::Z, {}); }
  static GroupExpr heis() { return GroupExpr(Kind::Heis, {}); }
  static GroupExpr lex(GroupExpr head, GroupExpr tail);
  // direct({}) normalizes to Trivial, direct({g}) to g.
  static GroupExpr direct(std::vector<GroupExpr> factors);

  Kind kind() const { return kind_; }
  bool is_trivial() const { return kind_ == Kind::Trivial; }
  const GroupExpr& head() const { return sub_[0]; }
  const GroupExpr& tail() const { return sub_[1]; }
  const std::vector<GroupExpr>& factors() const { return sub_; }
  int arity() const { return arity_; }

  bool operator==(const GroupExpr& other) const;
  bool operator!=(const GroupExpr& other) const { return !(*this == other); }

 private:
  GroupExpr(Kind kind, std::vector<GroupExpr> sub);

  Kind kind_;
  std::vector<GroupExpr> sub_;  // Lex: {head, tail}; Direct: factors
  int arity_ = 0;
};

struct UnitalGroup {
  GroupExpr expr;
  GroupElement unit;
};

// -- shape & validity ---------------------------------------------------

// A GroupExpr denotes an l-group iff every Lex node has a linearly ordered
// head or a trivial tail.
bool is_wellformed(const GroupExpr& g);
void require_wellformed(const GroupExpr& g);

bool is_linear(const GroupExpr& g);
bool is_abelian(const GroupExpr& g);

GroupElement g_zero(const GroupExpr& g);
bool shape_matches(const GroupExpr& g, const GroupElement& x);
void require_shape(const GroupExpr& g, const GroupElement& x);

// Removes trivial lex sides and collapses degenerate direct products.
// Order-isomorphic to the input; provided as an explicit operation, never an
// implicit coercion.
GroupExpr flatten(const GroupExpr& g);

// Maximal lex-factor decomposition: Lex nodes are flattened by
// associativity; a non-Lex expression is its own single factor.
std::vector<GroupExpr> lex_factors(const GroupExpr& g);

// Cut the flattened coordinates at position `depth`, reassociating lex
// factors as needed. Cuts inside a Heis factor are allowed at offsets 1 and
// 2 (first-coordinate and first-two-coordinate projections of Heis are group
// homomorphisms; the kernels carry lex orders Z lex Z and Z). Returns
// nothing when the cut does not induce a group quotient.
struct LexSplit {
  GroupExpr head;
  GroupExpr tail;
  bool twisted = false;  // cut falls inside a Heis factor
};
std::optional<LexSplit> split_at(const GroupExpr& g, int depth);

// -- arithmetic and order ------------------------------------------------

GroupElement g_add(const GroupExpr& g, const GroupElement& x, const GroupElement& y);
GroupElement g_neg(const GroupExpr& g, const GroupElement& x);
// x + (-y); in a non-abelian group this is the right difference.
GroupElement g_sub(const GroupExpr& g, const GroupElement& x, const GroupElement& y);

Ordering g_compare(const GroupExpr& g, const GroupElement& x, const GroupElement& y);
bool g_leq(const GroupExpr& g, const GroupElement& x, const GroupElement& y);
bool g_lt(const GroupExpr& g, const GroupElement& x, const GroupElement& y);

GroupElement g_meet(const GroupExpr& g, const GroupElement& x, const GroupElement& y);
GroupElement g_join(const GroupExpr& g, const GroupElement& x, const GroupElement& y);

// Structural strong-unit test; agrees with the windowed brute-force
// definition G = union_n [-nu, nu] (checked in the test suite).
bool is_strong_unit(const GroupExpr& g, const GroupElement& u);

bool in_center(const GroupExpr& g, const GroupElement& x);

// -- windows --------------------------------------------------------------

// All elements with every coordinate in [-bound, bound], in lexicographic
// order of the flattened coordinate vector.
std::vector<GroupElement> enumerate_box(const GroupExpr& g, int bound);

// Box elements restricted to the order interval [lo, hi].
std::vector<GroupElement> enumerate_window(const GroupExpr& g, const GroupElement& lo,
                                           const GroupElement& hi, int bound);

// -- formatting -----------------------------------------------------------

// "Z lex Z", "Z x Z", "Heis", ... (re-parseable by the spec grammar).
std::string to_string(const GroupExpr& g);
// Flat tuple form: "(1,0,0)"; a Z scalar prints bare: "2".
std::string to_string(const GroupElement& x);

}  // namespace pmv
