#pragma once

#include "prr/nat.hpp"
#include "prr/ordinal.hpp"

#include <cstddef>
#include <initializer_list>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace prr {

// ---------------------------------------------------------------------------
// Values

/// A value of some object: a tree of naturals. Values of an abstraction
/// {A | chi} are just values of A that satisfy chi.
class Value {
 public:
  enum class Kind { Unit, Nat, Pair };

  Value() = default;  // the unit value
  static Value unit() { return Value{}; }
  static Value nat(Nat n);
  static Value pair(Value l, Value r);

  Kind kind() const { return static_cast<Kind>(rep_.index()); }
  bool is_unit() const { return kind() == Kind::Unit; }
  bool is_nat() const { return kind() == Kind::Nat; }
  bool is_pair() const { return kind() == Kind::Pair; }

  // Accessors throw EvalError on a shape mismatch.
  const Nat& as_nat() const;
  const Value& left() const;
  const Value& right() const;

  bool operator==(const Value& other) const;

  /// "()", "17", "(v,w)"
  std::string render() const;

  /// Address of the shared pair node, or null for unit/natural values.
  const void* identity() const;

 private:
  using PairRep = std::shared_ptr<const std::pair<Value, Value>>;
  std::variant<std::monostate, Nat, PairRep> rep_;
};

/// Parses the literal syntax used by `--arg`: naturals, "()" and "(v,w)".
Value parse_value(const std::string& text);

// ---------------------------------------------------------------------------
// Errors

struct TypeMismatch : std::runtime_error {
  TypeMismatch(std::string path, std::string expected, std::string found);
  std::string path, expected, found;
};

struct EvalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Objects and terms

struct ObjNode;
struct TermNode;
class Term;

enum class ObjKind { Unit, Nat, Two, Univ, Prod, Abstr };

/// An object of the term language. `Two` is {N | < 2}; `Univ` is the space X
/// of all values, used only by the reflection constants.
class Obj {
 public:
  Obj() = default;

  static Obj unit();
  static Obj nat();
  static Obj two();
  static Obj univ();
  static Obj prod(Obj a, Obj b);
  /// {carrier | chi}; chi must have type carrier -> 2.
  static Obj abstr(Obj carrier, Term chi);

  ObjKind kind() const;
  const Obj& left() const;     // Prod
  const Obj& right() const;    // Prod
  const Obj& carrier() const;  // Abstr (Two: N)
  const Term& chi() const;     // Abstr (Two: the built-in "< 2" predicate)
  bool is_subobject() const { return kind() == ObjKind::Abstr || kind() == ObjKind::Two; }
  /// No Two, X or abstraction anywhere inside.
  bool is_fundamental() const;

  std::size_t hash() const;
  bool operator==(const Obj& other) const;
  bool same(const Obj& other) const { return node_ == other.node_; }
  const ObjNode* id() const { return node_.get(); }
  explicit operator bool() const { return node_ != nullptr; }

 private:
  explicit Obj(std::shared_ptr<const ObjNode> n) : node_(std::move(n)) {}
  std::shared_ptr<const ObjNode> node_;
  friend struct ObjNode;
};

enum class TermKind {
  Id, Bang, ZeroC, Succ, ProjL, ProjR, Pair, Comp, Cyl, Iter,
  TrueC, FalseC, NotC, EqNat, Incl, Restrict, ConstVal,
  // reflection constants of the dotted system
  DMinus, CDot, EDot, HashC, Embed, Cast,
};

const char* kind_name(TermKind k);

/// A well-typed map term. Construction typechecks; an ill-typed Term cannot
/// be built (the smart constructors below throw TypeMismatch).
class Term {
 public:
  Term() = default;

  TermKind kind() const;
  const Obj& dom() const;
  const Obj& cod() const;
  /// Object parameters (Id A, ProjL A B, Incl S, ...).
  const std::vector<Obj>& objs() const;
  /// Sub-terms in constructor order: Pair(f,g) -> {f,g}, Comp(g,f) -> {g,f},
  /// Cyl(C,g) -> {g}, Iter(g) -> {g}, Restrict(f,S) -> {f}, DMinus(c,p) -> {c,p}.
  const std::vector<Term>& kids() const;
  const Term& kid(std::size_t i) const { return kids().at(i); }
  /// ConstVal literal.
  const Value& literal() const;

  /// Constructor-tree height (objects do not count).
  std::size_t depth() const;
  /// The complexity clause of the code evaluator, cached at construction.
  const OrdPoly& complexity() const;
  /// Contains a reflection constant or ConstVal somewhere.
  bool is_dotted() const;
  bool has_constval() const;

  std::size_t hash() const;
  bool operator==(const Term& other) const;
  bool same(const Term& other) const { return node_ == other.node_; }
  const TermNode* id() const { return node_.get(); }
  explicit operator bool() const { return node_ != nullptr; }

 private:
  explicit Term(std::shared_ptr<const TermNode> n) : node_(std::move(n)) {}
  std::shared_ptr<const TermNode> node_;
  friend struct TermNode;
};

/// Smart constructors. Each typechecks its arguments.
namespace mk {
Term id(Obj a);
Term bang(Obj a);
Term zero(Obj a);
Term succ();
Term projl(Obj a, Obj b);
Term projr(Obj a, Obj b);
Term pair(Term f, Term g);
Term comp(Term g, Term f);
/// comp(fn, ..., f1): f1 applied first.
Term chain(std::initializer_list<Term> fs);
Term cyl(Obj c, Term g);
Term iter(Term g);
Term tt();
Term ff();
Term not_();
Term eqnat();
Term incl(Obj sub);
Term restrict(Term f, Obj sub);
Term constval(Obj a, Value v);
Term dminus(Term c, Term p);
Term cdot();
Term edot();
Term hash();
Term embed(Obj a);
Term cast(Obj a);
}  // namespace mk

/// Builds a term from raw parts, typechecking it. Used by decoders.
Term make_term_checked(TermKind k, std::vector<Obj> objs, std::vector<Term> kids,
                       Value literal = Value{});

/// (dom, cod) of a term; terms are typed at construction so this cannot fail.
std::pair<Obj, Obj> typecheck(const Term& t);
std::size_t depth(const Term& t);

/// Ordinal-shaped objects: N, N x O, or X. Complexity terms map into these.
bool is_ordinal_object(const Obj& o);
/// Reads a value of an ordinal-shaped object as an ordinal:
/// n -> [n], (c0, rest) -> c0 + w * rest.
OrdPoly value_to_ord(const Value& v);
/// Inverse for X: [] -> 0, [c0,...,ck] -> (c0, (..., ck)).
Value ord_to_value(const OrdPoly& p);

/// Componentwise zero of an object (for subobjects: the carrier's zero).
Value zero_value(const Obj& o);
/// True iff v is a value of o (subobject predicates are evaluated).
bool value_check(const Obj& o, const Value& v);

// ---------------------------------------------------------------------------
// Standard library of derived maps, all built from the primitives above.

/// Named entries: pred, add, mul, monus, is_zero, leq, eq, and, or, tri,
/// cantor_pair, cantor_unpair, mod, lt2, cond (at N), swap, double.
const std::map<std::string, Term>& stdlib();
const Term& stdlib_entry(const std::string& name);
/// Definition by cases: 2 x (A x A) -> A, true picks the left branch.
Term stdlib_cond(const Obj& a);
/// 2 x 2 -> 2
Term stdlib_and();
/// Componentwise equality A x A -> 2 for fundamental objects and subobjects.
Term stdlib_equal(const Obj& a);
/// The predicate "< 2" on N; the chi of Two.
const Term& two_chi();

// ---------------------------------------------------------------------------
// Sampled extensional equality

/// Values of `o` in canonical count order: cont_o(0), cont_o(1), ...
struct EqSample {
  bool agree = true;
  std::optional<Value> witness;
};

EqSample eq_sample(const Term& f, const Term& g, std::size_t bound);

}  // namespace prr

template <>
struct std::hash<prr::Obj> {
  std::size_t operator()(const prr::Obj& o) const { return o.hash(); }
};
template <>
struct std::hash<prr::Term> {
  std::size_t operator()(const prr::Term& t) const { return t.hash(); }
};
