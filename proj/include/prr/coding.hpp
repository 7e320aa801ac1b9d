#pragma once

#include "prr/nat.hpp"
#include "prr/term.hpp"

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace prr {

struct IllTyped : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotAPredicateCode : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Constructor tags shared by object codes and term codes.
enum class CodeTag : unsigned {
  Unit, Nat, Two, Univ, Prod, Abstr,  // objects
  // terms follow in TermKind order
  FirstTerm,
};

constexpr unsigned tag_of(ObjKind k) { return static_cast<unsigned>(k); }
constexpr unsigned tag_of(TermKind k) {
  return static_cast<unsigned>(CodeTag::FirstTerm) + static_cast<unsigned>(k);
}
constexpr unsigned kTagCount = tag_of(TermKind::Cast) + 1;

struct CodeNode;

/// An untyped code tree mirroring the term constructors. Object parameters
/// are child codes too (Id A is `id` with one object child). A Code need not
/// typecheck; `decode` is where typing happens.
class Code {
 public:
  Code() = default;
  Code(unsigned tag, std::vector<Code> kids, std::optional<Value> literal = std::nullopt);

  unsigned tag() const;
  const std::vector<Code>& kids() const;
  const std::optional<Value>& literal() const;
  bool is_object() const { return tag() < static_cast<unsigned>(CodeTag::FirstTerm); }
  /// DMinus / CDot / EDot / HashC / Embed / Cast at the root.
  bool is_reflected() const;

  bool operator==(const Code& other) const;

 private:
  std::shared_ptr<const CodeNode> node_;
};

/// Tag name as used in the surface syntax ("comp", "dminus", "x", ...).
std::string tag_name(unsigned tag);

Code quote(const Term& t);
Code quote_obj(const Obj& o);
/// Typechecks; throws IllTyped on a malformed or ill-typed tree.
Term decode(const Code& c);
Obj decode_obj(const Code& c);

/// Injective numbering of codes (tag paired with the list of child numbers).
Nat num(const Code& c);
/// Inverse of num on its image; throws IllTyped for numbers that are not
/// well-formed code trees (unknown tag, wrong arity).
Code code_from_num(const Nat& n);

/// Injective (in fact bijective) numbering of values.
Nat value_num(const Value& v);
Value value_from_num(const Nat& n);

/// Codes as values of X: (tag, [kid, ...]) with lists built from pairs and ().
Value code_to_value(const Code& c);
Code code_from_value(const Value& v);
Value term_to_value(const Term& t);
Term term_from_value(const Value& v);

/// Surface rendering of a raw code, well-typed or not.
std::string print_code(const Code& c);

// ---------------------------------------------------------------------------
// Counts

/// Retractive count of an object through the point a0: every value of `o` is
/// cont(o, a0, n) for some n.
Value cont(const Obj& o, const Value& a0, const Nat& n);
/// The same count as a term N -> o (point: the zero of o).
Term cont_term(const Obj& o);

/// Bijective enumeration of all objects.
Obj enumerate_obj(const Nat& n);
Nat rank_obj(const Obj& o);
/// Bijective enumeration of the terms of type dom -> cod (ConstVal excluded).
Term enumerate_slot(const Obj& dom, const Obj& cod, const Nat& n);
Nat rank_in_slot(const Term& t);

/// The predicate count #: N -> codes of N -> 2.
Code pred_count_hash(const Nat& n);
Term pred_count_hash_term(const Nat& n);
/// #^-1; throws NotAPredicateCode unless c decodes to a ConstVal-free N -> 2.
Nat pred_count_inverse(const Code& c);

}  // namespace prr
