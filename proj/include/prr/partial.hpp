#pragma once

#include "prr/machine.hpp"
#include "prr/term.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace prr {

struct UnsupportedConstructor : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// mu

/// Least n < fuel with phi(a, n) = 1. phi : A x N -> 2.
std::optional<Nat> mu_search(const Term& phi, const Value& a, std::uint64_t fuel);

/// Evaluates phi at every n < bound and takes the minimum of the true ones.
std::optional<Nat> brute_force_min(const Term& phi, const Value& a, std::uint64_t bound);

struct MuAgreement {
  std::size_t cases = 0, agree = 0, both_undefined = 0;
  std::vector<std::string> disagreements;
  bool ok() const { return cases == agree; }
};
MuAgreement mu_agreement_check(const Term& phi, const std::vector<Value>& samples,
                               std::uint64_t fuel);

// ---------------------------------------------------------------------------
// Partial maps as a domain of definition over A x N with a value map

/// f : A -> B presented by a domain D = {A x N | zeta} and a value map on it.
/// f(a) is defined iff zeta(a, n) for some n, and then equals hat at the least
/// such n. hat_carrier is the value map extended to all of A x N.
struct PartialMap {
  Obj base, target;
  Obj domain_obj;
  Term hat_carrier;

  const Term& zeta() const { return domain_obj.chi(); }
  /// D -> A, the enumeration l o incl.
  Term d() const;
  /// D -> B
  Term hat() const;
};

PartialMap make_partial(Obj base, Obj target, Term zeta, Term hat_carrier);
/// Defined everywhere at witness 0.
PartialMap wrap_total(const Term& f);

struct ParResult {
  bool defined = false;
  Value value;
  Nat witness;
};

/// "Undefined" only means no witness below fuel.
ParResult par_apply(const PartialMap& f, const Value& a, std::uint64_t fuel);
/// g after f; the composite witness n splits as cantor_unpair(n) = (n1, n2).
PartialMap par_compose(const PartialMap& g, const PartialMap& f);

/// g(b) = d(mu{ n | (a,k) = cont(n) in D, hat(a,k) = b }).
PartialMap middle_inverse_partial(const PartialMap& f);

struct PartialLaw {
  std::size_t sampled = 0, defined = 0, holds = 0;
  std::vector<std::string> failures;
  bool ok() const { return holds == defined; }
};
/// Checks f g f = f on arguments where f is defined, applying the three
/// stages one after another.
PartialLaw partial_law_check(const PartialMap& f, const PartialMap& g,
                             const std::vector<Value>& args, std::uint64_t fuel);

/// `(partial A B zeta hat)`
PartialMap parse_partial(const std::string& src);

// ---------------------------------------------------------------------------
// Middle inverses of total maps

enum class InverseKind {
  Section,     // f f' = id
  Retraction,  // f' f = id
  Both,
  Middle,      // only f f' f = f
  Unverified,  // the composition rule's side condition failed
  Search,      // bounded preimage search; the law holds where a preimage lies within the bound
};
const char* inverse_kind_name(InverseKind k);

struct StructuralInverse {
  Term term;
  InverseKind kind;
  /// Rule applied at the root.
  std::string rule;
};

/// Case analysis on the constructor tree. Where the rules cannot certify the
/// result (Unverified, or a subterm through 2) the root falls back to
/// search_middle_inverse. Throws UnsupportedConstructor when the map itself
/// leaves the fundamental objects or uses Incl, Restrict or reflection.
StructuralInverse structural_middle_inverse(const Term& t);
/// The rules alone, without the fallback.
StructuralInverse rule_middle_inverse(const Term& t);
/// A PR term B -> A: scan cont_A(0), cont_A(1), ... up to a bound computed
/// from b and return the first preimage of b, else the point 0 of A. The
/// bound is U_A(cantor_pair(s, s) + 1) with s the sum of b's components,
/// where U_A(m) bounds the count index of every member of A whose
/// components are all at most m.
Term search_middle_inverse(const Term& f);

struct TotalInverse {
  Term f;
  Value a0;
  std::uint64_t fuel;
  struct Result {
    Value value;
    bool found;
  };
  /// cont_A(mu{ n | f(cont_A(n)) = b }), or a0 when nothing is found.
  Result operator()(const Value& b) const;
};
TotalInverse middle_inverse_total(const Term& f, const Value& a0, std::uint64_t fuel);

// ---------------------------------------------------------------------------
// Complexity-controlled iteration

struct CCIInstance {
  Obj space;
  Term c;  // space -> N, N x (N x ...), or X
  Term p;  // space -> space
};

CCIInstance make_cci(Obj space, Term c, Term p);
CCIInstance parse_cci_instance(const std::string& src);

struct CciOutcome {
  Verdict verdict = Verdict::Done;
  Value value;
  Nat index;
  std::optional<std::uint64_t> violation_step;
  OrdPoly before, after;
  std::string message;
  bool done() const { return verdict == Verdict::Done; }
};

/// Iterates p while c > 0, checking (Desc) each step and (Stat) at zero.
CciOutcome cci_run(const CCIInstance& inst, const Value& a, std::uint64_t fuel);
/// (a, termination index)
CciOutcome d_minus(const CCIInstance& inst, const Value& a, std::uint64_t fuel);

struct CciAudit {
  std::size_t checked = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};
/// One-step (Desc)/(Stat) test on each sample.
CciAudit cci_audit(const CCIInstance& inst, const std::vector<Value>& samples);

/// Euclid on N x N: c(x, y) = y, p(x, y) = y = 0 ? (x, y) : (y, x mod y).
CCIInstance gcd_cci();
/// gcd as a partial map: zeta((x,y), n) says p^n(x,y) has y = 0.
PartialMap gcd_partial();

/// First b in cont_B order with phi(a, b); b0 is the point of B.
struct ExistsResult {
  bool found = false;
  Value value;
  Nat index;
};
ExistsResult define_by_exists(const Term& phi, const Value& a, const Value& b0,
                              std::uint64_t fuel);

}  // namespace prr
