#include "prr/partial.hpp"

#include "prr/coding.hpp"
#include "prr/surface.hpp"

namespace prr {

namespace {

bool is_true(const Value& v) { return v.as_nat() == 1; }

Value at(const Value& a, const Nat& n) { return Value::pair(a, Value::nat(n)); }

}  // namespace

// ---------------------------------------------------------------------------
// mu

std::optional<Nat> mu_search(const Term& phi, const Value& a, std::uint64_t fuel) {
  for (std::uint64_t n = 0; n < fuel; ++n)
    if (is_true(eval_structural(phi, at(a, n)))) return Nat(n);
  return std::nullopt;
}

std::optional<Nat> brute_force_min(const Term& phi, const Value& a, std::uint64_t bound) {
  std::vector<bool> hits(bound);
  for (std::uint64_t n = 0; n < bound; ++n) hits[n] = is_true(eval_structural(phi, at(a, n)));
  std::optional<Nat> best;
  for (std::uint64_t n = bound; n-- > 0;)
    if (hits[n]) best = Nat(n);
  return best;
}

MuAgreement mu_agreement_check(const Term& phi, const std::vector<Value>& samples,
                               std::uint64_t fuel) {
  MuAgreement r;
  for (const auto& a : samples) {
    ++r.cases;
    auto m = mu_search(phi, a, fuel);
    auto b = brute_force_min(phi, a, fuel);
    if (m == b) {
      ++r.agree;
      if (!m) ++r.both_undefined;
    } else {
      r.disagreements.push_back(a.render() + ": mu " + (m ? m->str() : "none") + ", scan " +
                                (b ? b->str() : "none"));
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Partial maps

Term PartialMap::d() const {
  return mk::comp(mk::projl(base, Obj::nat()), mk::incl(domain_obj));
}

Term PartialMap::hat() const { return mk::comp(hat_carrier, mk::incl(domain_obj)); }

PartialMap make_partial(Obj base, Obj target, Term zeta, Term hat_carrier) {
  Obj an = Obj::prod(base, Obj::nat());
  if (!(hat_carrier.dom() == an) || !(hat_carrier.cod() == target))
    throw TypeMismatch("partial value map", print_obj(an) + " -> " + print_obj(target),
                       print_obj(hat_carrier.dom()) + " -> " + print_obj(hat_carrier.cod()));
  Obj dom = Obj::abstr(an, std::move(zeta));
  return PartialMap{std::move(base), std::move(target), std::move(dom), std::move(hat_carrier)};
}

PartialMap wrap_total(const Term& f) {
  using namespace mk;
  const Obj& a = f.dom();
  const Obj N = Obj::nat();
  return make_partial(a, f.cod(), comp(stdlib_entry("is_zero"), projr(a, N)), comp(f, projl(a, N)));
}

ParResult par_apply(const PartialMap& f, const Value& a, std::uint64_t fuel) {
  ParResult r;
  auto n = mu_search(f.zeta(), a, fuel);
  if (!n) return r;
  r.defined = true;
  r.witness = *n;
  r.value = eval_structural(f.hat_carrier, at(a, *n));
  return r;
}

PartialMap par_compose(const PartialMap& g, const PartialMap& f) {
  using namespace mk;
  if (!(f.target == g.base))
    throw TypeMismatch("par_compose", print_obj(g.base), print_obj(f.target));
  const Obj N = Obj::nat();
  const Obj& a = f.base;
  Term split = comp(stdlib_entry("cantor_unpair"), projr(a, N));
  Term n1 = comp(projl(N, N), split);
  Term n2 = comp(projr(N, N), split);
  Term first = pair(projl(a, N), n1);
  Term fa = comp(f.hat_carrier, first);
  Term second = pair(fa, n2);
  Term zeta = comp(stdlib_and(), pair(comp(f.zeta(), first), comp(g.zeta(), second)));
  return make_partial(a, g.target, zeta, comp(g.hat_carrier, second));
}

PartialMap middle_inverse_partial(const PartialMap& f) {
  using namespace mk;
  const Obj N = Obj::nat();
  const Obj& a = f.base;
  const Obj& b = f.target;
  Term an = comp(cont_term(Obj::prod(a, N)), projr(b, N));
  Term hits = comp(stdlib_equal(b), pair(comp(f.hat_carrier, an), projl(b, N)));
  Term zeta = comp(stdlib_and(), pair(comp(f.zeta(), an), hits));
  return make_partial(b, a, zeta, comp(projl(a, N), an));
}

PartialLaw partial_law_check(const PartialMap& f, const PartialMap& g,
                             const std::vector<Value>& args, std::uint64_t fuel) {
  PartialLaw law;
  for (const auto& a : args) {
    ++law.sampled;
    ParResult fa = par_apply(f, a, fuel);
    if (!fa.defined) continue;
    ++law.defined;
    ParResult ga = par_apply(g, fa.value, fuel);
    if (!ga.defined) {
      law.failures.push_back(a.render() + ": g undefined at " + fa.value.render());
      continue;
    }
    ParResult fga = par_apply(f, ga.value, fuel);
    if (fga.defined && fga.value == fa.value) {
      ++law.holds;
    } else {
      law.failures.push_back(a.render() + ": f(a) = " + fa.value.render() + ", f(g(f(a))) " +
                             (fga.defined ? "= " + fga.value.render() : "undefined"));
    }
  }
  return law;
}

PartialMap parse_partial(const std::string& src) {
  Reader r(src);
  r.open("partial");
  Obj a = r.obj();
  Obj b = r.obj();
  Term zeta = r.term();
  Term hat = r.term();
  r.close();
  if (!r.at_end()) r.fail("end of input");
  return make_partial(std::move(a), std::move(b), std::move(zeta), std::move(hat));
}

// ---------------------------------------------------------------------------
// Structural middle inverse

const char* inverse_kind_name(InverseKind k) {
  switch (k) {
    case InverseKind::Section: return "section";
    case InverseKind::Retraction: return "retraction";
    case InverseKind::Both: return "inverse";
    case InverseKind::Middle: return "middle";
    case InverseKind::Unverified: return "unverified";
    case InverseKind::Search: return "search";
  }
  return "?";
}

namespace {

bool sec(InverseKind k) { return k == InverseKind::Section || k == InverseKind::Both; }
bool ret(InverseKind k) { return k == InverseKind::Retraction || k == InverseKind::Both; }

void require_fundamental(const Term& t) {
  switch (t.kind()) {
    case TermKind::TrueC:
    case TermKind::FalseC:
    case TermKind::NotC:
    case TermKind::EqNat:
    case TermKind::Incl:
    case TermKind::Restrict:
    case TermKind::ConstVal:
    case TermKind::DMinus:
    case TermKind::CDot:
    case TermKind::EDot:
    case TermKind::HashC:
    case TermKind::Embed:
    case TermKind::Cast:
      throw UnsupportedConstructor(std::string("no structural middle inverse for ") +
                                   kind_name(t.kind()));
    default:
      break;
  }
  if (!t.dom().is_fundamental() || !t.cod().is_fundamental())
    throw UnsupportedConstructor("map " + print_obj(t.dom()) + " -> " + print_obj(t.cod()) +
                                 " leaves the fundamental objects");
}

}  // namespace

StructuralInverse rule_middle_inverse(const Term& t) {
  using namespace mk;
  using K = InverseKind;
  require_fundamental(t);
  const Obj N = Obj::nat();
  switch (t.kind()) {
    case TermKind::Id:
      return {t, K::Both, "id"};
    case TermKind::Succ:
      return {stdlib_entry("pred"), K::Retraction, "succ"};
    case TermKind::Bang:
      return {zero(t.objs()[0]), K::Section, "bang"};
    case TermKind::ZeroC:
      return {bang(t.objs()[0]), K::Retraction, "zero"};
    case TermKind::ProjL: {
      const Obj& a = t.objs()[0];
      const Obj& b = t.objs()[1];
      return {pair(id(a), comp(zero(b), bang(a))), K::Section, "projl"};
    }
    case TermKind::ProjR: {
      const Obj& a = t.objs()[0];
      const Obj& b = t.objs()[1];
      return {pair(comp(zero(a), bang(b)), id(b)), K::Section, "projr"};
    }
    case TermKind::Iter: {
      // (id, 0 o !) : A -> A x N is a section of g^S.
      const Obj& a = t.cod();
      return {pair(id(a), comp(zero(N), bang(a))), K::Section, "iter"};
    }
    case TermKind::Cyl: {
      auto g = rule_middle_inverse(t.kid(0));
      return {cyl(t.objs()[0], g.term), g.kind, "cyl"};
    }
    case TermKind::Pair: {
      const Obj& b1 = t.kid(0).cod();
      const Obj& b2 = t.kid(1).cod();
      auto f1 = rule_middle_inverse(t.kid(0));
      auto f2 = rule_middle_inverse(t.kid(1));
      // (f1, f2) f1' l (f1, f2) = (f1, f2 f1' f1), which is (f1, f2) when f1' f1 = id.
      if (ret(f1.kind)) return {comp(f1.term, projl(b1, b2)), K::Retraction, "pair/left"};
      if (ret(f2.kind)) return {comp(f2.term, projr(b1, b2)), K::Retraction, "pair/right"};
      return {comp(f1.term, projl(b1, b2)), K::Unverified, "pair/left"};
    }
    case TermKind::Comp: {
      // (h g)' = g' h'
      auto h = rule_middle_inverse(t.kid(0));
      auto g = rule_middle_inverse(t.kid(1));
      Term inv = comp(g.term, h.term);
      K kind = K::Unverified;
      if (sec(g.kind) && sec(h.kind)) {
        kind = ret(g.kind) && ret(h.kind) ? K::Both : K::Section;
      } else if (ret(g.kind) && ret(h.kind)) {
        kind = K::Retraction;
      } else if (sec(g.kind) && h.kind != K::Unverified) {
        kind = K::Middle;  // h g g' h' h g = h h' h g
      } else if (ret(h.kind) && g.kind != K::Unverified) {
        kind = K::Middle;  // h g g' h' h g = h g g' g
      }
      return {inv, kind, "comp"};
    }
    default:
      break;
  }
  throw UnsupportedConstructor(std::string("no structural middle inverse for ") +
                               kind_name(t.kind()));
}

namespace {

/// Sum of the natural components, B -> N.
Term component_sum(const Obj& b) {
  using namespace mk;
  switch (b.kind()) {
    case ObjKind::Nat:
      return id(b);
    case ObjKind::Prod:
      return comp(stdlib_entry("add"), pair(comp(component_sum(b.left()), projl(b.left(), b.right())),
                                            comp(component_sum(b.right()), projr(b.left(), b.right()))));
    default:
      return comp(zero(Obj::nat()), bang(b));
  }
}

/// N -> N, monotone, with cont index of x <= U_A(m) whenever every component of x is <= m.
Term index_bound(const Obj& a) {
  using namespace mk;
  const Obj N = Obj::nat();
  switch (a.kind()) {
    case ObjKind::Nat:
      return id(N);
    case ObjKind::Prod:
      return comp(stdlib_entry("cantor_pair"), pair(index_bound(a.left()), index_bound(a.right())));
    default:
      return comp(zero(N), bang(N));
  }
}

/// Does the term need anything beyond 1, N, x and the predicate plumbing
/// through 2?
bool leaves_fundamental(const Term& t) {
  switch (t.kind()) {
    case TermKind::Incl:
    case TermKind::Restrict:
      if (t.objs()[0].kind() != ObjKind::Two) return true;
      break;
    case TermKind::ConstVal:
    case TermKind::DMinus:
    case TermKind::CDot:
    case TermKind::EDot:
    case TermKind::HashC:
    case TermKind::Embed:
    case TermKind::Cast:
      return true;
    default:
      break;
  }
  for (const auto& o : t.objs())
    if (o.kind() == ObjKind::Abstr || o.kind() == ObjKind::Univ) return true;
  for (const auto& k : t.kids())
    if (leaves_fundamental(k)) return true;
  return false;
}

}  // namespace

Term search_middle_inverse(const Term& f) {
  using namespace mk;
  const Obj& A = f.dom();
  const Obj& B = f.cod();
  const Obj N = Obj::nat();
  const Obj T = Obj::two();
  const Obj FA = Obj::prod(T, A);      // (found, best)
  const Obj S = Obj::prod(FA, N);      // ((found, best), n)
  const Obj BS = Obj::prod(B, S);      // b rides along unchanged

  // Projections out of B x S.
  Term b_of = projl(B, S);
  Term s_of = projr(B, S);
  Term fa_of = comp(projl(FA, N), s_of);
  Term found_of = comp(projl(T, A), fa_of);
  Term n_of = comp(projr(FA, N), s_of);

  // Unfound: candidate = cont_A(n); hit when f(candidate) = b.
  Term cand = comp(cont_term(A), n_of);
  Term hit = comp(stdlib_equal(B), pair(comp(f, cand), b_of));
  Term on_hit = pair(pair(comp(tt(), bang(BS)), cand), n_of);
  Term on_miss = pair(fa_of, comp(succ(), n_of));
  Term search = comp(stdlib_cond(S), pair(hit, pair(on_hit, on_miss)));
  // Once found the state is a fixed point.
  Term core = comp(stdlib_cond(S), pair(found_of, pair(s_of, search)));
  Term step = pair(b_of, core);

  Term init = pair(id(B), comp(pair(pair(ff(), zero(A)), zero(N)), bang(B)));
  Term sum = component_sum(B);
  Term bound = chain({succ(), index_bound(A), succ(), stdlib_entry("cantor_pair"), pair(sum, sum)});
  Term best = chain({projr(T, A), projl(FA, N), projr(B, S)});
  return chain({best, iter(step), pair(init, bound)});
}

StructuralInverse structural_middle_inverse(const Term& t) {
  if (!t.dom().is_fundamental() || !t.cod().is_fundamental())
    throw UnsupportedConstructor("map " + print_obj(t.dom()) + " -> " + print_obj(t.cod()) +
                                 " leaves the fundamental objects");
  if (leaves_fundamental(t))
    throw UnsupportedConstructor("map uses user abstractions, reflection or literal constructors");
  try {
    StructuralInverse r = rule_middle_inverse(t);
    if (r.kind != InverseKind::Unverified) return r;
  } catch (const UnsupportedConstructor&) {
    // a subterm passes through 2; only the root has to stay fundamental
  }
  return {search_middle_inverse(t), InverseKind::Search, "search"};
}

TotalInverse::Result TotalInverse::operator()(const Value& b) const {
  const Obj& a = f.dom();
  for (std::uint64_t n = 0; n < fuel; ++n) {
    Value x = cont(a, a0, n);
    if (eval_structural(f, x) == b) return {x, true};
  }
  return {a0, false};
}

TotalInverse middle_inverse_total(const Term& f, const Value& a0, std::uint64_t fuel) {
  if (!value_check(f.dom(), a0))
    throw TypeMismatch("middle_inverse_total", "a point of " + print_obj(f.dom()), a0.render());
  return TotalInverse{f, a0, fuel};
}

// ---------------------------------------------------------------------------
// CCI

CCIInstance make_cci(Obj space, Term c, Term p) {
  if (!(c.dom() == space)) throw TypeMismatch("cci complexity", print_obj(space), print_obj(c.dom()));
  if (!is_ordinal_object(c.cod()))
    throw TypeMismatch("cci complexity", "N, N x (N x ...), or X", print_obj(c.cod()));
  if (!(p.dom() == space) || !(p.cod() == space))
    throw TypeMismatch("cci predecessor", print_obj(space) + " -> " + print_obj(space),
                       print_obj(p.dom()) + " -> " + print_obj(p.cod()));
  return CCIInstance{std::move(space), std::move(c), std::move(p)};
}

CCIInstance parse_cci_instance(const std::string& src) {
  CciSource s = parse_cci(src);
  return make_cci(std::move(s.space), std::move(s.c), std::move(s.p));
}

CciOutcome cci_run(const CCIInstance& inst, const Value& a, std::uint64_t fuel) {
  CciOutcome o;
  Value cur = a;
  std::uint64_t n = 0;
  try {
    OrdPoly c = value_to_ord(eval_structural(inst.c, cur));
    while (!c.is_zero()) {
      if (n >= fuel) {
        o.verdict = Verdict::FuelExhausted;
        o.message = "no zero complexity within " + std::to_string(fuel) + " steps";
        o.index = n;
        o.value = cur;
        return o;
      }
      Value next = eval_structural(inst.p, cur);
      OrdPoly c2 = value_to_ord(eval_structural(inst.c, next));
      if (!(c2 < c)) {
        o.verdict = Verdict::DescentViolation;
        o.violation_step = n;
        o.before = c;
        o.after = c2;
        o.message = "descent fails at step " + std::to_string(n) + " from " + cur.render() + ": " +
                    c.bracket() + " -> " + c2.bracket();
        o.value = cur;
        o.index = n;
        return o;
      }
      cur = std::move(next);
      c = std::move(c2);
      ++n;
    }
    if (!(eval_structural(inst.p, cur) == cur)) {
      o.verdict = Verdict::StatViolation;
      o.violation_step = n;
      o.message = "predecessor moves " + cur.render() + " at complexity 0";
    }
  } catch (const EvalError& e) {
    o.verdict = Verdict::EvalError;
    o.message = e.what();
  }
  o.value = cur;
  o.index = n;
  return o;
}

CciOutcome d_minus(const CCIInstance& inst, const Value& a, std::uint64_t fuel) {
  CciOutcome o = cci_run(inst, a, fuel);
  if (o.done()) o.value = Value::pair(a, Value::nat(o.index));
  return o;
}

CciAudit cci_audit(const CCIInstance& inst, const std::vector<Value>& samples) {
  CciAudit r;
  for (const auto& a : samples) {
    ++r.checked;
    OrdPoly c = value_to_ord(eval_structural(inst.c, a));
    Value pa = eval_structural(inst.p, a);
    if (c.is_zero()) {
      if (!(pa == a)) r.violations.push_back("(Stat) at " + a.render());
    } else if (!(value_to_ord(eval_structural(inst.c, pa)) < c)) {
      r.violations.push_back("(Desc) at " + a.render());
    }
  }
  return r;
}

namespace {

Term gcd_step() {
  using namespace mk;
  const Obj N = Obj::nat();
  const Obj NN = Obj::prod(N, N);
  return comp(stdlib_cond(NN), pair(comp(stdlib_entry("is_zero"), projr(N, N)),
                                    pair(id(NN), pair(projr(N, N), stdlib_entry("mod")))));
}

}  // namespace

CCIInstance gcd_cci() {
  const Obj N = Obj::nat();
  return make_cci(Obj::prod(N, N), mk::projr(N, N), gcd_step());
}

PartialMap gcd_partial() {
  using namespace mk;
  const Obj N = Obj::nat();
  const Obj NN = Obj::prod(N, N);
  Term run = iter(gcd_step());
  return make_partial(NN, N, comp(stdlib_entry("is_zero"), comp(projr(N, N), run)),
                      comp(projl(N, N), run));
}

ExistsResult define_by_exists(const Term& phi, const Value& a, const Value& b0,
                              std::uint64_t fuel) {
  if (phi.dom().kind() != ObjKind::Prod || !(phi.cod() == Obj::two()))
    throw TypeMismatch("define_by_exists", "A x B -> 2",
                       print_obj(phi.dom()) + " -> " + print_obj(phi.cod()));
  const Obj& b = phi.dom().right();
  ExistsResult r;
  for (std::uint64_t n = 0; n < fuel; ++n) {
    Value v = cont(b, b0, n);
    if (is_true(eval_structural(phi, Value::pair(a, v)))) {
      r.found = true;
      r.value = std::move(v);
      r.index = n;
      return r;
    }
  }
  return r;
}

}  // namespace prr
