#include "prr/term.hpp"

#include "prr/coding.hpp"
#include "prr/machine.hpp"
#include "prr/surface.hpp"

#include <functional>

namespace prr {

// ---------------------------------------------------------------------------
// Value

Value Value::nat(Nat n) {
  Value v;
  v.rep_ = std::move(n);
  return v;
}

Value Value::pair(Value l, Value r) {
  Value v;
  v.rep_ = std::make_shared<const std::pair<Value, Value>>(std::move(l), std::move(r));
  return v;
}

const Nat& Value::as_nat() const {
  if (auto* n = std::get_if<Nat>(&rep_)) return *n;
  throw EvalError("expected a natural, found " + render());
}

const Value& Value::left() const {
  if (auto* p = std::get_if<PairRep>(&rep_)) return (*p)->first;
  throw EvalError("expected a pair, found " + render());
}

const Value& Value::right() const {
  if (auto* p = std::get_if<PairRep>(&rep_)) return (*p)->second;
  throw EvalError("expected a pair, found " + render());
}

bool Value::operator==(const Value& other) const {
  if (rep_.index() != other.rep_.index()) return false;
  switch (kind()) {
    case Kind::Unit:
      return true;
    case Kind::Nat:
      return std::get<Nat>(rep_) == std::get<Nat>(other.rep_);
    case Kind::Pair: {
      const auto& a = std::get<PairRep>(rep_);
      const auto& b = std::get<PairRep>(other.rep_);
      return a == b || (a->first == b->first && a->second == b->second);
    }
  }
  return false;
}

std::string Value::render() const {
  switch (kind()) {
    case Kind::Unit:
      return "()";
    case Kind::Nat:
      return std::get<Nat>(rep_).str();
    case Kind::Pair:
      return "(" + left().render() + "," + right().render() + ")";
  }
  return "?";
}

const void* Value::identity() const {
  if (auto* p = std::get_if<PairRep>(&rep_)) return p->get();
  return nullptr;
}

namespace {

struct ValueParser {
  const std::string& s;
  std::size_t pos = 0;

  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("value literal: " + what + " at offset " + std::to_string(pos));
  }
  Value parse() {
    skip();
    if (pos >= s.size()) fail("unexpected end");
    if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
      std::size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      return Value::nat(Nat(s.substr(start, pos - start)));
    }
    if (s[pos] != '(') fail("expected '(' or a natural");
    ++pos;
    skip();
    if (pos < s.size() && s[pos] == ')') {
      ++pos;
      return Value::unit();
    }
    Value l = parse();
    skip();
    if (pos >= s.size() || s[pos] != ',') fail("expected ','");
    ++pos;
    Value r = parse();
    skip();
    if (pos >= s.size() || s[pos] != ')') fail("expected ')'");
    ++pos;
    return Value::pair(std::move(l), std::move(r));
  }
};

}  // namespace

Value parse_value(const std::string& text) {
  ValueParser p{text};
  Value v = p.parse();
  p.skip();
  if (p.pos != text.size()) p.fail("trailing input");
  return v;
}

TypeMismatch::TypeMismatch(std::string p, std::string e, std::string f)
    : std::runtime_error("type mismatch at " + p + ": expected " + e + ", found " + f),
      path(std::move(p)),
      expected(std::move(e)),
      found(std::move(f)) {}

// ---------------------------------------------------------------------------
// Nodes

struct ObjNode {
  ObjKind kind;
  Obj a, b;  // Prod: a x b; Abstr: carrier a
  Term chi;  // Abstr
  std::size_t hash;
  bool fundamental;

  static Obj make(ObjKind k, Obj a = {}, Obj b = {}, Term chi = {});
};

struct TermNode {
  TermKind kind;
  std::vector<Obj> objs;
  std::vector<Term> kids;
  Value literal;
  Obj dom, cod;
  std::size_t hash = 0;
  std::size_t depth = 0;
  OrdPoly complexity;
  bool dotted = false;
  bool constval = false;

  static Term make(TermKind k, std::vector<Obj> objs, std::vector<Term> kids, Value lit, Obj dom,
                   Obj cod);
};

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

std::size_t hash_value(const Value& v) {
  switch (v.kind()) {
    case Value::Kind::Unit:
      return 7;
    case Value::Kind::Nat:
      return mix(11, boost::multiprecision::hash_value(v.as_nat()));
    case Value::Kind::Pair:
      return mix(mix(13, hash_value(v.left())), hash_value(v.right()));
  }
  return 0;
}

}  // namespace

Obj ObjNode::make(ObjKind k, Obj a, Obj b, Term chi) {
  auto n = std::make_shared<ObjNode>();
  n->kind = k;
  std::size_t h = mix(0x51ed27, static_cast<std::size_t>(k));
  bool fund = k == ObjKind::Unit || k == ObjKind::Nat;
  if (k == ObjKind::Prod) {
    h = mix(mix(h, a.hash()), b.hash());
    fund = a.is_fundamental() && b.is_fundamental();
  }
  if (k == ObjKind::Abstr) h = mix(mix(h, a.hash()), chi.hash());
  n->a = std::move(a);
  n->b = std::move(b);
  n->chi = std::move(chi);
  n->hash = h;
  n->fundamental = fund;
  return Obj{std::shared_ptr<const ObjNode>(std::move(n))};
}

Obj Obj::unit() {
  static const Obj o = ObjNode::make(ObjKind::Unit);
  return o;
}
Obj Obj::nat() {
  static const Obj o = ObjNode::make(ObjKind::Nat);
  return o;
}
Obj Obj::two() {
  static const Obj o = ObjNode::make(ObjKind::Two);
  return o;
}
Obj Obj::univ() {
  static const Obj o = ObjNode::make(ObjKind::Univ);
  return o;
}
Obj Obj::prod(Obj a, Obj b) { return ObjNode::make(ObjKind::Prod, std::move(a), std::move(b)); }

Obj Obj::abstr(Obj carrier, Term chi) {
  if (!(chi.dom() == carrier) || !(chi.cod() == Obj::two()))
    throw TypeMismatch("abstr", print_obj(carrier) + " -> 2",
                       print_obj(chi.dom()) + " -> " + print_obj(chi.cod()));
  return ObjNode::make(ObjKind::Abstr, std::move(carrier), {}, std::move(chi));
}

ObjKind Obj::kind() const { return node_->kind; }
const Obj& Obj::left() const { return node_->a; }
const Obj& Obj::right() const { return node_->b; }
const Obj& Obj::carrier() const {
  if (node_->kind == ObjKind::Two) {
    static const Obj n = Obj::nat();
    return n;
  }
  return node_->a;
}
const Term& Obj::chi() const {
  if (node_->kind == ObjKind::Two) return two_chi();
  return node_->chi;
}
bool Obj::is_fundamental() const { return node_->fundamental; }
std::size_t Obj::hash() const { return node_ ? node_->hash : 0; }

bool Obj::operator==(const Obj& other) const {
  if (node_ == other.node_) return true;
  if (!node_ || !other.node_) return false;
  if (node_->hash != other.node_->hash || node_->kind != other.node_->kind) return false;
  switch (node_->kind) {
    case ObjKind::Prod:
      return node_->a == other.node_->a && node_->b == other.node_->b;
    case ObjKind::Abstr:
      return node_->a == other.node_->a && node_->chi == other.node_->chi;
    default:
      return true;
  }
}

const char* kind_name(TermKind k) {
  switch (k) {
    case TermKind::Id: return "id";
    case TermKind::Bang: return "bang";
    case TermKind::ZeroC: return "zero";
    case TermKind::Succ: return "succ";
    case TermKind::ProjL: return "projl";
    case TermKind::ProjR: return "projr";
    case TermKind::Pair: return "pair";
    case TermKind::Comp: return "comp";
    case TermKind::Cyl: return "cyl";
    case TermKind::Iter: return "iter";
    case TermKind::TrueC: return "true";
    case TermKind::FalseC: return "false";
    case TermKind::NotC: return "not";
    case TermKind::EqNat: return "eqnat";
    case TermKind::Incl: return "incl";
    case TermKind::Restrict: return "restrict";
    case TermKind::ConstVal: return "const";
    case TermKind::DMinus: return "dminus";
    case TermKind::CDot: return "cdot";
    case TermKind::EDot: return "edot";
    case TermKind::HashC: return "hash";
    case TermKind::Embed: return "embed";
    case TermKind::Cast: return "cast";
  }
  return "?";
}

namespace {

// Complexity clauses of the code evaluator. Every clause leaves enough slack
// that unfolding an Apply frame into its successor frames strictly lowers the
// natural sum of frame costs (see machine.cpp).
OrdPoly complexity_clause(TermKind k, const std::vector<Term>& kids, const std::vector<Obj>& objs) {
  auto c = [&](std::size_t i) { return kids[i].complexity(); };
  auto plus = [](const OrdPoly& x, unsigned n) { return ord_nat_sum(x, ord_from_nat(n)); };
  switch (k) {
    case TermKind::Comp:
      return plus(ord_nat_sum(c(0), c(1)), 2);
    case TermKind::Pair:
      return plus(ord_nat_sum(c(0), c(1)), 4);
    case TermKind::Cyl:
      return plus(c(0), 2);
    case TermKind::Iter:
      return ord_omega_shift(plus(c(0), 1));
    case TermKind::Restrict:
      return plus(ord_nat_sum(c(0), objs[0].chi().complexity()), 4);
    case TermKind::DMinus:
    case TermKind::CDot:
    case TermKind::EDot:
    case TermKind::HashC:
      return ord_from_nat(1);
    default:
      return ord_zero();
  }
}

bool is_reflection(TermKind k) {
  return k == TermKind::DMinus || k == TermKind::CDot || k == TermKind::EDot ||
         k == TermKind::HashC || k == TermKind::Embed || k == TermKind::Cast;
}

}  // namespace

Term TermNode::make(TermKind k, std::vector<Obj> objs, std::vector<Term> kids, Value lit, Obj dom,
                    Obj cod) {
  auto n = std::make_shared<TermNode>();
  n->kind = k;
  std::size_t h = mix(0x7e3a, static_cast<std::size_t>(k));
  std::size_t d = 0;
  bool dotted = is_reflection(k) || k == TermKind::ConstVal;
  bool cv = k == TermKind::ConstVal;
  for (const auto& o : objs) {
    h = mix(h, o.hash());
    if (o.kind() == ObjKind::Abstr) {
      dotted = dotted || o.chi().is_dotted();
      cv = cv || o.chi().has_constval();
    }
  }
  for (const auto& t : kids) {
    h = mix(h, t.hash());
    d = std::max(d, t.depth() + 1);
    dotted = dotted || t.is_dotted();
    cv = cv || t.has_constval();
  }
  if (k == TermKind::ConstVal) h = mix(h, hash_value(lit));
  n->complexity = complexity_clause(k, kids, objs);
  n->objs = std::move(objs);
  n->kids = std::move(kids);
  n->literal = std::move(lit);
  n->dom = std::move(dom);
  n->cod = std::move(cod);
  n->hash = h;
  n->depth = d;
  n->dotted = dotted;
  n->constval = cv;
  return Term{std::shared_ptr<const TermNode>(std::move(n))};
}

TermKind Term::kind() const { return node_->kind; }
const Obj& Term::dom() const { return node_->dom; }
const Obj& Term::cod() const { return node_->cod; }
const std::vector<Obj>& Term::objs() const { return node_->objs; }
const std::vector<Term>& Term::kids() const { return node_->kids; }
const Value& Term::literal() const { return node_->literal; }
std::size_t Term::depth() const { return node_->depth; }
const OrdPoly& Term::complexity() const { return node_->complexity; }
bool Term::is_dotted() const { return node_->dotted; }
bool Term::has_constval() const { return node_->constval; }
std::size_t Term::hash() const { return node_ ? node_->hash : 0; }

bool Term::operator==(const Term& other) const {
  if (node_ == other.node_) return true;
  if (!node_ || !other.node_) return false;
  const TermNode& a = *node_;
  const TermNode& b = *other.node_;
  if (a.hash != b.hash || a.kind != b.kind || a.objs.size() != b.objs.size() ||
      a.kids.size() != b.kids.size())
    return false;
  for (std::size_t i = 0; i < a.objs.size(); ++i)
    if (!(a.objs[i] == b.objs[i])) return false;
  for (std::size_t i = 0; i < a.kids.size(); ++i)
    if (!(a.kids[i] == b.kids[i])) return false;
  if (a.kind == TermKind::ConstVal && !(a.literal == b.literal)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Typing

namespace {

[[noreturn]] void mismatch(const char* where, const Obj& expected, const Obj& found) {
  throw TypeMismatch(where, print_obj(expected), print_obj(found));
}

void expect_eq(const char* where, const Obj& expected, const Obj& found) {
  if (!(expected == found)) mismatch(where, expected, found);
}

void expect_subobject(const char* where, const Obj& o) {
  if (!o.is_subobject()) throw TypeMismatch(where, "an abstraction object", print_obj(o));
}

void expect_arity(TermKind k, const std::vector<Obj>& objs, std::size_t no,
                  const std::vector<Term>& kids, std::size_t nk) {
  if (objs.size() != no || kids.size() != nk)
    throw TypeMismatch(kind_name(k),
                       std::to_string(no) + " object(s) and " + std::to_string(nk) + " term(s)",
                       std::to_string(objs.size()) + " object(s) and " +
                           std::to_string(kids.size()) + " term(s)");
}

}  // namespace

bool is_ordinal_object(const Obj& o) {
  switch (o.kind()) {
    case ObjKind::Nat:
    case ObjKind::Univ:
      return true;
    case ObjKind::Prod:
      return o.left().kind() == ObjKind::Nat && is_ordinal_object(o.right());
    default:
      return false;
  }
}

Term make_term_checked(TermKind k, std::vector<Obj> objs, std::vector<Term> kids, Value lit) {
  const Obj N = Obj::nat();
  const Obj U = Obj::unit();
  const Obj T = Obj::two();
  const Obj X = Obj::univ();
  Obj dom, cod;
  const char* w = kind_name(k);
  switch (k) {
    case TermKind::Id:
      expect_arity(k, objs, 1, kids, 0);
      dom = cod = objs[0];
      break;
    case TermKind::Bang:
      expect_arity(k, objs, 1, kids, 0);
      dom = objs[0];
      cod = U;
      break;
    case TermKind::ZeroC:
      expect_arity(k, objs, 1, kids, 0);
      dom = U;
      cod = objs[0];
      break;
    case TermKind::Succ:
      expect_arity(k, objs, 0, kids, 0);
      dom = cod = N;
      break;
    case TermKind::ProjL:
    case TermKind::ProjR:
      expect_arity(k, objs, 2, kids, 0);
      dom = Obj::prod(objs[0], objs[1]);
      cod = k == TermKind::ProjL ? objs[0] : objs[1];
      break;
    case TermKind::Pair:
      expect_arity(k, objs, 0, kids, 2);
      expect_eq(w, kids[0].dom(), kids[1].dom());
      dom = kids[0].dom();
      cod = Obj::prod(kids[0].cod(), kids[1].cod());
      break;
    case TermKind::Comp:
      expect_arity(k, objs, 0, kids, 2);
      expect_eq(w, kids[0].dom(), kids[1].cod());
      dom = kids[1].dom();
      cod = kids[0].cod();
      break;
    case TermKind::Cyl:
      expect_arity(k, objs, 1, kids, 1);
      dom = Obj::prod(objs[0], kids[0].dom());
      cod = Obj::prod(objs[0], kids[0].cod());
      break;
    case TermKind::Iter:
      expect_arity(k, objs, 0, kids, 1);
      expect_eq(w, kids[0].dom(), kids[0].cod());
      dom = Obj::prod(kids[0].dom(), N);
      cod = kids[0].dom();
      break;
    case TermKind::TrueC:
    case TermKind::FalseC:
      expect_arity(k, objs, 0, kids, 0);
      dom = U;
      cod = T;
      break;
    case TermKind::NotC:
      expect_arity(k, objs, 0, kids, 0);
      dom = cod = T;
      break;
    case TermKind::EqNat:
      expect_arity(k, objs, 0, kids, 0);
      dom = Obj::prod(N, N);
      cod = T;
      break;
    case TermKind::Incl:
      expect_arity(k, objs, 1, kids, 0);
      expect_subobject(w, objs[0]);
      dom = objs[0];
      cod = objs[0].carrier();
      break;
    case TermKind::Restrict:
      expect_arity(k, objs, 1, kids, 1);
      expect_subobject(w, objs[0]);
      expect_eq(w, objs[0].carrier(), kids[0].cod());
      dom = kids[0].dom();
      cod = objs[0];
      break;
    case TermKind::ConstVal:
      expect_arity(k, objs, 1, kids, 0);
      if (!value_check(objs[0], lit))
        throw TypeMismatch(w, "a value of " + print_obj(objs[0]), lit.render());
      dom = U;
      cod = objs[0];
      break;
    case TermKind::DMinus:
      expect_arity(k, objs, 0, kids, 2);
      expect_eq(w, kids[1].dom(), kids[1].cod());
      expect_eq(w, kids[1].dom(), kids[0].dom());
      if (!is_ordinal_object(kids[0].cod()))
        throw TypeMismatch(w, "an ordinal-valued complexity", print_obj(kids[0].cod()));
      dom = kids[1].dom();
      cod = Obj::prod(dom, N);
      break;
    case TermKind::CDot:
    case TermKind::EDot:
      expect_arity(k, objs, 0, kids, 0);
      dom = cod = X;
      break;
    case TermKind::HashC:
      expect_arity(k, objs, 0, kids, 0);
      dom = N;
      cod = X;
      break;
    case TermKind::Embed:
      expect_arity(k, objs, 1, kids, 0);
      dom = objs[0];
      cod = X;
      break;
    case TermKind::Cast:
      expect_arity(k, objs, 1, kids, 0);
      dom = X;
      cod = objs[0];
      break;
  }
  return TermNode::make(k, std::move(objs), std::move(kids), std::move(lit), std::move(dom),
                        std::move(cod));
}

namespace mk {
namespace {
Term leaf(TermKind k) {
  static const std::map<TermKind, Term> cache = [] {
    std::map<TermKind, Term> m;
    for (TermKind kind : {TermKind::Succ, TermKind::TrueC, TermKind::FalseC, TermKind::NotC,
                          TermKind::EqNat, TermKind::CDot, TermKind::EDot, TermKind::HashC})
      m.emplace(kind, make_term_checked(kind, {}, {}));
    return m;
  }();
  return cache.at(k);
}
}  // namespace

Term id(Obj a) { return make_term_checked(TermKind::Id, {std::move(a)}, {}); }
Term bang(Obj a) { return make_term_checked(TermKind::Bang, {std::move(a)}, {}); }
Term zero(Obj a) { return make_term_checked(TermKind::ZeroC, {std::move(a)}, {}); }
Term succ() { return leaf(TermKind::Succ); }
Term projl(Obj a, Obj b) { return make_term_checked(TermKind::ProjL, {std::move(a), std::move(b)}, {}); }
Term projr(Obj a, Obj b) { return make_term_checked(TermKind::ProjR, {std::move(a), std::move(b)}, {}); }
Term pair(Term f, Term g) { return make_term_checked(TermKind::Pair, {}, {std::move(f), std::move(g)}); }
Term comp(Term g, Term f) { return make_term_checked(TermKind::Comp, {}, {std::move(g), std::move(f)}); }
Term chain(std::initializer_list<Term> fs) {
  std::vector<Term> v(fs);
  if (v.empty()) throw std::invalid_argument("mk::chain: empty");
  Term acc = v.back();
  for (std::size_t i = v.size() - 1; i-- > 0;) acc = comp(v[i], acc);
  return acc;
}
Term cyl(Obj c, Term g) { return make_term_checked(TermKind::Cyl, {std::move(c)}, {std::move(g)}); }
Term iter(Term g) { return make_term_checked(TermKind::Iter, {}, {std::move(g)}); }
Term tt() { return leaf(TermKind::TrueC); }
Term ff() { return leaf(TermKind::FalseC); }
Term not_() { return leaf(TermKind::NotC); }
Term eqnat() { return leaf(TermKind::EqNat); }
Term incl(Obj sub) { return make_term_checked(TermKind::Incl, {std::move(sub)}, {}); }
Term restrict(Term f, Obj sub) {
  return make_term_checked(TermKind::Restrict, {std::move(sub)}, {std::move(f)});
}
Term constval(Obj a, Value v) { return make_term_checked(TermKind::ConstVal, {std::move(a)}, {}, std::move(v)); }
Term dminus(Term c, Term p) { return make_term_checked(TermKind::DMinus, {}, {std::move(c), std::move(p)}); }
Term cdot() { return leaf(TermKind::CDot); }
Term edot() { return leaf(TermKind::EDot); }
Term hash() { return leaf(TermKind::HashC); }
Term embed(Obj a) { return make_term_checked(TermKind::Embed, {std::move(a)}, {}); }
Term cast(Obj a) { return make_term_checked(TermKind::Cast, {std::move(a)}, {}); }
}  // namespace mk

std::pair<Obj, Obj> typecheck(const Term& t) { return {t.dom(), t.cod()}; }
std::size_t depth(const Term& t) { return t.depth(); }

// ---------------------------------------------------------------------------
// Ordinal-valued values

OrdPoly value_to_ord(const Value& v) {
  std::vector<Nat> coeffs;
  const Value* cur = &v;
  while (cur->is_pair()) {
    coeffs.push_back(cur->left().as_nat());
    cur = &cur->right();
  }
  if (cur->is_unit()) throw EvalError("ordinal value must end in a natural");
  coeffs.push_back(cur->as_nat());
  return OrdPoly{std::move(coeffs)};
}

Value ord_to_value(const OrdPoly& p) {
  if (p.is_zero()) return Value::nat(0);
  const auto& c = p.coeffs();
  Value acc = Value::nat(c.back());
  for (std::size_t i = c.size() - 1; i-- > 0;) acc = Value::pair(Value::nat(c[i]), std::move(acc));
  return acc;
}

Value zero_value(const Obj& o) {
  switch (o.kind()) {
    case ObjKind::Unit:
      return Value::unit();
    case ObjKind::Nat:
    case ObjKind::Two:
    case ObjKind::Univ:
      return Value::nat(0);
    case ObjKind::Prod:
      return Value::pair(zero_value(o.left()), zero_value(o.right()));
    case ObjKind::Abstr:
      return zero_value(o.carrier());
  }
  return Value::unit();
}

bool value_check(const Obj& o, const Value& v) {
  switch (o.kind()) {
    case ObjKind::Unit:
      return v.is_unit();
    case ObjKind::Nat:
      return v.is_nat();
    case ObjKind::Two:
      return v.is_nat() && v.as_nat() < 2;
    case ObjKind::Univ:
      return true;
    case ObjKind::Prod:
      return v.is_pair() && value_check(o.left(), v.left()) && value_check(o.right(), v.right());
    case ObjKind::Abstr: {
      if (!value_check(o.carrier(), v)) return false;
      Value bit = eval_structural(o.chi(), v);
      return bit.as_nat() == 1;
    }
  }
  return false;
}

// ---------------------------------------------------------------------------
// Standard library

namespace {

struct Lib {
  std::map<std::string, Term> entries;
  Lib();
};

Term swap_of(const Obj& a, const Obj& b) { return mk::pair(mk::projr(a, b), mk::projl(a, b)); }

Lib::Lib() {
  using namespace mk;
  const Obj N = Obj::nat();
  const Obj NN = Obj::prod(N, N);
  const Obj T = Obj::two();
  const Obj TT = Obj::prod(T, T);

  Term pred = chain({projl(N, N), iter(pair(projr(N, N), comp(succ(), projr(N, N)))),
                     pair(comp(zero(NN), bang(N)), id(N))});
  Term add = iter(succ());
  Term monus = iter(pred);
  Term mul = chain({projl(N, N), iter(pair(add, projr(N, N))),
                    pair(pair(comp(zero(N), bang(NN)), projl(N, N)), projr(N, N))});
  Term is_zero = comp(iter(comp(ff(), bang(T))), pair(comp(tt(), bang(N)), id(N)));
  Term swap = swap_of(N, N);
  Term leq = comp(is_zero, monus);
  Term eq = chain({is_zero, add, pair(monus, comp(monus, swap))});
  Term dbl = comp(add, pair(id(N), id(N)));
  Term lt2 = comp(is_zero, pred);

  entries.emplace("pred", pred);
  entries.emplace("add", add);
  entries.emplace("monus", monus);
  entries.emplace("mul", mul);
  entries.emplace("is_zero", is_zero);
  entries.emplace("swap", swap);
  entries.emplace("leq", leq);
  entries.emplace("eq", eq);
  entries.emplace("double", dbl);
  entries.emplace("lt2", lt2);
}

// cond needs lt2 (through Two's chi) and monus, so it is built after Lib.
Term build_cond(const Obj& a, const Term& monus) {
  using namespace mk;
  const Obj N = Obj::nat();
  const Obj T = Obj::two();
  const Obj AA = Obj::prod(a, a);
  const Obj in = Obj::prod(T, AA);
  Term one = comp(succ(), zero(N));
  Term swaps = comp(monus, pair(comp(one, bang(in)), comp(incl(T), projl(T, AA))));
  return chain({projl(a, a), iter(swap_of(a, a)), pair(projr(T, AA), swaps)});
}

const Lib& lib_base() {
  static const Lib lib;
  return lib;
}

struct FullLib {
  std::map<std::string, Term> entries;
  FullLib() {
    using namespace mk;
    entries = lib_base().entries;
    const Obj N = Obj::nat();
    const Obj NN = Obj::prod(N, N);
    const Obj T = Obj::two();
    const Obj TT = Obj::prod(T, T);
    const Term& monus = entries.at("monus");
    const Term& pred = entries.at("pred");
    const Term& add = entries.at("add");
    const Term& is_zero = entries.at("is_zero");

    Term cond_n = build_cond(N, monus);
    Term cond_t = build_cond(T, monus);
    Term cond_nn = build_cond(NN, monus);
    Term and_ = comp(cond_t, pair(projl(T, T), pair(projr(T, T), comp(ff(), bang(TT)))));
    Term or_ = comp(cond_t, pair(projl(T, T), pair(comp(tt(), bang(TT)), projr(T, T))));

    Term tri_step = pair(comp(add, pair(projl(N, N), comp(succ(), projr(N, N)))),
                         comp(succ(), projr(N, N)));
    Term tri = chain({projl(N, N), iter(tri_step), pair(comp(zero(NN), bang(N)), id(N))});
    Term cpair = comp(add, pair(comp(tri, add), projr(N, N)));

    Term next = comp(cond_nn,
                     pair(comp(is_zero, projl(N, N)),
                          pair(pair(comp(succ(), projr(N, N)), comp(zero(N), bang(NN))),
                               pair(comp(pred, projl(N, N)), comp(succ(), projr(N, N))))));
    Term unpair = comp(iter(next), pair(comp(zero(NN), bang(N)), id(N)));

    // mod: iterate r -> (r+1 = y ? 0 : r+1) x times, carrying y alongside.
    Term r1 = comp(succ(), projl(N, N));
    Term mod_step = pair(comp(cond_n, pair(comp(eqnat(), pair(r1, projr(N, N))),
                                           pair(comp(zero(N), bang(NN)), r1))),
                         projr(N, N));
    Term mod = chain({projl(N, N), iter(mod_step),
                      pair(pair(comp(zero(N), bang(NN)), projr(N, N)), projl(N, N))});

    entries.emplace("cond", cond_n);
    entries.emplace("and", and_);
    entries.emplace("or", or_);
    entries.emplace("tri", tri);
    entries.emplace("cantor_pair", cpair);
    entries.emplace("cantor_unpair", unpair);
    entries.emplace("mod", mod);
  }
};

}  // namespace

const Term& two_chi() { return lib_base().entries.at("lt2"); }

const std::map<std::string, Term>& stdlib() {
  static const FullLib lib;
  return lib.entries;
}

const Term& stdlib_entry(const std::string& name) {
  const auto& lib = stdlib();
  auto it = lib.find(name);
  if (it == lib.end()) throw std::out_of_range("no stdlib entry named " + name);
  return it->second;
}

Term stdlib_cond(const Obj& a) {
  if (a == Obj::nat()) return stdlib_entry("cond");
  return build_cond(a, stdlib_entry("monus"));
}

Term stdlib_and() { return stdlib_entry("and"); }

Term stdlib_equal(const Obj& a) {
  using namespace mk;
  const Obj aa = Obj::prod(a, a);
  switch (a.kind()) {
    case ObjKind::Nat:
      return eqnat();
    case ObjKind::Unit:
      return comp(tt(), bang(aa));
    case ObjKind::Prod: {
      Term el = comp(stdlib_equal(a.left()),
                     pair(comp(projl(a.left(), a.right()), projl(a, a)),
                          comp(projl(a.left(), a.right()), projr(a, a))));
      Term er = comp(stdlib_equal(a.right()),
                     pair(comp(projr(a.left(), a.right()), projl(a, a)),
                          comp(projr(a.left(), a.right()), projr(a, a))));
      return comp(stdlib_and(), pair(el, er));
    }
    case ObjKind::Two:
    case ObjKind::Abstr:
      return comp(stdlib_equal(a.carrier()),
                  pair(comp(incl(a), projl(a, a)), comp(incl(a), projr(a, a))));
    case ObjKind::Univ:
      break;
  }
  throw TypeMismatch("equal", "an object with decidable equality", "X");
}

// ---------------------------------------------------------------------------

EqSample eq_sample(const Term& f, const Term& g, std::size_t bound) {
  if (!(f.dom() == g.dom()) || !(f.cod() == g.cod()))
    throw TypeMismatch("eq_sample", print_obj(f.dom()) + " -> " + print_obj(f.cod()),
                       print_obj(g.dom()) + " -> " + print_obj(g.cod()));
  const Value a0 = zero_value(f.dom());
  for (std::size_t n = 0; n < bound; ++n) {
    Value a = cont(f.dom(), a0, Nat(n));
    if (!(eval_structural(f, a) == eval_structural(g, a))) return {false, a};
  }
  return {};
}

}  // namespace prr
