#include "prr/coding.hpp"

#include "prr/machine.hpp"

#include <mutex>
#include <unordered_map>

namespace prr {

struct CodeNode {
  unsigned tag;
  std::vector<Code> kids;
  std::optional<Value> literal;
};

Code::Code(unsigned tag, std::vector<Code> kids, std::optional<Value> literal)
    : node_(std::make_shared<const CodeNode>(CodeNode{tag, std::move(kids), std::move(literal)})) {}

unsigned Code::tag() const { return node_ ? node_->tag : 0; }

const std::vector<Code>& Code::kids() const {
  static const std::vector<Code> none;
  return node_ ? node_->kids : none;
}

const std::optional<Value>& Code::literal() const {
  static const std::optional<Value> none;
  return node_ ? node_->literal : none;
}

bool Code::is_reflected() const {
  unsigned t = tag();
  return t >= tag_of(TermKind::DMinus) && t <= tag_of(TermKind::Cast);
}

bool Code::operator==(const Code& other) const {
  if (node_ == other.node_) return true;
  if (tag() != other.tag() || literal() != other.literal()) return false;
  return kids() == other.kids();
}

namespace {

constexpr unsigned kObjTags = static_cast<unsigned>(CodeTag::FirstTerm);

bool is_term_tag(unsigned t) { return t >= kObjTags && t < kTagCount; }
TermKind term_kind(unsigned t) { return static_cast<TermKind>(t - kObjTags); }

// (object children, term children) expected under each term tag.
std::pair<std::size_t, std::size_t> term_arity(TermKind k) {
  switch (k) {
    case TermKind::Id:
    case TermKind::Bang:
    case TermKind::ZeroC:
    case TermKind::Incl:
    case TermKind::ConstVal:
    case TermKind::Embed:
    case TermKind::Cast:
      return {1, 0};
    case TermKind::ProjL:
    case TermKind::ProjR:
      return {2, 0};
    case TermKind::Pair:
    case TermKind::Comp:
    case TermKind::DMinus:
      return {0, 2};
    case TermKind::Cyl:
    case TermKind::Restrict:
      return {1, 1};
    case TermKind::Iter:
      return {0, 1};
    default:
      return {0, 0};
  }
}

std::size_t obj_arity(unsigned tag) {
  auto k = static_cast<ObjKind>(tag);
  return k == ObjKind::Prod || k == ObjKind::Abstr ? 2 : 0;
}

}  // namespace

std::string tag_name(unsigned tag) {
  if (tag < kObjTags) {
    static const char* names[] = {"1", "N", "2", "X", "x", "abstr"};
    return names[tag];
  }
  if (is_term_tag(tag)) return kind_name(term_kind(tag));
  return "?" + std::to_string(tag);
}

// ---------------------------------------------------------------------------
// quote / decode

Code quote_obj(const Obj& o) {
  switch (o.kind()) {
    case ObjKind::Prod:
      return Code(tag_of(o.kind()), {quote_obj(o.left()), quote_obj(o.right())});
    case ObjKind::Abstr:
      return Code(tag_of(o.kind()), {quote_obj(o.carrier()), quote(o.chi())});
    default:
      return Code(tag_of(o.kind()), {});
  }
}

Code quote(const Term& t) {
  std::vector<Code> kids;
  kids.reserve(t.objs().size() + t.kids().size());
  for (const auto& o : t.objs()) kids.push_back(quote_obj(o));
  for (const auto& k : t.kids()) kids.push_back(quote(k));
  std::optional<Value> lit;
  if (t.kind() == TermKind::ConstVal) lit = t.literal();
  return Code(tag_of(t.kind()), std::move(kids), std::move(lit));
}

Obj decode_obj(const Code& c) {
  if (c.tag() >= kObjTags) throw IllTyped("expected an object code, found " + tag_name(c.tag()));
  if (c.kids().size() != obj_arity(c.tag()))
    throw IllTyped("object " + tag_name(c.tag()) + " with " + std::to_string(c.kids().size()) +
                   " children");
  switch (static_cast<ObjKind>(c.tag())) {
    case ObjKind::Unit: return Obj::unit();
    case ObjKind::Nat: return Obj::nat();
    case ObjKind::Two: return Obj::two();
    case ObjKind::Univ: return Obj::univ();
    case ObjKind::Prod: return Obj::prod(decode_obj(c.kids()[0]), decode_obj(c.kids()[1]));
    case ObjKind::Abstr:
      try {
        return Obj::abstr(decode_obj(c.kids()[0]), decode(c.kids()[1]));
      } catch (const TypeMismatch& e) {
        throw IllTyped(e.what());
      }
  }
  throw IllTyped("bad object tag");
}

Term decode(const Code& c) {
  if (!is_term_tag(c.tag())) throw IllTyped("expected a term code, found " + tag_name(c.tag()));
  TermKind k = term_kind(c.tag());
  auto [no, nk] = term_arity(k);
  if (c.kids().size() != no + nk)
    throw IllTyped(std::string(kind_name(k)) + " with " + std::to_string(c.kids().size()) +
                   " children, expected " + std::to_string(no + nk));
  if ((k == TermKind::ConstVal) != c.literal().has_value())
    throw IllTyped(std::string(kind_name(k)) + ": literal mismatch");
  std::vector<Obj> objs;
  std::vector<Term> kids;
  for (std::size_t i = 0; i < no; ++i) objs.push_back(decode_obj(c.kids()[i]));
  for (std::size_t i = no; i < no + nk; ++i) kids.push_back(decode(c.kids()[i]));
  try {
    return make_term_checked(k, std::move(objs), std::move(kids),
                             c.literal().value_or(Value{}));
  } catch (const TypeMismatch& e) {
    throw IllTyped(e.what());
  }
}

// ---------------------------------------------------------------------------
// Numbering

Nat value_num(const Value& v) {
  switch (v.kind()) {
    case Value::Kind::Unit:
      return 0;
    case Value::Kind::Nat:
      return 1 + 2 * v.as_nat();
    case Value::Kind::Pair:
      return 2 + 2 * graded_pair(value_num(v.left()), value_num(v.right()));
  }
  return 0;
}

Value value_from_num(const Nat& n) {
  if (n == 0) return Value::unit();
  if (n % 2 == 1) return Value::nat((n - 1) / 2);
  auto [l, r] = graded_unpair((n - 2) / 2);
  return Value::pair(value_from_num(l), value_from_num(r));
}

Nat num(const Code& c) {
  std::vector<Nat> items;
  for (const auto& k : c.kids()) items.push_back(num(k));
  if (c.literal()) items.push_back(value_num(*c.literal()));
  Nat seq = 0;
  for (std::size_t i = items.size(); i-- > 0;) seq = 1 + graded_pair(items[i], seq);
  return graded_pair(c.tag(), seq);
}

Code code_from_num(const Nat& n) {
  auto [tag_n, seq] = graded_unpair(n);
  if (tag_n >= kTagCount) throw IllTyped("code number " + n.str() + ": unknown tag " + tag_n.str());
  auto tag = static_cast<unsigned>(tag_n);
  std::vector<Nat> items;
  while (seq != 0) {
    auto [h, t] = graded_unpair(seq - 1);
    items.push_back(std::move(h));
    seq = std::move(t);
  }
  std::optional<Value> lit;
  if (tag == tag_of(TermKind::ConstVal)) {
    if (items.size() != 2) throw IllTyped("const code with " + std::to_string(items.size()) + " items");
    lit = value_from_num(items.back());
    items.pop_back();
  }
  std::size_t want = 0;
  if (is_term_tag(tag)) {
    auto [no, nk] = term_arity(term_kind(tag));
    want = no + nk;
  } else {
    want = obj_arity(tag);
  }
  if (items.size() != want)
    throw IllTyped("code number " + n.str() + ": " + tag_name(tag) + " with " +
                   std::to_string(items.size()) + " children");
  std::vector<Code> kids;
  for (const auto& m : items) kids.push_back(code_from_num(m));
  return Code(tag, std::move(kids), std::move(lit));
}

// ---------------------------------------------------------------------------
// Codes as values

Value code_to_value(const Code& c) {
  Value list;
  if (c.literal()) list = Value::pair(*c.literal(), list);
  for (std::size_t i = c.kids().size(); i-- > 0;) list = Value::pair(code_to_value(c.kids()[i]), list);
  return Value::pair(Value::nat(c.tag()), list);
}

Code code_from_value(const Value& v) {
  if (!v.is_pair() || !v.left().is_nat()) throw IllTyped("code value must be (tag, list): " + v.render());
  const Nat& t = v.left().as_nat();
  if (t >= kTagCount) throw IllTyped("code value: unknown tag " + t.str());
  auto tag = static_cast<unsigned>(t);
  std::vector<Value> items;
  for (const Value* cur = &v.right(); !cur->is_unit(); cur = &cur->right()) {
    if (!cur->is_pair()) throw IllTyped("code value: malformed child list");
    items.push_back(cur->left());
  }
  std::optional<Value> lit;
  if (tag == tag_of(TermKind::ConstVal)) {
    if (items.size() != 2) throw IllTyped("const code value with " + std::to_string(items.size()) + " items");
    lit = items.back();
    items.pop_back();
  }
  std::vector<Code> kids;
  for (const auto& k : items) kids.push_back(code_from_value(k));
  return Code(tag, std::move(kids), std::move(lit));
}

namespace {

// The machine re-encodes and re-decodes the same sub-terms at every step.
// Entries keep their key objects alive, so addresses are never reused.
struct CodecCache {
  std::mutex mu;
  std::unordered_map<const void*, std::pair<Term, Value>> to_value;
  std::unordered_map<const void*, std::pair<Value, Term>> from_value;
};

CodecCache& codec_cache() {
  static CodecCache c;
  return c;
}

constexpr std::size_t kCacheLimit = 1 << 18;

}  // namespace

Value term_to_value(const Term& t) {
  auto& cache = codec_cache();
  {
    std::lock_guard lock(cache.mu);
    auto it = cache.to_value.find(t.id());
    if (it != cache.to_value.end()) return it->second.second;
  }
  Value list;
  if (t.kind() == TermKind::ConstVal) list = Value::pair(t.literal(), list);
  for (std::size_t i = t.kids().size(); i-- > 0;) list = Value::pair(term_to_value(t.kids()[i]), list);
  for (std::size_t i = t.objs().size(); i-- > 0;) list = Value::pair(code_to_value(quote_obj(t.objs()[i])), list);
  Value v = Value::pair(Value::nat(tag_of(t.kind())), list);
  std::lock_guard lock(cache.mu);
  if (cache.to_value.size() >= kCacheLimit) cache.to_value.clear();
  cache.to_value.emplace(t.id(), std::make_pair(t, v));
  return v;
}

Term term_from_value(const Value& v) {
  const void* key = v.identity();
  auto& cache = codec_cache();
  if (key) {
    std::lock_guard lock(cache.mu);
    auto it = cache.from_value.find(key);
    if (it != cache.from_value.end()) return it->second.second;
  }
  Term t = decode(code_from_value(v));
  if (key) {
    std::lock_guard lock(cache.mu);
    if (cache.from_value.size() >= kCacheLimit) cache.from_value.clear();
    cache.from_value.emplace(key, std::make_pair(v, t));
  }
  return t;
}

// ---------------------------------------------------------------------------
// Rendering

std::string print_code(const Code& c) {
  const auto& ks = c.kids();
  if (ks.empty() && !c.literal()) return tag_name(c.tag());
  auto inner = [](const Code& s) {
    // (incl A chi) / (restrict f A chi): an abstraction argument is spliced.
    if (s.tag() == tag_of(ObjKind::Abstr) && s.kids().size() == 2)
      return print_code(s.kids()[0]) + " " + print_code(s.kids()[1]);
    return print_code(s);
  };
  std::string out = "(" + tag_name(c.tag());
  if (c.tag() == tag_of(TermKind::Incl) && ks.size() == 1) {
    out += " " + inner(ks[0]);
  } else if (c.tag() == tag_of(TermKind::Restrict) && ks.size() == 2) {
    out += " " + print_code(ks[1]) + " " + inner(ks[0]);
  } else if (c.tag() == tag_of(TermKind::ConstVal)) {
    out = "(#const";
    for (const auto& k : ks) out += " " + print_code(k);
    if (c.literal()) out += " " + c.literal()->render();
  } else {
    for (const auto& k : ks) out += " " + print_code(k);
  }
  return out + ")";
}

// ---------------------------------------------------------------------------
// Counts

Value cont(const Obj& o, const Value& a0, const Nat& n) {
  switch (o.kind()) {
    case ObjKind::Unit:
      return Value::unit();
    case ObjKind::Nat:
      return Value::nat(n);
    case ObjKind::Univ:
      return value_from_num(n);
    case ObjKind::Prod: {
      auto [x, y] = cantor_unpair(n);
      return Value::pair(cont(o.left(), a0.left(), x), cont(o.right(), a0.right(), y));
    }
    case ObjKind::Two:
    case ObjKind::Abstr: {
      Value v = cont(o.carrier(), a0, n);
      return eval_structural(o.chi(), v).as_nat() == 1 ? v : a0;
    }
  }
  return a0;
}

namespace {

Term numeral(const Nat& k) {
  Term t = mk::zero(Obj::nat());
  for (Nat i = 0; i < k; ++i) t = mk::comp(mk::succ(), t);
  return t;
}

}  // namespace

Term cont_term(const Obj& o) {
  using namespace mk;
  const Obj N = Obj::nat();
  switch (o.kind()) {
    case ObjKind::Unit:
      return bang(N);
    case ObjKind::Nat:
      return id(N);
    case ObjKind::Prod:
      return comp(pair(comp(cont_term(o.left()), projl(N, N)), comp(cont_term(o.right()), projr(N, N))),
                  stdlib_entry("cantor_unpair"));
    case ObjKind::Two:
    case ObjKind::Abstr: {
      // The fallback point is the first member in count order.
      const Obj& c = o.carrier();
      const Value c0 = zero_value(c);
      constexpr unsigned kPointSearch = 4096;
      std::optional<Nat> k;
      for (unsigned i = 0; i < kPointSearch && !k; ++i)
        if (eval_structural(o.chi(), cont(c, c0, i)).as_nat() == 1) k = i;
      if (!k) throw EvalError("cont_term: no member of " + print_code(quote_obj(o)) + " found");
      Term cc = cont_term(c);
      Term point = comp(comp(cc, numeral(*k)), bang(N));
      Term pick = comp(stdlib_cond(c), pair(comp(o.chi(), cc), pair(cc, point)));
      return restrict(pick, o);
    }
    case ObjKind::Univ:
      break;
  }
  throw EvalError("cont_term: no count term for X");
}

// ---------------------------------------------------------------------------
// Enumeration of objects and typed slots

namespace {

// Ordinal-shaped objects: 0 -> N, 1 -> X, k+2 -> N x O(k).
Obj enumerate_ord_obj(const Nat& n) {
  if (n == 0) return Obj::nat();
  if (n == 1) return Obj::univ();
  return Obj::prod(Obj::nat(), enumerate_ord_obj(n - 2));
}

Nat rank_ord_obj(const Obj& o) {
  if (o.kind() == ObjKind::Nat) return 0;
  if (o.kind() == ObjKind::Univ) return 1;
  return 2 + rank_ord_obj(o.right());
}

bool is_prod(const Obj& o) { return o.kind() == ObjKind::Prod; }

std::vector<Term> slot_leaves(const Obj& a, const Obj& b) {
  using namespace mk;
  const Obj U = Obj::unit(), N = Obj::nat(), T = Obj::two(), X = Obj::univ();
  std::vector<Term> out;
  if (a == b) out.push_back(id(a));
  if (b == U) out.push_back(bang(a));
  if (a == U) out.push_back(zero(b));
  if (a == N && b == N) out.push_back(succ());
  if (is_prod(a) && a.left() == b) out.push_back(projl(a.left(), a.right()));
  if (is_prod(a) && a.right() == b) out.push_back(projr(a.left(), a.right()));
  if (a == U && b == T) {
    out.push_back(tt());
    out.push_back(ff());
  }
  if (a == T && b == T) out.push_back(not_());
  if (a == Obj::prod(N, N) && b == T) out.push_back(eqnat());
  if (a.is_subobject() && a.carrier() == b) out.push_back(incl(a));
  if (a == X && b == X) {
    out.push_back(cdot());
    out.push_back(edot());
  }
  if (a == N && b == X) out.push_back(hash());
  if (b == X) out.push_back(embed(a));
  if (a == X) out.push_back(cast(b));
  return out;
}

std::vector<TermKind> slot_nodes(const Obj& a, const Obj& b) {
  std::vector<TermKind> out{TermKind::Comp};
  if (is_prod(b)) out.push_back(TermKind::Pair);
  if (is_prod(a) && is_prod(b) && a.left() == b.left()) out.push_back(TermKind::Cyl);
  if (a == Obj::prod(b, Obj::nat())) out.push_back(TermKind::Iter);
  if (b.is_subobject()) out.push_back(TermKind::Restrict);
  if (b == Obj::prod(a, Obj::nat())) out.push_back(TermKind::DMinus);
  return out;
}

}  // namespace

Obj enumerate_obj(const Nat& n) {
  if (n < 4) {
    static const Obj base[] = {Obj::unit(), Obj::nat(), Obj::two(), Obj::univ()};
    return base[static_cast<unsigned>(n)];
  }
  Nat m = n - 4;
  if (m % 2 == 0) {
    auto [x, y] = graded_unpair(m / 2);
    return Obj::prod(enumerate_obj(x), enumerate_obj(y));
  }
  auto [x, c] = graded_unpair(m / 2);
  Obj carrier = enumerate_obj(x);
  return Obj::abstr(carrier, enumerate_slot(carrier, Obj::two(), c));
}

Nat rank_obj(const Obj& o) {
  switch (o.kind()) {
    case ObjKind::Unit: return 0;
    case ObjKind::Nat: return 1;
    case ObjKind::Two: return 2;
    case ObjKind::Univ: return 3;
    case ObjKind::Prod:
      return 4 + 2 * graded_pair(rank_obj(o.left()), rank_obj(o.right()));
    case ObjKind::Abstr:
      return 5 + 2 * graded_pair(rank_obj(o.carrier()), rank_in_slot(o.chi()));
  }
  return 0;
}

Term enumerate_slot(const Obj& a, const Obj& b, const Nat& n) {
  using namespace mk;
  auto leaves = slot_leaves(a, b);
  if (n < leaves.size()) return leaves[static_cast<std::size_t>(n)];
  auto nodes = slot_nodes(a, b);
  Nat m = n - leaves.size();
  auto k = nodes[static_cast<std::size_t>(m % nodes.size())];
  Nat c = m / nodes.size();
  switch (k) {
    case TermKind::Comp: {
      auto [oi, rest] = graded_unpair(c);
      auto [fi, gi] = graded_unpair(rest);
      Obj mid = enumerate_obj(oi);
      return comp(enumerate_slot(mid, b, gi), enumerate_slot(a, mid, fi));
    }
    case TermKind::Pair: {
      auto [fi, gi] = graded_unpair(c);
      return pair(enumerate_slot(a, b.left(), fi), enumerate_slot(a, b.right(), gi));
    }
    case TermKind::Cyl:
      return cyl(a.left(), enumerate_slot(a.right(), b.right(), c));
    case TermKind::Iter:
      return iter(enumerate_slot(b, b, c));
    case TermKind::Restrict:
      return restrict(enumerate_slot(a, b.carrier(), c), b);
    case TermKind::DMinus: {
      auto [oi, rest] = graded_unpair(c);
      auto [ci, pi] = graded_unpair(rest);
      return dminus(enumerate_slot(a, enumerate_ord_obj(oi), ci), enumerate_slot(a, a, pi));
    }
    default:
      break;
  }
  throw std::logic_error("enumerate_slot: unreachable");
}

Nat rank_in_slot(const Term& t) {
  const Obj& a = t.dom();
  const Obj& b = t.cod();
  if (t.kind() == TermKind::ConstVal) throw std::invalid_argument("const terms are not enumerated");
  auto leaves = slot_leaves(a, b);
  for (std::size_t i = 0; i < leaves.size(); ++i)
    if (leaves[i] == t) return i;
  auto nodes = slot_nodes(a, b);
  std::size_t k = 0;
  while (k < nodes.size() && nodes[k] != t.kind()) ++k;
  if (k == nodes.size())
    throw std::logic_error(std::string("rank_in_slot: no constructor slot for ") + kind_name(t.kind()));
  Nat c;
  switch (t.kind()) {
    case TermKind::Comp: {
      const Term& g = t.kid(0);
      const Term& f = t.kid(1);
      c = graded_pair(rank_obj(f.cod()), graded_pair(rank_in_slot(f), rank_in_slot(g)));
      break;
    }
    case TermKind::Pair:
      c = graded_pair(rank_in_slot(t.kid(0)), rank_in_slot(t.kid(1)));
      break;
    case TermKind::Cyl:
    case TermKind::Iter:
    case TermKind::Restrict:
      c = rank_in_slot(t.kid(0));
      break;
    case TermKind::DMinus:
      c = graded_pair(rank_ord_obj(t.kid(0).cod()),
                      graded_pair(rank_in_slot(t.kid(0)), rank_in_slot(t.kid(1))));
      break;
    default:
      throw std::logic_error("rank_in_slot: unexpected leaf");
  }
  return leaves.size() + c * nodes.size() + k;
}

Term pred_count_hash_term(const Nat& n) { return enumerate_slot(Obj::nat(), Obj::two(), n); }

Code pred_count_hash(const Nat& n) { return quote(pred_count_hash_term(n)); }

Nat pred_count_inverse(const Code& c) {
  Term t;
  try {
    t = decode(c);
  } catch (const IllTyped& e) {
    throw NotAPredicateCode(std::string("not a well-typed code: ") + e.what());
  }
  if (!(t.dom() == Obj::nat()) || !(t.cod() == Obj::two()))
    throw NotAPredicateCode("code has type " + print_code(quote_obj(t.dom())) + " -> " +
                            print_code(quote_obj(t.cod())) + ", not N -> 2");
  if (t.has_constval()) throw NotAPredicateCode("code contains a const literal");
  return rank_in_slot(t);
}

}  // namespace prr
