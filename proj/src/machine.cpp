#include "prr/machine.hpp"

#include "prr/surface.hpp"
#include "reflect.hpp"

#include <mutex>
#include <ostream>
#include <sstream>
#include <unordered_map>

namespace prr {

// ---------------------------------------------------------------------------
// Frames

Frame Frame::apply(Term t) {
  Frame f;
  f.kind = Kind::Apply;
  f.term = std::move(t);
  return f;
}

Frame Frame::pair_left(Term g, Value saved, Obj left_obj) {
  Frame f;
  f.kind = Kind::PairLeft;
  f.term = std::move(g);
  f.saved = std::move(saved);
  f.a = std::move(left_obj);
  return f;
}

Frame Frame::pair_right(Value left, Obj left_obj, Obj right_obj) {
  Frame f;
  f.kind = Kind::PairRight;
  f.saved = std::move(left);
  f.a = std::move(left_obj);
  f.b = std::move(right_obj);
  return f;
}

Frame Frame::iter_pending(Term g, Nat k) {
  Frame f;
  f.kind = Kind::IterPending;
  f.term = std::move(g);
  f.k = std::move(k);
  return f;
}

Frame Frame::restrict_check(Obj sub) {
  Frame f;
  f.kind = Kind::RestrictCheck;
  f.a = std::move(sub);
  return f;
}

Frame Frame::guard(Value saved, Obj sub) {
  Frame f;
  f.kind = Kind::Guard;
  f.saved = std::move(saved);
  f.a = std::move(sub);
  return f;
}

bool Frame::operator==(const Frame& o) const {
  return kind == o.kind && term == o.term && saved == o.saved && a == o.a && b == o.b && k == o.k;
}

Config initial_config(const Term& t, const Value& v) { return Config{{Frame::apply(t)}, v}; }

// ---------------------------------------------------------------------------
// Measure

namespace {

OrdPoly plus(const OrdPoly& x, unsigned n) { return ord_nat_sum(x, ord_from_nat(n)); }

}  // namespace

// Each cost exceeds the sum of the costs of the frames its transition pushes:
//   Apply(Comp g f)      c(f)+c(g)+3  ->  Apply(g), Apply(f)          c(f)+c(g)+2
//   Apply(Pair f g)      c(f)+c(g)+5  ->  PairLeft(g), Apply(f)       c(f)+c(g)+4
//   PairLeft(g)          c(g)+3       ->  PairRight, Apply(g)         c(g)+2
//   Apply(Cyl C g)       c(g)+3       ->  PairRight, Apply(g)         c(g)+2
//   Apply(Iter g) (a,n)  w(c(g)+1)+1  ->  IterPending(g,n)            n(c(g)+2)+1
//   IterPending(g,k+1)   (k+1)(c(g)+2)+1 -> IterPending(g,k), Apply(g) (k+1)(c(g)+2)
//   Apply(Restrict f S)  c(f)+c(chi)+5 -> RestrictCheck(S), Apply(f)  c(f)+c(chi)+4
//   RestrictCheck(S)     c(chi)+3     ->  Guard, Apply(chi)           c(chi)+2
// The Iter line is where the omega shift pays for an unbounded unfolding.
OrdPoly frame_cost(const Frame& f) {
  switch (f.kind) {
    case Frame::Kind::Apply:
      return plus(f.term.complexity(), 1);
    case Frame::Kind::PairLeft:
      return plus(f.term.complexity(), 3);
    case Frame::Kind::PairRight:
    case Frame::Kind::Guard:
      return ord_from_nat(1);
    case Frame::Kind::IterPending:
      return plus(ord_nat_scale(f.k, plus(f.term.complexity(), 2)), 1);
    case Frame::Kind::RestrictCheck:
      return plus(f.a.chi().complexity(), 3);
  }
  return ord_zero();
}

OrdPoly config_complexity(const Config& cfg) {
  OrdPoly sum;
  for (const auto& f : cfg.frames) sum = ord_nat_sum(sum, frame_cost(f));
  return sum;
}

// ---------------------------------------------------------------------------
// Stepping

namespace detail {

void charge(FuelMeter& meter) {
  if (meter.used >= meter.limit) throw FuelOut{meter.depth > 0};
  ++meter.used;
}

namespace {

struct Deeper {
  FuelMeter& m;
  explicit Deeper(FuelMeter& meter) : m(meter) { ++m.depth; }
  ~Deeper() { --m.depth; }
};

Value run_nested(const Term& t, const Value& v, FuelMeter& meter) {
  Config cfg = initial_config(t, v);
  while (!cfg.halted()) {
    charge(meter);
    step_in_place(cfg, meter);
  }
  return cfg.current;
}

Value machine_dminus(const Term& t, const Value& a, FuelMeter& meter) {
  Deeper scope(meter);
  Value cur = a;
  Nat n = 0;
  while (!value_to_ord(run_nested(t.kid(0), cur, meter)).is_zero()) {
    cur = run_nested(t.kid(1), cur, meter);
    ++n;
  }
  return Value::pair(a, Value::nat(n));
}

}  // namespace

std::optional<Value> apply_leaf(const Term& t, const Value& v) {
  switch (t.kind()) {
    case TermKind::Id:
    case TermKind::Incl:
    case TermKind::Embed:
      return v;
    case TermKind::Bang:
      return Value::unit();
    case TermKind::ZeroC:
      return zero_value(t.cod());
    case TermKind::Succ:
      return Value::nat(v.as_nat() + 1);
    case TermKind::ProjL:
      return v.left();
    case TermKind::ProjR:
      return v.right();
    case TermKind::TrueC:
      return Value::nat(1);
    case TermKind::FalseC:
      return Value::nat(0);
    case TermKind::NotC:
      return Value::nat(v.as_nat() == 1 ? 0 : 1);
    case TermKind::EqNat:
      return Value::nat(v.left().as_nat() == v.right().as_nat() ? 1 : 0);
    case TermKind::ConstVal:
      return t.literal();
    case TermKind::Cast:
      if (!value_check(t.cod(), v))
        throw EvalError("cast: " + v.render() + " is not a value of " + print_obj(t.cod()));
      return v;
    case TermKind::HashC:
      return term_to_value(pred_count_hash_term(v.as_nat()));
    case TermKind::CDot:
      return reflect_cdot(v);
    default:
      return std::nullopt;
  }
}

Value reflect_cdot(const Value& v) {
  try {
    return ord_to_value(config_complexity(config_from_value(v)));
  } catch (const IllTyped&) {
    return Value::nat(0);
  }
}

Value reflect_edot(const Value& v, FuelMeter& meter) {
  Config cfg;
  try {
    cfg = config_from_value(v);
  } catch (const IllTyped&) {
    return v;
  }
  if (cfg.halted()) return v;
  Deeper scope(meter);
  charge(meter);
  step_in_place(cfg, meter);
  return config_to_value(cfg);
}

}  // namespace detail

void step_in_place(Config& cfg, FuelMeter& meter) {
  using K = Frame::Kind;
  if (cfg.frames.empty()) return;
  Frame top = std::move(cfg.frames.back());
  cfg.frames.pop_back();
  Value& cur = cfg.current;
  auto& st = cfg.frames;
  switch (top.kind) {
    case K::PairLeft: {
      Obj right_obj = top.term.cod();
      st.push_back(Frame::pair_right(std::move(cur), std::move(top.a), std::move(right_obj)));
      st.push_back(Frame::apply(std::move(top.term)));
      cur = std::move(top.saved);
      return;
    }
    case K::PairRight:
      cur = Value::pair(std::move(top.saved), std::move(cur));
      return;
    case K::IterPending:
      if (top.k == 0) return;
      top.k -= 1;
      {
        Term g = top.term;
        st.push_back(std::move(top));
        st.push_back(Frame::apply(std::move(g)));
      }
      return;
    case K::RestrictCheck: {
      Term chi = top.a.chi();
      st.push_back(Frame::guard(cur, std::move(top.a)));
      st.push_back(Frame::apply(std::move(chi)));
      return;
    }
    case K::Guard:
      if (cur.as_nat() != 1)
        throw EvalError("restrict: " + top.saved.render() + " is not in " + print_obj(top.a));
      cur = std::move(top.saved);
      return;
    case K::Apply:
      break;
  }

  const Term& t = top.term;
  if (auto leaf = detail::apply_leaf(t, cur)) {
    cur = std::move(*leaf);
    return;
  }
  switch (t.kind()) {
    case TermKind::Comp:
      st.push_back(Frame::apply(t.kid(0)));
      st.push_back(Frame::apply(t.kid(1)));
      return;
    case TermKind::Pair:
      st.push_back(Frame::pair_left(t.kid(1), cur, t.kid(0).cod()));
      st.push_back(Frame::apply(t.kid(0)));
      return;
    case TermKind::Cyl: {
      Value c = cur.left();
      Value a = cur.right();
      st.push_back(Frame::pair_right(std::move(c), t.objs()[0], t.kid(0).cod()));
      st.push_back(Frame::apply(t.kid(0)));
      cur = std::move(a);
      return;
    }
    case TermKind::Iter: {
      Nat n = cur.right().as_nat();
      Value a = cur.left();
      st.push_back(Frame::iter_pending(t.kid(0), std::move(n)));
      cur = std::move(a);
      return;
    }
    case TermKind::Restrict:
      st.push_back(Frame::restrict_check(t.objs()[0]));
      st.push_back(Frame::apply(t.kid(0)));
      return;
    case TermKind::DMinus:
      cur = detail::machine_dminus(t, cur, meter);
      return;
    case TermKind::EDot:
      cur = detail::reflect_edot(cur, meter);
      return;
    default:
      break;
  }
  throw EvalError(std::string("no machine rule for ") + kind_name(t.kind()));
}

Config step(Config cfg, FuelMeter& meter) {
  step_in_place(cfg, meter);
  return cfg;
}

Config step(Config cfg) {
  FuelMeter meter;
  step_in_place(cfg, meter);
  return cfg;
}

// ---------------------------------------------------------------------------
// Rendering

std::string render_frame(const Frame& f) {
  switch (f.kind) {
    case Frame::Kind::Apply:
      return "apply " + render_term(f.term);
    case Frame::Kind::PairLeft:
      return "pairleft " + render_term(f.term) + " @" + f.saved.render();
    case Frame::Kind::PairRight:
      return "pairright " + f.saved.render();
    case Frame::Kind::IterPending:
      return "iter " + render_term(f.term) + " x" + f.k.str();
    case Frame::Kind::RestrictCheck:
      return "check " + print_obj(f.a);
    case Frame::Kind::Guard:
      return "guard " + f.saved.render();
  }
  return "?";
}

// Top of stack first.
std::string render_frames(const Config& cfg) {
  std::string out = "[";
  for (std::size_t i = cfg.frames.size(); i-- > 0;) {
    out += render_frame(cfg.frames[i]);
    if (i) out += " | ";
  }
  return out + "]";
}

// ---------------------------------------------------------------------------
// Configurations as values

namespace {

struct ObjCodec {
  std::mutex mu;
  std::unordered_map<const ObjNode*, std::pair<Obj, Value>> to;
  std::unordered_map<const void*, std::pair<Value, Obj>> from;
};

ObjCodec& obj_codec() {
  static ObjCodec c;
  return c;
}

Value obj_value(const Obj& o) {
  auto& c = obj_codec();
  {
    std::lock_guard lock(c.mu);
    if (auto it = c.to.find(o.id()); it != c.to.end()) return it->second.second;
  }
  Value v = code_to_value(quote_obj(o));
  std::lock_guard lock(c.mu);
  c.to.emplace(o.id(), std::make_pair(o, v));
  return v;
}

Obj obj_from(const Value& v) {
  auto& c = obj_codec();
  const void* key = v.identity();
  if (key) {
    std::lock_guard lock(c.mu);
    if (auto it = c.from.find(key); it != c.from.end()) return it->second.second;
  }
  Obj o = decode_obj(code_from_value(v));
  if (key) {
    std::lock_guard lock(c.mu);
    c.from.emplace(key, std::make_pair(v, o));
  }
  return o;
}

Value list_of(std::initializer_list<Value> xs) {
  std::vector<Value> v(xs);
  Value acc;
  for (std::size_t i = v.size(); i-- > 0;) acc = Value::pair(v[i], acc);
  return acc;
}

std::vector<Value> items_of(const Value& list) {
  std::vector<Value> out;
  for (const Value* cur = &list; !cur->is_unit(); cur = &cur->right()) {
    if (!cur->is_pair()) throw IllTyped("configuration: malformed list");
    out.push_back(cur->left());
  }
  return out;
}

Value frame_value(const Frame& f) {
  using K = Frame::Kind;
  Value tag = Value::nat(static_cast<unsigned>(f.kind));
  switch (f.kind) {
    case K::Apply:
      return Value::pair(tag, list_of({term_to_value(f.term)}));
    case K::PairLeft:
      return Value::pair(tag, list_of({term_to_value(f.term), f.saved, obj_value(f.a)}));
    case K::PairRight:
      return Value::pair(tag, list_of({f.saved, obj_value(f.a), obj_value(f.b)}));
    case K::IterPending:
      return Value::pair(tag, list_of({term_to_value(f.term), Value::nat(f.k)}));
    case K::RestrictCheck:
      return Value::pair(tag, list_of({obj_value(f.a)}));
    case K::Guard:
      return Value::pair(tag, list_of({f.saved, obj_value(f.a)}));
  }
  return Value{};
}

Frame frame_from(const Value& v) {
  using K = Frame::Kind;
  if (!v.is_pair() || !v.left().is_nat() || v.left().as_nat() > 5)
    throw IllTyped("configuration: bad frame " + v.render());
  auto kind = static_cast<K>(static_cast<unsigned>(v.left().as_nat()));
  auto items = items_of(v.right());
  auto need = [&](std::size_t n) {
    if (items.size() != n) throw IllTyped("configuration: frame arity");
  };
  auto subobject = [](Obj o) {
    if (!o.is_subobject()) throw IllTyped("configuration: check frame on a non-subobject");
    return o;
  };
  switch (kind) {
    case K::Apply:
      need(1);
      return Frame::apply(term_from_value(items[0]));
    case K::PairLeft:
      need(3);
      return Frame::pair_left(term_from_value(items[0]), items[1], obj_from(items[2]));
    case K::PairRight:
      need(3);
      return Frame::pair_right(items[0], obj_from(items[1]), obj_from(items[2]));
    case K::IterPending: {
      need(2);
      if (!items[1].is_nat()) throw IllTyped("configuration: iteration counter");
      Term g = term_from_value(items[0]);
      if (!(g.dom() == g.cod())) throw IllTyped("configuration: iterated map is not an endomap");
      return Frame::iter_pending(std::move(g), items[1].as_nat());
    }
    case K::RestrictCheck:
      need(1);
      return Frame::restrict_check(subobject(obj_from(items[0])));
    case K::Guard:
      need(2);
      return Frame::guard(items[0], subobject(obj_from(items[1])));
  }
  throw IllTyped("configuration: bad frame");
}

}  // namespace

Value config_to_value(const Config& cfg) {
  Value stack;
  for (const auto& f : cfg.frames) stack = Value::pair(frame_value(f), stack);
  return Value::pair(stack, cfg.current);
}

Config config_from_value(const Value& v) {
  if (!v.is_pair()) throw IllTyped("configuration must be (stack, current)");
  auto items = items_of(v.left());
  Config cfg;
  cfg.current = v.right();
  cfg.frames.reserve(items.size());
  for (std::size_t i = items.size(); i-- > 0;) cfg.frames.push_back(frame_from(items[i]));
  return cfg;
}

Nat config_num(const Config& cfg) { return value_num(config_to_value(cfg)); }

namespace {

Term frame_term(const Frame& f) {
  using namespace mk;
  const Obj N = Obj::nat();
  switch (f.kind) {
    case Frame::Kind::Apply:
      return f.term;
    case Frame::Kind::PairLeft: {
      const Obj A = f.term.dom();
      return pair(id(f.a), chain({f.term, constval(A, f.saved), bang(f.a)}));
    }
    case Frame::Kind::PairRight:
      return pair(comp(constval(f.a, f.saved), bang(f.b)), id(f.b));
    case Frame::Kind::IterPending: {
      const Obj A = f.term.dom();
      return comp(iter(f.term), pair(id(A), comp(constval(N, Value::nat(f.k)), bang(A))));
    }
    case Frame::Kind::RestrictCheck:
      return restrict(id(f.a.carrier()), f.a);
    case Frame::Kind::Guard:
      return restrict(comp(constval(f.a.carrier(), f.saved), bang(Obj::two())), f.a);
  }
  throw std::logic_error("frame_term");
}

}  // namespace

Term fold_config(const Config& cfg, const Obj& current_obj) {
  Term acc = mk::id(current_obj);
  for (std::size_t i = cfg.frames.size(); i-- > 0;) acc = mk::comp(frame_term(cfg.frames[i]), acc);
  return acc;
}

// ---------------------------------------------------------------------------
// Runs

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Done: return "Done";
    case Verdict::FuelExhausted: return "FuelExhausted";
    case Verdict::DescentViolation: return "DescentViolation";
    case Verdict::StatViolation: return "StatViolation";
    case Verdict::EvalError: return "EvalError";
    case Verdict::NestedFuelExhausted: return "NestedFuelExhausted";
  }
  return "?";
}

std::string trace_record(std::uint64_t step, const Config& cfg, const OrdPoly& c) {
  return "step=" + std::to_string(step) + " frames=\"" + render_frames(cfg) +
         "\" complexity=" + c.bracket() + " value=" + cfg.current.render();
}

Outcome run_config(Config cfg, const RunOptions& opts) {
  Outcome o;
  FuelMeter meter;
  meter.limit = opts.fuel;
  std::uint64_t n = 0;
  OrdPoly c = config_complexity(cfg);
  o.max_complexity = c;

  auto observe = [&] {
    if (opts.record_complexities) o.complexities.push_back(c);
    if (opts.trace) *opts.trace << trace_record(n, cfg, c) << '\n';
    if (opts.tail) {
      o.tail.push_back(TraceEntry{n, c, cfg});
      if (o.tail.size() > opts.tail) o.tail.pop_front();
    }
  };
  observe();

  try {
    while (!c.is_zero()) {
      if (meter.used >= meter.limit) {
        o.verdict = Verdict::FuelExhausted;
        o.message = "fuel exhausted at step " + std::to_string(n);
        break;
      }
      ++meter.used;
      step_in_place(cfg, meter);
      ++n;
      OrdPoly next = config_complexity(cfg);
      if (!(next < c)) {
        o.verdict = Verdict::DescentViolation;
        o.violation_step = n - 1;
        o.before = c;
        o.after = next;
        c = std::move(next);
        observe();
        o.message = "complexity did not descend at step " + std::to_string(n - 1) + ": " +
                    o.before.bracket() + " -> " + o.after.bracket();
        break;
      }
      c = std::move(next);
      observe();
    }
    if (c.is_zero() && o.verdict == Verdict::Done) {
      Config again = cfg;
      step_in_place(again, meter);
      if (!(again == cfg) || !cfg.halted()) {
        o.verdict = Verdict::StatViolation;
        o.violation_step = n;
        o.message = "configuration at complexity 0 is not stationary";
      } else {
        o.value = cfg.current;
      }
    }
  } catch (const FuelOut& f) {
    o.verdict = f.nested ? Verdict::NestedFuelExhausted : Verdict::FuelExhausted;
    o.message = std::string(f.nested ? "nested run exhausted the fuel" : "fuel exhausted") +
                " during step " + std::to_string(n);
  } catch (const EvalError& e) {
    o.verdict = Verdict::EvalError;
    o.message = e.what();
  } catch (const IllTyped& e) {
    o.verdict = Verdict::EvalError;
    o.message = e.what();
  }
  o.steps = n;
  o.fuel_used = meter.used;
  return o;
}

Outcome eval_iterative(const Term& u, const Value& v, const RunOptions& opts) {
  return run_config(initial_config(u, v), opts);
}

Outcome eval_iterative(const Code& u, const Value& v, const RunOptions& opts) {
  Term t;
  try {
    t = decode(u);
  } catch (const IllTyped& e) {
    Outcome o;
    o.verdict = Verdict::EvalError;
    o.message = e.what();
    return o;
  }
  return eval_iterative(t, v, opts);
}

std::string describe(const Outcome& o) {
  switch (o.verdict) {
    case Verdict::Done:
      return o.value.render();
    default:
      return std::string(verdict_name(o.verdict)) + ": " + o.message;
  }
}

ObjectivityReport objectivity_check(const Term& t, const std::vector<Value>& args,
                                    std::uint64_t fuel) {
  ObjectivityReport r;
  RunOptions opts;
  opts.fuel = fuel;
  opts.tail = 0;
  for (const auto& a : args) {
    ++r.cases;
    std::optional<Value> expect;
    std::string why;
    try {
      expect = eval_structural(t, a);
    } catch (const EvalError& e) {
      why = e.what();
    }
    Outcome o = eval_iterative(t, a, opts);
    r.max_steps = std::max(r.max_steps, o.steps);
    if (r.max_complexity < o.max_complexity) r.max_complexity = o.max_complexity;
    bool descent = o.verdict != Verdict::DescentViolation && descent_check(o.complexities).ok();
    if (!descent) ++r.descent_violations;
    if (o.done() && expect && o.value == *expect) {
      ++r.agree;
    } else if (!expect && o.verdict == Verdict::EvalError) {
      ++r.agree;  // both sides reject the argument
    } else if (o.verdict == Verdict::FuelExhausted || o.verdict == Verdict::NestedFuelExhausted) {
      ++r.exhausted;
      r.details.push_back("fuel at " + a.render());
    } else if (o.done() || (expect && o.verdict == Verdict::EvalError)) {
      ++r.mismatches;
      r.details.push_back("mismatch at " + a.render() + ": structural " +
                          (expect ? expect->render() : "error (" + why + ")") + ", iterative " +
                          describe(o));
    } else {
      ++r.errors;
      r.details.push_back("at " + a.render() + ": " + describe(o));
    }
  }
  return r;
}

}  // namespace prr
