#include "prr/machine.hpp"

#include "prr/surface.hpp"
#include "reflect.hpp"

#include <functional>
#include <unordered_map>

namespace prr {

namespace {

using Native = std::function<Value(const Value&)>;

Value nat(Nat n) { return Value::nat(std::move(n)); }
Value bit(bool b) { return Value::nat(b ? 1 : 0); }
Nat monus(const Nat& x, const Nat& y) { return x > y ? Nat(x - y) : Nat(0); }

const std::unordered_map<const TermNode*, Native>& intrinsics() {
  static const auto table = [] {
    std::unordered_map<const TermNode*, Native> m;
    auto def = [&](const char* name, Native f) { m.emplace(stdlib_entry(name).id(), std::move(f)); };
    auto l = [](const Value& v) -> const Nat& { return v.left().as_nat(); };
    auto r = [](const Value& v) -> const Nat& { return v.right().as_nat(); };
    def("pred", [](const Value& v) { return nat(monus(v.as_nat(), 1)); });
    def("add", [=](const Value& v) { return nat(l(v) + r(v)); });
    def("monus", [=](const Value& v) { return nat(monus(l(v), r(v))); });
    def("mul", [=](const Value& v) { return nat(l(v) * r(v)); });
    def("is_zero", [](const Value& v) { return bit(v.as_nat() == 0); });
    def("swap", [](const Value& v) { return Value::pair(v.right(), v.left()); });
    def("leq", [=](const Value& v) { return bit(l(v) <= r(v)); });
    def("eq", [=](const Value& v) { return bit(l(v) == r(v)); });
    def("double", [](const Value& v) { return nat(2 * v.as_nat()); });
    def("lt2", [](const Value& v) { return bit(v.as_nat() < 2); });
    def("cond", [](const Value& v) {
      return v.left().as_nat() == 1 ? v.right().left() : v.right().right();
    });
    def("and", [=](const Value& v) { return bit(l(v) == 1 && r(v) == 1); });
    def("or", [=](const Value& v) { return bit(l(v) == 1 || r(v) == 1); });
    def("tri", [](const Value& v) {
      const Nat& n = v.as_nat();
      return nat(n * (n + 1) / 2);
    });
    def("cantor_pair", [=](const Value& v) { return nat(cantor_pair(l(v), r(v))); });
    def("cantor_unpair", [](const Value& v) {
      auto [x, y] = cantor_unpair(v.as_nat());
      return Value::pair(nat(x), nat(y));
    });
    def("mod", [=](const Value& v) { return nat(r(v) == 0 ? l(v) : Nat(l(v) % r(v))); });
    return m;
  }();
  return table;
}

struct Structural {
  const EvalOptions& opts;
  FuelMeter meter;

  explicit Structural(const EvalOptions& o) : opts(o) { meter.limit = o.search_budget; }

  void spend() {
    if (meter.used >= meter.limit) throw EvalError("reflected search budget exhausted");
    ++meter.used;
  }

  Value eval(const Term& t, const Value& v) {
    if (opts.intrinsics) {
      const auto& table = intrinsics();
      if (auto it = table.find(t.id()); it != table.end()) return it->second(v);
    }
    if (auto leaf = detail::apply_leaf(t, v)) return *leaf;
    switch (t.kind()) {
      case TermKind::Pair:
        return Value::pair(eval(t.kid(0), v), eval(t.kid(1), v));
      case TermKind::Comp:
        return eval(t.kid(0), eval(t.kid(1), v));
      case TermKind::Cyl:
        return Value::pair(v.left(), eval(t.kid(0), v.right()));
      case TermKind::Iter: {
        const Term& g = t.kid(0);
        const Nat& n = v.right().as_nat();
        if (opts.intrinsics && g.kind() == TermKind::Succ) return nat(v.left().as_nat() + n);
        Value a = v.left();
        for (Nat i = 0; i < n; ++i) {
          Value b = eval(g, a);
          // g(a) = a: the remaining rounds change nothing.
          if (opts.intrinsics && b == a) break;
          a = std::move(b);
        }
        return a;
      }
      case TermKind::Restrict: {
        Value w = eval(t.kid(0), v);
        if (eval(t.objs()[0].chi(), w).as_nat() != 1)
          throw EvalError("restrict: " + w.render() + " is not in " + print_obj(t.objs()[0]));
        return w;
      }
      case TermKind::DMinus: {
        Value cur = v;
        Nat n = 0;
        while (!value_to_ord(eval(t.kid(0), cur)).is_zero()) {
          spend();
          cur = eval(t.kid(1), cur);
          ++n;
        }
        return Value::pair(v, nat(n));
      }
      case TermKind::EDot:
        try {
          return detail::reflect_edot(v, meter);
        } catch (const FuelOut&) {
          throw EvalError("reflected search budget exhausted");
        }
      default:
        break;
    }
    throw EvalError(std::string("no structural rule for ") + kind_name(t.kind()));
  }
};

}  // namespace

Value eval_structural(const Term& t, const Value& v, const EvalOptions& opts) {
  Structural s(opts);
  return s.eval(t, v);
}

}  // namespace prr
