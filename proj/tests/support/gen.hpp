#pragma once

// Random well-typed terms and host-side oracles shared by the test binaries.

#include "prr/term.hpp"

#include <cstdint>
#include <optional>
#include <random>

namespace prr::testing {

inline Value V(std::uint64_t n) { return Value::nat(n); }
inline Value P(Value a, Value b) { return Value::pair(std::move(a), std::move(b)); }

inline std::uint64_t host_cantor(std::uint64_t x, std::uint64_t y) {
  return (x + y) * (x + y + 1) / 2 + y;
}

inline std::uint64_t host_gcd(std::uint64_t a, std::uint64_t b) {
  while (b) {
    std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

/// Generates terms over 1, N, 2 and products of those. Depth bounds the
/// constructor tree; iteration bodies only get affine growth so values stay
/// small enough for the step machine.
class TermGen {
 public:
  explicit TermGen(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t pick(std::uint64_t n) { return rng_() % n; }

  Obj object(int depth) {
    std::uint64_t r = pick(depth > 0 ? 6 : 4);
    switch (r) {
      case 0:
        return Obj::unit();
      case 1:
      case 2:
        return Obj::nat();
      case 3:
        return Obj::two();
      default:
        return Obj::prod(object(depth - 1), object(depth - 1));
    }
  }

  /// Some term dom -> cod.
  Term term(const Obj& dom, const Obj& cod, int depth) {
    using namespace mk;
    if (depth > 0 && pick(4) == 0) {
      Obj mid = object(1);
      return comp(term(mid, cod, depth - 1), term(dom, mid, depth - 1));
    }
    switch (cod.kind()) {
      case ObjKind::Unit:
        return bang(dom);
      case ObjKind::Prod:
        if (dom == cod && pick(3) == 0) return id(dom);
        if (dom.kind() == ObjKind::Prod && cod.left() == dom.left() && depth > 0 && pick(4) == 0)
          return cyl(dom.left(), term(dom.right(), cod.right(), depth - 1));
        return pair(term(dom, cod.left(), depth - 1), term(dom, cod.right(), depth - 1));
      case ObjKind::Two:
        return predicate(dom, depth);
      case ObjKind::Nat:
        return natural(dom, depth);
      default:
        break;
    }
    return bang(dom);
  }

  /// Projection from dom onto a component of type `want`, if one exists.
  std::optional<Term> project(const Obj& dom, const Obj& want) {
    using namespace mk;
    if (dom == want) return id(dom);
    if (dom.kind() != ObjKind::Prod) return std::nullopt;
    bool left_first = pick(2) == 0;
    for (int side = 0; side < 2; ++side) {
      bool left = (side == 0) == left_first;
      const Obj& part = left ? dom.left() : dom.right();
      if (auto p = project(part, want)) {
        Term pr = left ? projl(dom.left(), dom.right()) : projr(dom.left(), dom.right());
        return comp(*p, pr);
      }
    }
    return std::nullopt;
  }

  Term natural(const Obj& dom, int depth) {
    using namespace mk;
    const Obj N = Obj::nat();
    const Obj NN = Obj::prod(N, N);
    std::uint64_t r = depth > 0 ? pick(9) : pick(3);
    switch (r) {
      case 0:
        return comp(zero(N), bang(dom));
      case 1:
      case 2:
        if (auto p = project(dom, N)) return *p;
        return comp(succ(), comp(zero(N), bang(dom)));
      case 3:
        return comp(succ(), natural(dom, depth - 1));
      case 4:
        return comp(stdlib_entry("add"), term(dom, NN, depth - 1));
      case 5:
        return comp(stdlib_entry("monus"), term(dom, NN, depth - 1));
      case 6:
        return comp(stdlib_entry("pred"), natural(dom, depth - 1));
      case 7: {
        // affine iteration: a + k*c with small k
        Term body = pick(2) ? succ() : comp(succ(), succ());
        Term count = comp(stdlib_entry("mod"), pair(natural(dom, depth - 1),
                                                    chain({succ(), succ(), succ(), succ(), zero(N), bang(dom)})));
        return comp(iter(body), pair(natural(dom, depth - 1), count));
      }
      default:
        return comp(stdlib_cond(N), pair(predicate(dom, depth - 1),
                                         pair(natural(dom, depth - 1), natural(dom, depth - 1))));
    }
  }

  Term predicate(const Obj& dom, int depth) {
    using namespace mk;
    const Obj N = Obj::nat();
    const Obj T = Obj::two();
    std::uint64_t r = depth > 0 ? pick(8) : pick(2);
    switch (r) {
      case 0:
        return comp(pick(2) ? tt() : ff(), bang(dom));
      case 1:
        if (auto p = project(dom, T)) return *p;
        return comp(stdlib_entry("is_zero"), natural(dom, depth));
      case 2:
        return comp(not_(), predicate(dom, depth - 1));
      case 3:
        return comp(eqnat(), pair(natural(dom, depth - 1), natural(dom, depth - 1)));
      case 4:
        return comp(stdlib_entry("leq"), pair(natural(dom, depth - 1), natural(dom, depth - 1)));
      case 5:
        return comp(stdlib_and(), pair(predicate(dom, depth - 1), predicate(dom, depth - 1)));
      case 6:
        return comp(stdlib_entry("or"), pair(predicate(dom, depth - 1), predicate(dom, depth - 1)));
      default:
        return comp(stdlib_entry("is_zero"), natural(dom, depth - 1));
    }
  }

  /// A value of a generated object; naturals below `bound`.
  Value value(const Obj& o, std::uint64_t bound) {
    switch (o.kind()) {
      case ObjKind::Unit:
        return Value::unit();
      case ObjKind::Nat:
        return V(pick(bound));
      case ObjKind::Two:
        return V(pick(2));
      case ObjKind::Prod: {
        Value l = value(o.left(), bound);
        return P(std::move(l), value(o.right(), bound));
      }
      default:
        return Value::unit();
    }
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace prr::testing
