#include "doctest.h"
#include "prr/coding.hpp"
#include "prr/machine.hpp"
#include "prr/surface.hpp"
#include "support/gen.hpp"

#include <sstream>

using namespace prr;
using namespace prr::testing;
using namespace prr::mk;

namespace {

const Obj N = Obj::nat();
const Obj NN = Obj::prod(N, N);

OrdPoly B(const char* s) { return *parse_bracket(s); }

// Type of the value the top frame is waiting for.
Obj input_obj(const Frame& f) {
  switch (f.kind) {
    case Frame::Kind::Apply:
      return f.term.dom();
    case Frame::Kind::PairLeft:
      return f.a;
    case Frame::Kind::PairRight:
      return f.b;
    case Frame::Kind::IterPending:
      return f.term.dom();
    case Frame::Kind::RestrictCheck:
      return f.a.carrier();
    case Frame::Kind::Guard:
      return Obj::two();
  }
  return Obj::unit();
}

}  // namespace

TEST_CASE("complexity clauses") {
  CHECK(succ().complexity().is_zero());
  CHECK(iter(succ()).complexity() == B("[0,1]"));
  CHECK(dminus(id(N), stdlib_entry("pred")).complexity() == B("[1]"));
  CHECK(comp(succ(), succ()).complexity() == B("[2]"));
  CHECK(pair(succ(), succ()).complexity() == B("[4]"));
  CHECK(cyl(N, succ()).complexity() == B("[2]"));
  CHECK(iter(comp(succ(), succ())).complexity() == B("[0,3]"));
  for (Term t : {cdot(), edot(), hash()}) CHECK(t.complexity() == B("[1]"));
}

TEST_CASE("frame costs") {
  CHECK(config_complexity(Config{{}, V(3)}).is_zero());
  CHECK(config_complexity(Config{{Frame::apply(succ())}, V(3)}) == B("[1]"));
  // k (c(g) + 2) + 1: each pending round still has to push and run g
  CHECK(frame_cost(Frame::iter_pending(succ(), 3)) == B("[7]"));
  CHECK(frame_cost(Frame::iter_pending(succ(), 0)) == B("[1]"));
  CHECK(frame_cost(Frame::pair_left(succ(), V(0), N)) == B("[3]"));
  CHECK(frame_cost(Frame::pair_right(V(0), N, N)) == B("[1]"));
}

TEST_CASE("single steps") {
  Config c = step(initial_config(succ(), V(4)));
  CHECK(c.halted());
  CHECK(c.current == V(5));

  c = step(initial_config(iter(succ()), P(V(3), V(2))));
  REQUIRE(c.frames.size() == 1);
  CHECK(c.frames[0] == Frame::iter_pending(succ(), 2));
  CHECK(c.current == V(3));
  for (int i = 0; i < 5; ++i) c = step(c);
  CHECK(c.halted());
  CHECK(c.current == V(5));

  Config d = step(initial_config(dminus(id(N), stdlib_entry("pred")), V(4)));
  CHECK(d.halted());
  CHECK(d.current == P(V(4), V(4)));

  Config h{{}, V(9)};
  CHECK(step(h) == h);
}

TEST_CASE("iterative evaluation") {
  Outcome o = eval_iterative(succ(), V(4), {.fuel = 10});
  CHECK(o.done());
  CHECK(o.value == V(5));
  CHECK(o.steps == 1);

  o = eval_iterative(quote(stdlib_entry("add")), P(V(2), V(3)), {.fuel = 10000});
  CHECK(o.done());
  CHECK(o.value == V(5));

  o = eval_iterative(iter(succ()), P(V(0), V(1000000000)), {.fuel = 100});
  CHECK(o.verdict == Verdict::FuelExhausted);
  CHECK(o.message == "fuel exhausted at step 100");

  o = eval_iterative(stdlib_entry("mul"), P(V(6), V(7)));
  CHECK(o.value == V(42));
  CHECK(descent_check(o.complexities).ok());
  CHECK(o.complexities.back().is_zero());
}

TEST_CASE("trace records") {
  std::ostringstream out;
  RunOptions opts;
  opts.fuel = 10;
  opts.trace = &out;
  Outcome o = eval_iterative(succ(), V(4), opts);
  CHECK(o.done());
  CHECK(out.str() ==
        "step=0 frames=\"[apply succ]\" complexity=[1] value=4\n"
        "step=1 frames=\"[]\" complexity=[] value=5\n");
}

TEST_CASE("restriction failures surface as evaluation errors") {
  Outcome o = eval_iterative(restrict(succ(), Obj::two()), V(1));
  CHECK(o.verdict == Verdict::EvalError);
  o = eval_iterative(restrict(succ(), Obj::two()), V(0));
  CHECK(o.value == V(1));
}

TEST_CASE("machine agrees with the structural evaluator and descends on generated terms") {
  TermGen gen(99);
  for (int i = 0; i < 400; ++i) {
    Obj dom = gen.object(2), cod = gen.object(1);
    Term t = gen.term(dom, cod, 4);
    for (int j = 0; j < 4; ++j) {
      Value a = gen.value(dom, 5);
      Outcome o = eval_iterative(t, a);
      REQUIRE_MESSAGE(o.done(), print_term(t));
      CHECK(o.value == eval_structural(t, a));
      auto d = descent_check(o.complexities);
      REQUIRE_MESSAGE(d.ok(), print_term(t));
    }
  }
}

TEST_CASE("configurations survive the value codec and relaunch") {
  TermGen gen(3);
  for (int i = 0; i < 60; ++i) {
    Obj dom = gen.object(2);
    Term t = gen.term(dom, N, 4);
    Value a = gen.value(dom, 4);
    Value want = eval_structural(t, a);
    Config c = initial_config(t, a);
    for (int s = 0; !c.halted(); ++s) {
      if (s % 3 == 0) {
        Value v = config_to_value(c);
        Config back = config_from_value(v);
        REQUIRE(back == c);
        CHECK(config_num(back) == value_num(v));
        CHECK(run_config(back).value == want);
      }
      c = step(c);
    }
  }
  CHECK_THROWS_AS(config_from_value(P(V(7), V(7))), IllTyped);
}

TEST_CASE("a folded configuration computes the rest of the run") {
  TermGen gen(17);
  for (int i = 0; i < 60; ++i) {
    Obj dom = gen.object(2);
    Term t = gen.term(dom, gen.object(1), 4);
    Value a = gen.value(dom, 4);
    Value want = eval_structural(t, a);
    Config c = initial_config(t, a);
    while (!c.halted()) {
      Term f = fold_config(c, input_obj(c.frames.back()));
      REQUIRE(eval_structural(f, c.current) == want);
      c = step(c);
    }
  }
}

TEST_CASE("complexity strictly drops at every transition") {
  Config c = initial_config(stdlib_entry("cantor_unpair"), V(40));
  OrdPoly prev = config_complexity(c);
  while (!c.halted()) {
    c = step(c);
    OrdPoly now = config_complexity(c);
    REQUIRE(now < prev);
    prev = now;
  }
  CHECK(c.current == P(V(4), V(4)));
}

TEST_CASE("objectivity report") {
  std::vector<Value> args;
  for (unsigned n = 0; n < 100; ++n) args.push_back(V(n));
  ObjectivityReport r = objectivity_check(id(N), args, 1000000);
  CHECK(r.ok());
  CHECK(r.cases == 100);
  r = objectivity_check(iter(succ()), {P(V(0), V(5000))}, 100);
  CHECK(r.exhausted == 1);
  CHECK(!r.ok());
}

TEST_CASE("code evaluation through the reflected step map") {
  Value cfg = config_to_value(initial_config(succ(), V(4)));
  Value after = eval_structural(edot(), cfg);
  CHECK(config_from_value(after).current == V(5));
  CHECK(eval_structural(cdot(), after) == V(0));
  CHECK(eval_structural(cdot(), cfg) == ord_to_value(B("[1]")));
  // junk is treated as halted
  CHECK(eval_structural(edot(), V(12)) == V(12));
  CHECK(eval_structural(cdot(), V(12)) == V(0));
}
