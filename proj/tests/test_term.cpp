#include "doctest.h"
#include "prr/machine.hpp"
#include "prr/surface.hpp"
#include "prr/term.hpp"
#include "support/gen.hpp"

using namespace prr;
using namespace prr::testing;
using namespace prr::mk;

namespace {

const Obj N = Obj::nat();
const Obj NN = Obj::prod(N, N);

EvalOptions plain() {
  EvalOptions o;
  o.intrinsics = false;
  return o;
}

std::uint64_t nat_of(const Value& v) { return v.as_nat().convert_to<std::uint64_t>(); }

}  // namespace

TEST_CASE("typing of the primitives") {
  Term it = iter(succ());
  CHECK(it.dom() == NN);
  CHECK(it.cod() == N);
  CHECK_THROWS_AS(comp(succ(), bang(N)), TypeMismatch);
  Term inc = incl(Obj::two());
  CHECK(inc.dom() == Obj::two());
  CHECK(inc.cod() == N);
  CHECK_THROWS_AS(iter(projl(N, N)), TypeMismatch);
  CHECK_THROWS_AS(Obj::abstr(N, succ()), TypeMismatch);
  auto [d, c] = typecheck(pair(succ(), id(N)));
  CHECK(d == N);
  CHECK(c == NN);
}

TEST_CASE("constructor depth") {
  CHECK(depth(succ()) == 0);
  CHECK(depth(comp(succ(), succ())) == 1);
  CHECK(depth(iter(comp(succ(), succ()))) == 2);
}

TEST_CASE("values render and parse") {
  Value v = P(V(3), P(Value::unit(), V(12)));
  CHECK(v.render() == "(3,((),12))");
  CHECK(parse_value("(3,((),12))") == v);
  CHECK(parse_value(" ( 3 , ( ( ) , 12 ) ) ") == v);
  CHECK_THROWS(parse_value("(3,"));
  CHECK_THROWS_AS(V(1).left(), EvalError);
}

TEST_CASE("structural evaluation of the primitives") {
  CHECK(eval_structural(id(N), V(4)) == V(4));
  CHECK(eval_structural(iter(succ()), P(V(3), V(5))) == V(8));
  CHECK(eval_structural(iter(succ()), P(V(3), V(5)), plain()) == V(8));
  CHECK(eval_structural(cyl(N, succ()), P(V(1), V(1))) == P(V(1), V(2)));
  CHECK(eval_structural(zero(NN), Value::unit()) == P(V(0), V(0)));
  CHECK(eval_structural(eqnat(), P(V(4), V(4))) == V(1));
  CHECK(eval_structural(not_(), V(1)) == V(0));
  CHECK_THROWS_AS(eval_structural(restrict(succ(), Obj::two()), V(1)), EvalError);
  CHECK(eval_structural(restrict(succ(), Obj::two()), V(0)) == V(1));
}

TEST_CASE("stdlib against host arithmetic, with and without intrinsics") {
  const auto& lib = stdlib();
  for (bool intrinsics : {true, false}) {
    EvalOptions o;
    o.intrinsics = intrinsics;
    auto ev = [&](const char* name, const Value& v) { return nat_of(eval_structural(lib.at(name), v, o)); };
    for (std::uint64_t x = 0; x < 13; ++x) {
      CHECK(ev("pred", V(x)) == (x ? x - 1 : 0));
      CHECK(ev("double", V(x)) == 2 * x);
      CHECK(ev("tri", V(x)) == x * (x + 1) / 2);
      CHECK(ev("is_zero", V(x)) == (x == 0));
      CHECK(ev("lt2", V(x)) == (x < 2));
      for (std::uint64_t y = 0; y < 13; ++y) {
        Value xy = P(V(x), V(y));
        CHECK(ev("add", xy) == x + y);
        CHECK(ev("monus", xy) == (x > y ? x - y : 0));
        CHECK(ev("mul", xy) == x * y);
        CHECK(ev("leq", xy) == (x <= y));
        CHECK(ev("eq", xy) == (x == y));
        CHECK(ev("cantor_pair", xy) == host_cantor(x, y));
        CHECK(ev("mod", xy) == (y ? x % y : x));
        CHECK(eval_structural(lib.at("swap"), xy, o) == P(V(y), V(x)));
        CHECK(eval_structural(lib.at("cantor_unpair"), V(host_cantor(x, y)), o) == xy);
      }
    }
    for (std::uint64_t a = 0; a < 2; ++a)
      for (std::uint64_t b = 0; b < 2; ++b) {
        CHECK(ev("and", P(V(a), V(b))) == (a && b));
        CHECK(ev("or", P(V(a), V(b))) == (a || b));
      }
    CHECK(ev("cond", P(V(1), P(V(3), V(4)))) == 3);
    CHECK(ev("cond", P(V(0), P(V(3), V(4)))) == 4);
  }
  EvalOptions o;
  CHECK(eval_structural(lib.at("monus"), P(V(3), V(5)), o) == V(0));
  CHECK(eval_structural(lib.at("mul"), P(V(6), V(7)), o) == V(42));
}

TEST_CASE("cantor_unpair term round-trips for all x, y < 2^10") {
  const Term& unpair = stdlib_entry("cantor_unpair");
  for (std::uint64_t x = 0; x < 1024; ++x)
    for (std::uint64_t y = 0; y < 1024; ++y)
      REQUIRE(eval_structural(unpair, V(host_cantor(x, y))) == P(V(x), V(y)));
}

TEST_CASE("definition by cases and equality at products") {
  const Obj A = Obj::prod(N, Obj::prod(Obj::unit(), N));
  Value a = P(V(1), P(Value::unit(), V(2)));
  Value b = P(V(1), P(Value::unit(), V(3)));
  CHECK(eval_structural(stdlib_equal(A), P(a, a)) == V(1));
  CHECK(eval_structural(stdlib_equal(A), P(a, b)) == V(0));
  CHECK(eval_structural(stdlib_cond(A), P(V(0), P(a, b))) == b);
  CHECK(eval_structural(stdlib_equal(A), P(a, b), plain()) == V(0));
}

TEST_CASE("sampled extensional equality") {
  CHECK(eq_sample(id(N), comp(stdlib_entry("pred"), succ()), 100).agree);
  auto r = eq_sample(succ(), id(N), 1);
  CHECK(!r.agree);
  CHECK(*r.witness == V(0));
  Term f = stdlib_entry("mul");
  CHECK(eq_sample(f, f, 50).agree);
}

TEST_CASE("values of subobjects are checked") {
  Obj even = Obj::abstr(N, comp(stdlib_entry("is_zero"), comp(stdlib_entry("mod"), pair(id(N), chain({succ(), succ(), zero(N), bang(N)})))));
  CHECK(value_check(even, V(4)));
  CHECK(!value_check(even, V(5)));
  CHECK(!value_check(N, P(V(1), V(1))));
  CHECK(zero_value(Obj::prod(even, Obj::unit())) == P(V(0), Value::unit()));
}

TEST_CASE("ordinal-shaped values") {
  CHECK(is_ordinal_object(N));
  CHECK(is_ordinal_object(Obj::prod(N, NN)));
  CHECK(!is_ordinal_object(Obj::prod(NN, N)));
  CHECK(value_to_ord(P(V(2), P(V(0), V(5)))).bracket() == "[2,0,5]");
  CHECK(value_to_ord(ord_to_value(*parse_bracket("[4,0,1]"))).bracket() == "[4,0,1]");
}

TEST_CASE("generated terms: intrinsics do not change results") {
  TermGen gen(11);
  for (int i = 0; i < 300; ++i) {
    Obj dom = gen.object(2), cod = gen.object(1);
    Term t = gen.term(dom, cod, 3);
    for (int j = 0; j < 5; ++j) {
      Value a = gen.value(dom, 6);
      REQUIRE(eval_structural(t, a) == eval_structural(t, a, plain()));
    }
  }
}
