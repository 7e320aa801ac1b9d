#include "doctest.h"
#include "prr/diagonal.hpp"
#include "prr/surface.hpp"
#include "support/gen.hpp"

using namespace prr;
using namespace prr::testing;
using namespace prr::mk;

namespace {
const Obj N = Obj::nat();
}

TEST_CASE("the code evaluator is typed X x N -> 2") {
  Term e = build_eval_term();
  CHECK(e.dom() == Obj::prod(Obj::univ(), N));
  CHECK(e.cod() == Obj::two());
  CHECK(decode(build_eval_code()) == e);
}

TEST_CASE("the code evaluator agrees with structural evaluation on plain predicates") {
  Term e = build_eval_term();
  TermGen gen(77);
  for (int i = 0; i < 20; ++i) {
    Term p = gen.predicate(N, 2);
    Value code = term_to_value(p);
    for (unsigned n = 0; n < 20; ++n) {
      Value want = eval_structural(p, V(n));
      REQUIRE_MESSAGE(eval_structural(e, P(code, V(n))) == want, print_term(p));
    }
  }
  Value lt2 = term_to_value(stdlib_entry("lt2"));
  for (unsigned n = 0; n < 4; ++n) {
    Outcome o = eval_iterative(e, P(lt2, V(n)));
    REQUIRE(o.done());
    CHECK(o.value == V(n < 2));
    CHECK(descent_check(o.complexities).ok());
  }
}

TEST_CASE("the anti-diagonal and its index") {
  Term d = build_antidiagonal_term();
  CHECK(d.dom() == N);
  CHECK(d.cod() == Obj::two());
  Code c = build_antidiagonal();
  Nat q = pred_count_inverse(c);
  CHECK(pred_count_hash(q) == c);
  CHECK(eval_structural(hash(), Value::nat(q)) == code_to_value(c));
}

TEST_CASE("the liar run under small fuel") {
  LiarReport a = run_liar(3000);
  LiarReport b = run_liar(3000);
  CHECK(a.serialize() == b.serialize());
  CHECK(a.verdict != LiarVerdict::ContradictionValue);
  CHECK(a.q == pred_count_inverse(a.d_code));
  std::string s = a.serialize();
  for (const char* key : {"d_code=", "d_num=", "q=", "fuel=3000\n", "verdict=", "outcome=", "steps=",
                          "fuel_used=", "descent=", "complexity_head=", "complexity_tail="})
    CHECK_MESSAGE(s.find(key) != std::string::npos, key);
  CHECK(a.descent_ok);
}
