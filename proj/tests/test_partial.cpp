#include "doctest.h"
#include "prr/partial.hpp"
#include "prr/surface.hpp"
#include "support/gen.hpp"

using namespace prr;
using namespace prr::testing;
using namespace prr::mk;

namespace {

const Obj N = Obj::nat();
const Obj NN = Obj::prod(N, N);

std::string corpus(const std::string& rel) { return std::string(PRR_SOURCE_DIR) + "/corpus/" + rel; }

// Host Euclid: (gcd, number of steps).
std::pair<std::uint64_t, std::uint64_t> host_euclid(std::uint64_t x, std::uint64_t y) {
  std::uint64_t k = 0;
  while (y) {
    std::uint64_t r = x % y;
    x = y;
    y = r;
    ++k;
  }
  return {x, k};
}

Term numeral(unsigned k) {
  Term t = zero(N);
  for (unsigned i = 0; i < k; ++i) t = comp(succ(), t);
  return t;
}

}  // namespace

TEST_CASE("mu search") {
  // second component >= 3
  Term phi = comp(stdlib_entry("leq"), pair(comp(numeral(3), bang(NN)), projr(N, N)));
  CHECK(*mu_search(phi, V(17), 10) == 3);
  CHECK(!mu_search(phi, V(17), 3).has_value());
  Term never = comp(ff(), bang(NN));
  CHECK(!mu_search(never, V(0), 50).has_value());
  CHECK(!brute_force_min(never, V(0), 50).has_value());
  CHECK(*brute_force_min(phi, V(2), 10) == 3);
}

TEST_CASE("mu search agrees with a full scan on generated predicates") {
  TermGen gen(41);
  std::vector<Value> args;
  for (unsigned a = 0; a < 10; ++a) args.push_back(V(a));
  for (int i = 0; i < 30; ++i) {
    Term phi = gen.predicate(NN, 3);
    auto r = mu_agreement_check(phi, args, 40);
    CHECK(r.ok());
  }
}

TEST_CASE("applying partial maps") {
  PartialMap mul = wrap_total(stdlib_entry("mul"));
  ParResult r = par_apply(mul, P(V(6), V(7)), 10);
  CHECK(r.defined);
  CHECK(r.value == V(42));
  CHECK(r.witness == 0);

  PartialMap empty = make_partial(N, N, comp(ff(), bang(NN)), projl(N, N));
  CHECK(!par_apply(empty, V(3), 100).defined);

  ParResult g = par_apply(gcd_partial(), P(V(12), V(18)), 100);
  CHECK(g.defined);
  CHECK(g.value == V(6));
  CHECK(g.witness == 3);
}

TEST_CASE("composing partial maps") {
  PartialMap idp = wrap_total(id(N));
  PartialMap half = parse_partial(read_file(corpus("partial/half.pr")));
  PartialMap both = par_compose(idp, half);
  for (unsigned n = 0; n < 100; ++n) {
    // composite witness cantor(n / 2, 0) stays below 1300
    ParResult a = par_apply(half, V(n), 200);
    ParResult b = par_apply(both, V(n), 1300);
    CHECK(a.defined == b.defined);
    if (a.defined) CHECK(a.value == b.value);
  }
  PartialMap ss = par_compose(wrap_total(succ()), wrap_total(stdlib_entry("add")));
  CHECK(par_apply(ss, P(V(2), V(3)), 10).value == V(6));
  // undefined first stage
  CHECK(!par_apply(par_compose(idp, half), V(7), 1000).defined);
}

TEST_CASE("the mu middle inverse of a partial map") {
  PartialMap s = wrap_total(succ());
  PartialMap g = middle_inverse_partial(s);
  ParResult r = par_apply(g, V(5), 1000);
  CHECK(r.defined);
  CHECK(r.value == V(4));
  CHECK(!par_apply(g, V(0), 1000).defined);

  for (const char* file : {"partial/half.pr", "partial/pred.pr", "partial/gcd.pr"}) {
    PartialMap f = parse_partial(read_file(corpus(file)));
    std::vector<Value> args;
    for (unsigned n = 0; n < 30; ++n) args.push_back(cont(f.base, zero_value(f.base), n));
    PartialLaw law = partial_law_check(f, middle_inverse_partial(f), args, 20000);
    CHECK_MESSAGE(law.ok(), file);
    CHECK(law.defined > 0);
  }
}

TEST_CASE("structural middle inverses from the rules") {
  StructuralInverse s = structural_middle_inverse(succ());
  CHECK(s.term == stdlib_entry("pred"));
  Term law = chain({succ(), s.term, succ()});
  for (unsigned n = 0; n < 1000; ++n) REQUIRE(eval_structural(law, V(n)) == V(n + 1));

  Term g = iter(comp(succ(), succ()));
  CHECK(structural_middle_inverse(g).term == pair(id(N), comp(zero(N), bang(N))));
  CHECK(structural_middle_inverse(g).kind == InverseKind::Section);
  CHECK(structural_middle_inverse(projl(N, N)).term == pair(id(N), comp(zero(N), bang(N))));
  CHECK_THROWS_AS(structural_middle_inverse(restrict(succ(), Obj::two())), UnsupportedConstructor);
  CHECK_THROWS_AS(structural_middle_inverse(stdlib_entry("is_zero")), UnsupportedConstructor);
}

TEST_CASE("the composition rule alone cannot certify mul") {
  StructuralInverse r = rule_middle_inverse(stdlib_entry("mul"));
  CHECK(r.kind == InverseKind::Unverified);
  StructuralInverse s = structural_middle_inverse(stdlib_entry("mul"));
  CHECK(s.kind == InverseKind::Search);
  CHECK(eq_sample(chain({stdlib_entry("mul"), s.term, stdlib_entry("mul")}), stdlib_entry("mul"), 200).agree);
}

TEST_CASE("the search inverse only looks below its bound") {
  // n - 100: the preimage of b is b + 100, beyond cantor(b, b) + 1 for b < 9
  Term f = comp(stdlib_entry("monus"), pair(id(N), comp(numeral(100), bang(N))));
  Term g = search_middle_inverse(f);
  Term law = chain({f, g, f});
  CHECK(eval_structural(law, V(150)) == V(50));
  CHECK(eval_structural(f, V(101)) == V(1));
  CHECK(eval_structural(law, V(101)) == V(0));
}

TEST_CASE("total middle inverse by search") {
  TotalInverse inv = middle_inverse_total(succ(), V(0), 100);
  CHECK(inv(V(7)).value == V(6));
  CHECK(inv(V(7)).found);
  CHECK(inv(V(0)).value == V(0));
  CHECK(!inv(V(0)).found);
}

TEST_CASE("gcd as a complexity-controlled iteration") {
  CCIInstance gcd = gcd_cci();
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    std::uint64_t x = rng() % 500, y = rng() % 500;
    CciOutcome o = cci_run(gcd, P(V(x), V(y)), 100000);
    REQUIRE(o.done());
    auto [g, k] = host_euclid(x, y);
    CHECK(o.value == P(V(g), V(0)));
    CHECK(o.index == k);
    CciOutcome d = d_minus(gcd, P(V(x), V(y)), 100000);
    CHECK(d.value == P(P(V(x), V(y)), V(k)));
  }
  CciOutcome z = cci_run(gcd, P(V(9), V(0)), 10);
  CHECK(z.value == P(V(9), V(0)));
  CHECK(z.index == 0);
}

TEST_CASE("descent and stationarity are checked") {
  CCIInstance stuck = make_cci(N, id(N), id(N));
  CciOutcome o = cci_run(stuck, V(3), 100);
  CHECK(o.verdict == Verdict::DescentViolation);
  CHECK(*o.violation_step == 0);
  CHECK(cci_run(stuck, V(0), 100).value == V(0));

  CCIInstance moving = make_cci(N, comp(zero(N), bang(N)), succ());
  CHECK(cci_run(moving, V(3), 100).verdict == Verdict::StatViolation);

  std::vector<Value> samples{V(0), V(1), V(2)};
  CHECK(cci_audit(make_cci(N, id(N), stdlib_entry("pred")), samples).ok());
  CHECK(cci_audit(stuck, samples).violations.size() == 2);
}

TEST_CASE("ordinal-valued complexity") {
  CCIInstance lex = parse_cci_instance(read_file(corpus("cci/lex_countdown.pr")));
  CciOutcome o = cci_run(lex, P(V(2), V(1)), 1000);
  REQUIRE(o.done());
  CHECK(o.value == P(V(0), V(0)));
  // (2,1) -> (2,0) -> (1,6) -> 6 steps -> (1,0) -> (0,5) -> 5 steps -> (0,0)
  CHECK(o.index == 1 + 1 + 6 + 1 + 5);
}

TEST_CASE("definition by an existential") {
  Term phi = comp(eqnat(), pair(projr(N, N), comp(succ(), projl(N, N))));
  ExistsResult r = define_by_exists(phi, V(4), V(0), 100);
  CHECK(r.found);
  CHECK(r.value == V(5));
  CHECK(!define_by_exists(comp(ff(), bang(NN)), V(4), V(0), 100).found);
}
