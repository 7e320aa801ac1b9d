#include "doctest.h"
#include "prr/corpus.hpp"
#include "prr/surface.hpp"
#include "support/gen.hpp"

using namespace prr;
using namespace prr::testing;
using namespace prr::mk;

namespace {
const Obj N = Obj::nat();
}

TEST_CASE("sampling specs") {
  SampleSpec c = parse_sample_spec("cont 120");
  CHECK(c.mode == SampleSpec::Mode::Cont);
  CHECK(c.count == 120);
  SampleSpec r = parse_sample_spec(" random 100 25 ");
  CHECK(r.mode == SampleSpec::Mode::Random);
  CHECK(r.bound == 25);
  CHECK_THROWS(parse_sample_spec("random 100"));
  CHECK_THROWS(parse_sample_spec("every 3"));
  CHECK_THROWS(parse_sample_spec("cont 3 4"));
}

TEST_CASE("sampled values belong to their object") {
  std::mt19937_64 rng(1);
  Obj pos = Obj::abstr(N, comp(not_(), stdlib_entry("is_zero")));
  Obj o = Obj::prod(pos, Obj::prod(Obj::two(), N));
  for (const auto& v : sample_values(o, parse_sample_spec("random 200 30"), rng)) CHECK(value_check(o, v));
  auto vs = sample_values(pos, parse_sample_spec("cont 50"), rng);
  CHECK(vs.size() == 50);
  for (const auto& v : vs) CHECK(value_check(pos, v));
  CHECK_THROWS_AS(random_value(Obj::univ(), 3, rng), EvalError);
}

TEST_CASE("iteration nesting and abstraction detection") {
  CHECK(iter_nesting(succ()) == 0);
  CHECK(iter_nesting(stdlib_entry("add")) == 1);
  CHECK(iter_nesting(stdlib_entry("mul")) == 2);
  CHECK(!mentions_abstraction(stdlib_entry("mul")));
  CHECK(mentions_abstraction(parse_term("(incl N is_zero)")));
}

TEST_CASE("the shipped corpus has the promised shape") {
  auto cases = load_corpus(std::string(PRR_SOURCE_DIR) + "/corpus/corpus.txt", 1);
  CHECK(cases.size() >= 50);
  std::size_t deep = 0, abstr = 0;
  for (const auto& c : cases) {
    CHECK(c.args.size() >= 100);
    if (iter_nesting(c.term) >= 3) ++deep;
    if (mentions_abstraction(c.term)) ++abstr;
  }
  CHECK(deep >= 5);
  CHECK(abstr >= 5);
}

TEST_CASE("sampling is determined by the seed") {
  auto a = load_corpus(std::string(PRR_SOURCE_DIR) + "/corpus/corpus.txt", 9);
  auto b = load_corpus(std::string(PRR_SOURCE_DIR) + "/corpus/corpus.txt", 9);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].args == b[i].args);
}

TEST_CASE("corpus table totals") {
  std::vector<CorpusCase> cases(1);
  cases[0].path = "mul";
  cases[0].term = stdlib_entry("mul");
  for (unsigned i = 0; i < 10; ++i) cases[0].args.push_back(P(V(i), V(3)));
  auto rows = run_corpus(cases, 100000);
  std::string t = corpus_table(rows);
  CHECK(t.find("total: terms=1 cases=10 agree=10 mismatches=0") != std::string::npos);
}
