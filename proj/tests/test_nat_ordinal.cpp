#include "doctest.h"
#include "prr/nat.hpp"
#include "prr/ordinal.hpp"
#include "support/gen.hpp"

#include <set>

using namespace prr;
using namespace prr::testing;

namespace {

OrdPoly O(std::initializer_list<unsigned> cs) {
  std::vector<Nat> v;
  for (unsigned c : cs) v.emplace_back(c);
  return OrdPoly(v);
}

// Independent comparison: pad to equal length, compare from the top.
int oracle_cmp(std::vector<unsigned> a, std::vector<unsigned> b) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  while (!b.empty() && b.back() == 0) b.pop_back();
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

}  // namespace

TEST_CASE("cantor pairing matches the closed form") {
  CHECK(cantor_pair(0, 0) == 0);
  CHECK(cantor_pair(1, 2) == 8);
  for (std::uint64_t x = 0; x < 60; ++x)
    for (std::uint64_t y = 0; y < 60; ++y) {
      CHECK(cantor_pair(x, y) == host_cantor(x, y));
      auto [a, b] = cantor_unpair(host_cantor(x, y));
      CHECK(a == x);
      CHECK(b == y);
    }
}

TEST_CASE("cantor pairing on big numbers") {
  Nat x = Nat(1) << 200, y = (Nat(1) << 150) + 7;
  auto [a, b] = cantor_unpair(cantor_pair(x, y));
  CHECK(a == x);
  CHECK(b == y);
}

TEST_CASE("cantor tuples") {
  std::vector<Nat> xs{3, 0, 9, 2};
  CHECK(cantor_untuple(cantor_tuple(xs), 4) == xs);
  CHECK(cantor_tuple({5}) == 5);
}

TEST_CASE("graded pairing is a bijection on an initial segment") {
  std::set<std::pair<Nat, Nat>> seen;
  for (unsigned n = 0; n < 5000; ++n) {
    auto p = graded_unpair(n);
    CHECK(graded_pair(p.first, p.second) == n);
    CHECK(seen.insert(p).second);
  }
  for (unsigned x = 0; x < 40; ++x)
    for (unsigned y = 0; y < 40; ++y) CHECK(graded_unpair(graded_pair(x, y)) == std::pair<Nat, Nat>(x, y));
}

TEST_CASE("graded pairing stays short where nested cantor pairs explode") {
  // a right-nested list of twelve small entries
  Nat g = 0, c = 0;
  for (int i = 0; i < 12; ++i) {
    g = graded_pair(5, g);
    c = cantor_pair(5, c);
  }
  CHECK(msb(g) < 200);
  CHECK(msb(c) > 4000);
}

TEST_CASE("ordinal basics") {
  CHECK(ord_zero().is_zero());
  CHECK(ord_zero().bracket() == "[]");
  CHECK(ord_from_nat(0).bracket() == "[]");
  CHECK(ord_from_nat(5).bracket() == "[5]");
  CHECK(ord_cmp(ord_zero(), ord_from_nat(1)) == Cmp::Less);
  CHECK(ord_cmp(ord_from_nat(7), ord_from_nat(9)) == Cmp::Less);
  CHECK(OrdPoly({Nat(3), Nat(0)}) == O({3}));
}

TEST_CASE("ordinal comparison") {
  CHECK(ord_cmp(O({1}), O({0, 1})) == Cmp::Less);
  CHECK(ord_cmp(O({5, 3}), O({0, 4})) == Cmp::Less);
  CHECK(ord_cmp(O({2, 1}), O({2, 1})) == Cmp::Equal);
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    std::vector<unsigned> a(rng() % 4), b(rng() % 4);
    for (auto& c : a) c = rng() % 3;
    for (auto& c : b) c = rng() % 3;
    std::vector<Nat> na(a.begin(), a.end()), nb(b.begin(), b.end());
    int want = oracle_cmp(a, b);
    Cmp got = ord_cmp(OrdPoly(na), OrdPoly(nb));
    CHECK(got == (want < 0 ? Cmp::Less : want > 0 ? Cmp::Greater : Cmp::Equal));
  }
}

TEST_CASE("natural sum, omega shift, scaling") {
  CHECK(ord_nat_sum(O({1}), O({0, 1})) == O({1, 1}));
  CHECK(ord_nat_sum(O({2, 3}), O({4, 1})) == O({6, 4}));
  CHECK(ord_nat_sum(O({2, 3}), ord_zero()) == O({2, 3}));
  CHECK(ord_omega_shift(ord_zero()).is_zero());
  CHECK(ord_omega_shift(O({3})) == O({0, 3}));
  OrdPoly ten = ord_nat_sum(ord_nat_scale(10, O({1, 1})), O({9}));
  CHECK(ten == O({19, 10}));
  CHECK(ord_cmp(ord_omega_shift(O({1, 1})), ten) == Cmp::Greater);
  CHECK(ord_nat_scale(0, O({5, 2})).is_zero());
  CHECK(ord_nat_scale(3, O({1, 1})) == O({3, 3}));
  CHECK(ord_nat_scale(1, O({4, 0, 2})) == O({4, 0, 2}));
}

TEST_CASE("descent check") {
  CHECK(descent_check({O({0, 1}), O({5}), O({2}), O({})}).ok());
  auto r = descent_check({O({3}), O({3})});
  REQUIRE(r.violation);
  CHECK(*r.violation == 0);
  CHECK(descent_check({O({}), O({1})}).ok());
  CHECK(*descent_check({O({0, 2}), O({9, 1}), O({0, 2})}).violation == 1);
}

TEST_CASE("bracket text round-trips") {
  for (auto o : {O({}), O({4}), O({0, 0, 3}), O({12, 7})}) CHECK(*parse_bracket(o.bracket()) == o);
  CHECK(!parse_bracket("[1,").has_value());
  CHECK(O({5, 0, 2}).render() == "2*w^2 + 5");
}
