#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <utility>
#include <vector>

namespace prr {

// Unbounded natural numbers. Values, ordinal coefficients and code numbers
// all live here; nothing in the interpreter is allowed to wrap around.
using Nat = boost::multiprecision::cpp_int;

inline std::string to_string(const Nat& n) { return n.str(); }

// The diagonal bijection N x N -> N:  pair(x, y) = (x+y)(x+y+1)/2 + y.
Nat cantor_pair(const Nat& x, const Nat& y);
std::pair<Nat, Nat> cantor_unpair(const Nat& n);

// Bijective N -> N^k / N^k -> N by right-nested pairing (k >= 1).
Nat cantor_tuple(const std::vector<Nat>& xs);
std::vector<Nat> cantor_untuple(Nat n, std::size_t k);

}  // namespace prr

namespace prr {

// Length-graded bijection N x N -> N. Pairs are ordered by the total bit
// length of their bijective-binary digits, then by the split point, then
// lexicographically, so the result has roughly bits(x) + bits(y) + log bits.
// Code numbering uses this instead of cantor_pair: nesting Cantor pairs
// doubles the bit length at every tree level.
Nat graded_pair(const Nat& x, const Nat& y);
std::pair<Nat, Nat> graded_unpair(const Nat& n);

}  // namespace prr
