#pragma once

#include "prr/coding.hpp"
#include "prr/machine.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace prr {

/// The code evaluator at N -> 2 as a term X x N -> 2:
///   r o cast(1 x 2) o iter(edot) o dminus(cdot, edot) o init
/// where init packs (code, n) into the configuration ([apply code], n).
Term build_eval_term();
Code build_eval_code();

/// d = not o eval o (hash, id) : N -> 2
Term build_antidiagonal_term();
Code build_antidiagonal();

enum class LiarVerdict {
  FuelExhausted,
  DescentViolation,
  NestedFuelExhausted,
  EvalError,
  Terminated,         // finished with a value v of 2 (v = not v fails)
  ContradictionValue  // finished with v = not v: a soundness bug
};
const char* liar_verdict_name(LiarVerdict v);

struct LiarReport {
  Code d_code;
  Nat d_num;
  Nat q;
  std::uint64_t fuel = 0;
  Outcome outcome;
  LiarVerdict verdict = LiarVerdict::FuelExhausted;
  std::vector<OrdPoly> trace_head, trace_tail;
  bool descent_ok = true;
  /// Key=value lines; deterministic for a given fuel.
  std::string serialize() const;
};

LiarReport run_liar(std::uint64_t fuel);

}  // namespace prr
