#pragma once

#include "prr/coding.hpp"
#include "prr/ordinal.hpp"
#include "prr/term.hpp"

#include <cstdint>
#include <deque>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace prr {

// ---------------------------------------------------------------------------
// Structural evaluation

struct EvalOptions {
  /// Native implementations for stdlib entries and Iter(succ), and Iter stops
  /// early at a fixed point. Semantically identical to the plain evaluation,
  /// which tests check with this off.
  bool intrinsics = true;
  /// Step budget for the reflected searches (DMinus) and nested machine steps
  /// reached from a structural evaluation.
  std::uint64_t search_budget = 1'000'000;
};

/// Denotational evaluation. Total on plain terms; reflected constants may run
/// out of their search budget, which surfaces as EvalError.
Value eval_structural(const Term& t, const Value& v, const EvalOptions& opts = {});

// ---------------------------------------------------------------------------
// The step machine

struct Frame {
  enum class Kind { Apply, PairLeft, PairRight, IterPending, RestrictCheck, Guard };

  Kind kind = Kind::Apply;
  Term term;    // Apply: the map; PairLeft / IterPending: g
  Value saved;  // PairLeft: the argument; PairRight: the left result; Guard: the checked value
  Obj a, b;     // PairLeft: a = left codomain; PairRight: (left, right) codomains;
                // RestrictCheck / Guard: a = the subobject
  Nat k;        // IterPending: remaining unfoldings

  static Frame apply(Term t);
  static Frame pair_left(Term g, Value saved, Obj left_obj);
  static Frame pair_right(Value left, Obj left_obj, Obj right_obj);
  static Frame iter_pending(Term g, Nat k);
  static Frame restrict_check(Obj sub);
  static Frame guard(Value saved, Obj sub);

  bool operator==(const Frame& other) const;
};

/// The stack's top is frames.back().
struct Config {
  std::vector<Frame> frames;
  Value current;

  bool halted() const { return frames.empty(); }
  bool operator==(const Config& other) const = default;
};

Config initial_config(const Term& t, const Value& v);

OrdPoly frame_cost(const Frame& f);
/// Natural sum of frame costs; zero exactly on halted configurations.
OrdPoly config_complexity(const Config& cfg);

/// Shared fuel. Nested runs (inside DMinus and EDot) draw from the same meter.
struct FuelMeter {
  std::uint64_t limit = 1'000'000;
  std::uint64_t used = 0;
  unsigned depth = 0;  // nesting level of the run currently charging
};

/// Thrown when a meter runs dry; `nested` tells whether it happened inside a
/// reflected sub-run.
struct FuelOut {
  bool nested;
};

/// One transition. Does not charge fuel for itself; charges for nested work.
void step_in_place(Config& cfg, FuelMeter& meter);
/// The map e-dot on configurations; halted configurations are fixed points.
Config step(Config cfg, FuelMeter& meter);
Config step(Config cfg);

std::string render_frame(const Frame& f);
std::string render_frames(const Config& cfg);

// Configurations as values of X:
//   (stack, current), stack = () | (frame, stack), frame = (tag, [payload...]).
Value config_to_value(const Config& cfg);
/// Throws IllTyped on values that are not configurations.
Config config_from_value(const Value& v);
Nat config_num(const Config& cfg);
/// A single term F with eval_structural(F, cfg.current) equal to the final
/// result of running cfg. `current_obj` is the type of cfg.current.
Term fold_config(const Config& cfg, const Obj& current_obj);

// ---------------------------------------------------------------------------
// Iterative evaluation

enum class Verdict { Done, FuelExhausted, DescentViolation, StatViolation, EvalError, NestedFuelExhausted };
const char* verdict_name(Verdict v);

struct TraceEntry {
  std::uint64_t step;
  OrdPoly complexity;
  Config config;
};

struct Outcome {
  Verdict verdict = Verdict::Done;
  Value value;
  std::uint64_t steps = 0;
  std::uint64_t fuel_used = 0;
  /// Complexity of every configuration visited, initial one first.
  std::vector<OrdPoly> complexities;
  std::deque<TraceEntry> tail;
  std::optional<std::uint64_t> violation_step;
  OrdPoly before, after;
  OrdPoly max_complexity;
  std::string message;

  bool done() const { return verdict == Verdict::Done; }
};

struct RunOptions {
  std::uint64_t fuel = 1'000'000;
  bool record_complexities = true;
  std::size_t tail = 10;
  /// One line per configuration: step= frames= complexity= value=
  std::ostream* trace = nullptr;
};

Outcome eval_iterative(const Term& u, const Value& v, const RunOptions& opts = {});
Outcome eval_iterative(const Code& u, const Value& v, const RunOptions& opts = {});
/// Runs from an arbitrary configuration.
Outcome run_config(Config cfg, const RunOptions& opts = {});

std::string trace_record(std::uint64_t step, const Config& cfg, const OrdPoly& c);
std::string describe(const Outcome& o);

struct ObjectivityReport {
  std::size_t cases = 0, agree = 0, mismatches = 0, exhausted = 0, errors = 0;
  std::size_t descent_violations = 0;
  std::uint64_t max_steps = 0;
  OrdPoly max_complexity;
  std::vector<std::string> details;
  bool ok() const { return cases == agree && descent_violations == 0; }
};

ObjectivityReport objectivity_check(const Term& t, const std::vector<Value>& args,
                                    std::uint64_t fuel);

}  // namespace prr
