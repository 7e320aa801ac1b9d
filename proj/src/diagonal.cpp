#include "prr/diagonal.hpp"

#include "prr/surface.hpp"

#include <sstream>

namespace prr {

Term build_eval_term() {
  using namespace mk;
  const Obj U = Obj::unit();
  const Obj N = Obj::nat();
  const Obj T = Obj::two();
  const Obj X = Obj::univ();
  const Obj XN = Obj::prod(X, N);

  // (0, [code]) is the Apply frame; ([frame], n) the initial configuration.
  Term frame = pair(comp(zero(N), bang(XN)), pair(projl(X, N), bang(XN)));
  Term stack = pair(frame, bang(XN));
  Term config = pair(stack, projr(X, N));
  Term init = comp(embed(config.cod()), config);

  return chain({projr(U, T), cast(Obj::prod(U, T)), iter(edot()), dminus(cdot(), edot()), init});
}

Code build_eval_code() { return quote(build_eval_term()); }

Term build_antidiagonal_term() {
  using namespace mk;
  return chain({not_(), build_eval_term(), pair(hash(), id(Obj::nat()))});
}

Code build_antidiagonal() { return quote(build_antidiagonal_term()); }

const char* liar_verdict_name(LiarVerdict v) {
  switch (v) {
    case LiarVerdict::FuelExhausted: return "FuelExhausted";
    case LiarVerdict::DescentViolation: return "DescentViolation";
    case LiarVerdict::NestedFuelExhausted: return "NestedFuelExhausted";
    case LiarVerdict::EvalError: return "EvalError";
    case LiarVerdict::Terminated: return "Terminated";
    case LiarVerdict::ContradictionValue: return "ContradictionValue";
  }
  return "?";
}

LiarReport run_liar(std::uint64_t fuel) {
  constexpr std::size_t kDigest = 8;
  LiarReport r;
  Term d = build_antidiagonal_term();
  r.d_code = quote(d);
  r.d_num = num(r.d_code);
  r.q = pred_count_inverse(r.d_code);
  r.fuel = fuel;

  RunOptions opts;
  opts.fuel = fuel;
  opts.tail = 0;
  r.outcome = eval_iterative(d, Value::nat(r.q), opts);

  const auto& cs = r.outcome.complexities;
  r.descent_ok = descent_check(cs).ok();
  r.trace_head.assign(cs.begin(), cs.begin() + std::min(kDigest, cs.size()));
  r.trace_tail.assign(cs.end() - std::min(kDigest, cs.size()), cs.end());

  switch (r.outcome.verdict) {
    case Verdict::FuelExhausted:
      r.verdict = LiarVerdict::FuelExhausted;
      break;
    case Verdict::NestedFuelExhausted:
      r.verdict = LiarVerdict::NestedFuelExhausted;
      break;
    case Verdict::DescentViolation:
    case Verdict::StatViolation:
      r.verdict = LiarVerdict::DescentViolation;
      break;
    case Verdict::EvalError:
      r.verdict = LiarVerdict::EvalError;
      break;
    case Verdict::Done: {
      const Value& v = r.outcome.value;
      Value nv = eval_structural(mk::not_(), v);
      r.verdict = nv == v ? LiarVerdict::ContradictionValue : LiarVerdict::Terminated;
      break;
    }
  }
  return r;
}

std::string LiarReport::serialize() const {
  auto join = [](const std::vector<OrdPoly>& xs) {
    std::string s;
    for (const auto& x : xs) s += (s.empty() ? "" : " ") + x.bracket();
    return s;
  };
  std::ostringstream out;
  out << "d_code=" << print_code(d_code) << '\n';
  out << "d_num=" << d_num.str() << '\n';
  out << "q=" << q.str() << '\n';
  out << "fuel=" << fuel << '\n';
  out << "verdict=" << liar_verdict_name(verdict) << '\n';
  out << "outcome=" << verdict_name(outcome.verdict) << '\n';
  if (outcome.done()) out << "value=" << outcome.value.render() << '\n';
  out << "message=" << outcome.message << '\n';
  out << "steps=" << outcome.steps << '\n';
  out << "fuel_used=" << outcome.fuel_used << '\n';
  out << "descent=" << (descent_ok ? "ok" : "violated") << '\n';
  out << "complexity_head=" << join(trace_head) << '\n';
  out << "complexity_tail=" << join(trace_tail) << '\n';
  return out.str();
}

}  // namespace prr
