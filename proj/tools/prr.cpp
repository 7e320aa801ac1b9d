// prr: command-line front end for the interpreter.
//
// Exit codes: 0 success, 1 evaluation failure (fuel, descent, undefined),
// 2 usage, parse or type errors.

#include "prr/coding.hpp"
#include "prr/corpus.hpp"
#include "prr/diagonal.hpp"
#include "prr/machine.hpp"
#include "prr/partial.hpp"
#include "prr/surface.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>

using namespace prr;

namespace {

constexpr int kOk = 0;
constexpr int kEvalFailure = 1;
constexpr int kUsage = 2;

struct Flags {
  std::string term;
  std::string arg;
  std::string mode = "structural";
  std::uint64_t fuel = 1'000'000;
  std::string trace;
  std::size_t audit = 0;
  std::uint64_t seed = 1;
  std::string format = "text";
  std::string report;
  std::string corpus = "corpus/corpus.txt";
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool records(const Flags& f) { return f.format == "records"; }

Term load_term(const Flags& f) {
  if (f.term.empty()) throw UsageError("--term is required");
  return parse_term(read_file(f.term));
}

Value load_arg(const Flags& f, const Obj& dom) {
  if (f.arg.empty()) throw UsageError("--arg is required");
  Value v;
  try {
    v = parse_value(f.arg);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (!value_check(dom, v))
    throw TypeMismatch("--arg", "a value of " + print_obj(dom), v.render());
  return v;
}

int report_outcome(const Flags& f, const Outcome& o) {
  if (records(f)) {
    std::cout << "verdict=" << verdict_name(o.verdict) << '\n';
    if (o.done()) std::cout << "value=" << o.value.render() << '\n';
    std::cout << "steps=" << o.steps << "\nfuel_used=" << o.fuel_used << '\n';
    if (!o.done()) std::cout << "message=" << o.message << '\n';
  } else if (o.done()) {
    std::cout << o.value.render() << '\n';
  } else {
    std::cout << o.message << '\n';
  }
  return o.done() ? kOk : kEvalFailure;
}

int cmd_check(const Flags& f) {
  Term t = load_term(f);
  if (records(f)) {
    std::cout << "dom=" << print_obj(t.dom()) << "\ncod=" << print_obj(t.cod())
              << "\ndepth=" << t.depth() << "\ncomplexity=" << t.complexity().bracket() << '\n';
  } else {
    std::cout << print_obj(t.dom()) << " -> " << print_obj(t.cod()) << '\n';
  }
  return kOk;
}

int cmd_eval(const Flags& f, bool stream_steps) {
  Term t = load_term(f);
  Value a = load_arg(f, t.dom());
  if (f.mode == "structural" && !stream_steps) {
    Value v = eval_structural(t, a);
    std::cout << (records(f) ? "value=" : "") << v.render() << '\n';
    return kOk;
  }
  if (f.mode != "iterative" && !stream_steps) throw UsageError("--mode must be structural or iterative");
  RunOptions opts;
  opts.fuel = f.fuel;
  opts.record_complexities = false;
  std::ofstream trace;
  if (stream_steps) {
    opts.trace = &std::cout;
  } else if (!f.trace.empty()) {
    trace.open(f.trace);
    if (!trace) throw UsageError("cannot write " + f.trace);
    opts.trace = &trace;
  }
  return report_outcome(f, eval_iterative(t, a, opts));
}

int cmd_quote(const Flags& f) {
  Term t = load_term(f);
  Code c = quote(t);
  std::cout << (records(f) ? "code=" : "") << print_code(c) << '\n';
  std::cout << (records(f) ? "num=" : "") << num(c).str() << '\n';
  if (records(f) && t.dom() == Obj::nat() && t.cod() == Obj::two())
    std::cout << "index=" << pred_count_inverse(c).str() << '\n';
  return kOk;
}

int cmd_cci(const Flags& f) {
  if (f.term.empty()) throw UsageError("--term is required");
  CCIInstance inst = parse_cci_instance(read_file(f.term));
  if (f.audit > 0) {
    std::mt19937_64 rng(f.seed);
    SampleSpec spec{SampleSpec::Mode::Random, f.audit, 1000};
    CciAudit audit = cci_audit(inst, sample_values(inst.space, spec, rng));
    std::cout << "audit " << audit.checked - audit.violations.size() << "/" << audit.checked << '\n';
    for (const auto& v : audit.violations) std::cout << "  " << v << '\n';
    if (!audit.ok()) return kEvalFailure;
    if (f.arg.empty()) return kOk;
  }
  Value a = load_arg(f, inst.space);
  CciOutcome o = cci_run(inst, a, f.fuel);
  if (records(f)) {
    std::cout << "verdict=" << verdict_name(o.verdict) << "\nvalue=" << o.value.render()
              << "\nindex=" << o.index.str() << '\n';
    if (!o.done()) std::cout << "message=" << o.message << '\n';
  } else if (o.done()) {
    std::cout << "(" << o.value.render() << ", " << o.index.str() << ")\n";
  } else {
    std::cout << verdict_name(o.verdict) << ": " << o.message << '\n';
  }
  return o.done() ? kOk : kEvalFailure;
}

int cmd_choice(const Flags& f) {
  if (f.term.empty()) throw UsageError("--term is required");
  std::string src = read_file(f.term);
  bool partial = src.find("(partial") != std::string::npos;
  if (partial) {
    PartialMap pm = parse_partial(src);
    PartialMap g = middle_inverse_partial(pm);
    Value b = load_arg(f, g.base);
    ParResult r = par_apply(g, b, f.fuel);
    if (!r.defined) {
      std::cout << "no witness below fuel " << f.fuel << '\n';
      return kEvalFailure;
    }
    std::cout << (records(f) ? "value=" : "") << r.value.render() << '\n';
    if (records(f)) std::cout << "witness=" << r.witness.str() << '\n';
    return kOk;
  }
  Term t = parse_term(src);
  if (!f.arg.empty()) {
    Value b = load_arg(f, t.cod());
    TotalInverse inv = middle_inverse_total(t, zero_value(t.dom()), f.fuel);
    auto r = inv(b);
    std::cout << (records(f) ? "value=" : "") << r.value.render() << '\n';
    if (records(f)) std::cout << "found=" << (r.found ? "yes" : "no (fallback point)") << '\n';
    return kOk;
  }
  StructuralInverse s = structural_middle_inverse(t);
  constexpr std::size_t kLawSamples = 200;
  Term law = mk::chain({t, s.term, t});
  const Value a0 = zero_value(t.dom());
  std::size_t holds = 0;
  for (std::size_t n = 0; n < kLawSamples; ++n) {
    Value a = cont(t.dom(), a0, n);
    if (eval_structural(law, a) == eval_structural(t, a)) ++holds;
  }
  std::cout << (records(f) ? "inverse=" : "") << print_term(s.term) << '\n';
  std::cout << (records(f) ? "kind=" : "kind ") << inverse_kind_name(s.kind) << '\n';
  std::cout << (records(f) ? "law=" : "law ") << holds << "/" << kLawSamples << '\n';
  return holds == kLawSamples ? kOk : kEvalFailure;
}

int cmd_mu(const Flags& f) {
  Term phi = load_term(f);
  if (phi.dom().kind() != ObjKind::Prod || !(phi.dom().right() == Obj::nat()) ||
      !(phi.cod() == Obj::two()))
    throw TypeMismatch("mu", "A x N -> 2", print_obj(phi.dom()) + " -> " + print_obj(phi.cod()));
  Value a = load_arg(f, phi.dom().left());
  auto n = mu_search(phi, a, f.fuel);
  if (!n) {
    std::cout << "no witness below fuel " << f.fuel << '\n';
    return kEvalFailure;
  }
  std::cout << (records(f) ? "witness=" : "") << n->str() << '\n';
  return kOk;
}

int cmd_liar(const Flags& f) {
  LiarReport r = run_liar(f.fuel);
  std::string text = r.serialize();
  std::cout << text;
  if (!f.report.empty()) {
    std::ofstream out(f.report);
    if (!out) throw UsageError("cannot write " + f.report);
    out << text;
  }
  if (r.verdict == LiarVerdict::ContradictionValue) {
    std::cerr << "soundness bug: the liar produced a fixed point of not\n";
    return kEvalFailure;
  }
  return kOk;
}

int cmd_corpus(const Flags& f) {
  auto cases = load_corpus(f.corpus, f.seed);
  auto rows = run_corpus(cases, f.fuel);
  std::cout << corpus_table(rows);
  bool ok = true;
  for (const auto& r : rows) {
    ok = ok && r.report.ok();
    for (const auto& d : r.report.details) std::cout << r.path << ": " << d << '\n';
  }
  return ok ? kOk : kEvalFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reflective interpreter for primitive recursion with predicate abstraction"};
  app.require_subcommand(1);
  Flags f;

  auto term = [&](CLI::App* s) { s->add_option("--term", f.term, ".pr source file")->check(CLI::ExistingFile); };
  auto arg = [&](CLI::App* s) { s->add_option("--arg", f.arg, "argument value: n, (), (v,w)"); };
  auto fuel = [&](CLI::App* s) { s->add_option("--fuel", f.fuel, "step budget")->capture_default_str(); };
  auto format = [&](CLI::App* s) {
    s->add_option("--format", f.format, "text or records")->check(CLI::IsMember({"text", "records"}));
  };

  auto* check = app.add_subcommand("check", "typecheck a term, print dom -> cod");
  term(check), format(check);

  auto* eval = app.add_subcommand("eval", "evaluate a term at an argument");
  term(eval), arg(eval), fuel(eval), format(eval);
  eval->add_option("--mode", f.mode, "structural or iterative")
      ->check(CLI::IsMember({"structural", "iterative"}));
  eval->add_option("--trace", f.trace, "write one record per machine step");

  auto* run = app.add_subcommand("run", "iterative evaluation, streaming step records");
  term(run), arg(run), fuel(run), format(run);

  auto* quote_cmd = app.add_subcommand("quote", "print a term's code and its number");
  term(quote_cmd), format(quote_cmd);

  auto* cci = app.add_subcommand("cci", "run a (cci A c p) instance");
  term(cci), arg(cci), fuel(cci), format(cci);
  cci->add_option("--audit", f.audit, "check (Desc)/(Stat) on N random arguments first");
  cci->add_option("--seed", f.seed, "sampling seed");

  auto* choice = app.add_subcommand("choice", "middle inverses");
  term(choice), arg(choice), fuel(choice), format(choice);

  auto* mu = app.add_subcommand("mu", "least n with phi(a, n)");
  term(mu), arg(mu), fuel(mu), format(mu);

  auto* liar = app.add_subcommand("liar", "run the anti-diagonal on its own index");
  fuel(liar);
  liar->add_option("--report", f.report, "also write the report to this file");

  auto* corpus = app.add_subcommand("corpus", "objectivity and descent suites over a corpus");
  fuel(corpus);
  corpus->add_option("--corpus", f.corpus, "corpus listing")->capture_default_str();
  corpus->add_option("--seed", f.seed, "sampling seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*check) return cmd_check(f);
    if (*eval) return cmd_eval(f, false);
    if (*run) return cmd_eval(f, true);
    if (*quote_cmd) return cmd_quote(f);
    if (*cci) return cmd_cci(f);
    if (*choice) return cmd_choice(f);
    if (*mu) return cmd_mu(f);
    if (*liar) return cmd_liar(f);
    if (*corpus) return cmd_corpus(f);
  } catch (const UsageError& e) {
    std::cerr << "usage: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << f.term << ":" << e.line << ":" << e.col << ": expected " << e.expectation << '\n';
    return kUsage;
  } catch (const TypeMismatch& e) {
    std::cerr << e.what() << '\n';
    return kUsage;
  } catch (const UnsupportedConstructor& e) {
    std::cerr << e.what() << '\n';
    return kUsage;
  } catch (const EvalError& e) {
    std::cerr << "evaluation error: " << e.what() << '\n';
    return kEvalFailure;
  } catch (const std::exception& e) {
    std::cerr << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
