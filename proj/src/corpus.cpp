#include "prr/corpus.hpp"

#include "prr/coding.hpp"
#include "prr/surface.hpp"

#include <filesystem>
#include <iomanip>
#include <sstream>

namespace prr {

SampleSpec parse_sample_spec(const std::string& text) {
  std::istringstream in(text);
  std::string mode;
  SampleSpec s;
  if (!(in >> mode)) throw std::invalid_argument("empty sample spec");
  if (mode == "cont") {
    s.mode = SampleSpec::Mode::Cont;
    if (!(in >> s.count)) throw std::invalid_argument("cont K: missing K");
  } else if (mode == "random") {
    s.mode = SampleSpec::Mode::Random;
    if (!(in >> s.count >> s.bound)) throw std::invalid_argument("random K B: missing K or B");
  } else {
    throw std::invalid_argument("unknown sample mode '" + mode + "'");
  }
  std::string extra;
  if (in >> extra) throw std::invalid_argument("trailing text in sample spec: " + extra);
  return s;
}

Value random_value(const Obj& o, std::uint64_t bound, std::mt19937_64& rng) {
  switch (o.kind()) {
    case ObjKind::Unit:
      return Value::unit();
    case ObjKind::Nat:
      return Value::nat(bound ? rng() % bound : 0);
    case ObjKind::Prod: {
      Value l = random_value(o.left(), bound, rng);
      Value r = random_value(o.right(), bound, rng);
      return Value::pair(std::move(l), std::move(r));
    }
    case ObjKind::Two:
    case ObjKind::Abstr: {
      for (int tries = 0; tries < 64; ++tries) {
        Value v = random_value(o.carrier(), bound, rng);
        if (eval_structural(o.chi(), v).as_nat() == 1) return v;
      }
      // Rejection failed: pick among the members early in the count.
      const Value c0 = zero_value(o.carrier());
      std::vector<Value> members;
      for (std::uint64_t n = 0; n < 100000 && members.size() < 64; ++n) {
        Value v = cont(o.carrier(), c0, n);
        if (eval_structural(o.chi(), v).as_nat() == 1) members.push_back(std::move(v));
      }
      if (!members.empty()) return members[rng() % members.size()];
      throw EvalError("no member of " + print_obj(o) + " found for sampling");
    }
    case ObjKind::Univ:
      break;
  }
  throw EvalError("cannot sample values of X");
}

std::vector<Value> sample_values(const Obj& o, const SampleSpec& spec, std::mt19937_64& rng) {
  std::vector<Value> out;
  out.reserve(spec.count);
  if (spec.mode == SampleSpec::Mode::Random) {
    for (std::size_t i = 0; i < spec.count; ++i) out.push_back(random_value(o, spec.bound, rng));
    return out;
  }
  // Count order; for subobjects the count falls back to the point, so skip repeats.
  Value point = o.is_subobject() ? random_value(o, 4, rng) : zero_value(o);
  for (std::uint64_t n = 0; out.size() < spec.count && n < 1'000'000; ++n) {
    Value v = cont(o, point, n);
    if (o.is_subobject() && n > 0 && v == point) continue;
    out.push_back(std::move(v));
  }
  return out;
}

std::size_t iter_nesting(const Term& t) {
  std::size_t best = 0;
  for (const auto& k : t.kids()) best = std::max(best, iter_nesting(k));
  return t.kind() == TermKind::Iter ? best + 1 : best;
}

namespace {

bool obj_mentions_abstraction(const Obj& o) {
  switch (o.kind()) {
    case ObjKind::Abstr:
      return true;
    case ObjKind::Prod:
      return obj_mentions_abstraction(o.left()) || obj_mentions_abstraction(o.right());
    default:
      return false;
  }
}

}  // namespace

bool mentions_abstraction(const Term& t) {
  if (obj_mentions_abstraction(t.dom()) || obj_mentions_abstraction(t.cod())) return true;
  for (const auto& o : t.objs())
    if (obj_mentions_abstraction(o)) return true;
  for (const auto& k : t.kids())
    if (mentions_abstraction(k)) return true;
  return false;
}

std::vector<CorpusCase> load_corpus(const std::string& corpus_file, std::uint64_t seed) {
  namespace fs = std::filesystem;
  std::istringstream in(read_file(corpus_file));
  fs::path dir = fs::path(corpus_file).parent_path();
  std::mt19937_64 rng(seed);
  std::vector<CorpusCase> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string path;
    if (!(ls >> path)) continue;
    std::string rest;
    std::getline(ls, rest);
    CorpusCase c;
    c.path = path;
    try {
      c.term = parse_term(read_file((dir / path).string()));
      c.spec = parse_sample_spec(rest);
      c.args = sample_values(c.term.dom(), c.spec, rng);
    } catch (const std::exception& e) {
      throw std::runtime_error(corpus_file + ":" + std::to_string(lineno) + ": " + e.what());
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<CorpusRow> run_corpus(const std::vector<CorpusCase>& cases, std::uint64_t fuel) {
  std::vector<CorpusRow> rows;
  rows.reserve(cases.size());
  for (const auto& c : cases) {
    CorpusRow r;
    r.path = c.path;
    r.nesting = iter_nesting(c.term);
    r.abstraction = mentions_abstraction(c.term);
    r.report = objectivity_check(c.term, c.args, fuel);
    rows.push_back(std::move(r));
  }
  return rows;
}

std::string corpus_table(const std::vector<CorpusRow>& rows) {
  std::ostringstream out;
  out << std::left << std::setw(34) << "term" << std::right << std::setw(6) << "args"
      << std::setw(7) << "agree" << std::setw(6) << "miss" << std::setw(6) << "fuel"
      << std::setw(6) << "desc" << std::setw(5) << "it" << std::setw(5) << "abs"
      << std::setw(10) << "maxsteps" << "  maxcomplexity\n";
  std::size_t cases = 0, agree = 0, miss = 0, fuel = 0, desc = 0;
  std::uint64_t max_steps = 0;
  OrdPoly max_c;
  for (const auto& r : rows) {
    const auto& rep = r.report;
    out << std::left << std::setw(34) << r.path << std::right << std::setw(6) << rep.cases
        << std::setw(7) << rep.agree << std::setw(6) << rep.mismatches + rep.errors
        << std::setw(6) << rep.exhausted << std::setw(6) << rep.descent_violations
        << std::setw(5) << r.nesting << std::setw(5) << (r.abstraction ? "y" : "-")
        << std::setw(10) << rep.max_steps << "  " << rep.max_complexity.bracket() << '\n';
    cases += rep.cases;
    agree += rep.agree;
    miss += rep.mismatches + rep.errors;
    fuel += rep.exhausted;
    desc += rep.descent_violations;
    max_steps = std::max(max_steps, rep.max_steps);
    if (max_c < rep.max_complexity) max_c = rep.max_complexity;
  }
  out << "total: terms=" << rows.size() << " cases=" << cases << " agree=" << agree
      << " mismatches=" << miss << " fuel_exhausted=" << fuel << " descent_violations=" << desc
      << " max_steps=" << max_steps << " max_complexity=" << max_c.bracket() << '\n';
  return out.str();
}

}  // namespace prr
