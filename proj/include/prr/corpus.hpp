#pragma once

#include "prr/machine.hpp"
#include "prr/term.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace prr {

/// How arguments are drawn for a corpus entry:
///   cont K        the first K values in count order
///   random K B    K values with every natural component below B
struct SampleSpec {
  enum class Mode { Cont, Random } mode = Mode::Cont;
  std::size_t count = 100;
  std::uint64_t bound = 10;
};

SampleSpec parse_sample_spec(const std::string& text);

/// Random value of `o`; subobject members are found by rejection, then by
/// scanning the count. Throws EvalError for X.
Value random_value(const Obj& o, std::uint64_t bound, std::mt19937_64& rng);
std::vector<Value> sample_values(const Obj& o, const SampleSpec& spec, std::mt19937_64& rng);

/// Longest chain of Iter nodes nested inside each other.
std::size_t iter_nesting(const Term& t);
/// Some object in the term tree is a user abstraction {A | chi}.
bool mentions_abstraction(const Term& t);

struct CorpusCase {
  std::string path;
  Term term;
  SampleSpec spec;
  std::vector<Value> args;
};

/// Lines of `path TAB-or-space spec`; `#` starts a comment. Paths are
/// relative to the corpus file.
std::vector<CorpusCase> load_corpus(const std::string& corpus_file, std::uint64_t seed);

struct CorpusRow {
  std::string path;
  ObjectivityReport report;
  std::size_t nesting = 0;
  bool abstraction = false;
};

std::vector<CorpusRow> run_corpus(const std::vector<CorpusCase>& cases, std::uint64_t fuel);
std::string corpus_table(const std::vector<CorpusRow>& rows);

}  // namespace prr
