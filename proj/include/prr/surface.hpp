#pragma once

#include "prr/term.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace prr {

struct ParseError : std::runtime_error {
  ParseError(std::size_t offset, std::size_t line, std::size_t col, const std::string& expectation);
  std::size_t offset, line, col;
  std::string expectation;
};

/// ConstVal has no surface form.
struct RefusesConstVal : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Cursor over s-expression source. `;` starts a line comment.
class Reader {
 public:
  explicit Reader(std::string text);

  Term term();
  Obj obj();
  /// Consumes "(" followed by the given head atom.
  void open(const std::string& head);
  void close();
  bool at_close();
  bool at_end();
  std::string atom();
  [[noreturn]] void fail(const std::string& expectation) const;

 private:
  void skip();
  char peek();
  Term term_after_head(const std::string& head, bool parenthesized);

  std::string text_;
  std::size_t pos_ = 0;
};

Term parse_term(const std::string& src);
/// Every term in the source, in order.
std::vector<Term> parse_terms(const std::string& src);
Obj parse_obj(const std::string& src);

/// Canonical text; stdlib names are expanded. Throws RefusesConstVal.
std::string print_term(const Term& t);
std::string print_obj(const Obj& o);
/// Like print_term but renders ConstVal as "(#const A v)" for traces.
std::string render_term(const Term& t);

/// `(cci A c p)`
struct CciSource {
  Obj space;
  Term c, p;
};
CciSource parse_cci(const std::string& src);

std::string read_file(const std::string& path);

}  // namespace prr
