#include "prr/surface.hpp"

#include "prr/coding.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace prr {

ParseError::ParseError(std::size_t off, std::size_t ln, std::size_t cl, const std::string& exp)
    : std::runtime_error("parse error at " + std::to_string(ln) + ":" + std::to_string(cl) +
                         ": expected " + exp),
      offset(off),
      line(ln),
      col(cl),
      expectation(exp) {}

Reader::Reader(std::string text) : text_(std::move(text)) {}

void Reader::fail(const std::string& expectation) const {
  std::size_t off = std::min(pos_, text_.size());
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < off; ++i) {
    if (text_[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  throw ParseError(off, line, col, expectation);
}

void Reader::skip() {
  while (pos_ < text_.size()) {
    char c = text_[pos_];
    if (c == ';') {
      while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      ++pos_;
    } else {
      break;
    }
  }
}

char Reader::peek() {
  skip();
  return pos_ < text_.size() ? text_[pos_] : '\0';
}

bool Reader::at_end() { return peek() == '\0'; }
bool Reader::at_close() { return peek() == ')'; }

std::string Reader::atom() {
  char c = peek();
  if (c == '\0' || c == '(' || c == ')') fail("an atom");
  std::size_t start = pos_;
  while (pos_ < text_.size()) {
    char d = text_[pos_];
    if (d == '(' || d == ')' || d == ';' || std::isspace(static_cast<unsigned char>(d))) break;
    ++pos_;
  }
  return text_.substr(start, pos_ - start);
}

void Reader::open(const std::string& head) {
  if (peek() != '(') fail("'(' " + head);
  ++pos_;
  std::size_t save = pos_;
  std::string h = atom();
  if (h != head) {
    pos_ = save;
    fail("'" + head + "'");
  }
}

void Reader::close() {
  if (peek() != ')') fail("')'");
  ++pos_;
}

Obj Reader::obj() {
  if (peek() != '(') {
    std::size_t save = pos_;
    std::string a = atom();
    if (a == "1") return Obj::unit();
    if (a == "N") return Obj::nat();
    if (a == "2") return Obj::two();
    if (a == "X") return Obj::univ();
    pos_ = save;
    fail("an object (1, N, 2, X, (x A B), (abstr A chi))");
  }
  ++pos_;
  std::size_t save = pos_;
  std::string head = atom();
  Obj out;
  if (head == "x") {
    Obj a = obj();
    Obj b = obj();
    out = Obj::prod(std::move(a), std::move(b));
  } else if (head == "abstr") {
    Obj a = obj();
    Term chi = term();
    out = Obj::abstr(std::move(a), std::move(chi));
  } else {
    pos_ = save;
    fail("'x' or 'abstr'");
  }
  close();
  return out;
}

Term Reader::term() {
  if (peek() == '(') {
    ++pos_;
    std::string head = atom();
    Term t = term_after_head(head, true);
    close();
    return t;
  }
  std::string head = atom();
  return term_after_head(head, false);
}

Term Reader::term_after_head(const std::string& head, bool paren) {
  using namespace mk;
  std::size_t head_end = pos_;
  auto need_paren = [&] {
    if (!paren) {
      pos_ = head_end - head.size();
      fail("'(' before " + head);
    }
  };
  if (head == "id") return id(obj());
  if (head == "bang") return bang(obj());
  if (head == "zero") return zero(obj());
  if (head == "embed") return embed(obj());
  if (head == "cast") return cast(obj());
  if (head == "projl" || head == "projr") {
    Obj a = obj();
    Obj b = obj();
    return head == "projl" ? projl(a, b) : projr(a, b);
  }
  if (head == "succ") return succ();
  if (head == "true") return tt();
  if (head == "false") return ff();
  if (head == "not") return not_();
  if (head == "eqnat") return eqnat();
  if (head == "cdot") return cdot();
  if (head == "edot") return edot();
  if (head == "hash") return hash();
  if (head == "pair") {
    need_paren();
    Term f = term();
    Term g = term();
    return pair(f, g);
  }
  if (head == "comp") {
    need_paren();
    std::vector<Term> fs{term(), term()};
    while (!at_close()) fs.push_back(term());
    Term acc = fs.back();
    for (std::size_t i = fs.size() - 1; i-- > 0;) acc = comp(fs[i], acc);
    return acc;
  }
  if (head == "cyl") {
    need_paren();
    Obj c = obj();
    return cyl(c, term());
  }
  if (head == "iter") {
    need_paren();
    return iter(term());
  }
  if (head == "dminus") {
    need_paren();
    Term c = term();
    Term p = term();
    return dminus(c, p);
  }
  if (head == "incl" || head == "restrict") {
    need_paren();
    Term f;
    if (head == "restrict") f = term();
    Obj s = obj();
    if (!at_close()) s = Obj::abstr(s, term());
    return head == "incl" ? incl(s) : restrict(f, s);
  }
  if (head == "cond") {
    need_paren();
    return stdlib_cond(obj());
  }
  if (head == "equal") {
    need_paren();
    return stdlib_equal(obj());
  }
  const auto& lib = stdlib();
  if (auto it = lib.find(head); it != lib.end()) return it->second;
  pos_ = head_end - head.size();
  fail("a term constructor or stdlib name, found '" + head + "'");
}

Term parse_term(const std::string& src) {
  Reader r(src);
  Term t = r.term();
  if (!r.at_end()) r.fail("end of input");
  return t;
}

std::vector<Term> parse_terms(const std::string& src) {
  Reader r(src);
  std::vector<Term> out;
  while (!r.at_end()) out.push_back(r.term());
  return out;
}

Obj parse_obj(const std::string& src) {
  Reader r(src);
  Obj o = r.obj();
  if (!r.at_end()) r.fail("end of input");
  return o;
}

std::string print_term(const Term& t) {
  if (t.has_constval()) throw RefusesConstVal("const literals have no surface syntax");
  return print_code(quote(t));
}

std::string print_obj(const Obj& o) { return print_code(quote_obj(o)); }

std::string render_term(const Term& t) { return print_code(quote(t)); }

CciSource parse_cci(const std::string& src) {
  Reader r(src);
  r.open("cci");
  CciSource out;
  out.space = r.obj();
  out.c = r.term();
  out.p = r.term();
  r.close();
  if (!r.at_end()) r.fail("end of input");
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace prr
