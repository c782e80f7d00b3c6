#include "leavitt/expression.hpp"

#include <cctype>
#include <string>

#include "leavitt/error.hpp"

namespace leavitt {

namespace {

class Parser {
 public:
  Parser(const Algebra& a, std::string_view text) : a_(a), text_(text) {}

  Element parse() {
    skip_space();
    if (at_end()) fail("empty expression");
    Element x = expr();
    skip_space();
    if (!at_end()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return x;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { fail_at(msg, pos_); }
  [[noreturn]] void fail_at(const std::string& msg, std::size_t pos) const {
    throw Error(ErrorKind::Parse, msg, 1,
                static_cast<int>(pos + 1));
  }

  bool at_end() const { return pos_ >= text_.size(); }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_space();
    if (!at_end() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool accept_star() {
    skip_space();
    if (text_.substr(pos_, 2) == "^*") {
      pos_ += 2;
      return true;
    }
    return false;
  }

  Element expr() {
    bool negative = false;
    if (accept('-'))
      negative = true;
    else
      accept('+');
    Element x = term();
    if (negative) x = -x;
    for (;;) {
      if (accept('+'))
        x += term();
      else if (accept('-'))
        x -= term();
      else
        return x;
    }
  }

  Element term() {
    Element x = factor();
    while (accept('.')) x = x * factor();
    return x;
  }

  Element factor() {
    skip_space();
    if (at_end()) fail("expected a term");
    const std::size_t start = pos_;
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return number(start);
    if (c == '(') {
      ++pos_;
      Element x = expr();
      if (!accept(')')) fail("expected ')'");
      return accept_star() ? a_.involution(x) : x;
    }
    if (c == '"' || c == '_' || std::isalpha(static_cast<unsigned char>(c))) {
      const std::string name = identifier();
      Element x = resolve(name, start);
      return accept_star() ? a_.involution(x) : x;
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  Element number(std::size_t start) {
    std::string num = digits();
    if (accept('/')) {
      skip_space();
      const std::string den = digits();
      if (mpz_class(den) == 0) fail_at("zero denominator", start);
      num += "/" + den;
    }
    mpq_class q(num, 10);
    q.canonicalize();
    RingElement r(a_.ring());
    try {
      r = RingElement(a_.ring(), q);
    } catch (const Error& e) {
      fail_at(std::string(e.what()), start);
    }
    return a_.scalar(r, a_.local_unit(a_.graph().all_vertices()));
  }

  std::string identifier() {
    if (text_[pos_] == '"') {
      const std::size_t close = text_.find('"', pos_ + 1);
      if (close == std::string_view::npos) fail("unterminated quoted name");
      std::string name(text_.substr(pos_ + 1, close - pos_ - 1));
      pos_ = close + 1;
      return name;
    }
    const std::size_t start = pos_;
    while (!at_end()) {
      const unsigned char ch = static_cast<unsigned char>(text_[pos_]);
      if (!(std::isalnum(ch) || ch == '_' || ch == '\'')) break;
      ++pos_;
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  Element resolve(const std::string& name, std::size_t start) const {
    const Graph& g = a_.graph();
    const auto v = g.find_vertex(name);
    const auto e = g.find_edge(name);
    if (v && e) fail_at("name '" + name + "' is both a vertex and an edge", start);
    if (v) return a_.vertex(*v);
    if (e) return a_.edge(*e);
    fail_at("unknown vertex or edge '" + name + "'", start);
  }

  const Algebra& a_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Element parse_element(const Algebra& a, std::string_view text) { return Parser(a, text).parse(); }

}  // namespace leavitt
