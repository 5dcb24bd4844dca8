#include <cctype>

#include "wittforge/errors.hpp"
#include "wittforge/ring.hpp"

namespace wittforge {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(std::string_view token) {
    skip_ws();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }
  void expect(std::string_view token) {
    if (!accept(token)) fail("expected '" + std::string(token) + "'");
  }
  std::string identifier() {
    skip_ws();
    const auto start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    if (start == pos_ || std::isdigit(static_cast<unsigned char>(text_[start]))) {
      pos_ = start;
      fail("expected identifier");
    }
    return std::string(text_.substr(start, pos_ - start));
  }
  std::string digits() {
    skip_ws();
    const auto start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return std::string(text_.substr(start, pos_ - start));
  }
  /// Text up to the ')' closing the current nesting level, split on top-level commas.
  std::vector<std::string> comma_list_until_close() {
    std::vector<std::string> items;
    std::string cur;
    int depth = 0;
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '(') ++depth;
      if (c == ')') {
        if (depth == 0) break;
        --depth;
      }
      if (c == ',' && depth == 0) {
        items.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
      ++pos_;
    }
    items.push_back(cur);
    return items;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at position " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

std::vector<std::string> var_list(Cursor& c) {
  std::vector<std::string> vars{c.identifier()};
  while (c.accept(",")) vars.push_back(c.identifier());
  return vars;
}

Ring parse_ring(Cursor& c) {
  if (c.accept("integers")) return Ring::integers();
  if (c.accept("rationals")) return Ring::rationals();
  if (c.accept("zmod")) {
    c.expect(":");
    return Ring::zmod(Integer(c.digits()));
  }
  if (c.accept("poly")) {
    c.expect("(");
    Ring base = parse_ring(c);
    c.expect(";");
    auto vars = var_list(c);
    std::vector<std::string> inv;
    if (c.accept(";")) {
      c.expect("inv");
      inv = var_list(c);
    }
    c.expect(")");
    return Ring::polynomial(base, vars, inv);
  }
  if (c.accept("quot")) {
    c.expect("(");
    Ring poly = parse_ring(c);
    c.expect(";");
    std::vector<Element> rels;
    for (const auto& text : c.comma_list_until_close()) rels.push_back(poly.parse_element(text));
    c.expect(")");
    return Ring::quotient(poly, rels);
  }
  c.fail("unknown ring form");
}

// Recursive-descent parser for ring elements.
class ElementParser {
 public:
  ElementParser(const Ring& ring, std::string_view text) : ring_(ring), cur_(text) {}

  Element parse() {
    Element e = expr();
    if (!cur_.done()) cur_.fail("trailing input");
    return e;
  }

 private:
  Element expr() {
    Element acc = term();
    while (true) {
      if (cur_.accept("+")) {
        acc = acc + term();
      } else if (cur_.peek() == '-') {
        cur_.accept("-");
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }
  Element term() {
    Element acc = unary();
    while (true) {
      if (cur_.accept("*")) {
        acc = acc * unary();
      } else if (cur_.accept("/")) {
        Integer d(cur_.digits());
        acc = exact_div(acc, d);
      } else {
        return acc;
      }
    }
  }
  Element unary() {
    if (cur_.accept("-")) return -unary();
    if (cur_.accept("+")) return unary();
    return power();
  }
  Element power() {
    Element base = atom();
    if (!cur_.accept("^")) return base;
    bool negative = cur_.accept("-");
    const unsigned long e = std::stoul(cur_.digits());
    if (!negative) return pow(base, e);
    auto inv = elem_is_unit(base);
    if (!inv) cur_.fail("negative power of a non-unit");
    return pow(*inv, e);
  }
  Element atom() {
    const char c = cur_.peek();
    if (c == '(') {
      cur_.accept("(");
      Element e = expr();
      cur_.expect(")");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return ring_.from_integer(Integer(cur_.digits()));
    const std::string name = cur_.identifier();
    auto idx = ring_.var_index(name);
    if (!idx) throw ValidationError("unknown variable '" + name + "' in ring " + ring_.descriptor());
    return ring_.variable(*idx);
  }

  const Ring& ring_;
  Cursor cur_;
};

}  // namespace

Ring Ring::parse(std::string_view text) {
  Cursor c(text);
  Ring r = parse_ring(c);
  if (!c.done()) c.fail("trailing input");
  return r;
}

Element Ring::parse_element(std::string_view text) const { return ElementParser(*this, text).parse(); }

}  // namespace wittforge
