#include "hv/parse.hpp"

#include <cctype>
#include <limits>
#include <string>

#include "hv/errors.hpp"

namespace hv {

namespace {

// Not recoverable by backtracking.
struct HardParseError : ParseError {
  using ParseError::ParseError;
};

class Cursor {
 public:
  Cursor(std::string_view src, std::size_t line = 1) : src_(src), line_(line) {}

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= src_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }
  // Next raw character without skipping whitespace.
  char raw() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }
  char raw_at(std::size_t off) const { return pos_ + off < src_.size() ? src_[pos_ + off] : '\0'; }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  std::string_view rest() const { return src_.substr(pos_); }
  std::size_t pos() const { return pos_; }
  void reset(std::size_t p) { pos_ = p; }
  void advance(std::size_t n) { pos_ += n; }

  [[noreturn]] void fail(const std::string& what) const { fail_at(pos_, what); }
  [[noreturn]] void fail_at(std::size_t at, const std::string& what, bool hard = false) const {
    std::size_t line = line_;
    std::size_t col = 1;
    for (std::size_t i = 0; i < at && i < src_.size(); ++i) {
      if (src_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    if (hard) throw HardParseError(what, line, col);
    throw ParseError(what, line, col);
  }

  mpz_class digits() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return mpz_class(std::string(src_.substr(start, pos_ - start)));
  }

  std::int64_t integer() {
    skip_ws();
    std::size_t start = pos_;
    bool negative = false;
    if (raw() == '-' || raw() == '+') {
      negative = raw() == '-';
      ++pos_;
      skip_ws();
    }
    if (!std::isdigit(static_cast<unsigned char>(raw()))) fail("expected integer index");
    mpz_class v = digits();
    if (negative) v = -v;
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
      fail_at(start, "index out of 64-bit range");
    return static_cast<std::int64_t>(v.get_si());
  }

 private:
  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_;
};

Scalar parse_part(Cursor& c) {
  bool negative = false;
  if (c.peek() == '-') {
    c.advance(1);
    negative = true;
  } else if (c.peek() == '+') {
    c.advance(1);
  }
  Scalar value;
  if (c.peek() == 'i') {
    c.advance(1);
    value = Scalar::imaginary_unit();
  } else {
    if (!std::isdigit(static_cast<unsigned char>(c.peek()))) c.fail("expected a number");
    mpz_class num = c.digits();
    mpz_class den = 1;
    if (c.peek() == '/') {
      c.expect('/');
      std::size_t at = (c.skip_ws(), c.pos());
      den = c.digits();
      if (den == 0) c.fail_at(at, "zero denominator", true);
    }
    mpq_class q(num, den);
    q.canonicalize();
    value = Scalar(q);
    if (c.peek() == 'i') {
      c.advance(1);
      value = value * Scalar::imaginary_unit();
    }
  }
  return negative ? -value : value;
}

Scalar parse_scalar_at(Cursor& c) {
  if (c.peek() == '(') {
    c.advance(1);
    Scalar total = parse_part(c);
    while (c.peek() == '+' || c.peek() == '-') total += parse_part(c);
    c.expect(')');
    return total;
  }
  return parse_part(c);
}

std::optional<Scalar> try_scalar_coefficient(Cursor& c) {
  std::size_t save = c.pos();
  try {
    Scalar s = parse_scalar_at(c);
    if (c.accept('*')) return s;
  } catch (const HardParseError&) {
    throw;
  } catch (const ParseError&) {
  }
  c.reset(save);
  return std::nullopt;
}

bool starts_basis(Cursor& c) {
  char ch = c.peek();
  return ch == 'L' || ch == 'I' || ch == 'C';
}

BasisKey parse_key_at(Cursor& c) {
  char ch = c.peek();
  std::size_t at = c.pos();
  if (ch == 'L' || ch == 'I') {
    c.advance(1);
    c.expect('(');
    std::int64_t n = c.integer();
    c.expect(')');
    return ch == 'L' ? BasisKey::L(n) : BasisKey::I(n);
  }
  if (ch == 'C') {
    c.advance(1);
    char d = c.raw();
    if (d == '1' || d == '2' || d == '3') {
      c.advance(1);
      return d == '1' ? BasisKey::C1() : d == '2' ? BasisKey::C2() : BasisKey::C3();
    }
  }
  c.fail_at(at, "expected basis symbol L(n), I(n), C1, C2 or C3");
}

bool accept_zero_literal(Cursor& c) {
  if (c.peek() != '0') return false;
  std::size_t off = 1;
  while (std::isspace(static_cast<unsigned char>(c.raw_at(off)))) ++off;
  char next = c.raw_at(off);
  if (std::isdigit(static_cast<unsigned char>(next)) || next == '/' || next == 'i' || next == '*') return false;
  c.advance(1);
  return true;
}

Element parse_term(Cursor& c) {
  if (accept_zero_literal(c)) return {};
  Scalar coeff(1);
  if (!starts_basis(c)) {
    coeff = parse_scalar_at(c);
    c.expect('*');
  }
  return Element(parse_key_at(c), coeff);
}

Element parse_element_at(Cursor& c) {
  Element out;
  Scalar sign(1);
  if (c.peek() == '-') {
    c.advance(1);
    sign = Scalar(-1);
  }
  out.axpy(sign, parse_term(c));
  while (true) {
    char ch = c.peek();
    if (ch != '+' && ch != '-') break;
    c.advance(1);
    out.axpy(ch == '-' ? Scalar(-1) : Scalar(1), parse_term(c));
  }
  return out;
}

class ExpressionParser {
 public:
  ExpressionParser(Cursor& c, const ExpressionContext& ctx) : c_(c), ctx_(ctx) {}

  Element expr() {
    Element out;
    Scalar sign(1);
    if (c_.peek() == '-') {
      c_.advance(1);
      sign = Scalar(-1);
    }
    out.axpy(sign, prod());
    while (true) {
      char ch = c_.peek();
      if (ch != '+' && ch != '-') break;
      c_.advance(1);
      out.axpy(ch == '-' ? Scalar(-1) : Scalar(1), prod());
    }
    return out;
  }

 private:
  bool accept_o() {
    if (c_.peek() != 'o') return false;
    char next = c_.raw_at(1);
    if (std::isalnum(static_cast<unsigned char>(next))) return false;
    c_.advance(1);
    return true;
  }

  Element prod() {
    Element out = unary();
    while (true) {
      std::size_t at = c_.pos();
      if (!accept_o()) break;
      if (!ctx_.leftsym) c_.fail_at(at, "left-symmetric product needs --alpha/--beta/--epsilon");
      Element rhs = unary();
      out = ls_product(*ctx_.leftsym, out, rhs);
    }
    return out;
  }

  Element unary() {
    if (auto s = try_scalar_coefficient(c_)) return *s * atom();
    return atom();
  }

  Element atom() {
    if (accept_zero_literal(c_)) return {};
    if (c_.accept('[')) {
      Element x = expr();
      c_.expect(',');
      Element y = expr();
      c_.expect(']');
      if (ctx_.bracket == AlgebraKind::W00) return bracket(AlgebraKind::W00, project_w00(x), project_w00(y));
      return bracket(ctx_.bracket, x, y);
    }
    if (c_.accept('(')) {
      Element x = expr();
      c_.expect(')');
      return x;
    }
    return Element(parse_key_at(c_));
  }

  Cursor& c_;
  const ExpressionContext& ctx_;
};

void expect_end(Cursor& c) {
  if (!c.at_end()) c.fail("unexpected trailing input");
}

struct Line {
  std::string_view text;
  std::size_t number;
};

std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 1;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    std::size_t hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    bool blank = true;
    for (char ch : line)
      if (!std::isspace(static_cast<unsigned char>(ch))) blank = false;
    if (!blank) out.push_back({line, number});
    ++number;
    start = end + 1;
  }
  return out;
}

bool accept_word(Cursor& c, std::string_view word) {
  c.skip_ws();
  if (c.rest().substr(0, word.size()) != word) return false;
  char after = c.raw_at(word.size());
  if (std::isalnum(static_cast<unsigned char>(after))) return false;
  c.advance(word.size());
  return true;
}

void expect_arrow(Cursor& c) {
  c.skip_ws();
  if (c.rest().substr(0, 2) != "->") c.fail("expected '->'");
  c.advance(2);
}

std::int64_t parse_window(Cursor& c) {
  std::size_t at = (c.skip_ws(), c.pos());
  std::int64_t n = c.integer();
  if (n < 1) c.fail_at(at, "window N must be at least 1");
  return n;
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  Cursor c(text);
  Scalar s = parse_scalar_at(c);
  expect_end(c);
  return s;
}

BasisKey parse_key(std::string_view text) {
  Cursor c(text);
  BasisKey k = parse_key_at(c);
  expect_end(c);
  return k;
}

Element parse_element(std::string_view text) {
  Cursor c(text);
  Element x = parse_element_at(c);
  expect_end(c);
  return x;
}

Element parse_expression(std::string_view text, const ExpressionContext& ctx) {
  Cursor c(text);
  ExpressionParser p(c, ctx);
  Element x = p.expr();
  expect_end(c);
  return x;
}

LinearMap parse_linear_map(std::string_view text, AlgebraKind inner_kind) {
  std::vector<LinearMap> parts;
  std::map<BasisKey, Element> central;
  bool has_central = false;
  TabularMap table;
  bool has_table = false;

  for (const auto& line : content_lines(text)) {
    Cursor c(line.text, line.number);
    if (c.accept('@')) {
      if (accept_word(c, "inner")) {
        Element x = parse_element_at(c);
        if (inner_kind == AlgebraKind::W00 && has_central_symbols(x))
          c.fail("@inner element cannot carry C1, C2, C3 in W(0,0)");
        parts.push_back(adjoint(inner_kind, x));
      } else if (accept_word(c, "d1")) {
        parts.push_back(OuterD1{parse_scalar_at(c)});
      } else if (accept_word(c, "d2")) {
        parts.push_back(OuterD2{parse_scalar_at(c)});
      } else if (accept_word(c, "d3")) {
        parts.push_back(OuterD3{parse_scalar_at(c)});
      } else if (accept_word(c, "id")) {
        parts.push_back(ScalarId{parse_scalar_at(c)});
      } else if (accept_word(c, "central")) {
        BasisKey k = parse_key_at(c);
        expect_arrow(c);
        central[k] += parse_element_at(c);
        has_central = true;
      } else if (accept_word(c, "domain")) {
        std::int64_t n = parse_window(c);
        for (const auto& k : window_basis(Window{n}, true)) table.domain.insert(k);
        has_table = true;
      } else {
        c.fail("unknown directive");
      }
    } else {
      BasisKey k = parse_key_at(c);
      expect_arrow(c);
      Element v = parse_element_at(c);
      table.domain.insert(k);
      table.table[k] += v;
      if (table.table[k].is_zero()) table.table.erase(k);
      has_table = true;
    }
    expect_end(c);
  }
  if (has_central) parts.push_back(make_central(std::move(central)));
  if (has_table) parts.push_back(std::move(table));
  if (parts.size() == 1) return std::move(parts.front());
  return SumMap{std::move(parts)};
}

BilinearMap parse_bilinear_map(std::string_view text) {
  std::vector<BilinearMap> parts;
  TabularBi table;
  bool has_table = false;

  for (const auto& line : content_lines(text)) {
    Cursor c(line.text, line.number);
    if (c.accept('@')) {
      if (accept_word(c, "inner")) {
        parts.push_back(InnerBi{parse_scalar_at(c)});
      } else if (accept_word(c, "romega")) {
        Omega omega;
        c.expect('{');
        if (!c.accept('}')) {
          do {
            std::int64_t k = c.integer();
            c.expect(':');
            omega.set(k, omega.values().count(k) ? omega.values().at(k) + parse_scalar_at(c)
                                                 : parse_scalar_at(c));
          } while (c.accept(','));
          c.expect('}');
        }
        parts.push_back(ROmega{std::move(omega)});
      } else if (accept_word(c, "domain")) {
        std::int64_t n = parse_window(c);
        auto keys = window_basis(Window{n}, true);
        for (const auto& a : keys)
          for (const auto& b : keys) table.domain.insert({a, b});
        has_table = true;
      } else {
        c.fail("unknown directive");
      }
    } else {
      c.expect('(');
      BasisKey a = parse_key_at(c);
      c.expect(',');
      BasisKey b = parse_key_at(c);
      c.expect(')');
      expect_arrow(c);
      Element v = parse_element_at(c);
      KeyPair key{a, b};
      table.domain.insert(key);
      table.table[key] += v;
      if (table.table[key].is_zero()) table.table.erase(key);
      has_table = true;
    }
    expect_end(c);
  }
  if (has_table) parts.push_back(std::move(table));
  if (parts.size() == 1) return std::move(parts.front());
  return SumBi{std::move(parts)};
}

}  // namespace hv
