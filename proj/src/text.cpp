#include "folia/text.hpp"

#include <cctype>
#include <optional>

#include "folia/errors.hpp"

namespace folia {

namespace {

enum class Tok { Number, Ident, Marker, Op, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '#') {
      while (i < s.size() && s[i] != '\n') ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Tok::Number, std::string(s.substr(i, j - i)), i});
      i = j;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      std::string word(s.substr(i, j - i));
      const bool marker = word == "dx" || word == "dy" || word == "dz";
      out.push_back({marker ? Tok::Marker : Tok::Ident, std::move(word), i});
      i = j;
    } else if (std::string_view("+-*/^();=").find(c) != std::string_view::npos) {
      out.push_back({Tok::Op, std::string(1, c), i});
      ++i;
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", i);
    }
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

class Parser {
 public:
  Parser(std::vector<Token> toks, const ParamMap& params, const std::vector<std::string>& names)
      : toks_(std::move(toks)), params_(params), names_(names) {}

  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }
  bool at_op(char c) const { return peek().kind == Tok::Op && peek().text[0] == c; }
  bool at_end() const { return peek().kind == Tok::End; }

  void expect_op(char c) {
    if (!at_op(c)) throw ParseError(std::string("expected '") + c + "'", peek().pos);
    ++pos_;
  }

  MultiPoly expr() {
    MultiPoly acc = zero();
    bool negate = false;
    if (at_op('+') || at_op('-')) negate = next().text[0] == '-';
    MultiPoly t = term();
    acc = negate ? -t : t;
    while (at_op('+') || at_op('-')) {
      const bool minus = next().text[0] == '-';
      MultiPoly u = term();
      if (minus) acc -= u;
      else acc += u;
    }
    return acc;
  }

 private:
  MultiPoly zero() const { return MultiPoly(static_cast<int>(names_.size())); }

  bool starts_operand() const {
    const Token& t = peek();
    return t.kind == Tok::Number || t.kind == Tok::Ident || (t.kind == Tok::Op && t.text[0] == '(');
  }

  MultiPoly term() {
    MultiPoly acc = power();
    while (true) {
      if (at_op('*')) {
        ++pos_;
        acc = acc * power();
      } else if (at_op('/')) {
        const std::size_t where = peek().pos;
        ++pos_;
        MultiPoly d = power();
        if (d.is_zero()) throw ParseError("division by zero", where);
        if (!d.is_constant()) throw ParseError("division by a non-constant expression", where);
        acc = acc.scaled(d.constant_term().inverse());
      } else if (starts_operand()) {
        acc = acc * power();
      } else {
        return acc;
      }
    }
  }

  MultiPoly power() {
    if (at_op('-')) {
      ++pos_;
      return -power();
    }
    MultiPoly base = atom();
    if (at_op('^')) {
      ++pos_;
      const Token& e = peek();
      if (e.kind != Tok::Number) throw ParseError("exponent must be a nonnegative integer", e.pos);
      ++pos_;
      if (e.text.size() > 5) throw ParseError("exponent too large", e.pos);
      base = base.pow(static_cast<unsigned>(std::stoul(e.text)));
    }
    return base;
  }

  MultiPoly atom() {
    const Token& t = peek();
    const int arity = static_cast<int>(names_.size());
    switch (t.kind) {
      case Tok::Number:
        ++pos_;
        return MultiPoly::constant(arity, Scalar(Rational(Integer(t.text))));
      case Tok::Ident: {
        ++pos_;
        for (int v = 0; v < arity; ++v)
          if (names_[static_cast<std::size_t>(v)] == t.text) return MultiPoly::variable(arity, v);
        auto it = params_.find(t.text);
        if (it == params_.end()) throw ParseError("unknown name '" + t.text + "'", t.pos);
        return MultiPoly::constant(arity, Scalar(it->second));
      }
      case Tok::Op:
        if (t.text[0] == '(') {
          ++pos_;
          MultiPoly inner = expr();
          expect_op(')');
          return inner;
        }
        break;
      case Tok::Marker:
        throw ParseError("differential '" + t.text + "' without a coefficient", t.pos);
      case Tok::End:
        throw ParseError("unexpected end of input", t.pos);
    }
    throw ParseError("unexpected '" + t.text + "'", t.pos);
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  const ParamMap& params_;
  const std::vector<std::string>& names_;

  friend FoliationForm parse_marked(Parser&);
};

const std::vector<std::string> kXYZ{"x", "y", "z"};

FoliationForm parse_marked(Parser& p) {
  std::array<MultiPoly, 3> coeffs{MultiPoly(3), MultiPoly(3), MultiPoly(3)};
  std::array<bool, 3> seen{false, false, false};
  while (!p.at_end()) {
    MultiPoly c = p.expr();
    const Token& m = p.peek();
    if (m.kind != Tok::Marker) throw ParseError("expected dx, dy or dz", m.pos);
    ++p.pos_;
    const std::size_t i = static_cast<std::size_t>(m.text[1] - 'x');
    coeffs[i] += c;
    seen[i] = true;
  }
  std::string missing;
  for (std::size_t i = 0; i < 3; ++i)
    if (!seen[i]) missing += std::string(missing.empty() ? "" : ", ") + "d" + kXYZ[i];
  if (!missing.empty()) {
    const MultiPoly r = euler_residual(coeffs[0], coeffs[1], coeffs[2]);
    throw ValidationError("missing " + missing + " coefficient; Euler residual a*x + b*y + c*z = " + to_string(r));
  }
  return make_foliation(coeffs[0], coeffs[1], coeffs[2]);
}

}  // namespace

MultiPoly parse_polynomial(std::string_view text, const ParamMap& params, const std::vector<std::string>& names) {
  Parser p(tokenize(text), params, names);
  MultiPoly out = p.expr();
  if (!p.at_end()) throw ParseError("unexpected '" + p.peek().text + "'", p.peek().pos);
  return out;
}

FoliationForm parse_form(std::string_view text, const ParamMap& params) {
  auto toks = tokenize(text);
  bool marked = false;
  for (const auto& t : toks)
    if (t.kind == Tok::Marker) marked = true;
  if (marked) {
    Parser p(std::move(toks), params, kXYZ);
    return parse_marked(p);
  }
  std::vector<MultiPoly> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t semi = text.find(';', start);
    const std::string_view piece = text.substr(start, semi == std::string_view::npos ? semi : semi - start);
    try {
      parts.push_back(parse_polynomial(piece, params));
    } catch (const ParseError& e) {
      throw ParseError(std::string(e.what()).substr(0, std::string(e.what()).rfind(" at position")), start + e.position());
    }
    if (semi == std::string_view::npos) break;
    start = semi + 1;
  }
  if (parts.size() != 3)
    throw ParseError("expected 'a dx + b dy + c dz' or three coefficients separated by ';'", 0);
  return make_foliation(parts[0], parts[1], parts[2]);
}

ProjectiveLine parse_line(std::string_view text, const ParamMap& params) {
  std::string_view body = text;
  const auto eq = text.find('=');
  if (eq != std::string_view::npos) {
    const MultiPoly rhs = parse_polynomial(text.substr(eq + 1), params);
    if (!rhs.is_zero()) throw ParseError("a line must be written as 'l = 0'", eq);
    body = text.substr(0, eq);
  }
  return ProjectiveLine::from_linear_form(parse_polynomial(body, params));
}

std::pair<std::string, Rational> parse_param(std::string_view text) {
  const auto eq = text.find('=');
  if (eq == std::string_view::npos || eq == 0) throw ParseError("expected name=value", 0);
  std::string name(text.substr(0, eq));
  if (name == "x" || name == "y" || name == "z") throw ValidationError("parameter name clashes with a variable");
  return {name, parse_rational(text.substr(eq + 1))};
}

}  // namespace folia
