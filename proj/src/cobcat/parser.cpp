#include "shc/cobcat/parser.hpp"

#include <cctype>
#include <optional>

namespace shc::cob {

ParseError::ParseError(const std::string& what, std::size_t position)
    : Error("at " + std::to_string(position) + ": " + what), position_(position) {}

namespace {

enum class Tok { Ident, Int, Sym, Arrow, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> lex(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    unsigned char ch = static_cast<unsigned char>(s[i]);
    if (std::isspace(ch)) {
      ++i;
    } else if (std::isalpha(ch)) {
      std::size_t j = i;
      while (j < s.size() && std::isalnum(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Tok::Ident, s.substr(i, j - i), i});
      i = j;
    } else if (std::isdigit(ch)) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      if (j - i > 6) throw ParseError("number too large", i);
      out.push_back({Tok::Int, s.substr(i, j - i), i});
      i = j;
    } else if (s.compare(i, 2, "->") == 0) {
      out.push_back({Tok::Arrow, "->", i});
      i += 2;
    } else if (std::string("();|,:{}+-").find(s[i]) != std::string::npos) {
      out.push_back({Tok::Sym, std::string(1, s[i]), i});
      ++i;
    } else {
      throw ParseError(std::string("unexpected character '") + s[i] + "'", i);
    }
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Cobordism run() {
    Cobordism c = expr();
    if (peek().kind != Tok::End) throw ParseError("unexpected '" + peek().text + "'", peek().pos);
    return c;
  }

 private:
  const Token& peek() const { return toks_[at_]; }
  const Token& next() { return toks_[at_++]; }
  bool accept(const std::string& sym) {
    if (peek().kind == Tok::Sym && peek().text == sym) {
      ++at_;
      return true;
    }
    return false;
  }
  void expect(const std::string& sym) {
    if (!accept(sym)) throw ParseError("expected '" + sym + "'", peek().pos);
  }
  std::size_t integer() {
    if (peek().kind != Tok::Int) throw ParseError("expected a number", peek().pos);
    return std::stoul(next().text);
  }

  Cobordism expr() {
    Cobordism c = product();
    while (peek().kind == Tok::Sym && peek().text == ";") {
      std::size_t pos = next().pos;
      Cobordism rhs = product();
      try {
        c = compose(c, rhs);
      } catch (const Error& e) {
        throw ParseError(e.what(), pos);
      }
    }
    return c;
  }

  Cobordism product() {
    Cobordism c = factor();
    while (accept("|")) c = tensor(c, factor());
    return c;
  }

  Cobordism factor() {
    if (accept("(")) {
      Cobordism c = expr();
      expect(")");
      return c;
    }
    if (peek().kind != Tok::Ident) throw ParseError("expected a cobordism", peek().pos);
    Token t = next();
    if (t.text == "cyl") return Cobordism::cyl();
    if (t.text == "cap") return Cobordism::cap();
    if (t.text == "cup") return Cobordism::cup();
    if (t.text == "pants") return Cobordism::pants();
    if (t.text == "copants") return Cobordism::copants();
    if (t.text == "empty") return Cobordism::identity(ClosedObject{});
    if (t.text == "id") {
      expect("(");
      std::size_t n = integer();
      expect(")");
      return Cobordism::identity(ClosedObject::circles(n));
    }
    if (t.text == "genus") {
      expect("(");
      std::size_t g = integer();
      expect(";");
      std::size_t in = integer();
      expect(",");
      std::size_t out = integer();
      expect(")");
      return Cobordism::surface(static_cast<int>(g), in, out);
    }
    if (t.text == "nf" || t.text == "nf0") return normal(t.text == "nf" ? 1 : 0, t.pos);
    throw ParseError("unknown atom '" + t.text + "'", t.pos);
  }

  std::vector<int> signs() {
    std::vector<int> out;
    while (peek().kind == Tok::Sym && (peek().text == "+" || peek().text == "-"))
      out.push_back(next().text == "+" ? 1 : -1);
    return out;
  }

  std::vector<std::size_t> indices() {
    std::vector<std::size_t> out;
    while (peek().kind == Tok::Int) out.push_back(integer());
    return out;
  }

  void arrow() {
    if (peek().kind != Tok::Arrow) throw ParseError("expected '->'", peek().pos);
    ++at_;
  }

  Cobordism normal(int dim, std::size_t pos) {
    expect("(");
    ClosedObject src{dim, signs()};
    arrow();
    ClosedObject tgt{dim, signs()};
    expect(")");
    std::vector<Component> comps;
    while (accept("{")) {
      const Token& g = peek();
      if (g.kind != Tok::Ident || g.text.size() < 2 || g.text[0] != 'g' ||
          g.text.find_first_not_of("0123456789", 1) != std::string::npos)
        throw ParseError("expected genus tag g<n>", g.pos);
      Component c;
      c.genus = std::stoi(next().text.substr(1));
      expect(":");
      c.inputs = indices();
      arrow();
      c.outputs = indices();
      expect("}");
      comps.push_back(c);
    }
    try {
      return Cobordism(src, tgt, comps);
    } catch (const Error& e) {
      throw ParseError(e.what(), pos);
    }
  }

  std::vector<Token> toks_;
  std::size_t at_ = 0;
};

std::string join_signs(const std::vector<int>& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? " " : "") + std::string(s[i] > 0 ? "+" : "-");
  return out;
}

std::string join_indices(const std::vector<std::size_t>& v) {
  std::string out;
  for (auto k : v) out += " " + std::to_string(k);
  return out;
}

}  // namespace

Cobordism parse(const std::string& text) { return Parser(lex(text)).run(); }

std::string print(const Cobordism& c) {
  std::string in = join_signs(c.source().orientation), out = join_signs(c.target().orientation);
  std::string s = c.dim() == 1 ? "nf(" : "nf0(";
  s += in + (in.empty() ? "" : " ") + "->" + (out.empty() ? "" : " ") + out + ")";
  for (const auto& comp : c.components())
    s += "{g" + std::to_string(comp.genus) + ":" + join_indices(comp.inputs) + " ->" + join_indices(comp.outputs) + "}";
  return s;
}

}  // namespace shc::cob
