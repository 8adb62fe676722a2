#include <cctype>
#include <string>
#include <vector>

#include "mtlwb/error.hpp"
#include "mtlwb/formula.hpp"

namespace mtlwb {
namespace {

enum class Tok {
  ident,
  lparen,
  rparen,
  comma,
  dot,
  strong_and,
  and_,
  or_,
  implies,
  iff,
  neg,
  delta,
  bottom,
  forall,
  exists,
  end,
};

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

const char* describe(Tok t) {
  switch (t) {
    case Tok::ident: return "identifier";
    case Tok::lparen: return "'('";
    case Tok::rparen: return "')'";
    case Tok::comma: return "','";
    case Tok::dot: return "'.'";
    case Tok::strong_and: return "'&'";
    case Tok::and_: return "'/\\'";
    case Tok::or_: return "'\\/'";
    case Tok::implies: return "'->'";
    case Tok::iff: return "'<->'";
    case Tok::neg: return "'~'";
    case Tok::delta: return "'!'";
    case Tok::bottom: return "'bot'";
    case Tok::forall: return "'forall'";
    case Tok::exists: return "'exists'";
    case Tok::end: return "end of input";
  }
  return "?";
}

// Unicode spellings of the connectives, accepted alongside the ASCII ones.
struct Glyph {
  std::string_view utf8;
  Tok kind;
};
constexpr Glyph kGlyphs[] = {
    {"∧", Tok::and_},   {"∨", Tok::or_},    {"→", Tok::implies},
    {"↔", Tok::iff},    {"¬", Tok::neg},    {"Δ", Tok::delta},
    {"⊥", Tok::bottom}, {"∀", Tok::forall}, {"∃", Tok::exists},
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space();
      int line = line_, col = column_;
      if (pos_ >= text_.size()) {
        out.push_back({Tok::end, "", line, col});
        return out;
      }
      out.push_back(next(line, col));
    }
  }

 private:
  void advance(std::size_t n) {
    for (std::size_t i = 0; i < n && pos_ < text_.size(); ++i, ++pos_) {
      unsigned char ch = static_cast<unsigned char>(text_[pos_]);
      if (ch == '\n') {
        ++line_;
        column_ = 1;
      } else if ((ch & 0xC0) != 0x80) {
        ++column_;
      }
    }
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) advance(1);
  }

  bool starts_with(std::string_view s) const { return text_.substr(pos_, s.size()) == s; }

  [[noreturn]] void fail(int line, int col, const std::string& what) const {
    throw Error(Errc::syntax_error,
                std::to_string(line) + ":" + std::to_string(col) + ": " + what);
  }

  Token next(int line, int col) {
    struct Fixed {
      std::string_view text;
      Tok kind;
    };
    static constexpr Fixed kFixed[] = {
        {"<->", Tok::iff}, {"->", Tok::implies}, {"/\\", Tok::and_}, {"\\/", Tok::or_},
        {"&", Tok::strong_and}, {"~", Tok::neg}, {"!", Tok::delta}, {"(", Tok::lparen},
        {")", Tok::rparen}, {",", Tok::comma}, {".", Tok::dot},
    };
    for (const auto& f : kFixed) {
      if (starts_with(f.text)) {
        advance(f.text.size());
        return {f.kind, std::string(f.text), line, col};
      }
    }
    for (const auto& g : kGlyphs) {
      if (starts_with(g.utf8)) {
        advance(g.utf8.size());
        return {g.kind, std::string(g.utf8), line, col};
      }
    }
    unsigned char ch = static_cast<unsigned char>(text_[pos_]);
    if (std::isalpha(ch) || ch == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size()) {
        unsigned char c = static_cast<unsigned char>(text_[pos_]);
        if (!std::isalnum(c) && c != '_') break;
        advance(1);
      }
      std::string word(text_.substr(start, pos_ - start));
      if (word == "bot") return {Tok::bottom, word, line, col};
      if (word == "forall") return {Tok::forall, word, line, col};
      if (word == "exists") return {Tok::exists, word, line, col};
      return {Tok::ident, word, line, col};
    }
    fail(line, col, "unexpected character '" + std::string(1, text_[pos_]) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

class Parser {
 public:
  Parser(std::vector<Token> tokens, Syntax syntax) : toks_(std::move(tokens)), syntax_(syntax) {}

  Formula run() {
    Formula f = formula();
    expect(Tok::end);
    return f;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }

  bool accept(Tok t) {
    if (peek().kind != t) return false;
    ++pos_;
    return true;
  }

  const Token& expect(Tok t) {
    if (peek().kind != t) fail(peek(), std::string("expected ") + describe(t));
    return toks_[pos_++];
  }

  [[noreturn]] void fail(const Token& at, const std::string& what) const {
    std::string found = at.kind == Tok::end ? "end of input" : "'" + at.text + "'";
    throw Error(Errc::syntax_error, std::to_string(at.line) + ":" + std::to_string(at.column) +
                                        ": " + what + ", found " + found);
  }

  Formula formula() { return iff(); }

  Formula iff() {
    Formula lhs = implies();
    if (accept(Tok::iff)) return Formula::iff(lhs, iff());
    return lhs;
  }

  Formula implies() {
    Formula lhs = disjunction();
    if (accept(Tok::implies)) return Formula::implies(lhs, implies());
    return lhs;
  }

  Formula disjunction() {
    Formula lhs = conjunction();
    while (accept(Tok::or_)) lhs = Formula::disj(lhs, conjunction());
    return lhs;
  }

  Formula conjunction() {
    Formula lhs = strong();
    while (accept(Tok::and_)) lhs = Formula::conj(lhs, strong());
    return lhs;
  }

  Formula strong() {
    Formula lhs = unary();
    while (accept(Tok::strong_and)) lhs = Formula::strong_conj(lhs, unary());
    return lhs;
  }

  Formula unary() {
    if (accept(Tok::neg)) return Formula::neg(unary());
    if (accept(Tok::delta)) return Formula::delta(unary());
    return primary();
  }

  Formula primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::bottom:
        ++pos_;
        return Formula::bottom();
      case Tok::lparen: {
        ++pos_;
        Formula inner = formula();
        expect(Tok::rparen);
        return inner;
      }
      case Tok::forall:
      case Tok::exists: {
        if (syntax_ == Syntax::prop) fail(t, "quantifier in a propositional formula");
        ++pos_;
        std::string var = expect(Tok::ident).text;
        expect(Tok::dot);
        Formula body = formula();
        return t.kind == Tok::forall ? Formula::forall(var, body) : Formula::exists(var, body);
      }
      case Tok::ident: {
        ++pos_;
        std::vector<std::string> args;
        if (peek().kind == Tok::lparen) {
          if (syntax_ == Syntax::prop) fail(peek(), "arguments on a propositional variable");
          ++pos_;
          args.push_back(expect(Tok::ident).text);
          while (accept(Tok::comma)) args.push_back(expect(Tok::ident).text);
          expect(Tok::rparen);
        }
        return Formula::atom(t.text, std::move(args));
      }
      default:
        fail(t, "expected a formula");
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  Syntax syntax_;
};

}  // namespace

Formula parse(std::string_view text, Syntax syntax) {
  Formula f = Parser(Lexer(text).run(), syntax).run();
  signature(f);  // arity consistency
  return f;
}

}  // namespace mtlwb
