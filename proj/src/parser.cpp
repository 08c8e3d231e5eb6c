#include "autfn/parser.hpp"

#include <cctype>
#include <optional>

namespace autfn {

namespace {

enum class Tok { Ident, Int, LParen, RParen, LBracket, RBracket, Comma, Caret, Prime, End };

struct Token {
  Tok kind;
  std::string text;
  long value = 0;
  std::size_t pos = 0;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) { tokenize(); }
  const std::vector<Token>& tokens() const { return tokens_; }

 private:
  void tokenize() {
    std::size_t i = 0;
    while (i < text_.size()) {
      char c = text_[i];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
        continue;
      }
      std::size_t start = i;
      if (std::isalpha(static_cast<unsigned char>(c))) {
        std::string ident;
        while (i < text_.size() && std::isalnum(static_cast<unsigned char>(text_[i]))) {
          ident.push_back(text_[i++]);
        }
        tokens_.push_back({Tok::Ident, ident, 0, start});
      } else if (std::isdigit(static_cast<unsigned char>(c)) ||
                 (c == '-' && i + 1 < text_.size() &&
                  std::isdigit(static_cast<unsigned char>(text_[i + 1])))) {
        std::string num;
        if (c == '-') num.push_back(text_[i++]);
        while (i < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i]))) {
          num.push_back(text_[i++]);
        }
        tokens_.push_back({Tok::Int, num, std::stol(num), start});
      } else {
        Tok kind;
        switch (c) {
          case '(': kind = Tok::LParen; break;
          case ')': kind = Tok::RParen; break;
          case '[': kind = Tok::LBracket; break;
          case ']': kind = Tok::RBracket; break;
          case ',': kind = Tok::Comma; break;
          case '^': kind = Tok::Caret; break;
          case '\'': kind = Tok::Prime; break;
          default:
            throw ParseError(std::string("unexpected character '") + c + "'", start);
        }
        tokens_.push_back({kind, std::string(1, c), 0, start});
        ++i;
      }
    }
    tokens_.push_back({Tok::End, "", 0, text_.size()});
  }

  std::string_view text_;
  std::vector<Token> tokens_;
};

class Parser {
 public:
  Parser(std::string_view text, int n) : lexer_(text), rank_(n) {
    if (n < 1) throw SemanticError("rank must be >= 1");
  }

  GenExpr::Ptr parse() {
    GenExpr::Ptr e = parse_seq();
    expect(Tok::End, "end of input");
    return e;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    std::size_t k = index_ + ahead;
    if (k >= lexer_.tokens().size()) k = lexer_.tokens().size() - 1;
    return lexer_.tokens()[k];
  }
  Token next() { return lexer_.tokens()[index_++]; }
  void expect(Tok kind, const std::string& what) {
    if (peek().kind != kind) {
      throw ParseError("expected " + what + ", got '" + peek().text + "'", peek().pos);
    }
    ++index_;
  }

  bool starts_term() const {
    Tok k = peek().kind;
    return k == Tok::Ident || k == Tok::LParen || k == Tok::LBracket;
  }

  GenExpr::Ptr parse_seq() {
    std::vector<GenExpr::Ptr> factors;
    factors.push_back(parse_term());
    while (starts_term()) factors.push_back(parse_term());
    if (factors.size() == 1) return factors[0];
    return GenExpr::make(GenExpr::Seq{std::move(factors)});
  }

  GenExpr::Ptr parse_term() {
    GenExpr::Ptr e = parse_primary();
    for (;;) {
      if (peek().kind == Tok::Prime) {
        next();
        e = GenExpr::make(GenExpr::Inverse{e});
      } else if (peek().kind == Tok::Caret) {
        next();
        if (peek().kind != Tok::Int) {
          throw ParseError("expected integer exponent after '^'", peek().pos);
        }
        long exp = next().value;
        e = GenExpr::make(GenExpr::Power{e, exp});
      } else {
        break;
      }
    }
    return e;
  }

  GenExpr::Ptr parse_primary() {
    const Token& t = peek();
    if (t.kind == Tok::LParen) {
      next();
      GenExpr::Ptr e = parse_seq();
      expect(Tok::RParen, "')'");
      return e;
    }
    if (t.kind == Tok::LBracket) {
      next();
      GenExpr::Ptr left = parse_seq();
      expect(Tok::Comma, "',' in commutator");
      GenExpr::Ptr right = parse_seq();
      expect(Tok::RBracket, "']'");
      return GenExpr::make(GenExpr::Commutator{left, right});
    }
    if (t.kind == Tok::Ident) return parse_atom();
    throw ParseError("expected an expression, got '" + t.text + "'", t.pos);
  }

  GenExpr::Ptr parse_atom() {
    Token t = next();
    const std::string& name = t.text;
    if (name == "l" || name == "r") {
      auto [i, j] = parse_index_pair();
      check_index(i, rank_, t.pos);
      check_index(j, rank_, t.pos);
      if (i == j) throw SemanticError("Nielsen move " + name + "(" + std::to_string(i) +
                                      "," + std::to_string(j) + ") needs i != j");
      if (name == "l") return GenExpr::make(GenExpr::LambdaAtom{i, j});
      return GenExpr::make(GenExpr::RhoAtom{i, j});
    }
    if (name == "e") {
      expect(Tok::LParen, "'('");
      int i = parse_int(t.pos);
      expect(Tok::RParen, "')'");
      check_index(i, rank_, t.pos);
      return GenExpr::make(GenExpr::EpsAtom{i});
    }
    if (name == "p") {
      GenExpr::Cycles cycles = parse_cycles(rank_, t.pos);
      return GenExpr::make(GenExpr::PermAtom{std::move(cycles)});
    }
    if (name == "sig") {
      GenExpr::Cycles cycles = parse_cycles(rank_ + 1, t.pos);
      return GenExpr::make(GenExpr::SigAtom{std::move(cycles)});
    }
    if (name == "iota") return GenExpr::make(GenExpr::SpecialAtom{Special::Iota});
    if (name == "z") return GenExpr::make(GenExpr::SpecialAtom{Special::Z});
    if (name == "alpha") return GenExpr::make(GenExpr::SpecialAtom{Special::Alpha});
    if (name == "beta") return GenExpr::make(GenExpr::SpecialAtom{Special::Beta});
    if (name == "theta") return GenExpr::make(GenExpr::SpecialAtom{Special::Theta});
    throw ParseError("unknown generator '" + name + "'", t.pos);
  }

  std::pair<int, int> parse_index_pair() {
    expect(Tok::LParen, "'('");
    int i = parse_int(peek().pos);
    expect(Tok::Comma, "','");
    int j = parse_int(peek().pos);
    expect(Tok::RParen, "')'");
    return {i, j};
  }

  int parse_int(std::size_t pos) {
    if (peek().kind != Tok::Int) {
      throw ParseError("expected integer, got '" + peek().text + "'", pos);
    }
    return static_cast<int>(next().value);
  }

  static void check_index(int i, int bound, std::size_t pos) {
    if (i < 1 || i > bound) {
      throw SemanticError("index " + std::to_string(i) + " outside 1.." +
                          std::to_string(bound) + " (at position " + std::to_string(pos) +
                          ")");
    }
  }

  // One or more parenthesized all-integer groups. A following '(' that is
  // not all-integer up to its ')' starts a new parenthesized expression
  // instead, so stop there.
  GenExpr::Cycles parse_cycles(int bound, std::size_t pos) {
    GenExpr::Cycles cycles;
    bool first = true;
    while (peek().kind == Tok::LParen && (first || group_is_all_ints())) {
      next();
      std::vector<int> cyc;
      while (peek().kind == Tok::Int) {
        int v = static_cast<int>(next().value);
        check_index(v, bound, pos);
        cyc.push_back(v);
      }
      expect(Tok::RParen, "')' in cycle");
      if (!cyc.empty()) cycles.push_back(std::move(cyc));
      first = false;
    }
    if (first) throw ParseError("expected '(' after permutation name", peek().pos);
    return cycles;
  }

  bool group_is_all_ints() const {
    std::size_t ahead = 1;  // past '('
    while (peek(ahead).kind == Tok::Int) ++ahead;
    return peek(ahead).kind == Tok::RParen && ahead > 1;
  }

  Lexer lexer_;
  int rank_;
  std::size_t index_ = 0;
};

}  // namespace

GenExpr::Ptr parse_expr(std::string_view text, int n) { return Parser(text, n).parse(); }

}  // namespace autfn
