#include "ltlc/parser.hpp"

#include <cctype>

namespace ltlc {

namespace {

enum class Tok {
  LParen, RParen, LBracket, RBracket, Comma, At,
  Not, And, Or, Implies, Iff,
  G, F, X, U, Fx, Gh, S,
  True, False, Ident, End,
};

struct Token {
  Tok kind;
  std::string text;
  SourceSpan span;
};

const char* tok_name(Tok t) {
  switch (t) {
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBracket: return "'['";
    case Tok::RBracket: return "']'";
    case Tok::Comma: return "','";
    case Tok::At: return "'@'";
    case Tok::Not: return "'!'";
    case Tok::And: return "'&'";
    case Tok::Or: return "'|'";
    case Tok::Implies: return "'->'";
    case Tok::Iff: return "'<->'";
    case Tok::G: return "'G'";
    case Tok::F: return "'F'";
    case Tok::X: return "'X'";
    case Tok::U: return "'U'";
    case Tok::Fx: return "'Fx'";
    case Tok::Gh: return "'Gh'";
    case Tok::S: return "'S'";
    case Tok::True: return "'true'";
    case Tok::False: return "'false'";
    case Tok::Ident: return "identifier";
    case Tok::End: return "end of input";
  }
  return "?";
}

class Lexer {
public:
  Lexer(const std::string& text, bool prime) : text_(text), prime_(prime) { advance(); }

  const Token& peek() const { return tok_; }

  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

private:
  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    size_t begin = pos_;
    if (pos_ >= text_.size()) {
      tok_ = {Tok::End, "", {begin, begin}};
      return;
    }
    char c = text_[pos_];
    auto one = [&](Tok k) {
      ++pos_;
      tok_ = {k, std::string(1, c), {begin, pos_}};
    };
    switch (c) {
      case '(': one(Tok::LParen); return;
      case ')': one(Tok::RParen); return;
      case '!': one(Tok::Not); return;
      case '&': one(Tok::And); return;
      case '|': one(Tok::Or); return;
      case '[': if (prime_) { one(Tok::LBracket); return; } break;
      case ']': if (prime_) { one(Tok::RBracket); return; } break;
      case ',': if (prime_) { one(Tok::Comma); return; } break;
      case '@': if (prime_) { one(Tok::At); return; } break;
      case '-':
        if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
          pos_ += 2;
          tok_ = {Tok::Implies, "->", {begin, pos_}};
          return;
        }
        break;
      case '<':
        if (pos_ + 2 < text_.size() + 1 && text_.compare(pos_, 3, "<->") == 0) {
          pos_ += 3;
          tok_ = {Tok::Iff, "<->", {begin, pos_}};
          return;
        }
        break;
      default: break;
    }
    if (std::isupper(static_cast<unsigned char>(c))) {
      // Operator words: single uppercase letters in LTL; Fx/Gh/S in LTL'.
      if (!prime_) {
        Tok k;
        switch (c) {
          case 'G': k = Tok::G; break;
          case 'F': k = Tok::F; break;
          case 'X': k = Tok::X; break;
          case 'U': k = Tok::U; break;
          default:
            throw ParseError(std::string("unknown operator '") + c + "'", {begin, begin + 1}, {});
        }
        one(k);
        return;
      }
      size_t end = pos_ + 1;
      while (end < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_'))
        ++end;
      std::string word = text_.substr(pos_, end - pos_);
      Tok k;
      if (word == "G") k = Tok::G;
      else if (word == "X") k = Tok::X;
      else if (word == "Fx") k = Tok::Fx;
      else if (word == "Gh") k = Tok::Gh;
      else if (word == "S") k = Tok::S;
      else
        throw ParseError("unknown operator '" + word + "'", {begin, end}, {});
      pos_ = end;
      tok_ = {k, word, {begin, pos_}};
      return;
    }
    if (std::islower(static_cast<unsigned char>(c))) {
      size_t end = pos_;
      while (end < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_'))
        ++end;
      std::string word = text_.substr(pos_, end - pos_);
      pos_ = end;
      Tok k = word == "true" ? Tok::True : word == "false" ? Tok::False : Tok::Ident;
      tok_ = {k, word, {begin, pos_}};
      return;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", {begin, begin + 1}, {});
  }

  const std::string& text_;
  bool prime_;
  size_t pos_ = 0;
  Token tok_;
};

[[noreturn]] void fail(const Token& found, std::vector<std::string> expected) {
  std::string msg = "syntax error at offset " + std::to_string(found.span.begin) + ": expected ";
  for (size_t i = 0; i < expected.size(); ++i) {
    if (i) msg += i + 1 == expected.size() ? " or " : ", ";
    msg += expected[i];
  }
  msg += ", found ";
  msg += tok_name(found.kind);
  throw ParseError(msg, found.span, std::move(expected));
}

std::vector<std::string> formula_starts(bool prime) {
  if (prime)
    return {"'!'", "'G'", "'X'", "'Fx'", "'Gh'", "'('", "identifier", "'true'", "'false'"};
  return {"'!'", "'G'", "'F'", "'X'", "'('", "identifier", "'true'", "'false'"};
}

// ------------------------------- LTL -------------------------------

class LtlParser {
public:
  explicit LtlParser(const std::string& text) : lx_(text, false) {}

  LtlPtr parse() {
    LtlPtr f = iff();
    if (lx_.peek().kind != Tok::End)
      fail(lx_.peek(), {"end of input", "'&'", "'|'", "'->'", "'<->'", "'U'"});
    return f;
  }

private:
  LtlPtr iff() {
    LtlPtr l = impl();
    while (lx_.peek().kind == Tok::Iff) {
      lx_.take();
      l = LtlFormula::Iff(l, impl());
    }
    return l;
  }

  LtlPtr impl() {
    LtlPtr l = disj();
    if (lx_.peek().kind == Tok::Implies) {
      lx_.take();
      return LtlFormula::Implies(l, impl());
    }
    return l;
  }

  LtlPtr disj() {
    LtlPtr l = conj();
    while (lx_.peek().kind == Tok::Or) {
      lx_.take();
      l = LtlFormula::Or(l, conj());
    }
    return l;
  }

  LtlPtr conj() {
    LtlPtr l = until();
    while (lx_.peek().kind == Tok::And) {
      lx_.take();
      l = LtlFormula::And(l, until());
    }
    return l;
  }

  LtlPtr until() {
    LtlPtr l = unary();
    if (lx_.peek().kind == Tok::U) {
      lx_.take();
      return LtlFormula::U(l, until());
    }
    return l;
  }

  LtlPtr unary() {
    switch (lx_.peek().kind) {
      case Tok::Not: lx_.take(); return LtlFormula::Not(unary());
      case Tok::G: lx_.take(); return LtlFormula::G(unary());
      case Tok::F: lx_.take(); return LtlFormula::F(unary());
      case Tok::X: lx_.take(); return LtlFormula::X(unary());
      default: return primary();
    }
  }

  LtlPtr primary() {
    Token t = lx_.peek();
    switch (t.kind) {
      case Tok::Ident: lx_.take(); return LtlFormula::Atom(t.text);
      case Tok::True: lx_.take(); return LtlFormula::True();
      case Tok::False: lx_.take(); return LtlFormula::False();
      case Tok::LParen: {
        lx_.take();
        LtlPtr f = iff();
        if (lx_.peek().kind != Tok::RParen) fail(lx_.peek(), {"')'"});
        lx_.take();
        return f;
      }
      default: fail(t, formula_starts(false));
    }
  }

  Lexer lx_;
};

// ------------------------------- LTL' -------------------------------

class PrimeParser {
public:
  explicit PrimeParser(const std::string& text) : lx_(text, true) {}

  PrimePtr parse() {
    PrimePtr f = disj();
    if (lx_.peek().kind != Tok::End) fail(lx_.peek(), {"end of input", "'&'", "'|'"});
    return f;
  }

private:
  PrimePtr disj() {
    PrimePtr l = conj();
    while (lx_.peek().kind == Tok::Or) {
      lx_.take();
      l = LtlPrimeFormula::Or(l, conj());
    }
    return l;
  }

  PrimePtr conj() {
    PrimePtr l = unary();
    while (lx_.peek().kind == Tok::And) {
      lx_.take();
      l = LtlPrimeFormula::And(l, unary());
    }
    return l;
  }

  void expect(Tok k) {
    if (lx_.peek().kind != k) fail(lx_.peek(), {tok_name(k)});
    lx_.take();
  }

  TermPtr term() {
    Token t = lx_.peek();
    switch (t.kind) {
      case Tok::At: lx_.take(); return PathTerm::eval_point();
      case Tok::Ident: lx_.take(); return PathTerm::var(t.text);
      case Tok::S: {
        lx_.take();
        expect(Tok::LParen);
        TermPtr inner = term();
        expect(Tok::RParen);
        return PathTerm::succ(inner);
      }
      default: fail(t, {"'@'", "identifier", "'S'"});
    }
  }

  PrimePtr unary() {
    Token t = lx_.peek();
    switch (t.kind) {
      case Tok::Not: lx_.take(); return LtlPrimeFormula::Not(unary());
      case Tok::G: lx_.take(); return LtlPrimeFormula::G(unary());
      case Tok::X: lx_.take(); return LtlPrimeFormula::X(unary());
      case Tok::Fx: {
        lx_.take();
        expect(Tok::LBracket);
        Token v = lx_.peek();
        if (v.kind != Tok::Ident) fail(v, {"identifier"});
        lx_.take();
        expect(Tok::RBracket);
        return LtlPrimeFormula::Fx(v.text, unary());
      }
      case Tok::Gh: {
        lx_.take();
        expect(Tok::LBracket);
        TermPtr lo = term();
        expect(Tok::Comma);
        TermPtr hi = term();
        Token close = lx_.peek();
        expect(Tok::RBracket);
        try {
          return LtlPrimeFormula::Ghat(lo, hi, unary());
        } catch (const std::invalid_argument& e) {
          throw ParseError(e.what(), {t.span.begin, close.span.end}, {});
        }
      }
      default: return primary();
    }
  }

  PrimePtr primary() {
    Token t = lx_.peek();
    switch (t.kind) {
      case Tok::Ident: lx_.take(); return LtlPrimeFormula::Atom(t.text);
      case Tok::True: lx_.take(); return LtlPrimeFormula::True();
      case Tok::False: lx_.take(); return LtlPrimeFormula::False();
      case Tok::LParen: {
        lx_.take();
        PrimePtr f = disj();
        if (lx_.peek().kind != Tok::RParen) fail(lx_.peek(), {"')'"});
        lx_.take();
        return f;
      }
      default: fail(t, formula_starts(true));
    }
  }

  Lexer lx_;
};

} // namespace

LtlPtr parse_ltl(const std::string& text) { return LtlParser(text).parse(); }

PrimePtr parse_ltlprime(const std::string& text) { return PrimeParser(text).parse(); }

} // namespace ltlc
