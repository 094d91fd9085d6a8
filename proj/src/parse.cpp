#include "gjl/parse.hpp"

#include <cctype>
#include <optional>

namespace gjl {

namespace {

std::string join_expected(const std::vector<std::string>& expected) {
  std::string out;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i) out += ", ";
    out += expected[i];
  }
  return out;
}

} // namespace

ParseError::ParseError(std::size_t position, std::string message,
                       std::vector<std::string> expected)
    : std::runtime_error("parse error at position " + std::to_string(position) + ": " +
                         message +
                         (expected.empty() ? std::string{}
                                           : " (expected " + join_expected(expected) + ")")),
      position_(position),
      expected_(std::move(expected)) {}

namespace {

enum class Tok {
  LParen,
  RParen,
  Arrow,
  Amp,
  Tilde,
  Colon,
  Bang,
  Query,
  Plus,
  Star,
  Box,
  KwBot,
  KwTop,
  Atom,     // p<k>
  ConstSym, // c<k>
  VarSym,   // x<k>
  End,
};

struct Token {
  Tok kind;
  unsigned index = 0;
  std::size_t pos = 0;
};

const char* tok_name(Tok t) {
  switch (t) {
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Arrow: return "'->'";
    case Tok::Amp: return "'&'";
    case Tok::Tilde: return "'~'";
    case Tok::Colon: return "':'";
    case Tok::Bang: return "'!'";
    case Tok::Query: return "'?'";
    case Tok::Plus: return "'+'";
    case Tok::Star: return "'*'";
    case Tok::Box: return "'[]'";
    case Tok::KwBot: return "'bot'";
    case Tok::KwTop: return "'top'";
    case Tok::Atom: return "atom";
    case Tok::ConstSym: return "constant";
    case Tok::VarSym: return "variable";
    case Tok::End: return "end of input";
  }
  return "?";
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t pos = i;
    switch (c) {
      case '(': out.push_back({Tok::LParen, 0, pos}); ++i; continue;
      case ')': out.push_back({Tok::RParen, 0, pos}); ++i; continue;
      case '&': out.push_back({Tok::Amp, 0, pos}); ++i; continue;
      case '~': out.push_back({Tok::Tilde, 0, pos}); ++i; continue;
      case ':': out.push_back({Tok::Colon, 0, pos}); ++i; continue;
      case '!': out.push_back({Tok::Bang, 0, pos}); ++i; continue;
      case '?': out.push_back({Tok::Query, 0, pos}); ++i; continue;
      case '+': out.push_back({Tok::Plus, 0, pos}); ++i; continue;
      case '*': out.push_back({Tok::Star, 0, pos}); ++i; continue;
      case '-':
        if (i + 1 < text.size() && text[i + 1] == '>') {
          out.push_back({Tok::Arrow, 0, pos});
          i += 2;
          continue;
        }
        throw ParseError(pos, "stray '-'", {"'->'"});
      case '[':
        if (i + 1 < text.size() && text[i + 1] == ']') {
          out.push_back({Tok::Box, 0, pos});
          i += 2;
          continue;
        }
        throw ParseError(pos, "stray '['", {"'[]'"});
      default:
        break;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isalnum(static_cast<unsigned char>(text[j]))) ++j;
      const std::string_view word = text.substr(i, j - i);
      if (word == "bot") {
        out.push_back({Tok::KwBot, 0, pos});
        i = j;
        continue;
      }
      if (word == "top") {
        out.push_back({Tok::KwTop, 0, pos});
        i = j;
        continue;
      }
      if ((word[0] == 'p' || word[0] == 'c' || word[0] == 'x') && word.size() > 1) {
        unsigned idx = 0;
        bool numeric = true;
        for (std::size_t k = 1; k < word.size(); ++k) {
          if (!std::isdigit(static_cast<unsigned char>(word[k]))) {
            numeric = false;
            break;
          }
          idx = idx * 10 + static_cast<unsigned>(word[k] - '0');
        }
        if (numeric && idx >= 1) {
          const Tok kind = word[0] == 'p'   ? Tok::Atom
                           : word[0] == 'c' ? Tok::ConstSym
                                            : Tok::VarSym;
          out.push_back({kind, idx, pos});
          i = j;
          continue;
        }
      }
      throw ParseError(pos, "unknown identifier '" + std::string(word) + "'",
                       {"'p<k>'", "'c<k>'", "'x<k>'", "'bot'", "'top'"});
    }
    throw ParseError(pos, std::string("unexpected character '") + c + "'", {});
  }
  out.push_back({Tok::End, 0, text.size()});
  return out;
}

class Parser {
public:
  explicit Parser(std::string_view text) : toks_(tokenize(text)) {}

  JFormula jformula() {
    JFormula f = j_implication();
    expect(Tok::End);
    return f;
  }

  MFormula mformula() {
    MFormula f = m_implication();
    expect(Tok::End);
    return f;
  }

  Term term_only() {
    Term t = term();
    expect(Tok::End);
    return t;
  }

private:
  static constexpr std::size_t kMaxDepth = 4096;

  struct DepthGuard {
    Parser& p;
    explicit DepthGuard(Parser& parser) : p(parser) {
      if (++p.depth_ > kMaxDepth)
        throw ParseError(p.cur().pos, "nesting too deep", {});
    }
    ~DepthGuard() { --p.depth_; }
  };

  const Token& cur() const { return toks_[pos_]; }
  void advance() { ++pos_; }

  [[noreturn]] void fail(std::vector<std::string> expected) {
    throw ParseError(cur().pos,
                     std::string("unexpected ") + tok_name(cur().kind), std::move(expected));
  }

  void expect(Tok kind) {
    if (cur().kind != kind) fail({tok_name(kind)});
    advance();
  }

  // --- terms -------------------------------------------------------------
  bool starts_term() const {
    switch (cur().kind) {
      case Tok::ConstSym:
      case Tok::VarSym:
      case Tok::Bang:
      case Tok::Query:
      case Tok::LParen:
        return true;
      default:
        return false;
    }
  }

  Term term() { return term_sum(); }

  Term term_sum() {
    Term t = term_product();
    while (cur().kind == Tok::Plus) {
      advance();
      t = Term::sum(t, term_product());
    }
    return t;
  }

  Term term_product() {
    Term t = term_unary();
    while (cur().kind == Tok::Star) {
      advance();
      t = Term::app(t, term_unary());
    }
    return t;
  }

  Term term_unary() {
    DepthGuard guard(*this);
    switch (cur().kind) {
      case Tok::Bang:
        advance();
        return Term::bang(term_unary());
      case Tok::Query:
        advance();
        return Term::query(term_unary());
      case Tok::ConstSym: {
        const unsigned idx = cur().index;
        advance();
        return Term::constant(idx);
      }
      case Tok::VarSym: {
        const unsigned idx = cur().index;
        advance();
        return Term::variable(idx);
      }
      case Tok::LParen: {
        advance();
        Term t = term();
        expect(Tok::RParen);
        return t;
      }
      default:
        fail({"constant", "variable", "'!'", "'?'", "'('"});
    }
  }

  // --- justification formulas ---------------------------------------------
  JFormula j_implication() {
    JFormula f = j_conjunction();
    if (cur().kind == Tok::Arrow) {
      advance();
      return JFormula::implies(f, j_implication());
    }
    return f;
  }

  JFormula j_conjunction() {
    JFormula f = j_unary();
    while (cur().kind == Tok::Amp) {
      advance();
      f = JFormula::conj(f, j_unary());
    }
    return f;
  }

  JFormula j_unary() {
    DepthGuard guard(*this);
    switch (cur().kind) {
      case Tok::Tilde:
        advance();
        return JFormula::negation(j_unary());
      case Tok::KwBot:
        advance();
        return JFormula::bottom();
      case Tok::KwTop:
        advance();
        return JFormula::top();
      case Tok::Atom: {
        const unsigned idx = cur().index;
        advance();
        return JFormula::atom(idx);
      }
      case Tok::ConstSym:
      case Tok::VarSym:
      case Tok::Bang:
      case Tok::Query: {
        Term t = term();
        expect(Tok::Colon);
        return JFormula::holds(std::move(t), j_unary());
      }
      case Tok::LParen: {
        // "(" opens either a grouped term followed by ':' or a grouped
        // formula; commit to whichever parse goes through.
        const std::size_t save = pos_;
        try {
          Term t = term();
          if (cur().kind == Tok::Colon) {
            advance();
            return JFormula::holds(std::move(t), j_unary());
          }
        } catch (const ParseError&) {
        }
        pos_ = save;
        advance();
        JFormula f = j_implication();
        expect(Tok::RParen);
        return f;
      }
      default:
        fail({"'~'", "'bot'", "'top'", "atom", "term", "'('"});
    }
  }

  // --- modal formulas -------------------------------------------------------
  MFormula m_implication() {
    MFormula f = m_conjunction();
    if (cur().kind == Tok::Arrow) {
      advance();
      return MFormula::implies(f, m_implication());
    }
    return f;
  }

  MFormula m_conjunction() {
    MFormula f = m_unary();
    while (cur().kind == Tok::Amp) {
      advance();
      f = MFormula::conj(f, m_unary());
    }
    return f;
  }

  MFormula m_unary() {
    DepthGuard guard(*this);
    switch (cur().kind) {
      case Tok::Tilde:
        advance();
        return MFormula::negation(m_unary());
      case Tok::Box:
        advance();
        return MFormula::box(m_unary());
      case Tok::KwBot:
        advance();
        return MFormula::bottom();
      case Tok::KwTop:
        advance();
        return MFormula::top();
      case Tok::Atom: {
        const unsigned idx = cur().index;
        advance();
        return MFormula::atom(idx);
      }
      case Tok::LParen: {
        advance();
        MFormula f = m_implication();
        expect(Tok::RParen);
        return f;
      }
      default:
        fail({"'~'", "'[]'", "'bot'", "'top'", "atom", "'('"});
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::size_t depth_ = 0;
};

} // namespace

JFormula parse_jformula(std::string_view text) { return Parser(text).jformula(); }

MFormula parse_mformula(std::string_view text) { return Parser(text).mformula(); }

Term parse_term(std::string_view text) { return Parser(text).term_only(); }

} // namespace gjl
