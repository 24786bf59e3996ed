#include <cctype>
#include <charconv>
#include <unordered_map>

#include "ttable/dsl.hpp"

namespace ttable::dsl {

namespace {

std::string position_prefix(const SourcePos& pos) {
  return std::to_string(pos.line) + ":" + std::to_string(pos.column) + ": ";
}

const std::unordered_map<std::string_view, TokenKind> kKeywords = {
    {"table", TokenKind::KwTable},
    {"unit", TokenKind::KwUnit},
    {"select", TokenKind::KwSelect},
    {"reverse", TokenKind::KwReverse},
    {"extend", TokenKind::KwExtend},
    {"refine", TokenKind::KwRefine},
    {"coarsen", TokenKind::KwCoarsen},
    {"transpose", TokenKind::KwTranspose},
    {"dropEmptyRows", TokenKind::KwDropEmptyRows},
    {"dropEmptyCols", TokenKind::KwDropEmptyCols},
    {"onlyEmptyRows", TokenKind::KwOnlyEmptyRows},
    {"onCollision", TokenKind::KwOnCollision},
    {"error", TokenKind::KwError},
    {"drop", TokenKind::KwDrop},
    {"max", TokenKind::KwMax},
    {"min", TokenKind::KwMin},
    {"sum", TokenKind::KwSum},
    {"first", TokenKind::KwFirst},
    {"last", TokenKind::KwLast},
    {"count", TokenKind::KwCount},
    {"concat", TokenKind::KwConcat},
    {"in", TokenKind::KwIn},
    {"true", TokenKind::True},
    {"false", TokenKind::False},
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_trivia();
      if (at_end()) {
        return out;
      }
      out.push_back(next_token());
    }
  }

 private:
  bool at_end() const { return pos_.offset >= src_.size(); }
  char peek(std::size_t ahead = 0) const {
    const std::size_t i = pos_.offset + ahead;
    return i < src_.size() ? src_[i] : '\0';
  }

  char advance() {
    const char c = src_[pos_.offset];
    ++pos_.offset;
    if (c == '\n') {
      ++pos_.line;
      pos_.column = 1;
    } else {
      ++pos_.column;
    }
    return c;
  }

  void skip_trivia() {
    while (!at_end()) {
      const char c = peek();
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (c == '#') {
        while (!at_end() && peek() != '\n') {
          advance();
        }
      } else {
        return;
      }
    }
  }

  Token make(TokenKind kind, const SourcePos& start) {
    Token t;
    t.kind = kind;
    t.pos = start;
    t.text = std::string(src_.substr(start.offset, pos_.offset - start.offset));
    return t;
  }

  Token next_token() {
    const SourcePos start = pos_;
    const char c = peek();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      return word(start);
    }
    if (std::isdigit(static_cast<unsigned char>(c)) ||
        (c == '-' && std::isdigit(static_cast<unsigned char>(peek(1))))) {
      return number(start);
    }
    if (c == '"') {
      return string_literal(start);
    }
    advance();
    switch (c) {
      case '(':
        return make(TokenKind::LParen, start);
      case ')':
        return make(TokenKind::RParen, start);
      case '{':
        return make(TokenKind::LBrace, start);
      case '}':
        return make(TokenKind::RBrace, start);
      case ',':
        return make(TokenKind::Comma, start);
      case '=':
        return make(TokenKind::Eq, start);
      case '<':
        if (peek() == '=') {
          advance();
          return make(TokenKind::Le, start);
        }
        return make(TokenKind::Lt, start);
      case '>':
        if (peek() == '=') {
          advance();
          return make(TokenKind::Ge, start);
        }
        return make(TokenKind::Gt, start);
      case '!':
        if (peek() == '=') {
          advance();
          return make(TokenKind::Ne, start);
        }
        return make(TokenKind::Bang, start);
      case '|':
        if (peek() == '|') {
          advance();
          return make(TokenKind::OrOr, start);
        }
        return make(TokenKind::Pipe, start);
      case '&':
        if (peek() == '&') {
          advance();
          return make(TokenKind::AndAnd, start);
        }
        throw ParseError(start, "stray '&'; use '&&' to combine predicates");
      default:
        throw ParseError(start, std::string("illegal character '") + c + "'");
    }
  }

  Token word(const SourcePos& start) {
    while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') {
      advance();
    }
    Token t = make(TokenKind::Identifier, start);
    if (t.text == "_") {
      t.kind = TokenKind::Underscore;
      return t;
    }
    if (const auto it = kKeywords.find(t.text); it != kKeywords.end()) {
      t.kind = it->second;
      if (t.kind == TokenKind::True) {
        t.literal = boolean(true);
      } else if (t.kind == TokenKind::False) {
        t.literal = boolean(false);
      }
    }
    return t;
  }

  Token number(const SourcePos& start) {
    if (peek() == '-') {
      advance();
    }
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      advance();
    }
    if (peek() == '.' && std::isdigit(static_cast<unsigned char>(peek(1)))) {
      advance();
      while (std::isdigit(static_cast<unsigned char>(peek()))) {
        advance();
      }
    }
    if ((peek() == 'e' || peek() == 'E') &&
        (std::isdigit(static_cast<unsigned char>(peek(1))) ||
         ((peek(1) == '+' || peek(1) == '-') &&
          std::isdigit(static_cast<unsigned char>(peek(2)))))) {
      advance();
      if (peek() == '+' || peek() == '-') {
        advance();
      }
      while (std::isdigit(static_cast<unsigned char>(peek()))) {
        advance();
      }
    }
    Token t = make(TokenKind::Number, start);
    const auto parsed = parse_number(t.text);
    if (!parsed) {
      throw ParseError(start, "malformed number '" + t.text + "'");
    }
    t.literal = num(*parsed);
    return t;
  }

  Token string_literal(const SourcePos& start) {
    advance();  // opening quote
    std::string decoded;
    while (!at_end() && peek() != '"' && peek() != '\n') {
      char c = advance();
      if (c == '\\') {
        if (at_end()) {
          break;
        }
        const char esc = advance();
        switch (esc) {
          case '"':
            c = '"';
            break;
          case '\\':
            c = '\\';
            break;
          case 'n':
            c = '\n';
            break;
          case 't':
            c = '\t';
            break;
          default:
            throw ParseError(start, std::string("unknown escape '\\") + esc + "' in string");
        }
      }
      decoded += c;
    }
    if (at_end() || peek() != '"') {
      throw ParseError(start, "unterminated string");
    }
    advance();  // closing quote
    Token t = make(TokenKind::String, start);
    t.literal = text(std::move(decoded));
    return t;
  }

  std::string_view src_;
  SourcePos pos_;
};

}  // namespace

ParseError::ParseError(SourcePos pos, const std::string& message,
                       std::vector<std::string> expected)
    : Error(position_prefix(pos) + message), pos_(pos), expected_(std::move(expected)) {}

EvalError::EvalError(SourceSpan span, const std::string& message)
    : Error(position_prefix(span.begin) + message), span_(span) {}

const char* token_kind_name(TokenKind kind) {
  switch (kind) {
    case TokenKind::Identifier:
      return "identifier";
    case TokenKind::Underscore:
      return "'_'";
    case TokenKind::Number:
      return "number";
    case TokenKind::String:
      return "string";
    case TokenKind::True:
      return "'true'";
    case TokenKind::False:
      return "'false'";
    case TokenKind::LParen:
      return "'('";
    case TokenKind::RParen:
      return "')'";
    case TokenKind::LBrace:
      return "'{'";
    case TokenKind::RBrace:
      return "'}'";
    case TokenKind::Comma:
      return "','";
    case TokenKind::Pipe:
      return "'|'";
    case TokenKind::Bang:
      return "'!'";
    case TokenKind::AndAnd:
      return "'&&'";
    case TokenKind::OrOr:
      return "'||'";
    case TokenKind::Eq:
      return "'='";
    case TokenKind::Ne:
      return "'!='";
    case TokenKind::Lt:
      return "'<'";
    case TokenKind::Le:
      return "'<='";
    case TokenKind::Gt:
      return "'>'";
    case TokenKind::Ge:
      return "'>='";
    case TokenKind::KwTable:
      return "'table'";
    case TokenKind::KwUnit:
      return "'unit'";
    case TokenKind::KwSelect:
      return "'select'";
    case TokenKind::KwReverse:
      return "'reverse'";
    case TokenKind::KwExtend:
      return "'extend'";
    case TokenKind::KwRefine:
      return "'refine'";
    case TokenKind::KwCoarsen:
      return "'coarsen'";
    case TokenKind::KwTranspose:
      return "'transpose'";
    case TokenKind::KwDropEmptyRows:
      return "'dropEmptyRows'";
    case TokenKind::KwDropEmptyCols:
      return "'dropEmptyCols'";
    case TokenKind::KwOnlyEmptyRows:
      return "'onlyEmptyRows'";
    case TokenKind::KwOnCollision:
      return "'onCollision'";
    case TokenKind::KwError:
      return "'error'";
    case TokenKind::KwDrop:
      return "'drop'";
    case TokenKind::KwMax:
      return "'max'";
    case TokenKind::KwMin:
      return "'min'";
    case TokenKind::KwSum:
      return "'sum'";
    case TokenKind::KwFirst:
      return "'first'";
    case TokenKind::KwLast:
      return "'last'";
    case TokenKind::KwCount:
      return "'count'";
    case TokenKind::KwConcat:
      return "'concat'";
    case TokenKind::KwIn:
      return "'in'";
    case TokenKind::End:
      return "end of input";
  }
  return "token";
}

std::vector<Token> tokenize(std::string_view source) {
  return Lexer(source).run();
}

}  // namespace ttable::dsl
