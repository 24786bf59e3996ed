#include <utility>

#include "ttable/dsl.hpp"

namespace ttable::dsl {

namespace {

SourcePos end_of(const Token& t) {
  // No token spans a line break, so the end position is on the same line.
  SourcePos p = t.pos;
  p.column += static_cast<int>(t.text.size());
  p.offset += t.text.size();
  return p;
}

std::string describe_alternatives(const std::vector<std::string>& expected) {
  std::string out;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i > 0) {
      out += i + 1 == expected.size() ? " or " : ", ";
    }
    out += expected[i];
  }
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {
    end_pos_ = tokens_.empty() ? SourcePos{} : end_of(tokens_.back());
  }

  TableExpr run() {
    TableExpr expr = parse_table();
    if (!at_end()) {
      fail({"end of input"});
    }
    return expr;
  }

 private:
  bool at_end() const { return index_ >= tokens_.size(); }
  const Token& current() const { return tokens_[index_]; }
  SourcePos here() const { return at_end() ? end_pos_ : current().pos; }
  SourcePos prev_end() const { return end_of(tokens_[index_ - 1]); }

  bool check(TokenKind kind) const { return !at_end() && current().kind == kind; }

  bool match(TokenKind kind) {
    if (!check(kind)) {
      return false;
    }
    ++index_;
    return true;
  }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    const char* found = at_end() ? "end of input" : token_kind_name(current().kind);
    const std::string message =
        "expected " + describe_alternatives(expected) + ", found " + found;
    throw ParseError(here(), message, std::move(expected));
  }

  const Token& expect(TokenKind kind) {
    if (!check(kind)) {
      fail({token_kind_name(kind)});
    }
    return tokens_[index_++];
  }

  TableExpr parse_table() {
    const Token& open = expect(TokenKind::KwTable);
    expect(TokenKind::LParen);
    TypeExpr column = parse_type();
    expect(TokenKind::Comma);
    TypeExpr row = parse_type();
    expect(TokenKind::Comma);
    DataExpr data = parse_data();
    const Token& close = expect(TokenKind::RParen);

    TableExpr expr{std::move(column), std::move(row), std::move(data), {},
                   {open.pos, end_of(close)}};
    bool has_collision_mod = false;
    while (match(TokenKind::Pipe)) {
      Modifier mod = parse_modifier();
      if (std::holds_alternative<OnCollisionMod>(mod.node)) {
        if (has_collision_mod) {
          throw ParseError(mod.span.begin, "at most one onCollision modifier is allowed");
        }
        has_collision_mod = true;
      }
      expr.span.end = mod.span.end;
      expr.modifiers.push_back(std::move(mod));
    }
    return expr;
  }

  Modifier parse_modifier() {
    const SourcePos start = here();
    if (check(TokenKind::KwDropEmptyRows)) {
      const Token& t = tokens_[index_++];
      return {DropEmptyRowsMod{}, {start, end_of(t)}};
    }
    if (check(TokenKind::KwDropEmptyCols)) {
      const Token& t = tokens_[index_++];
      return {DropEmptyColsMod{}, {start, end_of(t)}};
    }
    if (check(TokenKind::KwOnlyEmptyRows)) {
      const Token& t = tokens_[index_++];
      return {OnlyEmptyRowsMod{}, {start, end_of(t)}};
    }
    if (check(TokenKind::KwTranspose)) {
      const Token& t = tokens_[index_++];
      return {TransposeMod{}, {start, end_of(t)}};
    }
    if (check(TokenKind::KwOnCollision)) {
      ++index_;
      expect(TokenKind::LParen);
      CollisionPolicy policy = parse_policy();
      const Token& close = expect(TokenKind::RParen);
      return {OnCollisionMod{std::move(policy)}, {start, end_of(close)}};
    }
    fail({"'dropEmptyRows'", "'dropEmptyCols'", "'onlyEmptyRows'", "'transpose'",
          "'onCollision'"});
  }

  CollisionPolicy parse_policy() {
    if (match(TokenKind::KwError)) {
      return ErrorPolicy{};
    }
    if (match(TokenKind::KwDrop)) {
      return DropPolicy{};
    }
    if (match(TokenKind::KwMax)) {
      return AggregateFn{AggKind::Max};
    }
    if (match(TokenKind::KwMin)) {
      return AggregateFn{AggKind::Min};
    }
    if (match(TokenKind::KwSum)) {
      return AggregateFn{AggKind::Sum};
    }
    if (match(TokenKind::KwFirst)) {
      return AggregateFn{AggKind::First};
    }
    if (match(TokenKind::KwLast)) {
      return AggregateFn{AggKind::Last};
    }
    if (match(TokenKind::KwCount)) {
      return AggregateFn{AggKind::Count};
    }
    if (match(TokenKind::KwConcat)) {
      expect(TokenKind::LParen);
      const Token& sep = expect(TokenKind::String);
      expect(TokenKind::RParen);
      return AggregateFn{AggKind::Concat, std::get<std::string>(sep.literal)};
    }
    fail({"'error'", "'drop'", "'max'", "'min'", "'sum'", "'first'", "'last'", "'count'",
          "'concat'"});
  }

  TypeExpr parse_type() {
    const SourcePos start = here();
    if (check(TokenKind::KwUnit)) {
      const Token& t = tokens_[index_++];
      return {UnitTypeExpr{}, {start, end_of(t)}};
    }
    if (check(TokenKind::Identifier)) {
      const Token& t = tokens_[index_++];
      return {NamedType{t.text}, {start, end_of(t)}};
    }
    if (match(TokenKind::KwSelect)) {
      expect(TokenKind::LParen);
      TypeExpr base = parse_type();
      expect(TokenKind::Comma);
      ValuePred pred = parse_pred<ValueAtom>();
      const Token& close = expect(TokenKind::RParen);
      return {SelectType{box(std::move(base)), std::move(pred)}, {start, end_of(close)}};
    }
    if (match(TokenKind::KwReverse)) {
      expect(TokenKind::LParen);
      TypeExpr base = parse_type();
      const Token& close = expect(TokenKind::RParen);
      return {ReverseType{box(std::move(base))}, {start, end_of(close)}};
    }
    if (match(TokenKind::KwExtend)) {
      expect(TokenKind::LParen);
      TypeExpr base = parse_type();
      std::vector<Value> values;
      expect(TokenKind::Comma);
      values.push_back(parse_literal());
      while (match(TokenKind::Comma)) {
        values.push_back(parse_literal());
      }
      const Token& close = expect(TokenKind::RParen);
      return {ExtendType{box(std::move(base)), std::move(values)}, {start, end_of(close)}};
    }
    if (match(TokenKind::KwRefine)) {
      expect(TokenKind::LParen);
      TypeExpr base = parse_type();
      expect(TokenKind::Comma);
      TypeExpr refinement = parse_type();
      const Token& close = expect(TokenKind::RParen);
      return {RefineType{box(std::move(base)), box(std::move(refinement))},
              {start, end_of(close)}};
    }
    if (match(TokenKind::KwCoarsen)) {
      expect(TokenKind::LParen);
      TypeExpr base = parse_type();
      const Token& close = expect(TokenKind::RParen);
      return {CoarsenType{box(std::move(base))}, {start, end_of(close)}};
    }
    fail({"'unit'", "identifier", "'select'", "'reverse'", "'extend'", "'refine'",
          "'coarsen'"});
  }

  DataExpr parse_data() {
    const SourcePos start = here();
    if (check(TokenKind::Identifier)) {
      const Token& t = tokens_[index_++];
      return {NamedData{t.text}, {start, end_of(t)}};
    }
    if (match(TokenKind::KwSelect)) {
      expect(TokenKind::LParen);
      DataExpr base = parse_data();
      expect(TokenKind::Comma);
      RecordPred pred = parse_pred<RecordAtom>();
      const Token& close = expect(TokenKind::RParen);
      return {SelectData{box(std::move(base)), std::move(pred)}, {start, end_of(close)}};
    }
    fail({"identifier", "'select'"});
  }

  Value parse_literal() {
    if (check(TokenKind::Number) || check(TokenKind::String) || check(TokenKind::True) ||
        check(TokenKind::False)) {
      return tokens_[index_++].literal;
    }
    fail({"number", "string", "'true'", "'false'"});
  }

  template <class Atom>
  Pred<Atom> parse_pred() {
    Pred<Atom> lhs = parse_and<Atom>();
    while (match(TokenKind::OrOr)) {
      Pred<Atom> rhs = parse_and<Atom>();
      SourceSpan span{lhs.span.begin, rhs.span.end};
      lhs = Pred<Atom>{OrPred<Atom>{box(std::move(lhs)), box(std::move(rhs))}, span};
    }
    return lhs;
  }

  template <class Atom>
  Pred<Atom> parse_and() {
    Pred<Atom> lhs = parse_pred_atom<Atom>();
    while (match(TokenKind::AndAnd)) {
      Pred<Atom> rhs = parse_pred_atom<Atom>();
      SourceSpan span{lhs.span.begin, rhs.span.end};
      lhs = Pred<Atom>{AndPred<Atom>{box(std::move(lhs)), box(std::move(rhs))}, span};
    }
    return lhs;
  }

  template <class Atom>
  Pred<Atom> parse_pred_atom() {
    const SourcePos start = here();
    if (match(TokenKind::Bang)) {
      Pred<Atom> inner = parse_pred_atom<Atom>();
      SourceSpan span{start, inner.span.end};
      return Pred<Atom>{NotPred<Atom>{box(std::move(inner))}, span};
    }
    if (match(TokenKind::LParen)) {
      Pred<Atom> inner = parse_pred<Atom>();
      const Token& close = expect(TokenKind::RParen);
      inner.span = {start, end_of(close)};
      return inner;
    }
    return parse_atom<Atom>(start);
  }

  CmpOp parse_cmp_op() {
    if (match(TokenKind::Eq)) {
      return CmpOp::Eq;
    }
    if (match(TokenKind::Ne)) {
      return CmpOp::Ne;
    }
    if (match(TokenKind::Lt)) {
      return CmpOp::Lt;
    }
    if (match(TokenKind::Le)) {
      return CmpOp::Le;
    }
    if (match(TokenKind::Gt)) {
      return CmpOp::Gt;
    }
    if (match(TokenKind::Ge)) {
      return CmpOp::Ge;
    }
    fail({"'='", "'!='", "'<'", "'<='", "'>'", "'>='", "'in'"});
  }

  std::vector<Value> parse_literal_set() {
    expect(TokenKind::LBrace);
    std::vector<Value> literals;
    literals.push_back(parse_literal());
    while (match(TokenKind::Comma)) {
      literals.push_back(parse_literal());
    }
    expect(TokenKind::RBrace);
    return literals;
  }

  template <class Atom>
  Pred<Atom> parse_atom(const SourcePos& start);

  template <class T>
  static std::unique_ptr<T> box(T&& node) {
    return std::make_unique<T>(std::move(node));
  }

  std::vector<Token> tokens_;
  std::size_t index_ = 0;
  SourcePos end_pos_;
};

template <>
Pred<ValueAtom> Parser::parse_atom<ValueAtom>(const SourcePos& start) {
  if (!check(TokenKind::Underscore)) {
    fail({"'!'", "'('", "'_'"});
  }
  ++index_;
  if (match(TokenKind::KwIn)) {
    std::vector<Value> literals = parse_literal_set();
    return {ValueAtom{CmpOp::In, std::move(literals)}, {start, prev_end()}};
  }
  const CmpOp op = parse_cmp_op();
  Value literal = parse_literal();
  return {ValueAtom{op, {std::move(literal)}}, {start, prev_end()}};
}

template <>
Pred<RecordAtom> Parser::parse_atom<RecordAtom>(const SourcePos& start) {
  if (!check(TokenKind::Identifier)) {
    fail({"'!'", "'('", "identifier"});
  }
  std::string attr = tokens_[index_++].text;
  if (match(TokenKind::KwIn)) {
    std::vector<Value> literals = parse_literal_set();
    return {RecordAtom{std::move(attr), CmpOp::In, std::move(literals)}, {start, prev_end()}};
  }
  const CmpOp op = parse_cmp_op();
  Value literal = parse_literal();
  return {RecordAtom{std::move(attr), op, {std::move(literal)}}, {start, prev_end()}};
}

}  // namespace

TableExpr parse(std::string_view source) {
  return Parser(tokenize(source)).run();
}

}  // namespace ttable::dsl
