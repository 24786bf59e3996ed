#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ttable/data_algebra.hpp"
#include "ttable/model.hpp"
#include "ttable/table_builder.hpp"

namespace ttable::dsl {

// ---------------------------------------------------------------------------
// Source positions and errors

struct SourcePos {
  int line = 1;    // 1-based
  int column = 1;  // 1-based
  std::size_t offset = 0;
  friend bool operator==(const SourcePos&, const SourcePos&) = default;
};

struct SourceSpan {
  SourcePos begin;
  SourcePos end;
};

/// Lexical or syntax error; what() is "<line>:<column>: <message>".
class ParseError : public Error {
 public:
  ParseError(SourcePos pos, const std::string& message,
             std::vector<std::string> expected = {});

  const SourcePos& pos() const { return pos_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  SourcePos pos_;
  std::vector<std::string> expected_;
};

/// Evaluation failure; what() carries the position of the responsible
/// subexpression as "<line>:<column>: <message>".
class EvalError : public Error {
 public:
  EvalError(SourceSpan span, const std::string& message);

  const SourceSpan& span() const { return span_; }

 private:
  SourceSpan span_;
};

// ---------------------------------------------------------------------------
// Tokens

enum class TokenKind {
  Identifier,
  Underscore,
  Number,
  String,
  True,
  False,
  LParen,
  RParen,
  LBrace,
  RBrace,
  Comma,
  Pipe,
  Bang,
  AndAnd,
  OrOr,
  Eq,
  Ne,
  Lt,
  Le,
  Gt,
  Ge,
  KwTable,
  KwUnit,
  KwSelect,
  KwReverse,
  KwExtend,
  KwRefine,
  KwCoarsen,
  KwTranspose,
  KwDropEmptyRows,
  KwDropEmptyCols,
  KwOnlyEmptyRows,
  KwOnCollision,
  KwError,
  KwDrop,
  KwMax,
  KwMin,
  KwSum,
  KwFirst,
  KwLast,
  KwCount,
  KwConcat,
  KwIn,
  End,
};

const char* token_kind_name(TokenKind kind);

struct Token {
  TokenKind kind = TokenKind::End;
  std::string text;     // raw lexeme
  Value literal = 0.0;  // decoded payload for Number/String/True/False
  SourcePos pos;
};

/// Splits the source into tokens; whitespace and `#` line comments are
/// skipped, and no end-of-input token is emitted. Throws ParseError.
std::vector<Token> tokenize(std::string_view source);

// ---------------------------------------------------------------------------
// Abstract syntax

enum class CmpOp { Eq, Ne, Lt, Le, Gt, Ge, In };

template <class Atom>
struct Pred;
template <class Atom>
using PredPtr = std::unique_ptr<Pred<Atom>>;

template <class Atom>
struct NotPred {
  PredPtr<Atom> inner;
};
template <class Atom>
struct AndPred {
  PredPtr<Atom> lhs;
  PredPtr<Atom> rhs;
};
template <class Atom>
struct OrPred {
  PredPtr<Atom> lhs;
  PredPtr<Atom> rhs;
};

template <class Atom>
struct Pred {
  std::variant<Atom, NotPred<Atom>, AndPred<Atom>, OrPred<Atom>> node;
  SourceSpan span;
};

/// `_ op literal` or `_ in { ... }`: tests a bare value.
struct ValueAtom {
  CmpOp op = CmpOp::Eq;
  std::vector<Value> literals;  // one element except for In
};

/// `NAME op literal` or `NAME in { ... }`: tests the attribute of that type
/// name; an absent attribute never satisfies the atom.
struct RecordAtom {
  std::string attr;
  CmpOp op = CmpOp::Eq;
  std::vector<Value> literals;
};

using ValuePred = Pred<ValueAtom>;
using RecordPred = Pred<RecordAtom>;

struct TypeExpr;
using TypeExprPtr = std::unique_ptr<TypeExpr>;

struct NamedType {
  std::string name;
};
struct UnitTypeExpr {};
struct SelectType {
  TypeExprPtr base;
  ValuePred pred;
};
struct ReverseType {
  TypeExprPtr base;
};
struct ExtendType {
  TypeExprPtr base;
  std::vector<Value> values;
};
struct RefineType {
  TypeExprPtr base;
  TypeExprPtr refinement;
};
struct CoarsenType {
  TypeExprPtr base;
};

struct TypeExpr {
  std::variant<NamedType, UnitTypeExpr, SelectType, ReverseType, ExtendType, RefineType,
               CoarsenType>
      node;
  SourceSpan span;
};

struct DataExpr;
using DataExprPtr = std::unique_ptr<DataExpr>;

struct NamedData {
  std::string name;
};
struct SelectData {
  DataExprPtr base;
  RecordPred pred;
};

struct DataExpr {
  std::variant<NamedData, SelectData> node;
  SourceSpan span;
};

struct DropEmptyRowsMod {};
struct DropEmptyColsMod {};
struct OnlyEmptyRowsMod {};
struct TransposeMod {};
struct OnCollisionMod {
  CollisionPolicy policy;
};

struct Modifier {
  std::variant<DropEmptyRowsMod, DropEmptyColsMod, OnlyEmptyRowsMod, TransposeMod,
               OnCollisionMod>
      node;
  SourceSpan span;
};

/// `table(colType, rowType, data) | modifier | ...`; at most one onCollision
/// modifier (enforced by the parser).
struct TableExpr {
  TypeExpr column;
  TypeExpr row;
  DataExpr data;
  std::vector<Modifier> modifiers;
  SourceSpan span;
};

using Expr = TableExpr;

// Structural equality, ignoring source spans.
bool operator==(const TypeExpr& a, const TypeExpr& b);
bool operator==(const DataExpr& a, const DataExpr& b);
bool operator==(const Modifier& a, const Modifier& b);
bool operator==(const TableExpr& a, const TableExpr& b);
bool operator==(const ValuePred& a, const ValuePred& b);
bool operator==(const RecordPred& a, const RecordPred& b);

// ---------------------------------------------------------------------------
// Parser and printer

/// Parses a complete expression; trailing input is an error. Throws ParseError.
TableExpr parse(std::string_view source);

/// Canonical source rendering; parse(to_source(e)) == e.
std::string to_source(const TableExpr& expr);
std::string to_source(const TypeExpr& expr);
std::string to_source(const DataExpr& expr);

// ---------------------------------------------------------------------------
// Evaluation

/// Shared comparison semantics of predicate atoms: equality is exact, `in` is
/// membership by equality, and ordering atoms hold only between values of the
/// same kind (numbers with numbers, text with text).
bool atom_holds(CmpOp op, const Value& subject, const std::vector<Value>& literals);

bool eval_pred(const ValuePred& pred, const Value& subject);
bool eval_pred(const RecordPred& pred, const Record& record);

/// Name bindings for evaluation; type and data names live in separate spaces.
struct Env {
  std::map<std::string, DomainType, std::less<>> types;
  std::map<std::string, DataSet, std::less<>> data;
};

/// Evaluates the expression: type operators first, then construction with the
/// configured collision policy, then the remaining modifiers left to right.
/// When `warnings` is given, non-fatal diagnostics are appended to it (a
/// branch refined by an empty type can never hold data). Throws EvalError.
Table eval(const TableExpr& expr, const Env& env,
           std::vector<std::string>* warnings = nullptr);

}  // namespace ttable::dsl
