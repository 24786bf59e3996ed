#include "overload.hpp"
#include "ttable/dsl.hpp"

namespace ttable::dsl {

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (const char c : s) {
    switch (c) {
      case '"':
        out += "\\\"";
        break;
      case '\\':
        out += "\\\\";
        break;
      case '\n':
        out += "\\n";
        break;
      case '\t':
        out += "\\t";
        break;
      default:
        out += c;
    }
  }
  out += '"';
  return out;
}

std::string literal_source(const Value& v) {
  if (is_text(v)) {
    return quote(std::get<std::string>(v));
  }
  return format_value(v);
}

std::string literal_list(const std::vector<Value>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) {
      out += ", ";
    }
    out += literal_source(values[i]);
  }
  return out;
}

const char* op_source(CmpOp op) {
  switch (op) {
    case CmpOp::Eq:
      return "=";
    case CmpOp::Ne:
      return "!=";
    case CmpOp::Lt:
      return "<";
    case CmpOp::Le:
      return "<=";
    case CmpOp::Gt:
      return ">";
    case CmpOp::Ge:
      return ">=";
    case CmpOp::In:
      return "in";
  }
  return "?";
}

std::string atom_source(const ValueAtom& a) {
  if (a.op == CmpOp::In) {
    return "_ in {" + literal_list(a.literals) + "}";
  }
  return std::string("_ ") + op_source(a.op) + " " + literal_source(a.literals.front());
}

std::string atom_source(const RecordAtom& a) {
  if (a.op == CmpOp::In) {
    return a.attr + " in {" + literal_list(a.literals) + "}";
  }
  return a.attr + " " + op_source(a.op) + " " + literal_source(a.literals.front());
}

enum Prec { kOr = 1, kAnd = 2, kNot = 3, kAtom = 4 };

template <class Atom>
int prec_of(const Pred<Atom>& p) {
  return std::visit(Overload{
                        [](const Atom&) { return static_cast<int>(kAtom); },
                        [](const NotPred<Atom>&) { return static_cast<int>(kNot); },
                        [](const AndPred<Atom>&) { return static_cast<int>(kAnd); },
                        [](const OrPred<Atom>&) { return static_cast<int>(kOr); },
                    },
                    p.node);
}

// Parenthesizes a child whose operator binds looser than its context allows,
// so the left-associative reparse rebuilds exactly this tree.
template <class Atom>
std::string pred_source(const Pred<Atom>& p, int min_prec) {
  const std::string body = std::visit(
      Overload{
          [](const Atom& a) { return atom_source(a); },
          [](const NotPred<Atom>& n) { return "!" + pred_source(*n.inner, kNot); },
          [](const AndPred<Atom>& n) {
            return pred_source(*n.lhs, kAnd) + " && " + pred_source(*n.rhs, kAnd + 1);
          },
          [](const OrPred<Atom>& n) {
            return pred_source(*n.lhs, kOr) + " || " + pred_source(*n.rhs, kOr + 1);
          },
      },
      p.node);
  if (prec_of(p) < min_prec) {
    return "(" + body + ")";
  }
  return body;
}

std::string type_source(const TypeExpr& e) {
  return std::visit(
      Overload{
          [](const NamedType& t) { return t.name; },
          [](const UnitTypeExpr&) { return std::string("unit"); },
          [](const SelectType& t) {
            return "select(" + type_source(*t.base) + ", " + pred_source(t.pred, kOr) + ")";
          },
          [](const ReverseType& t) { return "reverse(" + type_source(*t.base) + ")"; },
          [](const ExtendType& t) {
            return "extend(" + type_source(*t.base) + ", " + literal_list(t.values) + ")";
          },
          [](const RefineType& t) {
            return "refine(" + type_source(*t.base) + ", " + type_source(*t.refinement) + ")";
          },
          [](const CoarsenType& t) { return "coarsen(" + type_source(*t.base) + ")"; },
      },
      e.node);
}

std::string data_source(const DataExpr& e) {
  return std::visit(
      Overload{
          [](const NamedData& d) { return d.name; },
          [](const SelectData& d) {
            return "select(" + data_source(*d.base) + ", " + pred_source(d.pred, kOr) + ")";
          },
      },
      e.node);
}

std::string policy_source(const CollisionPolicy& policy) {
  return std::visit(Overload{
                        [](const ErrorPolicy&) { return std::string("error"); },
                        [](const DropPolicy&) { return std::string("drop"); },
                        [](const AggregateFn& fn) {
                          switch (fn.kind) {
                            case AggKind::Max:
                              return std::string("max");
                            case AggKind::Min:
                              return std::string("min");
                            case AggKind::Sum:
                              return std::string("sum");
                            case AggKind::First:
                              return std::string("first");
                            case AggKind::Last:
                              return std::string("last");
                            case AggKind::Count:
                              return std::string("count");
                            case AggKind::Concat:
                              return "concat(" + quote(fn.separator) + ")";
                          }
                          return std::string("error");
                        },
                    },
                    policy);
}

std::string modifier_source(const Modifier& m) {
  return std::visit(Overload{
                        [](const DropEmptyRowsMod&) { return std::string("dropEmptyRows"); },
                        [](const DropEmptyColsMod&) { return std::string("dropEmptyCols"); },
                        [](const OnlyEmptyRowsMod&) { return std::string("onlyEmptyRows"); },
                        [](const TransposeMod&) { return std::string("transpose"); },
                        [](const OnCollisionMod& oc) {
                          return "onCollision(" + policy_source(oc.policy) + ")";
                        },
                    },
                    m.node);
}

}  // namespace

std::string to_source(const TypeExpr& expr) {
  return type_source(expr);
}

std::string to_source(const DataExpr& expr) {
  return data_source(expr);
}

std::string to_source(const TableExpr& expr) {
  std::string out = "table(" + type_source(expr.column) + ", " + type_source(expr.row) + ", " +
                    data_source(expr.data) + ")";
  for (const auto& mod : expr.modifiers) {
    out += " | " + modifier_source(mod);
  }
  return out;
}

// Canonical rendering is injective on ASTs (strings always print quoted,
// grouping is explicit), so span-insensitive equality can compare sources.
bool operator==(const TypeExpr& a, const TypeExpr& b) {
  return type_source(a) == type_source(b);
}

bool operator==(const DataExpr& a, const DataExpr& b) {
  return data_source(a) == data_source(b);
}

bool operator==(const Modifier& a, const Modifier& b) {
  return modifier_source(a) == modifier_source(b);
}

bool operator==(const ValuePred& a, const ValuePred& b) {
  return pred_source(a, kOr) == pred_source(b, kOr);
}

bool operator==(const RecordPred& a, const RecordPred& b) {
  return pred_source(a, kOr) == pred_source(b, kOr);
}

bool operator==(const TableExpr& a, const TableExpr& b) {
  return to_source(a) == to_source(b);
}

}  // namespace ttable::dsl
