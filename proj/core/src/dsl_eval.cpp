#include "overload.hpp"
#include "ttable/dsl.hpp"
#include "ttable/type_algebra.hpp"

namespace ttable::dsl {

bool atom_holds(CmpOp op, const Value& subject, const std::vector<Value>& literals) {
  switch (op) {
    case CmpOp::Eq:
      return subject == literals.front();
    case CmpOp::Ne:
      return subject != literals.front();
    case CmpOp::In:
      for (const auto& lit : literals) {
        if (subject == lit) {
          return true;
        }
      }
      return false;
    default:
      break;
  }
  const Value& other = literals.front();
  if (is_number(subject) && is_number(other)) {
    const double a = std::get<double>(subject);
    const double b = std::get<double>(other);
    switch (op) {
      case CmpOp::Lt:
        return a < b;
      case CmpOp::Le:
        return a <= b;
      case CmpOp::Gt:
        return a > b;
      case CmpOp::Ge:
        return a >= b;
      default:
        return false;
    }
  }
  if (is_text(subject) && is_text(other)) {
    const auto cmp = std::get<std::string>(subject).compare(std::get<std::string>(other));
    switch (op) {
      case CmpOp::Lt:
        return cmp < 0;
      case CmpOp::Le:
        return cmp <= 0;
      case CmpOp::Gt:
        return cmp > 0;
      case CmpOp::Ge:
        return cmp >= 0;
      default:
        return false;
    }
  }
  return false;
}

bool eval_pred(const ValuePred& pred, const Value& subject) {
  return std::visit(
      Overload{
          [&](const ValueAtom& a) { return atom_holds(a.op, subject, a.literals); },
          [&](const NotPred<ValueAtom>& n) { return !eval_pred(*n.inner, subject); },
          [&](const AndPred<ValueAtom>& n) {
            return eval_pred(*n.lhs, subject) && eval_pred(*n.rhs, subject);
          },
          [&](const OrPred<ValueAtom>& n) {
            return eval_pred(*n.lhs, subject) || eval_pred(*n.rhs, subject);
          },
      },
      pred.node);
}

bool eval_pred(const RecordPred& pred, const Record& record) {
  return std::visit(
      Overload{
          [&](const RecordAtom& a) {
            const Value* subject = record.find(a.attr);
            return subject != nullptr && atom_holds(a.op, *subject, a.literals);
          },
          [&](const NotPred<RecordAtom>& n) { return !eval_pred(*n.inner, record); },
          [&](const AndPred<RecordAtom>& n) {
            return eval_pred(*n.lhs, record) && eval_pred(*n.rhs, record);
          },
          [&](const OrPred<RecordAtom>& n) {
            return eval_pred(*n.lhs, record) || eval_pred(*n.rhs, record);
          },
      },
      pred.node);
}

namespace {

DomainType eval_domain(const TypeExpr& expr, const Env& env);

// Domain-type operand of an operator that has no unit form.
DomainType eval_operand(const TypeExpr& expr, const Env& env, const char* op) {
  if (std::holds_alternative<UnitTypeExpr>(expr.node)) {
    throw EvalError(expr.span, std::string(op) + " applies to a domain type, not unit");
  }
  return eval_domain(expr, env);
}

DomainType eval_domain(const TypeExpr& expr, const Env& env) {
  return std::visit(
      Overload{
          [&](const NamedType& t) {
            const auto it = env.types.find(t.name);
            if (it == env.types.end()) {
              throw EvalError(expr.span, "unbound type name '" + t.name + "'");
            }
            return it->second;
          },
          [&](const UnitTypeExpr&) -> DomainType {
            throw EvalError(expr.span, "unit has no values to operate on");
          },
          [&](const SelectType& t) {
            const DomainType base = eval_operand(*t.base, env, "select");
            return select_type(base,
                               [&](const Value& v) { return eval_pred(t.pred, v); });
          },
          [&](const ReverseType& t) {
            return reverse_type(eval_operand(*t.base, env, "reverse"));
          },
          [&](const ExtendType& t) {
            const DomainType base = eval_operand(*t.base, env, "extend");
            try {
              return extend_type(base, t.values);
            } catch (const ModelError& e) {
              throw EvalError(expr.span, e.what());
            }
          },
          [&](const RefineType& t) {
            const DomainType base = eval_operand(*t.base, env, "refine");
            const DomainType refinement = eval_operand(*t.refinement, env, "refine");
            try {
              return refine(base, refinement);
            } catch (const ModelError& e) {
              throw EvalError(expr.span, e.what());
            }
          },
          [&](const CoarsenType& t) {
            return coarsen(eval_operand(*t.base, env, "coarsen"));
          },
      },
      expr.node);
}

AxisType eval_axis(const TypeExpr& expr, const Env& env, std::vector<std::string>* warnings) {
  if (std::holds_alternative<UnitTypeExpr>(expr.node)) {
    return UnitType{};
  }
  DomainType type = eval_domain(expr, env);
  if (auto violation = validate_type(type)) {
    throw EvalError(expr.span, *violation);
  }
  if (warnings != nullptr) {
    for (auto& w : empty_refinement_paths(type)) {
      warnings->push_back(std::move(w));
    }
  }
  return type;
}

DataSet eval_data(const DataExpr& expr, const Env& env) {
  return std::visit(
      Overload{
          [&](const NamedData& d) {
            const auto it = env.data.find(d.name);
            if (it == env.data.end()) {
              throw EvalError(expr.span, "unbound data name '" + d.name + "'");
            }
            return it->second;
          },
          [&](const SelectData& d) {
            const DataSet base = eval_data(*d.base, env);
            return select_data(base, [&](const Record& r) { return eval_pred(d.pred, r); });
          },
      },
      expr.node);
}

}  // namespace

Table eval(const TableExpr& expr, const Env& env, std::vector<std::string>* warnings) {
  const AxisType column = eval_axis(expr.column, env, warnings);
  const AxisType row = eval_axis(expr.row, env, warnings);
  const DataSet data = eval_data(expr.data, env);

  CollisionPolicy policy = ErrorPolicy{};
  SourceSpan policy_span = expr.span;
  for (const auto& mod : expr.modifiers) {
    if (const auto* oc = std::get_if<OnCollisionMod>(&mod.node)) {
      policy = oc->policy;
      policy_span = mod.span;
    }
  }

  Table t;
  try {
    t = build(column, row, data, policy);
  } catch (const BuildError& e) {
    throw EvalError(policy_span, e.what());
  }

  for (const auto& mod : expr.modifiers) {
    std::visit(Overload{
                   [&](const DropEmptyRowsMod&) { t = filter_rows(t, lane_nonempty); },
                   [&](const DropEmptyColsMod&) { t = filter_cols(t, lane_nonempty); },
                   [&](const OnlyEmptyRowsMod&) {
                     t = filter_rows(t, lane_empty);
                     t.column_headers.clear();
                     t.cells.clear();
                   },
                   [&](const TransposeMod&) { t = transpose(t); },
                   [&](const OnCollisionMod&) {},  // consumed before construction
               },
               mod.node);
  }
  return t;
}

}  // namespace ttable::dsl
