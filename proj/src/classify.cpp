#include "ltlc/classify.hpp"

namespace ltlc {

namespace {

ClassifyOutcome<LtlPtr> ltl_reject(LtlPtr offender, std::string reason) {
  return {nullptr, std::move(offender), std::move(reason)};
}

ClassifyOutcome<PrimePtr> prime_reject(PrimePtr offender, std::string reason) {
  return {nullptr, std::move(offender), std::move(reason)};
}

} // namespace

bool is_ltl_boxed(const LtlPtr& f) {
  LtlPtr cur = f;
  while (cur->kind == LtlKind::G || cur->kind == LtlKind::X) cur = cur->lhs;
  return cur->kind == LtlKind::Atom;
}

bool is_ltl_positive(const LtlPtr& f) {
  switch (f->kind) {
    case LtlKind::Atom:
    case LtlKind::True:
    case LtlKind::False:
      return true;
    case LtlKind::And:
    case LtlKind::Or:
    case LtlKind::Until:
      return is_ltl_positive(f->lhs) && is_ltl_positive(f->rhs);
    case LtlKind::G:
    case LtlKind::F:
    case LtlKind::X:
      return is_ltl_positive(f->lhs);
    case LtlKind::Not:
    case LtlKind::Implies:
    case LtlKind::Iff:
      return false;
  }
  return false;
}

bool is_ltl_negative(const LtlPtr& f) {
  if (f->kind == LtlKind::True) return true; // true = !false
  return f->kind == LtlKind::Not && is_ltl_positive(f->lhs);
}

ClassifyOutcome<LtlPtr> classify_ltl_untied(const LtlPtr& f) {
  if (is_ltl_boxed(f)) return {LtlShape::boxed(f), nullptr, ""};
  if (is_ltl_negative(f)) return {LtlShape::negative(f), nullptr, ""};
  switch (f->kind) {
    case LtlKind::And: {
      auto l = classify_ltl_untied(f->lhs);
      if (!l.untied()) return l;
      auto r = classify_ltl_untied(f->rhs);
      if (!r.untied()) return r;
      return {LtlShape::conj(l.shape, r.shape), nullptr, ""};
    }
    case LtlKind::Until: {
      LtlShapePtr guard;
      if (is_ltl_boxed(f->lhs)) guard = LtlShape::boxed(f->lhs);
      else if (is_ltl_negative(f->lhs)) guard = LtlShape::negative(f->lhs);
      else return ltl_reject(f->lhs, "left argument of U is neither boxed nor negative");
      auto tail = classify_ltl_untied(f->rhs);
      if (!tail.untied()) return tail;
      return {LtlShape::until(guard, tail.shape), nullptr, ""};
    }
    case LtlKind::F: { // F t is read as true U t
      auto tail = classify_ltl_untied(f->lhs);
      if (!tail.untied()) return tail;
      return {LtlShape::until(LtlShape::negative(LtlFormula::True()), tail.shape), nullptr, ""};
    }
    case LtlKind::G:
      return ltl_reject(f, "G applies to a non-atom and the body is not positive");
    case LtlKind::X:
      return ltl_reject(f, "X applies to a non-atom and the body is not positive");
    case LtlKind::Not:
      return ltl_reject(f, "negation of a non-positive formula");
    case LtlKind::Or:
      return ltl_reject(f, "disjunction of non-positive formulas");
    case LtlKind::False:
      return ltl_reject(f, "false is not untied");
    case LtlKind::Implies:
    case LtlKind::Iff:
      return ltl_reject(f, "formula must be desugared before classification");
    case LtlKind::Atom:
    case LtlKind::True:
      break; // unreachable: handled by boxed / negative above
  }
  return ltl_reject(f, "not untied");
}

bool is_ltlprime_boxed(const PrimePtr& f) {
  PrimePtr cur = f;
  while (cur->kind == PrimeKind::G || cur->kind == PrimeKind::Ghat || cur->kind == PrimeKind::X)
    cur = cur->lhs;
  return cur->kind == PrimeKind::Atom;
}

bool is_ltlprime_positive(const PrimePtr& f) {
  switch (f->kind) {
    case PrimeKind::Atom:
    case PrimeKind::True:
    case PrimeKind::False:
      return true;
    case PrimeKind::And:
    case PrimeKind::Or:
      return is_ltlprime_positive(f->lhs) && is_ltlprime_positive(f->rhs);
    case PrimeKind::G:
    case PrimeKind::Fx:
    case PrimeKind::Ghat:
    case PrimeKind::X:
      return is_ltlprime_positive(f->lhs);
    case PrimeKind::Not:
      return false;
  }
  return false;
}

bool is_ltlprime_negative(const PrimePtr& f) {
  switch (f->kind) {
    case PrimeKind::True:
      return true;
    case PrimeKind::Not:
      return is_ltlprime_positive(f->lhs);
    case PrimeKind::G:
    case PrimeKind::Ghat:
      return is_ltlprime_negative(f->lhs);
    default:
      return false;
  }
}

ClassifyOutcome<PrimePtr> classify_ltlprime_untied(const PrimePtr& f) {
  if (is_ltlprime_boxed(f)) return {PrimeShape::boxed(f), nullptr, ""};
  if (is_ltlprime_negative(f)) return {PrimeShape::negative(f), nullptr, ""};
  switch (f->kind) {
    case PrimeKind::And: {
      auto l = classify_ltlprime_untied(f->lhs);
      if (!l.untied()) return l;
      auto r = classify_ltlprime_untied(f->rhs);
      if (!r.untied()) return r;
      return {PrimeShape::conj(l.shape, r.shape), nullptr, ""};
    }
    case PrimeKind::Fx: {
      auto body = classify_ltlprime_untied(f->lhs);
      if (!body.untied()) return body;
      return {PrimeShape::fx(f->name, body.shape), nullptr, ""};
    }
    case PrimeKind::G:
      return prime_reject(f, "G applies to a non-atom and the body is not negative");
    case PrimeKind::Ghat:
      return prime_reject(f, "Gh applies to a non-atom and the body is not negative");
    case PrimeKind::X:
      return prime_reject(f, "X applies to a non-atom chain");
    case PrimeKind::Not:
      return prime_reject(f, "negation of a non-positive formula");
    case PrimeKind::Or:
      return prime_reject(f, "disjunction of non-positive formulas");
    case PrimeKind::False:
      return prime_reject(f, "false is not untied");
    case PrimeKind::Atom:
    case PrimeKind::True:
      break; // unreachable: handled by boxed / negative above
  }
  return prime_reject(f, "not untied");
}

std::vector<LtlPtr> flatten_conjuncts(const LtlPtr& f) {
  std::vector<LtlPtr> out;
  // In-order walk over the And spine, so conjuncts appear in syntactic order.
  std::vector<LtlPtr> stack{f};
  while (!stack.empty()) {
    LtlPtr cur = stack.back();
    stack.pop_back();
    if (cur->kind == LtlKind::And) {
      stack.push_back(cur->rhs);
      stack.push_back(cur->lhs);
    } else {
      out.push_back(cur);
    }
  }
  return out;
}

SahlqvistDecomposition decompose_sahlqvist(const LtlPtr& f) {
  LtlPtr d = desugar(f);
  SahlqvistDecomposition out;
  for (const LtlPtr& part : flatten_conjuncts(d)) {
    if (part->kind != LtlKind::Not)
      throw NotSahlqvistError("conjunct is not a negation", part);
    auto shape = classify_ltl_untied(part->lhs);
    if (!shape.untied())
      throw NotSahlqvistError("negated conjunct is not untied: " + shape.reason, shape.offender);
    out.untied_parts.push_back(part->lhs);
    out.shapes.push_back(shape.shape);
  }
  return out;
}

bool is_ltl_sahlqvist(const LtlPtr& f) {
  try {
    decompose_sahlqvist(f);
    return true;
  } catch (const NotSahlqvistError&) {
    return false;
  }
}

LtlPtr shape_to_formula(const LtlShapePtr& s) {
  switch (s->kind) {
    case ShapeKind::Boxed:
    case ShapeKind::Negative:
      return s->formula;
    case ShapeKind::Until:
      return LtlFormula::U(shape_to_formula(s->guard), shape_to_formula(s->child));
    case ShapeKind::Conj:
      return LtlFormula::And(shape_to_formula(s->left), shape_to_formula(s->right));
    default:
      throw std::invalid_argument("shape kind has no plain temporal counterpart");
  }
}

PrimePtr shape_to_formula(const PrimeShapePtr& s) {
  switch (s->kind) {
    case ShapeKind::Boxed:
    case ShapeKind::Negative:
      return s->formula;
    case ShapeKind::Conj:
      return LtlPrimeFormula::And(shape_to_formula(s->left), shape_to_formula(s->right));
    case ShapeKind::Fx:
      return LtlPrimeFormula::Fx(s->var, shape_to_formula(s->child));
    case ShapeKind::XWrap:
      return LtlPrimeFormula::X(shape_to_formula(s->child));
    case ShapeKind::GhatWrap:
      return LtlPrimeFormula::Ghat(s->lo, s->hi, shape_to_formula(s->child));
    case ShapeKind::Until:
      break;
  }
  throw std::invalid_argument("shape kind has no extended temporal counterpart");
}

} // namespace ltlc
