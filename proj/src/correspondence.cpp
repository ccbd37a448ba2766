#include "ltlc/correspondence.hpp"

#include <stdexcept>

#include "ltlc/standard_translation.hpp"
#include "ltlc/translate.hpp"

namespace ltlc {

namespace {

TermPtr resolve_eval_point(const TermPtr& t, const TermPtr& anchor) {
  return replace_in_term(t, PathTerm::eval_point(), anchor);
}

// `current` walks the chain; `anchor` is what the evaluation point in Ghat
// bounds refers to (re-centered by G/Ghat, kept by X, as in the standard
// translation).
FoPtr accessibility(const PrimePtr& f, const TermPtr& current, const TermPtr& anchor,
                    const std::string& target, VarSupply& supply) {
  switch (f->kind) {
    case PrimeKind::Atom:
      return FoFormula::Eq(current, PathTerm::var(target));
    case PrimeKind::G: {
      std::string u = supply.fresh("u");
      TermPtr point = PathTerm::var(u);
      return FoFormula::Exists(
          u, FoFormula::And(FoFormula::Le(current, point),
                            accessibility(f->lhs, point, point, target, supply)));
    }
    case PrimeKind::X:
      return accessibility(f->lhs, PathTerm::succ(current), anchor, target, supply);
    case PrimeKind::Ghat: {
      TermPtr lo = resolve_eval_point(f->lo, anchor);
      TermPtr hi = resolve_eval_point(f->hi, anchor);
      std::string u = supply.fresh("u");
      TermPtr point = PathTerm::var(u);
      return FoFormula::Exists(
          u, FoFormula::And(
                 FoFormula::Le(lo, point),
                 FoFormula::And(FoFormula::Lt(point, hi),
                                accessibility(f->lhs, point, point, target, supply))));
    }
    default:
      throw std::invalid_argument("accessibility requires a boxed formula");
  }
}

using Defs = std::map<std::string, PredicateDef>;

Defs minimal_defs(const PrimeShapePtr& shape, const TermPtr& at, const TermPtr& anchor,
                  const std::string& param, VarSupply& supply) {
  switch (shape->kind) {
    case ShapeKind::Boxed: {
      PrimePtr leaf = shape->formula;
      PrimePtr atom = leaf;
      while (atom->kind != PrimeKind::Atom) atom = atom->lhs;
      Defs out;
      out.emplace(atom->name,
                  PredicateDef{param, accessibility(leaf, at, anchor, param, supply)});
      return out;
    }
    case ShapeKind::Negative:
      return {};
    case ShapeKind::Conj: {
      Defs left = minimal_defs(shape->left, at, anchor, param, supply);
      Defs right = minimal_defs(shape->right, at, anchor, param, supply);
      for (auto& [atom, def] : right) {
        auto it = left.find(atom);
        if (it == left.end())
          left.emplace(atom, std::move(def));
        else
          it->second.body = FoFormula::Or(it->second.body, def.body);
      }
      return left;
    }
    case ShapeKind::Fx:
      supply.reserve(shape->var);
      return minimal_defs(shape->child, PathTerm::var(shape->var), anchor, param, supply);
    case ShapeKind::XWrap:
      return minimal_defs(shape->child, PathTerm::succ(at), anchor, param, supply);
    case ShapeKind::GhatWrap: {
      TermPtr lo = resolve_eval_point(shape->lo, anchor);
      TermPtr hi = resolve_eval_point(shape->hi, anchor);
      std::string u = supply.fresh("u");
      TermPtr point = PathTerm::var(u);
      Defs inner = minimal_defs(shape->child, point, point, param, supply);
      for (auto& [atom, def] : inner)
        def.body = FoFormula::Exists(
            u, FoFormula::And(FoFormula::Le(lo, point),
                              FoFormula::And(FoFormula::Lt(point, hi), def.body)));
      return inner;
    }
    case ShapeKind::Until:
      break;
  }
  throw std::invalid_argument("minimal assignment is defined on extended-language shapes only");
}

FoPtr substitute_defs(const FoPtr& f, const Defs& defs) {
  switch (f->kind) {
    case FoKind::Pred: {
      auto it = defs.find(PredicateSymbol{f->name}.atom());
      if (it == defs.end()) return FoFormula::False();
      return subst_var(it->second.body, it->second.param, f->t1);
    }
    case FoKind::Le:
    case FoKind::Lt:
    case FoKind::Eq:
    case FoKind::True:
    case FoKind::False:
      return f;
    case FoKind::Not:
      return FoFormula::Not(substitute_defs(f->lhs, defs));
    case FoKind::And:
      return FoFormula::And(substitute_defs(f->lhs, defs), substitute_defs(f->rhs, defs));
    case FoKind::Or:
      return FoFormula::Or(substitute_defs(f->lhs, defs), substitute_defs(f->rhs, defs));
    case FoKind::Implies:
      return FoFormula::Implies(substitute_defs(f->lhs, defs), substitute_defs(f->rhs, defs));
    case FoKind::Forall:
      return FoFormula::Forall(f->name, substitute_defs(f->lhs, defs));
    case FoKind::Exists:
      return FoFormula::Exists(f->name, substitute_defs(f->lhs, defs));
  }
  throw std::invalid_argument("unreachable formula kind");
}

} // namespace

FoPtr boxed_accessibility(const PrimePtr& boxed, const TermPtr& w, const std::string& v,
                          VarSupply& supply) {
  if (!is_ltlprime_boxed(boxed))
    throw std::invalid_argument("accessibility requires a boxed formula");
  supply.reserve(v);
  return accessibility(boxed, w, w, v, supply);
}

MinimalAssignment minimal_assignment(const PrimeShapePtr& shape, const TermPtr& at,
                                     VarSupply& supply) {
  std::string param = supply.fresh("y");
  return MinimalAssignment{minimal_defs(shape, at, at, param, supply)};
}

FoPtr apply_minimal_assignment(const FoPtr& fo, const MinimalAssignment& ma) {
  return substitute_defs(fo, ma.defs);
}

PrimeShapePtr replace_negatives_with_top(const PrimeShapePtr& shape) {
  switch (shape->kind) {
    case ShapeKind::Boxed:
      return shape;
    case ShapeKind::Negative:
      return PrimeShape::negative(LtlPrimeFormula::True());
    case ShapeKind::Conj:
      return PrimeShape::conj(replace_negatives_with_top(shape->left),
                              replace_negatives_with_top(shape->right));
    case ShapeKind::Fx:
      return PrimeShape::fx(shape->var, replace_negatives_with_top(shape->child));
    case ShapeKind::XWrap:
      return PrimeShape::x_wrap(replace_negatives_with_top(shape->child));
    case ShapeKind::GhatWrap:
      return PrimeShape::ghat_wrap(shape->lo, shape->hi,
                                   replace_negatives_with_top(shape->child));
    case ShapeKind::Until:
      break;
  }
  throw std::invalid_argument("shape is not from the extended language");
}

namespace {

// `at` follows the Fx witnesses; `anchor` stays put, exactly as in
// minimal_defs, so evaluation points inside leaf bounds keep their meaning.
FoPtr inclusion_rec(const PrimeShapePtr& shape, const TermPtr& at, const TermPtr& anchor,
                    VarSupply& supply) {
  switch (shape->kind) {
    case ShapeKind::Boxed: {
      PrimePtr leaf = shape->formula;
      PrimePtr atom = leaf;
      while (atom->kind != PrimeKind::Atom) atom = atom->lhs;
      std::string y = supply.fresh("y");
      return FoFormula::Forall(
          y, FoFormula::Implies(accessibility(leaf, at, anchor, y, supply),
                                FoFormula::Pred(PredicateSymbol::for_atom(atom->name),
                                                PathTerm::var(y))));
    }
    case ShapeKind::Negative:
      return FoFormula::True();
    case ShapeKind::Conj: {
      // Sequenced so fresh variable names are assigned leftmost-first.
      FoPtr left = inclusion_rec(shape->left, at, anchor, supply);
      FoPtr right = inclusion_rec(shape->right, at, anchor, supply);
      return FoFormula::And(std::move(left), std::move(right));
    }
    case ShapeKind::Fx: {
      supply.reserve(shape->var);
      TermPtr point = PathTerm::var(shape->var);
      return FoFormula::Exists(
          shape->var, FoFormula::And(FoFormula::Le(at, point),
                                     inclusion_rec(shape->child, point, anchor, supply)));
    }
    default:
      throw std::invalid_argument("inclusion is defined for classifier-produced shapes");
  }
}

// One hoisted existential witness: the variable an Fx node binds, plus the
// term it must lie at or after.
struct WitnessBinder {
  std::string var;
  TermPtr lower;
};

// Leaf-by-leaf translation with the minimal definitions substituted in; every
// Fx binder along the way is recorded in `prefix` instead of being emitted in
// place. `at`/`anchor` follow the same discipline as minimal_defs.
FoPtr substituted_matrix(const PrimeShapePtr& shape, const TermPtr& at,
                         const TermPtr& anchor,
                         const std::map<std::string, PredicateDef>& defs,
                         VarSupply& supply, std::vector<WitnessBinder>& prefix) {
  switch (shape->kind) {
    case ShapeKind::Boxed:
    case ShapeKind::Negative:
      return substitute_defs(st_ltlprime(shape->formula, at, anchor, supply), defs);
    case ShapeKind::Conj: {
      FoPtr left = substituted_matrix(shape->left, at, anchor, defs, supply, prefix);
      FoPtr right = substituted_matrix(shape->right, at, anchor, defs, supply, prefix);
      return FoFormula::And(left, right);
    }
    case ShapeKind::Fx: {
      supply.reserve(shape->var);
      prefix.push_back(WitnessBinder{shape->var, at});
      return substituted_matrix(shape->child, PathTerm::var(shape->var), anchor, defs,
                                supply, prefix);
    }
    default:
      throw std::invalid_argument("substitution is defined for classifier-produced shapes");
  }
}

// Standard translation with the minimal assignment substituted. All Fx
// witnesses are hoisted into one shared existential prefix (with their lower
// bound guards) before substituting. Distinct witnesses never mention each
// other, so hoisting preserves meaning; it also puts every predicate
// occurrence inside the scope of every witness, which matters because a
// definition produced under one witness can be unioned into an atom's
// definition and then substituted inside a sibling conjunct.
FoPtr substituted_translation(const PrimeShapePtr& shape, const TermPtr& at,
                              const std::map<std::string, PredicateDef>& defs,
                              VarSupply& supply) {
  std::vector<WitnessBinder> prefix;
  FoPtr matrix = substituted_matrix(shape, at, at, defs, supply, prefix);
  for (auto it = prefix.rbegin(); it != prefix.rend(); ++it) {
    TermPtr point = PathTerm::var(it->var);
    matrix = FoFormula::Exists(it->var,
                               FoFormula::And(FoFormula::Le(it->lower, point), matrix));
  }
  return matrix;
}

} // namespace

FoPtr inclusion_formula(const PrimeShapePtr& shape, const TermPtr& at, VarSupply& supply) {
  return inclusion_rec(shape, at, at, supply);
}

CorrespondenceResult correspondent(const LtlPtr& f, const TermPtr& at) {
  LtlPtr input = desugar(f);
  SahlqvistDecomposition decomposition = decompose_sahlqvist(input);

  CorrespondenceResult result;
  result.input = input;
  FoPtr conjunction;
  for (size_t i = 0; i < decomposition.untied_parts.size(); ++i) {
    const LtlPtr& part = decomposition.untied_parts[i];

    VarSupply supply;
    for (const std::string& atom : atoms_of(input)) supply.reserve(atom);
    std::set<std::string> at_vars;
    collect_term_vars(at, at_vars);
    for (const std::string& name : at_vars) supply.reserve(name);

    ConjunctReport report;
    report.untied = part;
    report.translated = tau(part, PathTerm::eval_point(), supply);
    auto outcome = classify_ltlprime_untied(report.translated);
    if (!outcome.untied())
      throw std::logic_error("translation of an untied formula must be untied: " +
                             outcome.reason);
    report.shape = outcome.shape;
    report.st = st_ltlprime(report.translated, at, supply);
    report.assignment = minimal_assignment(report.shape, at, supply);
    report.substituted =
        substituted_translation(report.shape, at, report.assignment.defs, supply);

    FoPtr negated = FoFormula::Not(report.substituted);
    conjunction = conjunction ? FoFormula::And(conjunction, negated) : negated;
    result.conjuncts.push_back(std::move(report));
  }
  result.correspondent = conjunction;
  result.simplified = simplify_fo(conjunction);
  return result;
}

} // namespace ltlc
