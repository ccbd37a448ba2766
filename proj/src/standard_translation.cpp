#include "ltlc/standard_translation.hpp"

#include <stdexcept>

namespace ltlc {

namespace {

// `current` is the term the formula is evaluated at; `anchor` is what the
// evaluation point resolves to inside Ghat bounds. G and Ghat re-center the
// anchor at their quantified point; Fx and X do not (an Fx body speaks about
// its named witness, an X body about S(current), while bounds written against
// the evaluation point keep referring to the enclosing universal point).
FoPtr st_prime(const PrimePtr& f, const TermPtr& current, const TermPtr& anchor,
               VarSupply& supply) {
  switch (f->kind) {
    case PrimeKind::Atom:
      return FoFormula::Pred(PredicateSymbol::for_atom(f->name), current);
    case PrimeKind::True:
      return FoFormula::True();
    case PrimeKind::False:
      return FoFormula::False();
    case PrimeKind::Not:
      return FoFormula::Not(st_prime(f->lhs, current, anchor, supply));
    case PrimeKind::And: {
      // Sequenced so fresh variable names are assigned leftmost-first.
      FoPtr l = st_prime(f->lhs, current, anchor, supply);
      FoPtr r = st_prime(f->rhs, current, anchor, supply);
      return FoFormula::And(std::move(l), std::move(r));
    }
    case PrimeKind::Or: {
      FoPtr l = st_prime(f->lhs, current, anchor, supply);
      FoPtr r = st_prime(f->rhs, current, anchor, supply);
      return FoFormula::Or(std::move(l), std::move(r));
    }
    case PrimeKind::G: {
      std::string v = supply.fresh("v");
      TermPtr point = PathTerm::var(v);
      return FoFormula::Forall(
          v, FoFormula::Implies(FoFormula::Le(current, point),
                                st_prime(f->lhs, point, point, supply)));
    }
    case PrimeKind::Fx: {
      supply.reserve(f->name);
      TermPtr point = PathTerm::var(f->name);
      return FoFormula::Exists(
          f->name, FoFormula::And(FoFormula::Le(current, point),
                                  st_prime(f->lhs, point, anchor, supply)));
    }
    case PrimeKind::Ghat: {
      TermPtr lo = replace_in_term(f->lo, PathTerm::eval_point(), anchor);
      TermPtr hi = replace_in_term(f->hi, PathTerm::eval_point(), anchor);
      std::string v = supply.fresh("v");
      TermPtr point = PathTerm::var(v);
      return FoFormula::Forall(
          v, FoFormula::Implies(
                 FoFormula::And(FoFormula::Le(lo, point), FoFormula::Lt(point, hi)),
                 st_prime(f->lhs, point, point, supply)));
    }
    case PrimeKind::X:
      return st_prime(f->lhs, PathTerm::succ(current), anchor, supply);
  }
  throw std::invalid_argument("unreachable formula kind");
}

} // namespace

FoPtr st_ltlprime(const PrimePtr& f, const TermPtr& at, VarSupply& supply) {
  if (auto reason = well_scoped(f))
    throw std::invalid_argument("formula is not well-scoped: " + *reason);
  return st_prime(f, at, at, supply);
}

FoPtr st_ltlprime(const PrimePtr& f, const TermPtr& current, const TermPtr& anchor,
                  VarSupply& supply) {
  return st_prime(f, current, anchor, supply);
}

FoPtr st_ltl(const LtlPtr& f, const TermPtr& at, VarSupply& supply) {
  switch (f->kind) {
    case LtlKind::Atom:
      return FoFormula::Pred(PredicateSymbol::for_atom(f->name), at);
    case LtlKind::True:
      return FoFormula::True();
    case LtlKind::False:
      return FoFormula::False();
    case LtlKind::Not:
      return FoFormula::Not(st_ltl(f->lhs, at, supply));
    case LtlKind::And: {
      // Sequenced so fresh variable names are assigned leftmost-first.
      FoPtr l = st_ltl(f->lhs, at, supply);
      FoPtr r = st_ltl(f->rhs, at, supply);
      return FoFormula::And(std::move(l), std::move(r));
    }
    case LtlKind::Or: {
      FoPtr l = st_ltl(f->lhs, at, supply);
      FoPtr r = st_ltl(f->rhs, at, supply);
      return FoFormula::Or(std::move(l), std::move(r));
    }
    case LtlKind::G: {
      std::string v = supply.fresh("v");
      TermPtr point = PathTerm::var(v);
      return FoFormula::Forall(v, FoFormula::Implies(FoFormula::Le(at, point),
                                                     st_ltl(f->lhs, point, supply)));
    }
    case LtlKind::F: {
      std::string x = supply.fresh("x");
      TermPtr point = PathTerm::var(x);
      return FoFormula::Exists(
          x, FoFormula::And(FoFormula::Le(at, point), st_ltl(f->lhs, point, supply)));
    }
    case LtlKind::X:
      return st_ltl(f->lhs, PathTerm::succ(at), supply);
    case LtlKind::Until: {
      // exists u.(at<=u & ST_u(rhs) & forall v.(at<=v & v<u -> ST_v(lhs)))
      std::string u = supply.fresh("u");
      TermPtr upoint = PathTerm::var(u);
      FoPtr tail = st_ltl(f->rhs, upoint, supply);
      std::string v = supply.fresh("v");
      TermPtr vpoint = PathTerm::var(v);
      FoPtr guard = FoFormula::Forall(
          v, FoFormula::Implies(
                 FoFormula::And(FoFormula::Le(at, vpoint), FoFormula::Lt(vpoint, upoint)),
                 st_ltl(f->lhs, vpoint, supply)));
      return FoFormula::Exists(
          u, FoFormula::And(FoFormula::Le(at, upoint), FoFormula::And(tail, guard)));
    }
    case LtlKind::Implies:
    case LtlKind::Iff:
      throw std::invalid_argument("standard translation requires a desugared formula");
  }
  throw std::invalid_argument("unreachable formula kind");
}

SoFormula so_closure(const FoPtr& fo, SoQuant quant) {
  return SoFormula{quant, predicates_of(fo), fo};
}

} // namespace ltlc
