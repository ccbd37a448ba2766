#include "ltlc/translate.hpp"

#include <stdexcept>

namespace ltlc {

PrimePtr tau(const LtlPtr& f, const TermPtr& at, VarSupply& supply) {
  switch (f->kind) {
    case LtlKind::Atom:
      return LtlPrimeFormula::Atom(f->name);
    case LtlKind::True:
      return LtlPrimeFormula::True();
    case LtlKind::False:
      return LtlPrimeFormula::False();
    case LtlKind::Not:
      return LtlPrimeFormula::Not(tau(f->lhs, at, supply));
    case LtlKind::And: {
      // Evaluate left before right so fresh witness names are assigned
      // leftmost-first regardless of the compiler's argument evaluation order.
      PrimePtr l = tau(f->lhs, at, supply);
      PrimePtr r = tau(f->rhs, at, supply);
      return LtlPrimeFormula::And(std::move(l), std::move(r));
    }
    case LtlKind::Or: {
      PrimePtr l = tau(f->lhs, at, supply);
      PrimePtr r = tau(f->rhs, at, supply);
      return LtlPrimeFormula::Or(std::move(l), std::move(r));
    }
    case LtlKind::G:
      // The body is evaluated at the quantified point, which is the evaluation
      // point again from the body's perspective.
      return LtlPrimeFormula::G(tau(f->lhs, PathTerm::eval_point(), supply));
    case LtlKind::F: {
      std::string x = supply.fresh("x");
      return LtlPrimeFormula::Fx(x, tau(f->lhs, PathTerm::var(x), supply));
    }
    case LtlKind::X:
      return LtlPrimeFormula::X(tau(f->lhs, PathTerm::succ(at), supply));
    case LtlKind::Until: {
      // phi1 U phi2 becomes Fx[x](tau(phi2) & Gh[at,x] tau(phi1)): some later
      // point x satisfies phi2 while every point from `at` up to x satisfies
      // phi1. The guard body is evaluated at the Ghat-quantified point.
      std::string x = supply.fresh("x");
      PrimePtr tail = tau(f->rhs, PathTerm::var(x), supply);
      PrimePtr guard = tau(f->lhs, PathTerm::eval_point(), supply);
      return LtlPrimeFormula::Fx(
          x, LtlPrimeFormula::And(tail, LtlPrimeFormula::Ghat(at, PathTerm::var(x), guard)));
    }
    case LtlKind::Implies:
    case LtlKind::Iff:
      throw std::invalid_argument("translation requires a desugared formula");
  }
  throw std::invalid_argument("unreachable formula kind");
}

PrimePtr tau(const LtlPtr& f) {
  VarSupply supply;
  for (const std::string& atom : atoms_of(f)) supply.reserve(atom);
  return tau(f, PathTerm::eval_point(), supply);
}

} // namespace ltlc
