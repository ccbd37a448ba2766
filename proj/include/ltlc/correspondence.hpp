// The core algorithm: accessibility relations for boxed formulas, minimal
// predicate assignments, substitution into the standard translation, and
// assembly of the first-order correspondent of a Sahlqvist formula.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "ltlc/classify.hpp"
#include "ltlc/formula.hpp"

namespace ltlc {

// First-order formula relating `w` to the states a boxed formula's chain of
// operators inspects: base case w = v, one existential step per G/Ghat, one
// successor application per X. Free variables: those of `w`, plus `v`.
// Throws std::invalid_argument unless the input passes the boxed check.
FoPtr boxed_accessibility(const PrimePtr& boxed, const TermPtr& w, const std::string& v,
                          VarSupply& supply);

// The smallest predicate per atom making the boxed leaves of an untied shape
// true at `at`. Atoms absent from the map are implicitly the empty predicate.
struct MinimalAssignment {
  std::map<std::string, PredicateDef> defs; // keyed by atom name
};

// Recursion over the shape: boxed leaf contributes its accessibility relation,
// negative leaf contributes nothing, conjunction takes pointwise disjunction,
// an Fx node recurses at its own variable (which the standard translation of
// the same shape binds, when both draw from one supply), X and Ghat wrappers
// shift or window the recursion point.
MinimalAssignment minimal_assignment(const PrimeShapePtr& shape, const TermPtr& at,
                                     VarSupply& supply);

// Replaces every predicate application by its minimal definition; predicates
// without a definition become false. The definition bodies keep their free
// variables, so applications under the quantifier those variables belong to
// are captured by it on purpose.
FoPtr apply_minimal_assignment(const FoPtr& fo, const MinimalAssignment& ma);

// Every Negative leaf's formula becomes top; structure is preserved.
PrimeShapePtr replace_negatives_with_top(const PrimeShapePtr& shape);

// First-order statement "the predicates cover some family of minimal
// witnesses": existentially closes the shape's Fx variables (guarded by <=)
// and asserts, per boxed leaf, that every accessible state satisfies the
// leaf's predicate. Negative leaves contribute nothing.
FoPtr inclusion_formula(const PrimeShapePtr& shape, const TermPtr& at, VarSupply& supply);

struct ConjunctReport {
  LtlPtr untied;             // E_i with the input = /\ !E_i
  PrimePtr translated;       // its image in the extended language
  PrimeShapePtr shape;       // untied derivation of the image
  FoPtr st;                  // standard translation at the evaluation term
  MinimalAssignment assignment;
  FoPtr substituted;         // st, with Fx witnesses hoisted to one shared
                             // existential prefix and the minimal predicates
                             // substituted underneath
};

struct CorrespondenceResult {
  LtlPtr input; // desugared
  std::vector<ConjunctReport> conjuncts;
  FoPtr correspondent; // /\_i !substituted_i, untouched
  FoPtr simplified;    // equivalent reduced form
};

// Whole pipeline at evaluation term `at` (conventionally the variable w).
// Throws NotSahlqvistError when the input is outside the class.
CorrespondenceResult correspondent(const LtlPtr& f, const TermPtr& at);

// Sound best-effort reduction: boolean identities, reflexivity and
// irreflexivity of the order, equality orientation, vacuous quantifiers,
// one-point and witness rules for exists, and contextual rewriting of atoms
// under the facts visible from enclosing conjunctions and antecedents.
FoPtr simplify_fo(const FoPtr& f);

} // namespace ltlc
