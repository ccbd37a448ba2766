// Standard translations into the first-order frame language, plus the
// second-order closure over predicate symbols.
#pragma once

#include "ltlc/formula.hpp"

namespace ltlc {

// First-order translation of an extended formula evaluated at `at`. Quantified
// variables are drawn from `supply`; an Fx reuses its own variable name (and
// reserves it). Ghat bounds resolve the evaluation point against the innermost
// enclosing G/Ghat quantified point, or against `at` at top level.
// Throws std::invalid_argument when the input is not well-scoped.
FoPtr st_ltlprime(const PrimePtr& f, const TermPtr& at, VarSupply& supply);

// Open-formula variant: translates `f` evaluated at `current` while the
// evaluation point inside Ghat bounds resolves to `anchor`. Accepts inputs
// whose path variables are bound by an enclosing context (no scope check),
// which is what a caller assembling a quantifier prefix by hand needs.
FoPtr st_ltlprime(const PrimePtr& f, const TermPtr& current, const TermPtr& anchor,
                  VarSupply& supply);

// Direct first-order translation of plain LTL at `at` (input must be
// desugared). Equivalent to translating first and then applying st_ltlprime.
FoPtr st_ltl(const LtlPtr& f, const TermPtr& at, VarSupply& supply);

// Quantifies every predicate symbol of `fo` (first-occurrence order) with the
// given quantifier.
SoFormula so_closure(const FoPtr& fo, SoQuant quant);

} // namespace ltlc
