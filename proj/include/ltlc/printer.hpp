// Deterministic pretty-printers. print_ltl emits exactly the surface syntax the
// parser accepts (minimal parentheses), so parse(print(f)) == f.
#pragma once

#include <string>

#include "ltlc/formula.hpp"

namespace ltlc {

// The evaluation point prints as "@" in LTL' debug syntax and "w" in FO output.
std::string print_term(const TermPtr& t, const std::string& eval_point_name = "w");
std::string print_ltl(const LtlPtr& f);
std::string print_ltlprime(const PrimePtr& f);
std::string print_fo(const FoPtr& f);
std::string print_so(const SoFormula& f);

} // namespace ltlc
