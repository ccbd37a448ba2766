// Core immutable ASTs: path terms, LTL, LTL' (with indexed F/bounded G), and
// first/second-order frame formulas. Every node is shared and never mutated
// after construction, so all operations below are pure.
#pragma once

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace ltlc {

// ---------------------------------------------------------------------------
// Path terms: the evaluation point, path variables, and successor applications.
// ---------------------------------------------------------------------------

enum class TermKind { EvalPoint, Var, Succ };

class PathTerm;
using TermPtr = std::shared_ptr<const PathTerm>;

class PathTerm {
public:
  TermKind kind;
  std::string name; // Var
  TermPtr sub;      // Succ

  static TermPtr eval_point();
  static TermPtr var(std::string name);
  static TermPtr succ(TermPtr t);
};

bool equal(const TermPtr& a, const TermPtr& b);
void collect_term_vars(const TermPtr& t, std::set<std::string>& out);
bool term_mentions_var(const TermPtr& t, const std::string& name);
// Replaces every occurrence of `from` (as a whole subterm) by `to`.
TermPtr replace_in_term(const TermPtr& t, const TermPtr& from, const TermPtr& to);
// Canonical order used for cosmetic normalization (eval point < vars < deeper
// successor chains). Returns <0, 0, >0.
int term_compare(const TermPtr& a, const TermPtr& b);

// Deterministic fresh-name source: fresh("x") yields x, x1, x2, ... skipping
// reserved names. Issued names are reserved automatically.
class VarSupply {
public:
  std::string fresh(const std::string& hint);
  void reserve(const std::string& name);
  bool taken(const std::string& name) const;

private:
  std::set<std::string> used_;
};

// ---------------------------------------------------------------------------
// LTL
// ---------------------------------------------------------------------------

enum class LtlKind { Atom, True, False, Not, And, Or, Implies, Iff, G, F, X, Until };

class LtlFormula;
using LtlPtr = std::shared_ptr<const LtlFormula>;

class LtlFormula {
public:
  LtlKind kind;
  std::string name; // Atom
  LtlPtr lhs, rhs;  // unary operators use lhs only

  static LtlPtr Atom(std::string name);
  static LtlPtr True();
  static LtlPtr False();
  static LtlPtr Not(LtlPtr a);
  static LtlPtr And(LtlPtr a, LtlPtr b);
  static LtlPtr Or(LtlPtr a, LtlPtr b);
  static LtlPtr Implies(LtlPtr a, LtlPtr b);
  static LtlPtr Iff(LtlPtr a, LtlPtr b);
  static LtlPtr G(LtlPtr a);
  static LtlPtr F(LtlPtr a);
  static LtlPtr X(LtlPtr a);
  static LtlPtr U(LtlPtr a, LtlPtr b);
};

bool equal(const LtlPtr& a, const LtlPtr& b);
std::set<std::string> atoms_of(const LtlPtr& f);
bool is_desugared(const LtlPtr& f);
// Rewrites a -> b into !a | b and a <-> b into (!a | b) & (!b | a).
LtlPtr desugar(const LtlPtr& f);

// ---------------------------------------------------------------------------
// LTL': F carries a path variable, bounded G carries two path terms.
// ---------------------------------------------------------------------------

enum class PrimeKind { Atom, True, False, Not, And, Or, G, Fx, Ghat, X };

class LtlPrimeFormula;
using PrimePtr = std::shared_ptr<const LtlPrimeFormula>;

class LtlPrimeFormula {
public:
  PrimeKind kind;
  std::string name; // Atom, or the variable bound by Fx
  TermPtr lo, hi;   // Ghat bounds
  PrimePtr lhs, rhs;

  static PrimePtr Atom(std::string name);
  static PrimePtr True();
  static PrimePtr False();
  static PrimePtr Not(PrimePtr a);
  static PrimePtr And(PrimePtr a, PrimePtr b);
  static PrimePtr Or(PrimePtr a, PrimePtr b);
  static PrimePtr G(PrimePtr a);
  static PrimePtr Fx(std::string var, PrimePtr a);
  // Throws std::invalid_argument unless lo and hi are syntactically distinct.
  static PrimePtr Ghat(TermPtr lo, TermPtr hi, PrimePtr a);
  static PrimePtr X(PrimePtr a);
};

bool equal(const PrimePtr& a, const PrimePtr& b);
std::set<std::string> atoms_of(const PrimePtr& f);
// Path variables occurring in Ghat bounds and not bound by an enclosing Fx.
std::set<std::string> free_path_vars(const PrimePtr& f);
// Checks: Ghat bound variables are in scope, Fx binders are pairwise distinct,
// Ghat bounds are syntactically distinct. Returns a reason on failure.
std::optional<std::string> well_scoped(const PrimePtr& f);
// Replaces the term `from` by `to` inside Ghat bounds. Occurrences under an Fx
// that binds a variable of `from` are left alone; throws on variable capture.
PrimePtr subst_path_term(const PrimePtr& f, const TermPtr& from, const TermPtr& to);

// ---------------------------------------------------------------------------
// First-order frame language over <=, <, =, S and one unary predicate per atom.
// ---------------------------------------------------------------------------

struct PredicateSymbol {
  std::string name;

  // Bijective with atom names: the first character is uppercased.
  static PredicateSymbol for_atom(const std::string& atom);
  std::string atom() const;

  bool operator==(const PredicateSymbol& o) const { return name == o.name; }
  bool operator<(const PredicateSymbol& o) const { return name < o.name; }
};

enum class FoKind { Pred, Le, Lt, Eq, True, False, Not, And, Or, Implies, Forall, Exists };

class FoFormula;
using FoPtr = std::shared_ptr<const FoFormula>;

class FoFormula {
public:
  FoKind kind;
  std::string name; // predicate name, or quantified variable
  TermPtr t1, t2;   // Pred uses t1; Le/Lt/Eq use both
  FoPtr lhs, rhs;

  static FoPtr Pred(PredicateSymbol sym, TermPtr t);
  static FoPtr Le(TermPtr a, TermPtr b);
  static FoPtr Lt(TermPtr a, TermPtr b);
  static FoPtr Eq(TermPtr a, TermPtr b);
  static FoPtr True();
  static FoPtr False();
  static FoPtr Not(FoPtr a);
  static FoPtr And(FoPtr a, FoPtr b);
  static FoPtr Or(FoPtr a, FoPtr b);
  static FoPtr Implies(FoPtr a, FoPtr b);
  static FoPtr Forall(std::string var, FoPtr body);
  static FoPtr Exists(std::string var, FoPtr body);
};

bool equal(const FoPtr& a, const FoPtr& b);
std::set<std::string> free_term_vars(const FoPtr& f);
bool mentions_eval_point(const FoPtr& f);
// Predicate symbols in first-occurrence (pre-order, left to right) order.
std::vector<PredicateSymbol> predicates_of(const FoPtr& f);
// Replaces the term `from` by `to` in all atomic formulas; stops below a
// quantifier that binds a variable of `from`; throws on variable capture.
FoPtr subst_path_term(const FoPtr& f, const TermPtr& from, const TermPtr& to);
// Capture-avoiding substitution of a term for a free variable; quantifiers in
// `f` that would capture variables of `t` are alpha-renamed.
FoPtr subst_var(const FoPtr& f, const std::string& var, const TermPtr& t);

// A unary predicate definition: lambda param. body.
struct PredicateDef {
  std::string param;
  FoPtr body;
};

// Replaces every application sym(t) by def.body[param := t]. Free variables of
// the body other than the parameter stay as written, so applications sitting
// inside the quantifier that introduced those variables bind them on purpose.
FoPtr beta_reduce_predicate(const FoPtr& f, const PredicateSymbol& sym,
                            const PredicateDef& def);

enum class SoQuant { Forall, Exists };

// Second-order closure: a homogeneous predicate-quantifier prefix over a
// first-order matrix.
struct SoFormula {
  SoQuant quant = SoQuant::Forall;
  std::vector<PredicateSymbol> prefix;
  FoPtr matrix;
};

} // namespace ltlc
