#include "ltlc/formula.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace ltlc {

// ---------------------------------------------------------------------------
// Path terms
// ---------------------------------------------------------------------------

TermPtr PathTerm::eval_point() {
  static const TermPtr w = std::make_shared<PathTerm>(PathTerm{TermKind::EvalPoint, "", nullptr});
  return w;
}

TermPtr PathTerm::var(std::string name) {
  return std::make_shared<PathTerm>(PathTerm{TermKind::Var, std::move(name), nullptr});
}

TermPtr PathTerm::succ(TermPtr t) {
  return std::make_shared<PathTerm>(PathTerm{TermKind::Succ, "", std::move(t)});
}

bool equal(const TermPtr& a, const TermPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case TermKind::EvalPoint: return true;
    case TermKind::Var: return a->name == b->name;
    case TermKind::Succ: return equal(a->sub, b->sub);
  }
  return false;
}

void collect_term_vars(const TermPtr& t, std::set<std::string>& out) {
  if (!t) return;
  if (t->kind == TermKind::Var) out.insert(t->name);
  if (t->kind == TermKind::Succ) collect_term_vars(t->sub, out);
}

bool term_mentions_var(const TermPtr& t, const std::string& name) {
  if (!t) return false;
  if (t->kind == TermKind::Var) return t->name == name;
  if (t->kind == TermKind::Succ) return term_mentions_var(t->sub, name);
  return false;
}

TermPtr replace_in_term(const TermPtr& t, const TermPtr& from, const TermPtr& to) {
  if (equal(t, from)) return to;
  if (t->kind == TermKind::Succ) {
    TermPtr inner = replace_in_term(t->sub, from, to);
    if (inner == t->sub) return t;
    return PathTerm::succ(inner);
  }
  return t;
}

static int succ_depth(const TermPtr& t) {
  int d = 0;
  const PathTerm* p = t.get();
  while (p->kind == TermKind::Succ) {
    ++d;
    p = p->sub.get();
  }
  return d;
}

int term_compare(const TermPtr& a, const TermPtr& b) {
  int da = succ_depth(a), db = succ_depth(b);
  if (da != db) return da < db ? -1 : 1;
  if (a->kind == TermKind::Succ) return term_compare(a->sub, b->sub);
  if (a->kind != b->kind) return a->kind == TermKind::EvalPoint ? -1 : 1;
  if (a->kind == TermKind::Var) return a->name.compare(b->name);
  return 0;
}

// ---------------------------------------------------------------------------
// VarSupply
// ---------------------------------------------------------------------------

std::string VarSupply::fresh(const std::string& hint) {
  if (!used_.count(hint)) {
    used_.insert(hint);
    return hint;
  }
  for (int i = 1;; ++i) {
    std::string candidate = hint + std::to_string(i);
    if (!used_.count(candidate)) {
      used_.insert(candidate);
      return candidate;
    }
  }
}

void VarSupply::reserve(const std::string& name) { used_.insert(name); }

bool VarSupply::taken(const std::string& name) const { return used_.count(name) > 0; }

// ---------------------------------------------------------------------------
// LTL
// ---------------------------------------------------------------------------

static LtlPtr mk_ltl(LtlKind k, std::string name, LtlPtr a, LtlPtr b) {
  return std::make_shared<LtlFormula>(LtlFormula{k, std::move(name), std::move(a), std::move(b)});
}

LtlPtr LtlFormula::Atom(std::string name) { return mk_ltl(LtlKind::Atom, std::move(name), nullptr, nullptr); }
LtlPtr LtlFormula::True() { return mk_ltl(LtlKind::True, "", nullptr, nullptr); }
LtlPtr LtlFormula::False() { return mk_ltl(LtlKind::False, "", nullptr, nullptr); }
LtlPtr LtlFormula::Not(LtlPtr a) { return mk_ltl(LtlKind::Not, "", std::move(a), nullptr); }
LtlPtr LtlFormula::And(LtlPtr a, LtlPtr b) { return mk_ltl(LtlKind::And, "", std::move(a), std::move(b)); }
LtlPtr LtlFormula::Or(LtlPtr a, LtlPtr b) { return mk_ltl(LtlKind::Or, "", std::move(a), std::move(b)); }
LtlPtr LtlFormula::Implies(LtlPtr a, LtlPtr b) { return mk_ltl(LtlKind::Implies, "", std::move(a), std::move(b)); }
LtlPtr LtlFormula::Iff(LtlPtr a, LtlPtr b) { return mk_ltl(LtlKind::Iff, "", std::move(a), std::move(b)); }
LtlPtr LtlFormula::G(LtlPtr a) { return mk_ltl(LtlKind::G, "", std::move(a), nullptr); }
LtlPtr LtlFormula::F(LtlPtr a) { return mk_ltl(LtlKind::F, "", std::move(a), nullptr); }
LtlPtr LtlFormula::X(LtlPtr a) { return mk_ltl(LtlKind::X, "", std::move(a), nullptr); }
LtlPtr LtlFormula::U(LtlPtr a, LtlPtr b) { return mk_ltl(LtlKind::Until, "", std::move(a), std::move(b)); }

bool equal(const LtlPtr& a, const LtlPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->kind == b->kind && a->name == b->name && equal(a->lhs, b->lhs) && equal(a->rhs, b->rhs);
}

static void collect_atoms(const LtlPtr& f, std::set<std::string>& out) {
  if (!f) return;
  if (f->kind == LtlKind::Atom) out.insert(f->name);
  collect_atoms(f->lhs, out);
  collect_atoms(f->rhs, out);
}

std::set<std::string> atoms_of(const LtlPtr& f) {
  std::set<std::string> out;
  collect_atoms(f, out);
  return out;
}

bool is_desugared(const LtlPtr& f) {
  if (!f) return true;
  if (f->kind == LtlKind::Implies || f->kind == LtlKind::Iff) return false;
  return is_desugared(f->lhs) && is_desugared(f->rhs);
}

LtlPtr desugar(const LtlPtr& f) {
  if (!f) return f;
  LtlPtr a = desugar(f->lhs);
  LtlPtr b = desugar(f->rhs);
  switch (f->kind) {
    case LtlKind::Implies:
      return LtlFormula::Or(LtlFormula::Not(a), b);
    case LtlKind::Iff:
      return LtlFormula::And(LtlFormula::Or(LtlFormula::Not(a), b),
                             LtlFormula::Or(LtlFormula::Not(b), a));
    default:
      if (a == f->lhs && b == f->rhs) return f;
      return mk_ltl(f->kind, f->name, a, b);
  }
}

// ---------------------------------------------------------------------------
// LTL'
// ---------------------------------------------------------------------------

static PrimePtr mk_prime(PrimeKind k, std::string name, TermPtr lo, TermPtr hi, PrimePtr a,
                         PrimePtr b) {
  return std::make_shared<LtlPrimeFormula>(
      LtlPrimeFormula{k, std::move(name), std::move(lo), std::move(hi), std::move(a), std::move(b)});
}

PrimePtr LtlPrimeFormula::Atom(std::string name) {
  return mk_prime(PrimeKind::Atom, std::move(name), nullptr, nullptr, nullptr, nullptr);
}
PrimePtr LtlPrimeFormula::True() { return mk_prime(PrimeKind::True, "", nullptr, nullptr, nullptr, nullptr); }
PrimePtr LtlPrimeFormula::False() { return mk_prime(PrimeKind::False, "", nullptr, nullptr, nullptr, nullptr); }
PrimePtr LtlPrimeFormula::Not(PrimePtr a) {
  return mk_prime(PrimeKind::Not, "", nullptr, nullptr, std::move(a), nullptr);
}
PrimePtr LtlPrimeFormula::And(PrimePtr a, PrimePtr b) {
  return mk_prime(PrimeKind::And, "", nullptr, nullptr, std::move(a), std::move(b));
}
PrimePtr LtlPrimeFormula::Or(PrimePtr a, PrimePtr b) {
  return mk_prime(PrimeKind::Or, "", nullptr, nullptr, std::move(a), std::move(b));
}
PrimePtr LtlPrimeFormula::G(PrimePtr a) {
  return mk_prime(PrimeKind::G, "", nullptr, nullptr, std::move(a), nullptr);
}
PrimePtr LtlPrimeFormula::Fx(std::string var, PrimePtr a) {
  return mk_prime(PrimeKind::Fx, std::move(var), nullptr, nullptr, std::move(a), nullptr);
}
PrimePtr LtlPrimeFormula::Ghat(TermPtr lo, TermPtr hi, PrimePtr a) {
  if (equal(lo, hi)) throw std::invalid_argument("Ghat bounds must be syntactically distinct");
  return mk_prime(PrimeKind::Ghat, "", std::move(lo), std::move(hi), std::move(a), nullptr);
}
PrimePtr LtlPrimeFormula::X(PrimePtr a) {
  return mk_prime(PrimeKind::X, "", nullptr, nullptr, std::move(a), nullptr);
}

bool equal(const PrimePtr& a, const PrimePtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->kind == b->kind && a->name == b->name && equal(a->lo, b->lo) && equal(a->hi, b->hi) &&
         equal(a->lhs, b->lhs) && equal(a->rhs, b->rhs);
}

static void collect_atoms(const PrimePtr& f, std::set<std::string>& out) {
  if (!f) return;
  if (f->kind == PrimeKind::Atom) out.insert(f->name);
  collect_atoms(f->lhs, out);
  collect_atoms(f->rhs, out);
}

std::set<std::string> atoms_of(const PrimePtr& f) {
  std::set<std::string> out;
  collect_atoms(f, out);
  return out;
}

static void collect_free_path_vars(const PrimePtr& f, std::set<std::string> bound,
                                   std::set<std::string>& out) {
  if (!f) return;
  if (f->kind == PrimeKind::Ghat) {
    std::set<std::string> vars;
    collect_term_vars(f->lo, vars);
    collect_term_vars(f->hi, vars);
    for (const auto& v : vars)
      if (!bound.count(v)) out.insert(v);
  }
  if (f->kind == PrimeKind::Fx) bound.insert(f->name);
  collect_free_path_vars(f->lhs, bound, out);
  collect_free_path_vars(f->rhs, bound, out);
}

std::set<std::string> free_path_vars(const PrimePtr& f) {
  std::set<std::string> out;
  collect_free_path_vars(f, {}, out);
  return out;
}

static std::optional<std::string> check_scopes(const PrimePtr& f, std::set<std::string>& scope,
                                               std::set<std::string>& all_binders) {
  if (!f) return std::nullopt;
  if (f->kind == PrimeKind::Ghat) {
    if (equal(f->lo, f->hi)) return "Ghat bounds coincide";
    std::set<std::string> vars;
    collect_term_vars(f->lo, vars);
    collect_term_vars(f->hi, vars);
    for (const auto& v : vars)
      if (!scope.count(v)) return "unbound path variable '" + v + "' in Ghat bound";
  }
  if (f->kind == PrimeKind::Fx) {
    if (all_binders.count(f->name)) return "duplicate Fx binder '" + f->name + "'";
    all_binders.insert(f->name);
    scope.insert(f->name);
    auto r = check_scopes(f->lhs, scope, all_binders);
    scope.erase(f->name);
    return r;
  }
  if (auto r = check_scopes(f->lhs, scope, all_binders)) return r;
  return check_scopes(f->rhs, scope, all_binders);
}

std::optional<std::string> well_scoped(const PrimePtr& f) {
  std::set<std::string> scope, binders;
  return check_scopes(f, scope, binders);
}

static bool prime_has_term(const PrimePtr& f, const TermPtr& t) {
  if (!f) return false;
  auto in_term = [&](const TermPtr& h) {
    for (TermPtr cur = h; cur; cur = cur->kind == TermKind::Succ ? cur->sub : nullptr)
      if (equal(cur, t)) return true;
    return false;
  };
  if (f->kind == PrimeKind::Ghat && (in_term(f->lo) || in_term(f->hi))) return true;
  return prime_has_term(f->lhs, t) || prime_has_term(f->rhs, t);
}

PrimePtr subst_path_term(const PrimePtr& f, const TermPtr& from, const TermPtr& to) {
  if (!f) return f;
  if (f->kind == PrimeKind::Fx) {
    if (term_mentions_var(from, f->name)) return f; // occurrences below are bound anew
    if (term_mentions_var(to, f->name) && prime_has_term(f->lhs, from))
      throw std::runtime_error("variable capture: '" + f->name + "' in substituted term");
    PrimePtr body = subst_path_term(f->lhs, from, to);
    if (body == f->lhs) return f;
    return LtlPrimeFormula::Fx(f->name, body);
  }
  TermPtr lo = f->lo ? replace_in_term(f->lo, from, to) : f->lo;
  TermPtr hi = f->hi ? replace_in_term(f->hi, from, to) : f->hi;
  PrimePtr a = subst_path_term(f->lhs, from, to);
  PrimePtr b = subst_path_term(f->rhs, from, to);
  if (lo == f->lo && hi == f->hi && a == f->lhs && b == f->rhs) return f;
  if (f->kind == PrimeKind::Ghat) return LtlPrimeFormula::Ghat(lo, hi, a);
  return mk_prime(f->kind, f->name, lo, hi, a, b);
}

// ---------------------------------------------------------------------------
// First-order formulas
// ---------------------------------------------------------------------------

PredicateSymbol PredicateSymbol::for_atom(const std::string& atom) {
  std::string n = atom;
  if (!n.empty()) n[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(n[0])));
  return PredicateSymbol{n};
}

std::string PredicateSymbol::atom() const {
  std::string n = name;
  if (!n.empty()) n[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(n[0])));
  return n;
}

static FoPtr mk_fo(FoKind k, std::string name, TermPtr t1, TermPtr t2, FoPtr a, FoPtr b) {
  return std::make_shared<FoFormula>(
      FoFormula{k, std::move(name), std::move(t1), std::move(t2), std::move(a), std::move(b)});
}

FoPtr FoFormula::Pred(PredicateSymbol sym, TermPtr t) {
  return mk_fo(FoKind::Pred, std::move(sym.name), std::move(t), nullptr, nullptr, nullptr);
}
FoPtr FoFormula::Le(TermPtr a, TermPtr b) {
  return mk_fo(FoKind::Le, "", std::move(a), std::move(b), nullptr, nullptr);
}
FoPtr FoFormula::Lt(TermPtr a, TermPtr b) {
  return mk_fo(FoKind::Lt, "", std::move(a), std::move(b), nullptr, nullptr);
}
FoPtr FoFormula::Eq(TermPtr a, TermPtr b) {
  return mk_fo(FoKind::Eq, "", std::move(a), std::move(b), nullptr, nullptr);
}
FoPtr FoFormula::True() { return mk_fo(FoKind::True, "", nullptr, nullptr, nullptr, nullptr); }
FoPtr FoFormula::False() { return mk_fo(FoKind::False, "", nullptr, nullptr, nullptr, nullptr); }
FoPtr FoFormula::Not(FoPtr a) { return mk_fo(FoKind::Not, "", nullptr, nullptr, std::move(a), nullptr); }
FoPtr FoFormula::And(FoPtr a, FoPtr b) {
  return mk_fo(FoKind::And, "", nullptr, nullptr, std::move(a), std::move(b));
}
FoPtr FoFormula::Or(FoPtr a, FoPtr b) {
  return mk_fo(FoKind::Or, "", nullptr, nullptr, std::move(a), std::move(b));
}
FoPtr FoFormula::Implies(FoPtr a, FoPtr b) {
  return mk_fo(FoKind::Implies, "", nullptr, nullptr, std::move(a), std::move(b));
}
FoPtr FoFormula::Forall(std::string var, FoPtr body) {
  return mk_fo(FoKind::Forall, std::move(var), nullptr, nullptr, std::move(body), nullptr);
}
FoPtr FoFormula::Exists(std::string var, FoPtr body) {
  return mk_fo(FoKind::Exists, std::move(var), nullptr, nullptr, std::move(body), nullptr);
}

bool equal(const FoPtr& a, const FoPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->kind == b->kind && a->name == b->name && equal(a->t1, b->t1) && equal(a->t2, b->t2) &&
         equal(a->lhs, b->lhs) && equal(a->rhs, b->rhs);
}

static void collect_free(const FoPtr& f, std::set<std::string> bound, std::set<std::string>& out) {
  if (!f) return;
  auto add = [&](const TermPtr& t) {
    std::set<std::string> vars;
    collect_term_vars(t, vars);
    for (const auto& v : vars)
      if (!bound.count(v)) out.insert(v);
  };
  if (f->t1) add(f->t1);
  if (f->t2) add(f->t2);
  if (f->kind == FoKind::Forall || f->kind == FoKind::Exists) bound.insert(f->name);
  collect_free(f->lhs, bound, out);
  collect_free(f->rhs, bound, out);
}

std::set<std::string> free_term_vars(const FoPtr& f) {
  std::set<std::string> out;
  collect_free(f, {}, out);
  return out;
}

static bool term_has_eval_point(const TermPtr& t) {
  if (!t) return false;
  if (t->kind == TermKind::EvalPoint) return true;
  return t->kind == TermKind::Succ && term_has_eval_point(t->sub);
}

bool mentions_eval_point(const FoPtr& f) {
  if (!f) return false;
  if (term_has_eval_point(f->t1) || term_has_eval_point(f->t2)) return true;
  return mentions_eval_point(f->lhs) || mentions_eval_point(f->rhs);
}

static void collect_preds(const FoPtr& f, std::vector<PredicateSymbol>& out) {
  if (!f) return;
  if (f->kind == FoKind::Pred) {
    PredicateSymbol s{f->name};
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
  }
  collect_preds(f->lhs, out);
  collect_preds(f->rhs, out);
}

std::vector<PredicateSymbol> predicates_of(const FoPtr& f) {
  std::vector<PredicateSymbol> out;
  collect_preds(f, out);
  return out;
}

static bool fo_has_term(const FoPtr& f, const TermPtr& t) {
  if (!f) return false;
  auto in_term = [&](const TermPtr& h) {
    for (TermPtr cur = h; cur; cur = cur->kind == TermKind::Succ ? cur->sub : nullptr)
      if (equal(cur, t)) return true;
    return false;
  };
  if (in_term(f->t1) || in_term(f->t2)) return true;
  return fo_has_term(f->lhs, t) || fo_has_term(f->rhs, t);
}

FoPtr subst_path_term(const FoPtr& f, const TermPtr& from, const TermPtr& to) {
  if (!f) return f;
  if (f->kind == FoKind::Forall || f->kind == FoKind::Exists) {
    if (term_mentions_var(from, f->name)) return f;
    if (term_mentions_var(to, f->name) && fo_has_term(f->lhs, from))
      throw std::runtime_error("variable capture: '" + f->name + "' in substituted term");
    FoPtr body = subst_path_term(f->lhs, from, to);
    if (body == f->lhs) return f;
    return mk_fo(f->kind, f->name, nullptr, nullptr, body, nullptr);
  }
  TermPtr t1 = f->t1 ? replace_in_term(f->t1, from, to) : f->t1;
  TermPtr t2 = f->t2 ? replace_in_term(f->t2, from, to) : f->t2;
  FoPtr a = subst_path_term(f->lhs, from, to);
  FoPtr b = subst_path_term(f->rhs, from, to);
  if (t1 == f->t1 && t2 == f->t2 && a == f->lhs && b == f->rhs) return f;
  return mk_fo(f->kind, f->name, t1, t2, a, b);
}

static void collect_all_names(const FoPtr& f, std::set<std::string>& out) {
  if (!f) return;
  if (f->kind == FoKind::Forall || f->kind == FoKind::Exists) out.insert(f->name);
  std::set<std::string> vars;
  if (f->t1) collect_term_vars(f->t1, vars);
  if (f->t2) collect_term_vars(f->t2, vars);
  out.insert(vars.begin(), vars.end());
  collect_all_names(f->lhs, out);
  collect_all_names(f->rhs, out);
}

static FoPtr rename_binder(const FoPtr& quant, const std::string& fresh) {
  FoPtr body = subst_path_term(quant->lhs, PathTerm::var(quant->name), PathTerm::var(fresh));
  return mk_fo(quant->kind, fresh, nullptr, nullptr, body, nullptr);
}

FoPtr subst_var(const FoPtr& f, const std::string& var, const TermPtr& t) {
  if (!f) return f;
  if (f->kind == FoKind::Forall || f->kind == FoKind::Exists) {
    if (f->name == var) return f; // shadowed
    if (term_mentions_var(t, f->name) && fo_has_term(f->lhs, PathTerm::var(var))) {
      std::set<std::string> names;
      collect_all_names(f->lhs, names);
      collect_term_vars(t, names);
      names.insert(var);
      VarSupply supply;
      for (const auto& n : names) supply.reserve(n);
      FoPtr renamed = rename_binder(f, supply.fresh(f->name));
      return subst_var(renamed, var, t);
    }
    FoPtr body = subst_var(f->lhs, var, t);
    if (body == f->lhs) return f;
    return mk_fo(f->kind, f->name, nullptr, nullptr, body, nullptr);
  }
  TermPtr from = PathTerm::var(var);
  TermPtr t1 = f->t1 ? replace_in_term(f->t1, from, t) : f->t1;
  TermPtr t2 = f->t2 ? replace_in_term(f->t2, from, t) : f->t2;
  FoPtr a = subst_var(f->lhs, var, t);
  FoPtr b = subst_var(f->rhs, var, t);
  if (t1 == f->t1 && t2 == f->t2 && a == f->lhs && b == f->rhs) return f;
  return mk_fo(f->kind, f->name, t1, t2, a, b);
}

static FoPtr beta_walk(const FoPtr& f, const PredicateSymbol& sym, const PredicateDef& def) {
  if (!f) return f;
  if (f->kind == FoKind::Pred && f->name == sym.name) return subst_var(def.body, def.param, f->t1);
  FoPtr a = beta_walk(f->lhs, sym, def);
  FoPtr b = beta_walk(f->rhs, sym, def);
  if (a == f->lhs && b == f->rhs) return f;
  return mk_fo(f->kind, f->name, f->t1, f->t2, a, b);
}

FoPtr beta_reduce_predicate(const FoPtr& f, const PredicateSymbol& sym, const PredicateDef& def) {
  return beta_walk(f, sym, def);
}

} // namespace ltlc
