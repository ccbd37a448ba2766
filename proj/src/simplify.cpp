// Sound reduction of first-order frame formulas. The order on lasso paths is a
// preorder: distinct states on one cycle are mutual strict suffixes, so rules
// like antisymmetry or "v < x contradicts x <= v" are wrong here and are
// deliberately absent. Everything below preserves truth on every path
// structure, which a property test checks against the brute-force evaluator.
#include <algorithm>
#include <utility>
#include <vector>

#include "ltlc/correspondence.hpp"

namespace ltlc {

namespace {

// t == S^k(base) for some k >= 0.
bool succ_chain_from(const TermPtr& t, const TermPtr& base) {
  TermPtr cur = t;
  while (true) {
    if (equal(cur, base)) return true;
    if (cur->kind != TermKind::Succ) return false;
    cur = cur->sub;
  }
}

bool literal_mentions(const FoPtr& lit, const std::string& var) {
  const FoPtr& atom = lit->kind == FoKind::Not ? lit->lhs : lit;
  return term_mentions_var(atom->t1, var) || term_mentions_var(atom->t2, var);
}

// Ground facts harvested from conjunction/antecedent context, closed under:
// equality merging, Le reflexivity and transitivity, the successor axiom
// t <= S^k(t), Lt/Eq giving Le, and Lt giving inequality. Lt is not chained
// through Le (unsound on a preorder).
class Facts {
public:
  explicit Facts(const std::vector<FoPtr>& hyps) {
    for (const FoPtr& h : hyps) {
      const FoPtr& atom = h->kind == FoKind::Not ? h->lhs : h;
      size_t a = index_of(atom->t1);
      size_t b = index_of(atom->t2);
      if (h->kind == FoKind::Not)
        neq_.emplace_back(a, b);
      else if (h->kind == FoKind::Le)
        le_.emplace_back(a, b);
      else if (h->kind == FoKind::Lt)
        lt_.emplace_back(a, b);
      else
        eq_.emplace_back(a, b);
    }
    close();
  }

  bool contradictory() const { return contradictory_; }

  bool entails_le(const TermPtr& s, const TermPtr& t) const {
    if (succ_chain_from(t, s)) return true;
    auto a = find(s), b = find(t);
    return a && b && le_mat_[root_[*a]][root_[*b]];
  }
  bool entails_lt(const TermPtr& s, const TermPtr& t) const {
    auto a = find(s), b = find(t);
    if (!a || !b) return false;
    return lt_mat_[root_[*a]][root_[*b]] ||
           (le_mat_[root_[*a]][root_[*b]] && neq_mat_[root_[*a]][root_[*b]]);
  }
  bool entails_eq(const TermPtr& s, const TermPtr& t) const {
    if (equal(s, t)) return true;
    auto a = find(s), b = find(t);
    return a && b && root_[*a] == root_[*b];
  }
  bool entails_neq(const TermPtr& s, const TermPtr& t) const {
    auto a = find(s), b = find(t);
    if (!a || !b) return false;
    return neq_mat_[root_[*a]][root_[*b]];
  }

private:
  size_t index_of(const TermPtr& t) {
    for (size_t i = 0; i < terms_.size(); ++i)
      if (equal(terms_[i], t)) return i;
    terms_.push_back(t);
    return terms_.size() - 1;
  }
  std::optional<size_t> find(const TermPtr& t) const {
    for (size_t i = 0; i < terms_.size(); ++i)
      if (equal(terms_[i], t)) return i;
    return std::nullopt;
  }

  void close() {
    size_t n = terms_.size();
    root_.resize(n);
    for (size_t i = 0; i < n; ++i) root_[i] = i;
    // Union-find driven purely by asserted equalities.
    for (auto [a, b] : eq_) {
      size_t ra = rep(a), rb = rep(b);
      if (ra != rb) root_[ra] = rb;
    }
    for (size_t i = 0; i < n; ++i) root_[i] = rep(i);

    le_mat_.assign(n, std::vector<char>(n, 0));
    lt_mat_.assign(n, std::vector<char>(n, 0));
    neq_mat_.assign(n, std::vector<char>(n, 0));
    for (size_t i = 0; i < n; ++i) le_mat_[root_[i]][root_[i]] = 1;
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j)
        if (succ_chain_from(terms_[j], terms_[i])) le_mat_[root_[i]][root_[j]] = 1;
    for (auto [a, b] : le_) le_mat_[root_[a]][root_[b]] = 1;
    for (auto [a, b] : lt_) {
      lt_mat_[root_[a]][root_[b]] = 1;
      le_mat_[root_[a]][root_[b]] = 1;
      neq_mat_[root_[a]][root_[b]] = neq_mat_[root_[b]][root_[a]] = 1;
    }
    for (auto [a, b] : neq_) neq_mat_[root_[a]][root_[b]] = neq_mat_[root_[b]][root_[a]] = 1;
    for (size_t k = 0; k < n; ++k)
      for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
          if (le_mat_[i][k] && le_mat_[k][j]) le_mat_[i][j] = 1;
    for (size_t i = 0; i < n; ++i)
      if (lt_mat_[i][i] || neq_mat_[i][i]) contradictory_ = true;
  }

  size_t rep(size_t i) {
    while (root_[i] != i) i = root_[i];
    return i;
  }

  std::vector<TermPtr> terms_;
  std::vector<size_t> root_;
  std::vector<std::pair<size_t, size_t>> le_, lt_, eq_, neq_;
  std::vector<std::vector<char>> le_mat_, lt_mat_, neq_mat_;
  bool contradictory_ = false;
};

void collect_literals(const FoPtr& f, std::vector<FoPtr>& out) {
  switch (f->kind) {
    case FoKind::And:
      collect_literals(f->lhs, out);
      collect_literals(f->rhs, out);
      break;
    case FoKind::Le:
    case FoKind::Lt:
    case FoKind::Eq:
      out.push_back(f);
      break;
    case FoKind::Not:
      if (f->lhs->kind == FoKind::Eq) out.push_back(f);
      break;
    default:
      break;
  }
}

std::vector<FoPtr> without_var(const std::vector<FoPtr>& hyps, const std::string& var) {
  std::vector<FoPtr> out;
  for (const FoPtr& h : hyps)
    if (!literal_mentions(h, var)) out.push_back(h);
  return out;
}

void flatten_and(const FoPtr& f, std::vector<FoPtr>& out) {
  if (f->kind == FoKind::And) {
    flatten_and(f->lhs, out);
    flatten_and(f->rhs, out);
  } else {
    out.push_back(f);
  }
}

void flatten_or(const FoPtr& f, std::vector<FoPtr>& out) {
  if (f->kind == FoKind::Or) {
    flatten_or(f->lhs, out);
    flatten_or(f->rhs, out);
  } else {
    out.push_back(f);
  }
}

FoPtr and_fold(const std::vector<FoPtr>& parts) {
  FoPtr acc;
  for (const FoPtr& p : parts) acc = acc ? FoFormula::And(acc, p) : p;
  return acc ? acc : FoFormula::True();
}

FoPtr or_fold(const std::vector<FoPtr>& parts) {
  FoPtr acc;
  for (const FoPtr& p : parts) acc = acc ? FoFormula::Or(acc, p) : p;
  return acc ? acc : FoFormula::False();
}

FoPtr not_fold(const FoPtr& a) {
  if (a->kind == FoKind::True) return FoFormula::False();
  if (a->kind == FoKind::False) return FoFormula::True();
  if (a->kind == FoKind::Not) return a->lhs;
  return FoFormula::Not(a);
}

FoPtr simp(const FoPtr& f, const std::vector<FoPtr>& hyps);

// Conjunct list simplified left to right, each under the facts carried by the
// already-simplified ones before it and the untouched ones after it.
FoPtr simp_conjunction(std::vector<FoPtr> parts, const std::vector<FoPtr>& hyps) {
  std::vector<FoPtr> kept;
  for (size_t i = 0; i < parts.size(); ++i) {
    std::vector<FoPtr> context = hyps;
    for (size_t j = 0; j < parts.size(); ++j) {
      if (j == i) continue;
      collect_literals(j < i ? kept[j] : parts[j], context);
    }
    FoPtr part = simp(parts[i], context);
    kept.push_back(part);
    if (part->kind == FoKind::False) return FoFormula::False();
  }
  std::vector<FoPtr> survivors;
  for (const FoPtr& part : kept) {
    if (part->kind == FoKind::True) continue;
    bool duplicate = false;
    for (const FoPtr& seen : survivors)
      if (equal(seen, part)) duplicate = true;
    if (!duplicate) survivors.push_back(part);
  }
  return and_fold(survivors);
}

FoPtr simp(const FoPtr& f, const std::vector<FoPtr>& hyps) {
  switch (f->kind) {
    case FoKind::True:
    case FoKind::False:
    case FoKind::Pred:
      return f;
    case FoKind::Le: {
      if (succ_chain_from(f->t2, f->t1)) return FoFormula::True();
      Facts facts(hyps);
      if (facts.entails_le(f->t1, f->t2)) return FoFormula::True();
      return f;
    }
    case FoKind::Lt: {
      if (equal(f->t1, f->t2)) return FoFormula::False();
      Facts facts(hyps);
      if (facts.entails_eq(f->t1, f->t2)) return FoFormula::False();
      if (facts.entails_lt(f->t1, f->t2)) return FoFormula::True();
      return f;
    }
    case FoKind::Eq: {
      if (equal(f->t1, f->t2)) return FoFormula::True();
      Facts facts(hyps);
      if (facts.entails_eq(f->t1, f->t2)) return FoFormula::True();
      if (facts.entails_neq(f->t1, f->t2)) return FoFormula::False();
      if (term_compare(f->t1, f->t2) > 0) return FoFormula::Eq(f->t2, f->t1);
      return f;
    }
    case FoKind::Not:
      return not_fold(simp(f->lhs, hyps));
    case FoKind::And: {
      std::vector<FoPtr> parts;
      flatten_and(f, parts);
      return simp_conjunction(std::move(parts), hyps);
    }
    case FoKind::Or: {
      std::vector<FoPtr> parts;
      flatten_or(f, parts);
      std::vector<FoPtr> survivors;
      for (const FoPtr& part : parts) {
        FoPtr p = simp(part, hyps);
        if (p->kind == FoKind::True) return FoFormula::True();
        if (p->kind == FoKind::False) continue;
        bool duplicate = false;
        for (const FoPtr& seen : survivors)
          if (equal(seen, p)) duplicate = true;
        if (!duplicate) survivors.push_back(p);
      }
      return or_fold(survivors);
    }
    case FoKind::Implies: {
      FoPtr ant = simp(f->lhs, hyps);
      if (ant->kind == FoKind::True) return simp(f->rhs, hyps);
      if (ant->kind == FoKind::False) return FoFormula::True();
      std::vector<FoPtr> extended = hyps;
      collect_literals(ant, extended);
      if (Facts(extended).contradictory()) return FoFormula::True();
      FoPtr cons = simp(f->rhs, extended);
      if (cons->kind == FoKind::True) return FoFormula::True();
      if (equal(ant, cons)) return FoFormula::True();
      if (cons->kind == FoKind::False) return not_fold(ant);
      return FoFormula::Implies(ant, cons);
    }
    case FoKind::Forall: {
      FoPtr body = simp(f->lhs, without_var(hyps, f->name));
      if (!free_term_vars(body).count(f->name)) return body;
      return FoFormula::Forall(f->name, body);
    }
    case FoKind::Exists: {
      FoPtr body = simp(f->lhs, without_var(hyps, f->name));
      if (!free_term_vars(body).count(f->name)) return body;
      std::vector<FoPtr> parts;
      flatten_and(body, parts);
      // One-point rule: a conjunct pins the variable to a term.
      for (size_t i = 0; i < parts.size(); ++i) {
        const FoPtr& part = parts[i];
        if (part->kind != FoKind::Eq) continue;
        TermPtr pinned;
        if (part->t1->kind == TermKind::Var && part->t1->name == f->name &&
            !term_mentions_var(part->t2, f->name))
          pinned = part->t2;
        else if (part->t2->kind == TermKind::Var && part->t2->name == f->name &&
                 !term_mentions_var(part->t1, f->name))
          pinned = part->t1;
        if (!pinned) continue;
        std::vector<FoPtr> rest;
        for (size_t j = 0; j < parts.size(); ++j)
          if (j != i) rest.push_back(subst_var(parts[j], f->name, pinned));
        return simp(and_fold(rest), hyps);
      }
      // Witness rule: a lower bound makes a candidate whose substitution
      // collapses the body to true.
      for (const FoPtr& part : parts) {
        if (part->kind != FoKind::Le) continue;
        if (part->t2->kind != TermKind::Var || part->t2->name != f->name) continue;
        if (term_mentions_var(part->t1, f->name)) continue;
        std::vector<FoPtr> trial;
        for (const FoPtr& p : parts) trial.push_back(subst_var(p, f->name, part->t1));
        if (simp(and_fold(trial), hyps)->kind == FoKind::True) return FoFormula::True();
      }
      return FoFormula::Exists(f->name, body);
    }
  }
  return f;
}

} // namespace

FoPtr simplify_fo(const FoPtr& f) {
  FoPtr cur = f;
  for (int pass = 0; pass < 12; ++pass) {
    FoPtr next = simp(cur, {});
    if (equal(next, cur)) break;
    cur = next;
  }
  return cur;
}

} // namespace ltlc
