#include "ltlc/printer.hpp"

namespace ltlc {

std::string print_term(const TermPtr& t, const std::string& eval_point_name) {
  switch (t->kind) {
    case TermKind::EvalPoint: return eval_point_name;
    case TermKind::Var: return t->name;
    case TermKind::Succ: return "S(" + print_term(t->sub, eval_point_name) + ")";
  }
  return "?";
}

// --------------------------- LTL ---------------------------
// Precedence, loosest first: <->  ->  |  &  U  unary  atom.

namespace {

int ltl_prec(LtlKind k) {
  switch (k) {
    case LtlKind::Iff: return 1;
    case LtlKind::Implies: return 2;
    case LtlKind::Or: return 3;
    case LtlKind::And: return 4;
    case LtlKind::Until: return 5;
    case LtlKind::Not:
    case LtlKind::G:
    case LtlKind::F:
    case LtlKind::X: return 6;
    default: return 7;
  }
}

std::string ltl_str(const LtlPtr& f, int min_prec) {
  int p = ltl_prec(f->kind);
  std::string s;
  switch (f->kind) {
    case LtlKind::Atom: s = f->name; break;
    case LtlKind::True: s = "true"; break;
    case LtlKind::False: s = "false"; break;
    case LtlKind::Not: s = "!" + ltl_str(f->lhs, p); break;
    case LtlKind::G: s = "G " + ltl_str(f->lhs, p); break;
    case LtlKind::F: s = "F " + ltl_str(f->lhs, p); break;
    case LtlKind::X: s = "X " + ltl_str(f->lhs, p); break;
    case LtlKind::Until: s = ltl_str(f->lhs, p + 1) + " U " + ltl_str(f->rhs, p); break;
    case LtlKind::And: s = ltl_str(f->lhs, p) + " & " + ltl_str(f->rhs, p + 1); break;
    case LtlKind::Or: s = ltl_str(f->lhs, p) + " | " + ltl_str(f->rhs, p + 1); break;
    case LtlKind::Implies: s = ltl_str(f->lhs, p + 1) + " -> " + ltl_str(f->rhs, p); break;
    case LtlKind::Iff: s = ltl_str(f->lhs, p) + " <-> " + ltl_str(f->rhs, p + 1); break;
  }
  if (p < min_prec) return "(" + s + ")";
  return s;
}

} // namespace

std::string print_ltl(const LtlPtr& f) { return ltl_str(f, 0); }

// --------------------------- LTL' debug syntax ---------------------------

namespace {

int prime_prec(PrimeKind k) {
  switch (k) {
    case PrimeKind::Or: return 2;
    case PrimeKind::And: return 3;
    case PrimeKind::Not:
    case PrimeKind::G:
    case PrimeKind::Fx:
    case PrimeKind::Ghat:
    case PrimeKind::X: return 4;
    default: return 5;
  }
}

std::string prime_str(const PrimePtr& f, int min_prec) {
  int p = prime_prec(f->kind);
  std::string s;
  switch (f->kind) {
    case PrimeKind::Atom: s = f->name; break;
    case PrimeKind::True: s = "true"; break;
    case PrimeKind::False: s = "false"; break;
    case PrimeKind::Not: s = "!" + prime_str(f->lhs, p); break;
    case PrimeKind::G: s = "G " + prime_str(f->lhs, p); break;
    case PrimeKind::X: s = "X " + prime_str(f->lhs, p); break;
    case PrimeKind::Fx: s = "Fx[" + f->name + "] " + prime_str(f->lhs, p); break;
    case PrimeKind::Ghat:
      s = "Gh[" + print_term(f->lo, "@") + "," + print_term(f->hi, "@") + "] " +
          prime_str(f->lhs, p);
      break;
    case PrimeKind::And: s = prime_str(f->lhs, p) + " & " + prime_str(f->rhs, p + 1); break;
    case PrimeKind::Or: s = prime_str(f->lhs, p) + " | " + prime_str(f->rhs, p + 1); break;
  }
  if (p < min_prec) return "(" + s + ")";
  return s;
}

} // namespace

std::string print_ltlprime(const PrimePtr& f) { return prime_str(f, 0); }

// --------------------------- first-order ---------------------------
// Associative chains print flat; quantifier bodies are parenthesized unless the
// body is itself a quantifier, and a quantifier in operand position is always
// parenthesized.

namespace {

int fo_prec(FoKind k) {
  switch (k) {
    case FoKind::Forall:
    case FoKind::Exists: return 0;
    case FoKind::Implies: return 1;
    case FoKind::Or: return 2;
    case FoKind::And: return 3;
    case FoKind::Not: return 4;
    default: return 5;
  }
}

std::string fo_str(const FoPtr& f, int min_prec);

std::string quant_body(const FoPtr& body) {
  if (body->kind == FoKind::Forall || body->kind == FoKind::Exists) return fo_str(body, 0);
  return "(" + fo_str(body, 0) + ")";
}

void flatten(const FoPtr& f, FoKind k, std::vector<FoPtr>& out) {
  if (f->kind == k) {
    flatten(f->lhs, k, out);
    flatten(f->rhs, k, out);
  } else {
    out.push_back(f);
  }
}

std::string fo_str(const FoPtr& f, int min_prec) {
  int p = fo_prec(f->kind);
  std::string s;
  switch (f->kind) {
    case FoKind::Pred: s = f->name + "(" + print_term(f->t1) + ")"; break;
    case FoKind::Le: s = print_term(f->t1) + " <= " + print_term(f->t2); break;
    case FoKind::Lt: s = print_term(f->t1) + " < " + print_term(f->t2); break;
    case FoKind::Eq: s = print_term(f->t1) + " = " + print_term(f->t2); break;
    case FoKind::True: s = "true"; break;
    case FoKind::False: s = "false"; break;
    case FoKind::Not: {
      FoKind ck = f->lhs->kind;
      bool bare = ck == FoKind::Pred || ck == FoKind::True || ck == FoKind::False || ck == FoKind::Not;
      s = "!" + (bare ? fo_str(f->lhs, p) : "(" + fo_str(f->lhs, 0) + ")");
      break;
    }
    case FoKind::And:
    case FoKind::Or: {
      std::vector<FoPtr> parts;
      flatten(f, f->kind, parts);
      const char* op = f->kind == FoKind::And ? " & " : " | ";
      for (size_t i = 0; i < parts.size(); ++i) {
        if (i) s += op;
        s += fo_str(parts[i], p + 1);
      }
      break;
    }
    case FoKind::Implies:
      s = fo_str(f->lhs, p + 1) + " -> " + fo_str(f->rhs, p);
      break;
    case FoKind::Forall: s = "forall " + f->name + ". " + quant_body(f->lhs); break;
    case FoKind::Exists: s = "exists " + f->name + ". " + quant_body(f->lhs); break;
  }
  if (p < min_prec) return "(" + s + ")";
  return s;
}

} // namespace

std::string print_fo(const FoPtr& f) { return fo_str(f, 0); }

std::string print_so(const SoFormula& f) {
  std::string s;
  for (const auto& sym : f.prefix)
    s += (f.quant == SoQuant::Forall ? "forall " : "exists ") + sym.name + ". ";
  if (f.prefix.empty()) return print_fo(f.matrix);
  return s + quant_body(f.matrix);
}

} // namespace ltlc
