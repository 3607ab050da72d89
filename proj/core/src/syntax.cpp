#include "qhc/syntax.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <optional>

namespace qhc {

void Signature::declare(const std::string& name, unsigned arity, PredSort psort) {
  if (preds_.count(name))
    throw std::runtime_error("duplicate predicate declaration: " + name);
  preds_[name] = PredDecl{name, arity, psort};
}

const PredDecl& Signature::lookup(const std::string& name) const {
  auto it = preds_.find(name);
  if (it == preds_.end()) throw std::runtime_error("undeclared predicate: " + name);
  return it->second;
}

// ---------------------------------------------------------------------------
// Terms

TermPtr Term::mk_var(std::string name) {
  auto t = std::make_shared<Term>();
  t->kind = TermKind::Var;
  t->var = std::move(name);
  return t;
}
TermPtr Term::mk_prime(TermPtr s) {
  auto t = std::make_shared<Term>();
  t->kind = TermKind::Prime;
  t->sub = std::move(s);
  return t;
}
TermPtr Term::mk_app(TermPtr s, TermPtr a) {
  auto t = std::make_shared<Term>();
  t->kind = TermKind::App;
  t->sub = std::move(s);
  t->arg = std::move(a);
  return t;
}
TermPtr Term::mk_star(FormulaPtr f) {
  if (sort_of(f) != Sort::C) throw SortError("*{.} takes a c-formula");
  auto t = std::make_shared<Term>();
  t->kind = TermKind::Star;
  t->star_body = std::move(f);
  return t;
}

bool term_equal(const TermPtr& a, const TermPtr& b) {
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case TermKind::Var: return a->var == b->var;
    case TermKind::Prime: return term_equal(a->sub, b->sub);
    case TermKind::App:
      return term_equal(a->sub, b->sub) && term_equal(a->arg, b->arg);
    case TermKind::Star: return struct_equal(a->star_body, b->star_body);
  }
  return false;
}

// ---------------------------------------------------------------------------
// Formula constructors

namespace {
FormulaPtr mk(Kind k, Sort s) {
  auto f = std::make_shared<Formula>();
  f->kind = k;
  f->sort = s;
  return f;
}
} // namespace

FormulaPtr Formula::top() { return mk(Kind::TopC, Sort::C); }
FormulaPtr Formula::bot() { return mk(Kind::BotC, Sort::C); }
FormulaPtr Formula::triv() { return mk(Kind::Triv, Sort::I); }
FormulaPtr Formula::absurd() { return mk(Kind::Absurd, Sort::I); }

FormulaPtr Formula::atom(const Signature& sig, const std::string& pred,
                         std::vector<TermPtr> args) {
  const PredDecl& d = sig.lookup(pred);
  if (d.arity != args.size())
    throw std::runtime_error("arity mismatch for " + pred + ": expected " +
                             std::to_string(d.arity) + ", got " +
                             std::to_string(args.size()));
  if (!sig.allow_proof_terms)
    for (const auto& t : args)
      if (t->kind != TermKind::Var)
        throw std::runtime_error("atom arguments must be bare variables");
  auto f = mk(Kind::Atom, d.formula_sort());
  auto g = std::const_pointer_cast<Formula>(f);
  g->pred = pred;
  g->args = std::move(args);
  return f;
}

namespace {
FormulaPtr binary(Kind k, FormulaPtr a, FormulaPtr b, Sugar sugar) {
  if (a->sort != b->sort)
    throw SortError("sort clash: cannot combine a c-formula with an i-formula");
  auto f = mk(k, a->sort);
  auto g = std::const_pointer_cast<Formula>(f);
  g->lhs = std::move(a);
  g->rhs = std::move(b);
  g->sugar = sugar;
  return f;
}
FormulaPtr binder(Kind k, std::string v, FormulaPtr body) {
  auto f = mk(k, body->sort);
  auto g = std::const_pointer_cast<Formula>(f);
  g->var = std::move(v);
  g->lhs = std::move(body);
  return f;
}
} // namespace

FormulaPtr Formula::conj(FormulaPtr a, FormulaPtr b, Sugar s) { return binary(Kind::And, std::move(a), std::move(b), s); }
FormulaPtr Formula::disj(FormulaPtr a, FormulaPtr b) { return binary(Kind::Or, std::move(a), std::move(b), Sugar::None); }
FormulaPtr Formula::imp(FormulaPtr a, FormulaPtr b, Sugar s) { return binary(Kind::Imp, std::move(a), std::move(b), s); }
FormulaPtr Formula::forall(std::string v, FormulaPtr body) { return binder(Kind::Forall, std::move(v), std::move(body)); }
FormulaPtr Formula::exists(std::string v, FormulaPtr body) { return binder(Kind::Exists, std::move(v), std::move(body)); }

FormulaPtr Formula::query(FormulaPtr body, Sugar sugar) {
  if (body->sort != Sort::I) throw SortError("? takes an i-formula");
  auto f = mk(Kind::Query, Sort::C);
  auto g = std::const_pointer_cast<Formula>(f);
  g->lhs = std::move(body);
  g->sugar = sugar;
  return f;
}

FormulaPtr Formula::bang(FormulaPtr body, Sugar sugar) {
  if (body->sort != Sort::C) throw SortError("! takes a c-formula");
  auto f = mk(Kind::Bang, Sort::I);
  auto g = std::const_pointer_cast<Formula>(f);
  g->lhs = std::move(body);
  g->sugar = sugar;
  return f;
}

FormulaPtr Formula::proof_of(TermPtr t, FormulaPtr body) {
  if (body->sort != Sort::C) throw SortError(":: takes a c-formula");
  auto f = mk(Kind::ProofOf, Sort::C);
  auto g = std::const_pointer_cast<Formula>(f);
  g->term = std::move(t);
  g->lhs = std::move(body);
  return f;
}

FormulaPtr Formula::box_prim(FormulaPtr body) {
  if (body->sort != Sort::C) throw SortError("box takes a c-formula");
  auto f = mk(Kind::BoxPrim, Sort::C);
  std::const_pointer_cast<Formula>(f)->lhs = std::move(body);
  return f;
}

FormulaPtr Formula::nabla_prim(FormulaPtr body) {
  if (body->sort != Sort::I) throw SortError("nabla takes an i-formula");
  auto f = mk(Kind::NablaPrim, Sort::I);
  std::const_pointer_cast<Formula>(f)->lhs = std::move(body);
  return f;
}

FormulaPtr Formula::neg(FormulaPtr a) {
  FormulaPtr falsum = a->sort == Sort::C ? bot() : absurd();
  return imp(std::move(a), std::move(falsum), Sugar::Neg);
}
FormulaPtr Formula::iff(FormulaPtr a, FormulaPtr b) {
  return conj(imp(a, b), imp(b, a), Sugar::Iff);
}
FormulaPtr Formula::box(FormulaPtr a) { return query(bang(std::move(a)), Sugar::Box); }
FormulaPtr Formula::nabla(FormulaPtr a) { return bang(query(std::move(a)), Sugar::Nabla); }
FormulaPtr Formula::dia(FormulaPtr a) {
  auto inner = neg(std::move(a));
  auto boxed = query(bang(std::move(inner)), Sugar::Box);
  auto f = imp(std::move(boxed), bot(), Sugar::Dia);
  return f;
}

Sort sort_of(const FormulaPtr& f) { return f->sort; }

// ---------------------------------------------------------------------------
// Free variables

void collect_free_term_vars(const TermPtr& t, std::set<std::string>& out) {
  switch (t->kind) {
    case TermKind::Var: out.insert(t->var); break;
    case TermKind::Prime: collect_free_term_vars(t->sub, out); break;
    case TermKind::App:
      collect_free_term_vars(t->sub, out);
      collect_free_term_vars(t->arg, out);
      break;
    case TermKind::Star: {
      FreeVars fv = free_vars(t->star_body);
      out.insert(fv.indiv.begin(), fv.indiv.end());
      break;
    }
  }
}

namespace {
void fv_rec(const FormulaPtr& f, std::set<std::string>& bound, FreeVars& out) {
  switch (f->kind) {
    case Kind::TopC:
    case Kind::BotC:
    case Kind::Triv:
    case Kind::Absurd:
      return;
    case Kind::Atom: {
      out.preds.insert(f->pred);
      for (const auto& t : f->args) {
        std::set<std::string> tv;
        collect_free_term_vars(t, tv);
        for (const auto& v : tv)
          if (!bound.count(v)) out.indiv.insert(v);
      }
      return;
    }
    case Kind::And:
    case Kind::Or:
    case Kind::Imp:
      fv_rec(f->lhs, bound, out);
      fv_rec(f->rhs, bound, out);
      return;
    case Kind::Forall:
    case Kind::Exists: {
      bool was = bound.count(f->var) != 0;
      bound.insert(f->var);
      fv_rec(f->lhs, bound, out);
      if (!was) bound.erase(f->var);
      return;
    }
    case Kind::Query:
    case Kind::Bang:
    case Kind::BoxPrim:
    case Kind::NablaPrim:
      fv_rec(f->lhs, bound, out);
      return;
    case Kind::ProofOf: {
      std::set<std::string> tv;
      collect_free_term_vars(f->term, tv);
      for (const auto& v : tv)
        if (!bound.count(v)) out.indiv.insert(v);
      fv_rec(f->lhs, bound, out);
      return;
    }
  }
}
} // namespace

FreeVars free_vars(const FormulaPtr& f) {
  FreeVars out;
  std::set<std::string> bound;
  fv_rec(f, bound, out);
  return out;
}

// ---------------------------------------------------------------------------
// Alpha equality

namespace {

// Maps bound variables to shared de-Bruijn-style levels during comparison.
struct AlphaCtx {
  std::map<std::string, int> la, lb;
  int depth = 0;
};

bool term_alpha(const TermPtr& a, const TermPtr& b, AlphaCtx& ctx);

bool alpha_rec(const FormulaPtr& a, const FormulaPtr& b, AlphaCtx& ctx) {
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Kind::TopC:
    case Kind::BotC:
    case Kind::Triv:
    case Kind::Absurd:
      return true;
    case Kind::Atom: {
      if (a->pred != b->pred || a->args.size() != b->args.size()) return false;
      for (size_t i = 0; i < a->args.size(); ++i)
        if (!term_alpha(a->args[i], b->args[i], ctx)) return false;
      return true;
    }
    case Kind::And:
    case Kind::Or:
    case Kind::Imp:
      return alpha_rec(a->lhs, b->lhs, ctx) && alpha_rec(a->rhs, b->rhs, ctx);
    case Kind::Forall:
    case Kind::Exists: {
      auto sa = ctx.la.find(a->var) != ctx.la.end()
                    ? std::optional<int>(ctx.la[a->var]) : std::nullopt;
      auto sb = ctx.lb.find(b->var) != ctx.lb.end()
                    ? std::optional<int>(ctx.lb[b->var]) : std::nullopt;
      ctx.la[a->var] = ctx.depth;
      ctx.lb[b->var] = ctx.depth;
      ++ctx.depth;
      bool ok = alpha_rec(a->lhs, b->lhs, ctx);
      --ctx.depth;
      if (sa) ctx.la[a->var] = *sa; else ctx.la.erase(a->var);
      if (sb) ctx.lb[b->var] = *sb; else ctx.lb.erase(b->var);
      return ok;
    }
    case Kind::Query:
    case Kind::Bang:
    case Kind::BoxPrim:
    case Kind::NablaPrim:
      return alpha_rec(a->lhs, b->lhs, ctx);
    case Kind::ProofOf:
      return term_alpha(a->term, b->term, ctx) && alpha_rec(a->lhs, b->lhs, ctx);
  }
  return false;
}

bool term_alpha(const TermPtr& a, const TermPtr& b, AlphaCtx& ctx) {
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case TermKind::Var: {
      auto ia = ctx.la.find(a->var);
      auto ib = ctx.lb.find(b->var);
      if ((ia != ctx.la.end()) != (ib != ctx.lb.end())) return false;
      if (ia != ctx.la.end()) return ia->second == ib->second;
      return a->var == b->var;
    }
    case TermKind::Prime: return term_alpha(a->sub, b->sub, ctx);
    case TermKind::App:
      return term_alpha(a->sub, b->sub, ctx) && term_alpha(a->arg, b->arg, ctx);
    case TermKind::Star: return alpha_rec(a->star_body, b->star_body, ctx);
  }
  return false;
}

} // namespace

bool alpha_equal(const FormulaPtr& a, const FormulaPtr& b) {
  AlphaCtx ctx;
  return alpha_rec(a, b, ctx);
}

namespace {
bool struct_rec(const FormulaPtr& a, const FormulaPtr& b) {
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Kind::TopC: case Kind::BotC: case Kind::Triv: case Kind::Absurd:
      return true;
    case Kind::Atom: {
      if (a->pred != b->pred || a->args.size() != b->args.size()) return false;
      for (size_t i = 0; i < a->args.size(); ++i)
        if (!term_equal(a->args[i], b->args[i])) return false;
      return true;
    }
    case Kind::And: case Kind::Or: case Kind::Imp:
      return struct_rec(a->lhs, b->lhs) && struct_rec(a->rhs, b->rhs);
    case Kind::Forall: case Kind::Exists:
      return a->var == b->var && struct_rec(a->lhs, b->lhs);
    case Kind::Query: case Kind::Bang: case Kind::BoxPrim: case Kind::NablaPrim:
      return struct_rec(a->lhs, b->lhs);
    case Kind::ProofOf:
      return term_equal(a->term, b->term) && struct_rec(a->lhs, b->lhs);
  }
  return false;
}
} // namespace

bool struct_equal(const FormulaPtr& a, const FormulaPtr& b) {
  return struct_rec(a, b);
}

// ---------------------------------------------------------------------------
// Substitution

namespace {

std::string split_base(const std::string& name, int& suffix) {
  size_t i = name.size();
  while (i > 0 && isdigit(static_cast<unsigned char>(name[i - 1]))) --i;
  suffix = 0;
  if (i < name.size()) suffix = std::stoi(name.substr(i));
  return name.substr(0, i);
}

std::string fresh_name(const std::string& base_name,
                       const std::set<std::string>& avoid) {
  int start;
  std::string base = split_base(base_name, start);
  if (base.empty()) base = "x";
  for (int k = 1;; ++k) {
    std::string cand = base + std::to_string(k);
    if (!avoid.count(cand)) return cand;
  }
}

TermPtr term_subst(const TermPtr& t, const Substitution& s, const Signature& sig);

struct SubstEnv {
  const Substitution* s;
  const Signature* sig;
};

// Free individual variables that the substitution may introduce at this point:
// used to decide whether a binder must be renamed.
std::set<std::string> incoming_vars(const FormulaPtr& body, const std::string& binder_var,
                                    const Substitution& s) {
  std::set<std::string> incoming;
  FreeVars fv = free_vars(body);
  for (const auto& v : fv.indiv) {
    if (v == binder_var) continue;
    auto it = s.indiv.find(v);
    if (it != s.indiv.end()) collect_free_term_vars(it->second, incoming);
  }
  for (const auto& p : fv.preds) {
    auto it = s.preds.find(p);
    if (it != s.preds.end()) {
      FreeVars bfv = free_vars(it->second.body);
      for (const auto& v : bfv.indiv) {
        bool is_param = std::find(it->second.params.begin(), it->second.params.end(),
                                  v) != it->second.params.end();
        if (!is_param) incoming.insert(v);
      }
    }
  }
  return incoming;
}

FormulaPtr subst_rec(const FormulaPtr& f, const Substitution& s, const Signature& sig) {
  switch (f->kind) {
    case Kind::TopC: case Kind::BotC: case Kind::Triv: case Kind::Absurd:
      return f;
    case Kind::Atom: {
      std::vector<TermPtr> args;
      args.reserve(f->args.size());
      for (const auto& t : f->args) args.push_back(term_subst(t, s, sig));
      auto it = s.preds.find(f->pred);
      if (it == s.preds.end()) {
        auto g = Formula::atom(sig, f->pred, std::move(args));
        return g;
      }
      const Abstraction& ab = it->second;
      const PredDecl& d = sig.lookup(f->pred);
      if (ab.params.size() != d.arity)
        throw std::runtime_error("abstraction arity mismatch for " + f->pred);
      if (ab.body->sort != d.formula_sort())
        throw SortError("sort-incorrect abstraction for " + f->pred);
      Substitution beta;
      for (size_t i = 0; i < ab.params.size(); ++i)
        beta.indiv[ab.params[i]] = args[i];
      return subst_rec(ab.body, beta, sig);
    }
    case Kind::And:
      return Formula::conj(subst_rec(f->lhs, s, sig), subst_rec(f->rhs, s, sig), f->sugar);
    case Kind::Or:
      return Formula::disj(subst_rec(f->lhs, s, sig), subst_rec(f->rhs, s, sig));
    case Kind::Imp:
      return Formula::imp(subst_rec(f->lhs, s, sig), subst_rec(f->rhs, s, sig), f->sugar);
    case Kind::Forall:
    case Kind::Exists: {
      Substitution inner = s;
      inner.indiv.erase(f->var);
      std::set<std::string> incoming = incoming_vars(f->lhs, f->var, inner);
      std::string v = f->var;
      FormulaPtr body = f->lhs;
      if (incoming.count(v)) {
        // The binder would capture an incoming free variable: rename it.
        std::set<std::string> avoid = incoming;
        FreeVars bfv = free_vars(body);
        avoid.insert(bfv.indiv.begin(), bfv.indiv.end());
        std::string v2 = fresh_name(v, avoid);
        Substitution ren;
        ren.indiv[v] = Term::mk_var(v2);
        body = subst_rec(body, ren, sig);
        v = v2;
      }
      FormulaPtr nb = subst_rec(body, inner, sig);
      return f->kind == Kind::Forall ? Formula::forall(v, nb) : Formula::exists(v, nb);
    }
    case Kind::Query: return Formula::query(subst_rec(f->lhs, s, sig), f->sugar);
    case Kind::Bang: return Formula::bang(subst_rec(f->lhs, s, sig), f->sugar);
    case Kind::BoxPrim: return Formula::box_prim(subst_rec(f->lhs, s, sig));
    case Kind::NablaPrim: return Formula::nabla_prim(subst_rec(f->lhs, s, sig));
    case Kind::ProofOf:
      return Formula::proof_of(term_subst(f->term, s, sig), subst_rec(f->lhs, s, sig));
  }
  throw std::logic_error("unreachable");
}

TermPtr term_subst(const TermPtr& t, const Substitution& s, const Signature& sig) {
  switch (t->kind) {
    case TermKind::Var: {
      auto it = s.indiv.find(t->var);
      return it != s.indiv.end() ? it->second : t;
    }
    case TermKind::Prime: return Term::mk_prime(term_subst(t->sub, s, sig));
    case TermKind::App:
      return Term::mk_app(term_subst(t->sub, s, sig), term_subst(t->arg, s, sig));
    case TermKind::Star: return Term::mk_star(subst_rec(t->star_body, s, sig));
  }
  throw std::logic_error("unreachable");
}

} // namespace

FormulaPtr apply_substitution(const FormulaPtr& f, const Substitution& s,
                              const Signature& sig) {
  if (s.empty()) return f;
  return subst_rec(f, s, sig);
}

Substitution compose(const Substitution& s1, const Substitution& s2,
                     const Signature& sig) {
  Substitution out;
  for (const auto& [v, t] : s1.indiv) out.indiv[v] = term_subst(t, s2, sig);
  for (const auto& [v, t] : s2.indiv)
    if (!out.indiv.count(v) && !s1.indiv.count(v)) out.indiv[v] = t;
  for (const auto& [p, ab] : s1.preds) {
    // Params must stay out of s2's way: drop them from s2 for the body pass.
    Substitution s2p = s2;
    for (const auto& par : ab.params) s2p.indiv.erase(par);
    out.preds[p] = Abstraction{ab.params, apply_substitution(ab.body, s2p, sig)};
  }
  for (const auto& [p, ab] : s2.preds)
    if (!out.preds.count(p) && !s1.preds.count(p)) out.preds[p] = ab;
  return out;
}

} // namespace qhc
