#include "debruijn_oracle.hpp"

#include <map>
#include <stdexcept>

namespace qhc_oracle {

using qhc::Kind;
using qhc::TermKind;

namespace {

NTermPtr nt(NTermKind k) {
  auto t = std::make_shared<NTerm>();
  t->kind = k;
  return t;
}

NFormulaPtr nf(Kind k) {
  auto f = std::make_shared<NFormula>();
  f->kind = k;
  return f;
}

struct Ctx {
  std::vector<std::string> binders; // innermost last
  int lookup(const std::string& v) const {
    for (int i = static_cast<int>(binders.size()) - 1; i >= 0; --i)
      if (binders[i] == v) return static_cast<int>(binders.size()) - 1 - i;
    return -1;
  }
};

NTermPtr conv_term(const qhc::TermPtr& t, Ctx& ctx);

NFormulaPtr conv(const qhc::FormulaPtr& f, Ctx& ctx) {
  auto out = std::make_shared<NFormula>();
  out->kind = f->kind;
  switch (f->kind) {
    case Kind::TopC: case Kind::BotC: case Kind::Triv: case Kind::Absurd:
      break;
    case Kind::Atom:
      out->pred = f->pred;
      for (const auto& a : f->args) out->args.push_back(conv_term(a, ctx));
      break;
    case Kind::And: case Kind::Or: case Kind::Imp:
      out->lhs = conv(f->lhs, ctx);
      out->rhs = conv(f->rhs, ctx);
      break;
    case Kind::Forall: case Kind::Exists:
      ctx.binders.push_back(f->var);
      out->lhs = conv(f->lhs, ctx);
      ctx.binders.pop_back();
      break;
    case Kind::Query: case Kind::Bang: case Kind::BoxPrim: case Kind::NablaPrim:
      out->lhs = conv(f->lhs, ctx);
      break;
    case Kind::ProofOf:
      out->term = conv_term(f->term, ctx);
      out->lhs = conv(f->lhs, ctx);
      break;
  }
  return out;
}

NTermPtr conv_term(const qhc::TermPtr& t, Ctx& ctx) {
  switch (t->kind) {
    case TermKind::Var: {
      int ix = ctx.lookup(t->var);
      if (ix >= 0) {
        auto r = nt(NTermKind::Bound);
        auto w = std::const_pointer_cast<NTerm>(r);
        w->index = ix;
        return r;
      }
      auto r = nt(NTermKind::Free);
      std::const_pointer_cast<NTerm>(r)->name = t->var;
      return r;
    }
    case TermKind::Prime: {
      auto r = nt(NTermKind::Prime);
      std::const_pointer_cast<NTerm>(r)->sub = conv_term(t->sub, ctx);
      return r;
    }
    case TermKind::App: {
      auto r = nt(NTermKind::App);
      auto w = std::const_pointer_cast<NTerm>(r);
      w->sub = conv_term(t->sub, ctx);
      w->arg = conv_term(t->arg, ctx);
      return r;
    }
    case TermKind::Star: {
      auto r = nt(NTermKind::Star);
      std::const_pointer_cast<NTerm>(r)->star = conv(t->star_body, ctx);
      return r;
    }
  }
  throw std::logic_error("unreachable");
}

// Shift the Bound indices >= cutoff by `depth` (replacement inserted under
// binders).
NFormulaPtr shift_formula(const NFormulaPtr& f, int depth, int cutoff);

NTermPtr shift_term(const NTermPtr& t, int depth, int cutoff) {
  switch (t->kind) {
    case NTermKind::Bound:
      if (t->index >= cutoff) {
        auto r = std::make_shared<NTerm>(*t);
        r->index += depth;
        return r;
      }
      return t;
    case NTermKind::Free:
    case NTermKind::Param:
      return t;
    case NTermKind::Prime: {
      auto r = std::make_shared<NTerm>(*t);
      r->sub = shift_term(t->sub, depth, cutoff);
      return r;
    }
    case NTermKind::App: {
      auto r = std::make_shared<NTerm>(*t);
      r->sub = shift_term(t->sub, depth, cutoff);
      r->arg = shift_term(t->arg, depth, cutoff);
      return r;
    }
    case NTermKind::Star: {
      auto r = std::make_shared<NTerm>(*t);
      r->star = shift_formula(t->star, depth, cutoff);
      return r;
    }
  }
  throw std::logic_error("unreachable");
}

NFormulaPtr shift_formula(const NFormulaPtr& f, int depth, int cutoff) {
  auto out = std::make_shared<NFormula>(*f);
  switch (f->kind) {
    case Kind::Atom: {
      out->args.clear();
      for (const auto& a : f->args) out->args.push_back(shift_term(a, depth, cutoff));
      return out;
    }
    case Kind::And: case Kind::Or: case Kind::Imp:
      out->lhs = shift_formula(f->lhs, depth, cutoff);
      out->rhs = shift_formula(f->rhs, depth, cutoff);
      return out;
    case Kind::Forall: case Kind::Exists:
      out->lhs = shift_formula(f->lhs, depth, cutoff + 1);
      return out;
    case Kind::Query: case Kind::Bang: case Kind::BoxPrim: case Kind::NablaPrim:
      out->lhs = shift_formula(f->lhs, depth, cutoff);
      return out;
    case Kind::ProofOf:
      out->term = shift_term(f->term, depth, cutoff);
      out->lhs = shift_formula(f->lhs, depth, cutoff);
      return out;
    default:
      return out;
  }
}

struct OracleSubst {
  const qhc::Substitution& s;

  NTermPtr subst_term(const NTermPtr& t, int depth,
                      const std::vector<NTermPtr>* params) {
    switch (t->kind) {
      case NTermKind::Free: {
        auto it = s.indiv.find(t->name);
        if (it == s.indiv.end()) return t;
        Ctx empty;
        NTermPtr repl = conv_term(it->second, empty);
        // Replacement has only Free variables; no shift needed.
        (void)depth;
        return repl;
      }
      case NTermKind::Bound:
      case NTermKind::Param:
        return t;
      case NTermKind::Prime: {
        auto r = std::make_shared<NTerm>(*t);
        r->sub = subst_term(t->sub, depth, params);
        return r;
      }
      case NTermKind::App: {
        auto r = std::make_shared<NTerm>(*t);
        r->sub = subst_term(t->sub, depth, params);
        r->arg = subst_term(t->arg, depth, params);
        return r;
      }
      case NTermKind::Star: {
        auto r = std::make_shared<NTerm>(*t);
        r->star = subst_formula(t->star, depth);
        return r;
      }
    }
    throw std::logic_error("unreachable");
  }

  // Instantiate abstraction-body `b` (Param markers) with nameless args.
  NFormulaPtr instantiate(const NFormulaPtr& b, const std::vector<NTermPtr>& args,
                          int depth) {
    auto out = std::make_shared<NFormula>(*b);
    switch (b->kind) {
      case Kind::Atom: {
        out->args.clear();
        for (const auto& a : b->args) out->args.push_back(inst_term(a, args, depth));
        return out;
      }
      case Kind::And: case Kind::Or: case Kind::Imp:
        out->lhs = instantiate(b->lhs, args, depth);
        out->rhs = instantiate(b->rhs, args, depth);
        return out;
      case Kind::Forall: case Kind::Exists:
        out->lhs = instantiate(b->lhs, args, depth + 1);
        return out;
      case Kind::Query: case Kind::Bang: case Kind::BoxPrim: case Kind::NablaPrim:
        out->lhs = instantiate(b->lhs, args, depth);
        return out;
      case Kind::ProofOf:
        out->term = inst_term(b->term, args, depth);
        out->lhs = instantiate(b->lhs, args, depth);
        return out;
      default:
        return out;
    }
  }

  NTermPtr inst_term(const NTermPtr& t, const std::vector<NTermPtr>& args, int depth) {
    switch (t->kind) {
      case NTermKind::Param: {
        NTermPtr a = args.at(static_cast<size_t>(t->index));
        // entering `depth` binders inside the body: shift outer Bound indices
        return depth == 0 ? a : shift_term(a, depth, 0);
      }
      case NTermKind::Free:
      case NTermKind::Bound:
        return t;
      case NTermKind::Prime: {
        auto r = std::make_shared<NTerm>(*t);
        r->sub = inst_term(t->sub, args, depth);
        return r;
      }
      case NTermKind::App: {
        auto r = std::make_shared<NTerm>(*t);
        r->sub = inst_term(t->sub, args, depth);
        r->arg = inst_term(t->arg, args, depth);
        return r;
      }
      case NTermKind::Star: {
        auto r = std::make_shared<NTerm>(*t);
        r->star = instantiate(t->star, args, depth);
        return r;
      }
    }
    throw std::logic_error("unreachable");
  }

  NFormulaPtr subst_formula(const NFormulaPtr& f, int depth) {
    auto out = std::make_shared<NFormula>(*f);
    switch (f->kind) {
      case Kind::Atom: {
        std::vector<NTermPtr> new_args;
        for (const auto& a : f->args) new_args.push_back(subst_term(a, depth, nullptr));
        auto it = s.preds.find(f->pred);
        if (it == s.preds.end()) {
          out->args = std::move(new_args);
          return out;
        }
        // Convert the abstraction body with Param markers, then instantiate.
        const qhc::Abstraction& ab = it->second;
        Ctx empty;
        NFormulaPtr body = conv(ab.body, empty);
        body = mark_params(body, ab.params);
        return instantiate(body, new_args, 0);
      }
      case Kind::And: case Kind::Or: case Kind::Imp:
        out->lhs = subst_formula(f->lhs, depth);
        out->rhs = subst_formula(f->rhs, depth);
        return out;
      case Kind::Forall: case Kind::Exists:
        out->lhs = subst_formula(f->lhs, depth + 1);
        return out;
      case Kind::Query: case Kind::Bang: case Kind::BoxPrim: case Kind::NablaPrim:
        out->lhs = subst_formula(f->lhs, depth);
        return out;
      case Kind::ProofOf:
        out->term = subst_term(f->term, depth, nullptr);
        out->lhs = subst_formula(f->lhs, depth);
        return out;
      default:
        return out;
    }
  }

  NFormulaPtr mark_params(const NFormulaPtr& f, const std::vector<std::string>& params) {
    auto out = std::make_shared<NFormula>(*f);
    switch (f->kind) {
      case Kind::Atom: {
        out->args.clear();
        for (const auto& a : f->args) out->args.push_back(mark_params_term(a, params));
        return out;
      }
      case Kind::And: case Kind::Or: case Kind::Imp:
        out->lhs = mark_params(f->lhs, params);
        out->rhs = mark_params(f->rhs, params);
        return out;
      case Kind::Forall: case Kind::Exists:
      case Kind::Query: case Kind::Bang: case Kind::BoxPrim: case Kind::NablaPrim:
        out->lhs = mark_params(f->lhs, params);
        return out;
      case Kind::ProofOf:
        out->term = mark_params_term(f->term, params);
        out->lhs = mark_params(f->lhs, params);
        return out;
      default:
        return out;
    }
  }

  NTermPtr mark_params_term(const NTermPtr& t, const std::vector<std::string>& params) {
    switch (t->kind) {
      case NTermKind::Free: {
        for (size_t i = 0; i < params.size(); ++i)
          if (params[i] == t->name) {
            auto r = nt(NTermKind::Param);
            std::const_pointer_cast<NTerm>(r)->index = static_cast<int>(i);
            return r;
          }
        return t;
      }
      case NTermKind::Bound:
      case NTermKind::Param:
        return t;
      case NTermKind::Prime: {
        auto r = std::make_shared<NTerm>(*t);
        r->sub = mark_params_term(t->sub, params);
        return r;
      }
      case NTermKind::App: {
        auto r = std::make_shared<NTerm>(*t);
        r->sub = mark_params_term(t->sub, params);
        r->arg = mark_params_term(t->arg, params);
        return r;
      }
      case NTermKind::Star: {
        auto r = std::make_shared<NTerm>(*t);
        r->star = mark_params(t->star, params);
        return r;
      }
    }
    throw std::logic_error("unreachable");
  }
};

bool nterm_equal(const NTermPtr& a, const NTermPtr& b) {
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case NTermKind::Free: return a->name == b->name;
    case NTermKind::Bound:
    case NTermKind::Param:
      return a->index == b->index;
    case NTermKind::Prime: return nterm_equal(a->sub, b->sub);
    case NTermKind::App:
      return nterm_equal(a->sub, b->sub) && nterm_equal(a->arg, b->arg);
    case NTermKind::Star: return nameless_equal(a->star, b->star);
  }
  return false;
}

} // namespace

NFormulaPtr to_nameless(const qhc::FormulaPtr& f) {
  Ctx ctx;
  return conv(f, ctx);
}

bool nameless_equal(const NFormulaPtr& a, const NFormulaPtr& b) {
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Kind::TopC: case Kind::BotC: case Kind::Triv: case Kind::Absurd:
      return true;
    case Kind::Atom: {
      if (a->pred != b->pred || a->args.size() != b->args.size()) return false;
      for (size_t i = 0; i < a->args.size(); ++i)
        if (!nterm_equal(a->args[i], b->args[i])) return false;
      return true;
    }
    case Kind::And: case Kind::Or: case Kind::Imp:
      return nameless_equal(a->lhs, b->lhs) && nameless_equal(a->rhs, b->rhs);
    case Kind::Forall: case Kind::Exists:
    case Kind::Query: case Kind::Bang: case Kind::BoxPrim: case Kind::NablaPrim:
      return nameless_equal(a->lhs, b->lhs);
    case Kind::ProofOf:
      return nterm_equal(a->term, b->term) && nameless_equal(a->lhs, b->lhs);
  }
  return false;
}

NFormulaPtr oracle_substitute(const qhc::FormulaPtr& f, const qhc::Substitution& s) {
  OracleSubst os{s};
  return os.subst_formula(to_nameless(f), 0);
}

} // namespace qhc_oracle
