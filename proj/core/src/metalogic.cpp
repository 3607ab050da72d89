#include "qhc/metalogic.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "qhc/parser.hpp"

namespace qhc {

void DerivationSystem::add_law(const std::string& lname, const std::string& text) {
  laws_.push_back(Law{lname, parse_formula(text, sig)});
}

void DerivationSystem::add_rule(const std::string& rname,
                                const std::vector<std::string>& premises,
                                const std::string& conclusion, bool is_mp) {
  Rule r;
  r.name = rname;
  for (const auto& p : premises) r.premises.push_back(parse_formula(p, sig));
  r.conclusion = parse_formula(conclusion, sig);
  r.is_mp = is_mp;
  rules_.push_back(std::move(r));
}

const Law* DerivationSystem::find_law(const std::string& lname) const {
  for (const auto& l : laws_)
    if (l.name == lname) return &l;
  return nullptr;
}

const Rule* DerivationSystem::find_rule(const std::string& rname) const {
  for (const auto& r : rules_)
    if (r.name == rname) return &r;
  return nullptr;
}

const char* fail_code_name(FailCode c) {
  switch (c) {
    case FailCode::None: return "OK";
    case FailCode::BAD_INSTANCE: return "BAD_INSTANCE";
    case FailCode::CAPTURE: return "CAPTURE";
    case FailCode::GEN_ON_HYP_VAR: return "GEN_ON_HYP_VAR";
    case FailCode::EIGEN_NOT_FRESH: return "EIGEN_NOT_FRESH";
    case FailCode::WRONG_SYSTEM: return "WRONG_SYSTEM";
    case FailCode::GOAL_MISMATCH: return "GOAL_MISMATCH";
    case FailCode::RULE_ON_HYP: return "RULE_ON_HYP";
    case FailCode::BAD_REFERENCE: return "BAD_REFERENCE";
  }
  return "?";
}

bool instance_of_law(const FormulaPtr& candidate, const FormulaPtr& law,
                     const Substitution& s, const Signature& sig) {
  return alpha_equal(apply_substitution(law, s, sig), candidate);
}

// ---------------------------------------------------------------------------
// Pattern matching for rule applications without an explicit substitution.
// Supported patterns: structural shapes over 0-ary predicate variables.
// Anything richer must state its substitution explicitly.

namespace {

bool match_rec(const FormulaPtr& pat, const FormulaPtr& cand, Substitution& binds,
               const Signature& sig, bool& unsupported) {
  if (pat->kind == Kind::Atom) {
    const PredDecl& d = sig.lookup(pat->pred);
    if (d.arity == 0) {
      auto it = binds.preds.find(pat->pred);
      if (it != binds.preds.end()) return alpha_equal(it->second.body, cand);
      if (cand->sort != d.formula_sort()) return false;
      binds.preds[pat->pred] = Abstraction{{}, cand};
      return true;
    }
    unsupported = true;
    return false;
  }
  if (pat->kind != cand->kind) return false;
  switch (pat->kind) {
    case Kind::TopC: case Kind::BotC: case Kind::Triv: case Kind::Absurd:
      return true;
    case Kind::And: case Kind::Or: case Kind::Imp:
      return match_rec(pat->lhs, cand->lhs, binds, sig, unsupported) &&
             match_rec(pat->rhs, cand->rhs, binds, sig, unsupported);
    case Kind::Query: case Kind::Bang: case Kind::BoxPrim: case Kind::NablaPrim:
      return match_rec(pat->lhs, cand->lhs, binds, sig, unsupported);
    case Kind::Forall: case Kind::Exists:
      unsupported = true; // binder patterns need an explicit substitution
      return false;
    case Kind::ProofOf:
      if (pat->term->kind == TermKind::Var) {
        auto it = binds.indiv.find(pat->term->var);
        if (it != binds.indiv.end()) {
          if (!term_equal(it->second, cand->term)) return false;
        } else {
          binds.indiv[pat->term->var] = cand->term;
        }
        return match_rec(pat->lhs, cand->lhs, binds, sig, unsupported);
      }
      unsupported = true;
      return false;
    default:
      unsupported = true;
      return false;
  }
}

struct CheckCtx {
  const DerivationSystem& sys;
  const ProofScript& script;
  std::vector<std::set<int>> deps; // per accepted line: hypothesis indices
  Verdict verdict;

  explicit CheckCtx(const DerivationSystem& s, const ProofScript& sc)
      : sys(s), script(sc) {}

  bool fail(int line, FailCode code, const std::string& msg) {
    verdict.accepted = false;
    verdict.failing_line = line;
    verdict.code = code;
    verdict.message = msg;
    return false;
  }
};

} // namespace

Verdict check_proof(const ProofScript& script, const DerivationSystem& sys) {
  CheckCtx ctx(sys, script);
  Verdict& v = ctx.verdict;

  if (script.system_name != sys.name) {
    ctx.fail(0, FailCode::WRONG_SYSTEM,
             "script targets system " + script.system_name + ", checked against " + sys.name);
    return v;
  }
  if (!script.goal) {
    ctx.fail(0, FailCode::GOAL_MISMATCH, "missing goal");
    return v;
  }
  if (script.mode != ScriptMode::RuleDerivation &&
      (!script.premise_rules.empty() || !script.eigen.empty() ||
       !script.goal_premises.empty())) {
    ctx.fail(0, FailCode::EIGEN_NOT_FRESH,
             "premise rules / eigen declarations require rule-derivation mode");
    return v;
  }
  if (script.mode != ScriptMode::Hypotheses && !script.hypotheses.empty()) {
    ctx.fail(0, FailCode::GOAL_MISMATCH, "hypotheses require hypotheses mode");
    return v;
  }
  if (script.mode == ScriptMode::RuleDerivation) {
    // The eigen declaration realizes the meta-quantifier introduction for the
    // goal rule: it must cover every free predicate variable of the goal.
    std::set<std::string> eigen(script.eigen.begin(), script.eigen.end());
    FreeVars gv = free_vars(script.goal);
    for (const auto& gp : script.goal_premises) {
      FreeVars pv = free_vars(gp);
      gv.preds.insert(pv.preds.begin(), pv.preds.end());
    }
    for (const auto& p : gv.preds)
      if (!eigen.count(p)) {
        ctx.fail(0, FailCode::EIGEN_NOT_FRESH,
                 "goal predicate variable not declared eigen: " + p);
        return v;
      }
  }

  const std::vector<FormulaPtr>& hyps = script.mode == ScriptMode::RuleDerivation
                                            ? script.goal_premises
                                            : script.hypotheses;

  std::map<int, size_t> index; // line number -> position
  for (size_t i = 0; i < script.lines.size(); ++i) {
    const ScriptLine& ln = script.lines[i];
    if (index.count(ln.number)) {
      ctx.fail(ln.number, FailCode::BAD_REFERENCE, "duplicate line number");
      return v;
    }

    auto cited = [&](int n, size_t& pos) {
      auto it = index.find(n);
      if (it == index.end()) return false;
      pos = it->second;
      return true;
    };

    std::set<int> d;
    const Justification& j = ln.just;
    switch (j.kind) {
      case Justification::Kind::Law: {
        const Law* law = sys.find_law(j.name);
        if (!law) {
          ctx.fail(ln.number, FailCode::WRONG_SYSTEM, "unknown law: " + j.name);
          return v;
        }
        FormulaPtr inst;
        try {
          inst = apply_substitution(law->formula, j.subst, sys.sig);
        } catch (const std::exception& e) {
          ctx.fail(ln.number, FailCode::CAPTURE,
                   std::string("bad substitution: ") + e.what());
          return v;
        }
        if (!alpha_equal(inst, ln.formula)) {
          ctx.fail(ln.number, FailCode::BAD_INSTANCE,
                   "stated formula is not the given instance of law " + j.name);
          return v;
        }
        break;
      }
      case Justification::Kind::Hyp: {
        int k = j.lines.empty() ? 0 : j.lines[0];
        if (k < 1 || static_cast<size_t>(k) > hyps.size()) {
          ctx.fail(ln.number, FailCode::BAD_REFERENCE,
                   "no such hypothesis: " + std::to_string(k));
          return v;
        }
        // Hypotheses are usable verbatim: no substitution instances.
        if (!alpha_equal(hyps[k - 1], ln.formula)) {
          ctx.fail(ln.number, FailCode::BAD_INSTANCE,
                   "formula is not hypothesis " + std::to_string(k) +
                       " verbatim (substitution into hypotheses is not allowed)");
          return v;
        }
        d.insert(k);
        break;
      }
      case Justification::Kind::Mp: {
        bool have_mp = false;
        for (const auto& r : sys.rules()) have_mp = have_mp || r.is_mp;
        if (!have_mp) {
          ctx.fail(ln.number, FailCode::WRONG_SYSTEM, "system has no modus ponens");
          return v;
        }
        if (j.lines.size() != 2) {
          ctx.fail(ln.number, FailCode::BAD_REFERENCE, "mp takes two line numbers");
          return v;
        }
        size_t pi, pj;
        if (!cited(j.lines[0], pi) || !cited(j.lines[1], pj)) {
          ctx.fail(ln.number, FailCode::BAD_REFERENCE, "mp cites an unknown line");
          return v;
        }
        const FormulaPtr& impf = script.lines[pi].formula;
        const FormulaPtr& minor = script.lines[pj].formula;
        if (impf->kind != Kind::Imp || !alpha_equal(impf->lhs, minor) ||
            !alpha_equal(impf->rhs, ln.formula)) {
          ctx.fail(ln.number, FailCode::BAD_INSTANCE, "modus ponens does not apply");
          return v;
        }
        d = ctx.deps[pi];
        d.insert(ctx.deps[pj].begin(), ctx.deps[pj].end());
        break;
      }
      case Justification::Kind::Gen: {
        if (j.lines.size() != 1) {
          ctx.fail(ln.number, FailCode::BAD_REFERENCE, "gen takes one line number");
          return v;
        }
        size_t pi;
        if (!cited(j.lines[0], pi)) {
          ctx.fail(ln.number, FailCode::BAD_REFERENCE, "gen cites an unknown line");
          return v;
        }
        const FormulaPtr& body = script.lines[pi].formula;
        FormulaPtr expect = Formula::forall(j.gen_var, body);
        if (!alpha_equal(expect, ln.formula)) {
          ctx.fail(ln.number, FailCode::BAD_INSTANCE,
                   "formula is not the generalization of line " +
                       std::to_string(j.lines[0]));
          return v;
        }
        // In hypotheses mode, generalizing a variable free in a used
        // hypothesis is unsound. Rule-derivation premises are meta-closed
        // under the first-order quantifier, so gen is unrestricted there.
        if (script.mode == ScriptMode::Hypotheses) {
          for (int k : ctx.deps[pi]) {
            FreeVars fv = free_vars(hyps[k - 1]);
            if (fv.indiv.count(j.gen_var)) {
              ctx.fail(ln.number, FailCode::GEN_ON_HYP_VAR,
                       "generalized variable " + j.gen_var +
                           " is free in hypothesis " + std::to_string(k));
              return v;
            }
          }
        }
        d = ctx.deps[pi];
        break;
      }
      case Justification::Kind::Rule: {
        const Rule* rule = sys.find_rule(j.name);
        if (!rule && script.mode == ScriptMode::RuleDerivation) {
          for (const auto& pr : script.premise_rules)
            if (pr.name == j.name) rule = &pr;
        }
        if (!rule) {
          ctx.fail(ln.number, FailCode::WRONG_SYSTEM, "unknown rule: " + j.name);
          return v;
        }
        if (j.lines.size() != rule->premises.size()) {
          ctx.fail(ln.number, FailCode::BAD_REFERENCE,
                   "rule " + j.name + " takes " +
                       std::to_string(rule->premises.size()) + " premises");
          return v;
        }
        std::vector<size_t> prem_pos;
        for (int n : j.lines) {
          size_t pos;
          if (!cited(n, pos)) {
            ctx.fail(ln.number, FailCode::BAD_REFERENCE,
                     "rule cites an unknown line " + std::to_string(n));
            return v;
          }
          prem_pos.push_back(pos);
        }
        // Inference rules lift their premises through the meta-quantifier
        // closure; a line resting on verbatim hypotheses is not so liftable.
        if (script.mode == ScriptMode::Hypotheses) {
          for (size_t pos : prem_pos)
            if (!ctx.deps[pos].empty()) {
              ctx.fail(ln.number, FailCode::RULE_ON_HYP,
                       "rule " + j.name +
                           " applied to a line depending on hypotheses");
              return v;
            }
        }
        Substitution binds;
        if (j.has_subst) {
          binds = j.subst;
          bool ok = true;
          std::string why;
          try {
            for (size_t k = 0; k < rule->premises.size() && ok; ++k) {
              FormulaPtr inst = apply_substitution(rule->premises[k], binds, sys.sig);
              if (!alpha_equal(inst, script.lines[prem_pos[k]].formula)) {
                ok = false;
                why = "premise " + std::to_string(k + 1) + " does not match";
              }
            }
            if (ok) {
              FormulaPtr cinst = apply_substitution(rule->conclusion, binds, sys.sig);
              if (!alpha_equal(cinst, ln.formula)) {
                ok = false;
                why = "conclusion does not match";
              }
            }
          } catch (const std::exception& e) {
            ctx.fail(ln.number, FailCode::CAPTURE,
                     std::string("bad substitution: ") + e.what());
            return v;
          }
          if (!ok) {
            ctx.fail(ln.number, FailCode::BAD_INSTANCE,
                     "rule " + j.name + ": " + why);
            return v;
          }
        } else {
          bool unsupported = false;
          bool ok = true;
          for (size_t k = 0; k < rule->premises.size() && ok; ++k)
            ok = match_rec(rule->premises[k], script.lines[prem_pos[k]].formula,
                           binds, sys.sig, unsupported);
          if (ok && !unsupported) {
            FormulaPtr cinst;
            try {
              cinst = apply_substitution(rule->conclusion, binds, sys.sig);
            } catch (const std::exception& e) {
              ctx.fail(ln.number, FailCode::CAPTURE,
                       std::string("bad substitution: ") + e.what());
              return v;
            }
            // Conclusion variables not determined by the premises default to
            // themselves (identity instance).
            if (!alpha_equal(cinst, ln.formula)) ok = false;
          }
          if (unsupported) {
            ctx.fail(ln.number, FailCode::BAD_INSTANCE,
                     "rule " + j.name + " requires an explicit substitution here");
            return v;
          }
          if (!ok) {
            ctx.fail(ln.number, FailCode::BAD_INSTANCE,
                     "rule " + j.name + " does not apply to the cited lines");
            return v;
          }
        }
        for (size_t pos : prem_pos)
          d.insert(ctx.deps[pos].begin(), ctx.deps[pos].end());
        break;
      }
    }

    index[ln.number] = i;
    ctx.deps.push_back(std::move(d));
  }

  // qed
  auto it = index.find(script.qed_line);
  if (it == index.end()) {
    ctx.fail(0, FailCode::BAD_REFERENCE, "qed cites an unknown line");
    return v;
  }
  const ScriptLine& last = script.lines[it->second];
  if (!alpha_equal(last.formula, script.goal)) {
    ctx.fail(last.number, FailCode::GOAL_MISMATCH, "final line is not the goal");
    return v;
  }
  const std::set<int>& final_deps = ctx.deps[it->second];
  if (script.mode == ScriptMode::Theorem && !final_deps.empty()) {
    ctx.fail(last.number, FailCode::GOAL_MISMATCH,
             "theorem mode requires an assumption-free derivation");
    return v;
  }

  v.accepted = true;
  std::string g = print_formula(script.goal);
  switch (script.mode) {
    case ScriptMode::Theorem:
      v.judgment = "|- " + g;
      break;
    case ScriptMode::Hypotheses: {
      std::string hs;
      for (size_t k = 0; k < script.hypotheses.size(); ++k) {
        if (k) hs += ", ";
        hs += print_formula(script.hypotheses[k]);
      }
      v.judgment = hs + " |- " + g;
      break;
    }
    case ScriptMode::RuleDerivation: {
      std::string rs;
      for (size_t k = 0; k < script.premise_rules.size(); ++k) {
        if (k) rs += ", ";
        rs += script.premise_rules[k].name;
      }
      std::string gp;
      for (size_t k = 0; k < script.goal_premises.size(); ++k) {
        if (k) gp += ", ";
        gp += print_formula(script.goal_premises[k]);
      }
      v.judgment = rs + " |- " + (gp.empty() ? "" : gp + " / ") + g;
      break;
    }
  }
  return v;
}

Verdict check_principle_from_principles(const std::vector<FormulaPtr>& premises,
                                        const FormulaPtr& goal,
                                        const ProofScript& script,
                                        const DerivationSystem& sys) {
  ProofScript sc = script;
  sc.mode = ScriptMode::RuleDerivation;
  sc.goal = goal;
  for (size_t i = 0; i < premises.size(); ++i) {
    Rule r;
    r.name = "premise-" + std::to_string(i + 1);
    r.conclusion = premises[i];
    sc.premise_rules.push_back(std::move(r));
  }
  // Eigen variables: the goal's free predicate variables.
  FreeVars gv = free_vars(goal);
  sc.eigen.assign(gv.preds.begin(), gv.preds.end());
  return check_proof(sc, sys);
}

// ---------------------------------------------------------------------------
// Script text format

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

// Splits on `sep` at top parenthesis level (respects (), [], {}).
std::vector<std::string> split_top(const std::string& s, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(' || c == '[' || c == '{') ++depth;
    if (c == ')' || c == ']' || c == '}') --depth;
    if (c == sep && depth == 0) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  return out;
}

Substitution parse_with_clause(const std::string& body, const Signature& sig) {
  Substitution s;
  for (const std::string& entry : split_top(body, ';')) {
    if (entry.empty()) continue;
    size_t a = entry.find(":=");
    if (a == std::string::npos)
      throw std::runtime_error("bad substitution entry: " + entry);
    std::string name = trim(entry.substr(0, a));
    std::string rhs = trim(entry.substr(a + 2));
    if (sig.declared(name)) {
      Abstraction ab;
      if (!rhs.empty() && rhs[0] == '\\') {
        size_t dot = rhs.find('.');
        if (dot == std::string::npos)
          throw std::runtime_error("bad abstraction: " + rhs);
        std::istringstream ps(rhs.substr(1, dot - 1));
        std::string p;
        while (ps >> p) ab.params.push_back(p);
        ab.body = parse_formula(trim(rhs.substr(dot + 1)), sig);
      } else {
        ab.body = parse_formula(rhs, sig);
      }
      s.preds[name] = std::move(ab);
    } else {
      s.indiv[name] = parse_term(rhs, sig);
    }
  }
  return s;
}

Justification parse_just(const std::string& text, const Signature& sig) {
  Justification j;
  std::istringstream in(text);
  std::string kw;
  in >> kw;
  auto rest = [&]() {
    std::string r;
    std::getline(in, r);
    return trim(r);
  };
  auto parse_with_and_from = [&](const std::string& r) {
    std::string rem = r;
    size_t w = rem.find("with");
    if (w != std::string::npos) {
      size_t ob = rem.find('{', w);
      size_t cb = rem.rfind('}');
      if (ob == std::string::npos || cb == std::string::npos || cb < ob)
        throw std::runtime_error("bad with-clause: " + r);
      j.subst = parse_with_clause(rem.substr(ob + 1, cb - ob - 1), sig);
      j.has_subst = true;
      rem = trim(rem.substr(0, w)) + " " + trim(rem.substr(cb + 1));
    }
    std::istringstream rs(rem);
    std::string tok;
    bool from_seen = false;
    while (rs >> tok) {
      if (tok == "from") {
        from_seen = true;
        continue;
      }
      if (!from_seen && j.name.empty()) {
        j.name = tok;
      } else {
        j.lines.push_back(std::stoi(tok));
      }
    }
  };

  if (kw == "law") {
    j.kind = Justification::Kind::Law;
    parse_with_and_from(rest());
    if (j.name.empty()) throw std::runtime_error("law citation needs a name");
  } else if (kw == "hyp") {
    j.kind = Justification::Kind::Hyp;
    int k;
    in >> k;
    j.lines.push_back(k);
  } else if (kw == "rule") {
    j.kind = Justification::Kind::Rule;
    parse_with_and_from(rest());
    if (j.name.empty()) throw std::runtime_error("rule citation needs a name");
  } else if (kw == "mp") {
    j.kind = Justification::Kind::Mp;
    int a, b;
    in >> a >> b;
    j.lines.push_back(a);
    j.lines.push_back(b);
  } else if (kw == "gen") {
    j.kind = Justification::Kind::Gen;
    std::string v, fromkw;
    int a;
    in >> v >> fromkw >> a;
    if (fromkw != "from") throw std::runtime_error("gen syntax: gen x from N");
    j.gen_var = v;
    j.lines.push_back(a);
  } else {
    throw std::runtime_error("unknown justification: " + kw);
  }
  return j;
}

} // namespace

ProofScript parse_script(const std::string& text, const Signature& sig) {
  ProofScript sc;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    try {
      if (line.rfind("system ", 0) == 0) {
        sc.system_name = trim(line.substr(7));
      } else if (line.rfind("mode ", 0) == 0) {
        std::string m = trim(line.substr(5));
        if (m == "theorem") sc.mode = ScriptMode::Theorem;
        else if (m == "hypotheses") sc.mode = ScriptMode::Hypotheses;
        else if (m == "rule-derivation") sc.mode = ScriptMode::RuleDerivation;
        else throw std::runtime_error("unknown mode: " + m);
      } else if (line.rfind("hyp ", 0) == 0) {
        size_t colon = line.find(':');
        if (colon == std::string::npos) throw std::runtime_error("hyp needs ':'");
        int n = std::stoi(trim(line.substr(4, colon - 4)));
        if (n != static_cast<int>(sc.hypotheses.size()) + 1)
          throw std::runtime_error("hypotheses must be numbered consecutively");
        sc.hypotheses.push_back(parse_formula(trim(line.substr(colon + 1)), sig));
      } else if (line.rfind("premise-rule ", 0) == 0) {
        size_t colon = line.find(':');
        if (colon == std::string::npos)
          throw std::runtime_error("premise-rule needs ':'");
        Rule r;
        r.name = trim(line.substr(13, colon - 13));
        std::string body = trim(line.substr(colon + 1));
        auto parts = split_top(body, '/');
        if (parts.size() != 2)
          throw std::runtime_error("premise-rule needs 'F1, ..., Fm / G'");
        if (!parts[0].empty())
          for (const auto& p : split_top(parts[0], ','))
            if (!p.empty()) r.premises.push_back(parse_formula(p, sig));
        r.conclusion = parse_formula(parts[1], sig);
        sc.premise_rules.push_back(std::move(r));
      } else if (line.rfind("eigen:", 0) == 0) {
        std::istringstream es(line.substr(6));
        std::string e;
        while (es >> e) sc.eigen.push_back(e);
      } else if (line.rfind("goal ", 0) == 0) {
        std::string body = trim(line.substr(5));
        auto parts = split_top(body, '/');
        if (parts.size() == 2) {
          if (!parts[0].empty())
            for (const auto& p : split_top(parts[0], ','))
              if (!p.empty()) sc.goal_premises.push_back(parse_formula(p, sig));
          sc.goal = parse_formula(parts[1], sig);
        } else {
          sc.goal = parse_formula(body, sig);
        }
      } else if (line.rfind("qed ", 0) == 0) {
        sc.qed_line = std::stoi(trim(line.substr(4)));
      } else {
        // numbered proof line: N. FORMULA by JUST
        size_t dot = line.find('.');
        if (dot == std::string::npos)
          throw std::runtime_error("expected 'N. FORMULA by JUST'");
        ScriptLine sl;
        sl.number = std::stoi(line.substr(0, dot));
        std::string rest = line.substr(dot + 1);
        size_t by = rest.rfind(" by ");
        if (by == std::string::npos)
          throw std::runtime_error("proof line needs 'by JUST'");
        sl.formula = parse_formula(trim(rest.substr(0, by)), sig);
        sl.just = parse_just(trim(rest.substr(by + 4)), sig);
        sc.lines.push_back(std::move(sl));
      }
    } catch (const std::exception& e) {
      throw std::runtime_error("script line " + std::to_string(lineno) + ": " +
                               e.what());
    }
  }
  return sc;
}

ProofScript load_script_file(const std::string& path, const Signature& sig) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open script: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_script(ss.str(), sig);
}

} // namespace qhc
