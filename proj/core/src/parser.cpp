#include "qhc/parser.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace qhc {

namespace {

enum class Tok {
  End, Ident, LParen, RParen, Comma, Dot, Amp, Bar, Tilde, Query, Bang,
  Arrow, Iff, ProofSep, LBracket, RBracket, LBrace, RBrace, Star, Prime,
  KwForall, KwExists, KwBox, KwNabla, KwDia, KwTop, KwBot, KwTriv, KwAbs
};

struct Token {
  Tok kind;
  std::string text;
  size_t pos;
};

class Lexer {
 public:
  explicit Lexer(const std::string& s) : s_(s) {}

  Token next() {
    skip_ws();
    size_t p = i_;
    if (i_ >= s_.size()) return {Tok::End, "", p};
    // Unicode operator spellings.
    static const std::pair<const char*, Tok> uni[] = {
        {"∧", Tok::Amp},   {"∨", Tok::Bar},    {"→", Tok::Arrow},
        {"↔", Tok::Iff},   {"¬", Tok::Tilde},  {"∀", Tok::KwForall},
        {"∃", Tok::KwExists}, {"□", Tok::KwBox}, {"∇", Tok::KwNabla},
        {"◇", Tok::KwDia}, {"⊤", Tok::KwTop},  {"⊥", Tok::KwBot},
        {"✓", Tok::KwTriv}, {"⨳", Tok::KwAbs}, {"∴", Tok::ProofSep},
        {"∵", Tok::ProofSep}};
    for (const auto& [u, t] : uni) {
      size_t n = std::string(u).size();
      if (s_.compare(i_, n, u) == 0) {
        i_ += n;
        return {t, u, p};
      }
    }
    char c = s_[i_];
    if (c == '-' && i_ + 1 < s_.size() && s_[i_ + 1] == '>') { i_ += 2; return {Tok::Arrow, "->", p}; }
    if (c == '<' && s_.compare(i_, 3, "<->") == 0) { i_ += 3; return {Tok::Iff, "<->", p}; }
    if (c == ':' && i_ + 1 < s_.size() && s_[i_ + 1] == ':') { i_ += 2; return {Tok::ProofSep, "::", p}; }
    switch (c) {
      case '(': ++i_; return {Tok::LParen, "(", p};
      case ')': ++i_; return {Tok::RParen, ")", p};
      case ',': ++i_; return {Tok::Comma, ",", p};
      case '.': ++i_; return {Tok::Dot, ".", p};
      case '&': ++i_; return {Tok::Amp, "&", p};
      case '|': ++i_; return {Tok::Bar, "|", p};
      case '~': ++i_; return {Tok::Tilde, "~", p};
      case '?': ++i_; return {Tok::Query, "?", p};
      case '!': ++i_; return {Tok::Bang, "!", p};
      case '[': ++i_; return {Tok::LBracket, "[", p};
      case ']': ++i_; return {Tok::RBracket, "]", p};
      case '{': ++i_; return {Tok::LBrace, "{", p};
      case '}': ++i_; return {Tok::RBrace, "}", p};
      case '*': ++i_; return {Tok::Star, "*", p};
      case '\'': ++i_; return {Tok::Prime, "'", p};
      default: break;
    }
    if (isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t j = i_;
      while (j < s_.size() &&
             (isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_' || s_[j] == '^'))
        ++j;
      std::string w = s_.substr(i_, j - i_);
      i_ = j;
      if (w == "forall") return {Tok::KwForall, w, p};
      if (w == "exists") return {Tok::KwExists, w, p};
      if (w == "box") return {Tok::KwBox, w, p};
      if (w == "nabla") return {Tok::KwNabla, w, p};
      if (w == "dia") return {Tok::KwDia, w, p};
      if (w == "Top") return {Tok::KwTop, w, p};
      if (w == "Bot") return {Tok::KwBot, w, p};
      if (w == "Triv") return {Tok::KwTriv, w, p};
      if (w == "Abs") return {Tok::KwAbs, w, p};
      return {Tok::Ident, w, p};
    }
    throw ParseError(p, std::string("unexpected character '") + c + "'");
  }

  size_t save() const { return i_; }
  void restore(size_t i) { i_ = i; }

 private:
  void skip_ws() {
    while (i_ < s_.size() && isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  const std::string& s_;
  size_t i_ = 0;
};

class Parser {
 public:
  Parser(const std::string& text, const Signature& sig) : lex_(text), sig_(sig) {
    advance();
  }

  FormulaPtr formula() {
    FormulaPtr f = iff();
    return f;
  }

  FormulaPtr parse_all() {
    FormulaPtr f = formula();
    expect(Tok::End, "end of input");
    return f;
  }

  TermPtr parse_term_all() {
    TermPtr t = term();
    expect(Tok::End, "end of input");
    return t;
  }

 private:
  void advance() {
    size_t s = lex_.save();
    tok_pos_ = s;
    tok_ = lex_.next();
  }

  void expect(Tok k, const char* what) {
    if (tok_.kind != k) throw ParseError(tok_.pos, std::string("expected ") + what);
    if (k != Tok::End) advance();
  }

  FormulaPtr iff() {
    FormulaPtr f = imp();
    while (tok_.kind == Tok::Iff) {
      advance();
      FormulaPtr g = imp();
      f = Formula::iff(f, g);
    }
    return f;
  }

  FormulaPtr imp() {
    FormulaPtr f = disj();
    if (tok_.kind == Tok::Arrow) {
      advance();
      FormulaPtr g = imp(); // right-associative
      return Formula::imp(f, g);
    }
    return f;
  }

  FormulaPtr disj() {
    FormulaPtr f = conj();
    while (tok_.kind == Tok::Bar) {
      advance();
      f = Formula::disj(f, conj());
    }
    return f;
  }

  FormulaPtr conj() {
    FormulaPtr f = prefix();
    while (tok_.kind == Tok::Amp) {
      advance();
      f = Formula::conj(f, prefix());
    }
    return f;
  }

  FormulaPtr prefix() {
    switch (tok_.kind) {
      case Tok::Tilde: {
        advance();
        return Formula::neg(prefix());
      }
      case Tok::Query: {
        size_t p = tok_.pos;
        advance();
        if (!sig_.allow_query_bang) throw ParseError(p, "? not in this language");
        return Formula::query(prefix());
      }
      case Tok::Bang: {
        size_t p = tok_.pos;
        advance();
        if (!sig_.allow_query_bang) throw ParseError(p, "! not in this language");
        return Formula::bang(prefix());
      }
      case Tok::KwBox: {
        size_t p = tok_.pos;
        advance();
        FormulaPtr body = prefix();
        if (sig_.allow_box) return Formula::box_prim(body);
        if (!sig_.allow_query_bang) throw ParseError(p, "box not in this language");
        return Formula::box(body);
      }
      case Tok::KwNabla: {
        size_t p = tok_.pos;
        advance();
        FormulaPtr body = prefix();
        if (sig_.allow_nabla) return Formula::nabla_prim(body);
        if (!sig_.allow_query_bang) throw ParseError(p, "nabla not in this language");
        return Formula::nabla(body);
      }
      case Tok::KwDia: {
        size_t p = tok_.pos;
        advance();
        FormulaPtr body = prefix();
        if (sig_.allow_box) {
          auto inner = Formula::neg(body);
          auto boxed = Formula::box_prim(inner);
          return Formula::imp(boxed, Formula::bot(), Sugar::Dia);
        }
        if (!sig_.allow_query_bang) throw ParseError(p, "dia not in this language");
        return Formula::dia(body);
      }
      case Tok::KwForall:
      case Tok::KwExists: {
        bool uni = tok_.kind == Tok::KwForall;
        advance();
        std::vector<std::string> vars;
        while (tok_.kind == Tok::Ident) {
          vars.push_back(tok_.text);
          advance();
        }
        if (vars.empty()) throw ParseError(tok_.pos, "expected bound variable");
        expect(Tok::Dot, "'.'");
        FormulaPtr body = prefix();
        for (auto it = vars.rbegin(); it != vars.rend(); ++it)
          body = uni ? Formula::forall(*it, body) : Formula::exists(*it, body);
        return body;
      }
      default:
        break;
    }
    // Proof-term formula `term :: prefix` (requires backtracking against atoms).
    if (sig_.allow_proof_terms &&
        (tok_.kind == Tok::Ident || tok_.kind == Tok::Star)) {
      size_t saved_pos = tok_pos_;
      try {
        TermPtr t = term();
        if (tok_.kind == Tok::ProofSep) {
          advance();
          return Formula::proof_of(t, prefix());
        }
      } catch (const ParseError&) {
        // not a term; fall through to atom
      }
      lex_.restore(saved_pos);
      advance();
    }
    return atom();
  }

  FormulaPtr atom() {
    switch (tok_.kind) {
      case Tok::LParen: {
        advance();
        FormulaPtr f = formula();
        expect(Tok::RParen, "')'");
        return f;
      }
      case Tok::KwTop: advance(); return Formula::top();
      case Tok::KwBot: advance(); return Formula::bot();
      case Tok::KwTriv: advance(); return Formula::triv();
      case Tok::KwAbs: advance(); return Formula::absurd();
      case Tok::Ident: {
        std::string name = tok_.text;
        size_t p = tok_.pos;
        advance();
        std::vector<TermPtr> args;
        if (tok_.kind == Tok::LParen) {
          advance();
          args.push_back(term());
          while (tok_.kind == Tok::Comma) {
            advance();
            args.push_back(term());
          }
          expect(Tok::RParen, "')'");
        }
        if (!sig_.declared(name))
          throw ParseError(p, "undeclared identifier: " + name);
        return Formula::atom(sig_, name, std::move(args));
      }
      default:
        throw ParseError(tok_.pos, "expected formula");
    }
  }

  TermPtr term() {
    TermPtr t;
    if (tok_.kind == Tok::Ident) {
      if (sig_.declared(tok_.text))
        throw ParseError(tok_.pos, "predicate used as term: " + tok_.text);
      t = Term::mk_var(tok_.text);
      advance();
    } else if (tok_.kind == Tok::Star) {
      size_t p = tok_.pos;
      advance();
      if (!sig_.allow_proof_terms) throw ParseError(p, "*{.} not in this language");
      expect(Tok::LBrace, "'{'");
      FormulaPtr f = formula();
      expect(Tok::RBrace, "'}'");
      t = Term::mk_star(f);
    } else {
      throw ParseError(tok_.pos, "expected term");
    }
    for (;;) {
      if (tok_.kind == Tok::Prime) {
        if (!sig_.allow_proof_terms)
          throw ParseError(tok_.pos, "' not in this language");
        advance();
        t = Term::mk_prime(t);
      } else if (tok_.kind == Tok::LBracket) {
        if (!sig_.allow_proof_terms)
          throw ParseError(tok_.pos, "[.] not in this language");
        advance();
        TermPtr u = term();
        expect(Tok::RBracket, "']'");
        t = Term::mk_app(t, u);
      } else {
        break;
      }
    }
    return t;
  }

  Lexer lex_;
  const Signature& sig_;
  Token tok_;
  size_t tok_pos_ = 0;
};

} // namespace

FormulaPtr parse_formula(const std::string& text, const Signature& sig) {
  Parser p(text, sig);
  return p.parse_all();
}

TermPtr parse_term(const std::string& text, const Signature& sig) {
  Parser p(text, sig);
  return p.parse_term_all();
}

Signature parse_signature(const std::string& text) {
  Signature sig;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;
    std::string name;
    unsigned arity;
    if (kw == "problem" || kw == "pred") {
      if (!(ls >> name >> arity))
        throw std::runtime_error("bad signature line: " + line);
      sig.declare(name, arity, kw == "problem" ? PredSort::Problem : PredSort::Proper);
    } else {
      throw std::runtime_error("bad signature keyword: " + kw);
    }
  }
  return sig;
}

Signature load_signature_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open signature file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_signature(ss.str());
}

// ---------------------------------------------------------------------------
// Printer

namespace {

// Precedence levels: iff=0, imp=1, or=2, and=3, prefix=4, atom=5.
int level_of(const FormulaPtr& f);

bool is_neg_shape(const FormulaPtr& f) {
  return f->kind == Kind::Imp && f->sugar == Sugar::Neg &&
         ((f->lhs->sort == Sort::C && f->rhs->kind == Kind::BotC) ||
          (f->lhs->sort == Sort::I && f->rhs->kind == Kind::Absurd));
}

bool is_iff_shape(const FormulaPtr& f) {
  return f->kind == Kind::And && f->sugar == Sugar::Iff &&
         f->lhs->kind == Kind::Imp && f->rhs->kind == Kind::Imp &&
         struct_equal(f->lhs->lhs, f->rhs->rhs) &&
         struct_equal(f->lhs->rhs, f->rhs->lhs);
}

bool is_box_shape(const FormulaPtr& f) {
  return (f->kind == Kind::Query && f->sugar == Sugar::Box &&
          f->lhs->kind == Kind::Bang) ||
         f->kind == Kind::BoxPrim;
}

bool is_nabla_shape(const FormulaPtr& f) {
  return (f->kind == Kind::Bang && f->sugar == Sugar::Nabla &&
          f->lhs->kind == Kind::Query) ||
         f->kind == Kind::NablaPrim;
}

// dia F = Imp(Query[Box](Bang(Imp[Neg](F, Bot))), Bot) or primitive-box form.
const FormulaPtr* dia_body(const FormulaPtr& f) {
  if (f->kind != Kind::Imp || f->sugar != Sugar::Dia) return nullptr;
  if (f->rhs->kind != Kind::BotC) return nullptr;
  const FormulaPtr& b = f->lhs;
  if (b->kind == Kind::BoxPrim) {
    if (is_neg_shape(b->lhs)) return &b->lhs->lhs;
    return nullptr;
  }
  if (b->kind == Kind::Query && b->lhs->kind == Kind::Bang &&
      is_neg_shape(b->lhs->lhs))
    return &b->lhs->lhs->lhs;
  return nullptr;
}

int level_of(const FormulaPtr& f) {
  if (is_iff_shape(f)) return 0;
  if (is_neg_shape(f) || dia_body(f)) return 4;
  switch (f->kind) {
    case Kind::Imp: return 1;
    case Kind::Or: return 2;
    case Kind::And: return 3;
    case Kind::TopC: case Kind::BotC: case Kind::Triv: case Kind::Absurd:
    case Kind::Atom:
      return 5;
    default: return 4; // prefix operators, quantifiers, proof-of
  }
}

void print_rec(const FormulaPtr& f, int min_level, std::string& out);

void print_term_rec(const TermPtr& t, std::string& out) {
  switch (t->kind) {
    case TermKind::Var: out += t->var; return;
    case TermKind::Prime:
      print_term_rec(t->sub, out);
      out += "'";
      return;
    case TermKind::App:
      print_term_rec(t->sub, out);
      out += "[";
      print_term_rec(t->arg, out);
      out += "]";
      return;
    case TermKind::Star:
      out += "*{";
      print_rec(t->star_body, 0, out);
      out += "}";
      return;
  }
}

void print_rec(const FormulaPtr& f, int min_level, std::string& out) {
  int lvl = level_of(f);
  bool paren = lvl < min_level;
  if (paren) out += "(";

  if (is_iff_shape(f)) {
    print_rec(f->lhs->lhs, 1, out);
    out += " <-> ";
    print_rec(f->lhs->rhs, 1, out);
  } else if (is_neg_shape(f)) {
    out += "~";
    print_rec(f->lhs, 4, out);
  } else if (const FormulaPtr* body = dia_body(f)) {
    out += "dia ";
    print_rec(*body, 4, out);
  } else if (is_box_shape(f)) {
    out += "box ";
    print_rec(f->kind == Kind::BoxPrim ? f->lhs : f->lhs->lhs, 4, out);
  } else if (is_nabla_shape(f)) {
    out += "nabla ";
    print_rec(f->kind == Kind::NablaPrim ? f->lhs : f->lhs->lhs, 4, out);
  } else {
    switch (f->kind) {
      case Kind::TopC: out += "Top"; break;
      case Kind::BotC: out += "Bot"; break;
      case Kind::Triv: out += "Triv"; break;
      case Kind::Absurd: out += "Abs"; break;
      case Kind::Atom: {
        out += f->pred;
        if (!f->args.empty()) {
          out += "(";
          for (size_t i = 0; i < f->args.size(); ++i) {
            if (i) out += ", ";
            print_term_rec(f->args[i], out);
          }
          out += ")";
        }
        break;
      }
      case Kind::And:
        print_rec(f->lhs, 3, out);
        out += " & ";
        print_rec(f->rhs, 4, out);
        break;
      case Kind::Or:
        print_rec(f->lhs, 2, out);
        out += " | ";
        print_rec(f->rhs, 3, out);
        break;
      case Kind::Imp:
        print_rec(f->lhs, 2, out);
        out += " -> ";
        print_rec(f->rhs, 1, out);
        break;
      case Kind::Forall:
      case Kind::Exists:
        out += f->kind == Kind::Forall ? "forall " : "exists ";
        out += f->var;
        out += ". ";
        print_rec(f->lhs, 4, out);
        break;
      case Kind::Query:
        out += "?";
        print_rec(f->lhs, 4, out);
        break;
      case Kind::Bang:
        out += "!";
        print_rec(f->lhs, 4, out);
        break;
      case Kind::BoxPrim:
        out += "box ";
        print_rec(f->lhs, 4, out);
        break;
      case Kind::NablaPrim:
        out += "nabla ";
        print_rec(f->lhs, 4, out);
        break;
      case Kind::ProofOf:
        print_term_rec(f->term, out);
        out += "::";
        print_rec(f->lhs, 5, out);
        break;
    }
  }
  if (paren) out += ")";
}

} // namespace

std::string print_formula(const FormulaPtr& f) {
  std::string out;
  print_rec(f, 0, out);
  return out;
}

std::string print_term(const TermPtr& t) {
  std::string out;
  print_term_rec(t, out);
  return out;
}

} // namespace qhc
