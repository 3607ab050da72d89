#include <doctest.h>

#include "qhc/calculi.hpp"
#include "qhc/parser.hpp"

using namespace qhc;

TEST_CASE("builtin systems exist with the advertised content") {
  auto names = builtin_system_names();
  for (const char* n : {"QC", "QH", "QHC-full", "QHC-simplified", "QS4", "QH4", "S4pr"})
    CHECK(std::find(names.begin(), names.end(), n) != names.end());

  const DerivationSystem& s = builtin_system("QHC-simplified");
  // 2 mixing rules + the 4 mixing laws + consistency law on top of QH + QC.
  CHECK(s.find_rule("nec-bang"));
  CHECK(s.find_rule("nec-query"));
  CHECK(s.find_law("L-eval"));
  CHECK(s.find_law("L-unit"));
  CHECK(s.find_law("L-bang-dist"));
  CHECK(s.find_law("L-query-dist"));
  CHECK(s.find_law("L-consist"));
  CHECK(alpha_equal(s.find_law("L-eval")->formula, parse_formula("?!p -> p", s.sig)));

  const DerivationSystem& qs4 = builtin_system("QS4");
  CHECK(qs4.find_law("s4-t"));
  CHECK(qs4.find_law("s4-4"));
  CHECK(qs4.find_law("s4-k"));
  CHECK(qs4.find_rule("nec-box"));
  CHECK(qs4.find_law("s4-t")->formula->lhs->kind == Kind::BoxPrim);

  const DerivationSystem& s4pr = builtin_system("S4pr");
  CHECK(s4pr.find_law("s4pr-1"));
  CHECK(s4pr.find_law("s4pr-2"));
  CHECK(s4pr.find_law("s4pr-3"));
  CHECK(s4pr.find_rule("s4pr-star"));

  const DerivationSystem& qh4 = builtin_system("QH4");
  CHECK(qh4.find_law("h4-unit"));
  CHECK(qh4.find_law("h4-consist"));
  CHECK_THROWS(builtin_system("QXYZ"));
}

TEST_CASE("theorem corpus covers the required entries") {
  auto corpus = theorem_corpus();
  auto find = [&](const std::string& n) -> const CorpusEntry* {
    for (const auto& e : corpus)
      if (e.name == n) return &e;
    return nullptr;
  };
  for (const char* n :
       {"th-3.4-1", "th-3.4-2", "th-3.4-3", "galois-fwd", "galois-bwd", "box-1",
        "box-2", "box-3", "box-4", "nabla-1", "nabla-2", "nabla-3", "nabla-4",
        "s4pr-neg-bot", "s4pr-co-nec", "s4pr-intro", "bundle-2d", "bundle-1d",
        "bundle-1a-fwd", "bundle-1a-bwd", "bundle-2a"}) {
    const CorpusEntry* e = find(n);
    REQUIRE_MESSAGE(e, n);
    CHECK(e->scripted);
  }
  int scripted = 0;
  for (const auto& e : corpus) scripted += e.scripted ? 1 : 0;
  CHECK(scripted >= 20);
}

TEST_CASE("corpus manifest round-trips through the printer") {
  auto corpus = theorem_corpus();
  std::string m = corpus_manifest(corpus);
  CHECK(m.find("galois-fwd ; QHC-simplified ; ?alpha -> p / alpha -> !p ; scripted") !=
        std::string::npos);
}
