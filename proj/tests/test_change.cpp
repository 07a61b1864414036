// Copyright 2026 The sechange Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "doctest.h"
#include "helpers.hpp"
#include "sechange/change.hpp"
#include "sechange/postulates.hpp"
#include "sechange/semantics.hpp"

using namespace sechange;
using helpers::alpha;
using helpers::prog;
using helpers::se_set;

namespace {

bool equiv_to(const ChangeResult& r, const std::string& target_text) {
  Program target = prog(target_text);
  return r.se == se_models(target, r.alphabet);
}

}  // namespace

TEST_CASE("expansion examples 1-8") {
  SUBCASE("1: fact plus its denial has no SE models") {
    Alphabet a = alpha({"p"});
    CHECK(expand(prog("p."), prog(":- p."), a).se.empty());
  }
  SUBCASE("2: conditional plus denial leaves ({},{})") {
    Alphabet a = alpha({"p", "q"});
    ChangeResult r = expand(prog("p :- q."), prog(":- p."), a);
    CHECK(r.se == se_set(a, {"(,)"}));
  }
  SUBCASE("3: chaining collapses to facts") {
    Alphabet a = alpha({"p", "q"});
    ChangeResult r = expand(prog("p."), prog("q :- p."), a);
    CHECK(equiv_to(r, "p. q."));
  }
  SUBCASE("4: the two default rules combine verbatim") {
    Alphabet a = alpha({"p", "q"});
    ChangeResult r = expand(prog("p :- not q."), prog("q :- not p."), a);
    CHECK(equiv_to(r, "p :- not q. q :- not p."));
  }
  SUBCASE("5") {
    Alphabet a = alpha({"p", "q"});
    ChangeResult r = expand(prog("p :- not q. q :- not p."), prog("p :- q."), a);
    CHECK(equiv_to(r, "p :- q. p :- not q."));
  }
  SUBCASE("6: expansion with the disjunction keeps the disjunction") {
    Alphabet a = alpha({"p", "q"});
    ChangeResult r = expand(prog("p :- not q. q :- not p."), prog("p ; q."), a);
    CHECK(equiv_to(r, "p ; q."));
  }
  SUBCASE("7") {
    Alphabet a = alpha({"p", "q"});
    ChangeResult r = expand(prog("p ; q."), prog(":- q."), a);
    CHECK(equiv_to(r, "p. :- q."));
  }
  SUBCASE("8") {
    Alphabet a = alpha({"p", "q"});
    ChangeResult r = expand(prog("p ; q."), prog(":- p, q."), a);
    CHECK(equiv_to(r, "p ; q. :- p, q."));
  }
}

TEST_CASE("revision examples 1-5") {
  SUBCASE("1: over the language {p,q}") {
    Alphabet a = alpha({"p", "q"});
    ChangeResult r = revise(prog("p :- not p."), prog(":- p."), a);
    CHECK(r.se == se_set(a, {"(,)", "(,q)", "(q,q)"}));
    CHECK(equiv_to(r, ":- p."));
  }
  SUBCASE("2") {
    Alphabet a = alpha({"p", "q"});
    ChangeResult r = revise(prog("p. q."), prog(":- q."), a);
    CHECK(r.se == se_set(a, {"(p,p)"}));
    CHECK(equiv_to(r, "p. :- q."));
  }
  SUBCASE("3: believing both, told one is false") {
    Alphabet a = alpha({"p", "q"});
    ChangeResult r = revise(prog("p. q."), prog(":- p, q."), a);
    CHECK(equiv_to(r, "p ; q. :- p, q."));
  }
  SUBCASE("4: the SE-level split of example 3") {
    Alphabet a = alpha({"p", "q"});
    ChangeResult r = revise(prog(":- not p. :- not q."), prog(":- p, q."), a);
    CHECK(equiv_to(r, ":- not p, not q. :- p, q."));
  }
  SUBCASE("5") {
    Alphabet a = alpha({"p", "q"});
    ChangeResult r = revise(prog(":- p. :- q."), prog("p ; q."), a);
    CHECK(equiv_to(r, "p ; q. :- p, q."));
  }
}

TEST_CASE("weak revision: the distinguishing example") {
  Alphabet a = alpha({"p", "q", "r"});
  Program p = prog(":- p. :- q. :- r.");
  Program q = prog("r. p :- q. p :- not q.");
  SeModelSet sq = se_models(q, a);
  CHECK(sq == se_set(a, {"(r,pqr)", "(pr,pr)", "(pr,pqr)", "(pqr,pqr)"}));

  ChangeResult strict = revise(p, q, a);
  CHECK(strict.se == se_set(a, {"(pr,pr)"}));
  CHECK(equiv_to(strict, "p. :- q. r."));

  ChangeResult weak = revise_weak(p, q, a);
  CHECK(weak.se == se_set(a, {"(r,pqr)", "(pr,pr)", "(pqr,pqr)"}));
}

TEST_CASE("weak revision falls back to SE(Q) for unsatisfiable P") {
  Alphabet a = alpha({"p"});
  Program bad = prog("p. :- p.");
  ChangeResult r = revise_weak(bad, prog("p."), a);
  CHECK(r.se == se_models(prog("p."), a));
  ChangeResult r2 = revise(bad, prog("p."), a);
  CHECK(r2.se == se_models(prog("p."), a));
}

TEST_CASE("both operands unsatisfiable yields the unsatisfiable set") {
  Alphabet a = alpha({"p"});
  Program bad = prog("p. :- p.");
  CHECK(revise(bad, bad, a).se.empty());
  CHECK(revise_card(bad, bad, a).se.empty());
  CHECK(revise_weak(bad, bad, a).se.empty());
}

TEST_CASE("cardinality revision: the distinction example") {
  Alphabet a = alpha({"p", "q", "r"});
  Program p = prog("p. q. r.");
  Program q = prog("p ; q. r :- q. :- p, r.");
  CHECK(se_models(p, a) == se_set(a, {"(pqr,pqr)"}));
  CHECK(se_models(q, a) == se_set(a, {"(p,p)", "(qr,qr)"}));
  CHECK(revise(p, q, a).se == se_set(a, {"(p,p)", "(qr,qr)"}));
  CHECK(revise_card(p, q, a).se == se_set(a, {"(qr,qr)"}));
}

TEST_CASE("cardinality revision matches subset revision on examples 1-5") {
  auto same = [](const std::string& pt, const std::string& qt,
                 std::vector<std::string> atoms) {
    Alphabet a = Alphabet(std::move(atoms));
    Program p = prog(pt), q = prog(qt);
    return revise(p, q, a).se == revise_card(p, q, a).se;
  };
  CHECK(same("p :- not p.", ":- p.", {"p", "q"}));
  CHECK(same("p. q.", ":- q.", {"p", "q"}));
  CHECK(same("p. q.", ":- p, q.", {"p", "q"}));
  CHECK(same(":- not p. :- not q.", ":- p, q.", {"p", "q"}));
  CHECK(same(":- p. :- q.", "p ; q.", {"p", "q"}));
}

TEST_CASE("RA6 counterexample values") {
  Alphabet a = alpha({"p", "q", "r", "s"});
  Program p = prog(
      "p ; not p.\n"
      "q :- p.\n"
      "r :- p.\n"
      "s :- p.\n"
      ":- not p, q.\n"
      ":- not p, r.\n"
      ":- not p, s.\n");
  Program q = prog("p ; r. :- q. :- p, r. :- p, s. s ; not s :- r.");
  Program r = prog("p ; r. :- q. :- p, r. :- p, s. s :- r.");

  Program qr = canonical_glp(expand(q, r, a).se).program;
  CHECK(revise(p, qr, a).se == se_set(a, {"(rs,rs)", "(p,p)"}));
  CHECK(expand(canonical_glp(revise(p, q, a).se).program, r, a).se ==
        se_set(a, {"(p,p)"}));
}

TEST_CASE("augmentation instance: subset vs cardinality") {
  // Programs realized from the listed SE sets via the canonical construction.
  Alphabet a = alpha({"a", "b", "c"});
  Program p = canonical_glp(se_set(a, {"(a,a)", "(ab,ab)"})).program;
  Program q = canonical_glp(se_set(a, {"(ab,ab)", "(ac,ac)", "(b,b)"})).program;
  Program r = canonical_glp(se_set(a, {"(ac,ac)", "(b,b)"})).program;

  CHECK(revise_card(p, q, a).se == se_set(a, {"(ab,ab)"}));
  Program pq_card = canonical_glp(revise_card(p, q, a).se).program;
  CHECK(revise_card(pq_card, r, a).se == se_set(a, {"(b,b)"}));
  CHECK(revise_card(p, r, a).se == se_set(a, {"(ac,ac)", "(b,b)"}));

  // Under subset distance both diffs {a} and {b,c} are incomparable, so the
  // two-step and direct revisions coincide on this instance.
  Program pq = canonical_glp(revise(p, q, a).se).program;
  CHECK(revise(pq, r, a).se == se_set(a, {"(ac,ac)", "(b,b)"}));
  CHECK(revise(p, r, a).se == se_set(a, {"(ac,ac)", "(b,b)"}));
}

TEST_CASE("containments: revise within weak, card within revise") {
  for (int t = 0; t < 200; ++t) {
    GeneratorConfig c1, c2;
    c1.atom_count = c2.atom_count = 3;
    c1.max_rules = c2.max_rules = 3;
    c1.seed = 71000 + 2 * t;
    c2.seed = 71001 + 2 * t;
    Program p = random_program(c1);
    Program q = random_program(c2);
    Alphabet a = alpha({"a", "b", "c"});
    SeModelSet strict = revise(p, q, a).se;
    SeModelSet weak = revise_weak(p, q, a).se;
    SeModelSet card = revise_card(p, q, a).se;
    for (SePair e : strict.elems()) CHECK(weak.contains(e));
    for (SePair e : card.elems()) CHECK(strict.contains(e));
  }
}

TEST_CASE("all change results are well-defined and round-trip") {
  for (int t = 0; t < 100; ++t) {
    GeneratorConfig c1, c2;
    c1.atom_count = c2.atom_count = 3;
    c1.max_rules = c2.max_rules = 3;
    c1.seed = 72000 + 2 * t;
    c2.seed = 72001 + 2 * t;
    Program p = random_program(c1);
    Program q = random_program(c2);
    Alphabet a = alpha({"a", "b", "c"});
    for (const ChangeResult& r :
         {expand(p, q, a), revise(p, q, a), revise_weak(p, q, a), revise_card(p, q, a),
          join(p, q, a)}) {
      CHECK(is_well_defined(r.se));
      CHECK(se_models(r.canonical.program, a) == r.se);
    }
  }
}

TEST_CASE("meet coincides with expand; join is the SE union") {
  Alphabet a = alpha({"p", "q"});
  Program p = prog("p ; q.");
  Program q = prog(":- q.");
  CHECK(meet(p, q, a).se == expand(p, q, a).se);
  SeModelSet u = join(p, q, a).se;
  for (SePair e : se_models(p, a).elems()) CHECK(u.contains(e));
  for (SePair e : se_models(q, a).elems()) CHECK(u.contains(e));
  CHECK(join(p, p, a).se == se_models(p, a));
}
