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

#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "helpers.hpp"
#include "sechange/error.hpp"
#include "sechange/meta.hpp"
#include "sechange/semantics.hpp"

using namespace sechange;
using helpers::alpha;
using helpers::prog;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE_MESSAGE(in.good(), "cannot open " << path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string write_temp(const std::string& name, const std::string& content) {
  std::string path = std::string("/tmp/sechange_test_") + name;
  std::ofstream out(path, std::ios::binary);
  out << content;
  return path;
}

}  // namespace

TEST_CASE("relational_facts: the worked two-program example") {
  BeliefProfile psi{{prog(":- not p. :- not q."), prog("p ; q. :- p, q.")}, false};
  RelationalFacts f = relational_facts(psi, MetaTask::SetRevision);
  CHECK(f.alpha == 1);
  CHECK(f.n == 2);
  CHECK(f.facts == std::vector<std::string>{
                       "nbody(1,1,p).", "nbody(1,2,q).", "phead(2,1,p).",
                       "phead(2,1,q).", "pbody(2,2,p).", "pbody(2,2,q)."});
}

TEST_CASE("relational_facts: basic merging starts at index 0; empty P0 emits nothing") {
  BeliefProfile psi{{Program{}, prog("p.")}, true};
  RelationalFacts f = relational_facts(psi, MetaTask::BasicMerge);
  CHECK(f.alpha == 0);
  CHECK(f.n == 1);
  CHECK(f.facts == std::vector<std::string>{"phead(1,1,p)."});
}

TEST_CASE("relational_facts: single fact program") {
  BeliefProfile psi{{prog("p.")}, false};
  RelationalFacts f = relational_facts(psi, MetaTask::Arbitration);
  CHECK(f.facts == std::vector<std::string>{"phead(1,1,p)."});
  CHECK(f.max_rule_id == 1);
}

TEST_CASE("relational_facts: distinct rule sets give distinct fact sets") {
  BeliefProfile a{{prog("p. q :- p.")}, false};
  BeliefProfile b{{prog("p. q :- not p.")}, false};
  CHECK(relational_facts(a, MetaTask::Arbitration).facts !=
        relational_facts(b, MetaTask::Arbitration).facts);
}

TEST_CASE("emit_meta: module composition follows the task") {
  MetaProgram card = emit_meta(MetaTask::CardRevision);
  CHECK(card.module_list ==
        std::vector<std::string>{"pi_domain", "pi_models", "pi_result", "pi_card"});
  // the three weak constraints and the selector fact
  CHECK(std::count(card.text.begin(), card.text.end(), '~') == 3);
  CHECK(card.text.find("selector(2).") != std::string::npos);

  MetaProgram incl = emit_meta(MetaTask::SetRevision);
  CHECK(incl.module_list ==
        std::vector<std::string>{"pi_domain", "pi_models", "pi_order", "pi_result",
                                 "pi_witness", "pi_incl", "pi_violation", "pi_eq"});
  CHECK(incl.text.find(":~") == std::string::npos);
  CHECK(incl.text.find("spoil :- spoilcond(c), spoilcond(t).") != std::string::npos);

  MetaProgram basic = emit_meta(MetaTask::BasicMerge);
  CHECK(basic.text.find("selector(0).") != std::string::npos);
  CHECK(basic.text.find("prog(0).") != std::string::npos);
  CHECK(basic.text.find("notsubseteq(M,0,J)") != std::string::npos);

  MetaProgram arb = emit_meta(MetaTask::Arbitration);
  CHECK(arb.text.find("tout(I) ; tout(J) :- prog(I), prog(J), I != J.") !=
        std::string::npos);
  CHECK(arb.text.find("selector") == std::string::npos);
  CHECK(arb.text.find("violated(P,R,M)") != std::string::npos);
}

TEST_CASE("emit_meta matches the reviewed golden files byte-exactly") {
  const char* dir = SECHANGE_ENCODINGS_DIR;
  CHECK(emit_meta(MetaTask::CardRevision).text ==
        slurp(std::string(dir) + "/card-revision.lp"));
  CHECK(emit_meta(MetaTask::SetRevision).text ==
        slurp(std::string(dir) + "/set-revision.lp"));
  CHECK(emit_meta(MetaTask::BasicMerge).text ==
        slurp(std::string(dir) + "/basic-merge.lp"));
  CHECK(emit_meta(MetaTask::Arbitration).text ==
        slurp(std::string(dir) + "/arbitration.lp"));
}

TEST_CASE("extract_rho") {
  NamedSePair p = extract_rho({"resultH(a)", "resultT(a)", "resultT(b)", "dom(a)"});
  CHECK(p.here == std::vector<std::string>{"a"});
  CHECK(p.there == std::vector<std::string>{"a", "b"});

  NamedSePair empty = extract_rho({"dom(a)", "total"});
  CHECK(empty.here.empty());
  CHECK(empty.there.empty());

  CHECK_THROWS_AS(extract_rho({"resultH(a)"}), SolverError);
}

TEST_CASE("parse_answer_sets: braced lines with nested commas") {
  auto sets = parse_answer_sets(
      "dlv output header\n"
      "{in(1,a,c), resultT(a), resultH(a)}\n"
      "Best model: {resultT(b)}\n"
      "no braces here\n");
  REQUIRE(sets.size() == 2);
  CHECK(sets[0].count("in(1,a,c)") == 1);
  CHECK(sets[0].count("resultH(a)") == 1);
  CHECK(sets[1].count("resultT(b)") == 1);
  CHECK(parse_answer_sets("{}").size() == 1);
  CHECK(parse_answer_sets("{}")[0].empty());
}

TEST_CASE("crosscheck: equal run against a canned solver") {
  // P1 * P2 over {p,q}; the canned output lists exactly the native pairs.
  BeliefProfile psi{{prog("p. q."), prog(":- q.")}, false};
  Alphabet a = alpha({"p", "q"});
  // Native: SE(P1*P2) = {(p,p)}.
  std::string canned = "{resultH(p), resultT(p)}\n";
  std::string out = write_temp("canned_equal.txt", canned);
  SolverConfig solver{"cat " + out + " ; true {meta} {facts}", 10};
  CrosscheckReport rep = crosscheck(psi, MetaTask::SetRevision, solver);
  CHECK(rep.equal);
  CHECK(rep.native_only.empty());
  CHECK(rep.solver_only.empty());
  CHECK(rep.solver_pairs == std::vector<std::string>{"({p},{p})"});
}

TEST_CASE("crosscheck: negative control reports a nonempty diff") {
  BeliefProfile psi{{prog("p. q."), prog(":- q.")}, false};
  std::string canned = "{resultT(p)}\n{resultH(q), resultT(q)}\n";
  std::string out = write_temp("canned_diff.txt", canned);
  SolverConfig solver{"cat " + out + " ; true {meta} {facts}", 10};
  CrosscheckReport rep = crosscheck(psi, MetaTask::SetRevision, solver);
  CHECK_FALSE(rep.equal);
  CHECK(rep.native_only == std::vector<std::string>{"({p},{p})"});
  REQUIRE(rep.solver_only.size() == 2);
}

TEST_CASE("crosscheck: missing solver raises SolverError") {
  BeliefProfile psi{{prog("p."), prog("p.")}, false};
  SolverConfig solver{"definitely_not_a_solver_binary_xyz {meta} {facts}", 5};
  CHECK_THROWS_AS(crosscheck(psi, MetaTask::SetRevision, solver), SolverError);
}

TEST_CASE("crosscheck: profile arity validation") {
  BeliefProfile psi{{prog("p.")}, false};
  SolverConfig solver{"true", 5};
  CHECK_THROWS_AS(crosscheck(psi, MetaTask::SetRevision, solver), ModelSetError);
}
