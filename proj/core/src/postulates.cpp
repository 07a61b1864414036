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

#include "sechange/postulates.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "sechange/error.hpp"
#include "sechange/semantics.hpp"

namespace sechange {

namespace {

bool subseteq(const SeModelSet& x, const SeModelSet& y) {
  return std::all_of(x.elems().begin(), x.elems().end(),
                     [&](SePair p) { return y.contains(p); });
}

SeModelSet intersect(const SeModelSet& x, const SeModelSet& y) {
  std::vector<SePair> out;
  std::set_intersection(x.elems().begin(), x.elems().end(), y.elems().begin(),
                        y.elems().end(), std::back_inserter(out));
  return SeModelSet(x.alphabet(), std::move(out));
}

SeModelSet unite(const SeModelSet& x, const SeModelSet& y) {
  std::vector<SePair> out = x.elems();
  out.insert(out.end(), y.elems().begin(), y.elems().end());
  return SeModelSet(x.alphabet(), std::move(out));
}

Program program_of(const SeModelSet& s) { return canonical_glp(s).program; }

std::string describe(const char* tag, const Program& p) {
  return std::string(tag) + ":\n" + render_program(p);
}

std::string describe(const char* tag, const SeModelSet& s) {
  std::string body = format_se_set(s);
  if (body.empty()) body = "(no SE models)\n";
  return std::string(tag) + ":\n" + body;
}

class Suite {
 public:
  Suite(const char* name, std::uint64_t seed, int trial) {
    report_.suite = name;
    report_.seed = seed;
    report_.trial = trial;
  }

  void record(const std::string& name, Verdict v, std::string witness = {}) {
    report_.results.push_back(PostulateResult{name, v, std::move(witness)});
  }
  void check(const std::string& name, bool ok, std::string witness) {
    record(name, ok ? Verdict::Pass : Verdict::Fail, ok ? std::string() : std::move(witness));
  }
  void not_applicable(const std::string& name) { record(name, Verdict::NotApplicable); }

  PostulateReport take() { return std::move(report_); }

 private:
  PostulateReport report_;
};

}  // namespace

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::NotApplicable: return "n/a";
  }
  return "?";
}

const char* to_string(RevisionOp op) {
  switch (op) {
    case RevisionOp::Revise: return "revise";
    case RevisionOp::ReviseWeak: return "revise_weak";
    case RevisionOp::ReviseCard: return "revise_card";
  }
  return "?";
}

bool PostulateReport::all_pass() const {
  return std::none_of(results.begin(), results.end(),
                      [](const PostulateResult& r) { return r.verdict == Verdict::Fail; });
}

std::vector<std::string> PostulateReport::failed() const {
  std::vector<std::string> out;
  for (const PostulateResult& r : results)
    if (r.verdict == Verdict::Fail) out.push_back(r.name);
  return out;
}

ChangeResult apply_revision(RevisionOp op, const Program& p, const Program& q,
                            const Alphabet& a, const Limits& limits) {
  switch (op) {
    case RevisionOp::Revise: return revise(p, q, a, limits);
    case RevisionOp::ReviseWeak: return revise_weak(p, q, a, limits);
    case RevisionOp::ReviseCard: return revise_card(p, q, a, limits);
  }
  throw std::logic_error("bad revision op");
}

PostulateReport check_ra(RevisionOp op, const Program& p, const Program& q,
                         const Program& r, const Alphabet& a, const Limits& limits) {
  Suite suite("ra", 0, -1);
  SeModelSet sp = se_models(p, a, limits);
  SeModelSet sq = se_models(q, a, limits);
  SeModelSet sr = se_models(r, a, limits);
  SeModelSet pq = apply_revision(op, p, q, a, limits).se;
  std::string ops_witness = describe("P", p) + describe("Q", q) + describe("R", r);

  suite.check("RA1", subseteq(pq, sq),
              ops_witness + describe("SE(P*Q)", pq) + describe("SE(Q)", sq));

  SeModelSet expansion = intersect(sp, sq);
  if (!expansion.empty()) {
    suite.check("RA2", pq == expansion,
                ops_witness + describe("SE(P*Q)", pq) + describe("SE(P+Q)", expansion));
  } else {
    suite.not_applicable("RA2");
  }

  if (!sq.empty()) {
    suite.check("RA3", !pq.empty(), ops_witness + describe("SE(P*Q)", pq));
  } else {
    suite.not_applicable("RA3");
  }

  {
    Program p2 = program_of(sp);
    Program q2 = program_of(sq);
    SeModelSet pq2 = apply_revision(op, p2, q2, a, limits).se;
    suite.check("RA4", pq == pq2,
                ops_witness + describe("SE(P*Q)", pq) + describe("SE(P'*Q')", pq2));
  }

  {
    SeModelSet lhs = intersect(pq, sr);                     // (P*Q)+R
    Program qr = program_of(intersect(sq, sr));             // Q+R
    SeModelSet rhs = apply_revision(op, p, qr, a, limits).se;
    suite.check("RA5", subseteq(lhs, rhs),
                ops_witness + describe("SE((P*Q)+R)", lhs) + describe("SE(P*(Q+R))", rhs));
    if (!lhs.empty()) {
      suite.check("RA6", subseteq(rhs, lhs),
                  ops_witness + describe("SE(P*(Q+R))", rhs) + describe("SE((P*Q)+R)", lhs));
    } else {
      suite.not_applicable("RA6");
    }
  }
  return suite.take();
}

PostulateReport check_principles(RevisionOp op, const Program& p, const Program& q,
                                 const Program& r, const Alphabet& a,
                                 const Limits& limits) {
  Suite suite("principles", 0, -1);
  SeModelSet sp = se_models(p, a, limits);
  SeModelSet sq = se_models(q, a, limits);
  SeModelSet sr = se_models(r, a, limits);
  std::string ops_witness = describe("P", p) + describe("Q", q) + describe("R", r);

  {
    Program empty;
    SeModelSet lhs = apply_revision(op, empty, p, a, limits).se;
    suite.check("initialisation", lhs == sp,
                ops_witness + describe("SE(0*P)", lhs) + describe("SE(P)", sp));
  }
  {
    SeModelSet lhs = apply_revision(op, p, p, a, limits).se;
    suite.check("idempotency", lhs == sp,
                ops_witness + describe("SE(P*P)", lhs) + describe("SE(P)", sp));
  }
  {
    Program empty;  // the canonical tautologous program
    SeModelSet lhs = apply_revision(op, p, empty, a, limits).se;
    suite.check("tautology", lhs == sp,
                ops_witness + describe("SE(P*T)", lhs) + describe("SE(P)", sp));
  }
  {
    SeModelSet pq = apply_revision(op, p, q, a, limits).se;
    SeModelSet lhs = apply_revision(op, program_of(pq), q, a, limits).se;
    suite.check("absorption", lhs == pq,
                ops_witness + describe("SE((P*Q)*Q)", lhs) + describe("SE(P*Q)", pq));
  }
  {
    // Premise R |=s Q manufactured as R' with SE(R') = SE(Q) cap SE(R).
    Program rq = program_of(intersect(sq, sr));
    SeModelSet pq = apply_revision(op, p, q, a, limits).se;
    SeModelSet lhs = apply_revision(op, program_of(pq), rq, a, limits).se;
    SeModelSet rhs = apply_revision(op, p, rq, a, limits).se;
    suite.check("augmentation", lhs == rhs,
                ops_witness + describe("R' (= Q+R)", rq) + describe("SE((P*Q)*R')", lhs) +
                    describe("SE(P*R')", rhs));
  }
  {
    Program q2 = program_of(sq);
    SeModelSet lhs = apply_revision(op, p, q, a, limits).se;
    SeModelSet rhs = apply_revision(op, p, q2, a, limits).se;
    suite.check("wis", lhs == rhs,
                ops_witness + describe("SE(P*Q)", lhs) + describe("SE(P*Q')", rhs));
  }
  return suite.take();
}

PostulateReport check_expansion(const Program& p, const Program& q, const Program& r,
                                const Alphabet& a, const Limits& limits) {
  Suite suite("expansion", 0, -1);
  SeModelSet sp = se_models(p, a, limits);
  SeModelSet sq = se_models(q, a, limits);
  SeModelSet sr = se_models(r, a, limits);
  SeModelSet pq = expand(p, q, a, limits).se;
  std::string ops_witness = describe("P", p) + describe("Q", q) + describe("R", r);

  suite.check("T1.1-well-defined", is_well_defined(pq), ops_witness + describe("SE(P+Q)", pq));
  suite.check("T1.2-containment", subseteq(pq, sp),
              ops_witness + describe("SE(P+Q)", pq) + describe("SE(P)", sp));
  {
    // Premise P |=s Q manufactured: P' with SE(P') = SE(P) cap SE(Q).
    Program p2 = program_of(pq);
    SeModelSet lhs = expand(p2, q, a, limits).se;
    suite.check("T1.3-entailing-operand", lhs == pq,
                ops_witness + describe("SE(P'+Q)", lhs) + describe("SE(P')", pq));
    SeModelSet left = expand(p2, r, a, limits).se;
    SeModelSet right = expand(q, r, a, limits).se;
    suite.check("T1.4-monotone", subseteq(left, right),
                ops_witness + describe("SE(P'+R)", left) + describe("SE(Q+R)", right));
  }
  suite.check("T1.5-well-definedness-preserved", is_well_defined(pq),
              ops_witness + describe("SE(P+Q)", pq));
  if (is_complete(sp) && is_complete(sq)) {
    suite.check("T1.6-completeness-preserved", is_complete(pq),
                ops_witness + describe("SE(P+Q)", pq));
  } else {
    suite.not_applicable("T1.6-completeness-preserved");
  }
  {
    Program empty;
    SeModelSet lhs = expand(p, empty, a, limits).se;
    suite.check("T1.7-tautology", lhs == sp,
                ops_witness + describe("SE(P+T)", lhs) + describe("SE(P)", sp));
  }
  {
    SeModelSet qp = expand(q, p, a, limits).se;
    suite.check("commutativity", pq == qp,
                ops_witness + describe("SE(P+Q)", pq) + describe("SE(Q+P)", qp));
    SeModelSet left = expand(program_of(pq), r, a, limits).se;
    SeModelSet right = expand(p, program_of(expand(q, r, a, limits).se), a, limits).se;
    suite.check("associativity", left == right,
                ops_witness + describe("SE((P+Q)+R)", left) + describe("SE(P+(Q+R))", right));
  }
  return suite.take();
}

PostulateReport check_ls(const Program& p1, const Program& p2, const Alphabet& a,
                         const Limits& limits) {
  Suite suite("ls", 0, -1);
  SeModelSet s1 = se_models(p1, a, limits);
  SeModelSet s2 = se_models(p2, a, limits);
  BeliefProfile pair{{p1, p2}, false};
  SeModelSet nab = arbitrate(pair, a, limits).se;
  std::string ops_witness = describe("P1", p1) + describe("P2", p2);

  {
    BeliefProfile swapped{{p2, p1}, false};
    SeModelSet rhs = arbitrate(swapped, a, limits).se;
    suite.check("LS1'", nab == rhs,
                ops_witness + describe("SE(P1<>P2)", nab) + describe("SE(P2<>P1)", rhs));
  }
  SeModelSet met = intersect(s1, s2);
  suite.check("LS2'", subseteq(met, nab),
              ops_witness + describe("SE(P1 meet P2)", met) + describe("SE(P1<>P2)", nab));
  if (!met.empty()) {
    suite.check("LS3'", subseteq(nab, met),
                ops_witness + describe("SE(P1<>P2)", nab) + describe("SE(P1 meet P2)", met));
  } else {
    suite.not_applicable("LS3'");
  }
  {
    bool sat1 = !s1.empty(), sat2 = !s2.empty();
    if (sat1 && sat2) {
      suite.check("LS4'", !nab.empty(), ops_witness + describe("SE(P1<>P2)", nab));
    } else if (sat1 || sat2) {
      const SeModelSet& survivor = sat1 ? s1 : s2;
      suite.check("LS4'", nab == survivor,
                  ops_witness + describe("SE(P1<>P2)", nab) +
                      describe("SE(surviving member)", survivor));
    } else {
      suite.check("LS4'", nab.empty(), ops_witness + describe("SE(P1<>P2)", nab));
    }
  }
  {
    BeliefProfile canon{{program_of(s1), program_of(s2)}, false};
    SeModelSet rhs = arbitrate(canon, a, limits).se;
    suite.check("LS5'", nab == rhs,
                ops_witness + describe("SE(P1<>P2)", nab) + describe("SE(P1'<>P2')", rhs));
  }
  {
    SeModelSet joined = unite(s1, s2);
    suite.check("LS7'", subseteq(nab, joined),
                ops_witness + describe("SE(P1<>P2)", nab) + describe("SE(P1 join P2)", joined));
  }
  if (!s1.empty() && !s2.empty()) {
    suite.check("LS8'", !intersect(s1, nab).empty(),
                ops_witness + describe("SE(P1)", s1) + describe("SE(P1<>P2)", nab));
  } else {
    suite.not_applicable("LS8'");
  }
  return suite.take();
}

PostulateReport check_ic(const Program& p0, const BeliefProfile& psi, const Alphabet& a,
                         const Limits& limits) {
  Suite suite("ic", 0, -1);
  if (psi.has_constraints)
    throw ModelSetError("check_ic expects the members only; p0 is passed separately");
  const std::vector<Program>& members = psi.programs;
  auto make_profile = [&](const Program& head, const std::vector<Program>& tail) {
    BeliefProfile pr;
    pr.has_constraints = true;
    pr.programs.push_back(head);
    pr.programs.insert(pr.programs.end(), tail.begin(), tail.end());
    return pr;
  };
  SeModelSet s0 = se_models(p0, a, limits);
  SeModelSet delta = merge_basic(make_profile(p0, members), a, limits).se;
  std::string ops_witness = describe("P0", p0);
  for (std::size_t i = 0; i < members.size(); ++i)
    ops_witness += describe(("P" + std::to_string(i + 1)).c_str(), members[i]);

  suite.check("IC0'", subseteq(delta, s0),
              ops_witness + describe("SE(Delta)", delta) + describe("SE(P0)", s0));

  bool all_sat = !s0.empty();
  SeModelSet meet_all = s0;
  for (const Program& m : members) {
    SeModelSet sm = se_models(m, a, limits);
    if (sm.empty()) all_sat = false;
    meet_all = intersect(meet_all, sm);
  }
  if (!s0.empty() && all_sat) {
    suite.check("IC1'", !delta.empty(), ops_witness + describe("SE(Delta)", delta));
  } else {
    suite.not_applicable("IC1'");
  }
  if (!meet_all.empty()) {
    suite.check("IC2'", delta == meet_all,
                ops_witness + describe("SE(Delta)", delta) +
                    describe("SE(P0 meet meet(Psi))", meet_all));
  } else {
    suite.not_applicable("IC2'");
  }
  {
    std::vector<Program> canon;
    for (const Program& m : members) canon.push_back(program_of(se_models(m, a, limits)));
    SeModelSet rhs = merge_basic(make_profile(program_of(s0), canon), a, limits).se;
    suite.check("IC3'", delta == rhs,
                ops_witness + describe("SE(Delta)", delta) + describe("SE(Delta')", rhs));
  }
  if (members.size() == 2) {
    SeModelSet m1 = se_models(members[0], a, limits);
    SeModelSet m2 = se_models(members[1], a, limits);
    if (subseteq(m1, s0) && subseteq(m2, s0)) {
      bool lhs = !intersect(delta, m1).empty();
      bool rhs = !intersect(delta, m2).empty();
      suite.check("IC4'", !lhs || rhs,
                  ops_witness + describe("SE(Delta)", delta) + describe("SE(P1)", m1) +
                      describe("SE(P2)", m2));
    } else {
      suite.not_applicable("IC4'");
    }
  } else {
    suite.not_applicable("IC4'");
  }
  if (members.size() >= 2) {
    std::size_t half = members.size() / 2;
    std::vector<Program> left(members.begin(), members.begin() + half);
    std::vector<Program> right(members.begin() + half, members.end());
    SeModelSet dl = merge_basic(make_profile(p0, left), a, limits).se;
    SeModelSet dr = merge_basic(make_profile(p0, right), a, limits).se;
    SeModelSet lhs = intersect(dl, dr);
    suite.check("IC5'", subseteq(lhs, delta),
                ops_witness + describe("SE(Delta(Psi) meet Delta(Psi'))", lhs) +
                    describe("SE(Delta(Psi o Psi'))", delta));
  } else {
    suite.not_applicable("IC5'");
  }
  {
    const Program& p1 = members.empty() ? p0 : members[0];
    SeModelSet sp1 = se_models(p1, a, limits);
    SeModelSet lhs = intersect(delta, sp1);
    Program refined = program_of(intersect(s0, sp1));
    SeModelSet rhs = merge_basic(make_profile(refined, members), a, limits).se;
    suite.check("IC7'", subseteq(lhs, rhs),
                ops_witness + describe("SE(Delta meet P1)", lhs) +
                    describe("SE(Delta(P0 meet P1, Psi))", rhs));
  }
  {
    std::vector<Program> permuted(members.rbegin(), members.rend());
    SeModelSet rhs = merge_basic(make_profile(p0, permuted), a, limits).se;
    suite.check("IC9'", delta == rhs,
                ops_witness + describe("SE(Delta)", delta) +
                    describe("SE(Delta(permuted))", rhs));
  }
  return suite.take();
}

const std::vector<std::string>& generator_atom_pool() {
  static const std::vector<std::string> pool{"a", "b", "c", "d", "e", "f"};
  return pool;
}

Program random_program(const GeneratorConfig& cfg) {
  if (cfg.atom_count < 1 || cfg.atom_count > static_cast<int>(generator_atom_pool().size()))
    throw AlphabetError("generator atom_count out of range");
  std::mt19937_64 rng(cfg.seed);
  auto draw = [&](int bound) { return static_cast<int>(rng() % bound); };
  auto sample_part = [&]() {
    std::vector<std::string> part;
    int want = draw(cfg.max_part_atoms + 1);
    std::vector<int> avail(cfg.atom_count);
    for (int i = 0; i < cfg.atom_count; ++i) avail[i] = i;
    for (int k = 0; k < want && !avail.empty(); ++k) {
      int pick = draw(static_cast<int>(avail.size()));
      part.push_back(generator_atom_pool()[avail[pick]]);
      avail.erase(avail.begin() + pick);
    }
    return part;
  };
  Program out;
  int n_rules = 1 + draw(std::max(1, cfg.max_rules));
  for (int i = 0; i < n_rules; ++i) {
    std::vector<std::string> head = sample_part();
    std::vector<std::string> head_pos, head_neg;
    for (std::string& atom : head) {
      if (cfg.allow_head_negation && draw(100) < cfg.head_neg_percent)
        head_neg.push_back(std::move(atom));
      else
        head_pos.push_back(std::move(atom));
    }
    Rule r = make_rule(std::move(head_pos), std::move(head_neg), sample_part(),
                       sample_part(), i + 1);
    out.rules.push_back(std::move(r));
  }
  return out;
}

}  // namespace sechange
