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

#include "sechange/meta.hpp"

#include <sys/wait.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "sechange/change.hpp"
#include "sechange/error.hpp"
#include "sechange/merge.hpp"
#include "sechange/semantics.hpp"

namespace sechange {

namespace {

// The fixed pi modules. c/t/h tag classical models and the two SE-model
// parts; rule and program indices are plain integers.

const char* kPiDomain =
    "% pi_domain\n"
    "prog_rule(P,R) :- phead(P,R,A).\n"
    "dom(A) :- phead(P,R,A).\n"
    "prog_rule(P,R) :- pbody(P,R,A).\n"
    "dom(A) :- pbody(P,R,A).\n"
    "prog_rule(P,R) :- nhead(P,R,A).\n"
    "dom(A) :- nhead(P,R,A).\n"
    "prog_rule(P,R) :- nbody(P,R,A).\n"
    "dom(A) :- nbody(P,R,A).\n"
    "prog(P) :- prog_rule(P,R).\n"
    "model(c).\n"
    "model(t).\n"
    "model(h).\n"
    "prog_model(c).\n"
    "prog_model(t).\n";

const char* kPiModels =
    "% pi_models\n"
    "in(P,A,M) :- not out(P,A,M), prog(P), dom(A), model(M).\n"
    "out(P,A,M) :- not in(P,A,M), prog(P), dom(A), model(M).\n"
    ":- in(P,A,h), out(P,A,t).\n"
    "diff(P,Q,A,M) :- in(P,A,M), out(Q,A,M).\n"
    "diff(P,Q,A,M) :- out(P,A,M), in(Q,A,M).\n"
    "same(P,Q,A,M) :- in(P,A,M), in(Q,A,M).\n"
    "same(P,Q,A,M) :- out(P,A,M), out(Q,A,M).\n"
    "ok(P,R,M) :- in(P,A,M), phead(P,R,A), model(M).\n"
    "ok(P,R,M) :- out(P,A,M), pbody(P,R,A), model(M).\n"
    "ok(P,R,M) :- in(P,A,M), nbody(P,R,A), prog_model(M).\n"
    "ok(P,R,M) :- out(P,A,M), nhead(P,R,A), prog_model(M).\n"
    "ok(P,R,h) :- in(P,A,t), nbody(P,R,A).\n"
    "ok(P,R,h) :- out(P,A,t), nhead(P,R,A).\n"
    ":- not ok(P,R,M), prog_rule(P,R), model(M).\n";

const char* kPiOrder =
    "% pi_order\n"
    "lt(X,Y) :- dom(X), dom(Y), X < Y.\n"
    "nsucc(X,Z) :- lt(X,Y), lt(Y,Z).\n"
    "succ(X,Y) :- lt(X,Y), not nsucc(X,Y).\n"
    "ninf(X) :- lt(Y,X).\n"
    "nsup(X) :- lt(X,Y).\n"
    "inf(X) :- not ninf(X), dom(X).\n"
    "sup(X) :- not nsup(X), dom(X).\n"
    "minprog(P) :- prog(P), P = Q + 1, not prog(Q).\n"
    "maxprog(P) :- prog(P), Q = P + 1, not prog(Q).\n";

const char* kPiCard =
    "% pi_card\n"
    ":~ diff(1,2,A,M), prog_model(M).\n"
    ":~ diff(1,2,A,h), diff(1,2,B,M).\n"
    ":~ diff(1,2,A,h), not diff(1,2,B,M), dom(B), prog_model(M).\n"
    "selector(2).\n";

const char* kPiResult =
    "% pi_result\n"
    "total :- not nontotal.\n"
    "nontotal :- not total.\n"
    ":- nontotal, selector(S), in(S,A,t), out(S,A,c).\n"
    ":- nontotal, selector(S), out(S,A,t), in(S,A,c).\n"
    "resultH(A) :- selector(S), in(S,A,h), nontotal.\n"
    "resultH(A) :- selector(S), in(S,A,c), total.\n"
    "resultT(A) :- selector(S), in(S,A,c).\n";

const char* kPiWitness =
    "% pi_witness\n"
    "win(P,A,M) ; wout(P,A,M) :- prog(P), dom(A), model(M).\n"
    "wdiff(P,Q,A,M) :- win(P,A,M), wout(Q,A,M).\n"
    "wdiff(P,Q,A,M) :- wout(P,A,M), win(Q,A,M).\n"
    "wsame(P,Q,A,M) :- win(P,A,M), win(Q,A,M).\n"
    "wsame(P,Q,A,M) :- wout(P,A,M), wout(Q,A,M).\n"
    "notsubseteq(M,I,J) :- same(I,J,A,M), wdiff(I,J,A,M).\n"
    "win(P,A,M) :- spoil, prog(P), dom(A), model(M).\n"
    "wout(P,A,M) :- spoil, prog(P), dom(A), model(M).\n"
    ":- not spoil.\n";

const char* kPiIncl =
    "% pi_incl\n"
    "spoil :- win(P,A,h), wout(P,A,t).\n"
    "spoil :- violated(P,R,M).\n"
    "spoilcond(M) :- notsubseteq(M,1,2), prog_model(M).\n"
    "spoilcond(c) :- samediff_all(c).\n"
    "spoilcond(t) :- notsubseteq(h,1,2), samediff_all(t).\n"
    "spoilcond(t) :- samediff_all(h), samediff_all(t).\n"
    "spoil :- spoilcond(c), spoilcond(t).\n"
    "selector(2).\n";

const char* kPiViolation =
    "% pi_violation\n"
    "unsat(P,R,A,M) :- win(P,A,M), not phead(P,R,A), not nbody(P,R,A), "
    "prog_rule(P,R), prog_model(M).\n"
    "unsat(P,R,A,M) :- wout(P,A,M), not pbody(P,R,A), not nhead(P,R,A), "
    "prog_rule(P,R), prog_model(M).\n"
    "unsat(P,R,A,h) :- wout(P,A,h), win(P,A,t), not pbody(P,R,A), not nbody(P,R,A), "
    "prog_rule(P,R).\n"
    "unsat(P,R,A,h) :- wout(P,A,h), wout(P,A,t), not pbody(P,R,A), not nhead(P,R,A), "
    "prog_rule(P,R).\n"
    "violupto(P,R,A,M) :- inf(A), unsat(P,R,A,M).\n"
    "violupto(P,R,A,M) :- succ(B,A), violupto(P,R,B,M), unsat(P,R,A,M).\n"
    "violated(P,R,M) :- sup(A), violupto(P,R,A,M).\n";

const char* kPiEq =
    "% pi_eq\n"
    "samediff_atom(I,J,A,M) :- same(I,J,A,M), wsame(I,J,A,M).\n"
    "samediff_atom(I,J,A,M) :- diff(I,J,A,M), wdiff(I,J,A,M).\n"
    "samediff_upto_atom(I,J,A,M) :- inf(A), samediff_atom(I,J,A,M).\n"
    "samediff_upto_atom(I,J,A,M) :- succ(B,A), samediff_atom(I,J,A,M), "
    "samediff_upto_atom(I,J,B,M).\n"
    "samediff(I,J,M) :- sup(A), samediff_upto_atom(I,J,A,M).\n"
    "samediff_upto_prog(I,M) :- minprog(I), model(M).\n"
    "samediff_upto_prog(I,M) :- I = J + 1, samediff(I,J,M), samediff_upto_prog(J,M).\n"
    "samediff_all(M) :- samediff_upto_prog(I,M), maxprog(I).\n";

const char* kPiBasic =
    "% pi_basic\n"
    "spoil :- win(P,A,h), wout(P,A,t).\n"
    "spoil :- violated(P,R,M).\n"
    "spoilcond(M) :- notsubseteq(M,0,J), prog_model(M).\n"
    "spoilcond(c) :- samediff_all(c).\n"
    "spoilcond(t) :- notsubseteq(h,0,J), samediff_all(t).\n"
    "spoilcond(t) :- samediff_all(h), samediff_all(t).\n"
    "spoil :- spoilcond(c), spoilcond(t).\n"
    "selector(0).\n"
    "prog(0).\n";

const char* kPiArbitration =
    "% pi_arbitration\n"
    "spoil :- win(P,A,h), wout(P,A,t).\n"
    "spoil :- violated(P,R,M).\n"
    "spoilcond(M) :- notsubseteq(M,I,J), prog_model(M).\n"
    "spoilcond(c) :- samediff_all(c).\n"
    "spoilcond(t) :- notsubseteq(h,I,J), samediff_all(t).\n"
    "spoilcond(t) :- samediff_all(h), samediff_all(t).\n"
    "spoil :- spoilcond(c), spoilcond(t).\n"
    "win(P,A,M) :- spoil, prog(P), dom(A), model(M).\n"
    "wout(P,A,M) :- spoil, prog(P), dom(A), model(M).\n"
    ":- not spoil.\n";

const char* kPiResultArbitration =
    "% pi_result_arbitration\n"
    "tout(I) ; tout(J) :- prog(I), prog(J), I != J.\n"
    "tselect(I) :- not tout(I), prog(I).\n"
    "total :- not nontotal.\n"
    "nontotal :- not total.\n"
    "resultT(A) :- in(M,A,c), tselect(M).\n"
    "resultH(A) :- in(M,A,c), total, tselect(M).\n"
    "hout(I) ; hout(J) :- prog(I), prog(J), I != J, nontotal.\n"
    "hselect(I) :- not hout(I), prog(I), nontotal.\n"
    ":- nontotal, in(I,A,t), out(J,A,c), tselect(J), hselect(I).\n"
    ":- nontotal, out(I,A,t), in(J,A,c), tselect(J), hselect(I).\n"
    "resultH(A) :- in(I,A,h), hselect(I), nontotal.\n";

struct ModuleRef {
  const char* name;
  const char* text;
};

std::vector<ModuleRef> modules_for(MetaTask task) {
  switch (task) {
    case MetaTask::CardRevision:
      return {{"pi_domain", kPiDomain},
              {"pi_models", kPiModels},
              {"pi_result", kPiResult},
              {"pi_card", kPiCard}};
    case MetaTask::SetRevision:
      return {{"pi_domain", kPiDomain},
              {"pi_models", kPiModels},
              {"pi_order", kPiOrder},
              {"pi_result", kPiResult},
              {"pi_witness", kPiWitness},
              {"pi_incl", kPiIncl},
              {"pi_violation", kPiViolation},
              {"pi_eq", kPiEq}};
    case MetaTask::BasicMerge:
      return {{"pi_domain", kPiDomain},
              {"pi_models", kPiModels},
              {"pi_order", kPiOrder},
              {"pi_result", kPiResult},
              {"pi_witness", kPiWitness},
              {"pi_violation", kPiViolation},
              {"pi_eq", kPiEq},
              {"pi_basic", kPiBasic}};
    case MetaTask::Arbitration:
      return {{"pi_domain", kPiDomain},
              {"pi_models", kPiModels},
              {"pi_order", kPiOrder},
              {"pi_result_arbitration", kPiResultArbitration},
              {"pi_witness", kPiWitness},
              {"pi_violation", kPiViolation},
              {"pi_eq", kPiEq},
              {"pi_arbitration", kPiArbitration}};
  }
  throw std::logic_error("bad meta task");
}

std::string strip_ws(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

// Splits a braced atom list at depth-0 commas.
std::vector<std::string> split_atoms(const std::string& body) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : body) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      std::string a = strip_ws(cur);
      if (!a.empty()) out.push_back(a);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  std::string a = strip_ws(cur);
  if (!a.empty()) out.push_back(a);
  return out;
}

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& tag, const std::string& content) {
    std::string tmpl = "/tmp/sechange_" + tag + "_XXXXXX";
    std::vector<char> buf(tmpl.begin(), tmpl.end());
    buf.push_back('\0');
    int fd = mkstemp(buf.data());
    if (fd < 0) throw SolverError("cannot create temp file for solver input");
    path.assign(buf.data());
    FILE* f = fdopen(fd, "w");
    fwrite(content.data(), 1, content.size(), f);
    fclose(f);
  }
  ~TempFile() { std::remove(path.c_str()); }
  TempFile(const TempFile&) = delete;
  TempFile& operator=(const TempFile&) = delete;
};

std::string substitute(std::string tmpl, const std::string& key, const std::string& value) {
  std::size_t pos;
  while ((pos = tmpl.find(key)) != std::string::npos)
    tmpl.replace(pos, key.size(), value);
  return tmpl;
}

std::string shell_quote(const std::string& s) {
  std::string out = "'";
  for (char c : s) {
    if (c == '\'')
      out += "'\\''";
    else
      out.push_back(c);
  }
  out += "'";
  return out;
}

}  // namespace

const char* to_string(MetaTask task) {
  switch (task) {
    case MetaTask::CardRevision: return "card-revision";
    case MetaTask::SetRevision: return "set-revision";
    case MetaTask::BasicMerge: return "basic-merge";
    case MetaTask::Arbitration: return "arbitration";
  }
  return "?";
}

MetaTask meta_task_from_string(const std::string& name) {
  if (name == "card-revision") return MetaTask::CardRevision;
  if (name == "set-revision") return MetaTask::SetRevision;
  if (name == "basic-merge") return MetaTask::BasicMerge;
  if (name == "arbitration") return MetaTask::Arbitration;
  throw ParseError("unknown meta task '" + name + "'");
}

int meta_alpha(MetaTask task) { return task == MetaTask::BasicMerge ? 0 : 1; }

std::string RelationalFacts::text() const {
  std::string out;
  for (const std::string& f : facts) {
    out += f;
    out.push_back('\n');
  }
  return out;
}

RelationalFacts relational_facts(const BeliefProfile& psi, MetaTask task) {
  RelationalFacts out;
  out.alpha = meta_alpha(task);
  out.n = out.alpha + static_cast<int>(psi.programs.size()) - 1;
  for (std::size_t k = 0; k < psi.programs.size(); ++k) {
    int index = out.alpha + static_cast<int>(k);
    for (const Rule& r : psi.programs[k].rules) {
      out.max_rule_id = std::max(out.max_rule_id, r.id);
      auto emit = [&](const char* pred, const std::vector<std::string>& atoms) {
        for (const std::string& atom : atoms) {
          std::ostringstream os;
          os << pred << "(" << index << "," << r.id << "," << atom << ").";
          out.facts.push_back(os.str());
        }
      };
      emit("phead", r.head_pos);
      emit("nhead", r.head_neg);
      emit("pbody", r.body_pos);
      emit("nbody", r.body_neg);
    }
  }
  return out;
}

MetaProgram emit_meta(MetaTask task) {
  MetaProgram out;
  out.task = task;
  bool first = true;
  for (const ModuleRef& m : modules_for(task)) {
    if (!first) out.text += "\n";
    out.text += m.text;
    out.module_list.push_back(m.name);
    first = false;
  }
  return out;
}

NamedSePair extract_rho(const std::set<std::string>& answer_set_atoms) {
  NamedSePair out;
  for (const std::string& atom : answer_set_atoms) {
    auto grab = [&](const char* pred) -> std::string {
      std::string prefix = std::string(pred) + "(";
      if (atom.rfind(prefix, 0) != 0 || atom.back() != ')') return {};
      return strip_ws(atom.substr(prefix.size(), atom.size() - prefix.size() - 1));
    };
    if (std::string a = grab("resultH"); !a.empty()) out.here.push_back(a);
    if (std::string a = grab("resultT"); !a.empty()) out.there.push_back(a);
  }
  std::sort(out.here.begin(), out.here.end());
  std::sort(out.there.begin(), out.there.end());
  for (const std::string& a : out.here) {
    if (!std::binary_search(out.there.begin(), out.there.end(), a))
      throw SolverError("corrupt solver run: resultH(" + a + ") without resultT(" + a + ")");
  }
  return out;
}

std::vector<std::set<std::string>> parse_answer_sets(const std::string& output) {
  std::vector<std::set<std::string>> sets;
  std::istringstream in(output);
  std::string line;
  while (std::getline(in, line)) {
    std::size_t open = line.find('{');
    if (open == std::string::npos) continue;
    std::size_t close = line.rfind('}');
    if (close == std::string::npos || close < open) continue;
    std::set<std::string> atoms;
    for (const std::string& a : split_atoms(line.substr(open + 1, close - open - 1)))
      atoms.insert(a);
    sets.push_back(std::move(atoms));
  }
  return sets;
}

CrosscheckReport crosscheck(const BeliefProfile& psi, MetaTask task,
                            const SolverConfig& solver, const Limits& limits) {
  if ((task == MetaTask::CardRevision || task == MetaTask::SetRevision) &&
      psi.programs.size() != 2)
    throw ModelSetError("revision tasks take a two-program profile");
  if (task == MetaTask::BasicMerge && !psi.has_constraints)
    throw ModelSetError("basic-merge crosscheck needs a constraints program at index 0");

  // The encodings' domain is the atoms occurring in the profile, so the
  // native side runs over exactly that alphabet.
  Alphabet dom = effective_alphabet(std::span<const Program>(psi.programs.data(),
                                                             psi.programs.size()));
  SeModelSet native(dom);
  switch (task) {
    case MetaTask::CardRevision:
      native = revise_card(psi.programs[0], psi.programs[1], dom, limits).se;
      break;
    case MetaTask::SetRevision:
      native = revise(psi.programs[0], psi.programs[1], dom, limits).se;
      break;
    case MetaTask::BasicMerge:
      native = merge_basic(psi, dom, limits).se;
      break;
    case MetaTask::Arbitration:
      native = arbitrate(psi, dom, limits).se;
      break;
  }

  RelationalFacts facts = relational_facts(psi, task);
  int maxint = std::max(facts.n, facts.max_rule_id);
  std::string fact_text =
      "#maxint=" + std::to_string(maxint) + ".\n" + facts.text();
  TempFile meta_file("meta", emit_meta(task).text);
  TempFile facts_file("facts", fact_text);

  std::string cmd = solver.command_template;
  if (cmd.find("{meta}") == std::string::npos && cmd.find("{facts}") == std::string::npos)
    cmd += " {meta} {facts}";
  cmd = substitute(cmd, "{meta}", meta_file.path);
  cmd = substitute(cmd, "{facts}", facts_file.path);
  std::string wrapped = "timeout " + std::to_string(solver.timeout_seconds) + "s sh -c " +
                        shell_quote(cmd) + " 2>&1";

  CrosscheckReport report;
  report.solver_command = cmd;
  FILE* pipe = popen(wrapped.c_str(), "r");
  if (!pipe) throw SolverError("cannot launch solver command: " + cmd);
  std::string output;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) output.append(buf, got);
  int status = pclose(pipe);
  int exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
  if (exit_code == 124)
    throw SolverError("solver timed out after " + std::to_string(solver.timeout_seconds) +
                      "s: " + cmd);
  if (exit_code == 127) throw SolverError("solver not found: " + cmd);

  std::vector<std::set<std::string>> answer_sets = parse_answer_sets(output);
  if (answer_sets.empty() && exit_code != 0)
    throw SolverError("solver failed (exit " + std::to_string(exit_code) + "): " + output);

  auto pair_text = [&](const std::vector<std::string>& here,
                       const std::vector<std::string>& there) {
    auto join = [](const std::vector<std::string>& v) {
      std::string s = "{";
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i];
      }
      return s + "}";
    };
    return "(" + join(here) + "," + join(there) + ")";
  };

  std::set<std::string> solver_pairs;
  for (const auto& s : answer_sets) {
    NamedSePair p = extract_rho(s);
    solver_pairs.insert(pair_text(p.here, p.there));
  }
  std::set<std::string> native_pairs;
  for (SePair p : native.elems())
    native_pairs.insert(pair_text(mask_atoms(p.here, dom), mask_atoms(p.there, dom)));

  report.solver_pairs.assign(solver_pairs.begin(), solver_pairs.end());
  for (const std::string& p : native_pairs)
    if (!solver_pairs.count(p)) report.native_only.push_back(p);
  for (const std::string& p : solver_pairs)
    if (!native_pairs.count(p)) report.solver_only.push_back(p);
  report.equal = report.native_only.empty() && report.solver_only.empty();
  return report;
}

}  // namespace sechange
