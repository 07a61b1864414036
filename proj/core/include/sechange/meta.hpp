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

#ifndef SECHANGE_META_HPP
#define SECHANGE_META_HPP

#include <set>
#include <string>
#include <vector>

#include "sechange/model.hpp"
#include "sechange/syntax.hpp"

namespace sechange {

enum class MetaTask { CardRevision, SetRevision, BasicMerge, Arbitration };

const char* to_string(MetaTask task);
// "card-revision" | "set-revision" | "basic-merge" | "arbitration".
MetaTask meta_task_from_string(const std::string& name);

// alpha = 0 for basic merging, 1 otherwise.
int meta_alpha(MetaTask task);

// Ground facts phead/nhead/pbody/nbody encoding a profile; lines carry the
// trailing period and are sorted by (program, rule, part, atom).
struct RelationalFacts {
  std::vector<std::string> facts;
  int alpha = 1;
  int n = 0;            // last program index
  int max_rule_id = 0;  // for the solver's integer bound

  std::string text() const;  // one fact per line
};

RelationalFacts relational_facts(const BeliefProfile& psi, MetaTask task);

// Fixed non-ground meta-program assembled from the pi modules of the task.
struct MetaProgram {
  MetaTask task;
  std::string text;
  std::vector<std::string> module_list;
};

MetaProgram emit_meta(MetaTask task);

// rho: read the SE pair off a solver answer set via resultH/resultT.
// Throws SolverError when the here part is not contained in the there part.
struct NamedSePair {
  std::vector<std::string> here;
  std::vector<std::string> there;
};
NamedSePair extract_rho(const std::set<std::string>& answer_set_atoms);

// --- external solver cross-check ---------------------------------------------

struct SolverConfig {
  // Command with {meta} and {facts} placeholders for the two input files,
  // e.g. "dlv -silent {meta} {facts}".
  std::string command_template;
  int timeout_seconds = 60;
};

struct CrosscheckReport {
  bool equal = false;
  std::vector<std::string> native_only;  // formatted pairs
  std::vector<std::string> solver_only;
  std::vector<std::string> solver_pairs;  // all decoded pairs
  std::string solver_command;
};

// Runs the configured solver on emit_meta(task) + relational_facts(psi) +
// #maxint, decodes every answer set via rho, and compares against the
// native operator over the atoms occurring in psi. Throws SolverError on
// invocation/parse failures.
CrosscheckReport crosscheck(const BeliefProfile& psi, MetaTask task,
                            const SolverConfig& solver,
                            const Limits& limits = {});

// Parses "{atom, atom, ...}"-style answer-set lines from solver output.
std::vector<std::set<std::string>> parse_answer_sets(const std::string& output);

}  // namespace sechange

#endif  // SECHANGE_META_HPP
