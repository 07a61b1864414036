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

#ifndef SECHANGE_POSTULATES_HPP
#define SECHANGE_POSTULATES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "sechange/change.hpp"
#include "sechange/merge.hpp"
#include "sechange/model.hpp"
#include "sechange/syntax.hpp"

namespace sechange {

enum class Verdict { Pass, Fail, NotApplicable };

const char* to_string(Verdict v);

struct PostulateResult {
  std::string name;
  Verdict verdict = Verdict::NotApplicable;
  std::string witness;  // rendered operands + offending SE sets on failure
};

struct PostulateReport {
  std::string suite;  // "ra" | "ls" | "ic" | "principles" | "expansion"
  std::vector<PostulateResult> results;
  std::uint64_t seed = 0;
  int trial = -1;

  bool all_pass() const;  // no Fail verdict
  std::vector<std::string> failed() const;
};

// Revision operator under test.
enum class RevisionOp { Revise, ReviseWeak, ReviseCard };
const char* to_string(RevisionOp op);
ChangeResult apply_revision(RevisionOp op, const Program& p, const Program& q,
                            const Alphabet& a, const Limits& limits = {});

// RA1..RA6 as SE-set relations; RA4 substitutes canonical strong
// equivalents for the operands.
PostulateReport check_ra(RevisionOp op, const Program& p, const Program& q,
                         const Program& r, const Alphabet& a,
                         const Limits& limits = {});

// initialisation, idempotency, tautology, absorption, augmentation, WIS.
// Conditional premises yield NotApplicable; augmentation failures are
// expected for distance-based operators.
PostulateReport check_principles(RevisionOp op, const Program& p,
                                 const Program& q, const Program& r,
                                 const Alphabet& a, const Limits& limits = {});

// Theorem 1 properties of expansion over (p, q, r).
PostulateReport check_expansion(const Program& p, const Program& q,
                                const Program& r, const Alphabet& a,
                                const Limits& limits = {});

// LS1'..LS5', LS7', LS8' for arbitration of a pair.
PostulateReport check_ls(const Program& p1, const Program& p2,
                         const Alphabet& a, const Limits& limits = {});

// IC0'..IC5', IC7', IC9' for basic merging of <p0, psi...>. psi holds the
// members only (no constraints program).
PostulateReport check_ic(const Program& p0, const BeliefProfile& psi,
                         const Alphabet& a, const Limits& limits = {});

// --- seeded program generator ------------------------------------------------

struct GeneratorConfig {
  int atom_count = 3;       // 1..6 (draws from a fixed atom pool)
  int max_rules = 3;        // rule count drawn from 1..max_rules
  int max_part_atoms = 2;   // each rule part draws 0..max_part_atoms atoms
  int head_neg_percent = 25;  // chance a head literal is negated
  bool allow_head_negation = true;
  std::uint64_t seed = 0;
};

// Deterministic for a given config: identical config, identical program.
Program random_program(const GeneratorConfig& cfg);

// The atom pool the generator draws from (first atom_count entries).
const std::vector<std::string>& generator_atom_pool();

}  // namespace sechange

#endif  // SECHANGE_POSTULATES_HPP
