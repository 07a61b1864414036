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

#ifndef SECHANGE_SEMANTICS_HPP
#define SECHANGE_SEMANTICS_HPP

#include <vector>

#include "sechange/model.hpp"
#include "sechange/syntax.hpp"

namespace sechange {

// Rule compiled against an alphabet; each part is a bit mask.
struct CompiledRule {
  Mask head_pos = 0;
  Mask head_neg = 0;
  Mask body_pos = 0;
  Mask body_neg = 0;
};

std::vector<CompiledRule> compile_program(const Program& p, const Alphabet& a);

// I satisfies r read classically: (B+ and not B-) -> (or H+ or or not H-).
bool satisfies_classically(Mask interpretation, const CompiledRule& r);
bool satisfies_classically(Mask interpretation,
                           const std::vector<CompiledRule>& rules);

// All classical models of p over a, ascending masks.
std::vector<Mask> classical_models(const Program& p, const Alphabet& a,
                                   const Limits& limits = {});

// The reduct P^Y: { H(r)+ <- B(r)+ | r in P, H(r)- subseteq Y, B(r)- cap Y
// empty }. Rule ids are preserved.
Program reduct(const Program& p, const std::vector<std::string>& y);

// Subset-minimal models Y of reduct(p, Y), ascending masks.
std::vector<Mask> answer_sets(const Program& p, const Alphabet& a,
                              const Limits& limits = {});

// All (X,Y), X subseteq Y subseteq a, with Y a model of p and X a model of
// reduct(p, Y).
SeModelSet se_models(const Program& p, const Alphabet& a,
                     const Limits& limits = {});

// Well-definedness: (X,Y) in s implies (Y,Y) in s.
bool is_well_defined(const SeModelSet& s);
// First pair breaking well-definedness (s must not be well-defined).
SePair well_definedness_witness(const SeModelSet& s);

// Completeness of a well-defined set: (X,Y) in s and (Z,Z) in s with
// Y subseteq Z imply (X,Z) in s. Throws ModelSetError when s is not
// well-defined.
bool is_complete(const SeModelSet& s);
struct CompletenessWitness {
  SePair pair;   // (X,Y) in s
  Mask there;    // Z with (Z,Z) in s, Y subseteq Z, (X,Z) missing
};
CompletenessWitness completeness_witness(const SeModelSet& s);

// Least complete superset of a well-defined s.
SeModelSet complete_closure(const SeModelSet& s);

// SE(p) subseteq SE(q) over a / SE(p) == SE(q) over a.
bool entails_s(const Program& p, const Program& q, const Alphabet& a,
               const Limits& limits = {});
bool strongly_equivalent(const Program& p, const Program& q, const Alphabet& a,
                         const Limits& limits = {});

bool is_satisfiable(const Program& p, const Alphabet& a,
                    const Limits& limits = {});

}  // namespace sechange

#endif  // SECHANGE_SEMANTICS_HPP
