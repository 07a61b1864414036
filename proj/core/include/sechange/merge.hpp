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

#ifndef SECHANGE_MERGE_HPP
#define SECHANGE_MERGE_HPP

#include <vector>

#include "sechange/canonical.hpp"
#include "sechange/model.hpp"
#include "sechange/syntax.hpp"

namespace sechange {

enum class MergeOp { Arbitrate, MergeBasic };

const char* to_string(MergeOp op);

struct MergeResult {
  SeModelSet se;
  CanonicalProgram canonical;
  MergeOp op;
  // Profile indices of unsatisfiable members that the removal clause
  // dropped (0-based positions into profile.programs; the constraints
  // program is never dropped).
  std::vector<std::size_t> dropped;
};

// Arbitration: unsatisfiable members are removed first; then
//   SE = { (X,Y) | Y in U Min_a(Mod(Psi)), X subseteq Y,
//                  X proper implies (X,Y) in U Min_a(SE(Psi)) }.
// All members unsatisfiable yields the unsatisfiable set (every member
// listed in dropped). The profile must not carry a constraints program.
MergeResult arbitrate(const BeliefProfile& psi, const Alphabet& a,
                      const Limits& limits = {});

// Basic merging over <P0, P1, ..., Pn> (profile.has_constraints required):
// unsatisfiable members with index >= 1 are removed; an unsatisfiable P0
// yields the unsatisfiable result. Otherwise
//   SE = { (X,Y) | Y in Min_b(Mod(Psi))_0, X subseteq Y,
//                  X proper implies (X,Y) in Min_b(SE(Psi))_0 }.
MergeResult merge_basic(const BeliefProfile& psi, const Alphabet& a,
                        const Limits& limits = {});

}  // namespace sechange

#endif  // SECHANGE_MERGE_HPP
