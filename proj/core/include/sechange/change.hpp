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

#ifndef SECHANGE_CHANGE_HPP
#define SECHANGE_CHANGE_HPP

#include "sechange/canonical.hpp"
#include "sechange/model.hpp"
#include "sechange/syntax.hpp"

namespace sechange {

enum class ChangeOp { Expand, Revise, ReviseWeak, ReviseCard, Meet, Join };

const char* to_string(ChangeOp op);

struct ChangeResult {
  SeModelSet se;               // well-defined by construction
  CanonicalProgram canonical;  // round-trips to se
  ChangeOp op;
  Alphabet alphabet;
};

// Expansion: SE(result) = SE(p) cap SE(q).
ChangeResult expand(const Program& p, const Program& q, const Alphabet& a,
                    const Limits& limits = {});

// Subset-based revision: if SE(p) is empty the result is SE(q); otherwise
// (X,Y) with Y in sigma(Mod(q),Mod(p)), X subseteq Y, and (X,Y) in
// sigma(SE(q),SE(p)) whenever X is proper.
ChangeResult revise(const Program& p, const Program& q, const Alphabet& a,
                    const Limits& limits = {});

// Weak revision: sigma(SE(q),SE(p)) closed under adding the totals (Y,Y).
ChangeResult revise_weak(const Program& p, const Program& q, const Alphabet& a,
                         const Limits& limits = {});

// Cardinality-based revision: as revise with sigma_|| in place of sigma.
ChangeResult revise_card(const Program& p, const Program& q, const Alphabet& a,
                         const Limits& limits = {});

// Program meet / join: SE intersection / union.
ChangeResult meet(const Program& p, const Program& q, const Alphabet& a,
                  const Limits& limits = {});
ChangeResult join(const Program& p, const Program& q, const Alphabet& a,
                  const Limits& limits = {});

}  // namespace sechange

#endif  // SECHANGE_CHANGE_HPP
