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

#include "sechange/canonical.hpp"

#include <algorithm>
#include <bit>
#include <tuple>

#include "sechange/error.hpp"
#include "sechange/semantics.hpp"

namespace sechange {

namespace {

struct PendingRule {
  Mask there;   // Y
  Mask here;    // X; == there for r_Y constraints
  bool total;   // r_Y rule (true) or r_{X,Y} / r'_{X,Y} (false)
};

Rule build_rule(const PendingRule& pr, const Alphabet& a, bool keep_head_neg) {
  Mask all = a.size() == 0 ? 0 : (Mask{1} << a.size()) - 1;
  Rule r;
  if (pr.total) {
    // r_Y: :- Y, not (A\Y).
    r.body_pos = mask_atoms(pr.there, a);
    r.body_neg = mask_atoms(all & ~pr.there, a);
  } else {
    // (Y\X) [; not Y] :- X, not (A\Y).
    r.head_pos = mask_atoms(pr.there & ~pr.here, a);
    if (keep_head_neg) r.head_neg = mask_atoms(pr.there, a);
    r.body_pos = mask_atoms(pr.here, a);
    r.body_neg = mask_atoms(all & ~pr.there, a);
  }
  return r;
}

CanonicalProgram assemble(const SeModelSet& s, bool dlp) {
  const Alphabet& a = s.alphabet();
  Mask end = Mask{1} << a.size();
  std::vector<PendingRule> pending;
  for (Mask y = 0; y < end; ++y) {
    if (!s.contains(SePair{y, y})) {
      pending.push_back(PendingRule{y, y, true});
      continue;
    }
    if (y == 0) continue;
    for (Mask x = (y - 1) & y;; x = (x - 1) & y) {
      if (!s.contains(SePair{x, y})) pending.push_back(PendingRule{y, x, false});
      if (x == 0) break;
    }
  }
  std::sort(pending.begin(), pending.end(), [](const PendingRule& l, const PendingRule& r) {
    auto key = [](const PendingRule& p) {
      return std::tuple(std::popcount(p.there), p.there,
                        p.total ? -1 : std::popcount(p.here), p.total ? 0 : p.here);
    };
    return key(l) < key(r);
  });
  CanonicalProgram out;
  out.kind = dlp ? CanonicalKind::Dlp : CanonicalKind::Glp;
  out.source = s;
  for (const PendingRule& pr : pending) {
    Rule r = build_rule(pr, a, /*keep_head_neg=*/!dlp);
    r.id = static_cast<int>(out.program.rules.size()) + 1;
    out.program.rules.push_back(std::move(r));
  }
  if (!a.empty()) out.program.declared_alphabet = a.atoms();
  return out;
}

}  // namespace

CanonicalProgram canonical_glp(const SeModelSet& s) {
  if (!is_well_defined(s)) {
    SePair w = well_definedness_witness(s);
    throw ModelSetError("canonical GLP needs a well-defined set; " +
                        format_se_pair(w, s.alphabet()) +
                        " lacks its total companion");
  }
  return assemble(s, /*dlp=*/false);
}

CanonicalProgram canonical_dlp(const SeModelSet& s) {
  if (!is_complete(s)) {
    CompletenessWitness w = completeness_witness(s);
    throw ModelSetError("canonical DLP needs a complete set; " +
                        format_se_pair(w.pair, s.alphabet()) + " does not lift to " +
                        format_interpretation(w.there, s.alphabet()));
  }
  return assemble(s, /*dlp=*/true);
}

}  // namespace sechange
