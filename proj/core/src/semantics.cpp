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

#include "sechange/semantics.hpp"

#include <algorithm>
#include <sstream>

#include "sechange/error.hpp"

namespace sechange {

namespace {

Mask part_mask(const std::vector<std::string>& atoms, const Alphabet& a) {
  Mask m = 0;
  for (const std::string& name : atoms) {
    int i = a.index_of(name);
    if (i < 0)
      throw AlphabetError("atom '" + name + "' of the program is not in the alphabet");
    m |= Mask{1} << i;
  }
  return m;
}

// Reduct of one rule w.r.t. the there-part y, compiled; false when dropped.
bool reduct_rule(const CompiledRule& r, Mask y, CompiledRule& out) {
  if ((r.head_neg & ~y) != 0) return false;  // H- not contained in Y
  if ((r.body_neg & y) != 0) return false;   // B- meets Y
  out = CompiledRule{r.head_pos, 0, r.body_pos, 0};
  return true;
}

bool satisfies_positive(Mask x, const std::vector<CompiledRule>& reduct_rules) {
  for (const CompiledRule& r : reduct_rules) {
    if ((r.body_pos & x) == r.body_pos && (r.head_pos & x) == 0) return false;
  }
  return true;
}

}  // namespace

std::vector<CompiledRule> compile_program(const Program& p, const Alphabet& a) {
  std::vector<CompiledRule> rules;
  rules.reserve(p.rules.size());
  for (const Rule& r : p.rules) {
    rules.push_back(CompiledRule{part_mask(r.head_pos, a), part_mask(r.head_neg, a),
                                 part_mask(r.body_pos, a), part_mask(r.body_neg, a)});
  }
  return rules;
}

bool satisfies_classically(Mask i, const CompiledRule& r) {
  // Body applies: B+ true, B- false.
  if ((r.body_pos & i) != r.body_pos || (r.body_neg & i) != 0) return true;
  // Head holds: some H+ atom true or some H- atom false.
  return (r.head_pos & i) != 0 || (r.head_neg & ~i) != 0;
}

bool satisfies_classically(Mask i, const std::vector<CompiledRule>& rules) {
  return std::all_of(rules.begin(), rules.end(),
                     [i](const CompiledRule& r) { return satisfies_classically(i, r); });
}

std::vector<Mask> classical_models(const Program& p, const Alphabet& a,
                                   const Limits& limits) {
  check_capacity(a, limits);
  auto rules = compile_program(p, a);
  std::vector<Mask> models;
  Mask end = Mask{1} << a.size();
  for (Mask i = 0; i < end; ++i)
    if (satisfies_classically(i, rules)) models.push_back(i);
  return models;
}

Program reduct(const Program& p, const std::vector<std::string>& y) {
  auto in_y = [&](const std::string& atom) {
    return std::find(y.begin(), y.end(), atom) != y.end();
  };
  Program out;
  for (const Rule& r : p.rules) {
    if (!std::all_of(r.head_neg.begin(), r.head_neg.end(), in_y)) continue;
    if (std::any_of(r.body_neg.begin(), r.body_neg.end(), in_y)) continue;
    out.rules.push_back(make_rule(r.head_pos, {}, r.body_pos, {}, r.id));
  }
  return out;
}

std::vector<Mask> answer_sets(const Program& p, const Alphabet& a,
                              const Limits& limits) {
  check_capacity(a, limits);
  auto rules = compile_program(p, a);
  std::vector<Mask> result;
  Mask end = Mask{1} << a.size();
  std::vector<CompiledRule> red;
  for (Mask y = 0; y < end; ++y) {
    red.clear();
    CompiledRule rr;
    for (const CompiledRule& r : rules)
      if (reduct_rule(r, y, rr)) red.push_back(rr);
    if (!satisfies_positive(y, red)) continue;
    // Subset-minimality: no proper subset of y satisfies the reduct.
    bool minimal = true;
    if (y != 0) {
      for (Mask x = (y - 1) & y;; x = (x - 1) & y) {
        if (satisfies_positive(x, red)) {
          minimal = false;
          break;
        }
        if (x == 0) break;
      }
    }
    if (minimal) result.push_back(y);
  }
  return result;
}

SeModelSet se_models(const Program& p, const Alphabet& a, const Limits& limits) {
  check_capacity(a, limits);
  auto rules = compile_program(p, a);
  std::vector<SePair> elems;
  Mask end = Mask{1} << a.size();
  std::vector<CompiledRule> red;
  for (Mask y = 0; y < end; ++y) {
    if (!satisfies_classically(y, rules)) continue;
    red.clear();
    CompiledRule rr;
    for (const CompiledRule& r : rules)
      if (reduct_rule(r, y, rr)) red.push_back(rr);
    // All X subseteq Y satisfying the reduct; Y itself always does here,
    // since Y |= P iff Y |= P^Y.
    Mask x = y;
    while (true) {
      if (satisfies_positive(x, red)) elems.push_back(SePair{x, y});
      if (x == 0) break;
      x = (x - 1) & y;
    }
  }
  return SeModelSet(a, std::move(elems));
}

bool is_well_defined(const SeModelSet& s) {
  for (SePair p : s.elems())
    if (!s.contains(SePair{p.there, p.there})) return false;
  return true;
}

SePair well_definedness_witness(const SeModelSet& s) {
  for (SePair p : s.elems())
    if (!s.contains(SePair{p.there, p.there})) return p;
  throw ModelSetError("set is well-defined; no witness");
}

bool is_complete(const SeModelSet& s) {
  if (!is_well_defined(s)) {
    SePair w = well_definedness_witness(s);
    throw ModelSetError("completeness is defined on well-defined sets only; " +
                        format_se_pair(w, s.alphabet()) + " has no total companion");
  }
  for (SePair p : s.elems()) {
    for (SePair q : s.elems()) {
      if (q.here != q.there) continue;
      if ((p.there & ~q.there) != 0) continue;  // Y not subseteq Z
      if (!s.contains(SePair{p.here, q.there})) return false;
    }
  }
  return true;
}

CompletenessWitness completeness_witness(const SeModelSet& s) {
  for (SePair p : s.elems()) {
    for (SePair q : s.elems()) {
      if (q.here != q.there) continue;
      if ((p.there & ~q.there) != 0) continue;
      if (!s.contains(SePair{p.here, q.there})) return CompletenessWitness{p, q.there};
    }
  }
  throw ModelSetError("set is complete; no witness");
}

SeModelSet complete_closure(const SeModelSet& s) {
  if (!is_well_defined(s)) {
    SePair w = well_definedness_witness(s);
    throw ModelSetError("closure is defined on well-defined sets only; " +
                        format_se_pair(w, s.alphabet()) + " has no total companion");
  }
  std::vector<SePair> elems = s.elems();
  std::vector<Mask> totals;
  for (SePair p : elems)
    if (p.here == p.there) totals.push_back(p.there);
  // One pass suffices: lifting never creates new totals.
  std::vector<SePair> out = elems;
  for (SePair p : elems)
    for (Mask z : totals)
      if ((p.there & ~z) == 0) out.push_back(SePair{p.here, z});
  return SeModelSet(s.alphabet(), std::move(out));
}

bool entails_s(const Program& p, const Program& q, const Alphabet& a,
               const Limits& limits) {
  SeModelSet sp = se_models(p, a, limits);
  SeModelSet sq = se_models(q, a, limits);
  return std::all_of(sp.elems().begin(), sp.elems().end(),
                     [&](SePair e) { return sq.contains(e); });
}

bool strongly_equivalent(const Program& p, const Program& q, const Alphabet& a,
                         const Limits& limits) {
  return se_models(p, a, limits) == se_models(q, a, limits);
}

bool is_satisfiable(const Program& p, const Alphabet& a, const Limits& limits) {
  return !classical_models(p, a, limits).empty();
}

}  // namespace sechange
