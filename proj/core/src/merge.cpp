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

#include "sechange/merge.hpp"

#include <algorithm>

#include "sechange/error.hpp"
#include "sechange/orders.hpp"
#include "sechange/semantics.hpp"

namespace sechange {

namespace {

MergeResult finish(SeModelSet se, MergeOp op, std::vector<std::size_t> dropped) {
  MergeResult r{std::move(se), {}, op, std::move(dropped)};
  r.canonical = canonical_glp(r.se);
  return r;
}

std::vector<SePair> assemble(const std::vector<Mask>& total_pool,
                             const std::vector<SePair>& proper_pool) {
  std::vector<SePair> out;
  for (Mask y : total_pool) out.push_back(SePair{y, y});
  for (SePair p : proper_pool) {
    if (p.here == p.there) continue;
    if (std::binary_search(total_pool.begin(), total_pool.end(), p.there))
      out.push_back(p);
  }
  return out;
}

}  // namespace

const char* to_string(MergeOp op) {
  switch (op) {
    case MergeOp::Arbitrate: return "arbitrate";
    case MergeOp::MergeBasic: return "merge_basic";
  }
  return "?";
}

MergeResult arbitrate(const BeliefProfile& psi, const Alphabet& a,
                      const Limits& limits) {
  if (psi.has_constraints)
    throw ModelSetError("arbitration takes a plain profile, not one with a constraints program");
  if (psi.programs.empty())
    throw ModelSetError("arbitration needs at least one profile member");
  std::vector<std::size_t> dropped;
  std::vector<std::vector<Mask>> mods;
  std::vector<std::vector<SePair>> ses;
  for (std::size_t i = 0; i < psi.programs.size(); ++i) {
    SeModelSet s = se_models(psi.programs[i], a, limits);
    if (s.empty()) {
      dropped.push_back(i);
      continue;
    }
    ses.push_back(s.elems());
    mods.push_back(classical_models(psi.programs[i], a, limits));
  }
  if (ses.empty())  // every member unsatisfiable
    return finish(SeModelSet(a), MergeOp::Arbitrate, std::move(dropped));
  std::vector<Mask> total_pool = min_a_union(mods, limits);
  std::vector<SePair> union_se = min_a_union(ses, limits);
  return finish(SeModelSet(a, assemble(total_pool, union_se)), MergeOp::Arbitrate,
                std::move(dropped));
}

MergeResult merge_basic(const BeliefProfile& psi, const Alphabet& a,
                        const Limits& limits) {
  if (!psi.has_constraints || psi.programs.empty())
    throw ModelSetError("basic merging needs a constraints program at index 0");
  SeModelSet s0 = se_models(psi.programs[0], a, limits);
  if (s0.empty())  // unsatisfiable constraints force an unsatisfiable result
    return finish(SeModelSet(a), MergeOp::MergeBasic, {});
  std::vector<std::size_t> dropped;
  std::vector<std::vector<Mask>> mods{classical_models(psi.programs[0], a, limits)};
  std::vector<std::vector<SePair>> ses{s0.elems()};
  for (std::size_t i = 1; i < psi.programs.size(); ++i) {
    SeModelSet s = se_models(psi.programs[i], a, limits);
    if (s.empty()) {
      dropped.push_back(i);
      continue;
    }
    ses.push_back(s.elems());
    mods.push_back(classical_models(psi.programs[i], a, limits));
  }
  std::vector<Mask> total_pool = min_b_zero(mods, limits);
  std::vector<SePair> zero_se = min_b_zero(ses, limits);
  return finish(SeModelSet(a, assemble(total_pool, zero_se)), MergeOp::MergeBasic,
                std::move(dropped));
}

}  // namespace sechange
