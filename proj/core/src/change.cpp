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

#include "sechange/change.hpp"

#include <algorithm>

#include "sechange/orders.hpp"
#include "sechange/semantics.hpp"

namespace sechange {

namespace {

ChangeResult finish(SeModelSet se, ChangeOp op, const Alphabet& a) {
  ChangeResult r{std::move(se), {}, op, a};
  r.canonical = canonical_glp(r.se);
  return r;
}

std::vector<SePair> intersect(const SeModelSet& x, const SeModelSet& y) {
  std::vector<SePair> out;
  std::set_intersection(x.elems().begin(), x.elems().end(), y.elems().begin(),
                        y.elems().end(), std::back_inserter(out));
  return out;
}

// Assembles { (X,Y) | Y in sigma_mod, X subseteq Y, X proper -> (X,Y) in
// sigma_se } — the well-definedness pattern shared by Definitions 8 and 11.
std::vector<SePair> assemble_revision(const std::vector<Mask>& sigma_mod,
                                      const std::vector<SePair>& sigma_se) {
  std::vector<SePair> out;
  for (Mask y : sigma_mod) out.push_back(SePair{y, y});
  for (SePair p : sigma_se) {
    if (p.here == p.there) continue;
    if (std::binary_search(sigma_mod.begin(), sigma_mod.end(), p.there))
      out.push_back(p);
  }
  return out;
}

ChangeResult revise_with(bool card, ChangeOp op, const Program& p, const Program& q,
                         const Alphabet& a, const Limits& limits) {
  SeModelSet sp = se_models(p, a, limits);
  SeModelSet sq = se_models(q, a, limits);
  if (sp.empty()) return finish(std::move(sq), op, a);
  std::vector<Mask> mod_p = classical_models(p, a, limits);
  std::vector<Mask> mod_q = classical_models(q, a, limits);
  std::vector<Mask> sigma_mod =
      card ? sigma_card(mod_q, mod_p) : sigma_subset(mod_q, mod_p);
  std::vector<SePair> sigma_se =
      card ? sigma_card(sq.elems(), sp.elems()) : sigma_subset(sq.elems(), sp.elems());
  return finish(SeModelSet(a, assemble_revision(sigma_mod, sigma_se)), op, a);
}

}  // namespace

const char* to_string(ChangeOp op) {
  switch (op) {
    case ChangeOp::Expand: return "expand";
    case ChangeOp::Revise: return "revise";
    case ChangeOp::ReviseWeak: return "revise_weak";
    case ChangeOp::ReviseCard: return "revise_card";
    case ChangeOp::Meet: return "meet";
    case ChangeOp::Join: return "join";
  }
  return "?";
}

ChangeResult expand(const Program& p, const Program& q, const Alphabet& a,
                    const Limits& limits) {
  SeModelSet sp = se_models(p, a, limits);
  SeModelSet sq = se_models(q, a, limits);
  return finish(SeModelSet(a, intersect(sp, sq)), ChangeOp::Expand, a);
}

ChangeResult revise(const Program& p, const Program& q, const Alphabet& a,
                    const Limits& limits) {
  return revise_with(/*card=*/false, ChangeOp::Revise, p, q, a, limits);
}

ChangeResult revise_card(const Program& p, const Program& q, const Alphabet& a,
                         const Limits& limits) {
  return revise_with(/*card=*/true, ChangeOp::ReviseCard, p, q, a, limits);
}

ChangeResult revise_weak(const Program& p, const Program& q, const Alphabet& a,
                         const Limits& limits) {
  SeModelSet sp = se_models(p, a, limits);
  SeModelSet sq = se_models(q, a, limits);
  if (sp.empty()) return finish(std::move(sq), ChangeOp::ReviseWeak, a);
  std::vector<SePair> sigma_se = sigma_subset(sq.elems(), sp.elems());
  std::vector<SePair> out = sigma_se;
  for (SePair p2 : sigma_se) out.push_back(SePair{p2.there, p2.there});
  return finish(SeModelSet(a, std::move(out)), ChangeOp::ReviseWeak, a);
}

ChangeResult meet(const Program& p, const Program& q, const Alphabet& a,
                  const Limits& limits) {
  ChangeResult r = expand(p, q, a, limits);
  r.op = ChangeOp::Meet;
  return r;
}

ChangeResult join(const Program& p, const Program& q, const Alphabet& a,
                  const Limits& limits) {
  SeModelSet sp = se_models(p, a, limits);
  SeModelSet sq = se_models(q, a, limits);
  std::vector<SePair> out = sp.elems();
  out.insert(out.end(), sq.elems().begin(), sq.elems().end());
  return finish(SeModelSet(a, std::move(out)), ChangeOp::Join, a);
}

}  // namespace sechange
