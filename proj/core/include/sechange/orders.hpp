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

#ifndef SECHANGE_ORDERS_HPP
#define SECHANGE_ORDERS_HPP

#include <vector>

#include "sechange/model.hpp"

namespace sechange {

// Componentwise symmetric difference of two SE pairs: (X1^Y1, X2^Y2).
// first = here diff, second = there diff.
struct PairDiff {
  Mask first = 0;
  Mask second = 0;

  friend bool operator==(const PairDiff&, const PairDiff&) = default;
};

PairDiff pair_symdiff(SePair a, SePair b);

// The there-first containment on pairs: a.second subseteq b.second, and if
// the seconds are equal then a.first subseteq b.first.
bool pairdiff_subset(PairDiff a, PairDiff b);
// Strict part: subset and not superset.
bool pairdiff_strict_subset(PairDiff a, PairDiff b);

// Cardinality order, there count first: |a| < |b| iff (|a2|,|a1|) <lex
// (|b2|,|b1|) strictly.
bool pairdiff_card_leq(PairDiff a, PairDiff b);
bool pairdiff_card_lt(PairDiff a, PairDiff b);

// Domination order actually used by the distance selectors and the tuple
// orders: componentwise containment of the two diff components. (See the
// weak-revision worked example; the there-first order would drop (r,pqr).)
bool pairdiff_dominates_eq(PairDiff smaller, PairDiff larger);   // subseteq both
bool pairdiff_dominates(PairDiff smaller, PairDiff larger);      // and !=

// --- minimal-distance selectors ---------------------------------------------

// sigma(E1, E2): elements A of E1 admitting a B in E2 whose symmetric
// difference no pair A' in E1, B' in E2 strictly undercuts. Empty when
// either argument is empty.
std::vector<Mask> sigma_subset(const std::vector<Mask>& e1,
                               const std::vector<Mask>& e2);
std::vector<SePair> sigma_subset(const std::vector<SePair>& e1,
                                 const std::vector<SePair>& e2);

// sigma_||(E1, E2): cardinality-minimal pairwise distance; plain |A^B| on
// classical sets, the there-first lexicographic count on SE sets.
std::vector<Mask> sigma_card(const std::vector<Mask>& e1,
                             const std::vector<Mask>& e2);
std::vector<SePair> sigma_card(const std::vector<SePair>& e1,
                               const std::vector<SePair>& e2);

// --- profile tuples ----------------------------------------------------------

using ClassicalTuple = std::vector<Mask>;
using SeTuple = std::vector<SePair>;

// <=_a: componentwise containment of S_i (+) S_j for all i < j.
bool leq_a(const ClassicalTuple& s, const ClassicalTuple& t);
bool leq_a(const SeTuple& s, const SeTuple& t);
// <=_b: coordinate 0 against every j >= 1.
bool leq_b(const ClassicalTuple& s, const ClassicalTuple& t);
bool leq_b(const SeTuple& s, const SeTuple& t);

// Minimal elements (S such that T <= S implies S <= T for all T in n).
std::vector<ClassicalTuple> min_a(const std::vector<ClassicalTuple>& n);
std::vector<SeTuple> min_a(const std::vector<SeTuple>& n);
std::vector<ClassicalTuple> min_b(const std::vector<ClassicalTuple>& n);
std::vector<SeTuple> min_b(const std::vector<SeTuple>& n);

// Union of all coordinates / the 0-coordinates of a tuple set.
std::vector<Mask> tuple_union(const std::vector<ClassicalTuple>& n);
std::vector<SePair> tuple_union(const std::vector<SeTuple>& n);
std::vector<Mask> coord_zero(const std::vector<ClassicalTuple>& n);
std::vector<SePair> coord_zero(const std::vector<SeTuple>& n);

// Product-aware selectors over SE(P_1) x ... x SE(P_n) (never materialize
// the tuples; minimality is decided on diff signatures). Used by the merge
// operators; agree with min_a/min_b + tuple_union/coord_zero by
// construction. Throw CapacityError when the product exceeds
// limits.max_tuples.
std::vector<Mask> min_a_union(const std::vector<std::vector<Mask>>& sets,
                              const Limits& limits = {});
std::vector<SePair> min_a_union(const std::vector<std::vector<SePair>>& sets,
                                const Limits& limits = {});
std::vector<Mask> min_b_zero(const std::vector<std::vector<Mask>>& sets,
                             const Limits& limits = {});
std::vector<SePair> min_b_zero(const std::vector<std::vector<SePair>>& sets,
                               const Limits& limits = {});

}  // namespace sechange

#endif  // SECHANGE_ORDERS_HPP
