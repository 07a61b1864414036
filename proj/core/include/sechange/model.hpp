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

#ifndef SECHANGE_MODEL_HPP
#define SECHANGE_MODEL_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sechange/syntax.hpp"

namespace sechange {

// An interpretation over an alphabet of n atoms is a bit mask; bit i is the
// i-th atom in the alphabet's (lexicographic) order.
using Mask = std::uint32_t;

inline constexpr int kMaskBits = 32;        // hard width of Mask
inline constexpr int kDefaultMaxAtoms = 14; // soft, overridable cap

struct Limits {
  int max_atoms = kDefaultMaxAtoms;
  std::size_t max_tuples = 2'000'000;  // profile tuple-product cap
};

// Throws CapacityError when the alphabet exceeds the caps.
void check_capacity(const Alphabet& alphabet, const Limits& limits = {});

// SE interpretation (X, Y) with X (here) a subset of Y (there).
struct SePair {
  Mask here = 0;
  Mask there = 0;

  friend bool operator==(const SePair&, const SePair&) = default;
  // (there, here) ascending; the canonical iteration order of SeModelSet.
  friend bool operator<(const SePair& a, const SePair& b) {
    return a.there != b.there ? a.there < b.there : a.here < b.here;
  }
};

// A finite set of SE interpretations over a fixed alphabet, kept sorted by
// (there, here) and duplicate-free.
class SeModelSet {
 public:
  SeModelSet() = default;
  explicit SeModelSet(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}
  SeModelSet(Alphabet alphabet, std::vector<SePair> elems);  // normalizes

  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<SePair>& elems() const { return elems_; }
  std::size_t size() const { return elems_.size(); }
  bool empty() const { return elems_.empty(); }
  bool contains(SePair p) const;

  void insert(SePair p);

  friend bool operator==(const SeModelSet&, const SeModelSet&) = default;

 private:
  Alphabet alphabet_;
  std::vector<SePair> elems_;
};

// --- text forms ------------------------------------------------------------

std::vector<std::string> mask_atoms(Mask m, const Alphabet& a);
Mask mask_from_atoms(const std::vector<std::string>& atoms, const Alphabet& a);

// "{p,q}" (atoms sorted; "{}" when empty).
std::string format_interpretation(Mask m, const Alphabet& a);
// "({p},{p,q})".
std::string format_se_pair(SePair p, const Alphabet& a);
// One pair per line in canonical order.
std::string format_se_set(const SeModelSet& s);

// Accepts the braced form "({p},{p,q})" and the compact paper style
// "(p,pq)" (single-letter atoms, empty component = empty set).
SePair parse_se_pair(std::string_view text, const Alphabet& a);

// Reads a model-set file: one pair per line, "%" comments and blank lines
// ignored. Atom names occurring in the file are collected first; `override`,
// when given, must cover them.
SeModelSet parse_se_set(std::string_view text,
                        const std::optional<Alphabet>& override = std::nullopt);

}  // namespace sechange

#endif  // SECHANGE_MODEL_HPP
