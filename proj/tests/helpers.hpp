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

#ifndef SECHANGE_TESTS_HELPERS_HPP
#define SECHANGE_TESTS_HELPERS_HPP

#include <random>
#include <set>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "sechange/model.hpp"
#include "sechange/semantics.hpp"
#include "sechange/syntax.hpp"

namespace helpers {

inline sechange::Program prog(const std::string& text) {
  return sechange::parse_program(text);
}

inline sechange::Alphabet alpha(std::vector<std::string> atoms) {
  return sechange::Alphabet(std::move(atoms));
}

// SE set over `a` from pair spellings like "(p,pq)" or "({p},{p,q})".
inline sechange::SeModelSet se_set(const sechange::Alphabet& a,
                                   const std::vector<std::string>& pairs) {
  std::vector<sechange::SePair> elems;
  for (const std::string& p : pairs) elems.push_back(sechange::parse_se_pair(p, a));
  return sechange::SeModelSet(a, std::move(elems));
}

inline std::set<std::string> pair_strings(const sechange::SeModelSet& s) {
  std::set<std::string> out;
  for (sechange::SePair p : s.elems())
    out.insert(sechange::format_se_pair(p, s.alphabet()));
  return out;
}

inline oracle::AtomSet to_atom_set(sechange::Mask m, const sechange::Alphabet& a) {
  auto v = sechange::mask_atoms(m, a);
  return oracle::AtomSet(v.begin(), v.end());
}

inline sechange::Mask to_mask(const oracle::AtomSet& s, const sechange::Alphabet& a) {
  return sechange::mask_from_atoms({s.begin(), s.end()}, a);
}

inline oracle::SeP to_sep(sechange::SePair p, const sechange::Alphabet& a) {
  return oracle::SeP{to_atom_set(p.here, a), to_atom_set(p.there, a)};
}

inline sechange::SePair to_sepair(const oracle::SeP& p, const sechange::Alphabet& a) {
  return sechange::SePair{to_mask(p.x, a), to_mask(p.y, a)};
}

// Random well-defined SE set: pairs drawn independently, then closed by
// adding the total companion of every member.
inline sechange::SeModelSet random_well_defined(const sechange::Alphabet& a,
                                                std::mt19937_64& rng,
                                                int percent = 30) {
  std::vector<sechange::SePair> elems;
  sechange::Mask end = sechange::Mask{1} << a.size();
  for (sechange::Mask y = 0; y < end; ++y) {
    sechange::Mask x = y;
    while (true) {
      if (static_cast<int>(rng() % 100) < percent)
        elems.push_back(sechange::SePair{x, y});
      if (x == 0) break;
      x = (x - 1) & y;
    }
  }
  std::size_t n = elems.size();
  for (std::size_t i = 0; i < n; ++i)
    elems.push_back(sechange::SePair{elems[i].there, elems[i].there});
  return sechange::SeModelSet(a, std::move(elems));
}

}  // namespace helpers

#endif  // SECHANGE_TESTS_HELPERS_HPP
