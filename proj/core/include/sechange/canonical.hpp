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

#ifndef SECHANGE_CANONICAL_HPP
#define SECHANGE_CANONICAL_HPP

#include "sechange/model.hpp"
#include "sechange/syntax.hpp"

namespace sechange {

enum class CanonicalKind { Glp, Dlp };

// A program reconstructed from an SE-model set; se_models(program,
// source.alphabet) == source by construction.
struct CanonicalProgram {
  Program program;
  SeModelSet source;
  CanonicalKind kind = CanonicalKind::Glp;
};

// Canonical GLP of a well-defined set s:
//   r_Y     :  :- Y, not (A\Y).                for (Y,Y) not in s
//   r_{X,Y} :  (Y\X) ; not Y :- X, not (A\Y).  for X subset Y, (X,Y) not in
//                                              s, (Y,Y) in s
// Rules sorted by (|Y|, Y, |X|, X); throws ModelSetError (with the offending
// pair) when s is not well-defined.
CanonicalProgram canonical_glp(const SeModelSet& s);

// Canonical DLP of a complete set s: r_Y as above plus
//   r'_{X,Y} :  (Y\X) :- X, not (A\Y).
// Throws ModelSetError (with a witnessing triple) when s is not complete.
CanonicalProgram canonical_dlp(const SeModelSet& s);

}  // namespace sechange

#endif  // SECHANGE_CANONICAL_HPP
