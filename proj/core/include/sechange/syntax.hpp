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

#ifndef SECHANGE_SYNTAX_HPP
#define SECHANGE_SYNTAX_HPP

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sechange {

// Atoms are plain identifier strings ([a-z][a-zA-Z0-9_]*, "not" reserved).
// Each of the four parts of a rule is kept sorted and duplicate-free.
struct Rule {
  std::vector<std::string> head_pos;  // H(r)+
  std::vector<std::string> head_neg;  // H(r)-
  std::vector<std::string> body_pos;  // B(r)+
  std::vector<std::string> body_neg;  // B(r)-
  int id = 0;                         // unique within its program, 1-based

  bool operator==(const Rule& other) const {
    return head_pos == other.head_pos && head_neg == other.head_neg &&
           body_pos == other.body_pos && body_neg == other.body_neg;
  }
};

// Normalizes the four parts (sort + unique) without touching the id.
Rule make_rule(std::vector<std::string> head_pos,
               std::vector<std::string> head_neg,
               std::vector<std::string> body_pos,
               std::vector<std::string> body_neg, int id = 0);

struct Program {
  std::vector<Rule> rules;  // ordered by id
  std::optional<std::vector<std::string>> declared_alphabet;  // sorted

  // All atoms occurring in rules (sorted, unique); ignores the directive.
  std::vector<std::string> occurring_atoms() const;
};

// Finite ordered set of atoms; indices follow the lexicographic order and
// key the bit-vector representation of interpretations.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> atoms);  // sorts + dedupes

  std::size_t size() const { return atoms_.size(); }
  bool empty() const { return atoms_.empty(); }
  const std::vector<std::string>& atoms() const { return atoms_; }
  const std::string& atom(std::size_t i) const { return atoms_[i]; }
  // -1 when absent.
  int index_of(std::string_view name) const;
  bool contains(std::string_view name) const { return index_of(name) >= 0; }

  bool operator==(const Alphabet& other) const { return atoms_ == other.atoms_; }

 private:
  std::vector<std::string> atoms_;
};

// Ordered sequence of programs; when has_constraints is set, index 0 is the
// constraints program P0 of basic merging.
struct BeliefProfile {
  std::vector<Program> programs;
  bool has_constraints = false;
};

// Parses the concrete syntax:
//   program   := (directive | rule)*
//   directive := "#alphabet" atom ("," atom)* "."
//   rule      := head "." | head ":-" body "." | ":-" body "."
//   head      := hlit (";" hlit)*   hlit := atom | "not" atom
//   body      := blit ("," blit)*   blit := atom | "not" atom
//   atom      := [a-z][a-zA-Z0-9_]*          ("%" starts a comment)
// Rule ids are assigned 1..n in source order. Throws ParseError.
Program parse_program(std::string_view text);

// Deterministic text: directive first (when declared), then rules by id,
// atoms sorted within each part. parse_program(render_program(p)) yields p
// up to id renumbering.
std::string render_program(const Program& program);
std::string render_rule(const Rule& rule);

// The alphabet governing an operation: the override when given (it must
// cover every occurring atom, else AlphabetError naming the first missing
// one), otherwise the union of occurring atoms and declared alphabets.
Alphabet effective_alphabet(std::span<const Program> operands,
                            const std::optional<Alphabet>& override = std::nullopt);
Alphabet effective_alphabet(const Program& p,
                            const std::optional<Alphabet>& override = std::nullopt);
Alphabet effective_alphabet(const Program& p, const Program& q,
                            const std::optional<Alphabet>& override = std::nullopt);

bool is_valid_atom_name(std::string_view name);

}  // namespace sechange

#endif  // SECHANGE_SYNTAX_HPP
