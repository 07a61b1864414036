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

#include "sechange/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "sechange/error.hpp"

namespace sechange {

namespace {

void sort_unique(std::vector<std::string>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

bool is_lower(char c) { return c >= 'a' && c <= 'z'; }
bool is_ident(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

// Single-pass recursive-descent reader over the program grammar.
class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  Program parse() {
    Program program;
    std::vector<std::string> declared;
    bool has_directive = false;
    skip_ws();
    while (!at_end()) {
      if (peek() == '#') {
        parse_directive(declared);
        has_directive = true;
      } else {
        program.rules.push_back(parse_rule());
        program.rules.back().id = static_cast<int>(program.rules.size());
      }
      skip_ws();
    }
    if (has_directive) {
      sort_unique(declared);
      for (const Rule& r : program.rules) {
        for (const auto* part : {&r.head_pos, &r.head_neg, &r.body_pos, &r.body_neg}) {
          for (const std::string& atom : *part) {
            if (!std::binary_search(declared.begin(), declared.end(), atom)) {
              // Directives declare a cover, not a filter.
              declared.push_back(atom);
              std::sort(declared.begin(), declared.end());
            }
          }
        }
      }
      program.declared_alphabet = std::move(declared);
    }
    return program;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_ws() {
    while (!at_end()) {
      char c = peek();
      if (c == '%') {
        while (!at_end() && peek() != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  [[noreturn]] void fail(const std::string& msg) const {
    std::ostringstream os;
    os << "parse error at " << line_ << ":" << col_ << ": " << msg;
    throw ParseError(os.str(), line_, col_);
  }

  void expect(char c) {
    skip_ws();
    if (at_end() || peek() != c) fail(std::string("expected '") + c + "'");
    advance();
  }

  bool match(std::string_view tok) {
    skip_ws();
    if (text_.substr(pos_).substr(0, tok.size()) != tok) return false;
    for (std::size_t i = 0; i < tok.size(); ++i) advance();
    return true;
  }

  std::string parse_atom() {
    skip_ws();
    if (at_end() || !is_lower(peek())) fail("expected atom");
    std::string name;
    while (!at_end() && is_ident(peek())) {
      name.push_back(peek());
      advance();
    }
    if (name == "not") fail("'not' is reserved");
    return name;
  }

  // atom or "not" atom; positive goes to pos, negated to neg.
  void parse_literal(std::vector<std::string>& pos, std::vector<std::string>& neg) {
    skip_ws();
    std::size_t save_pos = pos_;
    int save_line = line_, save_col = col_;
    if (!at_end() && is_lower(peek())) {
      std::string word;
      std::size_t p = pos_;
      while (p < text_.size() && is_ident(text_[p])) word.push_back(text_[p++]);
      if (word == "not") {
        pos_ = p;
        col_ += 3;
        neg.push_back(parse_atom());
        return;
      }
    }
    pos_ = save_pos;
    line_ = save_line;
    col_ = save_col;
    pos.push_back(parse_atom());
  }

  void parse_directive(std::vector<std::string>& declared) {
    if (!match("#alphabet")) fail("unknown directive");
    declared.push_back(parse_atom());
    skip_ws();
    while (!at_end() && peek() == ',') {
      advance();
      declared.push_back(parse_atom());
      skip_ws();
    }
    expect('.');
  }

  Rule parse_rule() {
    Rule r;
    skip_ws();
    bool have_head = !(peek() == ':');
    if (have_head) {
      parse_literal(r.head_pos, r.head_neg);
      skip_ws();
      while (!at_end() && peek() == ';') {
        advance();
        parse_literal(r.head_pos, r.head_neg);
        skip_ws();
      }
    }
    skip_ws();
    if (!at_end() && peek() == ':') {
      advance();
      if (at_end() || peek() != '-') fail("expected ':-'");
      advance();
      skip_ws();
      if (!at_end() && peek() != '.') {  // empty body tolerated
        parse_literal(r.body_pos, r.body_neg);
        skip_ws();
        while (!at_end() && peek() == ',') {
          advance();
          parse_literal(r.body_pos, r.body_neg);
          skip_ws();
        }
      }
    } else if (!have_head) {
      fail("expected rule");
    }
    expect('.');
    sort_unique(r.head_pos);
    sort_unique(r.head_neg);
    sort_unique(r.body_pos);
    sort_unique(r.body_neg);
    return r;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

void append_literals(std::ostringstream& os, const std::vector<std::string>& pos,
                     const std::vector<std::string>& neg, const char* sep) {
  bool first = true;
  for (const std::string& a : pos) {
    if (!first) os << sep;
    os << a;
    first = false;
  }
  for (const std::string& a : neg) {
    if (!first) os << sep;
    os << "not " << a;
    first = false;
  }
}

}  // namespace

Rule make_rule(std::vector<std::string> head_pos, std::vector<std::string> head_neg,
               std::vector<std::string> body_pos, std::vector<std::string> body_neg,
               int id) {
  Rule r{std::move(head_pos), std::move(head_neg), std::move(body_pos),
         std::move(body_neg), id};
  sort_unique(r.head_pos);
  sort_unique(r.head_neg);
  sort_unique(r.body_pos);
  sort_unique(r.body_neg);
  return r;
}

std::vector<std::string> Program::occurring_atoms() const {
  std::vector<std::string> out;
  for (const Rule& r : rules) {
    for (const auto* part : {&r.head_pos, &r.head_neg, &r.body_pos, &r.body_neg}) {
      out.insert(out.end(), part->begin(), part->end());
    }
  }
  sort_unique(out);
  return out;
}

Alphabet::Alphabet(std::vector<std::string> atoms) : atoms_(std::move(atoms)) {
  sort_unique(atoms_);
}

int Alphabet::index_of(std::string_view name) const {
  auto it = std::lower_bound(atoms_.begin(), atoms_.end(), name);
  if (it == atoms_.end() || *it != name) return -1;
  return static_cast<int>(it - atoms_.begin());
}

Program parse_program(std::string_view text) { return Reader(text).parse(); }

std::string render_rule(const Rule& rule) {
  std::ostringstream os;
  bool has_head = !rule.head_pos.empty() || !rule.head_neg.empty();
  bool has_body = !rule.body_pos.empty() || !rule.body_neg.empty();
  if (has_head) append_literals(os, rule.head_pos, rule.head_neg, " ; ");
  if (!has_head || has_body) {
    if (has_head) os << " ";
    os << ":-";
    if (has_body) {
      os << " ";
      append_literals(os, rule.body_pos, rule.body_neg, ", ");
    }
  }
  os << ".";
  return os.str();
}

std::string render_program(const Program& program) {
  std::ostringstream os;
  if (program.declared_alphabet && !program.declared_alphabet->empty()) {
    os << "#alphabet";
    const auto& atoms = *program.declared_alphabet;
    for (std::size_t i = 0; i < atoms.size(); ++i)
      os << (i == 0 ? " " : ", ") << atoms[i];
    os << ".\n";
  }
  std::vector<const Rule*> by_id;
  by_id.reserve(program.rules.size());
  for (const Rule& r : program.rules) by_id.push_back(&r);
  std::stable_sort(by_id.begin(), by_id.end(),
                   [](const Rule* a, const Rule* b) { return a->id < b->id; });
  for (const Rule* r : by_id) os << render_rule(*r) << "\n";
  return os.str();
}

Alphabet effective_alphabet(std::span<const Program> operands,
                            const std::optional<Alphabet>& override) {
  std::vector<std::string> names;
  for (const Program& p : operands) {
    auto occ = p.occurring_atoms();
    names.insert(names.end(), occ.begin(), occ.end());
    if (p.declared_alphabet)
      names.insert(names.end(), p.declared_alphabet->begin(),
                   p.declared_alphabet->end());
  }
  sort_unique(names);
  if (override) {
    for (const Program& p : operands) {
      for (const std::string& atom : p.occurring_atoms()) {
        if (!override->contains(atom))
          throw AlphabetError("alphabet override is missing atom '" + atom + "'");
      }
    }
    return *override;
  }
  return Alphabet(std::move(names));
}

Alphabet effective_alphabet(const Program& p, const std::optional<Alphabet>& override) {
  return effective_alphabet(std::span<const Program>(&p, 1), override);
}

Alphabet effective_alphabet(const Program& p, const Program& q,
                            const std::optional<Alphabet>& override) {
  const Program ops[] = {p, q};
  return effective_alphabet(std::span<const Program>(ops, 2), override);
}

bool is_valid_atom_name(std::string_view name) {
  if (name.empty() || !is_lower(name[0]) || name == "not") return false;
  return std::all_of(name.begin(), name.end(), [](char c) { return is_ident(c); });
}

}  // namespace sechange
