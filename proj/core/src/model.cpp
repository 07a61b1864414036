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

#include "sechange/model.hpp"

#include <algorithm>
#include <sstream>

#include "sechange/error.hpp"

namespace sechange {

void check_capacity(const Alphabet& alphabet, const Limits& limits) {
  int cap = std::min(limits.max_atoms, kMaskBits - 1);
  if (static_cast<int>(alphabet.size()) > cap) {
    std::ostringstream os;
    os << "alphabet of " << alphabet.size() << " atoms exceeds the capacity cap of "
       << cap << " (raise --max-atoms to override)";
    throw CapacityError(os.str());
  }
}

SeModelSet::SeModelSet(Alphabet alphabet, std::vector<SePair> elems)
    : alphabet_(std::move(alphabet)), elems_(std::move(elems)) {
  std::sort(elems_.begin(), elems_.end());
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
}

bool SeModelSet::contains(SePair p) const {
  return std::binary_search(elems_.begin(), elems_.end(), p);
}

void SeModelSet::insert(SePair p) {
  auto it = std::lower_bound(elems_.begin(), elems_.end(), p);
  if (it == elems_.end() || !(*it == p)) elems_.insert(it, p);
}

std::vector<std::string> mask_atoms(Mask m, const Alphabet& a) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (m & (Mask{1} << i)) out.push_back(a.atom(i));
  return out;
}

Mask mask_from_atoms(const std::vector<std::string>& atoms, const Alphabet& a) {
  Mask m = 0;
  for (const std::string& name : atoms) {
    int i = a.index_of(name);
    if (i < 0) throw AlphabetError("atom '" + name + "' is not in the alphabet");
    m |= Mask{1} << i;
  }
  return m;
}

std::string format_interpretation(Mask m, const Alphabet& a) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (m & (Mask{1} << i)) {
      if (!first) os << ",";
      os << a.atom(i);
      first = false;
    }
  }
  os << "}";
  return os.str();
}

std::string format_se_pair(SePair p, const Alphabet& a) {
  return "(" + format_interpretation(p.here, a) + "," +
         format_interpretation(p.there, a) + ")";
}

std::string format_se_set(const SeModelSet& s) {
  std::ostringstream os;
  for (SePair p : s.elems()) os << format_se_pair(p, s.alphabet()) << "\n";
  return os.str();
}

namespace {

std::string strip(std::string_view v) {
  std::size_t b = v.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  std::size_t e = v.find_last_not_of(" \t\r\n");
  return std::string(v.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view v, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= v.size(); ++i) {
    if (i == v.size() || v[i] == sep) {
      parts.push_back(strip(v.substr(start, i - start)));
      start = i + 1;
    }
  }
  return parts;
}

// A pair component: either "{a,b}" or a compact run of single-letter atoms.
std::vector<std::string> parse_component(const std::string& text) {
  std::vector<std::string> atoms;
  if (!text.empty() && text.front() == '{') {
    if (text.back() != '}') throw ParseError("unterminated '{' in SE pair");
    for (const std::string& tok : split(std::string_view(text).substr(1, text.size() - 2), ',')) {
      if (tok.empty()) continue;
      if (!is_valid_atom_name(tok)) throw ParseError("bad atom '" + tok + "' in SE pair");
      atoms.push_back(tok);
    }
    return atoms;
  }
  for (char c : text) {
    if (c < 'a' || c > 'z')
      throw ParseError("bad compact SE component '" + text + "'");
    atoms.emplace_back(1, c);
  }
  return atoms;
}

// Splits "(lhs,rhs)" at the top-level comma.
std::pair<std::string, std::string> split_pair(std::string_view line) {
  std::string body = strip(line);
  if (body.size() < 2 || body.front() != '(' || body.back() != ')')
    throw ParseError("expected '(here,there)': " + body);
  body = body.substr(1, body.size() - 2);
  int depth = 0;
  for (std::size_t i = 0; i < body.size(); ++i) {
    if (body[i] == '{') ++depth;
    if (body[i] == '}') --depth;
    if (body[i] == ',' && depth == 0)
      return {strip(std::string_view(body).substr(0, i)),
              strip(std::string_view(body).substr(i + 1))};
  }
  throw ParseError("missing component separator in SE pair: (" + body + ")");
}

}  // namespace

SePair parse_se_pair(std::string_view text, const Alphabet& a) {
  auto [lhs, rhs] = split_pair(text);
  SePair p{mask_from_atoms(parse_component(lhs), a),
           mask_from_atoms(parse_component(rhs), a)};
  if ((p.here & ~p.there) != 0)
    throw ParseError("SE pair violates here subseteq there: " + std::string(text));
  return p;
}

SeModelSet parse_se_set(std::string_view text, const std::optional<Alphabet>& override) {
  std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>> raw;
  std::vector<std::string> names;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    std::string body = strip(line.substr(0, line.find('%')));
    if (body.empty()) continue;
    auto [lhs, rhs] = split_pair(body);
    raw.emplace_back(parse_component(lhs), parse_component(rhs));
    for (const auto& atom : raw.back().first) names.push_back(atom);
    for (const auto& atom : raw.back().second) names.push_back(atom);
  }
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
  Alphabet alphabet = override ? *override : Alphabet(names);
  if (override) {
    for (const std::string& name : names)
      if (!override->contains(name))
        throw AlphabetError("alphabet override is missing atom '" + name + "'");
  }
  std::vector<SePair> elems;
  for (const auto& [h, t] : raw) {
    SePair p{mask_from_atoms(h, alphabet), mask_from_atoms(t, alphabet)};
    if ((p.here & ~p.there) != 0)
      throw ParseError("SE pair violates here subseteq there");
    elems.push_back(p);
  }
  return SeModelSet(std::move(alphabet), std::move(elems));
}

}  // namespace sechange
