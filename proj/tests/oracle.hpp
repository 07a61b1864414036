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

// Definition-direct reference implementations used as test oracles. These
// deliberately avoid the bit-mask engine: everything is sets of atom names,
// every candidate is checked straight off the definitions.

#ifndef SECHANGE_TESTS_ORACLE_HPP
#define SECHANGE_TESTS_ORACLE_HPP

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "sechange/syntax.hpp"

namespace oracle {

using AtomSet = std::set<std::string>;

inline bool subset(const AtomSet& a, const AtomSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline AtomSet symdiff(const AtomSet& a, const AtomSet& b) {
  AtomSet out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                std::inserter(out, out.end()));
  return out;
}

inline bool intersects(const std::vector<std::string>& part, const AtomSet& s) {
  return std::any_of(part.begin(), part.end(),
                     [&](const std::string& a) { return s.count(a) > 0; });
}

inline bool all_in(const std::vector<std::string>& part, const AtomSet& s) {
  return std::all_of(part.begin(), part.end(),
                     [&](const std::string& a) { return s.count(a) > 0; });
}

// Classical truth: (B+ and not B-) -> (or H+ or or not H-).
inline bool holds_classically(const sechange::Rule& r, const AtomSet& i) {
  bool body = all_in(r.body_pos, i) && !intersects(r.body_neg, i);
  if (!body) return true;
  return intersects(r.head_pos, i) || !all_in(r.head_neg, i);
}

inline bool holds_classically(const sechange::Program& p, const AtomSet& i) {
  return std::all_of(p.rules.begin(), p.rules.end(),
                     [&](const sechange::Rule& r) { return holds_classically(r, i); });
}

// The reduct filters of the definition, applied rule by rule.
struct PositiveRule {
  std::vector<std::string> head;
  std::vector<std::string> body;
};

inline std::vector<PositiveRule> reduct(const sechange::Program& p, const AtomSet& y) {
  std::vector<PositiveRule> out;
  for (const sechange::Rule& r : p.rules) {
    if (!all_in(r.head_neg, y)) continue;
    if (intersects(r.body_neg, y)) continue;
    out.push_back(PositiveRule{r.head_pos, r.body_pos});
  }
  return out;
}

inline bool holds_positive(const std::vector<PositiveRule>& rules, const AtomSet& i) {
  for (const PositiveRule& r : rules) {
    if (all_in(r.body, i) && !intersects(r.head, i)) return false;
  }
  return true;
}

inline std::vector<AtomSet> all_subsets(const std::vector<std::string>& atoms) {
  std::vector<AtomSet> out{AtomSet{}};
  for (const std::string& a : atoms) {
    std::size_t n = out.size();
    for (std::size_t i = 0; i < n; ++i) {
      AtomSet with = out[i];
      with.insert(a);
      out.push_back(std::move(with));
    }
  }
  return out;
}

inline std::vector<AtomSet> models(const sechange::Program& p,
                                   const std::vector<std::string>& alphabet) {
  std::vector<AtomSet> out;
  for (const AtomSet& i : all_subsets(alphabet))
    if (holds_classically(p, i)) out.push_back(i);
  return out;
}

struct SeP {
  AtomSet x, y;
  bool operator<(const SeP& o) const { return std::tie(y, x) < std::tie(o.y, o.x); }
  bool operator==(const SeP& o) const { return x == o.x && y == o.y; }
};

// Every candidate pair (X, Y) checked directly: X subseteq Y, Y |= P,
// X |= P^Y.
inline std::vector<SeP> se_models(const sechange::Program& p,
                                  const std::vector<std::string>& alphabet) {
  std::vector<SeP> out;
  for (const AtomSet& y : all_subsets(alphabet)) {
    for (const AtomSet& x : all_subsets(alphabet)) {
      if (!subset(x, y)) continue;
      if (!holds_classically(p, y)) continue;
      if (!holds_positive(reduct(p, y), x)) continue;
      out.push_back(SeP{x, y});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Subset-minimal models of the reduct.
inline std::vector<AtomSet> answer_sets(const sechange::Program& p,
                                        const std::vector<std::string>& alphabet) {
  std::vector<AtomSet> out;
  for (const AtomSet& y : all_subsets(alphabet)) {
    auto red = reduct(p, y);
    if (!holds_positive(red, y)) continue;
    bool minimal = true;
    for (const AtomSet& z : all_subsets(alphabet)) {
      if (z == y || !subset(z, y)) continue;
      if (holds_positive(red, z)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(y);
  }
  return out;
}

// --- distance selectors, straight off the quantifiers ------------------------

struct SetDiff {
  AtomSet d;
};
struct PairD {
  AtomSet h, t;
};

inline bool strictly_below(const AtomSet& a, const AtomSet& b) {
  return subset(a, b) && a != b;
}
inline bool dominates(const PairD& a, const PairD& b) {
  return subset(a.h, b.h) && subset(a.t, b.t) && !(a.h == b.h && a.t == b.t);
}

inline std::vector<AtomSet> sigma_subset(const std::vector<AtomSet>& e1,
                                         const std::vector<AtomSet>& e2) {
  std::vector<AtomSet> out;
  for (const AtomSet& a : e1) {
    bool selected = false;
    for (const AtomSet& b : e2) {
      AtomSet d = symdiff(a, b);
      bool beaten = false;
      for (const AtomSet& a2 : e1) {
        for (const AtomSet& b2 : e2) {
          if (strictly_below(symdiff(a2, b2), d)) beaten = true;
        }
      }
      if (!beaten) selected = true;
    }
    if (selected) out.push_back(a);
  }
  return out;
}

inline std::vector<SeP> sigma_subset(const std::vector<SeP>& e1,
                                     const std::vector<SeP>& e2) {
  auto diff = [](const SeP& a, const SeP& b) {
    return PairD{symdiff(a.x, b.x), symdiff(a.y, b.y)};
  };
  std::vector<SeP> out;
  for (const SeP& a : e1) {
    bool selected = false;
    for (const SeP& b : e2) {
      PairD d = diff(a, b);
      bool beaten = false;
      for (const SeP& a2 : e1)
        for (const SeP& b2 : e2)
          if (dominates(diff(a2, b2), d)) beaten = true;
      if (!beaten) selected = true;
    }
    if (selected) out.push_back(a);
  }
  return out;
}

inline std::vector<AtomSet> sigma_card(const std::vector<AtomSet>& e1,
                                       const std::vector<AtomSet>& e2) {
  std::size_t best = SIZE_MAX;
  for (const AtomSet& a : e1)
    for (const AtomSet& b : e2) best = std::min(best, symdiff(a, b).size());
  std::vector<AtomSet> out;
  for (const AtomSet& a : e1) {
    for (const AtomSet& b : e2) {
      if (symdiff(a, b).size() == best) {
        out.push_back(a);
        break;
      }
    }
  }
  return out;
}

inline std::vector<SeP> sigma_card(const std::vector<SeP>& e1,
                                   const std::vector<SeP>& e2) {
  auto measure = [](const SeP& a, const SeP& b) {
    return std::pair(symdiff(a.y, b.y).size(), symdiff(a.x, b.x).size());
  };
  std::pair<std::size_t, std::size_t> best{SIZE_MAX, SIZE_MAX};
  for (const SeP& a : e1)
    for (const SeP& b : e2) best = std::min(best, measure(a, b));
  std::vector<SeP> out;
  for (const SeP& a : e1) {
    for (const SeP& b : e2) {
      if (measure(a, b) == best) {
        out.push_back(a);
        break;
      }
    }
  }
  return out;
}

// --- tuple minimality, direct definition --------------------------------------

template <typename Elem, typename DiffFn, typename LeqCoord>
std::vector<std::vector<Elem>> minimal_generic(const std::vector<std::vector<Elem>>& n,
                                               bool pairs_mode, DiffFn diff,
                                               LeqCoord coord_leq) {
  auto leq = [&](const std::vector<Elem>& s, const std::vector<Elem>& t) {
    if (pairs_mode) {
      for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
          if (!coord_leq(diff(s[i], s[j]), diff(t[i], t[j]))) return false;
      return true;
    }
    for (std::size_t j = 1; j < s.size(); ++j)
      if (!coord_leq(diff(s[0], s[j]), diff(t[0], t[j]))) return false;
    return true;
  };
  std::vector<std::vector<Elem>> out;
  for (const auto& s : n) {
    bool keep = true;
    for (const auto& t : n)
      if (leq(t, s) && !leq(s, t)) keep = false;
    if (keep) out.push_back(s);
  }
  return out;
}

inline std::vector<std::vector<AtomSet>> min_a(const std::vector<std::vector<AtomSet>>& n) {
  return minimal_generic<AtomSet>(
      n, true, [](const AtomSet& a, const AtomSet& b) { return symdiff(a, b); },
      [](const AtomSet& a, const AtomSet& b) { return subset(a, b); });
}
inline std::vector<std::vector<AtomSet>> min_b(const std::vector<std::vector<AtomSet>>& n) {
  return minimal_generic<AtomSet>(
      n, false, [](const AtomSet& a, const AtomSet& b) { return symdiff(a, b); },
      [](const AtomSet& a, const AtomSet& b) { return subset(a, b); });
}
inline std::vector<std::vector<SeP>> min_a(const std::vector<std::vector<SeP>>& n) {
  return minimal_generic<SeP>(
      n, true,
      [](const SeP& a, const SeP& b) {
        return PairD{symdiff(a.x, b.x), symdiff(a.y, b.y)};
      },
      [](const PairD& a, const PairD& b) {
        return subset(a.h, b.h) && subset(a.t, b.t);
      });
}
inline std::vector<std::vector<SeP>> min_b(const std::vector<std::vector<SeP>>& n) {
  return minimal_generic<SeP>(
      n, false,
      [](const SeP& a, const SeP& b) {
        return PairD{symdiff(a.x, b.x), symdiff(a.y, b.y)};
      },
      [](const PairD& a, const PairD& b) {
        return subset(a.h, b.h) && subset(a.t, b.t);
      });
}

}  // namespace oracle

#endif  // SECHANGE_TESTS_ORACLE_HPP
