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

#include "sechange/orders.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <unordered_map>
#include <unordered_set>

#include "sechange/error.hpp"

namespace sechange {

namespace {

int popcount(Mask m) { return std::popcount(m); }

std::uint64_t pack(PairDiff d) {
  return (static_cast<std::uint64_t>(d.first) << 32) | d.second;
}

// --- generic diff/key plumbing so the classical and SE selectors share one
// implementation. A "diff" is Mask for classical sets, PairDiff for SE sets.

inline Mask diff_of(Mask a, Mask b) { return a ^ b; }
inline PairDiff diff_of(SePair a, SePair b) { return pair_symdiff(a, b); }

inline std::uint64_t key_of(Mask d) { return d; }
inline std::uint64_t key_of(PairDiff d) { return pack(d); }

// Strict domination (smaller strictly undercuts larger) for each kind.
inline bool strictly_below(Mask smaller, Mask larger) {
  return (smaller & ~larger) == 0 && smaller != larger;
}
inline bool strictly_below(PairDiff smaller, PairDiff larger) {
  return pairdiff_dominates(smaller, larger);
}

inline int total_count(Mask d) { return popcount(d); }
inline int total_count(PairDiff d) { return popcount(d.first) + popcount(d.second); }

// Minimal elements of a realized-diff set, as packed keys. Domination
// strictly shrinks the total atom count, so sorting by it bounds each scan
// to the strict-prefix; a realized zero diff dominates everything else.
template <typename Diff>
std::unordered_set<std::uint64_t> minimal_diffs(std::vector<Diff> diffs) {
  std::unordered_set<std::uint64_t> minimal;
  std::sort(diffs.begin(), diffs.end(), [](const Diff& a, const Diff& b) {
    return total_count(a) < total_count(b);
  });
  if (!diffs.empty() && total_count(diffs.front()) == 0) {
    minimal.insert(key_of(diffs.front()));
    return minimal;
  }
  for (std::size_t i = 0; i < diffs.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < i && total_count(diffs[j]) < total_count(diffs[i]); ++j) {
      if (strictly_below(diffs[j], diffs[i])) {
        dominated = true;
        break;
      }
    }
    if (!dominated) minimal.insert(key_of(diffs[i]));
  }
  return minimal;
}

template <typename Elem>
std::vector<Elem> sigma_subset_impl(const std::vector<Elem>& e1,
                                    const std::vector<Elem>& e2) {
  if (e1.empty() || e2.empty()) return {};
  std::unordered_set<std::uint64_t> seen;
  using Diff = decltype(diff_of(e1[0], e2[0]));
  std::vector<Diff> realized;
  for (const Elem& a : e1) {
    for (const Elem& b : e2) {
      Diff d = diff_of(a, b);
      if (seen.insert(key_of(d)).second) realized.push_back(d);
    }
  }
  auto minimal = minimal_diffs(std::move(realized));
  std::vector<Elem> out;
  for (const Elem& a : e1) {
    for (const Elem& b : e2) {
      if (minimal.count(key_of(diff_of(a, b)))) {
        out.push_back(a);
        break;
      }
    }
  }
  return out;
}

// Cardinality measure: plain count for classical diffs, (there,here)
// lexicographic for SE diffs.
inline std::uint64_t measure(Mask d) { return static_cast<std::uint64_t>(popcount(d)); }
inline std::uint64_t measure(PairDiff d) {
  return (static_cast<std::uint64_t>(popcount(d.second)) << 32) |
         static_cast<std::uint64_t>(popcount(d.first));
}

template <typename Elem>
std::vector<Elem> sigma_card_impl(const std::vector<Elem>& e1,
                                  const std::vector<Elem>& e2) {
  if (e1.empty() || e2.empty()) return {};
  std::uint64_t best = ~std::uint64_t{0};
  for (const Elem& a : e1)
    for (const Elem& b : e2) best = std::min(best, measure(diff_of(a, b)));
  std::vector<Elem> out;
  for (const Elem& a : e1) {
    for (const Elem& b : e2) {
      if (measure(diff_of(a, b)) == best) {
        out.push_back(a);
        break;
      }
    }
  }
  return out;
}

// --- tuple orders -------------------------------------------------------------

inline bool coord_leq(Mask a, Mask b) { return (a & ~b) == 0; }
inline bool coord_leq(PairDiff a, PairDiff b) { return pairdiff_dominates_eq(a, b); }

template <typename Tuple>
bool leq_a_impl(const Tuple& s, const Tuple& t) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (!coord_leq(diff_of(s[i], s[j]), diff_of(t[i], t[j]))) return false;
  return true;
}

template <typename Tuple>
bool leq_b_impl(const Tuple& s, const Tuple& t) {
  for (std::size_t j = 1; j < s.size(); ++j)
    if (!coord_leq(diff_of(s[0], s[j]), diff_of(t[0], t[j]))) return false;
  return true;
}

template <typename Tuple, typename Leq>
std::vector<Tuple> minimal_tuples(const std::vector<Tuple>& n, Leq leq) {
  std::vector<Tuple> out;
  for (const Tuple& s : n) {
    bool keep = true;
    for (const Tuple& t : n) {
      if (leq(t, s) && !leq(s, t)) {
        keep = false;
        break;
      }
    }
    if (keep) out.push_back(s);
  }
  return out;
}

template <typename T>
std::vector<T> sorted_unique(std::vector<T> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// --- product-aware minimization -------------------------------------------
//
// Tuples of a profile product are grouped by their diff signature (the
// sequence of coordinate diffs entering <=_a or <=_b); domination depends
// on signatures only, so minimality is decided once per signature and the
// product is walked twice: collect signatures, then harvest the tuples
// whose signature is minimal.

using Sig = std::vector<std::uint64_t>;

struct SigHash {
  std::size_t operator()(const Sig& s) const {
    std::size_t h = 1469598103934665603ull;
    for (std::uint64_t v : s) {
      h ^= v;
      h *= 1099511628211ull;
    }
    return h;
  }
};

template <typename Elem>
struct ProductWalker {
  const std::vector<std::vector<Elem>>& sets;
  std::vector<std::size_t> idx;

  explicit ProductWalker(const std::vector<std::vector<Elem>>& s)
      : sets(s), idx(s.size(), 0) {}

  bool empty() const {
    return std::any_of(sets.begin(), sets.end(),
                       [](const auto& e) { return e.empty(); });
  }
  const Elem& at(std::size_t i) const { return sets[i][idx[i]]; }
  bool advance() {
    for (std::size_t i = idx.size(); i-- > 0;) {
      if (++idx[i] < sets[i].size()) return true;
      idx[i] = 0;
    }
    return false;
  }
};

template <typename Elem>
void check_product_cap(const std::vector<std::vector<Elem>>& sets,
                       const Limits& limits) {
  std::size_t total = 1;
  for (const auto& e : sets) {
    if (e.empty()) return;
    if (total > limits.max_tuples / e.size())
      throw CapacityError("profile tuple product exceeds the cap of " +
                          std::to_string(limits.max_tuples) + " tuples");
    total *= e.size();
  }
}

// diff keys entering the order: all i<j pairs for <=_a, (0,j) for <=_b.
template <typename Elem, typename Walker>
Sig signature_a(const Walker& w) {
  Sig sig;
  for (std::size_t i = 0; i < w.sets.size(); ++i)
    for (std::size_t j = i + 1; j < w.sets.size(); ++j)
      sig.push_back(key_of(diff_of(w.at(i), w.at(j))));
  return sig;
}

template <typename Elem, typename Walker>
Sig signature_b(const Walker& w) {
  Sig sig;
  for (std::size_t j = 1; j < w.sets.size(); ++j)
    sig.push_back(key_of(diff_of(w.at(0), w.at(j))));
  return sig;
}

inline Mask unkey_mask(std::uint64_t k) { return static_cast<Mask>(k); }
inline PairDiff unkey_pair(std::uint64_t k) {
  return PairDiff{static_cast<Mask>(k >> 32), static_cast<Mask>(k & 0xffffffffu)};
}

template <typename Elem>
bool sig_coord_leq(std::uint64_t a, std::uint64_t b);
template <>
bool sig_coord_leq<Mask>(std::uint64_t a, std::uint64_t b) {
  return coord_leq(unkey_mask(a), unkey_mask(b));
}
template <>
bool sig_coord_leq<SePair>(std::uint64_t a, std::uint64_t b) {
  return coord_leq(unkey_pair(a), unkey_pair(b));
}

template <typename Elem>
bool sig_leq(const Sig& a, const Sig& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!sig_coord_leq<Elem>(a[i], b[i])) return false;
  return true;
}

template <typename Elem, bool kMinA>
std::vector<Elem> product_min_impl(const std::vector<std::vector<Elem>>& sets,
                                   const Limits& limits, bool collect_all_coords) {
  if (sets.empty()) return {};
  for (const auto& e : sets)
    if (e.empty()) return {};
  check_product_cap(sets, limits);

  std::unordered_set<Sig, SigHash> sigs;
  {
    ProductWalker<Elem> w(sets);
    do {
      sigs.insert(kMinA ? signature_a<Elem>(w) : signature_b<Elem>(w));
    } while (w.advance());
  }
  std::unordered_set<Sig, SigHash> minimal;
  for (const Sig& s : sigs) {
    bool dominated = false;
    for (const Sig& t : sigs) {
      if (sig_leq<Elem>(t, s) && !sig_leq<Elem>(s, t)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) minimal.insert(s);
  }
  std::vector<Elem> out;
  {
    ProductWalker<Elem> w(sets);
    do {
      Sig s = kMinA ? signature_a<Elem>(w) : signature_b<Elem>(w);
      if (minimal.count(s)) {
        if (collect_all_coords) {
          for (std::size_t i = 0; i < sets.size(); ++i) out.push_back(w.at(i));
        } else {
          out.push_back(w.at(0));
        }
      }
    } while (w.advance());
  }
  return sorted_unique(std::move(out));
}

}  // namespace

PairDiff pair_symdiff(SePair a, SePair b) {
  return PairDiff{a.here ^ b.here, a.there ^ b.there};
}

bool pairdiff_subset(PairDiff a, PairDiff b) {
  if ((a.second & ~b.second) != 0) return false;
  if (a.second == b.second) return (a.first & ~b.first) == 0;
  return true;
}

bool pairdiff_strict_subset(PairDiff a, PairDiff b) {
  return pairdiff_subset(a, b) && !pairdiff_subset(b, a);
}

bool pairdiff_card_leq(PairDiff a, PairDiff b) {
  int at = popcount(a.second), bt = popcount(b.second);
  if (at != bt) return at < bt;
  return popcount(a.first) <= popcount(b.first);
}

bool pairdiff_card_lt(PairDiff a, PairDiff b) {
  return pairdiff_card_leq(a, b) && !pairdiff_card_leq(b, a);
}

bool pairdiff_dominates_eq(PairDiff smaller, PairDiff larger) {
  return (smaller.first & ~larger.first) == 0 && (smaller.second & ~larger.second) == 0;
}

bool pairdiff_dominates(PairDiff smaller, PairDiff larger) {
  return pairdiff_dominates_eq(smaller, larger) && !(smaller == larger);
}

std::vector<Mask> sigma_subset(const std::vector<Mask>& e1, const std::vector<Mask>& e2) {
  return sorted_unique(sigma_subset_impl(e1, e2));
}
std::vector<SePair> sigma_subset(const std::vector<SePair>& e1,
                                 const std::vector<SePair>& e2) {
  return sorted_unique(sigma_subset_impl(e1, e2));
}
std::vector<Mask> sigma_card(const std::vector<Mask>& e1, const std::vector<Mask>& e2) {
  return sorted_unique(sigma_card_impl(e1, e2));
}
std::vector<SePair> sigma_card(const std::vector<SePair>& e1,
                               const std::vector<SePair>& e2) {
  return sorted_unique(sigma_card_impl(e1, e2));
}

bool leq_a(const ClassicalTuple& s, const ClassicalTuple& t) { return leq_a_impl(s, t); }
bool leq_a(const SeTuple& s, const SeTuple& t) { return leq_a_impl(s, t); }
bool leq_b(const ClassicalTuple& s, const ClassicalTuple& t) { return leq_b_impl(s, t); }
bool leq_b(const SeTuple& s, const SeTuple& t) { return leq_b_impl(s, t); }

std::vector<ClassicalTuple> min_a(const std::vector<ClassicalTuple>& n) {
  return minimal_tuples(n, [](const auto& s, const auto& t) { return leq_a_impl(s, t); });
}
std::vector<SeTuple> min_a(const std::vector<SeTuple>& n) {
  return minimal_tuples(n, [](const auto& s, const auto& t) { return leq_a_impl(s, t); });
}
std::vector<ClassicalTuple> min_b(const std::vector<ClassicalTuple>& n) {
  return minimal_tuples(n, [](const auto& s, const auto& t) { return leq_b_impl(s, t); });
}
std::vector<SeTuple> min_b(const std::vector<SeTuple>& n) {
  return minimal_tuples(n, [](const auto& s, const auto& t) { return leq_b_impl(s, t); });
}

std::vector<Mask> tuple_union(const std::vector<ClassicalTuple>& n) {
  std::vector<Mask> out;
  for (const auto& t : n) out.insert(out.end(), t.begin(), t.end());
  return sorted_unique(std::move(out));
}
std::vector<SePair> tuple_union(const std::vector<SeTuple>& n) {
  std::vector<SePair> out;
  for (const auto& t : n) out.insert(out.end(), t.begin(), t.end());
  return sorted_unique(std::move(out));
}
std::vector<Mask> coord_zero(const std::vector<ClassicalTuple>& n) {
  std::vector<Mask> out;
  for (const auto& t : n)
    if (!t.empty()) out.push_back(t[0]);
  return sorted_unique(std::move(out));
}
std::vector<SePair> coord_zero(const std::vector<SeTuple>& n) {
  std::vector<SePair> out;
  for (const auto& t : n)
    if (!t.empty()) out.push_back(t[0]);
  return sorted_unique(std::move(out));
}

std::vector<Mask> min_a_union(const std::vector<std::vector<Mask>>& sets,
                              const Limits& limits) {
  return product_min_impl<Mask, true>(sets, limits, /*collect_all_coords=*/true);
}
std::vector<SePair> min_a_union(const std::vector<std::vector<SePair>>& sets,
                                const Limits& limits) {
  return product_min_impl<SePair, true>(sets, limits, /*collect_all_coords=*/true);
}
std::vector<Mask> min_b_zero(const std::vector<std::vector<Mask>>& sets,
                             const Limits& limits) {
  return product_min_impl<Mask, false>(sets, limits, /*collect_all_coords=*/false);
}
std::vector<SePair> min_b_zero(const std::vector<std::vector<SePair>>& sets,
                               const Limits& limits) {
  return product_min_impl<SePair, false>(sets, limits, /*collect_all_coords=*/false);
}

}  // namespace sechange
