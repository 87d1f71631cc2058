// Permutation groups on small point sets, given as explicit element lists.
#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <set>
#include <string>
#include <vector>

#include "x56/rational.hpp"

namespace x56 {

/// p[x] is the image of x.
using Perm = std::vector<int>;

inline Perm identity_perm(std::size_t n) {
  Perm p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<int>(i);
  return p;
}

/// Apply p first, then q (right action: x^(pq) = (x^p)^q).
inline Perm compose(const Perm& p, const Perm& q) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = q[p[i]];
  return r;
}

inline Perm inverse(const Perm& p) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
  return r;
}

inline bool is_permutation(const Perm& p) {
  std::vector<bool> seen(p.size(), false);
  for (int x : p) {
    if (x < 0 || static_cast<std::size_t>(x) >= p.size() || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

inline std::size_t perm_order(const Perm& p) {
  Perm q = p;
  const Perm id = identity_perm(p.size());
  std::size_t k = 1;
  while (q != id) {
    q = compose(q, p);
    ++k;
  }
  return k;
}

/// All elements of the group generated by gens, sorted.
inline std::vector<Perm> group_closure(const std::vector<Perm>& gens, std::size_t n, std::size_t limit = 1u << 22) {
  std::set<Perm> seen{identity_perm(n)};
  std::deque<Perm> todo{identity_perm(n)};
  while (!todo.empty()) {
    Perm g = todo.front();
    todo.pop_front();
    for (const Perm& s : gens) {
      Perm h = compose(g, s);
      if (seen.insert(h).second) {
        if (seen.size() > limit) throw InputError("group closure exceeds the size limit");
        todo.push_back(std::move(h));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

/// True if the sorted element list is a group.  Picks generators from the list
/// until they generate a set containing it; the list is a group iff that set
/// is the list itself.
inline bool is_group(const std::vector<Perm>& sorted_elements) {
  if (sorted_elements.empty()) return false;
  const std::size_t n = sorted_elements[0].size();
  std::vector<Perm> gens;
  std::set<Perm> span{identity_perm(n)};
  for (const Perm& g : sorted_elements) {
    if (span.count(g)) continue;
    gens.push_back(g);
    std::vector<Perm> c;
    try {
      c = group_closure(gens, n, sorted_elements.size());
    } catch (const InputError&) {
      return false;
    }
    span = std::set<Perm>(c.begin(), c.end());
  }
  return std::vector<Perm>(span.begin(), span.end()) == sorted_elements;
}

/// Orbits of a group (given by generators) on points 0..n-1, each sorted, ordered by least element.
inline std::vector<std::vector<int>> point_orbits(const std::vector<Perm>& gens, std::size_t n) {
  std::vector<int> label(n, -1);
  std::vector<std::vector<int>> out;
  for (std::size_t s = 0; s < n; ++s) {
    if (label[s] >= 0) continue;
    std::vector<int> orb{static_cast<int>(s)};
    label[s] = static_cast<int>(out.size());
    for (std::size_t k = 0; k < orb.size(); ++k)
      for (const Perm& g : gens) {
        int y = g[orb[k]];
        if (label[y] < 0) {
          label[y] = static_cast<int>(out.size());
          orb.push_back(y);
        }
      }
    std::sort(orb.begin(), orb.end());
    out.push_back(std::move(orb));
  }
  return out;
}

/// Orbits on arbitrary hashable-by-ordering objects under an action function.
template <class T, class Act>
std::vector<std::vector<T>> orbits_of(const std::vector<T>& items, const std::vector<Perm>& gens, Act act) {
  std::set<T> left(items.begin(), items.end());
  std::vector<std::vector<T>> out;
  while (!left.empty()) {
    T s = *left.begin();
    std::vector<T> orb{s};
    std::set<T> in{s};
    left.erase(s);
    for (std::size_t k = 0; k < orb.size(); ++k)
      for (const Perm& g : gens) {
        T y = act(orb[k], g);
        if (in.insert(y).second) {
          if (!left.erase(y)) throw InputError("action leaves the item set");
          orb.push_back(y);
        }
      }
    std::sort(orb.begin(), orb.end());
    out.push_back(std::move(orb));
  }
  return out;
}

inline std::string perm_str(const Perm& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + ")";
}

}  // namespace x56
