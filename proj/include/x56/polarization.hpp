// Degree-4 classes on the Fermat quartic: the very-ampleness test, the census
// of classes with fixed degree against h48, and X56-configurations of lines.
#pragma once

#include <array>
#include <map>
#include <thread>
#include <set>
#include <string>
#include <vector>

#include "x56/fermat.hpp"

namespace x56 {

enum class PolStatus { not_nef, has_fixed_component, hyperelliptic, singular_image, very_ample };

inline const char* to_string(PolStatus s) {
  switch (s) {
    case PolStatus::not_nef: return "not_nef";
    case PolStatus::has_fixed_component: return "has_fixed_component";
    case PolStatus::hyperelliptic: return "hyperelliptic";
    case PolStatus::singular_image: return "singular_image";
    case PolStatus::very_ample: return "very_ample";
  }
  return "?";
}

struct PolarizationVerdict {
  Vec h;
  PolStatus status = PolStatus::not_nef;
  std::vector<Vec> line_classes;  // filled when very ample
};

/// Conditions checked in order; the status names the first one that fails.
/// A class outside the positive cone of `ample` is reported as not nef.
inline PolarizationVerdict classify_degree4(const Lattice& S, const Vec& ample, const Vec& h) {
  if (S.norm(h) != 4) throw InputError("classify_degree4 needs <h,h> = 4");
  PolarizationVerdict v;
  v.h = h;
  if (sgn(S.pair(h, ample)) <= 0 || !enumerate_separating(S, ample, h, Rational(-2)).empty()) return v;
  if (!enumerate_fixed_pairing(S, h, 1, 0).empty()) {
    v.status = PolStatus::has_fixed_component;
    return v;
  }
  if (!enumerate_fixed_pairing(S, h, 2, 0).empty()) {
    v.status = PolStatus::hyperelliptic;
    return v;
  }
  if (!enumerate_fixed_pairing(S, h, 0, -2).empty()) {
    v.status = PolStatus::singular_image;
    return v;
  }
  v.status = PolStatus::very_ample;
  v.line_classes = enumerate_fixed_pairing(S, h, 1, -2);
  return v;
}

/// Row-vector action x -> x R with R stored as integer rows.
using IntIsometry = std::vector<Vec>;

inline IntIsometry to_int_isometry(const ZMat& R) {
  IntIsometry out(R.rows(), Vec(R.cols()));
  for (std::size_t i = 0; i < R.rows(); ++i)
    for (std::size_t j = 0; j < R.cols(); ++j) out[i][j] = R(i, j).get_si();
  return out;
}

inline Vec act(const Vec& x, const IntIsometry& R) { return detail::row_times(x, R); }

/// Orbits of a finite set of vectors under isometries given as generators; each orbit sorted,
/// orbits ordered by their least (canonical) element.
inline std::vector<std::vector<Vec>> vector_orbits(const std::vector<Vec>& items, const std::vector<IntIsometry>& gens) {
  std::set<Vec> left(items.begin(), items.end());
  std::vector<std::vector<Vec>> out;
  while (!left.empty()) {
    std::vector<Vec> orb{*left.begin()};
    left.erase(left.begin());
    for (std::size_t k = 0; k < orb.size(); ++k)
      for (const auto& g : gens) {
        Vec y = act(orb[k], g);
        if (left.erase(y)) orb.push_back(std::move(y));
      }
    std::sort(orb.begin(), orb.end());
    out.push_back(std::move(orb));
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct CensusOrbit {
  Vec representative;  // least element
  std::size_t size = 0;
  PolStatus status = PolStatus::not_nef;
  std::size_t line_count = 0;  // when very ample
};

struct Census {
  long degree = 0;
  std::vector<Vec> vectors;  // sorted
  std::vector<CensusOrbit> orbits;
  std::map<PolStatus, std::pair<std::size_t, std::size_t>> by_status;  // status -> (vectors, orbits)
  std::vector<Vec> very_ample;                                         // sorted
  std::size_t very_ample_orbits_with_galois = 0;
};

/// Classes v with <v,h48> = d and <v,v> = 4, split into orbits of the group
/// generated by `aut`.  The status is constant on orbits, so only the orbit
/// representatives are classified; `extra` generators (Galois) are used to
/// count orbits of the larger group on the very ample classes.
inline Census census_Hd(const FermatSurface& fs, long d, const std::vector<IntIsometry>& aut,
                        const std::vector<IntIsometry>& extra = {}, unsigned threads = 1) {
  Census c;
  c.degree = d;
  c.vectors = enumerate_fixed_pairing(fs.S, fs.h48, d, 4);
  auto orbs = vector_orbits(c.vectors, aut);
  c.orbits.resize(orbs.size());
  threads = std::max(1u, threads);
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&, t] {
      for (std::size_t o = t; o < orbs.size(); o += threads) {
        auto v = classify_degree4(fs.S, fs.h48, orbs[o].front());
        c.orbits[o] = {orbs[o].front(), orbs[o].size(), v.status, v.line_classes.size()};
      }
    });
  for (auto& th : pool) th.join();
  for (std::size_t o = 0; o < orbs.size(); ++o) {
    auto& e = c.by_status[c.orbits[o].status];
    e.first += orbs[o].size();
    e.second += 1;
    if (c.orbits[o].status == PolStatus::very_ample)
      c.very_ample.insert(c.very_ample.end(), orbs[o].begin(), orbs[o].end());
  }
  std::sort(c.very_ample.begin(), c.very_ample.end());
  auto all = aut;
  all.insert(all.end(), extra.begin(), extra.end());
  c.very_ample_orbits_with_galois = vector_orbits(c.very_ample, all).size();
  return c;
}

/// Ordered 7-tuple (l1, l2, m1, m2, m3, m4, n) of line indices.
using X56Config = std::array<int, 7>;

/// Checks the pair-orbit conditions; `label` is the pair-orbit label table.
inline bool is_x56_configuration(const std::vector<std::vector<int>>& label, const X56Config& c) {
  auto in = [&](int a, int b, int o) { return a != b && label[a][b] == o; };
  const int l1 = c[0], l2 = c[1], m1 = c[2], m2 = c[3], m3 = c[4], m4 = c[5], n = c[6];
  if (!in(l1, l2, 4)) return false;
  if (!in(l1, m1, 1) || !in(l2, m1, 1)) return false;
  for (int m : {m2, m3, m4})
    if (!in(l1, m, 3) || !in(l2, m, 3) || !in(m1, m, 7)) return false;
  if (!in(m2, m3, 5) || !in(m2, m4, 8) || !in(m3, m4, 8)) return false;
  return in(l1, n, 8) && in(l2, n, 8) && in(m1, n, 8) && in(m2, n, 2) && in(m3, n, 2) && in(m4, n, 7);
}

inline std::vector<X56Config> find_x56_configurations(const std::vector<std::vector<int>>& label) {
  const int N = static_cast<int>(label.size());
  std::vector<X56Config> out;
  for (int l1 = 0; l1 < N; ++l1)
    for (int l2 = 0; l2 < N; ++l2) {
      if (l1 == l2 || label[l1][l2] != 4) continue;
      for (int m1 = 0; m1 < N; ++m1) {
        if (m1 == l1 || m1 == l2 || label[l1][m1] != 1 || label[l2][m1] != 1) continue;
        std::vector<int> ms;
        for (int m = 0; m < N; ++m)
          if (m != l1 && m != l2 && m != m1 && label[l1][m] == 3 && label[l2][m] == 3 && label[m1][m] == 7) ms.push_back(m);
        for (int m2 : ms)
          for (int m3 : ms)
            for (int m4 : ms)
              for (int n = 0; n < N; ++n) {
                X56Config c{l1, l2, m1, m2, m3, m4, n};
                if (is_x56_configuration(label, c)) out.push_back(c);
              }
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

/// 3 h48 - (l1 + l2 + m1 + ... + m4).
inline Vec polarization_from_config(const FermatSurface& fs, const std::vector<std::vector<int>>& label,
                                    const X56Config& c) {
  if (!is_x56_configuration(label, c)) throw InputError("not an X56-configuration");
  Vec h(fs.h48.size());
  for (std::size_t i = 0; i < h.size(); ++i) h[i] = 3 * fs.h48[i];
  for (int k = 0; k < 6; ++k)
    for (std::size_t i = 0; i < h.size(); ++i) h[i] -= fs.classes[c[k]][i];
  return h;
}

inline X56Config seed_configuration() {
  X56Config c{};
  const auto& s = reference::seed_configuration();
  for (std::size_t k = 0; k < 7; ++k) c[k] = static_cast<int>(tag_index(to_tag(s[k])));
  return c;
}

inline std::vector<IntIsometry> isometries_of_perms(const FermatSurface& fs, const std::vector<Perm>& ps) {
  std::vector<IntIsometry> out;
  for (const Perm& p : ps) out.push_back(to_int_isometry(isometry_of_line_perm(fs, p)));
  return out;
}

}  // namespace x56
