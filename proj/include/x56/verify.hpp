// The thirteen end-to-end checks.  Each criterion is a list of claims with
// an expected and a computed value; expensive intermediate results are
// shared through a context so that verify-all computes everything once.
#pragma once

#include <chrono>
#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "x56/polarization.hpp"
#include "x56/properties.hpp"
#include "x56/reduction.hpp"

namespace x56 {

struct Claim {
  std::string id;
  std::string expected;
  std::string computed;
  bool pass = false;
};

struct CriterionResult {
  int number = 0;
  std::string title;
  std::vector<Claim> claims;
  std::string error;  // exception text, if the computation itself failed
  double seconds = 0;

  bool pass() const {
    if (!error.empty() || claims.empty()) return false;
    for (const auto& c : claims)
      if (!c.pass) return false;
    return true;
  }
  std::string first_failure() const {
    if (!error.empty()) return error;
    for (const auto& c : claims)
      if (!c.pass) return c.id + ": expected " + c.expected + ", got " + c.computed;
    return claims.empty() ? "no claims" : "";
  }
};

namespace detail {

inline std::string show(bool b) { return b ? "true" : "false"; }
inline std::string show(const std::string& s) { return s; }
inline std::string show(const char* s) { return s; }
template <class T>
std::string show(const T& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}
template <class T>
std::string show(const std::vector<T>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + show(v[i]);
  return s + ")";
}

}  // namespace detail

class Verifier {
 public:
  explicit Verifier(unsigned threads = 1) : threads_(std::max(1u, threads)) {}

  // shared, lazily computed data
  const FermatSurface& fs() { return get(fs_, [] { return build_fermat_surface(); }); }
  const FermatGroups& groups() { return get(groups_, [&] { return fermat_groups(fs(), threads_); }); }
  const PairOrbitTable& pairs() { return get(pairs_, [&] { return pair_orbits(fs(), groups().generators); }); }
  const std::vector<IntIsometry>& aut() { return get(aut_, [&] { return isometries_of_perms(fs(), groups().generators); }); }
  const std::vector<IntIsometry>& galois() {
    return get(galois_, [&] {
      std::vector<IntIsometry> g;
      for (const auto& kp : groups().galois) g.push_back(to_int_isometry(isometry_of_line_perm(fs(), kp.second)));
      return g;
    });
  }
  const Census& census(long d) {
    auto it = census_.find(d);
    if (it == census_.end()) it = census_.emplace(d, census_Hd(fs(), d, aut(), galois(), threads_)).first;
    return it->second;
  }
  void set_census(long d, Census c) { census_[d] = std::move(c); }
  const std::vector<X56Config>& configurations() { return get(configs_, [&] { return find_x56_configurations(pairs().label); }); }
  const DerivedPsi& derived() { return get(derived_, [] { return derive_psi(reference_cubics()); }); }
  const X56Lines& lines() { return get(lines_, [&] { return lines_on_x56(fs(), reference_cubics(), derived().psi); }); }
  const X56Automorphisms& automorphisms() { return get(autx_, [&] { return aut_x56(fs(), lines(), derived().psi, threads_); }); }
  const SmoothnessBound& bound() {
    return get(bound_, [&] { return smoothness_bound(derived().psi, default_orderings(true)); });
  }
  const X56Data& x56_data() {
    return get(data_, [&] {
      return X56Data{&fs(), &lines(), derived().psi, reference_cubics(), dual_line_candidates(fs(), lines()), &bound()};
    });
  }

  CriterionResult run(int k) {
    CriterionResult r;
    r.number = k;
    r.title = title(k);
    const auto t0 = std::chrono::steady_clock::now();
    try {
      claims_ = &r.claims;
      switch (k) {
        case 1: c1(); break;
        case 2: c2(); break;
        case 3: c3(); break;
        case 4: c4(); break;
        case 5: c5(); break;
        case 6: c6(); break;
        case 7: c7(); break;
        case 8: c8(); break;
        case 9: c9(); break;
        case 10: c10(); break;
        case 11: c11(); break;
        case 12: c12(); break;
        case 13: c13(); break;
        default: throw InputError("no criterion " + std::to_string(k));
      }
    } catch (const std::exception& e) {
      r.error = e.what();
    }
    claims_ = nullptr;
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
  }

  static std::string title(int k) {
    static const char* t[] = {"",
                              "Gram matrix of the basis lines",
                              "line classes of the Fermat quartic",
                              "tau-points",
                              "orbits of pairs of lines",
                              "discriminant forms and period group",
                              "automorphism groups of the Fermat quartic",
                              "polarizations of degree 4",
                              "X56-configurations",
                              "equation of X56",
                              "lines on X56",
                              "automorphisms of X56",
                              "reductions modulo primes",
                              "property suites"};
    return k >= 1 && k <= 13 ? t[k] : "?";
  }

 private:
  template <class T, class Make>
  const T& get(std::unique_ptr<T>& slot, Make make) {
    if (!slot) slot = std::make_unique<T>(make());
    return *slot;
  }

  template <class A, class B>
  void claim(const std::string& id, const A& expected, const B& computed) {
    claims_->push_back({id, detail::show(expected), detail::show(computed), expected == computed});
  }
  void holds(const std::string& id, bool ok) { claim(id, true, ok); }

  void c1() {
    const auto& S = fs().S;
    const auto& ref = reference::gram();
    std::size_t bad = 0;
    for (std::size_t i = 0; i < ref.size(); ++i)
      for (std::size_t j = 0; j < ref.size(); ++j)
        if (S.gram()(i, j) != ref[i][j]) ++bad;
    claim("gram.rank", std::size_t{20}, S.rank());
    claim("gram.mismatches", std::size_t{0}, bad);
    claim("gram.det", Rational(reference::gram_determinant), S.determinant());
  }

  void c2() {
    auto f48 = enumerate_fixed_pairing(fs().S, fs().h48, 1, -2);
    claim("F48.count", std::size_t{48}, f48.size());
    std::vector<Vec> cl = fs().classes;
    std::sort(cl.begin(), cl.end());
    holds("F48.equals_line_classes", cl == f48);
    claim("h48", Vec(reference::h48().begin(), reference::h48().end()), fs().h48);
  }

  void c3() {
    auto tp = tau_points(fs());
    claim("tau.count", reference::tau_point_count, tp.size());
    std::vector<int> per_line(fs().lines.size(), 0);
    bool four = true;
    std::set<Point3<CycNum>> pts;
    for (const auto& t : tp) {
      four = four && t.lines.size() == 4;
      for (int l : t.lines) ++per_line[l];
      pts.insert(t.point);
    }
    holds("tau.four_lines_each", four);
    holds("tau.two_per_line", std::all_of(per_line.begin(), per_line.end(), [](int c) { return c == 2; }));
    bool o12 = true, o3 = true;
    const auto& lab = pairs().label;
    for (std::size_t a = 0; a < fs().lines.size(); ++a)
      for (std::size_t b = a + 1; b < fs().lines.size(); ++b) {
        if (fs().intersection[a][b] != 1) continue;
        const bool at_tau = pts.count(meeting_point(fs().lines[a], fs().lines[b])) > 0;
        if (lab[a][b] <= 2) o12 = o12 && at_tau;
        if (lab[a][b] == 3) o3 = o3 && !at_tau;
      }
    holds("tau.o1_o2_meet_at_tau", o12);
    holds("tau.o3_meet_elsewhere", o3);
  }

  void c4() {
    const auto& t = pairs();
    holds("pairs.labels_consistent", t.labels_consistent);
    std::vector<std::size_t> sizes, want;
    for (const auto& o : t.orbits) sizes.push_back(o.size);
    for (const auto& r : reference::pair_orbits()) want.push_back(r.size);
    claim("pairs.sizes", want, sizes);
    bool reps = true, blocks = true, inter = true;
    for (std::size_t i = 0; i < reference::pair_orbits().size() && i < t.orbits.size(); ++i) {
      const auto& r = reference::pair_orbits()[i];
      const int a = fs().index_of(line_from_tag(to_tag(r.a))), b = fs().index_of(line_from_tag(to_tag(r.b)));
      reps = reps && t.label[a][b] == static_cast<int>(i) + 1;
      inter = inter && t.orbits[i].intersecting == r.intersecting;
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) blocks = blocks && t.orbits[i].A[j][k] == r.block[j][k];
    }
    holds("pairs.representatives", reps);
    holds("pairs.intersecting", inter);
    holds("pairs.counting_blocks", blocks);
  }

  void c5() {
    DiscForm qS = fermat_disc_form(fs());
    bool q_ok = qS.size() == 2;
    for (std::size_t i = 0; i < 2 && q_ok; ++i)
      for (std::size_t j = 0; j < 2; ++j)
        q_ok = q_ok && qS.values(i, j) == reduce_mod(Rational(reference::qS_times8[i][j], 8), i == j ? 2 : 1);
    holds("qS.matrix", q_ok);
    DiscForm qT = discriminant_form(transcendental_model());
    holds("qT.identity_over_8", qT.size() == 2 && qT.values(0, 0) == Rational(1, 8) && qT.values(1, 1) == Rational(1, 8) &&
                                    qT.values(0, 1) == 0);
    const auto& pg = groups().period;
    claim("O(T)", reference::orthogonal_T_order, pg.orthogonal_T);
    claim("O(qT)", reference::orthogonal_qT_order, pg.orthogonal_qT);
    holds("etaT.injective", pg.eta_T_injective);
    claim("GammaT.order", reference::period_T_order, pg.period_T);
    claim("phi.count", std::size_t{16}, pg.isomorphism_count);
    holds("GammaS.independent_of_phi", pg.independent_of_phi);
    std::vector<ModMat> want(reference::period_group().begin(), reference::period_group().end());
    std::sort(want.begin(), want.end());
    holds("GammaS.matrices", pg.gamma == want);
  }

  void c6() {
    const auto& g = groups();
    claim("G48~.order", reference::stabilizer_h48_order, g.stabilizer.elements.size());
    claim("G48.order", reference::aut_fermat_order, g.hodge.size());
    holds("G48.equals_projective", g.hodge_equals_aut);
    holds("G48~.generated_with_galois", g.generated_by_aut_and_galois);
  }

  void c7() {
    for (long d = 1; d <= 3; ++d)
      claim("H" + std::to_string(d) + ".count", std::size_t{0}, enumerate_fixed_pairing(fs().S, fs().h48, d, 4).size());
    const auto& h4 = census(4);
    holds("H4.is_h48", h4.vectors.size() == 1 && h4.vectors[0] == fs().h48);
    const auto& h5 = census(5);
    claim("H5.count", reference::census5_size, h5.vectors.size());
    claim("H5.orbits", std::size_t{1}, h5.orbits.size());
    claim("H5.not_nef", h5.vectors.size(), h5.by_status.count(PolStatus::not_nef) ? h5.by_status.at(PolStatus::not_nef).first : 0);
    const auto& c = census(6);
    const auto& r = reference::census6;
    claim("H6.count", r.total, c.vectors.size());
    claim("H6.orbits", r.orbits, c.orbits.size());
    auto st = [&](PolStatus s) {
      auto it = c.by_status.find(s);
      return it == c.by_status.end() ? std::string("0/0")
                                     : std::to_string(it->second.first) + "/" + std::to_string(it->second.second);
    };
    auto pr = [](std::size_t a, std::size_t b) { return std::to_string(a) + "/" + std::to_string(b); };
    claim("H6.not_nef", pr(r.not_nef, r.not_nef_orbits), st(PolStatus::not_nef));
    claim("H6.hyperelliptic", pr(r.hyperelliptic, r.hyperelliptic_orbits), st(PolStatus::hyperelliptic));
    claim("H6.singular_image", pr(r.singular, r.singular_orbits), st(PolStatus::singular_image));
    claim("H6.very_ample", pr(r.very_ample, r.very_ample_orbits), st(PolStatus::very_ample));
    claim("H6.fixed_component", std::string("0/0"), st(PolStatus::has_fixed_component));
    claim("H6.very_ample_galois_orbits", std::size_t{1}, c.very_ample_orbits_with_galois);
  }

  void c8() {
    const auto& all = configurations();
    claim("configs.count", reference::configuration_count, all.size());
    std::set<Vec> images;
    for (const auto& cfg : all) images.insert(polarization_from_config(fs(), pairs().label, cfg));
    const auto& va = census(6).very_ample;
    std::set<Vec> vas(va.begin(), va.end());
    holds("configs.map_into_very_ample", std::includes(vas.begin(), vas.end(), images.begin(), images.end()));
    const Vec h = polarization_from_config(fs(), pairs().label, seed_configuration());
    claim("seed.h56", h56_vector(), h);
    claim("seed.<h56,h48>", Rational(6), fs().S.pair(h, fs().h48));
    claim("seed.<h56,h56>", Rational(4), fs().S.norm(h));
  }

  void c9() {
    auto sys = cubics_through_lines(seed_six_lines());
    claim("cubics.dimension", std::size_t{4}, sys.basis.size());
    bool in = true;
    for (const auto& g : reference_cubics()) in = in && sys.contains(g);
    holds("cubics.reference_in_system", in);
    const auto& d = derived();
    claim("relation.rows", std::size_t{290}, d.rows);
    claim("relation.cols", std::size_t{35}, d.cols);
    claim("relation.kernel_dim", std::size_t{1}, d.kernel_dim);
    holds("psi.equals_reference", d.psi == psi_reference());
    holds("psi.equals_closed_form", d.psi == psi_from_formula());
    holds("rho_sigma_psi.zero", rho_sigma(d.psi, reference_cubics()).is_zero());
  }

  void c10() {
    auto v = classify_degree4(fs().S, fs().h48, h56_vector());
    claim("F56.count", reference::lines_x56, v.line_classes.size());
    const auto& xl = lines();
    std::vector<Vec> f56 = v.line_classes;
    std::sort(f56.begin(), f56.end());
    holds("F56.matches_lines", f56 == xl.classes);
    std::size_t shared = 0;
    std::set<Vec> f48(fs().classes.begin(), fs().classes.end());
    for (const Vec& c : f56) shared += f48.count(c);
    claim("F48_cap_F56", reference::shared_classes, shared);
    claim("lines.count", reference::lines_x56, xl.lines.size());
    bool z3 = true, on = true;
    for (const auto& l : xl.lines) {
      z3 = z3 && entries_in_z_zeta_third(l);
      on = on && line_on_surface(derived().psi, l);
    }
    holds("lines.entries_in_Z[zeta,1/3]", z3);
    holds("lines.on_surface", on);
    holds("lines.intersections_match", intersections_match(fs(), xl));
    const auto& a = automorphisms();
    std::vector<std::size_t> sizes;
    for (const auto& o : a.orbits) sizes.push_back(o.size());
    claim("G56.orbit_sizes", std::vector<std::size_t>{8, 16, 32}, sizes);
    holds("h56.from_orbit32", a.h56_from_orbit32);
    holds("h56.from_orbits_8_16", a.h56_from_orbits_8_16);
  }

  void c11() {
    const auto& a = automorphisms();
    claim("G56~.order", reference::stabilizer_h56_order, a.stabilizer.elements.size());
    claim("G56.order", reference::aut_x56_order, a.group.size());
    holds("G56~.others_not_projective", a.others_have_no_matrix);
    for (int k = 0; k < 2; ++k) {
      const std::string g = "gamma" + std::to_string(k + 1);
      holds(g + ".in_G56", a.gamma_found[k]);
      claim(g + ".order", 4, a.gamma_order[k]);
      holds(g + ".preserves_psi", a.gamma_preserves_psi[k]);
    }
    holds("gammas.generate_G56", a.gammas_generate);
  }

  void c12() {
    const auto& X = x56_data();
    const CPoly& psi = X.psi;
    claim("F'56.count", std::size_t{56}, X.dual.size());
    const auto P2 = split_prime(2).front();
    const auto [P3, P3b] = primes_over_three();
    for (const auto& [name, P] : {std::pair<std::string, PrimeOfZZeta>{"P2", P2}, {"P3'", P3b}}) {
      auto r = smoothness_report(psi, P, false);
      holds(name + ".singular", !r.smooth);
      holds(name + ".singular_at_(1:0:i:0)", singular_at(psi, P, expected_singular_point(P)));
    }
    auto r3 = reduction_audit(X, P3);
    holds("P3.smooth", r3.smooth);
    holds("P3.hermitian", r3.psi_is_hermitian);
    holds("P3.reduced_lines", r3.reduced_lines_ok);
    claim("P3.unique_transversals", X.dual.size(), r3.with_unique_transversal);
    claim("P3.lines", static_cast<long>(reference::lines_char3), r3.line_count);
    std::size_t primes = 0, good = 0;
    std::string bad;
    for (long p : audit_primes())
      for (const auto& P : split_prime(p)) {
        ++primes;
        auto r = reduction_audit(X, P);
        const bool ok = r.smooth && r.reduced_lines_ok && r.f_independent && r.without_transversal == X.dual.size() &&
                        r.line_count == 56 && (!r.gb_comparison_applies || r.gb_matches_reduction);
        if (ok)
          ++good;
        else if (bad.empty())
          bad = r.prime;
      }
    claim("sample.primes_with_56_lines", primes, good);
    if (!bad.empty()) claim("sample.first_bad_prime", std::string(), bad);
    // every p > 3 in the bound S is decided directly
    bool s_ok = true;
    for (long p : bound().primes)
      if (p > 3)
        for (const auto& P : split_prime(p)) s_ok = s_ok && direct_smoothness(psi, P).smooth;
    holds("bound.primes_above_3_smooth", s_ok);
    holds("bound.contains_2_and_3", std::count(bound().primes.begin(), bound().primes.end(), 2) &&
                                       std::count(bound().primes.begin(), bound().primes.end(), 3));
  }

  void c13() {
    for (const PropertyResult& r : {reduction_commutes(200), gb_reduction_oracle(24), gcds_identity(200),
                                    enumeration_brute_force(), isometry_group_closure()}) {
      claim(r.name, std::string("0 failures"), std::to_string(r.failures) + " failures" +
                                                   (r.first_failure.empty() ? "" : " (" + r.first_failure + ")"));
      holds(r.name + " (ran)", r.cases > 0);
    }
  }

  unsigned threads_;
  std::vector<Claim>* claims_ = nullptr;
  std::unique_ptr<FermatSurface> fs_;
  std::unique_ptr<FermatGroups> groups_;
  std::unique_ptr<PairOrbitTable> pairs_;
  std::unique_ptr<std::vector<IntIsometry>> aut_, galois_;
  std::map<long, Census> census_;
  std::unique_ptr<std::vector<X56Config>> configs_;
  std::unique_ptr<DerivedPsi> derived_;
  std::unique_ptr<X56Lines> lines_;
  std::unique_ptr<X56Automorphisms> autx_;
  std::unique_ptr<SmoothnessBound> bound_;
  std::unique_ptr<X56Data> data_;
};

/// One line per criterion: "[PASS] 7 polarizations of degree 4 (12.3 s)".
inline std::string summary_line(const CriterionResult& r) {
  std::ostringstream os;
  os << (r.pass() ? "[PASS] " : "[FAIL] ") << r.number << " " << r.title;
  os.setf(std::ios::fixed);
  os.precision(1);
  os << " (" << r.seconds << " s)";
  if (!r.pass()) os << ": " << r.first_failure();
  return os.str();
}

}  // namespace x56
