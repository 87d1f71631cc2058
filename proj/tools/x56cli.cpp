// Command-line front end: each subcommand prints a short text summary and,
// with --out, writes a JSON report.
#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <thread>

#include "x56/verify.hpp"

using json = nlohmann::ordered_json;
using namespace x56;
namespace fsys = std::filesystem;

namespace {

constexpr const char* kCacheVersion = "x56-cache-1";

struct Options {
  std::string out;
  std::string cache_dir;
  unsigned threads = 1;
  long prime = 0;
  long relative_degree = 6;
  bool all_orderings = false;
  std::string seed_config;
};

std::string q_str(const Rational& q) { return q.get_num().get_str() + "/" + q.get_den().get_str(); }

json gram_json(const QMat& g) {
  json rows = json::array();
  for (std::size_t i = 0; i < g.rows(); ++i) {
    json r = json::array();
    for (std::size_t j = 0; j < g.cols(); ++j) r.push_back(q_str(g(i, j)));
    rows.push_back(r);
  }
  return rows;
}

json cmat_json(const CMat& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(m(i, j).to_coord_string());
    rows.push_back(r);
  }
  return rows;
}

json cpoly_json(const CPoly& f) {
  json terms = json::array();
  for (const auto& [m, c] : f.terms()) terms.push_back({{"exponents", {m[0], m[1], m[2], m[3]}}, {"coeff", c.to_coord_string()}});
  return terms;
}

json ff_json(const FFElem& x) {
  const int d = x.field()->degree();
  return std::vector<std::int64_t>(x.coords().begin(), x.coords().begin() + d);
}

void emit(const Options& o, const json& j) {
  if (o.out.empty()) return;
  std::ofstream f(o.out);
  if (!f) throw InputError("cannot write " + o.out);
  f << j.dump(2) << "\n";
  if (!f) throw InputError("cannot write " + o.out);
}

// --- cache -----------------------------------------------------------------

std::string gram_hash(const Lattice& L) {
  std::string s;
  for (std::size_t i = 0; i < L.rank(); ++i)
    for (std::size_t j = 0; j < L.rank(); ++j) s += q_str(L.gram()(i, j)) + ";";
  return fnv1a_hex(s);
}

fsys::path cache_path(const Options& o, const std::string& key) {
  return fsys::path(o.cache_dir) / (fnv1a_hex(key) + ".json");
}

std::optional<json> cache_load(const Options& o, const std::string& key) {
  if (o.cache_dir.empty()) return std::nullopt;
  std::ifstream f(cache_path(o, key));
  if (!f) return std::nullopt;
  try {
    json j = json::parse(f);
    if (j.value("key", "") != key) return std::nullopt;
    return j["data"];
  } catch (const json::exception&) {
    return std::nullopt;
  }
}

void cache_store(const Options& o, const std::string& key, const json& data) {
  if (o.cache_dir.empty()) return;
  fsys::create_directories(o.cache_dir);
  std::ofstream f(cache_path(o, key));
  f << json{{"key", key}, {"data", data}}.dump() << "\n";
}

PolStatus status_from(const std::string& s) {
  for (PolStatus p : {PolStatus::not_nef, PolStatus::has_fixed_component, PolStatus::hyperelliptic,
                      PolStatus::singular_image, PolStatus::very_ample})
    if (s == to_string(p)) return p;
  throw InputError("unknown status in cache: " + s);
}

json census_to_json(const Census& c) {
  json j;
  j["degree"] = c.degree;
  j["vectors"] = c.vectors;
  json orbs = json::array();
  for (const auto& o : c.orbits)
    orbs.push_back({{"representative", o.representative}, {"size", o.size}, {"status", to_string(o.status)}, {"line_count", o.line_count}});
  j["orbits"] = orbs;
  json st = json::object();
  for (const auto& [s, n] : c.by_status) st[to_string(s)] = {n.first, n.second};
  j["by_status"] = st;
  j["very_ample"] = c.very_ample;
  j["very_ample_orbits_with_galois"] = c.very_ample_orbits_with_galois;
  return j;
}

Census census_from_json(const json& j) {
  Census c;
  c.degree = j.at("degree");
  c.vectors = j.at("vectors").get<std::vector<Vec>>();
  for (const auto& o : j.at("orbits"))
    c.orbits.push_back({o.at("representative").get<Vec>(), o.at("size"), status_from(o.at("status")), o.at("line_count")});
  for (const auto& [k, v] : j.at("by_status").items()) c.by_status[status_from(k)] = {v[0], v[1]};
  c.very_ample = j.at("very_ample").get<std::vector<Vec>>();
  c.very_ample_orbits_with_galois = j.at("very_ample_orbits_with_galois");
  return c;
}

/// Loads the census from the cache when present, otherwise computes and stores it.
const Census& cached_census(Verifier& v, const Options& o, long d) {
  const std::string key = std::string(kCacheVersion) + "|census|" + gram_hash(v.fs().S) + "|d=" + std::to_string(d);
  if (auto j = cache_load(o, key)) {
    v.set_census(d, census_from_json(*j));
  } else {
    cache_store(o, key, census_to_json(v.census(d)));
  }
  return v.census(d);
}

// --- subcommands -----------------------------------------------------------

int cmd_fermat(Verifier& v, const Options& o) {
  const auto& fs = v.fs();
  const auto& g = v.groups();
  const auto tp = tau_points(fs);
  const auto& pairs = v.pairs();
  json j;
  j["gram"] = gram_json(fs.S.gram());
  j["determinant"] = q_str(fs.S.determinant());
  j["h48"] = fs.h48;
  j["line_count"] = fs.lines.size();
  j["tau_points"] = tp.size();
  json po = json::array();
  for (const auto& p : pairs.orbits) po.push_back({{"label", p.label}, {"size", p.size}, {"intersecting", p.intersecting}});
  j["pair_orbits"] = po;
  j["stabilizer_order"] = g.stabilizer.elements.size();
  j["aut_order"] = g.hodge.size();
  j["period_group"] = {{"O_T", g.period.orthogonal_T}, {"O_qT", g.period.orthogonal_qT}, {"Gamma_T", g.period.period_T}};
  std::cout << "Fermat quartic: " << fs.lines.size() << " lines, det " << fs.S.determinant().get_str() << ", "
            << tp.size() << " tau-points, " << pairs.orbits.size() << " pair orbits\n"
            << "h48-stabilizer order " << g.stabilizer.elements.size() << ", automorphisms " << g.hodge.size() << "\n";
  emit(o, j);
  return 0;
}

int cmd_census(Verifier& v, const Options& o) {
  const auto& c = cached_census(v, o, o.relative_degree);
  json j = census_to_json(c);
  j.erase("vectors");
  j["count"] = c.vectors.size();
  std::cout << "H" << o.relative_degree << ": " << c.vectors.size() << " classes in " << c.orbits.size() << " orbits\n";
  for (const auto& [s, n] : c.by_status) std::cout << "  " << to_string(s) << ": " << n.first << " in " << n.second << " orbits\n";
  emit(o, j);
  return 0;
}

X56Config parse_config(const FermatSurface& fs, const std::string& s) {
  // seven tags "i:mu:nu" separated by commas
  X56Config c{};
  std::stringstream ss(s);
  std::string item;
  int k = 0;
  while (std::getline(ss, item, ',')) {
    if (k >= 7) throw InputError("--seed-config needs exactly seven tags");
    LineTag t;
    char a, b;
    std::stringstream ts(item);
    if (!(ts >> t.i >> a >> t.mu >> b >> t.nu) || a != ':' || b != ':') throw InputError("bad tag: " + item);
    c[k++] = fs.index_of(line_from_tag(t));
  }
  if (k != 7) throw InputError("--seed-config needs exactly seven tags");
  return c;
}

X56Config chosen_config(Verifier& v, const Options& o) {
  return o.seed_config.empty() ? seed_configuration() : parse_config(v.fs(), o.seed_config);
}

int cmd_configs(Verifier& v, const Options& o) {
  const auto& all = v.configurations();
  const X56Config c = chosen_config(v, o);
  const bool valid = is_x56_configuration(v.pairs().label, c);
  json j;
  j["count"] = all.size();
  j["seed_valid"] = valid;
  std::cout << all.size() << " X56-configurations\n";
  if (valid) {
    const Vec h = polarization_from_config(v.fs(), v.pairs().label, c);
    auto verdict = classify_degree4(v.fs().S, v.fs().h48, h);
    j["h56"] = h;
    j["h56.h48"] = q_str(v.fs().S.pair(h, v.fs().h48));
    j["h56.h56"] = q_str(v.fs().S.norm(h));
    j["status"] = to_string(verdict.status);
    j["line_count"] = verdict.line_classes.size();
    std::cout << "seed class " << json(h).dump() << ": " << to_string(verdict.status) << ", " << verdict.line_classes.size()
              << " lines\n";
  } else {
    std::cout << "the given tuple is not an X56-configuration\n";
  }
  emit(o, j);
  return valid ? 0 : 1;
}

int cmd_derive_psi(Verifier& v, const Options& o) {
  std::vector<CPoly> f = reference_cubics();
  std::vector<CLine> six;
  if (o.seed_config.empty()) {
    six = seed_six_lines();
  } else {
    const X56Config c = parse_config(v.fs(), o.seed_config);
    for (int k = 0; k < 6; ++k) six.push_back(v.fs().lines[c[k]]);
  }
  auto sys = cubics_through_lines(six, -1);
  if (!o.seed_config.empty()) {
    if (sys.basis.size() != 4) throw InputError("cubics through those six lines form a space of dimension " + std::to_string(sys.basis.size()));
    f = sys.basis;
  }
  auto d = derive_psi(f);
  const bool rho = rho_sigma(d.psi, f).is_zero();
  json j;
  j["system_dimension"] = sys.basis.size();
  j["cubics"] = json::array();
  for (const auto& g : f) j["cubics"].push_back(cpoly_json(g));
  j["rows"] = d.rows;
  j["cols"] = d.cols;
  j["kernel_dim"] = d.kernel_dim;
  j["psi"] = cpoly_json(d.psi);
  j["rho_sigma_zero"] = rho;
  std::cout << "cubics through the six lines: dimension " << sys.basis.size() << "\n"
            << "relation matrix " << d.rows << " x " << d.cols << ", kernel dimension " << d.kernel_dim << "\n"
            << "Psi = " << d.psi.to_string({"y1", "y2", "y3", "y4"}) << "\n"
            << "rho(sigma(Psi)) = 0: " << (rho ? "yes" : "no") << "\n";
  emit(o, j);
  return rho ? 0 : 1;
}

int cmd_lines(Verifier& v, const Options& o) {
  const auto& xl = v.lines();
  json j;
  j["h56"] = xl.h56;
  j["shared_with_fermat"] = xl.shared;
  json ls = json::array();
  for (std::size_t i = 0; i < xl.lines.size(); ++i)
    ls.push_back({{"class", xl.classes[i]}, {"from_fermat_line", static_cast<bool>(xl.from_image[i])},
                  {"equations", cmat_json(xl.lines[i].equations())}});
  j["lines"] = ls;
  j["intersections_match"] = intersections_match(v.fs(), xl);
  std::cout << xl.lines.size() << " lines on X56, " << xl.shared << " of them images of Fermat lines\n";
  emit(o, j);
  return 0;
}

int cmd_aut(Verifier& v, const Options& o) {
  const auto& a = v.automorphisms();
  json j;
  j["stabilizer_order"] = a.stabilizer.elements.size();
  j["order"] = a.group.size();
  json gs = json::array();
  for (int k = 0; k < 2; ++k)
    gs.push_back({{"in_group", static_cast<bool>(a.gamma_found[k])}, {"order", a.gamma_order[k]},
                  {"preserves_psi", static_cast<bool>(a.gamma_preserves_psi[k])}});
  j["gammas"] = gs;
  j["gammas_generate"] = a.gammas_generate;
  json orbs = json::array();
  for (const auto& orb : a.orbits) orbs.push_back(orb.size());
  j["orbit_sizes"] = orbs;
  json ms = json::array();
  for (const auto& m : a.matrices) ms.push_back(cmat_json(m));
  j["matrices"] = ms;
  std::cout << "h56-stabilizer order " << a.stabilizer.elements.size() << ", automorphism group order " << a.group.size()
            << ", orbits on lines:";
  for (const auto& orb : a.orbits) std::cout << " " << orb.size();
  std::cout << "\n";
  emit(o, j);
  return 0;
}

int cmd_reduce(Verifier& v, const Options& o) {
  if (o.prime < 2) throw InputError("--prime is required");
  const auto primes = split_prime(o.prime);
  const CPoly psi = psi_reference();
  const SmoothnessBound bound = o.all_orderings ? v.bound() : smoothness_bound(psi, default_orderings(false));
  json j;
  j["p"] = o.prime;
  j["orderings"] = json::array();
  for (const auto& r : bound.runs) j["orderings"].push_back(r.ordering);
  j["bound"] = bound.primes;
  j["p_in_bound"] = std::count(bound.primes.begin(), bound.primes.end(), o.prime) > 0;
  j["reports"] = json::array();
  std::cout << "possibly bad primes:";
  for (long p : bound.primes) std::cout << " " << p;
  std::cout << "\n";
  for (const auto& P : primes) {
    ReductionReport r = smoothness_report(psi, P, false);
    if (r.smooth && P.ramification == 1) {
      X56Data X = v.x56_data();
      if (!o.all_orderings) X.bound = &bound;
      r = reduction_audit(X, P);
    } else if (!r.smooth && P.residue_field().size() <= 50) {
      r = smoothness_report(psi, P, true);
    }
    json e;
    e["prime"] = r.prime;
    e["residue_field"] = r.residue_field;
    e["smooth"] = r.smooth;
    e["line_count"] = r.line_count >= 0 ? json(r.line_count) : json(nullptr);
    e["extra_line_witnesses"] = r.extra_line_witnesses;
    e["gb_certificate_hash"] = r.gb_certificate_hash;
    e["local_factor"] = P.local_factor;
    e["singular_points"] = r.singular_points;
    e["hermitian"] = r.psi_is_hermitian;
    if (o.prime == 3) e["label"] = P.index == primes_over_three().first.index ? "P3" : "P3'";
    if (!r.smooth && P.residue_field().sqrt(P.residue_field().zero() - P.residue_field().one()))
      e["singular_at_(1:0:sqrt(-1):0)"] = singular_at(psi, P, expected_singular_point(P));
    if (r.lines_audited) {
      e["reduced_lines_ok"] = r.reduced_lines_ok;
      e["f_independent"] = r.f_independent;
      e["dual_candidates"] = r.dual_candidates;
      e["without_transversal"] = r.without_transversal;
      e["with_unique_transversal"] = r.with_unique_transversal;
      if (r.gb_comparison_applies) e["gb_matches_reduction"] = r.gb_matches_reduction;
    }
    e["Q_P_rank"] = "unknown";
    j["reports"].push_back(e);
    std::cout << r.prime << " over " << r.residue_field << ": " << (r.smooth ? "smooth" : "singular");
    if (r.psi_is_hermitian) std::cout << ", Hermitian quartic";
    if (r.line_count >= 0) std::cout << ", " << r.line_count << " lines";
    if (!r.singular_points.empty()) std::cout << ", " << r.singular_points.size() << " singular points";
    std::cout << "\n";
  }
  emit(o, j);
  return 0;
}

int cmd_verify_all(Verifier& v, const Options& o) {
  cached_census(v, o, 4);
  cached_census(v, o, 5);
  cached_census(v, o, 6);
  json j = json::array();
  int failed = 0;
  for (int k = 1; k <= 13; ++k) {
    auto r = v.run(k);
    std::cout << summary_line(r) << std::endl;
    json claims = json::array();
    for (const auto& c : r.claims)
      claims.push_back({{"id", c.id}, {"expected", c.expected}, {"computed", c.computed}, {"pass", c.pass}});
    j.push_back({{"criterion", k}, {"title", r.title}, {"pass", r.pass()}, {"error", r.error}, {"claims", claims}});
    if (!r.pass()) ++failed;
  }
  std::cout << (13 - failed) << "/13 criteria pass\n";
  emit(o, j);
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lines, polarizations and reductions of quartic K3 surfaces"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--out", o.out, "write the JSON report here");
  app.add_option("--cache-dir", o.cache_dir, "directory for cached censuses");
  app.add_option("--threads", o.threads, "worker threads")->check(CLI::PositiveNumber);
  auto* fermat = app.add_subcommand("fermat", "lattice, lines and groups of the Fermat quartic");
  auto* census = app.add_subcommand("census", "classes of degree 4 with given pairing against h48");
  census->add_option("--relative-degree", o.relative_degree, "the pairing <h, h48>");
  auto* configs = app.add_subcommand("configs", "X56-configurations and the class of a seed");
  auto* derive = app.add_subcommand("derive-psi", "the quartic relation among four cubics");
  for (auto* s : {configs, derive})
    s->add_option("--seed-config", o.seed_config, "seven line tags i:mu:nu, comma separated");
  auto* lines = app.add_subcommand("lines-x56", "the 56 lines on X56");
  auto* aut = app.add_subcommand("aut-x56", "projective automorphisms of X56");
  auto* reduce = app.add_subcommand("reduce", "reductions of X56 at the primes over p");
  reduce->add_option("--prime", o.prime, "rational prime")->required()->check(CLI::PositiveNumber);
  reduce->add_flag("--all-orderings", o.all_orderings, "intersect the bad sets of several orderings");
  auto* verify = app.add_subcommand("verify-all", "run every check");
  CLI11_PARSE(app, argc, argv);

  if (!o.out.empty() && !std::ofstream(o.out, std::ios::app)) {
    std::cerr << "error: cannot write " << o.out << "\n";
    return 2;
  }
  Verifier v(o.threads);
  try {
    if (*fermat) return cmd_fermat(v, o);
    if (*census) return cmd_census(v, o);
    if (*configs) return cmd_configs(v, o);
    if (*derive) return cmd_derive_psi(v, o);
    if (*lines) return cmd_lines(v, o);
    if (*aut) return cmd_aut(v, o);
    if (*reduce) return cmd_reduce(v, o);
    if (*verify) return cmd_verify_all(v, o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
