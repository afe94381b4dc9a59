#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "modlie/modlie.hpp"

namespace modlie {

using json = nlohmann::json;

inline constexpr std::string_view kToolVersion = "1.0.0";

/// 64-bit FNV-1a, printed as 16 hex digits.
inline std::string fnv1a_digest(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  static constexpr char hex[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4) out[static_cast<std::size_t>(i)] = hex[h & 0xf];
  return "fnv1a64:" + out;
}

inline json scalars_json(const std::vector<Scalar>& v) {
  json out = json::array();
  for (const auto& s : v) out.push_back(s.to_string());
  return out;
}

inline json subspace_json(const Subspace& s) {
  json basis = json::array();
  for (const auto& v : s.basis_vectors()) basis.push_back(to_string(v));
  return {{"dim", s.dim()}, {"basis", basis}};
}

struct ScenarioResult {
  std::string id;
  std::string status;  // pass | fail | skip
  json data;
  std::string citation;
};

struct ScenarioOptions {
  std::uint64_t cap = kDefaultEnumerationCap;
  /// Frozen outputs of the derived part of each scenario, keyed by scenario id.
  json oracles = json::object();
  /// When set, derived outputs are collected here and not compared.
  json* regenerate = nullptr;
};

/// Collects named boolean checks and derived outputs for one scenario.
class ScenarioRecorder {
 public:
  void check(const std::string& name, bool ok) {
    checks_[name] = ok;
    ok_ = ok_ && ok;
  }
  json& derived() { return derived_; }
  json& info() { return info_; }

  ScenarioResult finish(const std::string& id, const ScenarioOptions& opts) {
    json data = info_;
    data["checks"] = checks_;
    data["derived"] = derived_;
    bool ok = ok_;
    if (opts.regenerate) {
      (*opts.regenerate)[id] = derived_;
    } else if (!derived_.empty()) {
      const bool has = opts.oracles.contains(id);
      const bool match = has && opts.oracles.at(id) == derived_;
      data["oracle"] = has ? (match ? "match" : "mismatch") : "missing";
      ok = ok && match;
    }
    return {id, ok ? "pass" : "fail", std::move(data), ""};
  }

 private:
  json checks_ = json::object();
  json derived_ = json::object();
  json info_ = json::object();
  bool ok_ = true;
};

namespace scenario {

/// x cycles the coordinates, y = diag(0, 1, ..., p-1); [x, y] = x.
inline std::pair<Matrix, Matrix> lie_pair(const Field& f) {
  const std::size_t p = f.characteristic();
  Matrix x(f, p, p);
  Matrix y(f, p, p);
  for (std::size_t i = 0; i < p; ++i) {
    x(i, (i + 1) % p) = f.one();
    y(i, i) = f.from_int(static_cast<long long>(i));
  }
  return {x, y};
}

inline ScenarioResult lie(std::uint64_t p, const ScenarioOptions& opts) {
  const Field f = Field::prime(p);
  ScenarioRecorder rec;
  const auto [x, y] = lie_pair(f);
  rec.check("bracket_xy_is_x", commutator(x, y) == x);
  const MatrixLieAlgebra S = commutator_algebra_of_matrices({x, y}, {"x", "y"});
  std::vector<std::size_t> dims;
  for (const auto& s : derived_series(S.algebra)) dims.push_back(s.dim());
  rec.info()["derived_series_dims"] = dims;
  rec.check("derived_series_2_1_0", dims == std::vector<std::size_t>{2, 1, 0});
  rec.check("solvable", is_solvable(S.algebra));

  const auto xs = eigenvalues_in_field(x);
  rec.info()["eigenvalues_x"] = scalars_json(xs);
  rec.check("eigenvalues_x_is_1", xs == std::vector<Scalar>{f.one()});
  Vec ones(p, f.one());
  rec.check("eigenspace_x_all_ones", eigenspace(x, f.one()) == Subspace::span(f, p, {ones}));
  bool lines = eigenvalues_in_field(y).size() == p;
  for (std::size_t i = 0; i < p; ++i) {
    lines = lines && eigenspace(y, f.from_int(static_cast<long long>(i))) == Subspace::span(f, p, {unit_vector(f, p, i)});
  }
  rec.check("eigenspaces_y_coordinate_lines", lines);
  rec.check("no_common_eigenvector", !common_eigenvector({x, y}).has_value());
  rec.check("not_triangularizable", !triangularize({x, y}).has_value());
  return rec.finish("LIE-5.1-p" + std::to_string(p), opts);
}

inline ScenarioResult cartan(const ScenarioOptions& opts) {
  const Field f = Field::prime(2);
  ScenarioRecorder rec;
  const LieAlgebra L = builtin_fsl2(f);
  const Representation rep = adjoint_rep(L);
  const std::vector<std::vector<long long>> expected[3] = {
      {{0, -1, 0}, {0, 0, 0}, {0, 0, 0}},
      {{0, 0, 0}, {1, 0, 0}, {0, 0, 0}},
      {{1, 0, 0}, {0, 1, 0}, {0, 0, 0}},
  };
  for (std::size_t i = 0; i < 3; ++i) {
    const Matrix sq = rep.mats()[i] * rep.mats()[i];
    const std::string name = "ad_" + L.labels()[i] + "_squared";
    rec.info()[name] = sq.to_string();
    rec.check(name + "_matches", sq == Matrix::from_ints(f, expected[i]));
    rec.check(name + "_trace_zero", sq.trace().is_zero());
  }
  const CartanReport report = cartan_statements(L, rep);
  rec.info()["stmt1"] = report.stmt1;
  rec.info()["stmt2"] = report.stmt2;
  rec.info()["solvable"] = report.solvable;
  rec.check("stmt2_holds", report.stmt2);
  rec.check("not_solvable", !report.solvable);
  rec.check("criterion_fails", !report.consistent);
  return rec.finish("CARTAN-5.2", opts);
}

inline json semisimplicity_json(const SemisimplicityReport& r) {
  return {{"semisimple", r.semisimple}, {"nondegenerate", r.nondegenerate}, {"equivalent", r.equivalent}};
}

inline ScenarioResult ccs(const ScenarioOptions& opts) {
  ScenarioRecorder rec;
  const Field q = Field::rationals();
  const LieAlgebra sl2 = builtin_sl2(q).algebra;
  const LieAlgebra aff2 = builtin_aff2(q).algebra;

  rec.info()["sl2_gram"] = killing_gram(sl2).to_string();
  rec.check("sl2_nondegenerate", is_nondegenerate(killing_form(sl2)));
  rec.check("sl2_radical_zero", radical(sl2, opts.cap).is_zero());
  rec.check("sl2_equivalence_holds", cartan_semisimplicity(sl2, opts.cap).equivalent);

  rec.info()["aff2_gram"] = killing_gram(aff2).to_string();
  rec.check("aff2_degenerate", !is_nondegenerate(killing_form(aff2)));
  rec.check("aff2_radical_full", radical(aff2, opts.cap).is_full());
  rec.check("aff2_equivalence_holds", cartan_semisimplicity(aff2, opts.cap).equivalent);

  const LieAlgebra fsl2 = builtin_fsl2(Field::prime(2));
  const SemisimplicityReport r = cartan_semisimplicity(fsl2, opts.cap);
  rec.check("fsl2_equivalence_fails", !r.equivalent);
  rec.derived()["fsl2"] = semisimplicity_json(r);
  rec.derived()["fsl2_gram"] = killing_gram(fsl2).to_string();
  rec.derived()["fsl2_radical_dim"] = radical(fsl2, opts.cap).dim();
  return rec.finish("CCS-5.2", opts);
}

inline Matrix random_matrix(const Field& f, std::size_t n, std::mt19937_64& rng) {
  Matrix m(f, n, n);
  std::uniform_int_distribution<long long> dist(-3, 3);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = f.from_int(dist(rng));
  return m;
}

inline ScenarioResult jordan(const ScenarioOptions& opts) {
  ScenarioRecorder rec;
  const Field f2 = Field::prime(2);
  const Matrix companion = Matrix::from_ints(f2, {{0, 1}, {1, 1}});
  rec.check("companion_semisimple", is_semisimple_matrix(companion));
  rec.check("companion_not_diagonalisable", !is_diagonalisable_over_base(companion));
  const JordanPair cp = chevalley_decompose(companion);
  rec.check("companion_is_own_semisimple_part", cp.s == companion && cp.n.is_zero());

  const std::vector<Field> fields{f2, Field::prime(3), Field::prime(5), Field::rationals()};
  std::mt19937_64 rng(2024);
  std::size_t total = 0;
  std::size_t holds = 0;
  std::size_t nonzero_nilpotent = 0;
  for (std::size_t k = 0; k < 300; ++k) {
    const Field& f = fields[k % fields.size()];
    const std::size_t n = 1 + (k / fields.size()) % 5;
    const Matrix a = random_matrix(f, n, rng);
    const JordanPair jp = chevalley_decompose(a);
    ++total;
    const bool ok = jp.s + jp.n == a && jp.s * jp.n == jp.n * jp.s && is_semisimple_matrix(jp.s) &&
                    jp.n.pow(n).is_zero();
    if (ok) ++holds;
    if (!jp.n.is_zero()) ++nonzero_nilpotent;
  }
  rec.info()["samples"] = total;
  rec.check("chevalley_invariants_on_sample", holds == total && total >= 300);
  rec.derived()["samples_with_nonzero_nilpotent_part"] = nonzero_nilpotent;
  return rec.finish("JORDAN-5.3", opts);
}

inline ScenarioResult rep(const ScenarioOptions& opts) {
  ScenarioRecorder rec;
  const Field q = Field::rationals();
  const MatrixLieAlgebra sl2 = builtin_sl2(q);
  const Representation standard(sl2.algebra, sl2.embedding);
  const Vec h = sl2.algebra.basis_vector(*sl2.algebra.index_of("h"));
  for (std::size_t n = 1; n <= 6; ++n) {
    rec.check("ladder_n" + std::to_string(n), ladder_check(n));
    const WeightDecomposition wd = weight_decomposition(sym_power(standard, n), h);
    std::vector<Scalar> expected;
    for (long long w = -static_cast<long long>(n); w <= static_cast<long long>(n); w += 2) expected.push_back(q.from_int(w));
    bool simple = true;
    for (const auto& s : wd.spaces) simple = simple && s.dim() == 1;
    rec.info()["weights_n" + std::to_string(n)] = scalars_json(wd.weights);
    rec.check("weights_n" + std::to_string(n), wd.weights == expected && simple);
  }
  return rec.finish("REP-5.4", opts);
}

inline ScenarioResult weyl(const ScenarioOptions& opts) {
  ScenarioRecorder rec;
  const Field f3 = Field::prime(3);
  const MatrixLieAlgebra sl2 = builtin_sl2(f3);
  const Representation sym = sym_power(Representation(sl2.algebra, sl2.embedding), 3);
  const Vec x3 = unit_vector(f3, 4, 0);
  const Vec y3 = unit_vector(f3, 4, 3);
  bool annihilated = true;
  for (const auto& m : sym.mats()) annihilated = annihilated && is_zero(m * x3) && is_zero(m * y3);
  rec.check("e_f_h_annihilate_x3_y3", annihilated);
  const Subspace u = Subspace::span(f3, 4, {x3, y3});
  rec.check("u_invariant", is_invariant(sym, u));

  std::size_t scanned = 0;
  std::size_t invariant = 0;
  std::size_t complements = 0;
  for (SubspaceEnumerator it(f3, 4, std::nullopt, opts.cap); auto w = it.next();) {
    ++scanned;
    if (!is_invariant(sym, *w)) continue;
    ++invariant;
    if ((u + *w).is_full() && u.intersect(*w).is_zero()) ++complements;
  }
  rec.info()["subspaces_scanned"] = scanned;
  rec.check("scanned_all_212", scanned == 212);
  rec.check("no_complement", complements == 0 && !find_complement(sym, u, opts.cap).has_value());
  rec.check("not_completely_reducible", !is_completely_reducible(sym, opts.cap));
  rec.derived()["invariant_subspaces"] = invariant;
  const Vec h = sl2.algebra.basis_vector(*sl2.algebra.index_of("h"));
  const WeightDecomposition wd = weight_decomposition(sym, h);
  json weights = json::object();
  for (std::size_t i = 0; i < wd.weights.size(); ++i) weights[wd.weights[i].to_string()] = wd.spaces[i].dim();
  rec.derived()["h_weight_dims"] = weights;
  return rec.finish("WEYL-5.5", opts);
}

inline json images_json(const PMapping& pm) {
  json out = json::object();
  for (std::size_t j = 0; j < pm.algebra.dim(); ++j) {
    out[pm.algebra.labels()[j]] = format_combination(pm.algebra, pm.basis_images[j]);
  }
  return out;
}

inline ScenarioResult pmap(const ScenarioOptions& opts) {
  ScenarioRecorder rec;
  auto expect_images = [&](const std::string& tag, const LieAlgebra& L, const std::vector<std::string>& images) {
    const PMappingSearch search = find_p_mapping(L);
    rec.check(tag + "_restrictable", search.mapping.has_value());
    if (!search.mapping) return;
    const json got = images_json(*search.mapping);
    rec.info()[tag + "_images"] = got;
    bool match = true;
    for (std::size_t j = 0; j < L.dim(); ++j) match = match && got[L.labels()[j]] == images[j];
    rec.check(tag + "_images", match);
    rec.check(tag + "_axioms", verify_p_mapping(*search.mapping).ok());
  };
  for (std::uint64_t p : {3, 5}) expect_images("sl2_F" + std::to_string(p), builtin_sl2(Field::prime(p)).algebra, {"0", "0", "h"});
  for (std::uint64_t p : {2, 3}) {
    expect_images("heisenberg_F" + std::to_string(p), builtin_heisenberg(Field::prime(p)).algebra, {"0", "0", "0"});
  }

  for (std::uint64_t p : {2, 3, 5}) {
    const Field f = Field::prime(p);
    const LieAlgebra aff2 = builtin_aff2(f).algebra;
    const std::string tag = "aff2_F" + std::to_string(p);
    const PMappingSearch search = find_p_mapping(aff2);
    rec.check(tag + "_restrictable", search.mapping.has_value());
    if (!search.mapping) continue;
    rec.check(tag + "_axioms", verify_p_mapping(*search.mapping).ok());
    const std::size_t h = *aff2.index_of("h");
    const std::size_t x = *aff2.index_of("x");
    bool law = true;
    for (std::uint32_t a = 0; a < p; ++a) {
      for (std::uint32_t b = 0; b < p; ++b) {
        const Scalar alpha(f, a);
        const Scalar beta(f, b);
        const Vec v = alpha * aff2.basis_vector(h) + beta * aff2.basis_vector(x);
        const Vec expected = alpha.pow(p) * aff2.basis_vector(h) + (alpha.pow(p - 1) * beta) * aff2.basis_vector(x);
        law = law && evaluate_p_mapping(*search.mapping, v) == expected;
      }
    }
    rec.check(tag + "_evaluation_law", law);
  }

  const Field f2 = Field::prime(2);
  const LieAlgebra fsl2 = builtin_fsl2(f2);
  const PMappingSearch none = find_p_mapping(fsl2);
  rec.check("fsl2_not_restrictable", !none.mapping.has_value());
  if (none.failing_basis) {
    rec.info()["fsl2_certificate_basis"] = fsl2.labels()[*none.failing_basis];
    rec.check("fsl2_certificate_is_e", fsl2.labels()[*none.failing_basis] == "e");
    const Matrix target = ad_basis(fsl2, *none.failing_basis).pow(2);
    std::size_t scanned = 0;
    std::size_t hits = 0;
    for (std::uint32_t code = 0; code < 8; ++code) {
      Vec y = zero_vector(f2, 3);
      for (std::size_t k = 0; k < 3; ++k) y[k] = Scalar(f2, (code >> k) & 1U);
      ++scanned;
      if (ad(fsl2, y) == target) ++hits;
    }
    rec.check("fsl2_exhaustive_certificate", scanned == 8 && hits == 0);
  }

  std::vector<Matrix> traceless;
  for (std::uint32_t code = 0; code < 16; ++code) {
    const Matrix m = Matrix::from_ints(f2, {{code & 1U, (code >> 1) & 1U}, {(code >> 2) & 1U, (code >> 3) & 1U}});
    if (m.trace().is_zero()) traceless.push_back(m);
  }
  rec.check("sl2_F2_pth_power_closed", traceless.size() == 8 && pth_power_closure_check(traceless, ClosurePredicate::Sl));

  for (const auto& [tag, L] : std::vector<std::pair<std::string, LieAlgebra>>{
           {"sl2_F3", builtin_sl2(Field::prime(3)).algebra},
           {"heisenberg_F3", builtin_heisenberg(Field::prime(3)).algebra},
           {"aff2_F3", builtin_aff2(Field::prime(3)).algebra}}) {
    const SolutionSpaceReport s = p_mapping_solution_space(L);
    rec.check(tag + "_solution_space_consistent", s.consistent);
    rec.derived()[tag + "_solution_space"] = {{"center_dim", s.center_dim}, {"unique", s.unique}};
  }
  return rec.finish("PMAP-6", opts);
}

struct ScenarioEntry {
  std::string id;
  std::string citation;
  std::function<ScenarioResult(const ScenarioOptions&)> run;
};

/// Sorted by id, which fixes report order.
inline const std::vector<ScenarioEntry>& registry() {
  static const std::vector<ScenarioEntry> entries = [] {
    std::vector<ScenarioEntry> e{
        {"CARTAN-5.2", "Cartan's solvability criterion in characteristic 2", cartan},
        {"CCS-5.2", "semisimplicity versus non-degenerate Killing form", ccs},
        {"JORDAN-5.3", "Jordan decomposition of a semisimple matrix in characteristic 2", jordan},
        {"LIE-5.1-p2", "Lie's theorem: a solvable pair with no common eigenvector", [](const ScenarioOptions& o) { return lie(2, o); }},
        {"LIE-5.1-p3", "Lie's theorem: a solvable pair with no common eigenvector", [](const ScenarioOptions& o) { return lie(3, o); }},
        {"LIE-5.1-p5", "Lie's theorem: a solvable pair with no common eigenvector", [](const ScenarioOptions& o) { return lie(5, o); }},
        {"PMAP-6", "restricted structures and p-mappings", pmap},
        {"REP-5.4", "weights of symmetric powers of the standard sl2 module", rep},
        {"WEYL-5.5", "complete reducibility of Sym^3 in characteristic 3", weyl},
    };
    std::sort(e.begin(), e.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
    return e;
  }();
  return entries;
}

}  // namespace scenario

inline std::vector<std::string> scenario_ids() {
  std::vector<std::string> ids;
  for (const auto& e : scenario::registry()) ids.push_back(e.id);
  return ids;
}

/// Runs the named scenarios (all when `filter` is empty). A scenario that
/// hits the enumeration cap is reported as skipped.
inline std::vector<ScenarioResult> verify_paper_scenarios(const ScenarioOptions& opts,
                                                          const std::vector<std::string>& filter = {}) {
  std::vector<ScenarioResult> out;
  for (const auto& entry : scenario::registry()) {
    if (!filter.empty() && std::find(filter.begin(), filter.end(), entry.id) == filter.end()) continue;
    try {
      out.push_back(entry.run(opts));
      out.back().citation = entry.citation;
    } catch (const Error& e) {
      const bool capped = e.kind() == ErrorKind::CapExceeded;
      out.push_back({entry.id, capped ? "skip" : "fail",
                     {{"reason", to_string(e.kind())}, {"message", e.what()}}, entry.citation});
    }
  }
  return out;
}

inline json scenario_json(const ScenarioResult& r) {
  return {{"scenario", r.id}, {"status", r.status}, {"data", r.data}, {"citation", r.citation}};
}

}  // namespace modlie
