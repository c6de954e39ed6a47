#include "cartan/report.hpp"

#include <sstream>

namespace cartan {

const char* kToolVersion = "0.1.0";

using nlohmann::json;

std::string weight_to_string(const Weight& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += to_string(w[i]);
  }
  return s + ")";
}

void VerificationReport::add_dimensions(const AlgebraTable& t, const ExtendedAlgebra& ext) {
  json d;
  d["dim"] = t.dim;
  d["dim_extension"] = ext.t.dim;
  d["top_degree"] = t.top_degree;
  d["cartan_rank"] = t.rank();
  d["modular_grading"] = t.grading_modulus ? json(*t.grading_modulus) : json(nullptr);
  d["theorem_scope"] = t.theorem_scope;
  json by_degree = json::object();
  int degree0 = 0;
  for (auto [deg, count] : degree_census(t)) {
    by_degree[std::to_string(deg)] = count;
    if (deg == 0) degree0 = count;
  }
  d["by_degree"] = by_degree;
  d["degree0_dim"] = degree0;
  int even = 0;
  for (int p : t.parity) even += (p == 0);
  d["dim_even"] = even;
  d["dim_odd"] = t.dim - even;
  sections_["dimensions"] = d;
}

void VerificationReport::add_roots(const RootsReport& r) {
  json j;
  j["count"] = r.count;
  j["matches_closed_form"] = r.matches;
  j["extension_has_same_roots"] = r.extension_matches;
  j["zero_weight_excluded"] = true;
  json roots = json::array();
  for (const auto& w : r.computed) roots.push_back(weight_to_string(w));
  j["roots"] = roots;
  sections_["roots"] = j;
  if (!r.matches) fail("root system differs from the closed form");
  if (!r.extension_matches) fail("extension root system differs");
}

void VerificationReport::add_jacobi(const AlgebraTable& t,
                                    const std::vector<std::string>& invariant_problems,
                                    const JacobiReport& jr) {
  json j;
  j["table_invariants_ok"] = invariant_problems.empty();
  j["problems"] = invariant_problems;
  j["super_jacobi_ok"] = jr.pass;
  if (!jr.pass) {
    j["counterexample"] = {{"a", jr.a}, {"b", jr.b}, {"c", jr.c}};
    fail("super-Jacobi identity fails at (" + std::to_string(jr.a) + "," +
         std::to_string(jr.b) + "," + std::to_string(jr.c) + ")");
  }
  if (!invariant_problems.empty()) fail("table invariants violated");
  (void)t;
  sections_["jacobi"] = j;
}

void VerificationReport::add_derivations(const DerReport& d) {
  json j;
  j["dim_even"] = d.dim_even;
  j["dim_odd"] = d.dim_odd;
  j["dim_total"] = d.dim_even + d.dim_odd;
  j["expected_dim"] = d.classify.expected;
  j["modp_dim_even"] = d.modp_dim_even;
  j["modp_dim_odd"] = d.modp_dim_odd;
  j["modp_matches"] = d.modp_matches;
  j["prime"] = d.prime;
  j["ad_injective"] = d.classify.ad_injective;
  j["ad_maps_solve_system"] = d.classify.ad_annihilated;
  j["span_equals_adjoint"] = d.classify.span_equal;
  j["outer_generators"] = d.classify.outer_generators;
  j["pass"] = d.pass;
  sections_["derivations"] = j;
  if (!d.pass) fail("superderivation space differs from the adjoint of the extension");
}

void VerificationReport::add_biderivations(const AlgebraTable& t, const BiderReport& b) {
  json j;
  j["field"] = b.field_mode;
  if (b.field_mode == "modp") j["prime"] = b.prime;
  j["unknowns_even"] = b.unknowns_even;
  j["unknowns_odd"] = b.unknowns_odd;
  j["even_nullity"] = b.even_nullity;
  j["odd_nullity"] = b.odd_nullity;
  j["zero_block_even_nullity"] = b.even_zero_block_nullity;
  j["bracket_in_solution_span"] = b.bracket_in_span;
  j["bracket_residual_zero"] = b.bracket_residual_zero;
  j["nonzero_weight_blocks_zero"] = b.nonzero_weight_blocks_zero;
  j["nonzero_degree_blocks_zero"] = b.nonzero_degree_blocks_zero;
  j["inner"] = b.inner;
  j["certificate_valid"] = b.certificate_valid;
  j["factor_solutions_checked"] = b.factor_solutions_checked;
  j["factorization_ok"] = b.factor_pass;
  GradedIndex g = GradedIndex::of(t);
  auto block_json = [&](const BiderBlock& blk) {
    Weight w = g.key_weight(blk.key);
    json e;
    e["parity"] = blk.parity;
    e["weight_shift"] = weight_to_string(w);
    e["weight_shift_sum"] = to_string(weight_coordinate_sum(w));
    e["degree_shift"] = blk.key.deg;
    e["unknowns"] = blk.unknowns;
    e["rank"] = blk.rank;
    e["nullity"] = blk.nullity;
    e["aborted"] = blk.aborted;
    return e;
  };
  json blocks = json::array(), nonzero_blocks = json::array();
  int nonzero = 0;
  for (const auto& blk : b.blocks) {
    blocks.push_back(block_json(blk));
    if (blk.nullity == 0 && !blk.aborted) continue;
    ++nonzero;
    nonzero_blocks.push_back(block_json(blk));
  }
  j["blocks_total"] = b.blocks.size();
  j["blocks_nonzero"] = nonzero;
  j["nonzero_blocks"] = nonzero_blocks;
  j["blocks"] = blocks;
  sections_["biderivations"] = j;

  if (b.aborted) mark_incomplete();
  bool both = b.run_even && b.run_odd;
  if (b.run_even && b.even_nullity != 1) fail("even biderivation nullity is not 1");
  if (b.run_odd && b.odd_nullity != 0) fail("odd biderivation nullity is not 0");
  if (b.run_even && !b.bracket_in_span) fail("bracket not in the solution span");
  if (b.run_even && !b.bracket_residual_zero) fail("bracket residual is nonzero");
  if (!b.nonzero_weight_blocks_zero) fail("a nonzero-weight block has solutions");
  if (!b.nonzero_degree_blocks_zero) fail("a nonzero-degree block has solutions");
  if (both && !b.inner) fail("biderivation space is not the inner line");
  if (both && !b.certificate_valid) fail("certificate invalid");
  if (both && !b.factor_pass) fail("factorization through the extension failed");
}

void VerificationReport::add_checks(const std::vector<CheckReport>& checks,
                                    const std::optional<LieBiderReport>& degree0,
                                    const std::string& degree0_family,
                                    const BiderReport* bider_blocks) {
  json arr = json::array();
  for (const auto& c : checks) {
    json e;
    e["id"] = c.id;
    e["pass"] = c.pass;
    e["method"] = c.method;
    if (!c.witness.empty()) e["witness"] = c.witness;
    if (!c.note.empty()) e["note"] = c.note;
    arr.push_back(e);
    if (!c.pass) fail("structural check failed: " + c.id);
  }
  json j;
  j["checks"] = arr;
  if (degree0) {
    json e;
    e["algebra"] = degree0_family;
    e["nullity"] = degree0->nullity;
    e["inner"] = degree0->inner;
    j["degree0_biderivations"] = e;
    if (!degree0->inner) fail("degree-0 part has non-inner biderivations");
  } else {
    j["degree0_biderivations"] = nullptr;
  }
  // vanishing statements that the block table already witnesses
  if (bider_blocks) {
    j["vanishing_witnessed_by_blocks"] =
        bider_blocks->nonzero_weight_blocks_zero && bider_blocks->nonzero_degree_blocks_zero;
  }
  sections_["structural_checks"] = j;
}

std::string VerificationReport::verdict() const {
  if (incomplete_) return "partial";
  return failures_.empty() ? "verified" : "failed";
}

json VerificationReport::to_json() const {
  json j;
  j["schema_version"] = 1;
  j["tool"] = {{"name", "cartanver"}, {"version", kToolVersion}};
  j["config"] = config;
  j["sections"] = sections_;
  j["failures"] = failures_;
  j["verdict"] = verdict();
  return j;
}

std::string VerificationReport::summary() const {
  std::ostringstream os;
  json j = to_json();
  os << "cartanver " << kToolVersion << "\n";
  for (auto& [name, sec] : j["sections"].items()) {
    os << "[" << name << "]";
    if (sec.is_object()) {
      for (auto& [k, v] : sec.items()) {
        if (v.is_object() || v.is_array()) continue;
        os << " " << k << "=" << v.dump();
      }
    }
    os << "\n";
  }
  for (const auto& f : failures_) os << "FAIL: " << f << "\n";
  os << "verdict: " << verdict() << "\n";
  return os.str();
}

}  // namespace cartan
