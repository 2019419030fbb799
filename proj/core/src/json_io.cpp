#include "goodfilt/json_io.hpp"

#include <fstream>

#include "json.hpp"

namespace goodfilt::json_io {

namespace {

using nlohmann::ordered_json;

ordered_json weight_value(const Weight& w) { return ordered_json(w.coords); }

ordered_json multiset_value(const chars::WeightMultiset& m) {
  ordered_json arr = ordered_json::array();
  for (const auto& [w, mult] : m) arr.push_back({{"weight", weight_value(w)}, {"mult", mult}});
  return arr;
}

ordered_json combo_value(const chars::WeylCombo& c) {
  ordered_json arr = ordered_json::array();
  for (const auto& [w, coeff] : c) arr.push_back({{"weight", weight_value(w)}, {"coeff", coeff}});
  return arr;
}

ordered_json weight_list_value(const std::vector<Weight>& v) {
  ordered_json arr = ordered_json::array();
  for (const Weight& w : v) arr.push_back(weight_value(w));
  return arr;
}

ordered_json guarantee_value(const criteria::GuaranteeReason& reason) {
  ordered_json j;
  j["rule"] = criteria::rule_name(reason.rule);
  if (reason.rule == criteria::GuaranteeRule::DigitSplit) {
    ordered_json digits = ordered_json::array();
    for (criteria::GuaranteeRule r : reason.digit_rules) digits.push_back(criteria::rule_name(r));
    j["digits"] = digits;
  }
  return j;
}

ordered_json verdict_value(const verifier::Verdict& v) {
  ordered_json j;
  j["verdict"] = verifier::verdict_name(v.kind);
  if (v.kind == verifier::VerdictKind::ClearedByBound) j["reason"] = guarantee_value(v.reason);
  if (v.kind == verifier::VerdictKind::ClearedByDuality) j["partner"] = weight_value(v.partner);
  if (v.candidates_computed) j["sigma_candidates"] = weight_list_value(v.sigma_candidates);
  if (v.factors_consulted) j["factors_exact"] = v.factors_exact;
  if (!v.witnesses.empty()) {
    ordered_json ws = ordered_json::array();
    for (const verifier::WitnessPair& pair : v.witnesses)
      ws.push_back({{"sigma", weight_value(pair.sigma)}, {"mu", weight_value(pair.mu)}});
    j["witnesses"] = ws;
  }
  if (!v.note.empty()) j["note"] = v.note;
  return j;
}

}  // namespace

std::string weight_json(const Weight& w) { return weight_value(w).dump(); }

std::string rootsys_json(const RootSystemData& rs) {
  ordered_json j;
  j["type"] = std::string(1, rootsys::type_char(rs.type_label));
  j["rank"] = rs.rank;
  j["coxeter_number"] = rs.coxeter_h;
  j["positive_roots"] = rs.positive_roots.size();
  j["alpha0"] = weight_value(rs.alpha0().omega_coords);
  j["alpha0_coroot"] = ordered_json(rs.alpha0().coroot_coeffs);
  j["rho"] = weight_value(rs.rho);
  j["weyl_order"] = rs.weyl_order;
  j["weyl_order_exact"] = rs.weyl_order_exact;
  return j.dump();
}

std::string multiset_json(const chars::WeightMultiset& m) { return multiset_value(m).dump(); }

std::string combo_json(const chars::WeylCombo& c) { return combo_value(c).dump(); }

std::string jsf_json(const jantzen::JsfOutput& out) {
  ordered_json j;
  j["lambda"] = weight_value(out.lambda);
  j["p"] = out.p;
  j["combo"] = combo_value(out.combo);
  j["simple"] = out.combo.empty();
  return j.dump();
}

std::string factor_map_json(const Weight& lambda, const jantzen::FactorMap& fm) {
  ordered_json j;
  j["lambda"] = weight_value(lambda);
  j["exact"] = fm.exact;
  ordered_json arr = ordered_json::array();
  for (const auto& [w, mult] : fm.factors) arr.push_back({{"weight", weight_value(w)}, {"mult", mult}});
  j["factors"] = arr;
  return j.dump();
}

std::string guarantee_json(const criteria::GuaranteeReason& reason) {
  return guarantee_value(reason).dump();
}

std::string criteria_json(const RootSystemData& rs, Int p, int r, const Weight& lambda) {
  ordered_json j;
  j["system"] = rs.name();
  j["p"] = p;
  j["r"] = r;
  j["lambda"] = weight_value(lambda);
  ordered_json preds;
  preds["trivially_simple"] = criteria::trivially_simple(rs, p, lambda);
  preds["small_pairing"] = criteria::bound_smallp(rs, p, r, lambda);
  preds["window_bound"] = criteria::bound_lambdaalpha0(rs, p, r, lambda);
  preds["large_twist"] = criteria::bound_storlambda1(rs, p, r, lambda);
  preds["nabla_pr_simple"] = criteria::nablapr_is_simple(rs, p, r, lambda);
  if (rs.type_label == rootsys::TypeLabel::A)
    preds["satz9_simple"] = criteria::satz9_simple(rs, p, lambda);
  else
    preds["satz9_simple"] = nullptr;
  j["predicates"] = preds;
  if (p >= rs.coxeter_h - 1) {
    criteria::MuWindow w = criteria::mu_window(rs, p, r, lambda);
    j["mu_window"] = {{"lo", w.lo}, {"hi", w.hi}, {"empty", w.empty()}};
  } else {
    j["mu_window"] = nullptr;
  }
  j["guarantee"] = guarantee_value(criteria::good_filtration_guarantee(rs, p, r, lambda));
  return j.dump();
}

std::string prdecomp_json(const prfilt::PrDecomposition& d) {
  ordered_json j;
  ordered_json arr = ordered_json::array();
  for (const auto& [w, mult] : d.mults) arr.push_back({{"weight", weight_value(w)}, {"mult", mult}});
  j["mults"] = arr;
  j["residual"] = multiset_value(d.residual);
  j["success"] = d.success();
  return j.dump();
}

std::string case_report_json(const verifier::CaseReport& report) {
  ordered_json j;
  j["system"] = report.system;
  j["p"] = report.p;
  ordered_json results = ordered_json::array();
  for (const verifier::ReportEntry& entry : report.results) {
    ordered_json e;
    e["lambda"] = weight_value(entry.lambda);
    ordered_json v = verdict_value(entry.verdict);
    for (auto& [key, value] : v.items()) e[key] = value;
    results.push_back(std::move(e));
  }
  j["results"] = results;
  j["survivors_after_bounds"] = weight_list_value(report.survivors_after_bounds);
  j["survivors_after_simplicity"] = weight_list_value(report.survivors_after_simplicity);
  j["survivors_with_candidates"] = weight_list_value(report.survivors_with_candidates);
  ordered_json summary;
  summary["total"] = report.results.size();
  summary["cleared_by_bound"] = report.counts[0];
  summary["cleared_by_simplicity"] = report.counts[1];
  summary["cleared_by_obstruction_search"] = report.counts[2];
  summary["cleared_by_duality"] = report.counts[3];
  summary["undetermined"] = report.counts[4];
  summary["all_cleared"] = report.all_cleared();
  j["summary"] = summary;
  j["notes"] = report.notes;
  return j.dump();
}

std::string counterexample_json(const verifier::CounterexampleReport& report) {
  ordered_json j;
  j["n"] = report.n;
  j["p"] = report.p;
  j["mu"] = weight_value(report.mu);
  j["lambda"] = weight_value(report.lambda);
  j["pairing"] = report.pairing;
  j["bound"] = report.bound;
  j["pairing_ok"] = report.pairing_ok;
  j["mu_not_simple"] = report.mu_not_simple;
  j["confirmed"] = report.confirmed;
  j["conclusion"] = report.conclusion;
  return j.dump();
}

void save_simple_char_cache(const std::string& path) {
  ordered_json j;
  ordered_json entries = ordered_json::object();
  for (const auto& [key, combo] : jantzen::simple_char_cache_snapshot())
    entries[key] = combo_value(combo);
  j["simple_characters"] = entries;
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw Error("cannot write cache file " + path);
  out << j.dump() << '\n';
}

void load_simple_char_cache(const std::string& path) {
  std::ifstream in(path);
  if (!in) return;  // cold cache
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error("cannot parse cache file " + path + ": " + e.what());
  }
  if (!j.contains("simple_characters")) return;
  for (const auto& [key, arr] : j["simple_characters"].items()) {
    chars::WeylCombo combo;
    for (const auto& entry : arr) {
      Weight w(entry.at("weight").get<std::vector<Int>>());
      combo[w] = entry.at("coeff").get<Int>();
    }
    jantzen::simple_char_cache_insert(key, combo);
  }
}

}  // namespace goodfilt::json_io
