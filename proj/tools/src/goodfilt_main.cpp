#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "goodfilt/chars.hpp"
#include "goodfilt/criteria.hpp"
#include "goodfilt/jantzen.hpp"
#include "goodfilt/json_io.hpp"
#include "goodfilt/prfilt.hpp"
#include "goodfilt/rootsys.hpp"
#include "goodfilt/verifier.hpp"

namespace {

using goodfilt::Int;
using goodfilt::rootsys::RootSystemData;
using goodfilt::rootsys::Weight;
namespace chars = goodfilt::chars;
namespace criteria = goodfilt::criteria;
namespace jantzen = goodfilt::jantzen;
namespace json_io = goodfilt::json_io;
namespace prfilt = goodfilt::prfilt;
namespace rootsys = goodfilt::rootsys;
namespace verifier = goodfilt::verifier;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Args {
  std::string type = "A";
  int rank = 0;
  Int p = 0;
  int r = 1;
  std::string weight_str;
  std::string input_path;
  std::string out_path;
  std::string format = "json";
  std::string cache_path;
  bool expect_all_cleared = false;
  int n = 0;
};

RootSystemData make_rs(const Args& a) {
  if (a.type.size() != 1) throw UsageError("--type wants a single letter, got '" + a.type + "'");
  return rootsys::build(rootsys::type_from_char(a.type[0]), a.rank);
}

Weight parse_weight(const std::string& s, int rank) {
  std::vector<Int> coords;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t comma = s.find(',', pos);
    std::string token = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    std::size_t used = 0;
    Int value = 0;
    try {
      value = std::stoll(token, &used);
    } catch (const std::exception&) {
      throw UsageError("--weight coordinate '" + token + "' is not an integer");
    }
    if (used != token.size()) throw UsageError("--weight coordinate '" + token + "' is not an integer");
    coords.push_back(value);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (static_cast<int>(coords.size()) != rank)
    throw UsageError("--weight has " + std::to_string(coords.size()) + " coordinates, rank is " +
                     std::to_string(rank));
  return Weight(std::move(coords));
}

chars::WeightMultiset read_multiset_file(const std::string& path, int rank) {
  std::ifstream in(path);
  if (!in) throw goodfilt::Error("cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw goodfilt::Error("cannot parse " + path + ": " + e.what());
  }
  if (!j.is_array()) throw goodfilt::Error(path + ": expected an array of {weight, mult} entries");
  chars::WeightMultiset m;
  for (const auto& entry : j) {
    std::vector<Int> coords;
    Int mult = 0;
    try {
      coords = entry.at("weight").get<std::vector<Int>>();
      mult = entry.at("mult").get<Int>();
    } catch (const nlohmann::json::exception& e) {
      throw goodfilt::Error(path + ": bad entry: " + e.what());
    }
    if (static_cast<int>(coords.size()) != rank)
      throw goodfilt::Error(path + ": weight rank mismatch");
    m[Weight(std::move(coords))] += mult;
  }
  return m;
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    if (!content.empty() && content.back() != '\n') std::cout << '\n';
    return;
  }
  std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::trunc);
    if (!f) throw goodfilt::Error("cannot write " + tmp);
    f << content;
    if (!content.empty() && content.back() != '\n') f << '\n';
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw goodfilt::Error("cannot move " + tmp + " into place");
}

std::string text_multiset(const chars::WeightMultiset& m) {
  std::ostringstream os;
  for (const auto& [w, mult] : m) os << rootsys::to_string(w) << ": " << mult << '\n';
  os << "dimension " << chars::mass(m) << '\n';
  return os.str();
}

std::string text_combo(const chars::WeylCombo& c) {
  if (c.empty()) return "0\n";
  std::ostringstream os;
  for (const auto& [w, coeff] : c)
    os << (coeff >= 0 ? "+" : "") << coeff << " chi" << rootsys::to_string(w) << '\n';
  return os.str();
}

std::string text_info(const RootSystemData& rs) {
  std::ostringstream os;
  os << rs.name() << '\n'
     << "coxeter number " << rs.coxeter_h << '\n'
     << "positive roots " << rs.positive_roots.size() << '\n'
     << "weyl order " << rs.weyl_order << (rs.weyl_order_exact ? "" : " (saturated)") << '\n'
     << "alpha0 " << rootsys::to_string(rs.alpha0().omega_coords) << '\n';
  return os.str();
}

std::string text_factors(const Weight& lambda, const jantzen::FactorMap& fm) {
  std::ostringstream os;
  os << "nabla" << rootsys::to_string(lambda) << (fm.exact ? " factors:" : " factor upper bounds:")
     << '\n';
  for (const auto& [w, mult] : fm.factors) os << "  L" << rootsys::to_string(w) << ": " << mult << '\n';
  return os.str();
}

std::string text_criteria(const RootSystemData& rs, Int p, int r, const Weight& lambda) {
  std::ostringstream os;
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  os << rs.name() << " p=" << p << " r=" << r << " lambda=" << rootsys::to_string(lambda) << '\n';
  os << "trivially_simple: " << yn(criteria::trivially_simple(rs, p, lambda)) << '\n';
  os << "small_pairing: " << yn(criteria::bound_smallp(rs, p, r, lambda)) << '\n';
  os << "window_bound: " << yn(criteria::bound_lambdaalpha0(rs, p, r, lambda)) << '\n';
  os << "large_twist: " << yn(criteria::bound_storlambda1(rs, p, r, lambda)) << '\n';
  os << "nabla_pr_simple: " << yn(criteria::nablapr_is_simple(rs, p, r, lambda)) << '\n';
  if (rs.type_label == rootsys::TypeLabel::A)
    os << "satz9_simple: " << yn(criteria::satz9_simple(rs, p, lambda)) << '\n';
  if (p >= rs.coxeter_h - 1) {
    criteria::MuWindow w = criteria::mu_window(rs, p, r, lambda);
    os << "mu window: [" << w.lo << ", " << w.hi << "]" << (w.empty() ? " (empty)" : "") << '\n';
  }
  criteria::GuaranteeReason g = criteria::good_filtration_guarantee(rs, p, r, lambda);
  os << "guarantee: " << criteria::rule_name(g.rule);
  if (g.rule == criteria::GuaranteeRule::DigitSplit) {
    os << " (";
    for (std::size_t i = 0; i < g.digit_rules.size(); ++i)
      os << (i ? ", " : "") << criteria::rule_name(g.digit_rules[i]);
    os << ")";
  }
  os << '\n';
  return os.str();
}

std::string text_prdecomp(const prfilt::PrDecomposition& d) {
  std::ostringstream os;
  for (const auto& [w, mult] : d.mults) os << "nabla_pr" << rootsys::to_string(w) << ": " << mult << '\n';
  if (d.success()) {
    os << "decomposition complete\n";
  } else {
    os << "residual:\n";
    for (const auto& [w, mult] : d.residual) os << "  " << rootsys::to_string(w) << ": " << mult << '\n';
  }
  return os.str();
}

std::string text_report(const verifier::CaseReport& report) {
  std::ostringstream os;
  os << report.system << " p=" << report.p << '\n';
  for (const auto& entry : report.results) {
    os << rootsys::to_string(entry.lambda) << ": " << verifier::verdict_name(entry.verdict.kind);
    if (!entry.verdict.note.empty()) os << " [" << entry.verdict.note << "]";
    os << '\n';
  }
  auto list = [&os](const char* label, const std::vector<Weight>& v) {
    os << label << " (" << v.size() << "):";
    for (const Weight& w : v) os << ' ' << rootsys::to_string(w);
    os << '\n';
  };
  list("survivors after bounds", report.survivors_after_bounds);
  list("survivors after simplicity", report.survivors_after_simplicity);
  list("survivors with candidates", report.survivors_with_candidates);
  os << "undetermined " << report.undetermined_count() << " of " << report.results.size() << '\n';
  for (const std::string& note : report.notes) os << "note: " << note << '\n';
  return os.str();
}

std::string text_counterexample(const verifier::CounterexampleReport& c) {
  std::ostringstream os;
  os << "n=" << c.n << " p=" << c.p << " mu=" << rootsys::to_string(c.mu)
     << " lambda=" << rootsys::to_string(c.lambda) << '\n'
     << "<lambda,alpha0^vee> = " << c.pairing << ", (p-1)(h-1) = " << c.bound << '\n'
     << (c.confirmed ? "confirmed: " : "not confirmed: ") << c.conclusion << '\n';
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  Args a;
  CLI::App app{"good-filtration toolkit for rational representations of reductive groups"};
  app.require_subcommand(1);

  auto add_common = [&a](CLI::App* sub) {
    sub->add_option("--out", a.out_path, "write the result to this file (atomic rename)");
    sub->add_option("--format", a.format, "json or text")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    sub->add_option("--cache", a.cache_path, "simple-character cache file (overrides GOODFILT_CACHE_DIR)");
  };
  auto add_system = [&a](CLI::App* sub) {
    sub->add_option("--type", a.type, "root system type: A, B, C, D or G")->required();
    sub->add_option("--rank", a.rank, "root system rank")->required();
  };
  auto add_p = [&a](CLI::App* sub) { sub->add_option("-p,--prime", a.p, "the prime p")->required(); };
  auto add_r = [&a](CLI::App* sub) {
    sub->add_option("-r,--twist", a.r, "Frobenius twist exponent r")->capture_default_str();
  };
  auto add_weight = [&a](CLI::App* sub) {
    sub->add_option("--weight", a.weight_str, "comma-separated fundamental-weight coordinates")
        ->required();
  };

  CLI::App* cmd_info = app.add_subcommand("info", "root system summary");
  add_system(cmd_info);
  add_common(cmd_info);

  CLI::App* cmd_dim = app.add_subcommand("dim", "Weyl dimension of nabla(lambda)");
  add_system(cmd_dim);
  add_weight(cmd_dim);
  add_common(cmd_dim);

  CLI::App* cmd_char = app.add_subcommand("char", "weight multiplicities of nabla(lambda)");
  add_system(cmd_char);
  add_weight(cmd_char);
  add_common(cmd_char);

  CLI::App* cmd_jsf = app.add_subcommand("jsf", "Jantzen sum formula for nabla(lambda) at p");
  add_system(cmd_jsf);
  add_p(cmd_jsf);
  add_weight(cmd_jsf);
  add_common(cmd_jsf);

  CLI::App* cmd_simple = app.add_subcommand("simple", "is nabla(lambda) simple at p");
  add_system(cmd_simple);
  add_p(cmd_simple);
  add_weight(cmd_simple);
  add_common(cmd_simple);

  CLI::App* cmd_factors = app.add_subcommand("factors", "composition factors of nabla(lambda) at p");
  add_system(cmd_factors);
  add_p(cmd_factors);
  add_weight(cmd_factors);
  add_common(cmd_factors);

  CLI::App* cmd_criteria = app.add_subcommand("criteria", "good-filtration criteria panel for St_r (x) L(lambda)");
  add_system(cmd_criteria);
  add_p(cmd_criteria);
  add_r(cmd_criteria);
  add_weight(cmd_criteria);
  add_common(cmd_criteria);

  CLI::App* cmd_prchar = app.add_subcommand("prchar", "character of nabla^{(p,r)}(lambda)");
  add_system(cmd_prchar);
  add_p(cmd_prchar);
  add_r(cmd_prchar);
  add_weight(cmd_prchar);
  add_common(cmd_prchar);

  CLI::App* cmd_prdecomp =
      app.add_subcommand("prdecomp", "decompose a character into nabla^{(p,r)} characters");
  add_system(cmd_prdecomp);
  add_p(cmd_prdecomp);
  add_r(cmd_prdecomp);
  cmd_prdecomp->add_option("--input", a.input_path, "JSON file: array of {weight, mult}")->required();
  add_common(cmd_prdecomp);

  CLI::App* cmd_verify =
      app.add_subcommand("verify", "scan X_1 for St_1 (x) L(lambda) good-filtration obstructions");
  add_system(cmd_verify);
  add_p(cmd_verify);
  cmd_verify->add_flag("--expect-all-cleared", a.expect_all_cleared,
                       "exit 3 when any weight stays undetermined");
  add_common(cmd_verify);

  CLI::App* cmd_cx = app.add_subcommand("counterexample", "filtration failure family in type A_n at p = 2n-3");
  cmd_cx->add_option("-n,--rank", a.n, "rank n >= 3")->required();
  add_common(cmd_cx);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (a.cache_path.empty()) {
    if (const char* dir = std::getenv("GOODFILT_CACHE_DIR"); dir && *dir)
      a.cache_path = std::string(dir) + "/simple_chars.json";
  }
  const bool json = a.format == "json";

  try {
    if (!a.cache_path.empty()) json_io::load_simple_char_cache(a.cache_path);

    int rc = 0;
    std::string out;
    if (app.got_subcommand(cmd_info)) {
      RootSystemData rs = make_rs(a);
      out = json ? json_io::rootsys_json(rs) : text_info(rs);
    } else if (app.got_subcommand(cmd_dim)) {
      RootSystemData rs = make_rs(a);
      out = std::to_string(chars::weyl_dim(rs, parse_weight(a.weight_str, rs.rank)));
    } else if (app.got_subcommand(cmd_char)) {
      RootSystemData rs = make_rs(a);
      chars::WeightMultiset m = chars::freudenthal(rs, parse_weight(a.weight_str, rs.rank));
      out = json ? json_io::multiset_json(m) : text_multiset(m);
    } else if (app.got_subcommand(cmd_jsf)) {
      RootSystemData rs = make_rs(a);
      jantzen::JsfOutput r = jantzen::jsf(rs, a.p, parse_weight(a.weight_str, rs.rank));
      out = json ? json_io::jsf_json(r) : text_combo(r.combo);
    } else if (app.got_subcommand(cmd_simple)) {
      RootSystemData rs = make_rs(a);
      Weight lambda = parse_weight(a.weight_str, rs.rank);
      bool simple = jantzen::is_simple_nabla(rs, a.p, lambda);
      if (json) {
        out = std::string("{\"lambda\":") + json_io::weight_json(lambda) +
              ",\"p\":" + std::to_string(a.p) + ",\"simple\":" + (simple ? "true" : "false") + "}";
      } else {
        out = simple ? "simple" : "not simple";
      }
    } else if (app.got_subcommand(cmd_factors)) {
      RootSystemData rs = make_rs(a);
      Weight lambda = parse_weight(a.weight_str, rs.rank);
      jantzen::FactorMap fm = jantzen::composition_factors(rs, a.p, lambda);
      out = json ? json_io::factor_map_json(lambda, fm) : text_factors(lambda, fm);
    } else if (app.got_subcommand(cmd_criteria)) {
      RootSystemData rs = make_rs(a);
      Weight lambda = parse_weight(a.weight_str, rs.rank);
      out = json ? json_io::criteria_json(rs, a.p, a.r, lambda) : text_criteria(rs, a.p, a.r, lambda);
    } else if (app.got_subcommand(cmd_prchar)) {
      RootSystemData rs = make_rs(a);
      chars::WeightMultiset m = prfilt::nabla_pr_char(rs, a.p, a.r, parse_weight(a.weight_str, rs.rank));
      out = json ? json_io::multiset_json(m) : text_multiset(m);
    } else if (app.got_subcommand(cmd_prdecomp)) {
      RootSystemData rs = make_rs(a);
      chars::WeightMultiset m = read_multiset_file(a.input_path, rs.rank);
      prfilt::PrDecomposition d = prfilt::decompose_pr(rs, a.p, a.r, m);
      out = json ? json_io::prdecomp_json(d) : text_prdecomp(d);
    } else if (app.got_subcommand(cmd_verify)) {
      RootSystemData rs = make_rs(a);
      verifier::CaseReport report = verifier::verify_rank(rs, a.p);
      out = json ? json_io::case_report_json(report) : text_report(report);
      if (a.expect_all_cleared && !report.all_cleared()) rc = 3;
    } else if (app.got_subcommand(cmd_cx)) {
      verifier::CounterexampleReport report = verifier::counterexample_check(a.n);
      out = json ? json_io::counterexample_json(report) : text_counterexample(report);
    }

    write_output(a.out_path, out);
    if (!a.cache_path.empty()) json_io::save_simple_char_cache(a.cache_path);
    return rc;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const goodfilt::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
