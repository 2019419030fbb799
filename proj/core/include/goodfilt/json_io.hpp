#pragma once

#include <optional>
#include <string>

#include "goodfilt/chars.hpp"
#include "goodfilt/criteria.hpp"
#include "goodfilt/jantzen.hpp"
#include "goodfilt/prfilt.hpp"
#include "goodfilt/rootsys.hpp"
#include "goodfilt/verifier.hpp"

// JSON rendering for every report type, plus the simple-character cache file.
// All functions return compact single-line JSON; pretty-printing is the
// caller's concern.

namespace goodfilt::json_io {

using rootsys::Int;
using rootsys::RootSystemData;
using rootsys::Weight;

std::string weight_json(const Weight& w);

std::string rootsys_json(const RootSystemData& rs);

std::string multiset_json(const chars::WeightMultiset& m);

std::string combo_json(const chars::WeylCombo& c);

std::string jsf_json(const jantzen::JsfOutput& out);

std::string factor_map_json(const Weight& lambda, const jantzen::FactorMap& fm);

std::string guarantee_json(const criteria::GuaranteeReason& reason);

// The `criteria` subcommand's full predicate panel.
std::string criteria_json(const RootSystemData& rs, Int p, int r, const Weight& lambda);

std::string prdecomp_json(const prfilt::PrDecomposition& d);

std::string case_report_json(const verifier::CaseReport& report);

std::string counterexample_json(const verifier::CounterexampleReport& report);

// Simple-character cache persistence.  Loading a missing file is a no-op;
// loading merges into the in-process memo.
void save_simple_char_cache(const std::string& path);
void load_simple_char_cache(const std::string& path);

}  // namespace goodfilt::json_io
