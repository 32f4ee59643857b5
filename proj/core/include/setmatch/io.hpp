#pragma once

#include <string>
#include <string_view>

#include "setmatch/family.hpp"
#include "setmatch/matching.hpp"
#include "setmatch/oracles.hpp"
#include "setmatch/theorem_lab.hpp"
#include "setmatch/weight_fn.hpp"

namespace setmatch {

inline constexpr std::string_view kSchemaVersion = "setmatch/1";

// Text form: a header line "n=<k>", then one set per line as comma-separated
// 1-based elements, "-" for the empty set. Blank lines and lines starting
// with '#' are skipped.
Family parse_family_text(std::string_view text);
std::string family_to_text(const Family& f);

// JSON form {"n":k,"sets":[[1,2],[3],[]]}.
Family parse_family_json(std::string_view text);
std::string family_to_json(const Family& f);

// Sniffs the first non-blank character: '{' selects JSON, anything else text.
Family parse_family(std::string_view text);

// {"n":k,"values":[...]} with 2^n entries indexed by mask; a family file is
// also accepted and read as its characteristic function.
WeightFn parse_weight_fn(std::string_view text);
std::string weight_fn_to_json(const WeightFn& w);

// {"schema":..,"kind":"weighted","n":k,"p":[[X,Y,w],...]}; X, Y are masks.
std::string weighted_matching_to_json(const WeightedMatching& p);
WeightedMatching parse_weighted_matching(std::string_view text);

// {"schema":..,"kind":"self","n":k,"pairs":[[A,B],...]}; masks.
std::string pair_matching_to_json(const PairMatching& m);
PairMatching parse_pair_matching(std::string_view text);

// {"schema":..,"kind":"injection","n":k,"pairs":[[A,phi(A)],...]}; masks.
std::string injection_to_json(const Injection& phi);
Injection parse_injection(std::string_view text);

// "weighted", "self" or "injection"; throws when absent.
std::string matching_kind(std::string_view text);

std::string report_to_json(const CheckReport& r);
std::string report_to_text(const CheckReport& r);

std::string m_table_to_tsv(const MTable& t);
std::string m_table_to_json(const MTable& t);

}  // namespace setmatch
