#pragma once
// Serialization of the domain types: JSON (insertion-ordered, so identical
// invocations emit byte-identical documents) plus the CSV table formats used
// by the command-line tool.

#include <cstdint>
#include <string>

#include <json.hpp>

#include "pzero/curves.hpp"
#include "pzero/lingrp.hpp"
#include "pzero/perm.hpp"
#include "pzero/ramify.hpp"
#include "pzero/spectrum.hpp"
#include "pzero/verify.hpp"

namespace pzero {

using ordered_json = nlohmann::ordered_json;

// {"r":3,"val":5} -- the decimal bit encoding paired with the degree
ordered_json field_element_json(int r, std::uint32_t val);

// {"degree":N,"generators":[[...images...],...]}
ordered_json group_json(const PermGroup& g);
PermGroup group_from_json(const ordered_json& j);

// group_json plus a metadata block (family, n, expected_order, labels)
ordered_json action_json(const NaturalAction& act);

ordered_json classification_json(const ClassificationReport& r);

// {"G":8,"g_quot":0,"orbits":[{"size":1,"filtration":[8,8,4,...]}]}
ordered_json profile_json(const RamificationProfile& p);
RamificationProfile profile_from_json(const ordered_json& j);

ordered_json curve_info_json(const CurveSpec& c);
ordered_json point_count_json(const CurveSpec& c, const PointCount& pc);
std::string point_count_csv(const CurveSpec& c, const PointCount& pc);
ordered_json aut_verification_json(const CurveSpec& c, const AutVerification& v);

// semicolon-joined names of the asserted flags, "-" when none
std::string spectrum_flags(const SpectrumEntry& e);
ordered_json spectrum_json(const SpectrumResult& r);
// columns: family,n,case,t,genus,s_order,sq_order,witness,flags (retained rows)
std::string spectrum_csv(const SpectrumResult& r);

ordered_json bound_json(const BoundReport& b);
ordered_json quotient_json(const QuotientReport& r);

// {"criteria":[{id,title,pass,blocking,detail},...],"pass":bool}
ordered_json verification_json(const std::vector<CriterionResult>& results);

}  // namespace pzero
