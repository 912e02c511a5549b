#pragma once

#include <json.hpp>

#include "hb/closed_forms.hpp"
#include "hb/recurrence.hpp"
#include "hb/structure.hpp"

namespace hbtool {

using nlohmann::ordered_json;

ordered_json to_json(hb::cd z);
ordered_json to_json(const std::vector<hb::cd>& v);
ordered_json to_json(const hb::OrthoPoly<hb::cd>& p, double residual);
ordered_json to_json(const hb::OrthoBasis<hb::cd>& basis);
ordered_json to_json(const hb::GramMatrix<hb::cd>& m);
ordered_json to_json(const hb::RecurrenceData& d);
ordered_json to_json(const hb::StructureReport& r);
ordered_json to_json(const std::vector<hb::BenchRow>& rows);

}  // namespace hbtool
