#pragma once

#include <json.hpp>

#include "peuler/euler.hpp"
#include "peuler/measure.hpp"
#include "peuler/padic.hpp"

namespace peuler {

using ordered_json = nlohmann::ordered_json;

// Integer-representative string: the canonical residue unit*p^val for
// p-adic integers, "unit/p^k" for negative valuation, "0" for zero.
std::string integer_repr(const PadicNumber& a);

// {p, val, unit, prec} tuple plus the representative and display forms.
ordered_json to_json(const PadicNumber& a);

ordered_json to_json(const TruncationReport& r);

// {family, params, p, prec, route, values[]}
ordered_json to_json(const EulerTable& t);

// header "n,value" and one row per index, using the display string form
std::string to_csv(const EulerTable& t);

std::string to_text(const EulerTable& t);

}  // namespace peuler
