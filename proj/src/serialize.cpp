#include "peuler/serialize.hpp"

#include <sstream>

namespace peuler {

std::string integer_repr(const PadicNumber& a) {
    if (a.is_zero()) return "0";
    if (a.valuation() >= 0) return std::to_string(a.residue(a.prec()));
    u64 den = 1;
    for (int i = 0; i < -a.valuation(); ++i) den *= u64(a.prime());
    return std::to_string(a.unit()) + "/" + std::to_string(den);
}

ordered_json to_json(const PadicNumber& a) {
    ordered_json j;
    j["p"] = a.prime();
    if (a.is_zero()) {
        j["val"] = nullptr;
        j["unit"] = "0";
    } else {
        j["val"] = a.valuation();
        j["unit"] = std::to_string(a.unit());
    }
    j["prec"] = a.prec();
    j["repr"] = integer_repr(a);
    j["str"] = a.str();
    return j;
}

ordered_json to_json(const TruncationReport& r) {
    ordered_json j;
    j["N_used"] = r.n_used;
    j["achieved_prec"] = r.achieved_prec;
    j["stabilized"] = r.stabilized;
    return j;
}

ordered_json to_json(const EulerTable& t) {
    ordered_json j;
    j["family"] = family_name(t.family);
    ordered_json params = ordered_json::object();
    for (const auto& [k, v] : t.params) params[k] = v;
    j["params"] = params;
    j["p"] = t.p;
    j["prec"] = t.achieved_prec;
    j["route"] = route_name(t.route);
    ordered_json values = ordered_json::array();
    for (const PadicNumber& v : t.values) values.push_back(to_json(v));
    j["values"] = values;
    return j;
}

std::string to_csv(const EulerTable& t) {
    std::ostringstream out;
    out << "n,value\n";
    for (size_t n = 0; n < t.values.size(); ++n) out << n << "," << t.values[n].str() << "\n";
    return out.str();
}

std::string to_text(const EulerTable& t) {
    std::ostringstream out;
    out << family_name(t.family) << " table, p=" << t.p << ", prec=" << t.achieved_prec
        << ", route=" << route_name(t.route);
    for (const auto& [k, v] : t.params) out << ", " << k << "=" << v;
    out << "\n";
    for (size_t n = 0; n < t.values.size(); ++n)
        out << "  E_" << n << " = " << t.values[n].str() << "  (" << integer_repr(t.values[n])
            << ")\n";
    return out.str();
}

}  // namespace peuler
