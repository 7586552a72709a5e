#include "harness/render.hpp"

#include <sstream>
#include <stdexcept>

namespace lineideal::harness {

Format parse_format(std::string_view name) {
    if (name == "text") return Format::text;
    if (name == "json") return Format::json;
    if (name == "csv") return Format::csv;
    throw std::invalid_argument("unknown format: " + std::string(name));
}

Json to_json(VarSet vars) {
    Json out = Json::array();
    for (int v : vars.indices()) out.push_back(v);
    return out;
}

Json to_json(std::span<const VarSet> sets) {
    Json out = Json::array();
    for (VarSet s : sets) out.push_back(to_json(s));
    return out;
}

Json to_json(const MonomialIdeal& ideal) { return to_json(ideal.generators()); }

Json to_json(const BettiTable& table) {
    Json out = Json::array();
    for (const auto& [key, beta] : table.entries()) out.push_back({{"i", key.first}, {"j", key.second}, {"beta", beta}});
    return out;
}

Json to_json(const CoverMember& member) { return {{"kind", member.label()}, {"vars", to_json(member.vars)}}; }

Json to_json(const Discrepancy& flag) {
    return {{"invariant", flag.invariant},
            {"reference", flag.reference_value},
            {"reported", flag.reported_value},
            {"note", flag.note}};
}

Json to_json(const InvariantReport& report) {
    Json out;
    out["n"] = report.n;
    out["nvars"] = report.nvars;
    out["source"] = to_string(report.source);
    out["field"] = report.field.name();
    out["pd"] = report.pd;
    out["reg"] = report.reg;
    out["depth"] = report.depth;
    out["height"] = report.height;
    out["bight"] = report.bight;
    Json flags = Json::array();
    for (const auto& f : report.flags) flags.push_back(to_json(f));
    out["flags"] = std::move(flags);
    if (report.betti) out["betti"] = to_json(*report.betti);
    return out;
}

Json variable_names(int nvars) {
    Json out = Json::array();
    for (int i = 1; i <= nvars; ++i) out.push_back("x" + std::to_string(i));
    return out;
}

std::string dump(const Json& json) { return json.dump(2) + "\n"; }

std::string to_csv(std::span<const VarSet> sets) {
    std::ostringstream out;
    out << "index,monomial,vars\n";
    int index = 1;
    for (VarSet s : sets) {
        out << index++ << ',' << to_monomial_string(s) << ',';
        const auto idx = s.indices();
        for (std::size_t k = 0; k < idx.size(); ++k) out << (k ? " " : "") << idx[k];
        out << '\n';
    }
    return out.str();
}

} // namespace lineideal::harness
