#ifndef LINEIDEAL_HARNESS_RENDER_HPP
#define LINEIDEAL_HARNESS_RENDER_HPP

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "lineideal/betti.hpp"
#include "lineideal/line_formulas.hpp"
#include "lineideal/monomial_ideal.hpp"

namespace lineideal::harness {

using Json = nlohmann::ordered_json;

enum class Format { text, json, csv };

Format parse_format(std::string_view name);

Json to_json(VarSet vars);
Json to_json(std::span<const VarSet> sets);
Json to_json(const MonomialIdeal& ideal);
Json to_json(const BettiTable& table);
Json to_json(const CoverMember& member);
Json to_json(const Discrepancy& flag);
Json to_json(const InvariantReport& report);

/// ["x1", ..., "xn"].
Json variable_names(int nvars);

/// Two-space indented dump followed by a newline.
std::string dump(const Json& json);

/// One row per set: "index,monomial,vars" with vars space separated.
std::string to_csv(std::span<const VarSet> sets);

} // namespace lineideal::harness

#endif
