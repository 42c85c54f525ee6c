#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "deltabound/model.hpp"

namespace deltabound::io {

/// Malformed or invalid user input.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct ProblemInput {
    DeltaPotential potential;
    std::optional<PhysicalSpec> physical;
};

// Accepts either
//   {"mass": m, "hbar": h, "wells": [{"alpha": ..., "x": ...}, ...]}
// or the natural-units form
//   {"wells": [{"a": ..., "x": ...}, ...]}.
ProblemInput parse_problem(const nlohmann::json& doc);
ProblemInput parse_problem_text(std::string_view text);

nlohmann::json state_to_json(const BoundState& state, std::size_t index,
                             const std::optional<PhysicalSpec>& physical);

// 17 significant digits, '.' decimal point regardless of locale.
std::string format_double(double v);

}  // namespace deltabound::io
