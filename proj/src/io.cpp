#include "deltabound/io.hpp"

#include <charconv>
#include <cmath>
#include <vector>

namespace deltabound::io {

namespace {

double number_field(const nlohmann::json& obj, const char* key) {
    const auto it = obj.find(key);
    if (it == obj.end()) throw InputError(std::string("missing field '") + key + "'");
    if (!it->is_number()) throw InputError(std::string("field '") + key + "' must be a number");
    const double v = it->get<double>();
    if (!std::isfinite(v)) throw InputError(std::string("field '") + key + "' must be finite");
    return v;
}

}  // namespace

ProblemInput parse_problem(const nlohmann::json& doc) {
    if (!doc.is_object()) throw InputError("input must be a JSON object");
    const auto wells_it = doc.find("wells");
    if (wells_it == doc.end() || !wells_it->is_array()) {
        throw InputError("input needs a 'wells' array");
    }
    if (wells_it->empty()) throw InputError("'wells' must not be empty");

    std::size_t physical_wells = 0;
    for (const auto& w : *wells_it) {
        if (!w.is_object()) throw InputError("each well must be an object");
        if (w.contains("alpha")) ++physical_wells;
    }
    const bool physical = doc.contains("mass") || doc.contains("hbar") || physical_wells > 0;

    try {
        if (physical) {
            if (physical_wells != wells_it->size()) {
                throw InputError("physical input needs 'alpha' on every well");
            }
            PhysicalSpec spec;
            spec.mass = number_field(doc, "mass");
            spec.hbar = number_field(doc, "hbar");
            for (const auto& w : *wells_it) {
                spec.wells.push_back({number_field(w, "alpha"), number_field(w, "x")});
            }
            return {to_natural(spec), spec};
        }
        std::vector<Well> wells;
        for (const auto& w : *wells_it) {
            wells.push_back({number_field(w, "a"), number_field(w, "x")});
        }
        return {DeltaPotential(std::move(wells)), std::nullopt};
    } catch (const InputError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
}

ProblemInput parse_problem_text(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
    return parse_problem(doc);
}

nlohmann::json state_to_json(const BoundState& state, std::size_t index,
                             const std::optional<PhysicalSpec>& physical) {
    nlohmann::json j;
    j["index"] = index;
    j["b"] = state.b();
    j["energy"] = state.energy();
    if (physical) j["energy_physical"] = energy_physical(state, *physical);
    j["parity"] = to_string(state.parity());
    j["coeffs"] = std::vector<double>(state.coeffs().begin(), state.coeffs().end());
    return j;
}

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

}  // namespace deltabound::io
