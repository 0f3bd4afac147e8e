#include "gint/json_io.hpp"

#include <cctype>

#include "gint/error.hpp"

namespace gint {

namespace {

Int int_from_json_field(const Json& j, const char* field) {
    if (!j.contains(field) || !j[field].is_string())
        raise(ErrorCode::BadInput, std::string("expected a decimal string field \"") + field + "\"");
    return int_from_decimal(j[field].get<std::string>());
}

bool is_identifier(const std::string& name) {
    if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) return false;
    for (char c : name)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

}  // namespace

Json gaussian_to_json(const GaussianInt& value) {
    return Json{{"re", to_decimal(value.re)}, {"im", to_decimal(value.im)}};
}

GaussianInt gaussian_from_json(const Json& j) {
    if (!j.is_object()) raise(ErrorCode::BadInput, "Gaussian integer must be a JSON object");
    return GaussianInt(int_from_json_field(j, "re"), int_from_json_field(j, "im"));
}

Json witness_to_json(const IntegralityWitness& witness) {
    Json diagnostics{{"n", witness.diagnostics.n},
                     {"epsilon", witness.diagnostics.epsilon.get_si()},
                     {"q", to_decimal(witness.diagnostics.q)}};
    return Json{{"z", gaussian_to_json(GaussianInt(witness.z))},
                {"v", gaussian_to_json(GaussianInt(witness.v))},
                {"w", gaussian_to_json(GaussianInt(witness.w))},
                {"x", gaussian_to_json(GaussianInt(witness.x))},
                {"y", gaussian_to_json(GaussianInt(witness.y))},
                {"diagnostics", diagnostics}};
}

WitnessValues witness_values_from_json(const Json& j) {
    if (!j.is_object()) raise(ErrorCode::BadInput, "witness must be a JSON object");
    WitnessValues out;
    for (const auto& [field, target] : std::initializer_list<std::pair<const char*, GaussianInt*>>{
             {"v", &out.v}, {"w", &out.w}, {"x", &out.x}, {"y", &out.y}, {"z", &out.z}}) {
        if (!j.contains(field))
            raise(ErrorCode::BadInput, std::string("witness is missing field \"") + field + "\"");
        *target = gaussian_from_json(j[field]);
    }
    return out;
}

Json assignment_to_json(const Assignment& assignment) {
    Json out = Json::object();
    for (const auto& [name, value] : assignment) out[name] = gaussian_to_json(value);
    return out;
}

Assignment assignment_from_json(const Json& j) {
    if (!j.is_object()) raise(ErrorCode::BadInput, "assignment must be a JSON object");
    Assignment out;
    for (const auto& [name, value] : j.items()) {
        if (name == "i")
            raise(ErrorCode::ReservedName, "\"i\" is the imaginary-unit literal, not a variable");
        if (!is_identifier(name))
            raise(ErrorCode::BadInput, "not a valid variable name: \"" + name + "\"");
        out[name] = gaussian_from_json(value);
    }
    return out;
}

Json manifest_to_json(const ReductionOutput& output) {
    Json stats{{"dag_nodes", output.stats.dag_nodes},
               {"degree_bound", output.stats.degree_bound}};
    Json manifest{{"unknowns", output.unknowns}, {"parameter", nullptr}, {"stats", stats}};
    if (output.parameter) manifest["parameter"] = *output.parameter;
    return manifest;
}

Json pell_solutions_to_json(const std::vector<PellSolution>& solutions) {
    Json list = Json::array();
    for (const PellSolution& s : solutions)
        list.push_back(Json{{"x", to_decimal(s.x)}, {"y", to_decimal(s.y)}, {"index", s.index}});
    return list;
}

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        raise(ErrorCode::BadInput, std::string("invalid JSON: ") + e.what());
    }
}

}  // namespace gint
