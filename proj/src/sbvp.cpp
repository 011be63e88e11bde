#include "wavebvp/sbvp.hpp"

#include <cmath>
#include <stdexcept>

#include <json.hpp>

namespace wavebvp {

namespace {

Problem make_problem(std::string name, double k_sing, const std::string& f_text, BoundaryCondition bc,
                     const std::optional<std::string>& exact_text) {
    Problem p;
    p.name = std::move(name);
    p.k_sing = k_sing;
    p.f = parse(f_text);
    p.f_y = d_dy(p.f);
    p.bc = bc;
    if (exact_text) p.exact = parse(*exact_text);
    return p;
}

}  // namespace

const std::vector<std::string>& builtin_names() {
    static const std::vector<std::string> names = {"example1", "example2", "example3", "example4",
                                                   "manufactured"};
    return names;
}

Problem builtin(const std::string& name) {
    const double root3_over_2 = std::sqrt(3.0) / 2.0;
    if (name == "example1")  // stellar structure (Emden-Fowler with p = 5)
        return make_problem(name, 2.0, "y^5", NeumannRobin{0.0, 1.0, 0.0, root3_over_2},
                            "sqrt(3/(3+t^2))");
    if (name == "example2")  // thermal explosion in a cylindrical vessel
        return make_problem(name, 1.0, "exp(y)", NeumannRobin{0.0, 1.0, 0.0, 0.0},
                            "2*ln((4-2*sqrt(2))/((3-2*sqrt(2))*t^2+1))");
    if (name == "example3")  // rotationally symmetric shallow membrane caps
        return make_problem(name, 3.0, "1/(8*y^2)-1/2", NeumannRobin{0.0, 1.0, 0.0, 1.0}, std::nullopt);
    if (name == "example4")  // heat conduction in the human head
        return make_problem(name, 2.0, "exp(-y)", NeumannRobin{0.0, 2.0, 1.0, 0.0}, std::nullopt);
    if (name == "manufactured")  // y = 1 - t^2 solves y'' + (2/t) y' + 6 = 0
        return make_problem(name, 2.0, "6", Dirichlet{1.0, 0.0}, "1-t^2");
    throw std::invalid_argument("unknown builtin problem: " + name);
}

Problem from_json(const std::string& document) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(document);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed problem JSON: ") + e.what());
    }
    if (!doc.is_object()) throw std::invalid_argument("problem JSON must be an object");
    if (!doc.contains("k") || !doc["k"].is_number())
        throw std::invalid_argument("problem JSON needs a numeric field \"k\"");
    if (!doc.contains("f") || !doc["f"].is_string())
        throw std::invalid_argument("problem JSON needs a string field \"f\"");
    if (!doc.contains("bc") || !doc["bc"].is_object())
        throw std::invalid_argument("problem JSON needs an object field \"bc\"");

    const double k_sing = doc["k"].get<double>();
    if (k_sing < 0.0) throw std::invalid_argument("\"k\" must be nonnegative");

    const nlohmann::json& bc = doc["bc"];
    if (!bc.contains("type") || !bc["type"].is_string())
        throw std::invalid_argument("\"bc\" needs a string field \"type\"");
    const auto field = [&bc](const char* key) {
        if (!bc.contains(key) || !bc[key].is_number())
            throw std::invalid_argument(std::string("\"bc\" needs a numeric field \"") + key + "\"");
        return bc[key].get<double>();
    };

    BoundaryCondition condition;
    const std::string type = bc["type"].get<std::string>();
    if (type == "dirichlet") {
        condition = Dirichlet{field("alpha"), field("beta")};
    } else if (type == "robin") {
        NeumannRobin robin{field("alpha"), field("a"), field("b"), field("beta")};
        if (robin.a == 0.0) throw std::invalid_argument("robin condition requires a != 0");
        condition = robin;
    } else {
        throw std::invalid_argument("\"bc\" type must be \"dirichlet\" or \"robin\"");
    }

    std::optional<std::string> exact_text;
    if (doc.contains("exact")) {
        if (!doc["exact"].is_string()) throw std::invalid_argument("\"exact\" must be a string");
        exact_text = doc["exact"].get<std::string>();
    }
    std::string name = "user";
    if (doc.contains("name")) {
        if (!doc["name"].is_string()) throw std::invalid_argument("\"name\" must be a string");
        name = doc["name"].get<std::string>();
    }

    Problem p = make_problem(std::move(name), k_sing, doc["f"].get<std::string>(), condition, exact_text);
    if (p.exact && p.exact->uses_y())
        throw std::invalid_argument("\"exact\" must be an expression in t only");
    return p;
}

}  // namespace wavebvp
