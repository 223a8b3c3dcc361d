#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "bsk/basicset.hpp"
#include "bsk/crystal.hpp"
#include "bsk/multipartition.hpp"
#include "bsk/rational.hpp"
#include "bsk/sweep.hpp"

namespace bsk {

// Insertion-ordered JSON keeps emitted documents laid out the way they
// are built, which the byte-determinism contract relies on.
using Json = nlohmann::ordered_json;

inline Json json_of(const Rational& q) { return format_rational(q); }

inline Rational rational_from_json(const Json& j) {
    if (j.is_number_integer())
        return Rational(j.get<long long>());
    if (j.is_string())
        return parse_rational(j.get<std::string>());
    throw std::invalid_argument("expected a rational (\"p/q\" string or integer)");
}

// Multipartition <-> array of arrays of nonnegative integers.
inline Json json_of(const Multipartition& mp) {
    Json out = Json::array();
    for (const auto& comp : mp.components())
        out.push_back(comp);
    return out;
}

inline Multipartition multipartition_from_json(const Json& j) {
    if (!j.is_array() || j.empty())
        throw std::invalid_argument("expected a nonempty array of components");
    std::vector<Multipartition::Component> components;
    for (const Json& comp : j) {
        if (!comp.is_array())
            throw std::invalid_argument("expected each component to be an array of integers");
        Multipartition::Component parts;
        for (const Json& part : comp) {
            if (!part.is_number_integer())
                throw std::invalid_argument("expected integer parts");
            parts.push_back(part.get<int>());
        }
        components.push_back(std::move(parts));
    }
    return Multipartition(std::move(components));
}

// The compact JSON text of a multipartition, also used as its label.
inline std::string label_of(const Multipartition& mp) { return json_of(mp).dump(); }

inline Json json_of(const Node& node) { return Json::array({node.row, node.col, node.component}); }

inline Node node_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 3)
        throw std::invalid_argument("expected a node as [row, col, component]");
    return Node{j[0].get<int>(), j[1].get<int>(), j[2].get<int>()};
}

inline Json json_of(const ChargeParams& params) {
    Json u = Json::array();
    for (const Rational& q : params.u())
        u.push_back(json_of(q));
    return Json{{"e", params.e()}, {"s", params.s()}, {"u", u}};
}

inline ChargeParams charge_params_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("e") || !j.contains("s") || !j.contains("u"))
        throw std::invalid_argument("expected charge params as {\"e\", \"s\", \"u\"}");
    std::vector<Rational> u;
    for (const Json& q : j.at("u"))
        u.push_back(rational_from_json(q));
    return ChargeParams(j.at("e").get<int>(), j.at("s").get<std::vector<int>>(), std::move(u));
}

inline Json json_of(const DecompMatrix& matrix) {
    return Json{{"rows", matrix.rows}, {"cols", matrix.cols}, {"entries", matrix.entries}};
}

inline DecompMatrix decomp_matrix_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
        throw std::invalid_argument("expected a matrix as {\"rows\", \"cols\", \"entries\"}");
    DecompMatrix matrix;
    matrix.rows = j.at("rows").get<std::vector<std::string>>();
    matrix.cols = j.at("cols").get<std::vector<std::string>>();
    for (const Json& row : j.at("entries")) {
        std::vector<long long> parsed;
        for (const Json& entry : row) {
            if (!entry.is_number_integer())
                throw std::invalid_argument("expected integer matrix entries");
            parsed.push_back(entry.get<long long>());
        }
        matrix.entries.push_back(std::move(parsed));
    }
    validate(matrix);
    return matrix;
}

inline Json json_of(const SweepReport& report) {
    Json out{{"pairs_tested", report.pairs_tested},
             {"pairs_matched", report.pairs_matched},
             {"pairs_held", report.pairs_held},
             {"pass", report.pass()}};
    if (report.counterexample) {
        const SweepCounterexample& cex = *report.counterexample;
        out["counterexample"] = Json{{"lambda", json_of(cex.lambda)},
                                     {"lambda_prime", json_of(cex.lambda_prime)},
                                     {"a_lambda", json_of(cex.a_lambda)},
                                     {"a_lambda_prime", json_of(cex.a_lambda_prime)}};
    } else {
        out["counterexample"] = nullptr;
    }
    return out;
}

inline Json json_of(const BasicSetViolation& violation) {
    return Json{{"type", violation.type == BasicSetViolation::Type::diagonal ? "diagonal" : "order"},
                {"row", violation.row},
                {"col", violation.col},
                {"entry", violation.entry}};
}

inline Json json_of(const BasicSetReport& report) {
    Json violations = Json::array();
    for (const auto& violation : report.violations)
        violations.push_back(json_of(violation));
    return Json{{"pass", report.pass},
                {"violations", violations},
                {"nonzero_entries", report.nonzero_entries},
                {"assumption", report.assumption}};
}

inline Json json_of(const GoodNodeStep& step) {
    return Json{{"residue", step.residue}, {"node", json_of(step.node)}};
}

}  // namespace bsk
