#pragma once

/**
 * @file reports.hpp
 * @brief Machine-readable JSON report objects for classification runs and
 *        code descriptors.
 */

#include <json.hpp>

#include "code_lab.hpp"
#include "equivalence.hpp"

namespace skewcc {

using nlohmann::json;

inline std::string field_designator(const FiniteField& F) {
    return std::to_string(F.p()) + "^" + std::to_string(F.r());
}

/// {field, s, n, class_count, d, representatives}
inline json classes_report(const EquivalenceContext& ctx) {
    json j;
    j["field"] = field_designator(ctx.field());
    j["s"] = ctx.aut().s();
    j["n"] = ctx.n();
    j["class_count"] = ctx.class_count();
    j["d"] = ctx.d();
    json reps = json::array();
    for (const FieldElement& rep : class_representatives(ctx)) reps.push_back(rep.encoding());
    j["representatives"] = reps;
    return j;
}

/// classes_report plus queries: [{lambda, mu, equivalent, witness}].
inline json equivalence_report(const EquivalenceContext& ctx,
                               const std::vector<std::pair<FieldElement, FieldElement>>& queries) {
    json j = classes_report(ctx);
    json qs = json::array();
    for (const auto& [lambda, mu] : queries) {
        const EquivalenceReport rep = analyze(ctx, lambda, mu);
        json q;
        q["lambda"] = lambda.encoding();
        q["mu"] = mu.encoding();
        q["equivalent"] = rep.equivalent;
        if (rep.witness)
            q["witness"] = rep.witness->encoding();
        else
            q["witness"] = nullptr;
        qs.push_back(q);
    }
    j["queries"] = qs;
    return j;
}

/// {field, s, n, lambda, g, k, d_min, weight_distribution}
inline json code_descriptor(const SkewConstacyclicCode& code,
                            std::uint64_t codeword_budget = kDefaultCodewordBudget) {
    const CodeContext& ctx = code.ctx();
    json j;
    j["field"] = field_designator(ctx.field());
    j["s"] = ctx.aut().s();
    j["n"] = ctx.n();
    j["lambda"] = ctx.lambda().encoding();
    j["g"] = code.generator().coefficients();
    j["k"] = code.dimension();
    const std::vector<std::uint64_t> wd = weight_distribution(code, codeword_budget);
    j["weight_distribution"] = wd;
    j["d_min"] = nullptr;
    for (std::size_t w = 1; w < wd.size(); ++w)
        if (wd[w] != 0) {
            j["d_min"] = w;
            break;
        }
    return j;
}

/// Generator matrix as rows of encodings.
inline json matrix_dump(const SkewConstacyclicCode& code) {
    json rows = json::array();
    for (const detail::EncRow& row : detail::generator_matrix_enc(code)) rows.push_back(row);
    return rows;
}

}  // namespace skewcc
