#pragma once

/**
 * @file cli.hpp
 * @brief Command implementations behind the skewcc command-line tool.
 *
 * Each command validates its configuration, computes a JSON report, and
 * renders the table view from that same JSON object, so the two output modes
 * always carry identical data. Nothing is printed from here; the caller
 * decides which rendering to emit and maps errors to exit codes.
 */

#include <map>
#include <sstream>
#include <string>

#include "reports.hpp"

namespace skewcc {

/// Validated run parameters shared by all subcommands.
struct RunConfig {
    std::string field;  // designator "p^r"
    std::optional<std::uint64_t> modulus;
    std::uint32_t s = 0;
    std::uint64_t n = 1;
    std::optional<std::uint64_t> lambda;
    std::optional<std::uint64_t> mu;
    std::optional<std::string> g_csv;
    std::uint64_t codeword_budget = kDefaultCodewordBudget;
    std::uint64_t divisor_budget = kDefaultDivisorBudget;
    std::uint64_t n_from = 1;
    std::uint64_t n_to = 1;
    bool json_mode = false;
    bool pretty = false;
};

struct CommandResult {
    int exit_code = 0;
    json data;
    std::string table;
};

inline std::pair<std::uint32_t, std::uint32_t> parse_field_designator(const std::string& text) {
    const std::size_t caret = text.find('^');
    try {
        if (caret == std::string::npos) {
            const std::uint64_t p = std::stoull(text);
            return {static_cast<std::uint32_t>(p), 1};
        }
        const std::uint64_t p = std::stoull(text.substr(0, caret));
        const std::uint64_t r = std::stoull(text.substr(caret + 1));
        if (p == 0 || r == 0) throw InvalidArgument("bad field designator '" + text + "'");
        return {static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(r)};
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        throw InvalidArgument("bad field designator '" + text + "'");
    }
}

inline FiniteField field_from_config(const RunConfig& cfg) {
    const auto [p, r] = parse_field_designator(cfg.field);
    if (cfg.modulus) return make_field_packed(p, r, *cfg.modulus);
    return make_field(p, r);
}

/// Power-of-xi rendering used by --pretty.
inline std::string pretty_element(const FiniteField& F, std::uint64_t enc) {
    if (enc == 0) return "0";
    const std::uint64_t l = F.log_enc(static_cast<std::uint32_t>(enc));
    if (l == 0) return "1";
    if (l == 1) return "xi";
    return "xi^" + std::to_string(l);
}

namespace detail {

inline std::string show_element(const FiniteField& F, const json& value, bool pretty) {
    if (value.is_null()) return "none";
    const std::uint64_t enc = value.get<std::uint64_t>();
    return pretty ? pretty_element(F, enc) : std::to_string(enc);
}

inline std::string show_element_list(const FiniteField& F, const json& arr, bool pretty) {
    std::string out;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        if (i) out += ",";
        out += show_element(F, arr[i], pretty);
    }
    return out;
}

}  // namespace detail

// --- renderers --------------------------------------------------------------

inline std::string render_classes(const json& j, const FiniteField& F, bool pretty) {
    std::ostringstream os;
    os << "field " << j["field"].get<std::string>() << "  s " << j["s"] << "  n " << j["n"] << "\n";
    os << "class_count " << j["class_count"] << "\n";
    os << "d " << j["d"] << "\n";
    os << "representatives " << detail::show_element_list(F, j["representatives"], pretty) << "\n";
    return os.str();
}

inline std::string render_equiv(const json& j, const FiniteField& F, bool pretty) {
    std::ostringstream os;
    os << render_classes(j, F, pretty);
    for (const json& q : j["queries"]) {
        os << "lambda " << detail::show_element(F, q["lambda"], pretty) << "  mu "
           << detail::show_element(F, q["mu"], pretty) << "  ";
        if (q["equivalent"].get<bool>())
            os << "equivalent  witness " << detail::show_element(F, q["witness"], pretty) << "\n";
        else
            os << "not equivalent\n";
    }
    return os.str();
}

inline std::string render_code_line(const json& c, const FiniteField& F, bool pretty) {
    std::ostringstream os;
    os << "g " << detail::show_element_list(F, c["g"], pretty) << "  k " << c["k"] << "  d_min ";
    if (c["d_min"].is_null())
        os << "-";
    else
        os << c["d_min"];
    return os.str();
}

inline std::string render_codes(const json& j, const FiniteField& F, bool pretty) {
    std::ostringstream os;
    os << "field " << j["field"].get<std::string>() << "  s " << j["s"] << "  n " << j["n"] << "  lambda "
       << detail::show_element(F, j["lambda"], pretty) << "\n";
    os << "codes " << j["codes"].size() << "\n";
    for (const json& c : j["codes"]) os << render_code_line(c, F, pretty) << "\n";
    os << "counts_by_dimension";
    for (const auto& [dim, count] : j["counts_by_dimension"].items()) os << " " << dim << ":" << count;
    os << "\n";
    return os.str();
}

inline std::string render_code_descriptor(const json& j, const FiniteField& F, bool pretty) {
    std::ostringstream os;
    os << "field " << j["field"].get<std::string>() << "  s " << j["s"] << "  n " << j["n"] << "  lambda "
       << detail::show_element(F, j["lambda"], pretty) << "\n";
    os << render_code_line(j, F, pretty) << "\n";
    os << "weight_distribution";
    for (const json& w : j["weight_distribution"]) os << " " << w;
    os << "\n";
    if (j.contains("generator_matrix"))
        for (const json& row : j["generator_matrix"])
            os << "row " << detail::show_element_list(F, row, pretty) << "\n";
    return os.str();
}

inline std::string render_isometry(const json& j, const FiniteField& F, bool pretty) {
    std::ostringstream os;
    os << "field " << j["field"].get<std::string>() << "  s " << j["s"] << "  n " << j["n"] << "  lambda "
       << detail::show_element(F, j["lambda"], pretty) << "  mu " << detail::show_element(F, j["mu"], pretty)
       << "\n";
    if (!j["equivalent"].get<bool>()) {
        os << "not equivalent: no isometry exists\n";
        return os.str();
    }
    os << "witness " << detail::show_element(F, j["witness"], pretty) << "\n";
    os << "g " << detail::show_element_list(F, j["g"], pretty) << "\n";
    os << "image_g " << detail::show_element_list(F, j["image_g"], pretty) << "\n";
    os << "k " << j["k"] << "  d_min ";
    if (j["d_min"].is_null())
        os << "-";
    else
        os << j["d_min"];
    os << "  image_d_min ";
    if (j["image_d_min"].is_null())
        os << "-";
    else
        os << j["image_d_min"];
    os << "\n";
    os << "weights_equal " << (j["weights_equal"].get<bool>() ? "true" : "false") << "\n";
    return os.str();
}

inline std::string render_sweep(const json& j) {
    std::ostringstream os;
    os << "field " << j["field"].get<std::string>() << "  s " << j["s"] << "  n " << j["n_from"] << ".."
       << j["n_to"] << "\n";
    os << "histogram";
    for (const auto& [count, occurrences] : j["histogram"].items()) os << " " << count << ":" << occurrences;
    os << "\n";
    if (j.contains("rows")) {
        for (const json& row : j["rows"]) os << "n " << row[0] << "  class_count " << row[1] << "\n";
    }
    if (j["pattern_violations"].is_null()) {
        os << "pattern_check not applicable\n";
    } else if (j["pattern_violations"].empty()) {
        os << "pattern_check ok\n";
    } else {
        os << "pattern_violations";
        for (const json& n : j["pattern_violations"]) os << " " << n;
        os << "\n";
    }
    return os.str();
}

inline std::string render_field_info(const json& j, const FiniteField& F, bool pretty) {
    std::ostringstream os;
    os << "field " << j["field"].get<std::string>() << "  q " << j["q"] << "\n";
    os << "modulus " << j["modulus"] << "  coefficients low-degree-first";
    for (const json& c : j["modulus_coeffs"]) os << " " << c;
    os << "\n";
    os << "xi " << detail::show_element(F, j["xi"], pretty) << "\n";
    if (j.contains("elements")) {
        os << "elements";
        for (const json& e : j["elements"])
            os << " " << e["encoding"] << "=" << detail::show_element(F, e["encoding"], true);
        os << "\n";
    }
    return os.str();
}

// --- commands ----------------------------------------------------------------

inline CommandResult cmd_classes(const RunConfig& cfg) {
    const FiniteField F = field_from_config(cfg);
    const Automorphism aut = frobenius(F, cfg.s);
    const EquivalenceContext ctx = make_context(aut, cfg.n);
    CommandResult res;
    res.data = classes_report(ctx);
    res.table = render_classes(res.data, F, cfg.pretty);
    return res;
}

inline CommandResult cmd_equiv(const RunConfig& cfg) {
    if (!cfg.lambda || !cfg.mu) throw InvalidArgument("equiv requires --lambda and --mu");
    const FiniteField F = field_from_config(cfg);
    const Automorphism aut = frobenius(F, cfg.s);
    const EquivalenceContext ctx = make_context(aut, cfg.n);
    const FieldElement lambda = F.element(*cfg.lambda), mu = F.element(*cfg.mu);
    CommandResult res;
    res.data = equivalence_report(ctx, {{lambda, mu}});
    res.table = render_equiv(res.data, F, cfg.pretty);
    res.exit_code = res.data["queries"][0]["equivalent"].get<bool>() ? 0 : 1;
    return res;
}

inline CommandResult cmd_witness(const RunConfig& cfg) { return cmd_equiv(cfg); }

inline CommandResult cmd_codes(const RunConfig& cfg) {
    if (!cfg.lambda) throw InvalidArgument("codes requires --lambda");
    const FiniteField F = field_from_config(cfg);
    const Automorphism aut = frobenius(F, cfg.s);
    const CodeContext ctx(aut, static_cast<std::size_t>(cfg.n), F.element(*cfg.lambda));
    CommandResult res;
    json j;
    j["field"] = field_designator(F);
    j["s"] = cfg.s;
    j["n"] = cfg.n;
    j["lambda"] = *cfg.lambda;
    json codes = json::array();
    std::map<std::size_t, std::uint64_t> by_dim;
    for (const SkewConstacyclicCode& code : enumerate_codes(ctx, cfg.divisor_budget)) {
        json c;
        c["g"] = code.generator().coefficients();
        c["k"] = code.dimension();
        const std::vector<std::uint64_t> wd = weight_distribution(code, cfg.codeword_budget);
        c["d_min"] = nullptr;
        for (std::size_t w = 1; w < wd.size(); ++w)
            if (wd[w] != 0) {
                c["d_min"] = w;
                break;
            }
        codes.push_back(c);
        ++by_dim[code.dimension()];
    }
    j["codes"] = codes;
    json counts = json::object();
    for (const auto& [dim, count] : by_dim) counts[std::to_string(dim)] = count;
    j["counts_by_dimension"] = counts;
    res.data = j;
    res.table = render_codes(res.data, F, cfg.pretty);
    return res;
}

inline CommandResult cmd_mindist(const RunConfig& cfg) {
    if (!cfg.lambda || !cfg.g_csv) throw InvalidArgument("mindist requires --lambda and --g");
    const FiniteField F = field_from_config(cfg);
    const Automorphism aut = frobenius(F, cfg.s);
    const CodeContext ctx(aut, static_cast<std::size_t>(cfg.n), F.element(*cfg.lambda));
    const SkewConstacyclicCode code = make_code(ctx, parse_polynomial_csv(aut, *cfg.g_csv));
    CommandResult res;
    res.data = code_descriptor(code, cfg.codeword_budget);
    res.data["generator_matrix"] = matrix_dump(code);
    res.table = render_code_descriptor(res.data, F, cfg.pretty);
    return res;
}

inline CommandResult cmd_isometry(const RunConfig& cfg) {
    if (!cfg.lambda || !cfg.mu || !cfg.g_csv)
        throw InvalidArgument("isometry requires --lambda, --mu and --g");
    const FiniteField F = field_from_config(cfg);
    const Automorphism aut = frobenius(F, cfg.s);
    const FieldElement lambda = F.element(*cfg.lambda), mu = F.element(*cfg.mu);
    const CodeContext source_ctx(aut, static_cast<std::size_t>(cfg.n), mu);
    const SkewConstacyclicCode source = make_code(source_ctx, parse_polynomial_csv(aut, *cfg.g_csv));
    const EquivalenceContext ectx = make_context(aut, cfg.n);

    CommandResult res;
    json j;
    j["field"] = field_designator(F);
    j["s"] = cfg.s;
    j["n"] = cfg.n;
    j["lambda"] = lambda.encoding();
    j["mu"] = mu.encoding();
    if (!are_equivalent(ectx, lambda, mu)) {
        j["equivalent"] = false;
        res.data = j;
        res.table = render_isometry(res.data, F, cfg.pretty);
        res.exit_code = 1;
        return res;
    }
    const FieldElement alpha = *find_witness(ectx, lambda, mu);
    const CodeContext target_ctx(aut, static_cast<std::size_t>(cfg.n), lambda);
    const SkewConstacyclicCode image = apply_isometry(source, alpha, target_ctx);
    const std::vector<std::uint64_t> wd_src = weight_distribution(source, cfg.codeword_budget);
    const std::vector<std::uint64_t> wd_img = weight_distribution(image, cfg.codeword_budget);
    j["equivalent"] = true;
    j["witness"] = alpha.encoding();
    j["g"] = source.generator().coefficients();
    j["image_g"] = image.generator().coefficients();
    j["k"] = image.dimension();
    j["d_min"] = nullptr;
    j["image_d_min"] = nullptr;
    for (std::size_t w = 1; w < wd_src.size(); ++w)
        if (wd_src[w] != 0) {
            j["d_min"] = w;
            break;
        }
    for (std::size_t w = 1; w < wd_img.size(); ++w)
        if (wd_img[w] != 0) {
            j["image_d_min"] = w;
            break;
        }
    j["weights_equal"] = wd_src == wd_img;
    res.data = j;
    res.table = render_isometry(res.data, F, cfg.pretty);
    return res;
}

inline CommandResult cmd_sweep(const RunConfig& cfg) {
    const FiniteField F = field_from_config(cfg);
    const Automorphism aut = frobenius(F, cfg.s);
    if (cfg.n_from < 1 || cfg.n_from > cfg.n_to) throw InvalidArgument("need 1 <= n-from <= n-to");

    CommandResult res;
    json j;
    j["field"] = field_designator(F);
    j["s"] = cfg.s;
    j["n_from"] = cfg.n_from;
    j["n_to"] = cfg.n_to;

    std::map<std::uint64_t, std::uint64_t> histogram;
    json rows = json::array();
    const bool keep_rows = cfg.n_to - cfg.n_from < 10000;
    // Over GF(8) with sigma != id the counts must follow gcd(n, 3): 7 when
    // 3 | n, else 1.
    const bool check_pattern = F.q() == 8 && cfg.s >= 1;
    json violations = check_pattern ? json::array() : json();
    for_each_class_count(aut, cfg.n_from, cfg.n_to, [&](std::uint64_t n, std::uint64_t count) {
        ++histogram[count];
        if (keep_rows) rows.push_back(json::array({n, count}));
        if (check_pattern) {
            const std::uint64_t expected = n % 3 == 0 ? 7 : 1;
            if (count != expected) violations.push_back(n);
        }
    });
    json hist = json::object();
    for (const auto& [count, occurrences] : histogram) hist[std::to_string(count)] = occurrences;
    j["histogram"] = hist;
    if (keep_rows) j["rows"] = rows;
    j["pattern_violations"] = violations;
    res.data = j;
    res.table = render_sweep(res.data);
    return res;
}

inline CommandResult cmd_field_info(const RunConfig& cfg) {
    const FiniteField F = field_from_config(cfg);
    CommandResult res;
    json j;
    j["field"] = field_designator(F);
    j["p"] = F.p();
    j["r"] = F.r();
    j["q"] = F.q();
    j["modulus"] = F.modulus_encoding();
    j["modulus_coeffs"] = F.modulus();
    j["xi"] = F.xi_encoding();
    if (F.q() <= 64) {
        json elems = json::array();
        for (std::uint64_t e = 1; e < F.q(); ++e) {
            json entry;
            entry["encoding"] = e;
            entry["log"] = F.log_enc(static_cast<std::uint32_t>(e));
            elems.push_back(entry);
        }
        j["elements"] = elems;
    }
    res.data = j;
    res.table = render_field_info(res.data, F, cfg.pretty);
    return res;
}

}  // namespace skewcc
