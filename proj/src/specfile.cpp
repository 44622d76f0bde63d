#include "bicycl/specfile.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace bicycl {

using nlohmann::json;

const std::vector<std::pair<std::string, std::vector<int64_t>>>& field_presets() {
    static const std::vector<std::pair<std::string, std::vector<int64_t>>> presets = {
        {"F81-a", {2, 1, 0, 0, 1}},   // x^4 + x + 2
        {"F81-b", {2, 0, 0, 2, 1}},   // x^4 + 2x^3 + 2
    };
    return presets;
}

namespace {

[[noreturn]] void spec_error(const std::string& msg) { fail(Errc::SpecParseError, msg); }

const json* get(const json& j, const char* key) {
    auto it = j.find(key);
    return it == j.end() ? nullptr : &*it;
}

const json& need(const json& j, const char* key, const char* where) {
    const json* v = get(j, key);
    if (!v) spec_error(std::string("missing \"") + key + "\" in " + where);
    return *v;
}

std::string lambda_token(const json& v, const char* key) {
    if (v.is_number_integer()) return std::to_string(v.get<int64_t>());
    if (v.is_string()) return v.get<std::string>();
    spec_error(std::string(key) + " must be an integer or an element token");
}

}  // namespace

CodeSpec parse_spec_text(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception& e) {
        spec_error(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) spec_error("spec must be a JSON object");

    CodeSpec spec;
    const json& field = need(j, "field", "spec");
    if (const json* preset = get(field, "preset")) {
        spec.preset = preset->get<std::string>();
        bool known = false;
        for (const auto& [name, poly] : field_presets())
            if (name == spec.preset) {
                spec.p = 3;
                spec.e = 1;
                spec.defining_poly = poly;
                known = true;
            }
        if (!known) spec_error("unknown field preset: " + spec.preset);
    } else {
        spec.p = need(field, "p", "field").get<int64_t>();
        if (const json* e = get(field, "e")) spec.e = e->get<int>();
        for (const auto& c : need(field, "definingPoly", "field"))
            spec.defining_poly.push_back(c.get<int64_t>());
    }
    if (const json* L = get(field, "L")) {
        int L_given = L->get<int>();
        if (spec.e * L_given != (int)spec.defining_poly.size() - 1)
            spec_error("field.L disagrees with the defining polynomial degree");
    }

    const json& params = need(j, "params", "spec");
    spec.M = need(params, "M", "params").get<int>();
    spec.N = need(params, "N", "params").get<int>();
    spec.lambda1_tok = lambda_token(need(params, "lambda1", "params"), "lambda1");
    spec.lambda2_tok = lambda_token(need(params, "lambda2", "params"), "lambda2");

    if (const json* roots = get(j, "roots")) {
        if (const json* g = get(*roots, "gamma")) spec.gamma_exp = g->get<int64_t>();
        if (const json* b = get(*roots, "beta")) spec.beta_exp = b->get<int64_t>();
    }

    const json& source = need(j, "source", "spec");
    const json* gens = get(source, "generators");
    const json* ecz = get(source, "ecz");
    if ((gens == nullptr) == (ecz == nullptr))
        spec_error("source must contain exactly one of \"generators\" and \"ecz\"");
    if (gens) {
        for (const auto& g : *gens) spec.generator_texts.push_back(g.get<std::string>());
        if (spec.generator_texts.empty()) spec_error("source.generators is empty");
    } else {
        for (const auto& pt : *ecz) {
            if (!pt.is_array() || pt.size() != 2)
                spec_error("source.ecz entries must be [expA, expB] pairs");
            spec.ecz_exps.push_back({pt[0].get<int64_t>(), pt[1].get<int64_t>()});
        }
        if (spec.ecz_exps.empty()) spec_error("source.ecz is empty");
    }

    if (const json* opt = get(j, "options")) {
        if (const json* s = get(*opt, "piStrategy")) spec.options.pi_strategy = s->get<std::string>();
        if (const json* p = get(*opt, "pruneBasis")) spec.options.prune_basis = p->get<bool>();
        if (const json* c = get(*opt, "dminCap")) spec.options.dmin_cap = c->get<uint64_t>();
    }
    return spec;
}

CodeSpec load_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) spec_error("cannot open spec file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_spec_text(buf.str());
}

std::shared_ptr<const FieldTower> build_tower(const CodeSpec& spec) {
    int degree = (int)spec.defining_poly.size() - 1;
    if (spec.e < 1 || degree < 1 || degree % spec.e != 0)
        spec_error("defining polynomial degree must be a positive multiple of e");
    return FieldTower::build(spec.p, spec.e, degree / spec.e, spec.defining_poly);
}

CodeHandle build_code(const CodeSpec& spec) {
    auto tower = build_tower(spec);
    const FieldTower& F = *tower;
    FieldElement l1 = parse_element_token(F, spec.lambda1_tok);
    FieldElement l2 = parse_element_token(F, spec.lambda2_tok);
    CodeParams params(tower, spec.M, spec.N, l1, l2);

    // The chosen field must split both binomials.
    if ((int64_t)binomial_roots(F, spec.M, l1).size() != spec.M ||
        (int64_t)binomial_roots(F, spec.N, l2).size() != spec.N)
        fail(Errc::NoRootInField,
             "x^M - lambda1 and y^N - lambda2 must split in the chosen field");

    FieldElement gamma = spec.gamma_exp ? F.alpha_pow(*spec.gamma_exp)
                                        : primitive_root_of(l1, spec.M);
    FieldElement beta = spec.beta_exp ? F.alpha_pow(*spec.beta_exp)
                                      : primitive_root_of(l2, spec.N);

    if (!spec.generator_texts.empty()) {
        std::vector<BiPoly> gens;
        for (const auto& text : spec.generator_texts) {
            BiPoly g = parse_bipoly(params, text);
            g.require_base_field("generator");
            gens.push_back(std::move(g));
        }
        return make_code_from_generators(params, gamma, beta, gens, spec.options);
    }
    std::vector<ZeroPoint> ecz;
    for (auto [ea, eb] : spec.ecz_exps) ecz.push_back({F.alpha_pow(ea), F.alpha_pow(eb)});
    return make_code_from_ecz(params, gamma, beta, ecz, spec.options);
}

}  // namespace bicycl
