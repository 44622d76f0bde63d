#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bicycl/codec.hpp"

namespace bicycl {

// Structured-text description of one code: field, ring parameters, root
// choices, and either generators or an explicit ECZ set.
struct CodeSpec {
    // field
    std::string preset;  // "F81-a" (x^4+x+2) or "F81-b" (x^4+2x^3+2), optional
    int64_t p = 0;
    int e = 1;
    std::vector<int64_t> defining_poly;
    // params
    int M = 0, N = 0;
    std::string lambda1_tok, lambda2_tok;
    // roots (alpha-exponents); defaults chosen deterministically
    std::optional<int64_t> gamma_exp, beta_exp;
    // source: exactly one populated
    std::vector<std::string> generator_texts;
    std::vector<std::pair<int64_t, int64_t>> ecz_exps;
    CodeOptions options;
};

CodeSpec parse_spec_text(const std::string& json_text);
CodeSpec load_spec(const std::string& path);

std::shared_ptr<const FieldTower> build_tower(const CodeSpec& spec);
CodeHandle build_code(const CodeSpec& spec);

// Named defining polynomials for the two F_{3^4} constructions used by the
// bundled fixtures.
const std::vector<std::pair<std::string, std::vector<int64_t>>>& field_presets();

}  // namespace bicycl
