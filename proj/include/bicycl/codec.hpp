#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "bicycl/tensors.hpp"

namespace bicycl {

struct CodeOptions {
    std::string pi_strategy = "staircase";
    bool prune_basis = false;
    uint64_t dmin_cap = uint64_t(1) << 24;  // codeword-enumeration budget
};

// Everything needed to encode and verify one code.
struct CodeHandle {
    CodeParams params;
    FieldElement gamma, beta;
    V0Sets v0;
    std::vector<ZeroPoint> vc;
    std::vector<ZeroPoint> ecz;
    EczProfile profile;
    CheckTensor H;
    GeneratorTensor G;
    int K = 0;  // message length = MN - |vc|
    std::vector<BiPoly> generators;  // as supplied, when generator-sourced
    CodeOptions options;
};

CodeHandle make_code_from_ecz(const CodeParams& params, const FieldElement& gamma,
                              const FieldElement& beta, const std::vector<ZeroPoint>& ecz,
                              const CodeOptions& options = {});

CodeHandle make_code_from_generators(const CodeParams& params, const FieldElement& gamma,
                                     const FieldElement& beta,
                                     const std::vector<BiPoly>& generators,
                                     const CodeOptions& options = {});

// Diagnostic variant of the generator path: common zeros taken in the full
// binomial variety rather than the (gamma, beta) orbit set. Used for
// cross-validation against the brute-force ideal oracle.
CodeHandle make_code_full_variety(const CodeParams& params, const FieldElement& gamma,
                                  const FieldElement& beta,
                                  const std::vector<BiPoly>& generators,
                                  const CodeOptions& options = {});

// Systematic encoding: message must be zero on Pi; the codeword agrees with
// the message off Pi and carries the parity symbols on Pi.
BiPoly encode(const CodeHandle& code, const BiPoly& message);

FqVec syndrome(const CodeHandle& code, const BiPoly& c);

enum class MembershipMode { Syndrome, Vanishing, Both };

// Membership test. Mode Both runs the syndrome and ECZ-vanishing tests and
// insists they agree.
bool is_codeword(const CodeHandle& code, const BiPoly& c,
                 MembershipMode mode = MembershipMode::Syndrome);

struct CodeParameters {
    int area = 0;
    int K = 0;
    std::optional<int> dmin;
    std::string dmin_note;  // set when dmin is absent
};

// [MN, K, d_min]: K from the null space of the stacked h-vector matrix,
// d_min by exhaustive span enumeration within the configured cap.
CodeParameters compute_parameters(const CodeHandle& code);

// Null-space basis of the stacked h-vector matrix (a basis of the code).
FqMat codeword_basis(const CodeHandle& code);

// Every codeword of the code, enumerated from the basis (respects dmin_cap).
std::vector<FqVec> enumerate_codewords(const CodeHandle& code);

// Visit every codeword (including zero) without materializing the list.
void for_each_codeword(const CodeHandle& code, const std::function<void(const FqVec&)>& fn);

// Dual code: (lambda1^-1, lambda2^-1)-constacyclic with CZ set the
// complement of the inverted CZ set inside the full dual variety.
CodeHandle dual_code(const CodeHandle& code);

// Explicit codeword list of the ideal generated by the given elements,
// computed by exhaustive enumeration of all q^{MN} arrays against the
// shift-closure span. Requires q^{MN} <= cap.
std::vector<FqVec> brute_force_ideal_oracle(const CodeParams& params,
                                            const std::vector<BiPoly>& generators,
                                            uint64_t cap = uint64_t(1) << 20);

}  // namespace bicycl
