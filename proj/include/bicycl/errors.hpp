#pragma once

#include <stdexcept>
#include <string>

namespace bicycl {

// Error classes surfaced to callers; the CLI maps each class to a distinct
// exit code.
enum class Errc {
    NotPrime,
    NotIrreducible,
    NotPrimitive,
    DivisionByZero,
    NotInSpan,
    NoRootInField,
    ParamMismatch,
    InvalidRoot,
    ConjugateFirstComponents,
    VerificationFailed,
    RankDeficient,
    NonzeroParityInput,
    OracleDisagreement,
    CapExceeded,
    SpecParseError,
    InvalidArgument,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& msg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

    Errc code() const { return code_; }

  private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace bicycl
