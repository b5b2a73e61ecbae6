#pragma once

#include <stdexcept>
#include <string>

namespace lensbeta {

enum class Errc {
    nonconvergent,
    invalid_decay,
    domain,
    pole,
    zero,
    pole_pinch,
    unbalanced,
    invalid_input,
};

inline const char* errc_name(Errc c)
{
    switch (c) {
    case Errc::nonconvergent: return "NONCONVERGENT";
    case Errc::invalid_decay: return "INVALID_DECAY";
    case Errc::domain: return "DOMAIN";
    case Errc::pole: return "POLE";
    case Errc::zero: return "ZERO";
    case Errc::pole_pinch: return "POLE_PINCH";
    case Errc::unbalanced: return "UNBALANCED";
    case Errc::invalid_input: return "INVALID_INPUT";
    }
    return "UNKNOWN";
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code)
    {
    }

    Errc code() const noexcept { return code_; }

    // Precondition violations are input errors; everything else is numerical.
    bool is_input_error() const noexcept
    {
        return code_ == Errc::unbalanced || code_ == Errc::invalid_input ||
               code_ == Errc::invalid_decay;
    }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

} // namespace lensbeta
