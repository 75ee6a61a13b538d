#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace logalg {

// Error kinds surfaced by the library. The CLI prints the name and exits 1.
enum class Errc {
    NotAUnit,
    RingMismatch,
    CompositionDomain,
    NotReversible,
    LogarithmicTerm,
    SingularCurve,
    NotOnCurve,
    NoEtaProduct,
    InsufficientPrimeData,
    ParseError,
    InvalidEigenform,
    NotParametrization,
    DegenerateSum,
    DivergenceSuspected,
    NotPrimitive,
    BadTwist,
    PoleAt,
    SpuriousMatch,
    NotOnLine,
    InvalidArgument,
};

constexpr std::string_view errc_name(Errc e) noexcept
{
    switch (e) {
    case Errc::NotAUnit: return "NotAUnit";
    case Errc::RingMismatch: return "RingMismatch";
    case Errc::CompositionDomain: return "CompositionDomain";
    case Errc::NotReversible: return "NotReversible";
    case Errc::LogarithmicTerm: return "LogarithmicTerm";
    case Errc::SingularCurve: return "SingularCurve";
    case Errc::NotOnCurve: return "NotOnCurve";
    case Errc::NoEtaProduct: return "NoEtaProduct";
    case Errc::InsufficientPrimeData: return "InsufficientPrimeData";
    case Errc::ParseError: return "ParseError";
    case Errc::InvalidEigenform: return "InvalidEigenform";
    case Errc::NotParametrization: return "NotParametrization";
    case Errc::DegenerateSum: return "DegenerateSum";
    case Errc::DivergenceSuspected: return "DivergenceSuspected";
    case Errc::NotPrimitive: return "NotPrimitive";
    case Errc::BadTwist: return "BadTwist";
    case Errc::PoleAt: return "PoleAt";
    case Errc::SpuriousMatch: return "SpuriousMatch";
    case Errc::NotOnLine: return "NotOnLine";
    case Errc::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string &what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code)
    {
    }

    Errc code() const noexcept { return code_; }
    std::string_view name() const noexcept { return errc_name(code_); }

private:
    Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string &what) { throw Error(code, what); }

} // namespace logalg
