#ifndef WRONQ_ERRORS_HPP
#define WRONQ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace wronq {

// Base class for all error conditions raised by the engine.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// qseries
struct InversionOfZero : Error { using Error::Error; };
struct ZeroSeries : Error { using Error::Error; };

// characters
struct InvalidSpec : Error { using Error::Error; };
struct NonCoprimeSpec : InvalidSpec { using InvalidSpec::InvalidSpec; };
struct NotAVanishingCase : Error { using Error::Error; };

// wronskian
struct InsufficientOrder : Error { using Error::Error; };
struct ClassifierMismatch : Error { using Error::Error; };

// modforms
struct NonzeroRemainder : Error { using Error::Error; };
struct WeightUnrepresentable : Error { using Error::Error; };

// modp
struct NotPrime : Error { using Error::Error; };
struct NotPIntegral : Error { using Error::Error; };

// roots
struct ZeroPolynomial : Error { using Error::Error; };
struct NotSquarefree : Error { using Error::Error; };
struct NoSignChange : Error { using Error::Error; };

} // namespace wronq

#endif // WRONQ_ERRORS_HPP
