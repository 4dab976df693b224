#pragma once

#include <stdexcept>
#include <string>

namespace braidrep {

// Raised for any domain failure: bad indices, non-unit determinants,
// unsupported spectra, inconsistent characters. The CLI maps it to exit 1.
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The certifier only handles characteristic polynomials that split over Q.
class UnsupportedSpectrum : public DomainError {
public:
    using DomainError::DomainError;
};

} // namespace braidrep
