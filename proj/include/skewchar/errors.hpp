#pragma once

#include <stdexcept>
#include <string>

namespace skewchar {

/// Base class for every error raised by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class malformed_partition : public error {
public:
    explicit malformed_partition(const std::string& what)
        : error("MalformedPartition: " + what) {}
};

class not_contained : public error {
public:
    explicit not_contained(const std::string& what)
        : error("NotContained: " + what) {}
};

class not_basic : public error {
public:
    explicit not_basic(const std::string& what)
        : error("NotBasic: " + what) {}
};

class too_shallow : public error {
public:
    explicit too_shallow(const std::string& what)
        : error("TooShallow: " + what) {}
};

class does_not_fit : public error {
public:
    explicit does_not_fit(const std::string& what)
        : error("DoesNotFit: " + what) {}
};

class not_multiplicity_free : public error {
public:
    explicit not_multiplicity_free(const std::string& what)
        : error("NotMultiplicityFree: " + what) {}
};

class coefficient_overflow : public error {
public:
    coefficient_overflow() : error("CoefficientOverflow: 64-bit coefficient exceeded") {}
};

} // namespace skewchar
