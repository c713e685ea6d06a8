#pragma once

#include <stdexcept>
#include <string>

namespace atomzeta {

enum class ErrorKind {
    invalid_field,    // d = 0 or d = 1
    not_squarefree,
    out_of_range,     // input outside the supported desk-scale range
    zero_element,
    unit_element,
    field_mismatch,
    not_prime,
    unsupported,      // operation not available for this kind of field
    cap_exceeded,
    parse,
    internal,
};

inline const char* to_string(ErrorKind k)
{
    switch (k) {
    case ErrorKind::invalid_field: return "invalid field";
    case ErrorKind::not_squarefree: return "not squarefree";
    case ErrorKind::out_of_range: return "out of range";
    case ErrorKind::zero_element: return "zero element";
    case ErrorKind::unit_element: return "unit element";
    case ErrorKind::field_mismatch: return "field mismatch";
    case ErrorKind::not_prime: return "not prime";
    case ErrorKind::unsupported: return "unsupported";
    case ErrorKind::cap_exceeded: return "cap exceeded";
    case ErrorKind::parse: return "parse error";
    case ErrorKind::internal: return "internal error";
    }
    return "unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace atomzeta
