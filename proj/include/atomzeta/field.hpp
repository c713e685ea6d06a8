#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>

#include "error.hpp"
#include "integer.hpp"

namespace atomzeta {

enum class BasisKind {
    rational,  // K = Q, Z_K = Z
    sqrt_d,    // omega = sqrt(d), d = 2, 3 mod 4
    half_sqrt, // omega = (1 + sqrt(d)) / 2, d = 1 mod 4
};

enum class Signature { rational, imaginary, real };

/// Largest |d| accepted by make_field.
inline constexpr std::int64_t max_abs_d = 1'000'000'000;

namespace detail {

struct FieldData {
    std::int64_t d = 0;
    BasisKind basis = BasisKind::rational;
    std::int64_t disc = 1;
    int degree = 1;
    // omega^2 = trace * omega + constant
    int omega_trace = 0;
    Int omega_constant;

    // fundamental unit (x, y), filled on first use for real fields
    mutable std::once_flag unit_once;
    mutable std::pair<Int, Int> unit;
};

} // namespace detail

/// A quadratic number field Q(sqrt d), or Q itself.  Cheap to copy; all
/// copies share one immutable payload.
class QuadraticField {
public:
    std::int64_t d() const { return data_->d; }
    int degree() const { return data_->degree; }
    std::int64_t discriminant() const { return data_->disc; }
    BasisKind basis() const { return data_->basis; }
    bool is_rational() const { return data_->basis == BasisKind::rational; }
    bool is_imaginary() const { return !is_rational() && data_->d < 0; }
    bool is_real() const { return !is_rational() && data_->d > 0; }

    Signature signature() const
    {
        if (is_rational()) return Signature::rational;
        return data_->d < 0 ? Signature::imaginary : Signature::real;
    }

    /// omega^2 = omega_trace() * omega + omega_constant()
    int omega_trace() const { return data_->omega_trace; }
    const Int& omega_constant() const { return data_->omega_constant; }

    /// "Q" or the decimal value of d.
    std::string name() const { return is_rational() ? "Q" : std::to_string(data_->d); }

    friend bool operator==(const QuadraticField& a, const QuadraticField& b)
    {
        return a.data_ == b.data_ || (a.data_->basis == b.data_->basis && a.data_->d == b.data_->d);
    }

    const detail::FieldData& data() const { return *data_; }

private:
    explicit QuadraticField(std::shared_ptr<const detail::FieldData> data) : data_(std::move(data)) {}

    std::shared_ptr<const detail::FieldData> data_;

    friend QuadraticField make_field(std::int64_t d);
    friend QuadraticField rational_field();
};

inline QuadraticField rational_field()
{
    auto data = std::make_shared<detail::FieldData>();
    data->d = 1;
    data->basis = BasisKind::rational;
    data->disc = 1;
    data->degree = 1;
    data->omega_constant = 0;
    return QuadraticField(std::move(data));
}

/// Validated Q(sqrt d); d must be squarefree, not 0 or 1, and |d| <= 10^9.
inline QuadraticField make_field(std::int64_t d)
{
    if (d == 0 || d == 1)
        throw Error(ErrorKind::invalid_field, "d must not be 0 or 1 (got " + std::to_string(d) + ")");
    if (d > max_abs_d || d < -max_abs_d)
        throw Error(ErrorKind::out_of_range, "|d| must be at most 10^9 (got " + std::to_string(d) + ")");
    if (!is_squarefree(d))
        throw Error(ErrorKind::not_squarefree, "d = " + std::to_string(d) + " is not squarefree");

    auto data = std::make_shared<detail::FieldData>();
    data->d = d;
    data->degree = 2;
    const std::int64_t r = ((d % 4) + 4) % 4;
    if (r == 1) {
        data->basis = BasisKind::half_sqrt;
        data->disc = d;
        data->omega_trace = 1;
        data->omega_constant = from_i64((d - 1) / 4);
    } else {
        data->basis = BasisKind::sqrt_d;
        data->disc = 4 * d;
        data->omega_trace = 0;
        data->omega_constant = from_i64(d);
    }
    return QuadraticField(std::move(data));
}

/// Parses "Q" (or "q", "rational") or a decimal d.
inline QuadraticField parse_field(const std::string& s)
{
    if (s == "Q" || s == "q" || s == "rational") return rational_field();
    std::size_t pos = 0;
    long long v = 0;
    try {
        v = std::stoll(s, &pos);
    } catch (const std::exception&) {
        throw Error(ErrorKind::parse, "bad field selector '" + s + "'");
    }
    if (pos != s.size()) throw Error(ErrorKind::parse, "bad field selector '" + s + "'");
    return make_field(v);
}

} // namespace atomzeta
