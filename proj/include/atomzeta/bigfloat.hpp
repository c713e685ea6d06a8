#pragma once

// Minimal RAII handle over an MPFR value.  Every operation rounds to
// nearest at the precision of its destination.

#include <mpfr.h>

#include <string>
#include <utility>
#include <vector>

#include "integer.hpp"

namespace atomzeta {

inline constexpr mpfr_prec_t default_precision_bits = 128;

class BigFloat {
public:
    explicit BigFloat(mpfr_prec_t prec = default_precision_bits)
    {
        mpfr_init2(v_, prec);
        mpfr_set_zero(v_, 1);
    }

    BigFloat(const BigFloat& o)
    {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }

    BigFloat(BigFloat&& o) noexcept
    {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_swap(v_, o.v_);
    }

    BigFloat& operator=(const BigFloat& o)
    {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }

    BigFloat& operator=(BigFloat&& o) noexcept
    {
        mpfr_swap(v_, o.v_);
        return *this;
    }

    ~BigFloat() { mpfr_clear(v_); }

    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }
    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    /// Decimal string with `digits` significant digits.
    std::string to_decimal(int digits = 25) const
    {
        if (mpfr_zero_p(v_)) return "0";
        std::vector<char> buf(static_cast<std::size_t>(digits) + 64);
        const std::string fmt = "%." + std::to_string(digits) + "RNg";
        mpfr_snprintf(buf.data(), buf.size(), fmt.c_str(), v_);
        return std::string(buf.data());
    }

    friend bool operator==(const BigFloat& l, const BigFloat& r) { return mpfr_equal_p(l.v_, r.v_) != 0; }
    friend bool operator<(const BigFloat& l, const BigFloat& r) { return mpfr_less_p(l.v_, r.v_) != 0; }

    BigFloat& operator+=(const BigFloat& o)
    {
        mpfr_add(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }

    friend BigFloat operator-(const BigFloat& l, const BigFloat& r)
    {
        BigFloat out(std::max(l.precision(), r.precision()));
        mpfr_sub(out.v_, l.v_, r.v_, MPFR_RNDN);
        return out;
    }

private:
    mpfr_t v_;
};

} // namespace atomzeta
