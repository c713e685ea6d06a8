#pragma once

#include "atoms.hpp"
#include "class_group.hpp"
#include "element.hpp"
#include "error.hpp"
#include "field.hpp"
#include "forms.hpp"
#include "ideal.hpp"
#include "integer.hpp"
#include "primes.hpp"
#include "units.hpp"
#include "zeta.hpp"

namespace atomzeta {

inline constexpr const char* version = "0.1.0";

} // namespace atomzeta
