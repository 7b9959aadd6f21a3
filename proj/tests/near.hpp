#pragma once

#include <string>

#include "hhsum/real.hpp"

namespace testing_util {

inline hhsum::Real dec(const char* s) { return hhsum::Real(s); }

inline double gap(const hhsum::Approx& a, const char* expected) { return hhsum::abs_double(a.value - dec(expected)); }
inline double gap(const hhsum::Approx& a, const hhsum::Approx& b) { return hhsum::abs_double(a.value - b.value); }

}  // namespace testing_util
