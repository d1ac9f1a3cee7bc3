#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace vamod {

using Rat = mpq_class;
using Int = mpz_class;

// Exact nonnegative square root of a perfect-square rational, if one exists.
std::optional<Rat> rational_sqrt(const Rat& x);

// Canonical lowest-terms string: "3", "-1/2".
std::string rat_str(const Rat& x);

} // namespace vamod
