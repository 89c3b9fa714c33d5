#pragma once

#include <gmpxx.h>
#include <string>

namespace cubepaths {

// Exact scalars. All library arithmetic is exact: integers are mpz,
// coordinates and times are canonical mpq (no floating point anywhere).
using Int = mpz_class;
using Rat = mpq_class;

Rat make_rat(long num, long den = 1);

// Accepts "p/q" or a bare integer "p", with optional sign.
Rat parse_rat(const std::string& text);

// Always emits "p/q", including q = 1, so writers are byte-deterministic.
std::string rat_str(const Rat& x);

std::string int_str(const Int& x);

}  // namespace cubepaths
