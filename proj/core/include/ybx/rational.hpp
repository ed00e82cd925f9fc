#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace ybx {

// Exact arithmetic throughout: scalars are GMP rationals, always reduced,
// denominator > 0, so equality is plain canonical-form equality.
using Int = mpz_class;
using Rat = mpq_class;
using Vec = std::vector<Rat>;

/// Canonicalized rational from an integer pair. Throws ParseError if den == 0.
Rat rat(long num, long den = 1);

/// Parse "p" or "p/q" (base 10). Throws ParseError on malformed input or q == 0.
Rat rat_parse(const std::string& s);

/// Serialize as "p" (denominator 1) or "p/q". Decimal-free.
std::string rat_str(const Rat& r);

std::string vec_str(const Vec& v);

/// Canonical pairing sum_i xi_i * eta_i.
Rat dot(const Vec& a, const Vec& b);

bool is_zero_vec(const Vec& v);

} // namespace ybx
