#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>
#include <vector>

namespace gradedalg {

/// Exact rational scalar. All arithmetic in the library is over these;
/// there is no floating point anywhere.
using Rat = mpq_class;

/// Raised on malformed input (files, CLI arguments, ill-posed requests).
struct InputError : std::runtime_error {
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when an internal consistency check fails; indicates a bug,
/// never bad user input.
struct InternalError : std::logic_error {
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

/// Parses "p" or "p/q" with optional sign, exact. Rejects q = 0.
Rat parse_rat(const std::string& s);

/// Canonical form: "p" or "p/q", lowest terms, q > 0.
std::string rat_str(const Rat& r);

using Vec = std::vector<Rat>;

bool vec_is_zero(const Vec& v);
void vec_axpy(Vec& y, const Rat& a, const Vec& x);  // y += a*x

}  // namespace gradedalg
