#pragma once

#include <string>

#include "weddle/algebra/poly.hpp"

namespace weddle::algebra {

// Text form: a header `vars=k degree=d field=<Q|Fp:p|Qw|C>` and one term per
// line, `e1 ... ek : c`. Exact coefficients are written num/den (Qw as two
// such values u,v for u + v*w), floating ones as re,im.
std::string to_interchange(const SparsePoly<Rational>& p);
std::string to_interchange(const SparsePoly<Fp>& p, std::int64_t modulus);
std::string to_interchange(const SparsePoly<QOmega>& p);
std::string to_interchange(const SparsePoly<Complex>& p);

// Readable form such as "Y0^4 + 8*Y0*Y1^3"; variables are prefix + (first + i).
std::string to_readable(const SparsePoly<Rational>& p, const std::string& prefix, int first = 0);

// Field tag of a serialized polynomial ("Q", "Fp:101", ...).
std::string interchange_field(const std::string& text);

SparsePoly<Rational> parse_rational_poly(const std::string& text);
SparsePoly<Fp> parse_fp_poly(const std::string& text);
SparsePoly<QOmega> parse_qomega_poly(const std::string& text);
SparsePoly<Complex> parse_complex_poly(const std::string& text);

}  // namespace weddle::algebra
