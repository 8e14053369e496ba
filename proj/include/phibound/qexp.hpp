#ifndef PHIBOUND_QEXP_HPP
#define PHIBOUND_QEXP_HPP

#include "phibound/intseries.hpp"

namespace phibound {

// Delta = q prod_{n>=1} (1-q^n)^24, exact modulo q^prec (prec >= 2).
// Coefficients are the Ramanujan tau values.
IntSeries delta_expansion(long prec);

// E4 = 1 + 240 sum sigma_3(n) q^n, exact modulo q^prec (prec >= 1).
IntSeries e4_expansion(long prec);

// j = E4^3 / Delta = q^-1 + 744 + 196884 q + ...; prec counts terms beyond
// q^-1, i.e. the result is exact modulo q^prec with valuation -1.
IntSeries j_expansion(long prec);

// q -> q^m.  Coefficient of q^(mn) in the output equals the coefficient of
// q^n in the input; output prec = m * input prec.
IntSeries substitute_power(const IntSeries& s, long m);

// Process-wide cache of j's coefficients, grown on demand (thread-safe).
// Returns j as a series exact modulo q^n_terms.
IntSeries j_cached(long n_terms);

} // namespace phibound

#endif
