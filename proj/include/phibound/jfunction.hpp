#ifndef PHIBOUND_JFUNCTION_HPP
#define PHIBOUND_JFUNCTION_HPP

#include <gmpxx.h>
#include <stdexcept>
#include <utility>

#include "phibound/real.hpp"

namespace phibound {

/// Point in the upper half-plane.
struct ComplexPoint {
    Real re, im;

    ComplexPoint(Real r, Real i) : re(std::move(r)), im(std::move(i)) {
        if (mpfr_sgn(im.get()) <= 0)
            throw std::domain_error("ComplexPoint: Im z must be positive");
    }
    static ComplexPoint of(double x, double y, mpfr_prec_t prec = 192) {
        return ComplexPoint(Real::of(x, prec), Real::of(y, prec));
    }
};

/// Integer matrix of determinant 1 acting by z -> (az+b)/(cz+d).
struct Unimodular {
    long long a = 1, b = 0, c = 0, d = 1;
    long long det() const { return a * d - b * c; }
};

/// Certified complex value: |true - (re+i*im)| <= radius.
struct JValue {
    Real re, im;
    long double radius = 0;

    long double abs_lower() const;
    long double abs_upper() const;
    // bounds on log max(1, |value|)
    double lognorm_lower() const;
    double lognorm_upper() const;
};

struct PrecisionUnreachable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Reduce z to the standard fundamental domain (|Re| <= 1/2, |z| >= 1,
/// boundary inclusive up to the certified slack).  The returned matrix maps
/// the input to the output and has determinant 1.
std::pair<ComplexPoint, Unimodular> reduce_to_fundamental_domain(const ComplexPoint& z);

/// Evaluate j(z) with certified error radius <= target_radius.
/// Reduces to the fundamental domain first, so the q-series tail is geometric
/// with |q| <= e^{-pi sqrt(3)}.  Working precision starts at 128 bits and
/// doubles until the certified radius meets the target.
JValue eval_j(const ComplexPoint& z, double target_radius);

/// Same, but the radius target is relative to |j(z)| (suitable for lognorm).
JValue eval_j_rel(const ComplexPoint& z, double rel_target);

JValue eval_j_it(double t, double target_radius, mpfr_prec_t point_prec = 192);

/// Unique t in [1, 1.254) with j(it) = y, for y in [1728, 3456]; bisection on
/// the monotone map, |j(it) - y| <= 1e-9.
double solve_t_for_y(double y);

} // namespace phibound

#endif
