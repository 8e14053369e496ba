#ifndef PHIBOUND_REAL_HPP
#define PHIBOUND_REAL_HPP

#include <mpfr.h>
#include <utility>

namespace phibound {

/// RAII wrapper around mpfr_t.  Arithmetic is done with raw mpfr calls on
/// get(); this class only owns storage and precision.
class Real {
public:
    explicit Real(mpfr_prec_t prec = 128) {
        mpfr_init2(v_, prec);
        mpfr_set_zero(v_, 1);
    }
    Real(const Real& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    Real(Real&& o) noexcept {
        mpfr_init2(v_, 2);
        mpfr_swap(v_, o.v_);
    }
    Real& operator=(const Real& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    Real& operator=(Real&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    static Real of(double x, mpfr_prec_t prec = 128) {
        Real r(prec);
        mpfr_set_d(r.v_, x, MPFR_RNDN);
        return r;
    }

    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }
    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    long double to_ld() const { return mpfr_get_ld(v_, MPFR_RNDN); }

private:
    mpfr_t v_;
};

// |x| rounded away from zero / toward zero, as long double bounds on |x|
inline long double abs_ub(mpfr_srcptr x) {
    long double v = mpfr_get_ld(x, MPFR_RNDA);
    return v < 0 ? -v : v;
}
inline long double abs_lb(mpfr_srcptr x) {
    long double v = mpfr_get_ld(x, MPFR_RNDZ);
    return v < 0 ? -v : v;
}

} // namespace phibound

#endif
