#ifndef PHIBOUND_INTSERIES_HPP
#define PHIBOUND_INTSERIES_HPP

#include <gmpxx.h>
#include <stdexcept>
#include <string>
#include <vector>

namespace phibound {

/// Truncated Laurent series in q with exact integer coefficients.
///
/// coeffs[k] is the coefficient of q^(val+k); the series is exact modulo
/// q^prec, so coeffs.size() == prec - val.  The zero series is stored with
/// empty coeffs and val == prec.  A nonzero series always has a nonzero
/// leading coefficient.
class IntSeries {
public:
    IntSeries() : val_(0) {}

    // zero series known through q^(prec-1)
    static IntSeries zero(long prec) {
        IntSeries s;
        s.val_ = prec;
        return s;
    }

    IntSeries(long val, std::vector<mpz_class> coeffs)
        : val_(val), c_(std::move(coeffs)) {
        normalize();
    }

    long valuation() const { return val_; }
    long prec() const { return val_ + static_cast<long>(c_.size()); }
    bool is_zero() const { return c_.empty(); }

    // coefficient of q^e; e must lie below the precision horizon
    const mpz_class& coeff(long e) const {
        if (e >= prec())
            throw std::out_of_range("IntSeries::coeff: exponent " + std::to_string(e) +
                                    " at or beyond precision " + std::to_string(prec()));
        if (e < val_) return zero_coeff();
        return c_[static_cast<size_t>(e - val_)];
    }

    IntSeries truncated(long new_prec) const {
        if (new_prec >= prec()) return *this;
        if (new_prec <= val_) return zero(new_prec);
        std::vector<mpz_class> c(c_.begin(), c_.begin() + (new_prec - val_));
        return IntSeries(val_, std::move(c));
    }

    // multiply by q^k
    IntSeries shifted(long k) const {
        IntSeries s(*this);
        s.val_ += k;
        return s;
    }

    IntSeries operator-() const {
        IntSeries s(*this);
        for (auto& x : s.c_) x = -x;
        return s;
    }

    friend IntSeries operator+(const IntSeries& a, const IntSeries& b) { return add(a, b, 1); }
    friend IntSeries operator-(const IntSeries& a, const IntSeries& b) { return add(a, b, -1); }

    // result prec = min(a.prec + b.val, b.prec + a.val): the unknown tail of
    // one factor pollutes everything at and above that exponent
    friend IntSeries operator*(const IntSeries& a, const IntSeries& b) {
        long rprec = std::min(a.prec() + b.val_, b.prec() + a.val_);
        if (a.is_zero() || b.is_zero()) return zero(rprec);
        long rval = a.val_ + b.val_;
        if (rprec <= rval) return zero(rprec);
        std::vector<mpz_class> c(static_cast<size_t>(rprec - rval));
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            long base = a.val_ + static_cast<long>(i) + b.val_;
            if (base >= rprec) break;
            size_t jmax = std::min(b.c_.size(), static_cast<size_t>(rprec - base));
            for (size_t j = 0; j < jmax; ++j) {
                if (b.c_[j] != 0)
                    c[static_cast<size_t>(base - rval) + j] += a.c_[i] * b.c_[j];
            }
        }
        return IntSeries(rval, std::move(c));
    }

    IntSeries& operator+=(const IntSeries& b) { *this = *this + b; return *this; }
    IntSeries& operator-=(const IntSeries& b) { *this = *this - b; return *this; }
    IntSeries& operator*=(const IntSeries& b) { *this = *this * b; return *this; }

    friend IntSeries operator*(const mpz_class& k, const IntSeries& a) {
        if (k == 0) return zero(a.prec());
        IntSeries s(a);
        for (auto& x : s.c_) x *= k;
        return s;
    }

    // exact division; the leading coefficient of d must divide every partial
    // remainder (throws otherwise).  quotient prec = min(prec, d.prec + val - d.val) - d.val.
    IntSeries divided_exact(const IntSeries& d) const {
        if (d.is_zero()) throw std::invalid_argument("IntSeries: division by zero series");
        long qval = val_ - d.val_;
        long qprec = std::min(prec(), d.prec() + val_ - d.val_) - d.val_;
        if (is_zero()) return zero(qprec);
        long n = qprec - qval;
        if (n <= 0) return zero(qprec);
        std::vector<mpz_class> q(static_cast<size_t>(n));
        std::vector<mpz_class> rem(c_.begin(), c_.begin() + std::min<size_t>(c_.size(), static_cast<size_t>(n + static_cast<long>(d.c_.size()) - 1)));
        rem.resize(static_cast<size_t>(n + static_cast<long>(d.c_.size()) - 1), mpz_class(0));
        const mpz_class& lead = d.c_[0];
        for (long k = 0; k < n; ++k) {
            if (!mpz_divisible_p(rem[static_cast<size_t>(k)].get_mpz_t(), lead.get_mpz_t()))
                throw std::runtime_error("IntSeries: non-exact series division");
            mpz_divexact(q[static_cast<size_t>(k)].get_mpz_t(),
                         rem[static_cast<size_t>(k)].get_mpz_t(), lead.get_mpz_t());
            if (q[static_cast<size_t>(k)] != 0) {
                size_t jmax = std::min(d.c_.size(), rem.size() - static_cast<size_t>(k));
                for (size_t j = 0; j < jmax; ++j)
                    rem[static_cast<size_t>(k) + j] -= q[static_cast<size_t>(k)] * d.c_[j];
            }
        }
        return IntSeries(qval, std::move(q));
    }

    // constant 1 known through q^(prec-1)
    static IntSeries one_to_prec(long prec) {
        if (prec <= 0) return zero(prec);
        std::vector<mpz_class> c(static_cast<size_t>(prec));
        c[0] = 1;
        return IntSeries(0, std::move(c));
    }

    IntSeries pow(unsigned e, long cap_prec) const {
        IntSeries r = one_to_prec(cap_prec);
        IntSeries base = truncated(cap_prec);
        // plain iterated multiply keeps the precision bookkeeping simple
        for (unsigned i = 0; i < e; ++i) r = (r * base).truncated(cap_prec);
        return r;
    }

    bool operator==(const IntSeries& b) const { return val_ == b.val_ && c_ == b.c_; }

private:
    long val_;
    std::vector<mpz_class> c_;

    static const mpz_class& zero_coeff() {
        static const mpz_class z(0);
        return z;
    }

    void normalize() {
        size_t k = 0;
        while (k < c_.size() && c_[k] == 0) ++k;
        if (k > 0) {
            c_.erase(c_.begin(), c_.begin() + static_cast<long>(k));
            val_ += static_cast<long>(k);
        }
    }

    static IntSeries add(const IntSeries& a, const IntSeries& b, int sign) {
        long rprec = std::min(a.prec(), b.prec());
        long rval = std::min(a.is_zero() ? rprec : a.val_, b.is_zero() ? rprec : b.val_);
        if (rval >= rprec) return zero(rprec);
        std::vector<mpz_class> c(static_cast<size_t>(rprec - rval));
        for (size_t i = 0; i < a.c_.size(); ++i) {
            long e = a.val_ + static_cast<long>(i);
            if (e >= rprec) break;
            c[static_cast<size_t>(e - rval)] = a.c_[i];
        }
        for (size_t i = 0; i < b.c_.size(); ++i) {
            long e = b.val_ + static_cast<long>(i);
            if (e >= rprec) break;
            if (sign > 0) c[static_cast<size_t>(e - rval)] += b.c_[i];
            else          c[static_cast<size_t>(e - rval)] -= b.c_[i];
        }
        return IntSeries(rval, std::move(c));
    }
};

} // namespace phibound

#endif
