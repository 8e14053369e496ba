#ifndef PHIBOUND_MODPOLY_HPP
#define PHIBOUND_MODPOLY_HPP

#include <gmpxx.h>
#include <stdexcept>
#include <string>
#include <vector>

namespace phibound {

struct ModPolyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
/// Signals a singular solve / nonzero reduction remainder; compute_phi retries
/// once with doubled precision before giving up.
struct InsufficientPrecision : ModPolyError {
    using ModPolyError::ModPolyError;
};

/// Symmetric integer polynomial Phi_l, coefficients stored once per unordered
/// exponent pair (i >= j), degree l+1 in each variable.
class BivariateIntPoly {
public:
    explicit BivariateIntPoly(long l)
        : l_(l), c_(static_cast<size_t>((l + 2) * (l + 3) / 2)) {}

    long level() const { return l_; }
    long degree() const { return l_ + 1; }

    const mpz_class& coeff(long i, long j) const {
        if (i < j) std::swap(i, j);
        check_range(i, j);
        return c_[idx(i, j)];
    }
    void set_coeff(long i, long j, mpz_class v) {
        if (i < j) std::swap(i, j);
        check_range(i, j);
        c_[idx(i, j)] = std::move(v);
    }

    const mpz_class& max_abs_coeff() const;

    bool operator==(const BivariateIntPoly& o) const { return l_ == o.l_ && c_ == o.c_; }

private:
    long l_;
    std::vector<mpz_class> c_;

    size_t idx(long i, long j) const { return static_cast<size_t>(i * (i + 1) / 2 + j); }
    void check_range(long i, long j) const {
        if (j < 0 || i > l_ + 1)
            throw std::out_of_range("BivariateIntPoly: exponent out of range");
    }
};

enum class PhiStrategy { LinearSolve, JReduction };

/// Compute Phi_l exactly.  LinearSolve matches q-coefficients of
/// Phi(j(q^l), j(q)) = 0 against the symmetric ansatz; JReduction expands the
/// conjugate product via power sums and Newton's identities and reduces each
/// X^i coefficient against powers of j(q).  Both run symmetry, degree,
/// Kronecker and modular-equation checks before returning.
BivariateIntPoly compute_phi(long l, PhiStrategy strategy = PhiStrategy::LinearSolve,
                             long max_l = 61);

/// True iff Phi_l(j(q^l), j(q)) == 0 through the solving precision plus
/// `slack` extra q-coefficients.  Exact big-integer evaluation for small l;
/// for larger l the evaluation runs modulo several fixed 62-bit primes.
bool verify_modular_equation(const BivariateIntPoly& p, int slack = 16);

/// Phi_l(X,Y) == (X^l - Y)(X - Y^l) mod l
bool kronecker_congruence_ok(const BivariateIntPoly& p);

/// degree/monic structure: coeff(l+1,0) = 1, coeff(l+1,j) = 0 for j >= 1
bool degree_structure_ok(const BivariateIntPoly& p);

enum class HeightConvention { BitsTimesLog2, ExactLog };

struct HeightReport {
    long l = 0;
    double h = 0;   // log max |c|, certified to 1e-12 relative
    long h2 = 0;    // bit length of max |c|
    double c_l = 0; // (h_conv - 6 l log l) / l
    double r_l = 0; // (6 l log l + 18 l) / h_conv
    HeightConvention conv = HeightConvention::BitsTimesLog2;
};

HeightReport height(const BivariateIntPoly& p,
                    HeightConvention conv = HeightConvention::BitsTimesLog2);

/// Table display convention: round half-up to 2 decimals.
std::pair<double, double> table_stats(const HeightReport& r);
double round2_half_up(double x);

/// Canonical text format: header "phi l <l>", then "i j c" per nonzero stored
/// coefficient, ascending lex on (i, j) with i >= j, LF endings.
std::string serialize(const BivariateIntPoly& p);
BivariateIntPoly parse_phi(const std::string& text);

/// Coefficients (in X) of Phi_l(X, y) for exact integer y.
std::vector<mpz_class> specialize_at_integer(const BivariateIntPoly& p, const mpz_class& y);

} // namespace phibound

#endif
