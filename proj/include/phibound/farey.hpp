#ifndef PHIBOUND_FAREY_HPP
#define PHIBOUND_FAREY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace phibound {

/// Exact rational with small components.  Everything the Farey machinery
/// produces for N <= 500 fits comfortably: denominators stay <= 2N, so all
/// cross products are far below overflow.
struct Frac {
    long long num = 0, den = 1; // den > 0, reduced

    static Frac of(long long n, long long d);
    friend bool operator==(const Frac& a, const Frac& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator<(const Frac& a, const Frac& b) {
        return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
    }
    friend bool operator<=(const Frac& a, const Frac& b) { return a < b || a == b; }
    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string str() const;
};

Frac frac_sub(const Frac& a, const Frac& b);
Frac frac_abs(const Frac& a);

/// One interval I_N(h/k) = [rho1, rho2) of the mediant partition, together
/// with r, s satisfying rk - sh = 1 (0 <= s < k).
struct FareyInterval {
    long long h = 0, k = 1;
    Frac rho1, rho2;
    long long r = 0, s = 0;
};

/// Order-N partition of I_N = [1/(N+1), (N+2)/(N+1)) into K_N = sum phi(k)
/// mediant intervals.  The standard Farey partition of [0,1] is used, with
/// the fragment below 1/(N+1) translated up by 1 and 0/1 identified with 1/1.
struct FareyPartition {
    long N = 0;
    std::vector<FareyInterval> entries;
};

FareyPartition build_partition(long N);

/// invariant checks, exact rational arithmetic throughout
bool partition_covers_exactly(const FareyPartition& p); // disjoint union = I_N
bool endpoint_inequalities_hold(const FareyPartition& p); // 1/(2kN) <= |rho_i - h/k| <= 1/(k(N+1))

enum class PointKind { Interior, GoodExterior, BadExterior };

struct PointClassification {
    long long b = 0;       // the lattice point b/l
    size_t interval = 0;   // index into partition.entries
    double alpha = 0, beta = 0;
    PointKind kind = PointKind::Interior;
};

/// Classify the l lattice points b/l in I_N, N = floor(sqrt(l/t)).
/// Requires l > 5 (so N >= 2) and t in [1, 1.254).
std::vector<PointClassification> classify_points(long l, double t, const FareyPartition& p);

/// Convenience: partition with N = floor(sqrt(l/t)) for classify_points.
FareyPartition partition_for(long l, double t);

/// Exterior-point adjacency claim: adjacent half-intervals in different
/// I_N(h/k) never both contain a bad exterior point.
bool bad_exterior_adjacency_ok(long l, double t);

/// S(l,t) = sum_b || j((it+b)/l) || with certified j evaluations; returns the
/// enclosing interval [lo, hi].
std::pair<double, double> empirical_S(long l, double t);

/// K_N <= (3/pi^2) N^2 + (1/2) N log N ?  (exact K_N from a totient sieve)
bool kn_bound_check(long N);

/// smallest N0 in [2, nmax] such that kn_bound_check holds for every
/// N in [N0, nmax]; records where the displayed range claim actually starts
long kn_bound_smallest_valid(long nmax);

/// CLI dump format: one line per interval, "h/k rho1 rho2 k"
std::string dump_partition(const FareyPartition& p);

} // namespace phibound

#endif
