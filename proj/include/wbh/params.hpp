#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace wbh {

/// Exact rational number with 64-bit numerator/denominator, normalized so
/// den > 0 and gcd(|num|, den) = 1.
struct Rational {
    long long num = 0;
    long long den = 1;

    static Rational make(long long num, long long den);
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

/// The admissible parameter pair (N, alpha):  N >= 2,  (4-N)/2 < alpha < 2.
/// When alpha is known exactly as a ratio of integers, alpha_exact carries it
/// and the degeneracy test runs in exact arithmetic.
struct ProblemParams {
    int N = 5;
    double alpha = 0.0;
    std::optional<Rational> alpha_exact;

    static ProblemParams make(int N, double alpha);
    static ProblemParams make_exact(int N, long long num, long long den);

    bool same_as(const ProblemParams& o) const { return N == o.N && alpha == o.alpha; }
};

/// Throws std::invalid_argument naming the violated bound.
void validate(const ProblemParams& p);

/// Everything derived from (N, alpha).
///   two_star = 2N/(N-4+2a)            critical exponent
///   kappa1   = (N-4+2a)/2             decay power of u near 0/infinity
///   kappa2   = N/2
///   a_const  = (2-a)/2                first-order coefficient in the t-system
///   b_const  = N(N-4+2a)/4 = kappa1*kappa2
///   k2       = kappa1^2 + kappa2^2    ODE coefficients phi'''' - k2 phi'' + k0 phi
///   k0       = kappa1^2 * kappa2^2
///   q        = (2-a)/2                radius rescaling power, s = r^q
///   m_dim    = 2N/(2-a) > 4           effective dimension after s = r^q
///   c_bubble = [(N-4+2a)(N-2+a)N(N+2-a)]^{(N-4+2a)/(8-4a)}
struct DerivedConstants {
    double two_star;
    double kappa1;
    double kappa2;
    double a_const;
    double b_const;
    double k2;
    double k0;
    double q;
    double m_dim;
    double c_bubble;
};

DerivedConstants derive(const ProblemParams& p);

/// Outcome of the exact degeneracy test: the linearized radial solution is
/// degenerate iff (2-a)(2N-2+a) = 4k(N-2+k) for some positive integer k.
struct DegeneracyReport {
    bool degenerate = false;
    std::optional<int> k_mode;
    std::uint64_t kernel_dim = 1;                 // 1, or 1 + harmonic_dim when degenerate
    std::optional<std::uint64_t> harmonic_dim;    // M_k, present iff degenerate
};

/// Exact when alpha_exact is set; otherwise equality is decided within `tol`
/// (absolute). The k-search stops at the first k with 4k(N-2+k) above the
/// left-hand side, which is monotone in k.
DegeneracyReport degeneracy_check(const ProblemParams& p, double tol = 1e-12);

/// dim of the homogeneous harmonic polynomials of degree k in R^N:
/// (N+2k-2)(N+k-3)! / ((N-2)! k!). Exact 64-bit arithmetic; throws
/// std::overflow_error instead of wrapping.
std::uint64_t harmonic_dim(int N, int k);

/// k-th eigenvalue of -Delta on the unit sphere S^{N-1}: k(N-2+k).
double eigenvalue_lk(int N, int k);

}  // namespace wbh
