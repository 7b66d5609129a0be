#include "wbh/params.hpp"

#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace wbh {

Rational Rational::make(long long num, long long den) {
    if (den == 0) throw std::invalid_argument("rational denominator must be nonzero");
    if (den < 0) { num = -num; den = -den; }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
    return Rational{num, den};
}

ProblemParams ProblemParams::make(int N, double alpha) {
    ProblemParams p;
    p.N = N;
    p.alpha = alpha;
    validate(p);
    return p;
}

ProblemParams ProblemParams::make_exact(int N, long long num, long long den) {
    ProblemParams p;
    p.alpha_exact = Rational::make(num, den);
    p.N = N;
    p.alpha = p.alpha_exact->value();
    validate(p);
    return p;
}

void validate(const ProblemParams& p) {
    if (p.N < 2) {
        std::ostringstream os;
        os << "N must satisfy N >= 2 (got N = " << p.N << ")";
        throw std::invalid_argument(os.str());
    }
    const double lo = 0.5 * (4.0 - p.N);
    bool lo_ok, hi_ok;
    if (p.alpha_exact) {
        // alpha > (4-N)/2  <=>  2*num > (4-N)*den ;  alpha < 2 <=> num < 2*den
        const auto& a = *p.alpha_exact;
        lo_ok = 2 * static_cast<__int128>(a.num) > static_cast<__int128>(4 - p.N) * a.den;
        hi_ok = static_cast<__int128>(a.num) < 2 * static_cast<__int128>(a.den);
    } else {
        lo_ok = p.alpha > lo;
        hi_ok = p.alpha < 2.0;
    }
    if (!lo_ok) {
        std::ostringstream os;
        os << "alpha must satisfy alpha > (4-N)/2 = " << lo << " (got alpha = " << p.alpha << ")";
        throw std::invalid_argument(os.str());
    }
    if (!hi_ok) {
        std::ostringstream os;
        os << "alpha must satisfy alpha < 2 (got alpha = " << p.alpha << ")";
        throw std::invalid_argument(os.str());
    }
}

DerivedConstants derive(const ProblemParams& p) {
    validate(p);
    const double N = p.N, a = p.alpha;
    DerivedConstants d;
    d.two_star = 2.0 * N / (N - 4.0 + 2.0 * a);
    d.kappa1   = 0.5 * (N - 4.0 + 2.0 * a);
    d.kappa2   = 0.5 * N;
    d.a_const  = 0.5 * (2.0 - a);
    d.b_const  = d.kappa1 * d.kappa2;
    d.k2       = d.kappa1 * d.kappa1 + d.kappa2 * d.kappa2;
    d.k0       = d.kappa1 * d.kappa1 * d.kappa2 * d.kappa2;
    d.q        = 0.5 * (2.0 - a);
    d.m_dim    = 2.0 * N / (2.0 - a);
    const double prod = (N - 4.0 + 2.0 * a) * (N - 2.0 + a) * N * (N + 2.0 - a);
    d.c_bubble = std::pow(prod, (N - 4.0 + 2.0 * a) / (8.0 - 4.0 * a));
    return d;
}

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("harmonic_dim: 64-bit overflow in binomial product");
    return r;
}

// binom(n, k) with exact division at every step; overflow is reported.
std::uint64_t binom(std::uint64_t n, long long k) {
    if (k < 0 || static_cast<std::uint64_t>(k) > n) return 0;
    std::uint64_t kk = static_cast<std::uint64_t>(k);
    if (kk > n - kk) kk = n - kk;
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= kk; ++i) {
        std::uint64_t g = std::gcd(r, i);
        std::uint64_t ri = r / g, ii = i / g;
        std::uint64_t f = n - kk + i;
        std::uint64_t g2 = std::gcd(f, ii);
        f /= g2; ii /= g2;
        // ii == 1 now because binom is integral at every step of this order
        r = checked_mul(ri, f) / ii;
    }
    return r;
}

}  // namespace

std::uint64_t harmonic_dim(int N, int k) {
    if (N < 2) throw std::invalid_argument("harmonic_dim: N must be >= 2");
    if (k < 1) throw std::invalid_argument("harmonic_dim: k must be >= 1");
    // dim Y_k(R^N) = binom(N+k-1, k) - binom(N+k-3, k-2),
    // which equals (N+2k-2)(N+k-3)!/((N-2)! k!).
    std::uint64_t hi = binom(static_cast<std::uint64_t>(N) + k - 1, k);
    std::uint64_t lo = binom(static_cast<std::uint64_t>(N) + k - 3, static_cast<long long>(k) - 2);
    return hi - lo;
}

double eigenvalue_lk(int N, int k) {
    if (N < 2) throw std::invalid_argument("eigenvalue_lk: N must be >= 2");
    if (k < 0) throw std::invalid_argument("eigenvalue_lk: k must be >= 0");
    return static_cast<double>(k) * (static_cast<double>(N) - 2.0 + k);
}

DegeneracyReport degeneracy_check(const ProblemParams& p, double tol) {
    validate(p);
    DegeneracyReport rep;

    auto finish_degenerate = [&](int k) {
        rep.degenerate = true;
        rep.k_mode = k;
        rep.harmonic_dim = harmonic_dim(p.N, k);
        rep.kernel_dim = 1 + *rep.harmonic_dim;
    };

    if (p.alpha_exact) {
        // (2 - a)(2N - 2 + a) = 4k(N - 2 + k) with a = num/den:
        // (2 den - num)((2N - 2) den + num) = 4k(N - 2 + k) den^2, all exact.
        const long long num = p.alpha_exact->num, den = p.alpha_exact->den;
        const __int128 lhs = (static_cast<__int128>(2) * den - num) *
                             (static_cast<__int128>(2 * static_cast<long long>(p.N) - 2) * den + num);
        const __int128 den2 = static_cast<__int128>(den) * den;
        for (int k = 1;; ++k) {
            const __int128 rhs = static_cast<__int128>(4) * k * (p.N - 2 + k) * den2;
            if (rhs == lhs) { finish_degenerate(k); return rep; }
            if (rhs > lhs) break;
        }
        return rep;
    }

    const double lhs = (2.0 - p.alpha) * (2.0 * p.N - 2.0 + p.alpha);
    for (int k = 1;; ++k) {
        const double rhs = 4.0 * k * (p.N - 2.0 + k);
        if (std::abs(rhs - lhs) <= tol) { finish_degenerate(k); return rep; }
        if (rhs > lhs + tol) break;
    }
    return rep;
}

}  // namespace wbh
