#pragma once

#include "wbh/params.hpp"

namespace wbh {

/// Closed-form radial function families.
///
/// Bubble          U_lambda(r) = C lambda^{k1} (1 + lambda^{2-a} r^{2-a})^{-(N-4+2a)/(2-a)}
/// KernelZ0        Z0(r)  = (1 - r^{2-a})(1 + r^{2-a})^{-(N-2+a)/(2-a)}
/// KernelZkRadial  r^{(2-a)/2} (1 + r^{2-a})^{-(N-2+a)/(2-a)}   (radial factor, any k >= 1)
/// EigenX0         X0(s)  = (1 - s^2)(1 + s^2)^{-(M-2)/2}   evaluated at s = r^q
/// EigenX1         X1(s)  = s (1 + s^2)^{-(M-2)/2}          evaluated at s = r^q
enum class ProfileFamily { Bubble, KernelZ0, KernelZkRadial, EigenX0, EigenX1 };

struct RadialProfile {
    ProfileFamily family = ProfileFamily::Bubble;
    ProblemParams params;
    double lambda_scale = 1.0;  // Bubble only
    int k_mode = 1;             // KernelZkRadial metadata only; the radial factor is k-independent

    static RadialProfile bubble(const ProblemParams& p, double lambda = 1.0);
    static RadialProfile kernel_z0(const ProblemParams& p);
    static RadialProfile kernel_zk(const ProblemParams& p, int k = 1);
    static RadialProfile eigen_x0(const ProblemParams& p);
    static RadialProfile eigen_x1(const ProblemParams& p);
};

/// Evaluate at radius r >= 0 (r = 0 by continuous extension). Runs in
/// log-space throughout, stable over at least r in [1e-8, 1e8].
double eval_profile(const RadialProfile& p, double r);

/// d/dlambda of the bubble at scale lambda, evaluated at radius r.
/// At lambda = 1 this equals c_bubble * kappa1 * Z0(r).
double eval_bubble_dlambda(const ProblemParams& p, double lambda, double r);

/// The transformed profile phi(t) = amplitude * (cosh(nu t))^{-m_decay}
/// solving phi'''' - K2 phi'' + K0 phi = |phi|^{2**-2} phi, which reconstructs
/// the bubble via u(r) = r^{-kappa1} phi(-ln r).
///
///   m_decay   = (N-4+2a)/(2-a) = (M-4)/2
///   nu        = (2-a)/2
///   amplitude = [m(m+1)(m+2)(m+3) nu^4]^{1/(2**-2)} = c_bubble * 2^{-m_decay}
struct EmdenFowlerProfile {
    double m_decay;
    double nu;
    double amplitude;

    double eval(double t) const;    // phi(t)
    double deriv(double t) const;   // phi'(t)
};

EmdenFowlerProfile emden_fowler_profile(const ProblemParams& p);

/// Surface area of the unit sphere in R^N: 2 pi^{N/2} / Gamma(N/2).
double unit_sphere_area(int N);

/// C(M) = (M-4)(M-2)M(M+2) [Gamma^2(M/2) / (2 Gamma(M))]^{4/M}, M > 4.
double c_of_m(double m);

/// Best constant of the radial inequality:
/// S = q^{4-(4-2a)/N} * omega_{N-1}^{(4-2a)/N} * C(2N/(2-a)).
double best_constant_radial(const ProblemParams& p);

/// (N-4+2a)(N-2a)/4 for N >= 5 and 0 < a < 2; domain error otherwise.
double hardy_rellich_mu2(const ProblemParams& p);

}  // namespace wbh
