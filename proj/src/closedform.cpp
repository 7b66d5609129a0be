#include "wbh/closedform.hpp"

#include <cmath>
#include <stdexcept>

namespace wbh {

namespace {

// log(1 + e^y), overflow-free.
double softplus(double y) {
    if (y > 36.0) return y + std::log1p(std::exp(-y));
    return std::log1p(std::exp(y));
}

// X0(s) = (1 - s^2)(1 + s^2)^{-(M-2)/2} with y = 2 ln s.
double eval_x0_logspace(double y, double half_m_minus_2) {
    if (y <= 0.0) {
        // (1 - e^y) e^{-c softplus(y)}
        return (y < -745.0 ? 1.0 : (1.0 - std::exp(y))) * std::exp(-half_m_minus_2 * softplus(y));
    }
    // (1 - e^y) = -e^y (1 - e^{-y})
    return -(1.0 - std::exp(-y)) * std::exp(y - half_m_minus_2 * softplus(y));
}

// X1(s) = s (1 + s^2)^{-(M-2)/2} with sigma = ln s.
double eval_x1_logspace(double sigma, double half_m_minus_2) {
    return std::exp(sigma - half_m_minus_2 * softplus(2.0 * sigma));
}

}  // namespace

RadialProfile RadialProfile::bubble(const ProblemParams& p, double lambda) {
    if (!(lambda > 0.0)) throw std::invalid_argument("bubble scale lambda must be positive");
    return RadialProfile{ProfileFamily::Bubble, p, lambda, 1};
}
RadialProfile RadialProfile::kernel_z0(const ProblemParams& p) {
    return RadialProfile{ProfileFamily::KernelZ0, p, 1.0, 1};
}
RadialProfile RadialProfile::kernel_zk(const ProblemParams& p, int k) {
    if (k < 1) throw std::invalid_argument("kernel mode index k must be >= 1");
    return RadialProfile{ProfileFamily::KernelZkRadial, p, 1.0, k};
}
RadialProfile RadialProfile::eigen_x0(const ProblemParams& p) {
    return RadialProfile{ProfileFamily::EigenX0, p, 1.0, 1};
}
RadialProfile RadialProfile::eigen_x1(const ProblemParams& p) {
    return RadialProfile{ProfileFamily::EigenX1, p, 1.0, 1};
}

double eval_profile(const RadialProfile& p, double r) {
    if (r < 0.0) throw std::domain_error("eval_profile: radius must be nonnegative");
    const DerivedConstants d = derive(p.params);
    const double a = p.params.alpha;
    const double m_env = d.kappa1 / d.q;           // (N-4+2a)/(2-a) = (M-4)/2
    const double half_m_minus_2 = m_env + 1.0;     // (M-2)/2

    switch (p.family) {
        case ProfileFamily::Bubble: {
            const double llam = std::log(p.lambda_scale);
            if (r == 0.0) return d.c_bubble * std::exp(d.kappa1 * llam);
            const double y = (2.0 - a) * (std::log(r) + llam);
            return d.c_bubble * std::exp(d.kappa1 * llam - m_env * softplus(y));
        }
        case ProfileFamily::KernelZ0: {
            if (r == 0.0) return 1.0;
            return eval_x0_logspace((2.0 - a) * std::log(r), half_m_minus_2);
        }
        case ProfileFamily::KernelZkRadial:
        case ProfileFamily::EigenX1: {
            if (r == 0.0) return 0.0;
            return eval_x1_logspace(d.q * std::log(r), half_m_minus_2);
        }
        case ProfileFamily::EigenX0: {
            if (r == 0.0) return 1.0;
            return eval_x0_logspace(2.0 * d.q * std::log(r), half_m_minus_2);
        }
    }
    throw std::logic_error("eval_profile: unknown family");
}

double eval_bubble_dlambda(const ProblemParams& p, double lambda, double r) {
    if (!(lambda > 0.0)) throw std::invalid_argument("lambda must be positive");
    const DerivedConstants d = derive(p);
    // d/dlambda [C l^{k1} (1 + l^{2-a} r^{2-a})^{-m}]
    //   = (k1 / l) U_l(r) * (1 - (l r)^{2-a}) / (1 + (l r)^{2-a})
    const double u = eval_profile(RadialProfile::bubble(p, lambda), r);
    if (r == 0.0) return d.kappa1 / lambda * u;
    const double y = (2.0 - p.alpha) * (std::log(r) + std::log(lambda));
    double frac;  // (1 - e^y)/(1 + e^y) = -tanh(y/2)
    frac = -std::tanh(0.5 * y);
    return d.kappa1 / lambda * u * frac;
}

double EmdenFowlerProfile::eval(double t) const {
    // (cosh nu t)^{-m} = 2^m exp(-m * log(2 cosh(nu t))), stable for large |t|
    const double y = std::abs(nu * t);
    const double log2cosh = y + std::log1p(std::exp(-2.0 * y));  // log(2 cosh)
    return amplitude * std::exp(m_decay * (std::log(2.0) - log2cosh));
}

double EmdenFowlerProfile::deriv(double t) const {
    return -m_decay * nu * std::tanh(nu * t) * eval(t);
}

EmdenFowlerProfile emden_fowler_profile(const ProblemParams& p) {
    const DerivedConstants d = derive(p);
    EmdenFowlerProfile e;
    e.m_decay = d.kappa1 / d.q;
    e.nu = d.q;
    const double m = e.m_decay;
    e.amplitude = std::pow(m * (m + 1.0) * (m + 2.0) * (m + 3.0) * std::pow(e.nu, 4.0),
                           1.0 / (d.two_star - 2.0));
    return e;
}

double unit_sphere_area(int N) {
    if (N < 1) throw std::invalid_argument("unit_sphere_area: N must be >= 1");
    return std::exp(std::log(2.0) + 0.5 * N * std::log(M_PI) - std::lgamma(0.5 * N));
}

double c_of_m(double m) {
    if (!(m > 4.0)) throw std::domain_error("c_of_m: requires M > 4");
    const double poly = (m - 4.0) * (m - 2.0) * m * (m + 2.0);
    const double lg = 2.0 * std::lgamma(0.5 * m) - std::log(2.0) - std::lgamma(m);
    return poly * std::exp(4.0 / m * lg);
}

double best_constant_radial(const ProblemParams& p) {
    const DerivedConstants d = derive(p);
    const double expo = (4.0 - 2.0 * p.alpha) / p.N;  // = 4/M
    return std::exp((4.0 - expo) * std::log(d.q) + expo * std::log(unit_sphere_area(p.N))) *
           c_of_m(d.m_dim);
}

double hardy_rellich_mu2(const ProblemParams& p) {
    validate(p);
    if (p.N < 5 || !(p.alpha > 0.0) || !(p.alpha < 2.0))
        throw std::domain_error("hardy_rellich_mu2: requires N >= 5 and 0 < alpha < 2");
    return 0.25 * (p.N - 4.0 + 2.0 * p.alpha) * (p.N - 2.0 * p.alpha);
}

}  // namespace wbh
