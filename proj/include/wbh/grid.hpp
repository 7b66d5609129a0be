#pragma once

#include "wbh/closedform.hpp"
#include "wbh/params.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace wbh {

/// Uniform symmetric grid in the logarithmic variable t = -ln r.
struct TGrid {
    double t_max = 40.0;
    int n = 4001;  // odd, >= 201
    double h = 0.02;

    static TGrid make(double t_max, int n);
    double t(int i) const { return -t_max + i * h; }
    double r(int i) const { return std::exp(-t(i)); }
    bool same_as(const TGrid& o) const { return n == o.n && t_max == o.t_max; }
};

/// Sampled transformed profile phi(t_i), phi(t) = r^{kappa1} u(r), r = e^{-t}.
struct RadialField {
    TGrid grid;
    ProblemParams params;
    std::vector<double> values;
    bool truncation_warning = false;  // boundary decay below decay_tol violated

    RadialField() = default;
    RadialField(const TGrid& g, const ProblemParams& p);
    void refresh_truncation_flag(double decay_tol = 1e-8);
};

enum class Quadrature { Simpson, Trapezoid };

struct NormOptions {
    int stencil_order = 4;  // 2 or 4
    Quadrature quadrature = Quadrature::Simpson;
    double decay_tol = 1e-8;
};

/// Sample a closed-form profile: values_i = r_i^{kappa1} * profile(r_i),
/// evaluated from the exact logarithmic forms (no overflow at the grid ends).
RadialField project(const RadialProfile& p, const TGrid& g,
                    const NormOptions& opt = NormOptions{});

/// t-profile of d/dlambda U_lambda (exact formula), used as the manifold
/// tangent direction.
RadialField project_bubble_dlambda(const ProblemParams& p, double lambda, const TGrid& g,
                                   const NormOptions& opt = NormOptions{});

/// Quadrature weights of the grid (Simpson or trapezoid), including h.
std::vector<double> quadrature_weights(const TGrid& g, Quadrature q);

/// (L phi)_i with L = -d^2/dt^2 + 2A d/dt + B, centered differences of the
/// requested order, zero padding outside the grid.
std::vector<double> apply_l_operator(const RadialField& f, const NormOptions& opt = NormOptions{});

/// ||u||^2 = omega_{N-1} * int (L phi)^2 dt.
double hnorm_sq(const RadialField& f, const NormOptions& opt = NormOptions{});

/// ||u||_* = (omega_{N-1} * int |phi|^{2**} dt)^{1/2**}.
double lstar_norm(const RadialField& f, const NormOptions& opt = NormOptions{});

/// <u, v>_alpha = omega_{N-1} * int (L phi_u)(L phi_v) dt. Grid/params must match.
double inner_alpha(const RadialField& f, const RadialField& g,
                   const NormOptions& opt = NormOptions{});

/// hnorm_sq / lstar_norm^2; throws on the zero field.
double rayleigh_quotient(const RadialField& f, const NormOptions& opt = NormOptions{});

/// int |div(|x|^a grad u)|^2 versus int |x|^{2a} |Delta u|^2, both reduced to
/// the t-line by the chain rule. Requires N >= 5, 0 < alpha < 2.
struct NormEquivalence {
    double form_div;
    double form_lap;
    double ratio;  // form_lap / form_div
};
NormEquivalence norm_equivalence_report(const RadialField& f,
                                        const NormOptions& opt = NormOptions{});

/// Residual of phi'''' - K2 phi'' + K0 phi = |phi|^{2**-2} phi over the
/// interior nodes; centered differences of the requested order (2, 4 or 6).
struct OdeResidual {
    double sup_norm;
    double l2_norm;
};
OdeResidual residual_pwht(const RadialField& f, int stencil_order = 6);

/// Compensated dot products used by every quadrature in this module.
double kahan_dot(const std::vector<double>& w, const std::vector<double>& a,
                 const std::vector<double>& b);
double kahan_weighted_sum(const std::vector<double>& w, const std::vector<double>& a);

/// CSV dump format: header "t,phi,r,u" with u = r^{-kappa1} phi, 17
/// significant digits. read_field_csv validates grid uniformity and symmetry.
void write_field_csv(const RadialField& f, std::ostream& os);
RadialField read_field_csv(std::istream& is, const ProblemParams& p);

}  // namespace wbh
