#pragma once

#include <Eigen/Dense>
#include <complex>
#include <functional>
#include <utility>

namespace snc::charts {

using Complex = std::complex<double>;

/// Complex 1-form at a point, coefficients over the real cotangent basis
/// (dRe x, dIm x, dRe y, dIm y).
using Form1 = Eigen::Vector4cd;

/// Complex 2-form at a point: 4x4 antisymmetric coefficient matrix over the
/// same basis, ω = Σ_{a<b} M_ab e^a∧e^b.
using Form2 = Eigen::Matrix4cd;

enum class ChartKind { DoubleChart, TripleChart };

struct SU2AtPoint {
    Form2 psi;   // complex 2-form
    Form2 kappa; // real entries
};

// ---- exterior algebra -------------------------------------------------

Form1 dx();                 // dRe x + i dIm x
Form1 dy();
Form1 conj_form(const Form1& a);
Form2 conj_form(const Form2& m);

Form2 wedge(const Form1& a, const Form1& b);

/// Wedge of two 2-forms, returned as the coefficient relative to the volume
/// form dRe x ∧ dIm x ∧ dRe y ∧ dIm y.  Symmetric in its arguments.
Complex wedge(const Form2& a, const Form2& b);

/// Pointwise constraint residuals of an SU(2)-structure, in order:
/// |ψ∧ψ|, positivity defect of ψ∧ψ̄, |ψ∧κ|, |2κ∧κ - ψ∧ψ̄|,
/// positive-definiteness defect of the associated metric.
std::array<double, 5> su2_residuals(const SU2AtPoint& s);

// ---- smoothing charts -------------------------------------------------

/// The gluing map h_ζ: (x, ζ/y) on double charts, (x, ζ/(xy)) on triple charts.
std::pair<Complex, Complex> eval_h(ChartKind kind, Complex zeta, Complex x, Complex y);

/// Cylindrical parameter: -2 log|y| (double), -log|x| - 2 log|y| (triple).
double eval_t(ChartKind kind, Complex x, Complex y);

/// Neck half-length T_ζ = -log|ζ|.
double T_zeta(Complex zeta);

/// Real 4x4 Jacobian of h_ζ at (x, y), assembled from the closed-form complex
/// derivatives of the (holomorphic) map.
Eigen::Matrix4d h_jacobian(ChartKind kind, Complex zeta, Complex x, Complex y);

/// Pullback of a 2-form through a map with real Jacobian J: J^T M J.
Form2 pullback(const Form2& m, const Eigen::Matrix4d& jacobian);

// ---- closed-form SU(2)-structures --------------------------------------

/// Double chart model: Ω = -ε dx∧dy / y, ω = (i/2)(dx∧dx̄ + dy∧dȳ/|y|²).
SU2AtPoint eval_su2_double(Complex x, Complex y, int eps);

/// Triple chart model: Ω = -σ (dx/x)∧(dy/y) and the matching ω.
SU2AtPoint eval_su2_triple(Complex x, Complex y, int sigma);

/// Same structure assembled through the cylindrical route
/// ω = (i/√3)·((3/4)·π*(ψ_D∧ψ̄_D) + ∂t∧∂̄t); agrees with eval_su2_triple.
SU2AtPoint eval_su2_triple_via_t(Complex x, Complex y, int sigma);

/// Model fiber u¹u²u³ = ζ in C³, structure of the i-th projection chart in
/// coordinates (u^j, u^k), j < k, u^i = ζ/(u^j u^k).
SU2AtPoint eval_c3_model(int i, Complex zeta, Complex uj, Complex uk, int sigma123);

/// The three logarithmic differentials η^1, η^2, η^3 restricted to the fiber,
/// expressed in the i-th chart's coordinates.
std::array<Form1, 3> c3_etas(int i, Complex zeta, Complex uj, Complex uk);

/// Real Jacobian of the chart transition p_i ∘ p_j^{-1} at a point of the
/// j-th chart.
Eigen::Matrix4d c3_transition_jacobian(int i, int j, Complex zeta, Complex uj_coord,
                                       Complex uk_coord);
std::pair<Complex, Complex> c3_transition(int i, int j, Complex zeta, Complex a, Complex b);

// ---- pointwise linear algebra ------------------------------------------

/// Almost-complex structure I with I² = -id recovered from an SL(2,C)-form ψ
/// via V^{0,1} = { v : ι_v ψ = 0 }.
Eigen::Matrix4d complex_structure_from(const Form2& psi);

/// Metric g(·,·) determined by g(I_ψ ·, ·) = κ.
Eigen::Matrix4d metric_from(const SU2AtPoint& s);

/// Hodge-star decomposition of a 2-form into (self-dual, anti-self-dual)
/// parts for the metric of the given structure.
std::pair<Form2, Form2> sd_asd_split(const Form2& form, const SU2AtPoint& structure);

/// Nearest SU(2)-structure: damped Gauss-Newton on the five constraint
/// residuals, starting from (psi_pert, kappa_pert).  Throws NoConvergence if the
/// residual does not reach 1e-10 within 200 iterations.
SU2AtPoint project_theta(const Form2& psi_pert, const Form2& kappa_pert);

/// Max-norm of the 3-form coefficients of dF at a point, by central
/// differences with step h over the real coordinates.
double numerical_d(const std::function<Form2(const Eigen::Vector4d&)>& field,
                   const Eigen::Vector4d& point, double h_step);

} // namespace snc::charts
