#include "snc/charts.hpp"

#include <array>
#include <cmath>

#include "snc/errors.hpp"

namespace snc::charts {

namespace {

constexpr Complex I{0.0, 1.0};

void require(bool ok, const char* msg) {
    if (!ok) throw DomainError(msg);
}

/// Complement pair (j, k), j < k, of chart index i in {1,2,3}.
std::pair<int, int> complement(int i) {
    switch (i) {
    case 1: return {2, 3};
    case 2: return {1, 3};
    case 3: return {1, 2};
    default: throw DomainError("chart index must be 1, 2 or 3");
    }
}

/// sigma_{i j k} for the chart order (i, complement of i), from sigma_{123}.
int sigma_for_chart(int i, int sigma123) {
    return i == 2 ? -sigma123 : sigma123; // (2,1,3) is the one odd arrangement
}

/// Real 4x4 Jacobian block structure of a holomorphic map (x,y) -> (u,v)
/// from the complex derivatives du/dx, du/dy, dv/dx, dv/dy.
Eigen::Matrix4d holomorphic_jacobian(Complex ux, Complex uy, Complex vx, Complex vy) {
    Eigen::Matrix4d j = Eigen::Matrix4d::Zero();
    auto block = [&j](int row, int col, Complex d) {
        j(2 * row, 2 * col) = d.real();
        j(2 * row, 2 * col + 1) = -d.imag();
        j(2 * row + 1, 2 * col) = d.imag();
        j(2 * row + 1, 2 * col + 1) = d.real();
    };
    block(0, 0, ux);
    block(0, 1, uy);
    block(1, 0, vx);
    block(1, 1, vy);
    return j;
}

} // namespace

Form1 dx() { return Form1(1.0, I, 0.0, 0.0); }
Form1 dy() { return Form1(0.0, 0.0, 1.0, I); }

Form1 conj_form(const Form1& a) { return a.conjugate(); }
Form2 conj_form(const Form2& m) { return m.conjugate(); }

Form2 wedge(const Form1& a, const Form1& b) {
    return a * b.transpose() - b * a.transpose();
}

Complex wedge(const Form2& a, const Form2& b) {
    return a(0, 1) * b(2, 3) - a(0, 2) * b(1, 3) + a(0, 3) * b(1, 2) +
           a(2, 3) * b(0, 1) - a(1, 3) * b(0, 2) + a(1, 2) * b(0, 3);
}

std::array<double, 5> su2_residuals(const SU2AtPoint& s) {
    Complex psi_psi = wedge(s.psi, s.psi);
    Complex psi_psibar = wedge(s.psi, conj_form(s.psi));
    Complex psi_kappa = wedge(s.psi, s.kappa);
    Complex volume_balance = 2.0 * wedge(s.kappa, s.kappa) - psi_psibar;

    // Positivity defects: zero when the strict inequalities hold.
    double positivity = std::abs(psi_psibar.imag());
    if (psi_psibar.real() <= 0.0) positivity += 1.0 - psi_psibar.real();

    double metric_defect = 0.0;
    try {
        Eigen::Matrix4d g = metric_from(s);
        Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> es(0.5 * (g + g.transpose()));
        double min_ev = es.eigenvalues().minCoeff();
        if (min_ev <= 0.0) metric_defect = 1.0 - min_ev;
    } catch (const DegenerateStructure&) {
        metric_defect = 1.0;
    }

    return {std::abs(psi_psi), positivity, std::abs(psi_kappa), std::abs(volume_balance),
            metric_defect};
}

std::pair<Complex, Complex> eval_h(ChartKind kind, Complex zeta, Complex x, Complex y) {
    require(zeta != 0.0, "gluing parameter must be nonzero");
    require(y != 0.0, "y must be nonzero");
    if (kind == ChartKind::DoubleChart) return {x, zeta / y};
    require(x != 0.0, "x must be nonzero on a triple chart");
    return {x, zeta / (x * y)};
}

double eval_t(ChartKind kind, Complex x, Complex y) {
    require(y != 0.0, "y must be nonzero");
    if (kind == ChartKind::DoubleChart) return -2.0 * std::log(std::abs(y));
    require(x != 0.0, "x must be nonzero on a triple chart");
    return -std::log(std::abs(x)) - 2.0 * std::log(std::abs(y));
}

double T_zeta(Complex zeta) {
    require(zeta != 0.0, "gluing parameter must be nonzero");
    return -std::log(std::abs(zeta));
}

Eigen::Matrix4d h_jacobian(ChartKind kind, Complex zeta, Complex x, Complex y) {
    require(zeta != 0.0 && y != 0.0, "h is undefined here");
    if (kind == ChartKind::DoubleChart)
        return holomorphic_jacobian(1.0, 0.0, 0.0, -zeta / (y * y));
    require(x != 0.0, "h is undefined here");
    return holomorphic_jacobian(1.0, 0.0, -zeta / (x * x * y), -zeta / (x * y * y));
}

Form2 pullback(const Form2& m, const Eigen::Matrix4d& jacobian) {
    return jacobian.transpose() * m * jacobian;
}

SU2AtPoint eval_su2_double(Complex x, Complex y, int eps) {
    (void)x;
    require(y != 0.0, "y must be nonzero");
    double ay2 = std::norm(y);
    SU2AtPoint s;
    s.psi = -static_cast<double>(eps) / y * wedge(dx(), dy());
    s.kappa = (I / 2.0) *
              (wedge(dx(), conj_form(dx())) + wedge(dy(), conj_form(dy())) / ay2);
    return s;
}

SU2AtPoint eval_su2_triple(Complex x, Complex y, int sigma) {
    require(x != 0.0 && y != 0.0, "x and y must be nonzero");
    Form1 a = dx() / x, b = dy() / y;
    SU2AtPoint s;
    s.psi = -static_cast<double>(sigma) * wedge(a, b);
    s.kappa = (I / (2.0 * std::sqrt(3.0))) *
              (wedge(a, conj_form(a)) + wedge(b, conj_form(b)) +
               wedge(Form1(a + b), conj_form(Form1(a + b))));
    return s;
}

SU2AtPoint eval_su2_triple_via_t(Complex x, Complex y, int sigma) {
    require(x != 0.0 && y != 0.0, "x and y must be nonzero");
    Form1 a = dx() / x, b = dy() / y;
    Form1 psi_d = static_cast<double>(sigma) * a; // pullback of the base form
    Form1 del_t = -0.5 * a - b;                   // (1,0)-part of dt
    SU2AtPoint s;
    s.psi = wedge(psi_d, del_t);
    s.kappa = (I / std::sqrt(3.0)) * (0.75 * wedge(psi_d, conj_form(psi_d)) +
                                      wedge(del_t, conj_form(del_t)));
    return s;
}

std::array<Form1, 3> c3_etas(int i, Complex zeta, Complex uj, Complex uk) {
    require(zeta != 0.0 && uj != 0.0 && uk != 0.0, "fiber coordinates must be nonzero");
    auto [j, k] = complement(i);
    Form1 eta_j = dx() / uj;
    Form1 eta_k = dy() / uk;
    Form1 eta_i = -eta_j - eta_k; // u^i = ζ/(u^j u^k) on the fiber
    std::array<Form1, 3> out;
    out[static_cast<std::size_t>(i - 1)] = eta_i;
    out[static_cast<std::size_t>(j - 1)] = eta_j;
    out[static_cast<std::size_t>(k - 1)] = eta_k;
    return out;
}

SU2AtPoint eval_c3_model(int i, Complex zeta, Complex uj, Complex uk, int sigma123) {
    std::array<Form1, 3> eta = c3_etas(i, zeta, uj, uk);
    auto [j, k] = complement(i);
    const Form1& ej = eta[static_cast<std::size_t>(j - 1)];
    const Form1& ek = eta[static_cast<std::size_t>(k - 1)];
    SU2AtPoint s;
    s.psi = -static_cast<double>(sigma_for_chart(i, sigma123)) * wedge(ej, ek);
    s.kappa = (I / (2.0 * std::sqrt(3.0))) *
              (wedge(ej, conj_form(ej)) + wedge(ek, conj_form(ek)) +
               wedge(Form1(ej + ek), conj_form(Form1(ej + ek))));
    return s;
}

std::pair<Complex, Complex> c3_transition(int i, int j, Complex zeta, Complex a, Complex b) {
    require(zeta != 0.0 && a != 0.0 && b != 0.0, "fiber coordinates must be nonzero");
    auto [m, n] = complement(j);
    std::array<Complex, 4> u{}; // 1-based
    u[static_cast<std::size_t>(m)] = a;
    u[static_cast<std::size_t>(n)] = b;
    u[static_cast<std::size_t>(j)] = zeta / (a * b);
    auto [p, q] = complement(i);
    return {u[static_cast<std::size_t>(p)], u[static_cast<std::size_t>(q)]};
}

Eigen::Matrix4d c3_transition_jacobian(int i, int j, Complex zeta, Complex a, Complex b) {
    require(zeta != 0.0 && a != 0.0 && b != 0.0, "fiber coordinates must be nonzero");
    auto [m, n] = complement(j);
    Complex uj = zeta / (a * b);
    auto derivative = [&](int target) -> std::pair<Complex, Complex> {
        if (target == m) return {1.0, 0.0};
        if (target == n) return {0.0, 1.0};
        return {-uj / a, -uj / b};
    };
    auto [p, q] = complement(i);
    auto [ux, uy] = derivative(p);
    auto [vx, vy] = derivative(q);
    return holomorphic_jacobian(ux, uy, vx, vy);
}

Eigen::Matrix4d complex_structure_from(const Form2& psi) {
    // V^{0,1} is the kernel of v -> ι_v ψ, i.e. the null space of ψ's
    // coefficient matrix (rank 2 exactly when ψ∧ψ = 0, ψ∧ψ̄ > 0).
    Eigen::JacobiSVD<Eigen::Matrix4cd> svd(psi, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    double scale = sv(0);
    if (!(scale > 0.0) || sv(1) < 1e-8 * scale || sv(2) > 1e-8 * scale)
        throw DegenerateStructure("psi does not have a 2-dimensional kernel");

    Eigen::Matrix4cd p;
    p.col(0) = svd.matrixV().col(2).conjugate(); // V^{1,0}
    p.col(1) = svd.matrixV().col(3).conjugate();
    p.col(2) = svd.matrixV().col(2);             // V^{0,1}
    p.col(3) = svd.matrixV().col(3);
    Eigen::Vector4cd eigenvalues(I, I, -I, -I);
    Eigen::Matrix4cd structure = p * eigenvalues.asDiagonal() * p.inverse();
    Eigen::Matrix4d real_structure = structure.real();
    // a real kernel (ψ∧ψ̄ not positive) makes p singular; reject it
    if (!real_structure.allFinite() ||
        (real_structure * real_structure + Eigen::Matrix4d::Identity())
                .cwiseAbs()
                .maxCoeff() > 1e-6)
        throw DegenerateStructure("psi does not induce a complex structure");
    return real_structure;
}

Eigen::Matrix4d metric_from(const SU2AtPoint& s) {
    Eigen::Matrix4d structure = complex_structure_from(s.psi);
    Eigen::Matrix4d kappa = s.kappa.real();
    // g(u, v) = κ(-I u, v), from the defining relation g(I·,·) = κ(·,·).
    Eigen::Matrix4d g = -structure.transpose() * kappa;
    return 0.5 * (g + g.transpose());
}

std::pair<Form2, Form2> sd_asd_split(const Form2& form, const SU2AtPoint& structure) {
    Eigen::Matrix4d g = metric_from(structure);
    double det = g.determinant();
    if (det <= 0.0) throw DegenerateStructure("metric is not positive");
    Eigen::Matrix4d ginv = g.inverse();
    double volume = std::sqrt(det);

    auto levi_civita = [](int a, int b, int c, int d) -> int {
        int p[4] = {a, b, c, d};
        int sign = 1;
        for (int u = 0; u < 4; ++u)
            for (int v = u + 1; v < 4; ++v) {
                if (p[u] == p[v]) return 0;
                if (p[u] > p[v]) sign = -sign;
            }
        return sign;
    };

    Form2 raised = ginv * form * ginv;
    Form2 star = Form2::Zero();
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            Complex acc = 0.0;
            for (int c = 0; c < 4; ++c)
                for (int d = 0; d < 4; ++d)
                    acc += static_cast<double>(levi_civita(a, b, c, d)) * raised(c, d);
            star(a, b) = 0.5 * volume * acc;
        }

    Form2 sd = 0.5 * (form + star);
    Form2 asd = 0.5 * (form - star);
    return {sd, asd};
}

namespace {

/// Flat parametrization of a candidate pair: 12 reals for ψ's upper triangle,
/// 6 for κ's.
constexpr std::array<std::pair<int, int>, 6> kPairs{
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

void unpack(const Eigen::VectorXd& x, Form2& psi, Form2& kappa) {
    psi = Form2::Zero();
    kappa = Form2::Zero();
    for (int e = 0; e < 6; ++e) {
        auto [a, b] = kPairs[static_cast<std::size_t>(e)];
        Complex pe(x(2 * e), x(2 * e + 1));
        psi(a, b) = pe;
        psi(b, a) = -pe;
        kappa(a, b) = x(12 + e);
        kappa(b, a) = -x(12 + e);
    }
}

Eigen::VectorXd pack(const Form2& psi, const Form2& kappa) {
    Eigen::VectorXd x(18);
    for (int e = 0; e < 6; ++e) {
        auto [a, b] = kPairs[static_cast<std::size_t>(e)];
        x(2 * e) = psi(a, b).real();
        x(2 * e + 1) = psi(a, b).imag();
        x(12 + e) = kappa(a, b).real();
    }
    return x;
}

/// The five equality constraints (the positivity conditions are open, not active).
Eigen::VectorXd constraints(const Form2& psi, const Form2& kappa) {
    Complex psi_psi = wedge(psi, psi);
    Complex psi_kappa = wedge(psi, kappa);
    Complex balance = 2.0 * wedge(kappa, kappa) - wedge(psi, conj_form(psi));
    Eigen::VectorXd c(5);
    c << psi_psi.real(), psi_psi.imag(), psi_kappa.real(), psi_kappa.imag(),
        balance.real();
    return c;
}

} // namespace

SU2AtPoint project_theta(const Form2& psi_pert, const Form2& kappa_pert) {
    Eigen::VectorXd x = pack(psi_pert, kappa_pert);
    Form2 psi, kappa;

    for (int iter = 0; iter < 200; ++iter) {
        unpack(x, psi, kappa);
        Eigen::VectorXd c = constraints(psi, kappa);
        if (c.lpNorm<Eigen::Infinity>() < 1e-12) {
            SU2AtPoint out{psi, kappa};
            return out;
        }

        // Analytic Jacobian: every constraint is a quadratic form in x, so a
        // directional derivative is an exact symmetric difference.
        Eigen::MatrixXd jac(5, 18);
        for (int col = 0; col < 18; ++col) {
            Eigen::VectorXd dxv = Eigen::VectorXd::Zero(18);
            dxv(col) = 1.0;
            Form2 dpsi, dkappa;
            unpack(dxv, dpsi, dkappa);
            Complex d_psi_psi = 2.0 * wedge(psi, dpsi);
            Complex d_psi_kappa = wedge(dpsi, kappa) + wedge(psi, dkappa);
            Complex d_balance = 4.0 * wedge(kappa, dkappa) -
                                wedge(dpsi, conj_form(psi)) -
                                wedge(psi, conj_form(dpsi));
            jac(0, col) = d_psi_psi.real();
            jac(1, col) = d_psi_psi.imag();
            jac(2, col) = d_psi_kappa.real();
            jac(3, col) = d_psi_kappa.imag();
            jac(4, col) = d_balance.real();
        }

        // Minimum-norm Newton step onto the constraint set.
        Eigen::MatrixXd gram = jac * jac.transpose();
        gram.diagonal().array() += 1e-14;
        Eigen::VectorXd lambda = gram.ldlt().solve(c);
        x -= jac.transpose() * lambda;
    }

    unpack(x, psi, kappa);
    if (constraints(psi, kappa).lpNorm<Eigen::Infinity>() < 1e-10)
        return {psi, kappa};
    throw NoConvergence("projection did not reach the constraint tolerance");
}

double numerical_d(const std::function<Form2(const Eigen::Vector4d&)>& field,
                   const Eigen::Vector4d& point, double h_step) {
    require(h_step > 0.0, "step must be positive");
    std::array<Form2, 4> partial;
    for (int a = 0; a < 4; ++a) {
        Eigen::Vector4d hi = point, lo = point;
        hi(a) += h_step;
        lo(a) -= h_step;
        partial[static_cast<std::size_t>(a)] = (field(hi) - field(lo)) / (2.0 * h_step);
    }
    constexpr std::array<std::array<int, 3>, 4> kTriples{
        {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}};
    double worst = 0.0;
    for (const auto& [a, b, c] : kTriples) {
        Complex coeff = partial[static_cast<std::size_t>(a)](b, c) -
                        partial[static_cast<std::size_t>(b)](a, c) +
                        partial[static_cast<std::size_t>(c)](a, b);
        worst = std::max(worst, std::abs(coeff));
    }
    return worst;
}

} // namespace snc::charts
