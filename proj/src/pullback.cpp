#include "jtlab/pullback.hpp"

#include <cmath>

#include "jtlab/calculus.hpp"
#include "jtlab/parallel.hpp"
#include "jtlab/realify.hpp"
#include "jtlab/spectral.hpp"

namespace jtlab {

SmoothMap identity_map(const Descriptor& d) {
    return {"identity", d, [](const Element& z) { return z; }, nullptr};
}

SmoothMap duality_F_map(const Descriptor& d) {
    return {"duality_F", d, [](const Element& z) { return duality_F(z); },
            [](const Element& z) { return spectral_norm(z) < 1.0; }};
}

SmoothMap duality_G_map(const Descriptor& d) {
    return {"duality_G", d, [](const Element& z) { return duality_G(z); }, nullptr};
}

SmoothMap linear_map(const Descriptor& d, const Mat& C, const std::string& name) {
    if (C.rows() != d.n || C.cols() != d.n) throw BadInput("linear_map: shape mismatch");
    return {name, d, [C](const Element& z) { return Element{z.desc, C * z.v}; }, nullptr};
}

SmoothMap compose_maps(const SmoothMap& f, const SmoothMap& g) {
    auto fe = f.eval;
    auto ge = g.eval;
    auto gd = g.in_domain;
    auto fd = f.in_domain;
    std::function<bool(const Element&)> dom = nullptr;
    if (gd || fd)
        dom = [gd, fd, ge](const Element& z) {
            if (gd && !gd(z)) return false;
            return !fd || fd(ge(z));
        };
    return {f.name + "*" + g.name, f.desc,
            [fe, ge](const Element& z) { return fe(ge(z)); }, dom};
}

namespace {

Eigen::MatrixXd jacobian_step(const SmoothMap& map, const Element& z, double hs) {
    const int n = z.desc.n;
    Eigen::MatrixXd J(2 * n, 2 * n);
    const Eigen::VectorXd zr = realify(z.v);
    for (int m = 0; m < 2 * n; ++m) {
        Eigen::VectorXd fp = zr, fm = zr;
        fp(m) += hs;
        fm(m) -= hs;
        Element zp{z.desc, unrealify(fp)}, zm{z.desc, unrealify(fm)};
        if (map.in_domain && (!map.in_domain(zp) || !map.in_domain(zm)))
            throw StepLeavesDomain("numerical_jacobian: step exits the map domain");
        J.col(m) = (realify(map.eval(zp).v) - realify(map.eval(zm).v)) / (2.0 * hs);
    }
    return J;
}

} // namespace

Eigen::MatrixXd numerical_jacobian(const SmoothMap& map, const Element& z, double h,
                                   bool richardson) {
    require_finite(z, "numerical_jacobian");
    if (map.in_domain && !map.in_domain(z))
        throw StepLeavesDomain("numerical_jacobian: base point outside the map domain");
    const double hs = h * std::max(1.0, spectral_norm(z));
    Eigen::MatrixXd J = jacobian_step(map, z, hs);
    if (!richardson) return J;
    Eigen::MatrixXd Jh = jacobian_step(map, z, 0.5 * hs);
    return (4.0 * Jh - J) / 3.0;
}

TwoFormMatrix pullback_two_form(const SmoothMap& map, FormKind target, const Element& z,
                                double h) {
    Eigen::MatrixXd J = numerical_jacobian(map, z, h);
    TwoFormMatrix M = form_matrix(target, map.eval(z));
    Eigen::MatrixXd P = J.transpose() * M.matrix * J;
    P = 0.5 * (P - P.transpose()).eval();
    return {z, std::move(P)};
}

double form_matrix_residual(const Eigen::MatrixXd& P, const Eigen::MatrixXd& T) {
    const double scale = std::max(1.0, T.cwiseAbs().maxCoeff());
    return (P - T).cwiseAbs().maxCoeff() / scale;
}

double duality_residual(DualityDirection dir, const std::vector<Element>& samples, double h,
                        bool parallel) {
    if (samples.empty()) throw BadInput("duality_residual: no samples");
    const Descriptor d = samples.front().desc;
    const SmoothMap F = duality_F_map(d), G = duality_G_map(d);

    auto one = [&](int i) {
        const Element& z = samples[size_t(i)];
        TwoFormMatrix P{z, {}}, T{z, {}};
        switch (dir) {
            case DualityDirection::F0_minus:
                P = pullback_two_form(F, FormKind::flat, z, h);
                T = form_matrix(FormKind::hyperbolic, z);
                break;
            case DualityDirection::Fplus_0:
                P = pullback_two_form(F, FormKind::fubini_study, z, h);
                T = form_matrix(FormKind::flat, z);
                break;
            case DualityDirection::G0_plus:
                P = pullback_two_form(G, FormKind::flat, z, h);
                T = form_matrix(FormKind::fubini_study, z);
                break;
            case DualityDirection::Gminus_0:
                P = pullback_two_form(G, FormKind::hyperbolic, z, h);
                T = form_matrix(FormKind::flat, z);
                break;
        }
        return form_matrix_residual(P.matrix, T.matrix);
    };
    const int count = static_cast<int>(samples.size());
    return parallel ? par::max_over(count, one) : par::max_over_serial(count, one);
}

double top_power_residual(const SmoothMap& map, const Element& z, double h) {
    TwoFormMatrix P = pullback_two_form(map, FormKind::fubini_study, z, h);
    TwoFormMatrix M0 = form_matrix(FormKind::flat, z);
    const double d0 = M0.matrix.determinant();
    return std::abs(P.matrix.determinant() - d0) / std::abs(d0);
}

} // namespace jtlab
