#include "jtlab/forms.hpp"

#include <cmath>

#include "jtlab/peirce.hpp"
#include "jtlab/realify.hpp"

namespace jtlab {

namespace {

Mat bergman_inverse(FormKind which, const Element& z) {
    if (which == FormKind::flat) return Mat::Identity(z.desc.n, z.desc.n);
    if (which == FormKind::hyperbolic) {
        if (spectral_norm(z) >= 1.0)
            throw OutsideDomain("form: spectral norm must be < 1 for the hyperbolic form");
        return bergman_operator(z, z).inverse();
    }
    return bergman_operator(z, Cplx(-1.0, 0.0) * z).inverse();
}

} // namespace

double omega0(const Element& z, const Element& u, const Element& v) {
    require_same_descriptor(z, u, "omega0");
    return symplectic_product(u, v);
}

double omega_minus(const Element& z, const Element& u, const Element& v) {
    require_same_descriptor(z, u, "omega_minus");
    require_same_descriptor(z, v, "omega_minus");
    if (spectral_norm(z) >= 1.0)
        throw OutsideDomain("omega_minus: spectral norm must be < 1");
    Vec bu = bergman_operator(z, z).partialPivLu().solve(u.v);
    return symplectic_product({z.desc, bu}, v);
}

double omega_plus(const Element& z, const Element& u, const Element& v) {
    require_same_descriptor(z, u, "omega_plus");
    require_same_descriptor(z, v, "omega_plus");
    Vec bu = bergman_operator(z, Cplx(-1.0, 0.0) * z).partialPivLu().solve(u.v);
    return symplectic_product({z.desc, bu}, v);
}

Cplx metric_h_minus(const Element& z, const Element& u, const Element& v) {
    require_same_descriptor(z, u, "metric_h_minus");
    require_same_descriptor(z, v, "metric_h_minus");
    if (spectral_norm(z) >= 1.0)
        throw OutsideDomain("metric_h_minus: spectral norm must be < 1");
    Vec bu = bergman_operator(z, z).partialPivLu().solve(u.v);
    return inner_product({z.desc, bu}, v);
}

double log_det_bergman(const Element& z, bool minus_variant) {
    if (!minus_variant && spectral_norm(z) >= 1.0)
        throw OutsideDomain("log_det_bergman: spectral norm must be < 1");
    Mat B = minus_variant ? bergman_operator(z, Cplx(-1.0, 0.0) * z) : bergman_operator(z, z);
    const Cplx det = B.partialPivLu().determinant();
    if (std::real(det) <= 0.0)
        throw OutsideDomain("log_det_bergman: non-positive determinant");
    return std::log(std::real(det));
}

TwoFormMatrix form_matrix(FormKind which, const Element& z) {
    const int n = z.desc.n;
    const double g = z.desc.gram_scale();
    Eigen::MatrixXd M0 = Eigen::MatrixXd::Zero(2 * n, 2 * n);
    for (int m = 0; m < n; ++m) {
        M0(2 * m, 2 * m + 1) = g;
        M0(2 * m + 1, 2 * m) = -g;
    }
    Eigen::MatrixXd M;
    if (which == FormKind::flat) {
        M = M0;
    } else {
        Eigen::MatrixXd R = realify_linear(bergman_inverse(which, z));
        M = R.transpose() * M0;
        M = 0.5 * (M - M.transpose()).eval();
    }
    return {z, std::move(M)};
}

PolarTangentData polar_tangent_split(const Element& z, const Element& v, double gap_tol) {
    require_same_descriptor(z, v, "polar_tangent_split");
    require_finite(v, "polar_tangent_split");
    FrameDecomposition fd = frame_decompose(z);
    const int r = z.desc.r;
    const auto& lam = fd.lambdas;
    for (int j = 0; j < r; ++j) {
        if (lam[size_t(j)] <= gap_tol)
            throw DegenerateSpectrum("polar_tangent_split: spectral value below gap tolerance");
        for (int k = j + 1; k < r; ++k)
            if (lam[size_t(j)] * lam[size_t(j)] - lam[size_t(k)] * lam[size_t(k)] <= gap_tol)
                throw DegenerateSpectrum("polar_tangent_split: spectral gap below tolerance");
    }

    const auto& es = fd.frame.tripotents;
    Element e_sum = Element::zero(z.desc);
    for (const auto& e : es) e_sum = e_sum + e;
    const AntilinearOperator Qe = q_operator(e_sum);
    const double g = z.desc.gram_scale();

    std::vector<Mat> P0(static_cast<size_t>(r)), P1(static_cast<size_t>(r)),
        P2(static_cast<size_t>(r));
    for (int j = 0; j < r; ++j) {
        P0[size_t(j)] = peirce_projection(es[size_t(j)], 0);
        P1[size_t(j)] = peirce_projection(es[size_t(j)], 1);
        P2[size_t(j)] = peirce_projection(es[size_t(j)], 2);
    }

    PolarTangentData out;
    out.lambdas = lam;
    out.frame = es;
    out.dlambda.resize(size_t(r));
    out.alpha.resize(size_t(r));
    out.v_j0.assign(size_t(r), Element::zero(z.desc));
    out.v_jk.assign(size_t(r), std::vector<Element>(size_t(r), Element::zero(z.desc)));

    for (int j = 0; j < r; ++j) {
        const Element pj{z.desc, P2[size_t(j)] * v.v};
        const Cplx c = inner_product(pj, es[size_t(j)]) / g;
        out.dlambda[size_t(j)] = c.real();
        out.alpha[size_t(j)] = c.imag() / lam[size_t(j)];

        Mat P0j = P1[size_t(j)];
        for (int k = 0; k < r; ++k)
            if (k != j) P0j = P0j * P0[size_t(k)];
        out.v_j0[size_t(j)] = (1.0 / lam[size_t(j)]) * Element{z.desc, P0j * v.v};
    }

    for (int j = 0; j < r; ++j)
        for (int k = j + 1; k < r; ++k) {
            const double lj = lam[size_t(j)], lk = lam[size_t(k)];
            const Element p{z.desc, Mat(P1[size_t(j)] * P1[size_t(k)]) * v.v};
            const Element qp = Qe.apply(p);
            out.v_jk[size_t(j)][size_t(k)] = (1.0 / (lj * lj - lk * lk)) * (lj * p + lk * qp);
            out.v_jk[size_t(k)][size_t(j)] = (1.0 / (lk * lk - lj * lj)) * (lk * p + lj * qp);
        }
    return out;
}

double omega_polar(FormKind which, const Element& z, const Element& v, const Element& w,
                   double gap_tol) {
    if (which == FormKind::hyperbolic && spectral_norm(z) >= 1.0)
        throw OutsideDomain("omega_polar: spectral norm must be < 1");
    PolarTangentData sv = polar_tangent_split(z, v, gap_tol);
    PolarTangentData sw = polar_tangent_split(z, w, gap_tol);
    const int r = z.desc.r;
    const double g = z.desc.gram_scale();

    auto diag_coeff = [&](double l) {
        switch (which) {
            case FormKind::flat: return l;
            case FormKind::hyperbolic: return l / ((1.0 - l * l) * (1.0 - l * l));
            default: return l / ((1.0 + l * l) * (1.0 + l * l));
        }
    };
    auto j0_coeff = [&](double l) {
        switch (which) {
            case FormKind::flat: return l * l;
            case FormKind::hyperbolic: return l * l / (1.0 - l * l);
            default: return l * l / (1.0 + l * l);
        }
    };
    auto jk_coeff = [&](double lj, double lk) {
        const double num = lj * lj - lk * lk;
        switch (which) {
            case FormKind::flat: return num;
            case FormKind::hyperbolic: return num / ((1.0 - lj * lj) * (1.0 - lk * lk));
            default: return num / ((1.0 + lj * lj) * (1.0 + lk * lk));
        }
    };

    double total = 0.0;
    for (int j = 0; j < r; ++j) {
        const double l = sv.lambdas[size_t(j)];
        // lambda_j dlambda_j ^ eta_jj with eta_jj = g alpha_j under the trace form
        total += diag_coeff(l) * g *
                 (sv.dlambda[size_t(j)] * sw.alpha[size_t(j)] -
                  sw.dlambda[size_t(j)] * sv.alpha[size_t(j)]);
        total += j0_coeff(l) * symplectic_product(sv.v_j0[size_t(j)], sw.v_j0[size_t(j)]);
        for (int k = j + 1; k < r; ++k)
            total += jk_coeff(l, sv.lambdas[size_t(k)]) *
                     symplectic_product(sv.v_jk[size_t(j)][size_t(k)],
                                        sw.v_jk[size_t(j)][size_t(k)]);
    }
    return total;
}

} // namespace jtlab
