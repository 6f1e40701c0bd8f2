#include "jtlab/bisympl.hpp"

#include <cmath>
#include <random>

#include "jtlab/peirce.hpp"
#include "jtlab/realify.hpp"
#include "jtlab/spectral.hpp"

namespace jtlab {

namespace {

Mat random_unitary(int m, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Mat G(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) G(i, j) = Cplx(gauss(rng), gauss(rng));
    Eigen::HouseholderQR<Mat> qr(G);
    Mat Q = qr.householderQ();
    Mat R = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < m; ++j) {
        const Cplx d = R(j, j);
        Q.col(j) *= std::abs(d) > 0 ? d / std::abs(d) : Cplx(1.0, 0.0);
    }
    return Q;
}

std::vector<int> inverse_perm(const std::vector<int>& p) {
    std::vector<int> inv(p.size());
    for (size_t j = 0; j < p.size(); ++j) inv[size_t(p[j])] = int(j);
    return inv;
}

CircleFunction multiply(const CircleFunction& a, const CircleFunction& b) {
    CircleFunction out;
    out.coeffs.resize(std::max(a.coeffs.size(), b.coeffs.size()), 0.0);
    for (size_t i = 0; i < a.coeffs.size(); ++i) out.coeffs[i] += a.coeffs[i];
    for (size_t i = 0; i < b.coeffs.size(); ++i) out.coeffs[i] += b.coeffs[i];
    return out;
}

CircleFunction conjugate(const CircleFunction& a) {
    CircleFunction out = a;
    for (double& c : out.coeffs) c = -c;
    return out;
}

} // namespace

Element LinearAutomorphism::apply(const Element& z) const {
    if (!(z.desc == desc)) throw DomainMismatch("LinearAutomorphism::apply: descriptor mismatch");
    if (desc.family == Family::TypeI)
        return Element::from_matrix(desc, Mat(U * z.as_matrix() * W.adjoint()));
    Element out = Element::zero(desc);
    for (int j = 0; j < desc.r; ++j) out.v(j) = phases[size_t(j)] * z.v(perm[size_t(j)]);
    return out;
}

Mat LinearAutomorphism::matrix() const {
    Mat M = Mat::Zero(desc.n, desc.n);
    for (int m = 0; m < desc.n; ++m) M.col(m) = apply(Element::basis(desc, m)).v;
    return M;
}

LinearAutomorphism LinearAutomorphism::inverse() const {
    LinearAutomorphism out;
    out.desc = desc;
    if (desc.family == Family::TypeI) {
        out.U = U.adjoint();
        out.W = W.adjoint();
        return out;
    }
    out.perm = inverse_perm(perm);
    out.phases.resize(size_t(desc.r));
    for (int m = 0; m < desc.r; ++m) out.phases[size_t(m)] = std::conj(phases[size_t(out.perm[size_t(m)])]);
    return out;
}

LinearAutomorphism LinearAutomorphism::identity(const Descriptor& d) {
    LinearAutomorphism k;
    k.desc = d;
    if (d.family == Family::TypeI) {
        k.U = Mat::Identity(d.p, d.p);
        k.W = Mat::Identity(d.q, d.q);
    } else {
        k.perm.resize(size_t(d.r));
        for (int j = 0; j < d.r; ++j) k.perm[size_t(j)] = j;
        k.phases.assign(size_t(d.r), Cplx(1.0, 0.0));
    }
    return k;
}

LinearAutomorphism LinearAutomorphism::compose(const LinearAutomorphism& k1,
                                               const LinearAutomorphism& k2) {
    if (!(k1.desc == k2.desc)) throw DomainMismatch("LinearAutomorphism::compose: mismatch");
    LinearAutomorphism out;
    out.desc = k1.desc;
    if (k1.desc.family == Family::TypeI) {
        out.U = k1.U * k2.U;
        out.W = k1.W * k2.W;
        return out;
    }
    const int r = k1.desc.r;
    out.perm.resize(size_t(r));
    out.phases.resize(size_t(r));
    for (int j = 0; j < r; ++j) {
        out.perm[size_t(j)] = k2.perm[size_t(k1.perm[size_t(j)])];
        out.phases[size_t(j)] = k1.phases[size_t(j)] * k2.phases[size_t(k1.perm[size_t(j)])];
    }
    return out;
}

LinearAutomorphism LinearAutomorphism::random(const Descriptor& d, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    LinearAutomorphism k = identity(d);
    if (d.family == Family::TypeI) {
        k.U = random_unitary(d.p, rng);
        k.W = random_unitary(d.q, rng);
        return k;
    }
    std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
    for (int j = 0; j < d.r; ++j) k.phases[size_t(j)] = std::polar(1.0, angle(rng));
    for (int j = d.r - 1; j > 0; --j) {
        std::uniform_int_distribution<int> pick(0, j);
        std::swap(k.perm[size_t(j)], k.perm[size_t(pick(rng))]);
    }
    return k;
}

Element radial_circular_apply(const std::vector<CircleFunction>& u, const Element& z) {
    if (spectral_norm(z) >= 1.0)
        throw OutsideDomain("radial_circular_apply: spectral norm must be < 1");
    if (z.desc.family == Family::Polydisc) {
        if (int(u.size()) != z.desc.r)
            throw BadInput("radial_circular_apply: need one circle function per component");
        Element out = Element::zero(z.desc);
        for (int j = 0; j < z.desc.r; ++j) {
            const double t = std::norm(z.v(j));
            out.v(j) = u[size_t(j)].eval(t) * z.v(j);
        }
        return out;
    }
    if (u.size() != 1)
        throw BadInput("radial_circular_apply: irreducible family takes one circle function");
    SpectralDecomposition sd = spectral_decompose(z);
    Element out = Element::zero(z.desc);
    for (int i = 0; i < sd.s(); ++i) {
        const double l = sd.lambdas[size_t(i)];
        out = out + (l * u[0].eval(l * l)) * sd.tripotents[size_t(i)];
    }
    return out;
}

Element apply_bisympl(const Bisymplectomorphism& phi, const Element& z) {
    return phi.k.apply(radial_circular_apply(phi.u, z));
}

Bisymplectomorphism compose(const Bisymplectomorphism& a, const Bisymplectomorphism& b) {
    if (!(a.k.desc == b.k.desc)) throw DomainMismatch("compose: descriptor mismatch");
    const Descriptor& d = a.k.desc;
    Bisymplectomorphism out;
    out.k = LinearAutomorphism::compose(a.k, b.k);
    if (d.family == Family::TypeI) {
        out.u = {multiply(a.u[0], b.u[0])};
        return out;
    }
    // f_{ua} o k_b = k_b o f_{ua'} with ua'[m] = ua[perm_b^{-1}[m]]
    const auto inv = inverse_perm(b.k.perm);
    out.u.resize(size_t(d.r));
    for (int m = 0; m < d.r; ++m)
        out.u[size_t(m)] = multiply(a.u[size_t(inv[size_t(m)])], b.u[size_t(m)]);
    return out;
}

Bisymplectomorphism inverse(const Bisymplectomorphism& phi) {
    const Descriptor& d = phi.k.desc;
    Bisymplectomorphism out;
    out.k = phi.k.inverse();
    if (d.family == Family::TypeI) {
        out.u = {conjugate(phi.u[0])};
        return out;
    }
    // (k o f_u)^{-1} = k^{-1} o f_{u'} with u'[m] = conj(u[perm_k[m]])
    out.u.resize(size_t(d.r));
    for (int m = 0; m < d.r; ++m)
        out.u[size_t(m)] = conjugate(phi.u[size_t(phi.k.perm[size_t(m)])]);
    return out;
}

Bisymplectomorphism identity_bisympl(const Descriptor& d) {
    Bisymplectomorphism phi;
    phi.k = LinearAutomorphism::identity(d);
    phi.u.assign(d.family == Family::Polydisc ? size_t(d.r) : 1, CircleFunction::one());
    return phi;
}

SmoothMap bisympl_map(const Bisymplectomorphism& phi) {
    return {"bisympl", phi.k.desc,
            [phi](const Element& z) { return apply_bisympl(phi, z); },
            [](const Element& z) { return spectral_norm(z) < 1.0; }};
}

double check_intertwining(const SmoothMap& f, const Element& z, double h) {
    Eigen::MatrixXd J = numerical_jacobian(f, z, h);
    Eigen::MatrixXd Bf = realify_linear(bergman_operator(f.eval(z), f.eval(z)));
    Eigen::MatrixXd Bz = realify_linear(bergman_operator(z, z));
    const Eigen::MatrixXd lhs = Bf * J;
    return (lhs - J * Bz).norm() / std::max(1.0, lhs.norm());
}

OriginDifferential differential_at_origin(const SmoothMap& f, double h) {
    OriginDifferential out;
    out.jacobian = numerical_jacobian(f, Element::zero(f.desc), h);
    const Eigen::MatrixXd J0 = realified_i(f.desc.n);
    const double lin_res =
        (out.jacobian * J0 - J0 * out.jacobian).norm() / std::max(1.0, out.jacobian.norm());
    if (lin_res > 1e-6) {
        out.is_in_K = false;
        return out;
    }
    const Mat C = unrealify_linear(out.jacobian);
    std::mt19937_64 rng(7);
    std::normal_distribution<double> gauss(0.0, 1.0);
    auto rand_el = [&] {
        Element x = Element::zero(f.desc);
        for (int m = 0; m < f.desc.n; ++m) x.v(m) = Cplx(gauss(rng), gauss(rng));
        return x;
    };
    double worst = 0.0;
    for (int t = 0; t < 4; ++t) {
        const Element x = rand_el(), y = rand_el(), w = rand_el();
        const Element lhs{f.desc, C * triple_product(x, y, w).v};
        const Element rhs =
            triple_product({f.desc, C * x.v}, {f.desc, C * y.v}, {f.desc, C * w.v});
        worst = std::max(worst, trace_norm(lhs - rhs) / std::max(1.0, trace_norm(rhs)));
    }
    out.is_in_K = worst < 1e-5;
    return out;
}

OrbitChecks orbit_and_polydisc_checks(const Bisymplectomorphism& phi, const Element& z,
                                      double h, std::uint64_t seed) {
    if (trace_norm(z) == 0.0) throw BadInput("orbit_and_polydisc_checks: z must be nonzero");
    OrbitChecks out;
    const Element fz = apply_bisympl(phi, z);

    FrameDecomposition fdz = frame_decompose(z);
    FrameDecomposition fdf = frame_decompose(fz);
    for (int j = 0; j < z.desc.r; ++j)
        out.spectra_residual = std::max(
            out.spectra_residual, std::abs(fdz.lambdas[size_t(j)] - fdf.lambdas[size_t(j)]));

    // projector onto the C-span of the image frame
    const double g = z.desc.gram_scale();
    auto span_residual = [&](const Element& y) {
        Element proj = Element::zero(z.desc);
        for (const auto& e : fdf.frame.tripotents)
            proj = proj + (inner_product(y, e) / g) * e;
        return trace_norm(y - proj) / std::max(1.0, trace_norm(y));
    };

    SpectralDecomposition sdz = spectral_decompose(z);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> mod(0.1, 0.9), angle(0.0, 2.0 * M_PI);
    for (int t = 0; t < 10; ++t) {
        Element w = Element::zero(z.desc);
        for (int i = 0; i < sdz.s(); ++i)
            w = w + (mod(rng) * std::polar(1.0, angle(rng))) * sdz.tripotents[size_t(i)];
        out.radiality_residual =
            std::max(out.radiality_residual, span_residual(apply_bisympl(phi, w)));
    }

    const SmoothMap fmap = bisympl_map(phi);
    const double hs = h * std::max(1.0, spectral_norm(z));
    for (int j = 0; j < z.desc.r; ++j)
        for (Cplx dir : {Cplx(1.0, 0.0), Cplx(0.0, 1.0)}) {
            const Element b = dir * fdz.frame.tripotents[size_t(j)];
            const Element d1 =
                (1.0 / (2.0 * hs)) * (fmap.eval(z + hs * b) - fmap.eval(z - hs * b));
            out.vz_residual = std::max(out.vz_residual, span_residual(d1));
        }
    return out;
}

SmoothMap scaling_map(const Descriptor& d, double factor) {
    return {"scale", d, [factor](const Element& z) { return factor * z; }, nullptr};
}

SmoothMap moebius_disc_map(double a) {
    const Descriptor d = Descriptor::type_i(1, 1);
    return {"moebius", d,
            [a](const Element& z) {
                Element out = z;
                out.v(0) = (z.v(0) - a) / (1.0 - a * z.v(0));
                return out;
            },
            [](const Element& z) { return std::abs(z.v(0)) < 1.0; }};
}

SmoothMap polydisc_mixing_map(const Descriptor& d) {
    if (d.family != Family::Polydisc || d.r < 2)
        throw BadInput("polydisc_mixing_map: needs a polydisc of rank >= 2");
    return {"mixing", d,
            [](const Element& z) {
                Element out = 0.5 * z;
                const double th = M_PI * std::norm(z.v(0));
                const double c = std::cos(th), s = std::sin(th);
                out.v(0) = 0.5 * (c * z.v(0) - s * z.v(1));
                out.v(1) = 0.5 * (s * z.v(0) + c * z.v(1));
                return out;
            },
            [](const Element& z) { return spectral_norm(z) < 1.0; }};
}

} // namespace jtlab
