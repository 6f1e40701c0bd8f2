#include "jtlab/calculus.hpp"

#include <cmath>
#include <limits>

#include <Eigen/Eigenvalues>

#include "jtlab/spectral.hpp"

namespace jtlab {

double OddFunction::eval(double t) const {
    switch (tag) {
        case Tag::identity: return t;
        case Tag::cube: return t * t * t;
        case Tag::duality_f: return t / std::sqrt(1.0 - t * t);
        case Tag::duality_g: return t / std::sqrt(1.0 + t * t);
        case Tag::poly: {
            double acc = 0.0, pw = t;
            for (double a : coeffs) {
                acc += a * pw;
                pw *= t * t;
            }
            return acc;
        }
    }
    return 0.0;
}

double OddFunction::domain_radius() const {
    return tag == Tag::duality_f ? 1.0 : std::numeric_limits<double>::infinity();
}

Element radial_map(const OddFunction& f, const Element& z) {
    SpectralDecomposition sd = spectral_decompose(z);
    Element out = Element::zero(z.desc);
    for (int i = 0; i < sd.s(); ++i) {
        if (sd.lambdas[size_t(i)] >= f.domain_radius())
            throw DomainOfValidity("radial_map: spectral value outside the function domain");
        out = out + f.eval(sd.lambdas[size_t(i)]) * sd.tripotents[size_t(i)];
    }
    return out;
}

Mat hermitian_fractional_power(const Mat& H, double alpha) {
    Mat S = 0.5 * (H + H.adjoint());
    Eigen::SelfAdjointEigenSolver<Mat> eig(S);
    if (eig.eigenvalues().minCoeff() <= 1e-13)
        throw NotPositiveDefinite("hermitian_fractional_power: operator not positive definite");
    Eigen::VectorXd powed = eig.eigenvalues().array().pow(alpha);
    return eig.eigenvectors() * powed.asDiagonal() * eig.eigenvectors().adjoint();
}

Element duality_F(const Element& z, Method m) {
    if (spectral_norm(z) >= 1.0)
        throw OutsideDomain("duality_F: spectral norm must be < 1");
    if (m == Method::spectral) return radial_map(OddFunction::dualityF(), z);
    Mat B = bergman_operator(z, z);
    return {z.desc, hermitian_fractional_power(B, -0.25) * z.v};
}

Element duality_G(const Element& z, Method m) {
    require_finite(z, "duality_G");
    if (m == Method::spectral) return radial_map(OddFunction::dualityG(), z);
    Mat B = bergman_operator(z, Cplx(-1.0, 0.0) * z);
    return {z.desc, hermitian_fractional_power(B, -0.25) * z.v};
}

Element duality_F_d_form(const Element& z) {
    if (spectral_norm(z) >= 1.0)
        throw OutsideDomain("duality_F_d_form: spectral norm must be < 1");
    const int n = z.desc.n;
    Mat H = Mat::Identity(n, n) - 0.5 * d_operator(z, z);
    return {z.desc, hermitian_fractional_power(H, -0.5) * z.v};
}

Element duality_G_d_form(const Element& z) {
    require_finite(z, "duality_G_d_form");
    const int n = z.desc.n;
    Mat H = Mat::Identity(n, n) + 0.5 * d_operator(z, z);
    return {z.desc, hermitian_fractional_power(H, -0.5) * z.v};
}

} // namespace jtlab
