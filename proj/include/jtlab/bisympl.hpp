#pragma once

#include <cstdint>
#include <vector>

#include "jtlab/pullback.hpp"
#include "jtlab/triple.hpp"

namespace jtlab {

// u(t) = exp(i (c_1 t + ... + c_d t^d)) on [0,1); u(0) = 1 by construction.
struct CircleFunction {
    std::vector<double> coeffs; // c_1 ... c_d

    double phase(double t) const {
        double acc = 0.0, pw = t;
        for (double c : coeffs) {
            acc += c * pw;
            pw *= t;
        }
        return acc;
    }
    Cplx eval(double t) const { return std::polar(1.0, phase(t)); }
    static CircleFunction one() { return {}; }
};

// Triple-automorphism of V preserving the domain. TypeI: z -> U z W^* with U, W
// unitary. Polydisc: (k z)_j = phases[j] * z_{perm[j]}.
struct LinearAutomorphism {
    Descriptor desc;
    Mat U, W;                 // TypeI
    std::vector<int> perm;    // Polydisc
    std::vector<Cplx> phases; // Polydisc

    Element apply(const Element& z) const;
    Mat matrix() const;
    LinearAutomorphism inverse() const;

    static LinearAutomorphism identity(const Descriptor& d);
    static LinearAutomorphism compose(const LinearAutomorphism& k1, const LinearAutomorphism& k2);
    static LinearAutomorphism random(const Descriptor& d, std::uint64_t seed);
};

// phi = k o f_u where f_u rescales each spectral value lambda by u(lambda^2).
// TypeI carries one circle function; the polydisc one per component.
struct Bisymplectomorphism {
    LinearAutomorphism k;
    std::vector<CircleFunction> u;
};

Element radial_circular_apply(const std::vector<CircleFunction>& u, const Element& z);
Element apply_bisympl(const Bisymplectomorphism& phi, const Element& z);
Bisymplectomorphism compose(const Bisymplectomorphism& a, const Bisymplectomorphism& b);
Bisymplectomorphism inverse(const Bisymplectomorphism& phi);
Bisymplectomorphism identity_bisympl(const Descriptor& d);
SmoothMap bisympl_map(const Bisymplectomorphism& phi);

// || B(f(z), f(z)) J - J B(z,z) ||_F / max(1, ||B(f(z), f(z)) J||_F) with J the
// realified numerical Jacobian; zero exactly for members of the group.
double check_intertwining(const SmoothMap& f, const Element& z, double h);

struct OriginDifferential {
    Eigen::MatrixXd jacobian;
    bool is_in_K = false;
};

// Numerical differential at 0; in_K iff complex-linear and triple-preserving.
OriginDifferential differential_at_origin(const SmoothMap& f, double h);

struct OrbitChecks {
    double spectra_residual = 0.0;   // spectral values of phi(z) vs z
    double radiality_residual = 0.0; // phi maps the polydisc of z into that of phi(z)
    double vz_residual = 0.0;        // d phi(z) maps the frame span to the image frame span
};

OrbitChecks orbit_and_polydisc_checks(const Bisymplectomorphism& phi, const Element& z,
                                      double h, std::uint64_t seed = 12345);

// Reference non-members used by the negative suite.
SmoothMap scaling_map(const Descriptor& d, double factor);
SmoothMap moebius_disc_map(double a); // (z - a)/(1 - a z) on the disc, a real
SmoothMap polydisc_mixing_map(const Descriptor& d); // coordinate-mixing non-member

} // namespace jtlab
