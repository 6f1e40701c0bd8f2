#pragma once

#include <vector>

#include "jtlab/triple.hpp"

namespace jtlab {

// Odd scalar function applied spectrally. Closed forms:
//   identity  t
//   cube      t^3
//   duality_f t / sqrt(1 - t^2)   valid on (-1, 1)
//   duality_g t / sqrt(1 + t^2)
// or an odd polynomial sum a_k t^(2k+1).
struct OddFunction {
    enum class Tag { identity, cube, duality_f, duality_g, poly };
    Tag tag = Tag::identity;
    std::vector<double> coeffs; // poly only: a_0, a_1, ... for t, t^3, ...

    double eval(double t) const;
    double domain_radius() const; // sup of validity interval, inf if unrestricted

    static OddFunction identity() { return {Tag::identity, {}}; }
    static OddFunction cube() { return {Tag::cube, {}}; }
    static OddFunction dualityF() { return {Tag::duality_f, {}}; }
    static OddFunction dualityG() { return {Tag::duality_g, {}}; }
    static OddFunction polynomial(std::vector<double> a) { return {Tag::poly, std::move(a)}; }
};

enum class Method { spectral, operator_form };

// f applied to the spectral values of z, tripotents kept.
Element radial_map(const OddFunction& f, const Element& z);

// F(z) = B(z,z)^{-1/4} z, spectrally lambda -> lambda / sqrt(1 - lambda^2).
Element duality_F(const Element& z, Method m = Method::spectral);
// G(z) = B(z,-z)^{-1/4} z, spectrally lambda -> lambda / sqrt(1 + lambda^2).
Element duality_G(const Element& z, Method m = Method::spectral);

// Equivalent operator forms (id -+ D(z,z)/2)^{-1/2} z, kept as an independent
// route for cross-checking against the Bergman-power route.
Element duality_F_d_form(const Element& z);
Element duality_G_d_form(const Element& z);

// H^alpha for H Hermitian positive definite (min eigenvalue > 1e-13).
Mat hermitian_fractional_power(const Mat& H, double alpha);

} // namespace jtlab
