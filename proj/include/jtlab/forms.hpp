#pragma once

#include <vector>

#include <Eigen/Dense>

#include "jtlab/spectral.hpp"
#include "jtlab/triple.hpp"

namespace jtlab {

enum class FormKind { flat, hyperbolic, fubini_study };

// Real antisymmetric 2n x 2n matrix of a two-form at a base point, in the
// interleaved realified basis.
struct TwoFormMatrix {
    Element base;
    Eigen::MatrixXd matrix;
};

double omega0(const Element& z, const Element& u, const Element& v);
double omega_minus(const Element& z, const Element& u, const Element& v);
double omega_plus(const Element& z, const Element& u, const Element& v);
Cplx metric_h_minus(const Element& z, const Element& u, const Element& v);

// log det of B(z,z) (or B(z,-z) with minus_variant) as a C-linear operator.
double log_det_bergman(const Element& z, bool minus_variant = false);

TwoFormMatrix form_matrix(FormKind which, const Element& z);

// Tangent vector at a regular z = sum lambda_j e_j split along the polar
// parametrization: v = sum dlambda_j e_j + sum lambda_j (i alpha_j e_j + v_j0
// + sum_{k != j} v_jk), with v_jk in V_jk and Q(e) v_jk = -v_kj for e the
// frame sum. Components are stored per ordered pair (row j, col k).
struct PolarTangentData {
    std::vector<double> lambdas;       // r, decreasing
    std::vector<Element> frame;        // r minimal tripotents
    std::vector<double> dlambda;       // r
    std::vector<double> alpha;         // r
    std::vector<Element> v_j0;         // r, entries of V_0j
    std::vector<std::vector<Element>> v_jk; // r x r, diagonal unused (zero)
};

PolarTangentData polar_tangent_split(const Element& z, const Element& v, double gap_tol);

// Polar-coordinate evaluation of the chosen form on (v, w); agrees with the
// direct matrix evaluation on regular points with spectral gaps above gap_tol.
double omega_polar(FormKind which, const Element& z, const Element& v, const Element& w,
                   double gap_tol);

} // namespace jtlab
