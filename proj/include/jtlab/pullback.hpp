#pragma once

#include <functional>
#include <string>
#include <vector>

#include "jtlab/forms.hpp"
#include "jtlab/triple.hpp"

namespace jtlab {

struct SmoothMap {
    std::string name;
    Descriptor desc;
    std::function<Element(const Element&)> eval;
    std::function<bool(const Element&)> in_domain; // null means all of V
};

SmoothMap identity_map(const Descriptor& d);
SmoothMap duality_F_map(const Descriptor& d);
SmoothMap duality_G_map(const Descriptor& d);
SmoothMap linear_map(const Descriptor& d, const Mat& C, const std::string& name = "linear");
SmoothMap compose_maps(const SmoothMap& f, const SmoothMap& g); // z -> f(g(z))

// Central differences per realified coordinate, step h * max(1, ||z||).
// One level of Richardson extrapolation on request.
Eigen::MatrixXd numerical_jacobian(const SmoothMap& map, const Element& z, double h,
                                   bool richardson = false);

// J^T M(map(z)) J with M the target form matrix at the image point.
TwoFormMatrix pullback_two_form(const SmoothMap& map, FormKind target, const Element& z,
                                double h);

enum class DualityDirection { F0_minus, Fplus_0, G0_plus, Gminus_0 };

// Max over samples of |pullback - target| (entrywise, relative to the target's
// largest entry) for the four duality pullback identities:
//   F0_minus:  F pulls the flat form back to the hyperbolic one
//   Fplus_0:   F pulls the Fubini-Study form back to the flat one
//   G0_plus:   G pulls the flat form back to the Fubini-Study one
//   Gminus_0:  G pulls the hyperbolic form back to the flat one
double duality_residual(DualityDirection dir, const std::vector<Element>& samples, double h,
                        bool parallel = true);

// Relative defect of det(J^T M_+(map(z)) J) against det(M_0): the volume-form
// identity for the duality map, checked pointwise.
double top_power_residual(const SmoothMap& map, const Element& z, double h);

// max |P - T| / max(1, max |T|) helper shared by residual checks.
double form_matrix_residual(const Eigen::MatrixXd& P, const Eigen::MatrixXd& T);

} // namespace jtlab
