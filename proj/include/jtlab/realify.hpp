#pragma once

#include <Eigen/Dense>

#include "jtlab/triple.hpp"

// Realified coordinates are interleaved: (x_1, y_1, ..., x_n, y_n) for z_m = x_m + i y_m.

namespace jtlab {

inline Eigen::VectorXd realify(const Vec& z) {
    Eigen::VectorXd out(2 * z.size());
    for (Eigen::Index m = 0; m < z.size(); ++m) {
        out(2 * m) = z(m).real();
        out(2 * m + 1) = z(m).imag();
    }
    return out;
}

inline Vec unrealify(const Eigen::VectorXd& x) {
    Vec out(x.size() / 2);
    for (Eigen::Index m = 0; m < out.size(); ++m)
        out(m) = Cplx(x(2 * m), x(2 * m + 1));
    return out;
}

// Real matrix of a C-linear operator: 2x2 blocks [[re, -im], [im, re]].
inline Eigen::MatrixXd realify_linear(const Mat& C) {
    const Eigen::Index n = C.rows();
    Eigen::MatrixXd R(2 * n, 2 * C.cols());
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < C.cols(); ++j) {
            const double re = C(i, j).real(), im = C(i, j).imag();
            R(2 * i, 2 * j) = re;
            R(2 * i, 2 * j + 1) = -im;
            R(2 * i + 1, 2 * j) = im;
            R(2 * i + 1, 2 * j + 1) = re;
        }
    return R;
}

// Real matrix of multiplication by i.
inline Eigen::MatrixXd realified_i(int n) {
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(2 * n, 2 * n);
    for (int m = 0; m < n; ++m) {
        J(2 * m, 2 * m + 1) = -1.0;
        J(2 * m + 1, 2 * m) = 1.0;
    }
    return J;
}

// Complex matrix recovered from the realification of a C-linear operator
// (averages the two block representatives, discarding any antilinear part).
inline Mat unrealify_linear(const Eigen::MatrixXd& R) {
    const Eigen::Index n = R.rows() / 2;
    Mat C(n, R.cols() / 2);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < C.cols(); ++j) {
            const double re = 0.5 * (R(2 * i, 2 * j) + R(2 * i + 1, 2 * j + 1));
            const double im = 0.5 * (R(2 * i + 1, 2 * j) - R(2 * i, 2 * j + 1));
            C(i, j) = Cplx(re, im);
        }
    return C;
}

} // namespace jtlab
