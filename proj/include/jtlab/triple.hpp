#pragma once

#include <complex>
#include <string>

#include <Eigen/Dense>

#include "jtlab/errors.hpp"

namespace jtlab {

using Cplx = std::complex<double>;
using Vec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXcd;
using RowMat = Eigen::Matrix<Cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

enum class Family { TypeI, Polydisc };

// Immutable description of a concrete Jordan triple family.
// TypeI(p,q), p <= q: V = p x q complex matrices, rank p.
// Polydisc(r): V = C^r with the component-wise product, rank r.
struct Descriptor {
    Family family;
    int p = 0; // TypeI only
    int q = 0; // TypeI only
    int r = 0; // rank
    int n = 0; // complex dimension of V
    int a = 0; // common dim of V_jk, j<k
    int b = 0; // common dim of V_0j
    bool tube = false;

    static Descriptor type_i(int p, int q);
    static Descriptor polydisc(int r);

    // (e|e) for minimal tripotents under the trace-form inner product.
    double gram_scale() const { return family == Family::TypeI ? double(p + q) : 2.0; }
    std::string name() const;
    bool operator==(const Descriptor& o) const {
        return family == o.family && p == o.p && q == o.q && r == o.r;
    }
};

// A point of V in flattened coordinates (TypeI matrices row-major).
struct Element {
    Descriptor desc;
    Vec v;

    Element() = default;
    Element(const Descriptor& d, Vec coords) : desc(d), v(std::move(coords)) {}
    static Element zero(const Descriptor& d) { return {d, Vec::Zero(d.n)}; }
    static Element basis(const Descriptor& d, int m);

    RowMat as_matrix() const; // TypeI only
    static Element from_matrix(const Descriptor& d, const Eigen::Ref<const Mat>& m);
};

// C-antilinear operator, action v -> A * conj(v).
struct AntilinearOperator {
    Mat A;
    Vec apply(const Vec& x) const { return A * x.conjugate(); }
    Element apply(const Element& x) const { return {x.desc, A * x.v.conjugate()}; }
};

void require_same_descriptor(const Element& x, const Element& y, const char* where);
void require_finite(const Element& x, const char* where);

Element operator+(const Element& x, const Element& y);
Element operator-(const Element& x, const Element& y);
Element operator*(Cplx c, const Element& x);
Element operator*(double c, const Element& x);

Element triple_product(const Element& x, const Element& y, const Element& z);
Mat d_operator(const Element& x, const Element& y);
AntilinearOperator q_operator(const Element& x);               // Q(x)y = {x,y,x}/2
AntilinearOperator q_operator2(const Element& x, const Element& z); // Q(x,z)y = {x,y,z}
Mat bergman_operator(const Element& x, const Element& y);

Cplx inner_product(const Element& u, const Element& v);  // (u|v) = tr D(u,v)
double symplectic_product(const Element& x, const Element& y); // (i/2)((x|y)-(y|x))
Element odd_power(const Element& z, int k); // z^(2k+1)

// Trace-form norm sqrt((x|x)).
double trace_norm(const Element& x);

} // namespace jtlab
