#include "jtlab/triple.hpp"

#include <cmath>

namespace jtlab {

Descriptor Descriptor::type_i(int p, int q) {
    if (p < 1 || q < p) throw BadInput("type_i: need 1 <= p <= q");
    Descriptor d;
    d.family = Family::TypeI;
    d.p = p;
    d.q = q;
    d.r = p;
    d.n = p * q;
    d.a = p >= 2 ? 2 : 0;
    d.b = q - p;
    d.tube = (p == q);
    return d;
}

Descriptor Descriptor::polydisc(int r) {
    if (r < 1) throw BadInput("polydisc: need r >= 1");
    Descriptor d;
    d.family = Family::Polydisc;
    d.r = r;
    d.n = r;
    d.a = 0;
    d.b = 0;
    d.tube = true;
    return d;
}

std::string Descriptor::name() const {
    if (family == Family::TypeI)
        return "typeI(" + std::to_string(p) + "," + std::to_string(q) + ")";
    return "polydisc(" + std::to_string(r) + ")";
}

Element Element::basis(const Descriptor& d, int m) {
    if (m < 0 || m >= d.n) throw IndexOutOfRange("Element::basis: index out of range");
    Vec v = Vec::Zero(d.n);
    v(m) = 1.0;
    return {d, v};
}

RowMat Element::as_matrix() const {
    if (desc.family != Family::TypeI) throw BadInput("as_matrix: TypeI only");
    return Eigen::Map<const RowMat>(v.data(), desc.p, desc.q);
}

Element Element::from_matrix(const Descriptor& d, const Eigen::Ref<const Mat>& m) {
    if (d.family != Family::TypeI) throw BadInput("from_matrix: TypeI only");
    if (m.rows() != d.p || m.cols() != d.q) throw BadInput("from_matrix: shape mismatch");
    RowMat rm = m;
    return {d, Eigen::Map<const Vec>(rm.data(), d.n)};
}

void require_same_descriptor(const Element& x, const Element& y, const char* where) {
    if (!(x.desc == y.desc))
        throw DomainMismatch(std::string(where) + ": descriptor mismatch");
}

void require_finite(const Element& x, const char* where) {
    if (!x.v.allFinite()) throw NonFinite(std::string(where) + ": non-finite coordinates");
}

Element operator+(const Element& x, const Element& y) {
    require_same_descriptor(x, y, "operator+");
    return {x.desc, x.v + y.v};
}

Element operator-(const Element& x, const Element& y) {
    require_same_descriptor(x, y, "operator-");
    return {x.desc, x.v - y.v};
}

Element operator*(Cplx c, const Element& x) { return {x.desc, c * x.v}; }
Element operator*(double c, const Element& x) { return {x.desc, c * x.v}; }

Element triple_product(const Element& x, const Element& y, const Element& z) {
    require_same_descriptor(x, y, "triple_product");
    require_same_descriptor(x, z, "triple_product");
    if (x.desc.family == Family::TypeI) {
        RowMat X = x.as_matrix(), Y = y.as_matrix(), Z = z.as_matrix();
        RowMat T = X * Y.adjoint() * Z + Z * Y.adjoint() * X;
        return {x.desc, Eigen::Map<const Vec>(T.data(), x.desc.n)};
    }
    return {x.desc, 2.0 * x.v.array() * y.v.conjugate().array() * z.v.array()};
}

Mat d_operator(const Element& x, const Element& y) {
    require_same_descriptor(x, y, "d_operator");
    const int n = x.desc.n;
    Mat D(n, n);
    for (int m = 0; m < n; ++m)
        D.col(m) = triple_product(x, y, Element::basis(x.desc, m)).v;
    return D;
}

AntilinearOperator q_operator(const Element& x) {
    const int n = x.desc.n;
    Mat A(n, n);
    for (int m = 0; m < n; ++m)
        A.col(m) = 0.5 * triple_product(x, Element::basis(x.desc, m), x).v;
    return {std::move(A)};
}

AntilinearOperator q_operator2(const Element& x, const Element& z) {
    require_same_descriptor(x, z, "q_operator2");
    const int n = x.desc.n;
    Mat A(n, n);
    for (int m = 0; m < n; ++m)
        A.col(m) = triple_product(x, Element::basis(x.desc, m), z).v;
    return {std::move(A)};
}

Mat bergman_operator(const Element& x, const Element& y) {
    require_same_descriptor(x, y, "bergman_operator");
    const int n = x.desc.n;
    Mat Ax = q_operator(x).A;
    Mat Ay = q_operator(y).A;
    // Q(x)Q(y)v = Ax * conj(Ay * conj(v)) = (Ax * conj(Ay)) v
    return Mat::Identity(n, n) - d_operator(x, y) + Ax * Ay.conjugate();
}

Cplx inner_product(const Element& u, const Element& v) {
    require_same_descriptor(u, v, "inner_product");
    // tr D(u,v) reduces to a scaled coordinate product in both families.
    return u.desc.gram_scale() * v.v.dot(u.v);
}

double symplectic_product(const Element& x, const Element& y) {
    return -std::imag(inner_product(x, y));
}

Element odd_power(const Element& z, int k) {
    if (k < 0) throw BadInput("odd_power: negative exponent index");
    Element w = z;
    for (int i = 0; i < k; ++i) w = 0.5 * triple_product(z, w, z);
    return w;
}

double trace_norm(const Element& x) {
    return std::sqrt(std::real(inner_product(x, x)));
}

} // namespace jtlab
