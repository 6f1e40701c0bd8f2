#include "jtlab/peirce.hpp"

#include <cmath>

#include "jtlab/spectral.hpp"

namespace jtlab {

Mat peirce_projection(const Element& e, int i) {
    if (i < 0 || i > 2) throw IndexOutOfRange("peirce_projection: eigenvalue must be 0, 1 or 2");
    if (!tripotent_check(e, 1e-8).is_tripotent)
        throw NotATripotent("peirce_projection: not a tripotent");
    const int n = e.desc.n;
    const Mat D = d_operator(e, e);
    const Mat I = Mat::Identity(n, n);
    switch (i) {
        case 2: return 0.5 * (D * (D - I)).eval();
        case 1: return (D * (2.0 * I - D)).eval();
        default: return 0.5 * ((D - I) * (D - 2.0 * I)).eval();
    }
}

Mat simultaneous_projection(const std::vector<Element>& es, int j, int k) {
    const int s = static_cast<int>(es.size());
    if (s == 0) throw BadInput("simultaneous_projection: empty tripotent sequence");
    if (j < 0 || k < j || k > s) throw IndexOutOfRange("simultaneous_projection: bad index pair");
    for (int a = 0; a < s; ++a)
        for (int b = a + 1; b < s; ++b)
            if (d_operator(es[size_t(a)], es[size_t(b)]).norm() > 1e-8)
                throw NotOrthogonal("simultaneous_projection: tripotents not orthogonal");

    const int n = es[0].desc.n;
    auto P = [&](int t, int i) { return peirce_projection(es[size_t(t - 1)], i); };
    if (j == 0 && k == 0) {
        Mat M = Mat::Identity(n, n);
        for (int t = 1; t <= s; ++t) M = M * P(t, 0);
        return M;
    }
    if (j == 0) {
        Mat M = P(k, 1);
        for (int t = 1; t <= s; ++t)
            if (t != k) M = M * P(t, 0);
        return M;
    }
    if (j == k) return P(j, 2);
    return Mat(P(j, 1) * P(k, 1));
}

std::pair<Element, Element> v2_plus_split(const Element& e, const Element& v) {
    require_same_descriptor(e, v, "v2_plus_split");
    const Mat P2 = peirce_projection(e, 2);
    const double rel = (P2 * v.v - v.v).norm() / std::max(1.0, v.v.norm());
    if (rel > 1e-8) throw NotInV2("v2_plus_split: vector not in the 2-eigenspace");
    const Element qv = q_operator(e).apply(v);
    return {0.5 * (v + qv), 0.5 * (v - qv)};
}

double predicted_eigenvalues(const std::vector<double>& lambdas, int j, int k, OpKind which) {
    const int s = static_cast<int>(lambdas.size());
    if (j < 0 || k < j || k > s) throw IndexOutOfRange("predicted_eigenvalues: bad index pair");
    const double lj = j == 0 ? 0.0 : std::abs(lambdas[size_t(j - 1)]);
    const double lk = k == 0 ? 0.0 : std::abs(lambdas[size_t(k - 1)]);
    switch (which) {
        case OpKind::D: return lj * lj + lk * lk;
        case OpKind::QQ: return lj * lj * lk * lk;
        case OpKind::B: return (1.0 - lj * lj) * (1.0 - lk * lk);
        default: return (1.0 + lj * lj) * (1.0 + lk * lk);
    }
}

} // namespace jtlab
