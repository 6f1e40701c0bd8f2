#include <doctest.h>

#include <cmath>

#include "jtlab/bisympl.hpp"
#include "jtlab/forms.hpp"
#include "jtlab/realify.hpp"

using namespace jtlab;

namespace {

double eval_by_matrix(FormKind which, const Element& z, const Element& u, const Element& v) {
    const TwoFormMatrix M = form_matrix(which, z);
    return realify(u.v).dot(M.matrix * realify(v.v));
}

} // namespace

TEST_CASE("flat form closed values") {
    const Descriptor d = Descriptor::type_i(1, 1);
    Element z = Element::zero(d), u = Element::zero(d), v = Element::zero(d);
    u.v(0) = 1.0;
    v.v(0) = Cplx(0.0, 1.0);
    CHECK(omega0(z, u, v) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(omega0(z, v, u) == doctest::Approx(-2.0).epsilon(1e-14));
    CHECK(omega0(z, u, u) == 0.0);

    // omega0(e, ie) = tr D(e,e) = g for any minimal tripotent
    const Descriptor d23 = Descriptor::type_i(2, 3);
    const Element e = Element::basis(d23, 0);
    CHECK(omega0(Element::zero(d23), e, Cplx(0.0, 1.0) * e) ==
          doctest::Approx(5.0).epsilon(1e-14));
}

TEST_CASE("hyperbolic and affine forms on the disc") {
    const Descriptor d = Descriptor::type_i(1, 1);
    Element z = Element::zero(d), u = Element::zero(d), v = Element::zero(d);
    z.v(0) = 0.5;
    u.v(0) = 1.0;
    v.v(0) = Cplx(0.0, 1.0);

    CHECK(omega_minus(z, u, v) == doctest::Approx(2.0 / 0.5625).epsilon(1e-12));
    const Cplx h = metric_h_minus(z, u, u);
    CHECK(h.real() == doctest::Approx(2.0 / 0.5625).epsilon(1e-12));
    CHECK(std::abs(h.imag()) < 1e-14);

    Element one = Element::zero(d);
    one.v(0) = 1.0;
    CHECK(omega_plus(one, u, v) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("metric is hermitian and relates to the hyperbolic form") {
    const Descriptor d = Descriptor::type_i(2, 2);
    const auto zs = sample_domain(d, 41, 3);
    const auto us = sample_domain(d, 43, 3);
    for (const Element& z : zs)
        for (size_t i = 0; i + 1 < us.size(); ++i) {
            const Element &u = us[i], &v = us[i + 1];
            CHECK(std::abs(metric_h_minus(z, u, v) - std::conj(metric_h_minus(z, v, u))) <
                  1e-10);
            CHECK(std::abs(metric_h_minus(z, u, u).imag()) < 1e-12);
            CHECK(omega_minus(z, u, v) ==
                  doctest::Approx(-metric_h_minus(z, u, v).imag()).epsilon(1e-10));
        }
}

TEST_CASE("log det of the bergman operator") {
    const Descriptor d = Descriptor::type_i(1, 1);
    Element z = Element::zero(d);
    z.v(0) = 0.5;
    CHECK(log_det_bergman(z) == doctest::Approx(std::log(0.5625)).epsilon(1e-12));
    CHECK(log_det_bergman(z, true) == doctest::Approx(std::log(1.5625)).epsilon(1e-12));
    CHECK(log_det_bergman(Element::zero(d)) == doctest::Approx(0.0));

    // diag(0.5, 0.3) in I(2,2): eigenvalues 0.5625, 0.8281 and 0.6825 twice
    const Descriptor d22 = Descriptor::type_i(2, 2);
    const Element w = 0.5 * Element::basis(d22, 0) + 0.3 * Element::basis(d22, 3);
    const double expected = std::log(0.5625) + std::log(0.8281) + 2.0 * std::log(0.6825);
    CHECK(log_det_bergman(w) == doctest::Approx(expected).epsilon(1e-12));

    CHECK_THROWS_AS(log_det_bergman(Element::basis(d, 0)), OutsideDomain);
}

TEST_CASE("form matrices") {
    for (const Descriptor& d : {Descriptor::type_i(2, 3), Descriptor::polydisc(3)}) {
        const double g = d.gram_scale();
        const TwoFormMatrix flat = form_matrix(FormKind::flat, Element::zero(d));
        REQUIRE(flat.matrix.rows() == 2 * d.n);
        for (int m = 0; m < d.n; ++m) {
            CHECK(flat.matrix(2 * m, 2 * m + 1) == g);
            CHECK(flat.matrix(2 * m + 1, 2 * m) == -g);
        }
        CHECK((form_matrix(FormKind::hyperbolic, Element::zero(d)).matrix - flat.matrix)
                  .norm() < 1e-12);

        const auto zs = sample_domain(d, 47, 3);
        const auto us = sample_domain(d, 53, 3);
        for (const Element& z : zs) {
            for (FormKind kind :
                 {FormKind::flat, FormKind::hyperbolic, FormKind::fubini_study}) {
                const TwoFormMatrix M = form_matrix(kind, z);
                CHECK((M.matrix + M.matrix.transpose()).norm() < 1e-12);
                CHECK(trace_norm(M.base - z) == 0.0);
            }
            for (size_t i = 0; i + 1 < us.size(); ++i) {
                const Element &u = us[i], &v = us[i + 1];
                CHECK(eval_by_matrix(FormKind::flat, z, u, v) ==
                      doctest::Approx(omega0(z, u, v)).epsilon(1e-10));
                CHECK(eval_by_matrix(FormKind::hyperbolic, z, u, v) ==
                      doctest::Approx(omega_minus(z, u, v)).epsilon(1e-10));
                CHECK(eval_by_matrix(FormKind::fubini_study, z, u, v) ==
                      doctest::Approx(omega_plus(z, u, v)).epsilon(1e-10));
            }
        }
    }
}

TEST_CASE("affine form volume ratio on I(1,2)") {
    // det M_+ / det M_0 = (1 + |z|^2)^{-2(n+1)} with n = 2
    const Descriptor d = Descriptor::type_i(1, 2);
    Element z = Element::zero(d);
    z.v(0) = 0.6;
    z.v(1) = Cplx(0.0, 0.2);
    const double det0 = form_matrix(FormKind::flat, z).matrix.determinant();
    const double detp = form_matrix(FormKind::fubini_study, z).matrix.determinant();
    CHECK(detp / det0 == doctest::Approx(std::pow(1.4, -6.0)).epsilon(1e-10));
}

TEST_CASE("polar tangent split on the disc") {
    const Descriptor d = Descriptor::type_i(1, 1);
    Element z = Element::zero(d), v = Element::zero(d);
    z.v(0) = 0.5;
    v.v(0) = Cplx(0.1, 0.2);
    const PolarTangentData s = polar_tangent_split(z, v, 0.05);
    REQUIRE(s.lambdas.size() == 1);
    CHECK(s.dlambda[0] == doctest::Approx(0.1).epsilon(1e-12));
    CHECK(s.alpha[0] == doctest::Approx(0.4).epsilon(1e-12));
    CHECK(trace_norm(s.v_j0[0]) < 1e-14);
}

TEST_CASE("polar tangent split at a diagonal point") {
    const Descriptor d = Descriptor::type_i(2, 2);
    const Element z = 0.7 * Element::basis(d, 0) + 0.3 * Element::basis(d, 3);
    const PolarTangentData s = polar_tangent_split(z, Element::basis(d, 0), 0.05);
    CHECK(s.dlambda[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(s.alpha[0]) < 1e-12);
    CHECK(std::abs(s.dlambda[1]) < 1e-12);

    // reassembling the split returns the tangent vector
    const Element v = sample_domain(d, 59, 1)[0];
    const PolarTangentData t = polar_tangent_split(z, v, 0.05);
    Element back = Element::zero(d);
    for (int j = 0; j < d.r; ++j) {
        back = back + Cplx(t.dlambda[size_t(j)], t.lambdas[size_t(j)] * t.alpha[size_t(j)]) *
                          t.frame[size_t(j)];
        back = back + t.lambdas[size_t(j)] * t.v_j0[size_t(j)];
        for (int k = 0; k < d.r; ++k)
            if (k != j) back = back + t.lambdas[size_t(j)] * t.v_jk[size_t(j)][size_t(k)];
    }
    CHECK(trace_norm(back - v) < 1e-10);
}

TEST_CASE("polar split rejects degenerate spectra") {
    const Descriptor d = Descriptor::type_i(2, 2);
    const Element v = Element::basis(d, 1);
    const Element tied = 0.5 * (Element::basis(d, 0) + Element::basis(d, 3));
    CHECK_THROWS_AS(polar_tangent_split(tied, v, 0.05), DegenerateSpectrum);
    const Element small = 0.5 * Element::basis(d, 0) + 0.01 * Element::basis(d, 3);
    CHECK_THROWS_AS(polar_tangent_split(small, v, 0.05), DegenerateSpectrum);
}

TEST_CASE("polar evaluation agrees with the matrix evaluation") {
    const Descriptor d = Descriptor::type_i(2, 2);
    const LinearAutomorphism k = LinearAutomorphism::random(d, 61);
    const Element z = k.apply(0.7 * Element::basis(d, 0) + 0.3 * Element::basis(d, 3));
    const auto vs = sample_domain(d, 67, 4);
    for (size_t i = 0; i + 1 < vs.size(); ++i) {
        const Element &v = vs[i], &w = vs[i + 1];
        for (FormKind kind : {FormKind::flat, FormKind::hyperbolic, FormKind::fubini_study}) {
            const double direct = eval_by_matrix(kind, z, v, w);
            const double polar = omega_polar(kind, z, v, w, 0.05);
            CHECK(std::abs(polar - direct) / std::max(1.0, std::abs(direct)) < 1e-8);
        }
    }
}

TEST_CASE("forms reject points outside the bounded domain") {
    const Descriptor d = Descriptor::type_i(1, 2);
    const Element z = Element::basis(d, 0);
    const Element u = Element::basis(d, 1);
    CHECK_THROWS_AS(omega_minus(z, u, u), OutsideDomain);
    CHECK_THROWS_AS(metric_h_minus(z, u, u), OutsideDomain);
    CHECK_THROWS_AS(form_matrix(FormKind::hyperbolic, z), OutsideDomain);
    const Descriptor d22 = Descriptor::type_i(2, 2);
    const Element big = 1.2 * Element::basis(d22, 0) + 0.3 * Element::basis(d22, 3);
    CHECK_THROWS_AS(omega_polar(FormKind::hyperbolic, big, Element::basis(d22, 1),
                                Element::basis(d22, 2), 0.05),
                    OutsideDomain);
}
