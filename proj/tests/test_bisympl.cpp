#include <doctest.h>

#include <cmath>

#include "jtlab/bisympl.hpp"
#include "jtlab/realify.hpp"

using namespace jtlab;

namespace {

Bisymplectomorphism sample_bisympl(const Descriptor& d, std::uint64_t seed) {
    Bisymplectomorphism phi;
    phi.k = LinearAutomorphism::random(d, seed);
    if (d.family == Family::Polydisc) {
        phi.u.resize(size_t(d.r));
        for (int j = 0; j < d.r; ++j)
            phi.u[size_t(j)] = CircleFunction{{0.3 + 0.1 * j, -0.7, 0.2 * j}};
    } else {
        phi.u = {CircleFunction{{0.3, -0.7, 0.2}}};
    }
    return phi;
}

} // namespace

TEST_CASE("circle functions") {
    const CircleFunction u{{1.3, -0.4, 2.0}};
    CHECK(u.eval(0.0) == Cplx(1.0, 0.0));
    for (double t : {0.1, 0.5, 0.93}) CHECK(std::abs(std::abs(u.eval(t)) - 1.0) < 1e-15);
    CHECK(CircleFunction::one().eval(0.7) == Cplx(1.0, 0.0));
}

TEST_CASE("linear automorphisms preserve the triple product") {
    for (const Descriptor& d : {Descriptor::type_i(2, 3), Descriptor::polydisc(3)}) {
        const LinearAutomorphism k = LinearAutomorphism::random(d, 91);
        const auto xs = sample_domain(d, 97, 3);
        CHECK(trace_norm(k.apply(xs[0]) -
                         Element{d, k.matrix() * xs[0].v}) < 1e-13);
        const Element lhs = k.apply(triple_product(xs[0], xs[1], xs[2]));
        const Element rhs = triple_product(k.apply(xs[0]), k.apply(xs[1]), k.apply(xs[2]));
        CHECK(trace_norm(lhs - rhs) < 1e-12);
        CHECK(trace_norm(k.inverse().apply(k.apply(xs[0])) - xs[0]) < 1e-13);
        CHECK((LinearAutomorphism::compose(k, k.inverse()).matrix() -
               Mat::Identity(d.n, d.n))
                  .norm() < 1e-13);
    }
}

TEST_CASE("radial-circular factor on the disc") {
    const Descriptor d = Descriptor::type_i(1, 1);
    Element z = Element::zero(d);
    z.v(0) = 0.5;
    const std::vector<CircleFunction> u = {CircleFunction{{M_PI}}};
    const Element fz = radial_circular_apply(u, z);
    CHECK(std::abs(fz.v(0) - 0.5 * std::polar(1.0, M_PI * 0.25)) < 1e-14);

    // identity circle function fixes every point
    const Element w = sample_domain(d, 101, 1)[0];
    CHECK(trace_norm(radial_circular_apply({CircleFunction::one()}, w) - w) < 1e-13);
}

TEST_CASE("radial-circular factor on diagonal matrices and polydiscs") {
    const Descriptor d = Descriptor::type_i(2, 2);
    const Element z = 0.5 * Element::basis(d, 0) + 0.3 * Element::basis(d, 3);
    const CircleFunction u{{0.9, 1.1}};
    const Element fz = radial_circular_apply({u}, z);
    CHECK(std::abs(fz.v(0) - 0.5 * u.eval(0.25)) < 1e-13);
    CHECK(std::abs(fz.v(3) - 0.3 * u.eval(0.09)) < 1e-13);

    const Descriptor pd = Descriptor::polydisc(2);
    Element y = Element::zero(pd);
    y.v(0) = Cplx(0.2, 0.3);
    y.v(1) = Cplx(-0.4, 0.1);
    const CircleFunction u0{{1.0}}, u1{{-2.0, 0.5}};
    const Element fy = radial_circular_apply({u0, u1}, y);
    CHECK(std::abs(fy.v(0) - u0.eval(0.13) * y.v(0)) < 1e-15);
    CHECK(std::abs(fy.v(1) - u1.eval(0.17) * y.v(1)) < 1e-15);
}

TEST_CASE("radial-circular factor input validation") {
    const Descriptor d = Descriptor::type_i(1, 2);
    CHECK_THROWS_AS(radial_circular_apply({CircleFunction::one()}, Element::basis(d, 0)),
                    OutsideDomain);
    CHECK_THROWS_AS(
        radial_circular_apply({CircleFunction::one(), CircleFunction::one()},
                              0.5 * Element::basis(d, 0)),
        BadInput);
    const Descriptor pd = Descriptor::polydisc(3);
    CHECK_THROWS_AS(radial_circular_apply({CircleFunction::one()}, 0.5 * Element::basis(pd, 0)),
                    BadInput);
}

TEST_CASE("composition and inversion act pointwise") {
    for (const Descriptor& d : {Descriptor::type_i(2, 2), Descriptor::polydisc(3)}) {
        const Bisymplectomorphism a = sample_bisympl(d, 5);
        const Bisymplectomorphism b = sample_bisympl(d, 6);
        const Bisymplectomorphism ab = compose(a, b);
        for (const Element& z : sample_domain(d, 103, 4)) {
            CHECK(trace_norm(apply_bisympl(ab, z) - apply_bisympl(a, apply_bisympl(b, z))) <
                  1e-12);
            CHECK(trace_norm(apply_bisympl(compose(a, inverse(a)), z) - z) < 1e-10);
            CHECK(trace_norm(apply_bisympl(inverse(a), apply_bisympl(a, z)) - z) < 1e-10);
        }

        // identity composes neutrally
        const Bisymplectomorphism e = identity_bisympl(d);
        for (const Element& z : sample_domain(d, 107, 2))
            CHECK(trace_norm(apply_bisympl(compose(a, e), z) - apply_bisympl(a, z)) < 1e-12);
    }
}

TEST_CASE("inverse cancels exactly at the representation level") {
    const Descriptor d = Descriptor::type_i(2, 3);
    const Bisymplectomorphism a = sample_bisympl(d, 9);
    const Bisymplectomorphism ai = compose(a, inverse(a));
    for (double c : ai.u[0].coeffs) CHECK(c == 0.0);
    CHECK((ai.k.U - Mat::Identity(d.p, d.p)).norm() < 1e-13);
    CHECK((ai.k.W - Mat::Identity(d.q, d.q)).norm() < 1e-13);

    // purely radial factors commute
    const Descriptor dd = Descriptor::type_i(1, 1);
    Bisymplectomorphism ra = identity_bisympl(dd), rb = identity_bisympl(dd);
    ra.u = {CircleFunction{{0.4, 0.0, 1.0}}};
    rb.u = {CircleFunction{{-0.2, 0.7}}};
    const Bisymplectomorphism lhs = compose(ra, rb), rhs = compose(rb, ra);
    REQUIRE(lhs.u[0].coeffs.size() == rhs.u[0].coeffs.size());
    for (size_t i = 0; i < lhs.u[0].coeffs.size(); ++i)
        CHECK(lhs.u[0].coeffs[i] == rhs.u[0].coeffs[i]);
}

TEST_CASE("intertwining residual distinguishes members from non-members") {
    const Descriptor d = Descriptor::type_i(1, 1);
    Element z = Element::zero(d);
    z.v(0) = 0.5;

    CHECK(check_intertwining(identity_map(d), z, 1e-5) < 1e-9);

    const Bisymplectomorphism phi = sample_bisympl(d, 13);
    CHECK(check_intertwining(bisympl_map(phi), z, 1e-5) < 1e-5);

    // z -> z/2 scales the two sides differently; frozen value 0.158203125 * sqrt(2)
    const double res = check_intertwining(scaling_map(d, 0.5), z, 1e-5);
    CHECK(res == doctest::Approx(0.158203125 * std::sqrt(2.0)).epsilon(1e-4));
    CHECK(res > 0.1);

    const Descriptor pd = Descriptor::polydisc(2);
    Element y = Element::zero(pd);
    y.v(0) = 0.5;
    y.v(1) = 0.3;
    CHECK(check_intertwining(polydisc_mixing_map(pd), y, 1e-5) > 0.01);
    CHECK_THROWS_AS(polydisc_mixing_map(Descriptor::polydisc(1)), BadInput);
}

TEST_CASE("differential at the origin") {
    const Descriptor d = Descriptor::type_i(2, 2);

    Bisymplectomorphism radial = identity_bisympl(d);
    radial.u = {CircleFunction{{1.7, -0.3}}};
    const OriginDifferential pure = differential_at_origin(bisympl_map(radial), 1e-5);
    CHECK((pure.jacobian - Eigen::MatrixXd::Identity(2 * d.n, 2 * d.n)).cwiseAbs().maxCoeff() <
          1e-7);
    CHECK(pure.is_in_K);

    const Bisymplectomorphism phi = sample_bisympl(d, 21);
    const OriginDifferential od = differential_at_origin(bisympl_map(phi), 1e-5);
    CHECK((od.jacobian - realify_linear(phi.k.matrix())).cwiseAbs().maxCoeff() < 1e-7);
    CHECK(od.is_in_K);

    // complex-linear but not triple-preserving
    const OriginDifferential sc = differential_at_origin(scaling_map(d, 0.5), 1e-5);
    CHECK_FALSE(sc.is_in_K);
}

TEST_CASE("orbit and polydisc invariance") {
    const Descriptor d = Descriptor::type_i(2, 2);
    const Bisymplectomorphism phi = sample_bisympl(d, 33);
    for (const Element& z : sample_domain(d, 109, 3)) {
        const OrbitChecks oc = orbit_and_polydisc_checks(phi, z, 1e-5);
        CHECK(oc.spectra_residual < 1e-9);
        CHECK(oc.radiality_residual < 1e-8);
        CHECK(oc.vz_residual < 1e-6);
    }
    CHECK_THROWS_AS(orbit_and_polydisc_checks(phi, Element::zero(d), 1e-5), BadInput);
}

TEST_CASE("moebius transport preserves only the hyperbolic form") {
    const Descriptor d = Descriptor::type_i(1, 1);
    const SmoothMap m = moebius_disc_map(0.3);
    for (const Element& z : sample_domain(d, 113, 4)) {
        const TwoFormMatrix P = pullback_two_form(m, FormKind::hyperbolic, z, 1e-5);
        const TwoFormMatrix T = form_matrix(FormKind::hyperbolic, z);
        CHECK(form_matrix_residual(P.matrix, T.matrix) < 1e-6);
    }
    const Element zero = Element::zero(d);
    const TwoFormMatrix Pf = pullback_two_form(m, FormKind::flat, zero, 1e-5);
    const TwoFormMatrix Tf = form_matrix(FormKind::flat, zero);
    CHECK(form_matrix_residual(Pf.matrix, Tf.matrix) ==
          doctest::Approx(0.1719).epsilon(1e-3));
}
