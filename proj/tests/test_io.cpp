#include <doctest.h>

#include <cstdio>
#include <limits>
#include <string>

#include "jtlab/io.hpp"
#include "jtlab/spectral.hpp"

using namespace jtlab;

TEST_CASE("descriptor json round trip") {
    for (const Descriptor& d : {Descriptor::type_i(2, 3), Descriptor::polydisc(4)}) {
        const Descriptor back = descriptor_from_json(descriptor_to_json(d));
        CHECK(back == d);
    }
    CHECK(descriptor_to_json(Descriptor::type_i(1, 2))["family"] == "typeI");
    CHECK_THROWS_AS(descriptor_from_json(Json{{"family", "exceptional"}}), BadInput);
    CHECK_THROWS_AS(descriptor_from_json(Json{{"family", "typeI"}, {"p", 1}}), BadInput);
    CHECK_THROWS_AS(descriptor_from_json(Json{{"p", 1}, {"q", 2}}), BadInput);
    CHECK_THROWS_AS(descriptor_from_json(Json{{"family", "typeI"}, {"p", "x"}, {"q", 2}}),
                    BadInput);
    CHECK_THROWS_AS(descriptor_from_json(Json{{"family", "typeI"}, {"p", 3}, {"q", 2}}),
                    BadInput);
}

TEST_CASE("element json round trip is bit exact") {
    for (const Descriptor& d : {Descriptor::type_i(2, 3), Descriptor::polydisc(3)}) {
        for (const Element& z : sample_domain(d, 127, 3)) {
            const Element back = element_from_json(element_to_json(z));
            CHECK(back.desc == d);
            CHECK((back.v - z.v).norm() == 0.0);
        }
    }
}

TEST_CASE("element json accepts hand-written input") {
    const Json j = Json::parse(R"({
        "family": "typeI", "p": 1, "q": 2,
        "coords": [[[0.5, 0.0], [0.0, -0.25]]]
    })");
    const Element z = element_from_json(j);
    CHECK(z.desc == Descriptor::type_i(1, 2));
    CHECK(z.v(0) == Cplx(0.5, 0.0));
    CHECK(z.v(1) == Cplx(0.0, -0.25));

    const Json p = Json::parse(R"({"family": "polydisc", "r": 2, "coords": [[1.0, 0.0], [0.0, 0.5]]})");
    const Element y = element_from_json(p);
    CHECK(y.v(0) == Cplx(1.0, 0.0));
    CHECK(y.v(1) == Cplx(0.0, 0.5));
}

TEST_CASE("element json rejects malformed input") {
    const Descriptor d = Descriptor::type_i(1, 2);
    Json good = element_to_json(Element::basis(d, 0));

    Json missing = good;
    missing.erase("coords");
    CHECK_THROWS_AS(element_from_json(missing), BadInput);

    Json short_row = good;
    short_row["coords"][0].erase(1);
    CHECK_THROWS_AS(element_from_json(short_row), BadInput);

    Json extra_row = good;
    extra_row["coords"].push_back(Json::array({Json::array({0.0, 0.0})}));
    CHECK_THROWS_AS(element_from_json(extra_row), BadInput);

    Json bad_pair = good;
    bad_pair["coords"][0][0] = Json::array({1.0});
    CHECK_THROWS_AS(element_from_json(bad_pair), BadInput);

    Json text_entry = good;
    text_entry["coords"][0][0] = Json::array({"a", 0.0});
    CHECK_THROWS_AS(element_from_json(text_entry), BadInput);

    Json infinite = Json::parse(R"({"family":"polydisc","r":1,"coords":[[1.0,0.0]]})");
    infinite["coords"][0][0] = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(element_from_json(infinite), BadInput);
}

TEST_CASE("two-form json round trip") {
    const Descriptor d = Descriptor::type_i(1, 2);
    const Element z = 0.5 * Element::basis(d, 0);
    const TwoFormMatrix M = form_matrix(FormKind::hyperbolic, z);
    const TwoFormMatrix back = two_form_from_json(two_form_to_json(M));
    CHECK((back.matrix - M.matrix).norm() == 0.0);
    CHECK((back.base.v - z.v).norm() == 0.0);

    Json j = two_form_to_json(M);
    j["matrix"].erase(0);
    CHECK_THROWS_AS(two_form_from_json(j), BadInput);
}

TEST_CASE("bisymplectomorphism json round trip") {
    const Descriptor d = Descriptor::type_i(2, 2);
    Bisymplectomorphism phi;
    phi.k = LinearAutomorphism::random(d, 131);
    phi.u = {CircleFunction{{0.25, -1.5}}};
    const Bisymplectomorphism back = bisympl_from_json(bisympl_to_json(phi));
    const Element z = sample_domain(d, 137, 1)[0];
    CHECK((back.k.U - phi.k.U).norm() == 0.0);
    CHECK((back.k.W - phi.k.W).norm() == 0.0);
    CHECK(back.u[0].coeffs == phi.u[0].coeffs);
    CHECK(trace_norm(apply_bisympl(back, z) - apply_bisympl(phi, z)) == 0.0);

    const Descriptor pd = Descriptor::polydisc(3);
    Bisymplectomorphism psi;
    psi.k = LinearAutomorphism::random(pd, 139);
    psi.u = {CircleFunction{{1.0}}, CircleFunction{{0.0, 2.0}}, CircleFunction::one()};
    const Bisymplectomorphism pback = bisympl_from_json(bisympl_to_json(psi));
    CHECK(pback.k.perm == psi.k.perm);
    const Element y = sample_domain(pd, 149, 1)[0];
    CHECK(trace_norm(apply_bisympl(pback, y) - apply_bisympl(psi, y)) == 0.0);

    // permutations are validated
    Json bad = bisympl_to_json(psi);
    bad["k"]["perm"] = Json::array({0, 0, 2});
    CHECK_THROWS_AS(bisympl_from_json(bad), BadInput);
    bad["k"]["perm"] = Json::array({0, 1, 3});
    CHECK_THROWS_AS(bisympl_from_json(bad), BadInput);

    Json nocoeffs = bisympl_to_json(psi);
    nocoeffs["u"]["per_component"][1] = Json::object();
    CHECK_THROWS_AS(bisympl_from_json(nocoeffs), BadInput);
}

TEST_CASE("json files round trip") {
    const std::string path = "io_test_tmp.json";
    const Descriptor d = Descriptor::polydisc(2);
    const Element z = sample_domain(d, 151, 1)[0];
    save_json_file(path, element_to_json(z));
    const Element back = element_from_json(load_json_file(path));
    CHECK((back.v - z.v).norm() == 0.0);
    std::remove(path.c_str());

    CHECK_THROWS_AS(load_json_file("does_not_exist.json"), BadInput);

    const std::string broken = "io_test_broken.json";
    save_json_file(broken, Json{{"x", 1}});
    {
        FILE* f = std::fopen(broken.c_str(), "w");
        REQUIRE(f != nullptr);
        std::fputs("{ not json", f);
        std::fclose(f);
    }
    CHECK_THROWS_AS(load_json_file(broken), BadInput);
    std::remove(broken.c_str());
}
