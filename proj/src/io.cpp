#include "jtlab/io.hpp"

#include <cmath>
#include <fstream>

namespace jtlab {

namespace {

Json complex_to_json(const Cplx& c) { return Json::array({c.real(), c.imag()}); }

Cplx complex_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw BadInput("expected [re, im] pair");
    const double re = j[0].get<double>(), im = j[1].get<double>();
    if (!std::isfinite(re) || !std::isfinite(im)) throw BadInput("non-finite entry");
    return {re, im};
}

Mat complex_matrix_from_json(const Json& j, int rows, int cols, const char* what) {
    if (!j.is_array() || int(j.size()) != rows)
        throw BadInput(std::string(what) + ": wrong row count");
    Mat M(rows, cols);
    for (int i = 0; i < rows; ++i) {
        if (!j[size_t(i)].is_array() || int(j[size_t(i)].size()) != cols)
            throw BadInput(std::string(what) + ": wrong column count");
        for (int k = 0; k < cols; ++k) M(i, k) = complex_from_json(j[size_t(i)][size_t(k)]);
    }
    return M;
}

Json complex_matrix_to_json(const Mat& M) {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < M.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index k = 0; k < M.cols(); ++k) row.push_back(complex_to_json(M(i, k)));
        rows.push_back(std::move(row));
    }
    return rows;
}

int int_from_json(const Json& j, const char* what) {
    if (!j.is_number_integer()) throw BadInput(std::string(what) + ": expected an integer");
    return j.get<int>();
}

std::vector<double> coeffs_from_json(const Json& j, const char* what) {
    if (!j.is_array()) throw BadInput(std::string(what) + ": expected an array");
    std::vector<double> out;
    for (const auto& x : j) {
        if (!x.is_number()) throw BadInput(std::string(what) + ": expected numbers");
        const double v = x.get<double>();
        if (!std::isfinite(v)) throw BadInput(std::string(what) + ": non-finite entry");
        out.push_back(v);
    }
    return out;
}

} // namespace

Json descriptor_to_json(const Descriptor& d) {
    Json j;
    if (d.family == Family::TypeI) {
        j["family"] = "typeI";
        j["p"] = d.p;
        j["q"] = d.q;
    } else {
        j["family"] = "polydisc";
        j["r"] = d.r;
    }
    return j;
}

Descriptor descriptor_from_json(const Json& j) {
    if (!j.contains("family") || !j["family"].is_string())
        throw BadInput("descriptor: missing family");
    const std::string fam = j["family"].get<std::string>();
    if (fam == "typeI") {
        if (!j.contains("p") || !j.contains("q")) throw BadInput("descriptor: typeI needs p, q");
        return Descriptor::type_i(int_from_json(j["p"], "descriptor p"),
                                  int_from_json(j["q"], "descriptor q"));
    }
    if (fam == "polydisc") {
        if (!j.contains("r")) throw BadInput("descriptor: polydisc needs r");
        return Descriptor::polydisc(int_from_json(j["r"], "descriptor r"));
    }
    throw BadInput("descriptor: unknown family '" + fam + "'");
}

Json element_to_json(const Element& z) {
    Json j = descriptor_to_json(z.desc);
    if (z.desc.family == Family::TypeI) {
        Json rows = Json::array();
        for (int i = 0; i < z.desc.p; ++i) {
            Json row = Json::array();
            for (int k = 0; k < z.desc.q; ++k)
                row.push_back(complex_to_json(z.v(i * z.desc.q + k)));
            rows.push_back(std::move(row));
        }
        j["coords"] = std::move(rows);
    } else {
        Json row = Json::array();
        for (int k = 0; k < z.desc.r; ++k) row.push_back(complex_to_json(z.v(k)));
        j["coords"] = std::move(row);
    }
    return j;
}

Element element_from_json(const Json& j) {
    const Descriptor d = descriptor_from_json(j);
    if (!j.contains("coords")) throw BadInput("element: missing coords");
    const Json& c = j["coords"];
    Element z = Element::zero(d);
    if (d.family == Family::TypeI) {
        if (!c.is_array() || int(c.size()) != d.p) throw BadInput("element: wrong row count");
        for (int i = 0; i < d.p; ++i) {
            if (!c[size_t(i)].is_array() || int(c[size_t(i)].size()) != d.q)
                throw BadInput("element: wrong column count");
            for (int k = 0; k < d.q; ++k)
                z.v(i * d.q + k) = complex_from_json(c[size_t(i)][size_t(k)]);
        }
    } else {
        if (!c.is_array() || int(c.size()) != d.r) throw BadInput("element: wrong length");
        for (int k = 0; k < d.r; ++k) z.v(k) = complex_from_json(c[size_t(k)]);
    }
    return z;
}

Json two_form_to_json(const TwoFormMatrix& f) {
    Json j;
    j["base"] = element_to_json(f.base);
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < f.matrix.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index k = 0; k < f.matrix.cols(); ++k) row.push_back(f.matrix(i, k));
        rows.push_back(std::move(row));
    }
    j["matrix"] = std::move(rows);
    return j;
}

TwoFormMatrix two_form_from_json(const Json& j) {
    if (!j.contains("base") || !j.contains("matrix")) throw BadInput("two-form: missing fields");
    TwoFormMatrix out{element_from_json(j["base"]), {}};
    const Json& m = j["matrix"];
    const int dim = 2 * out.base.desc.n;
    if (!m.is_array() || int(m.size()) != dim) throw BadInput("two-form: wrong matrix size");
    out.matrix.resize(dim, dim);
    for (int i = 0; i < dim; ++i) {
        if (!m[size_t(i)].is_array() || int(m[size_t(i)].size()) != dim)
            throw BadInput("two-form: wrong matrix size");
        for (int k = 0; k < dim; ++k) {
            if (!m[size_t(i)][size_t(k)].is_number()) throw BadInput("two-form: bad entry");
            out.matrix(i, k) = m[size_t(i)][size_t(k)].get<double>();
        }
    }
    return out;
}

Json bisympl_to_json(const Bisymplectomorphism& phi) {
    Json j;
    Json k = descriptor_to_json(phi.k.desc);
    if (phi.k.desc.family == Family::TypeI) {
        k["U"] = complex_matrix_to_json(phi.k.U);
        k["W"] = complex_matrix_to_json(phi.k.W);
        j["k"] = std::move(k);
        j["u"] = Json{{"coeffs", phi.u[0].coeffs}};
    } else {
        k["perm"] = phi.k.perm;
        Json ph = Json::array();
        for (const auto& c : phi.k.phases) ph.push_back(complex_to_json(c));
        k["phases"] = std::move(ph);
        j["k"] = std::move(k);
        Json per = Json::array();
        for (const auto& u : phi.u) per.push_back(Json{{"coeffs", u.coeffs}});
        j["u"] = Json{{"per_component", std::move(per)}};
    }
    return j;
}

Bisymplectomorphism bisympl_from_json(const Json& j) {
    if (!j.contains("k") || !j.contains("u")) throw BadInput("bisympl: missing fields");
    const Descriptor d = descriptor_from_json(j["k"]);
    Bisymplectomorphism phi;
    phi.k.desc = d;
    if (d.family == Family::TypeI) {
        if (!j["k"].contains("U") || !j["k"].contains("W")) throw BadInput("bisympl: missing U/W");
        phi.k.U = complex_matrix_from_json(j["k"]["U"], d.p, d.p, "bisympl U");
        phi.k.W = complex_matrix_from_json(j["k"]["W"], d.q, d.q, "bisympl W");
        if (!j["u"].is_object() || !j["u"].contains("coeffs"))
            throw BadInput("bisympl: missing u coeffs");
        phi.u.resize(1);
        phi.u[0].coeffs = coeffs_from_json(j["u"]["coeffs"], "bisympl u coeffs");
    } else {
        if (!j["k"].contains("perm") || !j["k"].contains("phases"))
            throw BadInput("bisympl: missing perm/phases");
        const Json& pj = j["k"]["perm"];
        if (!pj.is_array() || int(pj.size()) != d.r) throw BadInput("bisympl: perm size mismatch");
        for (const auto& x : pj) phi.k.perm.push_back(int_from_json(x, "bisympl perm"));
        std::vector<bool> seen(size_t(d.r), false);
        for (int x : phi.k.perm) {
            if (x < 0 || x >= d.r || seen[size_t(x)]) throw BadInput("bisympl: invalid perm");
            seen[size_t(x)] = true;
        }
        const Json& ph = j["k"]["phases"];
        if (!ph.is_array() || int(ph.size()) != d.r) throw BadInput("bisympl: phases size");
        for (const auto& c : ph) phi.k.phases.push_back(complex_from_json(c));
        if (!j["u"].is_object() || !j["u"].contains("per_component"))
            throw BadInput("bisympl: missing per_component");
        const Json& per = j["u"]["per_component"];
        if (!per.is_array() || int(per.size()) != d.r) throw BadInput("bisympl: u size mismatch");
        for (const auto& u : per) {
            if (!u.is_object() || !u.contains("coeffs"))
                throw BadInput("bisympl: per-component entry needs coeffs");
            CircleFunction cf;
            cf.coeffs = coeffs_from_json(u["coeffs"], "bisympl u coeffs");
            phi.u.push_back(std::move(cf));
        }
    }
    return phi;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw BadInput("cannot open " + path);
    Json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw BadInput("parse error in " + path + ": " + e.what());
    }
    return j;
}

void save_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw BadInput("cannot write " + path);
    out << j.dump(2) << "\n";
}

} // namespace jtlab
