// Copyright 2026 The fockhrt Authors
// SPDX-License-Identifier: Apache-2.0

#include "fockhrt/json_io.hpp"

#include <cmath>
#include <limits>

#include "fockhrt/error.hpp"

namespace fockhrt::io {

namespace {

template <typename T>
T field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) {
        throw invalid_argument(std::string("missing field '") + key + "'");
    }
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw invalid_argument(std::string("field '") + key + "': " + e.what());
    }
}

const json& array_field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key) || !j.at(key).is_array()) {
        throw invalid_argument(std::string("missing array field '") + key + "'");
    }
    return j.at(key);
}

json number_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

double number_from(const json& j) {
    if (j.is_null()) return std::numeric_limits<double>::infinity();
    if (!j.is_number()) throw invalid_argument("expected a number");
    return j.get<double>();
}

std::vector<exact::Rational> rationals_from(const json& j) {
    if (!j.is_array()) throw invalid_argument("expected an array of rationals");
    std::vector<exact::Rational> out;
    for (const auto& q : j) out.push_back(rational_from_json(q));
    return out;
}

json rationals_to(const std::vector<exact::Rational>& qs) {
    json a = json::array();
    for (const auto& q : qs) a.push_back(rational_to_json(q));
    return a;
}

}  // namespace

json complex_to_json(cplx z) { return json::array({z.real(), z.imag()}); }

cplx complex_from_json(const json& j) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw invalid_argument("complex numbers are [re, im]");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

json integer_to_json(const exact::Integer& z) {
    if (z.fits_slong_p()) return json(z.get_si());
    return json(z.get_str());
}

exact::Integer integer_from_json(const json& j) {
    if (j.is_number_integer()) return exact::Integer(j.get<long>());
    if (j.is_string()) {
        exact::Integer z;
        if (z.set_str(j.get<std::string>(), 10) != 0) throw invalid_argument("malformed integer string");
        return z;
    }
    throw invalid_argument("integers are JSON integers or decimal strings");
}

json rational_to_json(const exact::Rational& q) {
    return json::array({integer_to_json(q.get_num()), integer_to_json(q.get_den())});
}

exact::Rational rational_from_json(const json& j) {
    if (j.is_number_integer() || j.is_string()) return exact::Rational(integer_from_json(j));
    if (!j.is_array() || j.size() != 2) throw invalid_argument("rationals are [num, den]");
    const exact::Integer den = integer_from_json(j[1]);
    if (den == 0) throw invalid_argument("rational with zero denominator");
    exact::Rational q(integer_from_json(j[0]), den);
    q.canonicalize();
    return q;
}

json cyclo_to_json(const exact::CycloElement& e) {
    return {{"conductor", e.conductor()}, {"coeffs", rationals_to(e.coeffs())}};
}

exact::CycloElement cyclo_from_json(const json& j) {
    return exact::CycloElement(field<int>(j, "conductor"), rationals_from(array_field(j, "coeffs")));
}

json fock_to_json(const FockVector& f) {
    json a = json::array();
    for (const auto& c : f.coeffs()) a.push_back(complex_to_json(c));
    return a;
}

FockVector fock_from_json(const json& j) {
    if (!j.is_array()) throw invalid_argument("coefficient vectors are arrays of [re, im]");
    std::vector<cplx> c;
    for (const auto& z : j) c.push_back(complex_from_json(z));
    return FockVector(std::move(c));
}

json hrt_input_to_json(const HrtInput& in) {
    json j;
    json pts = json::array();
    for (const auto& p : in.config.points) pts.push_back(complex_to_json(p));
    j["points"] = pts;
    if (in.config.exact) {
        json coeffs = json::array();
        for (const auto& e : *in.config.exact) coeffs.push_back(rationals_to(e.coeffs()));
        j["exact"] = {{"conductor", in.config.exact->front().conductor()}, {"coeffs", coeffs}};
    }
    const FockVector g = gaussian_window(in.window.trunc_dim());
    j["window"] = in.window == g ? json("gaussian") : fock_to_json(in.window);
    j["M"] = in.M;
    return j;
}

HrtInput hrt_input_from_json(const json& j) {
    HrtInput in;
    in.M = j.contains("M") ? field<std::size_t>(j, "M") : kDefaultTruncation;
    for (const auto& p : array_field(j, "points")) in.config.points.push_back(complex_from_json(p));
    if (j.contains("exact") && !j.at("exact").is_null()) {
        const json& ex = j.at("exact");
        const int n = field<int>(ex, "conductor");
        in.config.exact.emplace();
        for (const auto& c : array_field(ex, "coeffs")) {
            in.config.exact->push_back(exact::CycloElement::from_power_sum(n, rationals_from(c)));
        }
    }
    if (!j.contains("window") || (j.at("window").is_string() && j.at("window") == "gaussian")) {
        in.window = gaussian_window(in.M);
    } else if (j.at("window").is_array()) {
        in.window = fock_from_json(j.at("window"));
    } else {
        throw invalid_argument("window must be \"gaussian\" or a coefficient array");
    }
    return in;
}

json certificate_to_json(const Certificate& c) {
    json gram = json::array();
    for (Eigen::Index r = 0; r < c.gram.rows(); ++r) {
        json row = json::array();
        for (Eigen::Index k = 0; k < c.gram.cols(); ++k) row.push_back(complex_to_json(c.gram(r, k)));
        gram.push_back(row);
    }
    json j = {{"gram", gram},
              {"min_eigenvalue", c.min_eigenvalue},
              {"condition_number", number_or_null(c.condition_number)},
              {"tail_slack", c.tail_slack}};
    j["verdict"] = c.verdict ? json(to_string(*c.verdict)) : json(nullptr);
    return j;
}

Certificate certificate_from_json(const json& j) {
    Certificate c;
    const json& gram = array_field(j, "gram");
    const auto n = static_cast<Eigen::Index>(gram.size());
    c.gram.resize(n, n);
    for (Eigen::Index r = 0; r < n; ++r) {
        if (!gram[r].is_array() || static_cast<Eigen::Index>(gram[r].size()) != n) {
            throw invalid_argument("Gram matrix must be square");
        }
        for (Eigen::Index k = 0; k < n; ++k) c.gram(r, k) = complex_from_json(gram[r][k]);
    }
    c.min_eigenvalue = field<double>(j, "min_eigenvalue");
    c.condition_number = number_from(j.at("condition_number"));
    c.tail_slack = field<double>(j, "tail_slack");
    if (j.contains("verdict") && !j.at("verdict").is_null()) {
        c.verdict = verdict_from_string(j.at("verdict").get<std::string>());
    }
    return c;
}

json membership_to_json(const exact::MembershipResult& r) {
    json j = {{"embeddable", r.embeddable},
              {"rank_certificate", r.rank_certificate},
              {"collinear_incommensurable", r.collinear_incommensurable}};
    if (r.witness) {
        j["witness"] = {{"e1", cyclo_to_json(r.witness->e1)},
                        {"e2", cyclo_to_json(r.witness->e2)},
                        {"offset", cyclo_to_json(r.witness->offset)}};
        json coords = json::array();
        for (const auto& [m, n] : r.coordinates) {
            coords.push_back(json::array({integer_to_json(m), integer_to_json(n)}));
        }
        j["coordinates"] = coords;
    } else {
        j["witness"] = nullptr;
        j["coordinates"] = json::array();
    }
    return j;
}

exact::MembershipResult membership_from_json(const json& j) {
    exact::MembershipResult r;
    r.embeddable = field<bool>(j, "embeddable");
    r.rank_certificate = field<std::size_t>(j, "rank_certificate");
    r.collinear_incommensurable = field<bool>(j, "collinear_incommensurable");
    if (j.contains("witness") && !j.at("witness").is_null()) {
        const json& w = j.at("witness");
        r.witness = exact::LatticeBasis{cyclo_from_json(w.at("e1")), cyclo_from_json(w.at("e2")),
                                        cyclo_from_json(w.at("offset"))};
    }
    for (const auto& c : array_field(j, "coordinates")) {
        if (!c.is_array() || c.size() != 2) throw invalid_argument("coordinates are [m, n]");
        r.coordinates.emplace_back(integer_from_json(c[0]), integer_from_json(c[1]));
    }
    return r;
}

json problem_to_json(const DeepZeroProblem& p) {
    return {{"d", p.d}, {"beta", complex_to_json(p.beta)}, {"M", p.M}, {"guard", p.guard}};
}

DeepZeroProblem problem_from_json(const json& j) {
    DeepZeroProblem p;
    p.d = field<int>(j, "d");
    p.beta = j.contains("beta") ? complex_from_json(j.at("beta")) : cplx{1.0, 0.0};
    p.M = j.contains("M") ? field<std::size_t>(j, "M") : kDefaultTruncation;
    p.guard = j.contains("guard") ? field<std::size_t>(j, "guard") : deep_zero_default_guard(p.beta, p.M);
    p.validate();
    return p;
}

json deep_zero_row_to_json(const DeepZeroRow& r) {
    json j = problem_to_json(r.problem);
    j["sigma_min"] = r.sigma_min;
    j["label"] = r.label;
    return j;
}

DeepZeroRow deep_zero_row_from_json(const json& j) {
    return {problem_from_json(j), field<double>(j, "sigma_min"), field<std::string>(j, "label")};
}

json signal_to_json(const SampledSignal& s) {
    json values = json::array();
    for (const auto& v : s.values()) values.push_back(complex_to_json(v));
    return {{"grid", s.grid()}, {"values", values}, {"weights", s.weights()}};
}

SampledSignal signal_from_json(const json& j) {
    if (j.is_object() && j.contains("atom")) {
        const json& a = j.at("atom");
        return atom_signal({field<double>(a, "a"), field<double>(a, "b")}, normalized_gaussian,
                           default_rule());
    }
    const auto grid = field<std::vector<double>>(j, "grid");
    std::vector<cplx> values;
    for (const auto& v : array_field(j, "values")) values.push_back(complex_from_json(v));
    if (j.contains("weights")) {
        return SampledSignal(grid, std::move(values), field<std::vector<double>>(j, "weights"));
    }
    return SampledSignal(grid, std::move(values));
}

}  // namespace fockhrt::io
