#include "io.hpp"

#include <stdexcept>

namespace pqa::io {

json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const json& j) {
    if (!j.is_string()) throw std::invalid_argument("expected a rational string, got " + j.dump());
    return Rational::parse(j.get<std::string>());
}

json to_json(const Poly& f) {
    json out = json::array();
    for (const auto& c : f.coeffs()) out.push_back(to_json(c));
    return out;
}

Poly poly_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("expected a polynomial array, got " + j.dump());
    std::vector<Rational> c;
    c.reserve(j.size());
    for (const auto& e : j) c.push_back(rational_from_json(e));
    return Poly(std::move(c));
}

json to_json(const Series& s) {
    json coeffs = json::array();
    for (const auto& c : s.coeffs()) coeffs.push_back(to_json(c));
    return {{"order", s.order()}, {"normalization", kSeriesNormalization}, {"coeffs", coeffs}};
}

Series series_from_json(const json& j, ContextPtr ctx) {
    const auto order = j.at("order").get<std::size_t>();
    const json& coeffs = j.at("coeffs");
    if (coeffs.size() != order + 1) throw std::invalid_argument("series: coeffs length must be order + 1");
    std::vector<Poly> c;
    c.reserve(coeffs.size());
    for (const auto& e : coeffs) c.push_back(poly_from_json(e));
    return Series(std::move(ctx), std::move(c));
}

json to_json(const AppellSequence& f) {
    json a = json::array();
    for (const auto& c : f.coefficients()) a.push_back(to_json(c));
    return {{"p", to_json(f.context().p())},
            {"q", to_json(f.context().q())},
            {"order", f.order()},
            {"a", a},
            {"degenerate", f.degenerate()}};
}

AppellSequence appell_from_json(const json& j) {
    auto ctx = make_context(rational_from_json(j.at("p")), rational_from_json(j.at("q")));
    std::vector<Rational> a;
    for (const auto& e : j.at("a")) a.push_back(rational_from_json(e));
    if (a.size() != j.at("order").get<std::size_t>() + 1) {
        throw std::invalid_argument("appell: a length must be order + 1");
    }
    AppellSequence out(std::move(ctx), std::move(a));
    if (j.contains("degenerate") && j.at("degenerate").get<bool>() != out.degenerate()) {
        throw std::invalid_argument("appell: degenerate flag disagrees with a_0");
    }
    return out;
}

json family_table_json(FamilyKind kind, const PQContext& ctx, const std::vector<FamilyRow>& rows) {
    json r = json::array();
    for (const auto& row : rows) r.push_back({{"n", row.n}, {"poly", to_json(row.poly)}});
    return {{"family", std::string(family_name(kind))}, {"p", to_json(ctx.p())}, {"q", to_json(ctx.q())}, {"rows", r}};
}

std::pair<FamilyKind, std::vector<FamilyRow>> family_table_from_json(const json& j) {
    auto kind = parse_family(j.at("family").get<std::string>());
    if (!kind) throw std::invalid_argument("unknown family " + j.at("family").dump());
    std::vector<FamilyRow> rows;
    for (const auto& r : j.at("rows")) rows.push_back({r.at("n").get<std::size_t>(), poly_from_json(r.at("poly"))});
    return {*kind, std::move(rows)};
}

json to_json(const ErrataEntry& e) {
    return {{"theorem", e.theorem},
            {"family", e.family},
            {"context", {{"p", to_json(e.p)}, {"q", to_json(e.q)}}},
            {"n", e.n},
            {"residual", to_json(e.residual)},
            {"zero", e.residual.is_zero()}};
}

ErrataEntry errata_from_json(const json& j) {
    ErrataEntry e;
    e.theorem = j.at("theorem").get<std::string>();
    e.family = j.value("family", std::string{});
    e.p = rational_from_json(j.at("context").at("p"));
    e.q = rational_from_json(j.at("context").at("q"));
    e.n = j.at("n").get<std::size_t>();
    e.residual = poly_from_json(j.at("residual"));
    if (j.at("zero").get<bool>() != e.residual.is_zero()) {
        throw std::invalid_argument("errata: zero flag disagrees with residual");
    }
    return e;
}

}  // namespace pqa::io
