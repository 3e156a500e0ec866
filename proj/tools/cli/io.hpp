#pragma once

// JSON forms of the library types.
//
//   Rational        "num/den" string, integers without "/1"
//   Poly            ["c0", "c1", ...] ascending degree
//   Series          {"order": N, "normalization": "...", "coeffs": [Poly, ...]}
//   AppellSequence  {"p", "q", "order", "a": [Rational], "degenerate"}
//   Family table    {"family", "p", "q", "rows": [{"n", "poly"}]}
//   Errata entry    {"theorem", "family", "context": {"p", "q"}, "n", "residual", "zero"}

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "pqappell/appell.hpp"
#include "pqappell/families.hpp"
#include "pqappell/polynomial.hpp"
#include "pqappell/rational.hpp"
#include "pqappell/series.hpp"

namespace pqa::io {

using nlohmann::json;

inline constexpr const char* kSeriesNormalization = "coefficients of t^n/[n]_{p,q}!";

json to_json(const Rational& r);
Rational rational_from_json(const json& j);

json to_json(const Poly& f);
Poly poly_from_json(const json& j);

json to_json(const Series& s);
/// The context is not part of the series form and must be supplied.
Series series_from_json(const json& j, ContextPtr ctx);

json to_json(const AppellSequence& f);
AppellSequence appell_from_json(const json& j);

struct FamilyRow {
    std::size_t n;
    Poly poly;
};

json family_table_json(FamilyKind kind, const PQContext& ctx, const std::vector<FamilyRow>& rows);
std::pair<FamilyKind, std::vector<FamilyRow>> family_table_from_json(const json& j);

struct ErrataEntry {
    std::string theorem;  // "5.1" | "5.2" | "6.5" | "6.6"
    std::string family;
    Rational p;
    Rational q;
    std::size_t n = 0;
    Poly residual;
};

json to_json(const ErrataEntry& e);
ErrataEntry errata_from_json(const json& j);

}  // namespace pqa::io
