#pragma once

// Glue between the library types and the oracle's plain mpq vectors.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "oracle/brute_force.hpp"
#include "pqappell/families.hpp"
#include "pqappell/polynomial.hpp"
#include "pqappell/pq_core.hpp"
#include "pqappell/rational.hpp"

namespace support {

inline oracle::Vec to_vec(const pqa::Poly& f) {
    oracle::Vec v;
    for (const auto& c : f.coeffs()) v.push_back(c.raw());
    return v;
}

inline pqa::Poly to_poly(const oracle::Vec& v) {
    std::vector<pqa::Rational> c;
    for (const auto& x : v) c.emplace_back(x);
    return pqa::Poly(std::move(c));
}

inline oracle::Ctx to_ctx(const pqa::PQContext& c) { return {c.p().raw(), c.q().raw()}; }

inline oracle::Fam to_fam(pqa::FamilyKind k) {
    switch (k) {
        case pqa::FamilyKind::Bernoulli: return oracle::Fam::bernoulli;
        case pqa::FamilyKind::Euler: return oracle::Fam::euler;
        case pqa::FamilyKind::Genocchi: return oracle::Fam::genocchi;
        case pqa::FamilyKind::Hermite: return oracle::Fam::hermite;
    }
    return oracle::Fam::bernoulli;
}

inline pqa::Rational R(const char* s) { return pqa::Rational::parse(s); }

/// Small random rationals a/b with |a| <= 9, 1 <= b <= 9.
class RandomRationals {
public:
    explicit RandomRationals(std::uint64_t seed) : gen_(seed) {}

    pqa::Rational next(bool nonzero = false) {
        for (;;) {
            const long a = static_cast<long>(gen_() % 19) - 9;
            const long b = static_cast<long>(gen_() % 9) + 1;
            if (nonzero && a == 0) continue;
            return pqa::Rational(a, b);
        }
    }

    std::vector<pqa::Rational> vec(std::size_t n, bool first_nonzero = false) {
        std::vector<pqa::Rational> v;
        for (std::size_t i = 0; i < n; ++i) v.push_back(next(first_nonzero && i == 0));
        return v;
    }

    pqa::Poly poly(std::size_t max_degree) { return pqa::Poly(vec(max_degree + 1)); }

private:
    std::mt19937_64 gen_;
};

/// Contexts used by the property tests: generic, p = 1, classical, and
/// negative parameters.
using PQParam = std::pair<const char*, const char*>;

inline std::vector<PQParam> sample_points() {
    return {{"2", "1"}, {"3/2", "1/2"}, {"1", "1/2"}, {"1", "1"}, {"5/3", "-2/7"}, {"-1/2", "3"}};
}

/// gtest parameter name for a (p,q) pair, e.g. "p5over3_qminus2over7".
template <typename Info>
std::string context_name(const Info& info) {
    std::string out = std::string("p") + info.param.first + "_q" + info.param.second;
    std::string clean;
    for (char ch : out) {
        if (ch == '/') clean += "over";
        else if (ch == '-') clean += "minus";
        else clean += ch;
    }
    return clean;
}

}  // namespace support
