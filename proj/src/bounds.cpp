#include "sombor/bounds.hpp"

#include <cmath>
#include <numbers>

#include "sombor/indices.hpp"

namespace sombor {

std::string_view to_string(BoundKind kind) noexcept {
    switch (kind) {
        case BoundKind::eso_join: return "eso-join";
        case BoundKind::eu_join: return "eu-join";
        case BoundKind::eso_corona: return "eso-corona";
        case BoundKind::eu_corona: return "eu-corona";
    }
    return "?";
}

std::string_view to_string(FormulaVariant variant) noexcept {
    return variant == FormulaVariant::statement ? "statement" : "proof-conclusion";
}

std::optional<BoundKind> parse_bound_kind(std::string_view text) noexcept {
    for (BoundKind k : kAllBoundKinds) {
        if (to_string(k) == text) return k;
    }
    return std::nullopt;
}

std::optional<FormulaVariant> parse_formula_variant(std::string_view text) noexcept {
    if (text == "proof-conclusion" || text == "corrected") return FormulaVariant::proof_conclusion;
    if (text == "statement") return FormulaVariant::statement;
    return std::nullopt;
}

ProductKind product_kind(BoundKind kind) noexcept {
    return kind == BoundKind::eso_join || kind == BoundKind::eu_join ? ProductKind::join : ProductKind::corona;
}

bool has_distinct_statement(BoundKind kind) noexcept { return kind == BoundKind::eu_join; }

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;
constexpr double kSqrt3 = std::numbers::sqrt3;

// Each formula is one function of the factor parameters and a chosen degree
// extreme per factor; α1 takes (δ1, δ2) and α2 takes (Δ1, Δ2). The index is a
// sum of per-edge terms increasing in both endpoint degrees, so bounding every
// degree by its extreme bounds the sum.
struct Side {
    double n;
    double m;
    double d;
};

Side side(const GraphParams& p, std::size_t deg) {
    return {static_cast<double>(p.n), static_cast<double>(p.m), static_cast<double>(deg)};
}

// ESO(G1+G2): V1 degrees d+n2, V2 degrees d+n1.
double eso_join_value(Side a, Side b) {
    const double x = a.d + b.n;
    const double y = b.d + a.n;
    return 2 * kSqrt2 * a.m * x * x + 2 * kSqrt2 * b.m * y * y + a.n * b.n * (x + y) * std::sqrt(x * x + y * y);
}

// EU(G1+G2), proof conclusion.
double eu_join_value(Side a, Side b) {
    const double x = a.d + b.n;
    const double y = b.d + a.n;
    return kSqrt3 * a.m * x + kSqrt3 * b.m * y + a.n * b.n * std::sqrt(x * x + y * y + x * y);
}

// EU(G1+G2), statement form: G2 treated with corona-style (d+1) degrees and
// an n1 multiplier.
double eu_join_statement_value(Side a, Side b) {
    const double x = a.d + b.n;
    const double y = b.d + 1;
    return kSqrt3 * a.m * x + kSqrt3 * a.n * b.m * y + a.n * b.n * std::sqrt(x * x + y * y + x * y);
}

// ESO(G1∘G2): V1 degrees d+n2, copy degrees d+1, n1 copies of E2.
double eso_corona_value(Side a, Side b) {
    const double x = a.d + b.n;
    const double y = b.d + 1;
    return 2 * kSqrt2 * a.m * x * x + 2 * kSqrt2 * a.n * b.m * y * y + a.n * b.n * (x + y) * std::sqrt(x * x + y * y);
}

double eu_corona_value(Side a, Side b) {
    const double x = a.d + b.n;
    const double y = b.d + 1;
    return kSqrt3 * a.m * x + kSqrt3 * a.n * b.m * y + a.n * b.n * std::sqrt(x * x + y * y + x * y);
}

template <typename Formula>
BoundPair evaluate(Formula f, const GraphParams& p1, const GraphParams& p2, BoundKind kind, FormulaVariant variant) {
    BoundPair bp;
    bp.alpha1 = f(side(p1, p1.min_deg), side(p2, p2.min_deg));
    bp.alpha2 = f(side(p1, p1.max_deg), side(p2, p2.max_deg));
    bp.kind = kind;
    bp.variant = variant;
    return bp;
}

void require_regular(const GraphParams& p1, const GraphParams& p2) {
    if (!p1.is_regular() || !p2.is_regular()) {
        throw GraphError("regular-case value needs both factors regular (max degree == min degree)");
    }
}

}  // namespace

BoundPair eso_join_bounds(const GraphParams& p1, const GraphParams& p2) {
    return evaluate(eso_join_value, p1, p2, BoundKind::eso_join, FormulaVariant::proof_conclusion);
}

BoundPair eu_join_bounds(const GraphParams& p1, const GraphParams& p2, FormulaVariant variant) {
    if (variant == FormulaVariant::statement) {
        return evaluate(eu_join_statement_value, p1, p2, BoundKind::eu_join, variant);
    }
    return evaluate(eu_join_value, p1, p2, BoundKind::eu_join, variant);
}

BoundPair eso_corona_bounds(const GraphParams& p1, const GraphParams& p2) {
    return evaluate(eso_corona_value, p1, p2, BoundKind::eso_corona, FormulaVariant::proof_conclusion);
}

BoundPair eu_corona_bounds(const GraphParams& p1, const GraphParams& p2) {
    return evaluate(eu_corona_value, p1, p2, BoundKind::eu_corona, FormulaVariant::proof_conclusion);
}

BoundPair bounds_for(BoundKind kind, const GraphParams& p1, const GraphParams& p2, FormulaVariant variant) {
    switch (kind) {
        case BoundKind::eso_join: return eso_join_bounds(p1, p2);
        case BoundKind::eu_join: return eu_join_bounds(p1, p2, variant);
        case BoundKind::eso_corona: return eso_corona_bounds(p1, p2);
        case BoundKind::eu_corona: return eu_corona_bounds(p1, p2);
    }
    return {};
}

double regular_exact(BoundKind kind, const GraphParams& p1, const GraphParams& p2) {
    require_regular(p1, p2);
    const Side a = side(p1, *p1.regular_deg);
    const Side b = side(p2, *p2.regular_deg);
    switch (kind) {
        case BoundKind::eso_join: return eso_join_value(a, b);
        case BoundKind::eu_join: return eu_join_value(a, b);
        case BoundKind::eso_corona: return eso_corona_value(a, b);
        case BoundKind::eu_corona: return eu_corona_value(a, b);
    }
    return 0.0;
}

double printed_proposition(BoundKind kind, const GraphParams& p1, const GraphParams& p2) {
    require_regular(p1, p2);
    const Side a = side(p1, *p1.regular_deg);
    const Side b = side(p2, *p2.regular_deg);
    switch (kind) {
        case BoundKind::eso_join: {
            const double x = a.d + b.n;
            const double y = b.d + a.n;
            return 2 * kSqrt2 * a.m * x * x + 2 * kSqrt2 * b.m * y * y + a.n * b.n * (a.d + b.d + a.n + b.n);
        }
        case BoundKind::eso_corona: {
            const double x = a.d + b.n;
            const double y = b.d + 1;
            return 2 * kSqrt2 * a.m * x * x + 2 * kSqrt2 * a.n * b.m * y * y + a.n * b.n * (a.d + b.d + 1 + b.n);
        }
        // The quoted EU forms agree with the corrected bounds.
        case BoundKind::eu_join: return eu_join_value(a, b);
        case BoundKind::eu_corona: return eu_corona_value(a, b);
    }
    return 0.0;
}

}  // namespace sombor
