#pragma once

#include <optional>
#include <span>
#include <string_view>

#include "sombor/graph.hpp"
#include "sombor/products.hpp"

namespace sombor {

/// Which index is bounded on which product.
enum class BoundKind { eso_join, eu_join, eso_corona, eu_corona };

/// Which form of a bound formula is evaluated.
///
/// proof_conclusion is the corrected formula and the default for every kind.
/// statement differs only for eu_join, where it uses corona-style
/// n1·m2·(Δ2+1) terms and does not bracket the index in general.
enum class FormulaVariant { proof_conclusion, statement };

inline constexpr BoundKind kAllBoundKinds[] = {BoundKind::eso_join, BoundKind::eu_join,
                                               BoundKind::eso_corona, BoundKind::eu_corona};

std::string_view to_string(BoundKind kind) noexcept;
std::string_view to_string(FormulaVariant variant) noexcept;
/// Accepts "eso-join", "eu-join", "eso-corona", "eu-corona".
std::optional<BoundKind> parse_bound_kind(std::string_view text) noexcept;
/// Accepts "proof-conclusion" (alias "corrected") and "statement".
std::optional<FormulaVariant> parse_formula_variant(std::string_view text) noexcept;

ProductKind product_kind(BoundKind kind) noexcept;
/// True when `variant` evaluates a formula distinct from the corrected one for `kind`.
bool has_distinct_statement(BoundKind kind) noexcept;

struct BoundPair {
    double alpha1 = 0.0;  // lower
    double alpha2 = 0.0;  // upper
    BoundKind kind = BoundKind::eso_join;
    FormulaVariant variant = FormulaVariant::proof_conclusion;
};

BoundPair eso_join_bounds(const GraphParams& p1, const GraphParams& p2);
BoundPair eu_join_bounds(const GraphParams& p1, const GraphParams& p2,
                         FormulaVariant variant = FormulaVariant::proof_conclusion);
BoundPair eso_corona_bounds(const GraphParams& p1, const GraphParams& p2);
BoundPair eu_corona_bounds(const GraphParams& p1, const GraphParams& p2);

BoundPair bounds_for(BoundKind kind, const GraphParams& p1, const GraphParams& p2,
                     FormulaVariant variant = FormulaVariant::proof_conclusion);

/// Exact index of the product when both factors are regular: the bound
/// formulas with Δ = δ = r. Throws GraphError for non-regular params.
double regular_exact(BoundKind kind, const GraphParams& p1, const GraphParams& p2);

/// Regular-case value in its commonly quoted closed form. For ESO that form
/// drops the radical from the cross term, n1·n2·(r1+r2+n1+n2) for join and
/// n1·n2·(r1+r2+1+n2) for corona, so it disagrees with regular_exact; kept
/// for reporting only. Throws GraphError for non-regular params.
double printed_proposition(BoundKind kind, const GraphParams& p1, const GraphParams& p2);

}  // namespace sombor
