#pragma once

#include <optional>
#include <vector>

#include "eulerhaar/admissible.hpp"
#include "eulerhaar/rational.hpp"

namespace eulerhaar {

/// Exact decision of 0 in conv(points): does a rational convex combination
/// of the points equal the zero vector? Dispatch: Caratheodory subset
/// enumeration up to 12 points, exact-arithmetic simplex above.
/// Throws std::invalid_argument on an empty point set.
bool hull_contains_zero(const Spectrum& s);
bool hull_contains_zero(const std::vector<std::vector<int>>& points);

/// Convex weights certifying containment (aligned with `points`, summing to
/// one), or nullopt when 0 is outside the hull.
std::optional<std::vector<Rational>> hull_zero_witness(
    const std::vector<std::vector<int>>& points);

/// The two decision routes, exposed for cross-validation. Both are exact on
/// any input size.
std::optional<std::vector<Rational>> hull_witness_caratheodory(
    const std::vector<std::vector<int>>& points);
std::optional<std::vector<Rational>> hull_witness_simplex(
    const std::vector<std::vector<int>>& points);

}  // namespace eulerhaar
