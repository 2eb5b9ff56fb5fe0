#pragma once

#include <optional>

#include "magtop/gluing.hpp"
#include "magtop/homology.hpp"
#include "magtop/report.hpp"

namespace magtop {

/// A gluing in which every point of H minus K is biased.
struct GatedGluing {
    GluingSpec base;
};

/// Either a gated gluing or the first neutral point of H (an H index).
struct GatedVerdict {
    std::optional<GatedGluing> gluing;
    std::optional<Point> neutral_witness;

    [[nodiscard]] bool gated() const noexcept { return gluing.has_value(); }
};

GatedVerdict check_gated(const GluingSpec& g);

/// Throws NotGated naming the neutral witness.
GatedGluing require_gated(const GluingSpec& g);

/// Total homology of the interior part of M^l(H): the magnitude chains of H
/// generated by sequences that touch H minus K. Throws InternalError when the
/// boundary of such a sequence has a length-preserving face inside K.
HomologySummary interior_part_homology(const GatedGluing& g, const Rational& l, unsigned jobs = 1);

/// M^l(X) against the interior part of H plus M^l(G), and M^l(H) against the
/// interior part plus M^l(K), for each achievable l <= max_length.
CheckReport verify_union(const GatedGluing& g, const Rational& max_length, unsigned jobs = 1);

/// rank MH(X) + rank MH(K) = rank MH(G) + rank MH(H) per degree, and the same
/// for torsion, for each achievable l <= max_length. Also checks the strict
/// shortcut inequality d(a, c) < d(a, b) + d(b, c) for a, c in K and b in H
/// minus K.
CheckReport verify_mv(const GatedGluing& g, const Rational& max_length, unsigned jobs = 1);

}  // namespace magtop
