#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "magtop/frames.hpp"
#include "magtop/gluing.hpp"
#include "magtop/metric_space.hpp"
#include "magtop/projecting.hpp"

namespace magtop {

/// Input document. Numbers are JSON integers or "p/q" strings.
///
///   {"type":"matrix","labels":[...],"dist":[["0","1"],["1","0"]]}
///   {"type":"graph","vertices":[...],"edges":[["a","b","1"],...]}
///   {"type":"gluing","G":<space>,"H":<space>,"K_in_G":[...],"K_in_H":[...]}
///   {"type":"twist", ... as gluing ..., "alpha":[...]}
///   {"type":"facets","facets":[["a","b"],["b","c"]]}
///
/// alpha lists, for each entry of K_in_G, the K_in_G label it is sent to.
struct Document {
    std::string type;
    std::optional<MetricSpace> space;
    std::optional<MetricSpace> G;
    std::optional<MetricSpace> H;
    std::vector<Point> k_in_g;
    std::vector<Point> k_in_h;
    std::vector<std::size_t> alpha;
    std::vector<std::vector<std::string>> facets;

    /// The space of a matrix or graph document; ParseError otherwise.
    [[nodiscard]] const MetricSpace& metric() const;
    /// The gluing of a gluing or twist document; ParseError otherwise.
    [[nodiscard]] GluingSpec gluing() const;
    /// Validated twist of a twist document; ParseError otherwise.
    [[nodiscard]] SycamoreTwist twist() const;
};

/// Throws ParseError on malformed JSON or fields, LabelError on unknown labels
/// and MetricError on axiom violations.
Document parse_document(std::string_view text);
Document load_document(const std::filesystem::path& path);

/// Graph document of a Hasse graph with extra "bottom", "top" and "length" fields.
std::string hasse_document(const HasseGraph& g);

/// Matrix document of a space.
std::string matrix_document(const MetricSpace& X);

}  // namespace magtop
