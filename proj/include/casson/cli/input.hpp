#pragma once

#include <optional>
#include <string>

#include "casson/circle_bundle.hpp"
#include "casson/cli/report.hpp"
#include "casson/cup_ring.hpp"
#include "casson/equivariant.hpp"
#include "casson/floer.hpp"
#include "casson/seifert.hpp"
#include "casson/surgery.hpp"

namespace casson::cli {

inline constexpr int kSchemaVersion = 1;

/// Parses text as JSON; throws ParseError. Rejects a "version" other than 1
/// with SchemaError.
Json parse_document(const std::string& text);

struct NamedKnot {
    std::string name;
    SeifertMatrix matrix;
};

// Knot references:
//   "left-trefoil"                          preset name
//   {"name": s, "seifert": [[int]]}         inline matrix
//   {"preset": s}
//   {"torus": [p, q]}
//   {"mirror": <knot>}
//   {"sum": [<knot>, ...]}
NamedKnot parse_knot(const Json& j, const std::string& path = "knot");

Rational parse_rational_value(const Json& j, const std::string& path);

struct KnotInput {
    NamedKnot knot;
    std::vector<int> orders{2};
};
KnotInput parse_knot_input(const Json& j);

SurgeryPresentation parse_sphere_input(const Json& j);

struct MappingTorusInput {
    QuotientData data;
    std::string branch_name;
    std::optional<bool> rho;
    std::optional<std::array<long, kFloerGradings>> floer_ranks;
};
MappingTorusInput parse_mapping_torus_input(const Json& j);

FloerData parse_floer_input(const Json& j);

struct TorusInput {
    std::string name;
    CupRing ring;
    std::optional<H2Class> w;
    std::optional<SpinRohlinTable> rohlin_table;
};
TorusInput parse_torus_input(const Json& j);

CircleBundleData parse_circle_bundle_input(const Json& j, std::string* knot_name = nullptr);

} // namespace casson::cli
