#pragma once

#include "kkm/complex.hpp"
#include "kkm/covers.hpp"
#include "kkm/fuzz.hpp"
#include "kkm/geometry.hpp"
#include "kkm/labeling.hpp"
#include "kkm/theorems.hpp"

#include "json.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace kkm::io {

using Json = nlohmann::ordered_json;

/// Throws InvalidInput naming `source`, line and column on malformed text.
Json parse_json(std::string_view text, const std::string& source = "<input>");
Json read_json_file(const std::filesystem::path& path);
/// Two-space indentation and a trailing newline.
std::string dump(const Json& value);
void write_text_file(const std::filesystem::path& path, const std::string& text);

// Schema errors name the offending field as a path such as
// "$.maximal_simplices[2][0]".

Rational rational_from_json(const Json& value, const std::string& where = "$");
Json rational_to_json(const Rational& value);
RationalPoint point_from_json(const Json& value, const std::string& where = "$");
Json point_to_json(const RationalPoint& point);
std::vector<RationalPoint> points_from_json(const Json& value, const std::string& where = "$");
Json points_to_json(std::span<const RationalPoint> points);
Simplex simplex_from_json(const Json& value, const std::string& where = "$");
Json simplex_to_json(const Simplex& s);
IndexSet index_set_from_json(const Json& value, const std::string& where = "$");

/// { "vertices": N, "maximal_simplices": [[...], ...],
///   "orientation": [+1|-1 per listed simplex]?, "carriers": [[...] per vertex]? }
/// Ids must lie below N; unused ids are allowed so that subcomplexes keep
/// the numbering of their parent.
struct ComplexFile {
  SimplicialComplex complex;
  std::optional<std::vector<int>> orientation;  // aligned with complex.maximal_simplices()
  std::optional<std::vector<Simplex>> carriers;  // indexed by vertex id

  /// The stored orientation, or orient(complex, seed_sign) when absent.
  OrientedComplex oriented(int seed_sign = +1) const;
};

ComplexFile complex_from_json(const Json& value, const std::string& where = "$");
Json complex_to_json(const SimplicialComplex& complex);
Json complex_to_json(const ComplexFile& file);
Json complex_to_json(const OrientedComplex& complex);

/// { "m": int, "labels": [int per vertex] }
Labeling labeling_from_json(const Json& value, const std::string& where = "$");
Json labeling_to_json(const Labeling& labeling);

/// { "V": [[q, ...], ...], "p": [q, ...]?, "loop": [[q, ...], ...]?,
///   "loop_labels": [int, ...]? }
struct ConfigFile {
  PointConfig config;
  std::optional<std::vector<RationalPoint>> loop;
  std::optional<std::vector<int>> loop_labels;  // indices into V

  /// The explicit loop, or V[loop_labels[i]]; throws InvalidInput if neither.
  std::vector<RationalPoint> loop_points() const;
};

ConfigFile config_from_json(const Json& value, const std::string& where = "$");
Json config_to_json(const ConfigFile& config);

/// { "ambient": "path" | complex object, "semantics": "star" | "closed",
///   "sets": [[simplex, ...], ...], "weights": [[q per set] per vertex]? }
/// A string ambient is resolved against `base_dir`.
struct CoverFile {
  Cover cover;
  ComplexFile ambient;
  std::optional<PartitionWeights> weights;
};

CoverFile cover_from_json(const Json& value, const std::filesystem::path& base_dir, const std::string& where = "$");
/// Sets are written by their generators (minimal members of a star set,
/// maximal members of a closed set) with the ambient inline.
Json cover_to_json(const Cover& cover, const std::optional<PartitionWeights>& weights = std::nullopt);

ComplexFile read_complex(const std::filesystem::path& path);
Labeling read_labeling(const std::filesystem::path& path);
ConfigFile read_config(const std::filesystem::path& path);
CoverFile read_cover(const std::filesystem::path& path);

Json to_json(const TheoremReport& report);
Json to_json(const DegreeReport& report);
Json to_json(const SpernerVerdict& verdict);
Json to_json(const ComplementVerdict& verdict);
Json to_json(const ExtensionVerdict& verdict);
Json to_json(const PebbleResult& result);
Json to_json(const FuzzSummary& summary);
Json to_json(const CovFamily& family);
Json to_json(const Nerve& nerve);
Json to_json(const FullyLabeledResult& result);
Json to_json(const FullyLabeledCount& count);
Json to_json(const Dg2Report& report);

}  // namespace kkm::io
