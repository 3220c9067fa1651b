#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "qchev/bounds.hpp"

namespace qchev {

using Json = nlohmann::ordered_json;

/// "FAMILYrank:node" with Bourbaki numbering, e.g. "A3:2".
struct SpaceDescriptor {
  CartanType type;
  int node = 1;  // 1-based

  friend bool operator==(const SpaceDescriptor&, const SpaceDescriptor&) = default;
  friend auto operator<=>(const SpaceDescriptor&, const SpaceDescriptor&) = default;
};

std::string to_string(const SpaceDescriptor& d);

/// Throws ParseError on syntax or node range, InvalidRank on an inadmissible rank.
SpaceDescriptor parse_descriptor(std::string_view text);

/// Least node in its orbit under diagram automorphisms; C2 defers to B2.
bool is_canonical(const SpaceDescriptor& d);

Space make_space(const SpaceDescriptor& d);

/// Enumeration cap from QCHEV_CAP, or the default.
std::uint64_t enumeration_cap_from_env();

struct AtlasRecord {
  SpaceDescriptor descriptor;
  bool canonical = true;
  enum class Status { Ok, Skipped, LemmaViolation } status = Status::Ok;
  std::string message;

  std::uint64_t weyl_order = 0;  // lower bound when skipped
  int complex_dimension = 0;
  int index = 0;
  std::uint64_t schubert_count = 0;
  bool hermitian_symmetric = false;
  std::optional<WitnessSummary> witness;
  std::optional<BoundReport> bounds;
  PiMultiple monotone_constant;

  double seconds = 0.0;  // never serialized into the record
};

struct AnalyzeOptions {
  Rational scale{1};
  std::uint64_t cap = kDefaultEnumerationCap;
};

/// Runs roots, Weyl enumeration, Schubert basis, Chevalley product, witness and bounds.
/// Throws CapExceeded or LemmaViolation.
AtlasRecord analyze(const SpaceDescriptor& d, const AnalyzeOptions& options = {});

/// All records for one Cartan type sharing one group enumeration. Over-cap types yield
/// skipped records; lemma violations are recorded, not thrown.
std::vector<AtlasRecord> analyze_type(CartanType t, std::uint64_t cap);

std::vector<CartanType> types_up_to_rank(int max_rank);

/// JSON for one record. full_citations adds statements, not just step ids.
Json to_json(const AtlasRecord& r, bool decimal, bool full_citations = false);
Json to_json(const BoundReport& r, bool decimal);

struct AtlasOptions {
  int max_rank = 1;
  std::filesystem::path out;
  bool dedup = false;
  bool decimal = false;
  std::uint64_t cap = kDefaultEnumerationCap;
};

struct AtlasResult {
  std::vector<AtlasRecord> records;
  std::filesystem::path jsonl_path;
  std::filesystem::path csv_path;
  std::filesystem::path timing_path;
  std::size_t lemma_violations = 0;
  std::size_t skipped = 0;
};

/// Sweeps every (family, rank <= max_rank, node) and writes the JSON-lines atlas, the CSV
/// summary next to it (extension .csv) and a timing sidecar (.timing.json). Throws IoError.
AtlasResult run_atlas(const AtlasOptions& options);

inline constexpr std::string_view kCsvHeader =
    "family,rank,node,dim,index,schubert_count,width_upper_pi,seshadri_upper";

std::string csv_row(const AtlasRecord& r);
void print_summary_table(std::ostream& os, const std::vector<AtlasRecord>& records);
void print_record_table(std::ostream& os, const AtlasRecord& r);
void print_bound_table(std::ostream& os, const BoundReport& r);

}  // namespace qchev
