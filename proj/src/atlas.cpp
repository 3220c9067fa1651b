#include "qchev/atlas.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <sstream>

namespace qchev {

namespace {

int parse_int(std::string_view text, std::string_view whole) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size())
    throw ParseError("malformed descriptor '" + std::string(whole) + "'");
  return value;
}

double to_double(const PiMultiple& x) {
  return static_cast<double>(x.coefficient.numerator()) / static_cast<double>(x.coefficient.denominator()) *
         std::numbers::pi;
}

std::string_view status_name(AtlasRecord::Status s) {
  switch (s) {
    case AtlasRecord::Status::Ok: return "ok";
    case AtlasRecord::Status::Skipped: return "skipped";
    case AtlasRecord::Status::LemmaViolation: return "lemma_violation";
  }
  return "ok";
}

void check_cap(CartanType t, std::uint64_t cap) {
  // Known order; refusing up front avoids materializing ~cap elements of E7/E8.
  const auto order = weyl_order_formula(t);
  if (order > cap) throw CapExceeded(cap, order);
}

AtlasRecord record_for(const Space& space, const GroupEnumeration<int>& group, const Rational& scale) {
  const auto start = std::chrono::steady_clock::now();
  AtlasRecord r;
  r.descriptor = SpaceDescriptor{space.type(), space.beta() + 1};
  r.canonical = is_canonical(r.descriptor);
  r.weyl_order = group.order();

  const auto basis = enumerate_schubert_basis(space, group);
  const auto inv = space_invariants(space, basis);
  r.complex_dimension = inv.complex_dimension;
  r.index = inv.index;
  r.schubert_count = inv.schubert_count;
  r.hermitian_symmetric = is_hermitian_symmetric(space);

  auto report = single_space_bound(space, NormalizationScale{scale});
  r.witness = report.witnesses.front();
  r.bounds = std::move(report);
  r.monotone_constant = monotone_constant(space, NormalizationScale{scale});
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

Json citations_json(const std::vector<Citation>& citations, bool full) {
  Json out = Json::array();
  for (const auto& c : citations) {
    if (full)
      out.push_back(Json{{"step", c.step}, {"statement", c.statement}});
    else
      out.push_back(c.step);
  }
  return out;
}

Json witness_json(const WitnessSummary& w) {
  Json j;
  j["space"] = w.space;
  j["alpha_level"] = w.alpha_level;
  j["alpha_real_dim"] = w.alpha_real_dim;
  j["beta_level"] = w.beta_level;
  j["beta_real_dim"] = w.beta_real_dim;
  j["beta_word"] = w.beta_word;
  j["coefficient"] = w.coefficient;
  j["real_dim_sum"] = w.real_dim_sum;
  j["dim_relation"] = w.dim_relation();
  j["dim_relation_ok"] = w.real_dim_sum == w.dim_relation();
  return j;
}

}  // namespace

std::string to_string(const SpaceDescriptor& d) { return to_string(d.type) + ":" + std::to_string(d.node); }

SpaceDescriptor parse_descriptor(std::string_view text) {
  const auto colon = text.find(':');
  if (text.size() < 4 || colon == std::string_view::npos || colon < 2)
    throw ParseError("descriptor '" + std::string(text) + "' is not of the form A3:2");
  const auto family = family_from_char(text.front());
  if (!family) throw ParseError("unknown family in '" + std::string(text) + "'");
  SpaceDescriptor d;
  d.type = CartanType{*family, parse_int(text.substr(1, colon - 1), text)};
  validate(d.type);
  d.node = parse_int(text.substr(colon + 1), text);
  if (d.node < 1 || d.node > d.type.rank)
    throw ParseError("node " + std::to_string(d.node) + " out of range 1.." + std::to_string(d.type.rank) +
                     " in '" + std::string(text) + "'");
  return d;
}

bool is_canonical(const SpaceDescriptor& d) {
  const int n = d.type.rank;
  const int j = d.node;
  switch (d.type.family) {
    case Family::A: return j <= n + 1 - j;
    case Family::C: return n != 2;
    case Family::D: return n == 4 ? (j == 1 || j == 2) : j != n;
    case Family::E: return n != 6 || (j != 5 && j != 6);
    default: return true;
  }
}

Space make_space(const SpaceDescriptor& d) { return Space(make_root_system<int>(d.type), d.node - 1); }

std::uint64_t enumeration_cap_from_env() {
  const char* raw = std::getenv("QCHEV_CAP");
  if (raw == nullptr || *raw == '\0') return kDefaultEnumerationCap;
  std::uint64_t cap = 0;
  const std::string_view text(raw);
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), cap);
  if (ec != std::errc{} || ptr != text.data() + text.size() || cap == 0)
    throw ParseError("QCHEV_CAP must be a positive integer, got '" + std::string(text) + "'");
  return cap;
}

AtlasRecord analyze(const SpaceDescriptor& d, const AnalyzeOptions& options) {
  const auto space = make_space(d);
  check_cap(d.type, options.cap);
  const auto group = enumerate_group(space.root_system(), options.cap);
  return record_for(space, group, options.scale);
}

std::vector<AtlasRecord> analyze_type(CartanType t, std::uint64_t cap) {
  std::vector<AtlasRecord> out;
  const auto rs = make_root_system<int>(t);
  std::optional<GroupEnumeration<int>> group;
  std::string skip_reason;
  std::uint64_t lower_bound = 0;
  try {
    check_cap(t, cap);
    group = enumerate_group(*rs, cap);
  } catch (const CapExceeded& e) {
    skip_reason = e.what();
    lower_bound = e.order_lower_bound();
  }

  for (int beta = 0; beta < t.rank; ++beta) {
    const Space space(rs, beta);
    if (!group) {
      AtlasRecord r;
      r.descriptor = SpaceDescriptor{t, beta + 1};
      r.canonical = is_canonical(r.descriptor);
      r.status = AtlasRecord::Status::Skipped;
      r.message = skip_reason;
      r.weyl_order = lower_bound;
      out.push_back(std::move(r));
      continue;
    }
    try {
      out.push_back(record_for(space, *group, Rational(1)));
    } catch (const LemmaViolation& e) {
      AtlasRecord r;
      r.descriptor = SpaceDescriptor{t, beta + 1};
      r.canonical = is_canonical(r.descriptor);
      r.status = AtlasRecord::Status::LemmaViolation;
      r.message = e.what();
      r.weyl_order = group->order();
      out.push_back(std::move(r));
    }
  }
  return out;
}

std::vector<CartanType> types_up_to_rank(int max_rank) {
  std::vector<CartanType> types;
  for (Family f : {Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G})
    for (int n = 1; n <= max_rank; ++n)
      if (rank_admissible(f, n)) types.push_back(CartanType{f, n});
  std::sort(types.begin(), types.end());
  return types;
}

Json to_json(const BoundReport& r, bool decimal) {
  Json j;
  j["width_upper"] = r.gromov_width_upper.to_string();
  if (decimal) j["width_upper_decimal"] = to_double(r.gromov_width_upper);
  if (r.gw_capacity_value) j["gw_capacity"] = r.gw_capacity_value->to_string();
  if (r.seshadri_upper) j["seshadri_upper"] = format_rational(*r.seshadri_upper);
  j["sharpness"] = to_string(r.sharpness);
  Json witnesses = Json::array();
  for (const auto& w : r.witnesses) witnesses.push_back(witness_json(w));
  j["witnesses"] = std::move(witnesses);
  j["citations"] = citations_json(r.citations, true);
  return j;
}

Json to_json(const AtlasRecord& r, bool decimal, bool full_citations) {
  Json j;
  j["family"] = std::string(1, static_cast<char>(r.descriptor.type.family));
  j["rank"] = r.descriptor.type.rank;
  j["node"] = r.descriptor.node;
  j["descriptor"] = to_string(r.descriptor);
  j["canonical"] = r.canonical;
  j["status"] = status_name(r.status);
  if (r.status != AtlasRecord::Status::Ok) {
    j["reason"] = r.message;
    j[r.status == AtlasRecord::Status::Skipped ? "weyl_order_lower_bound" : "weyl_order"] = r.weyl_order;
    return j;
  }
  j["weyl_order"] = r.weyl_order;
  j["complex_dimension"] = r.complex_dimension;
  j["index"] = r.index;
  j["schubert_count"] = r.schubert_count;
  j["hermitian_symmetric"] = r.hermitian_symmetric;
  j["witness"] = witness_json(*r.witness);

  const auto& b = *r.bounds;
  Json bounds;
  bounds["width_upper"] = b.gromov_width_upper.to_string();
  if (decimal) bounds["width_upper_decimal"] = to_double(b.gromov_width_upper);
  bounds["gw_capacity"] = b.gw_capacity_value->to_string();
  bounds["seshadri_upper"] = b.seshadri_upper ? Json(format_rational(*b.seshadri_upper)) : Json(nullptr);
  bounds["monotone_constant"] = r.monotone_constant.to_string();
  bounds["sharpness"] = to_string(b.sharpness);
  bounds["citations"] = citations_json(b.citations, full_citations);
  j["bounds"] = std::move(bounds);
  return j;
}

std::string csv_row(const AtlasRecord& r) {
  std::ostringstream os;
  os << static_cast<char>(r.descriptor.type.family) << ',' << r.descriptor.type.rank << ',' << r.descriptor.node;
  if (r.status != AtlasRecord::Status::Ok) {
    os << ",,,,,";
    return os.str();
  }
  const auto& b = *r.bounds;
  os << ',' << r.complex_dimension << ',' << r.index << ',' << r.schubert_count << ','
     << format_rational(b.gromov_width_upper.coefficient) << ','
     << (b.seshadri_upper ? format_rational(*b.seshadri_upper) : std::string());
  return os.str();
}

AtlasResult run_atlas(const AtlasOptions& options) {
  if (options.max_rank < 1) throw ParseError("--max-rank must be at least 1");
  AtlasResult result;
  result.jsonl_path = options.out;
  result.csv_path = std::filesystem::path(options.out).replace_extension(".csv");
  result.timing_path = std::filesystem::path(options.out).replace_extension(".timing.json");

  std::ofstream jsonl(result.jsonl_path, std::ios::binary | std::ios::trunc);
  if (!jsonl) throw IoError("cannot write " + result.jsonl_path.string());

  for (CartanType t : types_up_to_rank(options.max_rank))
    for (auto& r : analyze_type(t, options.cap))
      if (!options.dedup || r.canonical) result.records.push_back(std::move(r));
  std::sort(result.records.begin(), result.records.end(),
            [](const AtlasRecord& a, const AtlasRecord& b) { return a.descriptor < b.descriptor; });

  Json timing = Json::object();
  for (const auto& r : result.records) {
    jsonl << to_json(r, options.decimal).dump() << '\n';
    timing[to_string(r.descriptor)] = r.seconds;
    if (r.status == AtlasRecord::Status::LemmaViolation) ++result.lemma_violations;
    if (r.status == AtlasRecord::Status::Skipped) ++result.skipped;
  }
  jsonl.flush();
  if (!jsonl) throw IoError("write failed for " + result.jsonl_path.string());

  std::ofstream csv(result.csv_path, std::ios::binary | std::ios::trunc);
  if (!csv) throw IoError("cannot write " + result.csv_path.string());
  csv << kCsvHeader << '\n';
  for (const auto& r : result.records) csv << csv_row(r) << '\n';
  if (!csv.flush()) throw IoError("write failed for " + result.csv_path.string());

  std::ofstream side(result.timing_path, std::ios::binary | std::ios::trunc);
  if (!side) throw IoError("cannot write " + result.timing_path.string());
  side << timing.dump(2) << '\n';
  return result;
}

void print_summary_table(std::ostream& os, const std::vector<AtlasRecord>& records) {
  os << std::left << std::setw(8) << "space" << std::right << std::setw(5) << "dim" << std::setw(7) << "index"
     << std::setw(10) << "|W^P|" << std::setw(10) << "|W|" << std::setw(7) << "coef" << std::setw(10) << "dims"
     << std::setw(10) << "c_G <=" << std::setw(7) << "eps<=" << "  status\n";
  for (const auto& r : records) {
    os << std::left << std::setw(8) << to_string(r.descriptor) << std::right;
    if (r.status != AtlasRecord::Status::Ok) {
      os << std::setw(76) << "" << "  " << status_name(r.status) << '\n';
      continue;
    }
    const auto& w = *r.witness;
    const auto dims = std::to_string(w.alpha_real_dim) + "+" + std::to_string(w.beta_real_dim);
    os << std::setw(5) << r.complex_dimension << std::setw(7) << r.index << std::setw(10) << r.schubert_count
       << std::setw(10) << r.weyl_order << std::setw(7) << w.coefficient << std::setw(10) << dims << std::setw(10)
       << r.bounds->gromov_width_upper.to_string() << std::setw(7)
       << (r.bounds->seshadri_upper ? format_rational(*r.bounds->seshadri_upper) : "-") << "  ok"
       << (r.canonical ? "" : " (non-canonical)") << '\n';
  }
}

void print_bound_table(std::ostream& os, const BoundReport& r) {
  os << "c_G <= " << r.gromov_width_upper.to_string() << '\n';
  if (r.gw_capacity_value) os << "GW capacity = " << r.gw_capacity_value->to_string() << '\n';
  if (r.seshadri_upper) os << "epsilon(L) <= " << format_rational(*r.seshadri_upper) << '\n';
  os << "sharpness: " << to_string(r.sharpness) << '\n';
  for (const auto& w : r.witnesses)
    os << "witness " << w.space << ": coefficient " << w.coefficient << ", real dims " << w.alpha_real_dim << " + "
       << w.beta_real_dim << " = " << w.real_dim_sum << " (4n - 2I = " << w.dim_relation() << ")\n";
  os << "justification:\n";
  for (std::size_t k = 0; k < r.citations.size(); ++k)
    os << "  " << (k + 1) << ". [" << r.citations[k].step << "] " << r.citations[k].statement << '\n';
}

void print_record_table(std::ostream& os, const AtlasRecord& r) {
  os << "space " << to_string(r.descriptor) << (r.canonical ? "" : " (non-canonical)") << '\n';
  os << "|W| = " << r.weyl_order << ", |W^P| = " << r.schubert_count << '\n';
  os << "complex dimension n = " << r.complex_dimension << ", Fano index I = " << r.index
     << (r.hermitian_symmetric ? ", Hermitian symmetric" : "") << '\n';
  os << "monotone constant = " << r.monotone_constant.to_string() << '\n';
  print_bound_table(os, *r.bounds);
}

}  // namespace qchev
