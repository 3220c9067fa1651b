#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qchev/quantum.hpp"
#include "qchev/schubert.hpp"

namespace qchev {

using Rational = boost::rational<std::int64_t>;
using Space = ParabolicChoice<int>;

/// "p/q" or "p".
std::string format_rational(const Rational& r);
/// Accepts "p", "-p", "p/q"; rejects anything else with ParseError.
Rational parse_rational(std::string_view text);

/// An exact multiple of pi.
struct PiMultiple {
  Rational coefficient{0};

  std::string to_string() const { return format_rational(coefficient) + " π"; }
  friend bool operator==(const PiMultiple&, const PiMultiple&) = default;
};

/// Scaling lambda of the form; lambda = 1 means omega(A) = pi on the curve generator.
struct NormalizationScale {
  Rational omega_on_generator{1};
};

/// An arbitrary closed symplectic manifold (N, Omega); contributes no constraint.
struct AnyClosedSymplectic {};

struct NormalizedFactor {
  std::variant<Space, AnyClosedSymplectic> space;
  Rational scaling{1};

  bool homogeneous() const noexcept { return std::holds_alternative<Space>(space); }
};

struct WitnessSummary {
  std::string space;
  int complex_dimension = 0;
  int index = 0;
  int alpha_level = 0;
  int alpha_real_dim = 0;
  int beta_level = 0;
  int beta_real_dim = 0;
  std::int64_t coefficient = 0;
  int real_dim_sum = 0;
  std::vector<int> beta_word;  // 1-based nodes
  bool hermitian_symmetric = false;

  int dim_relation() const noexcept { return 4 * complex_dimension - 2 * index; }
};

/// One inequality or identity used to reach the reported bound.
struct Citation {
  std::string step;
  std::string statement;
};

namespace steps {
inline constexpr std::string_view kNonvanishing = "gw-nonvanishing";
inline constexpr std::string_view kAgreement = "gw-agreement";
inline constexpr std::string_view kGwCapacity = "gw-capacity";
inline constexpr std::string_view kCapacityChain = "capacity-chain";
inline constexpr std::string_view kWidthBound = "width-bound";
inline constexpr std::string_view kConformality = "conformality";
inline constexpr std::string_view kProductReduction = "product-gw-reduction";
inline constexpr std::string_view kProductCapacity = "product-capacity";
inline constexpr std::string_view kProductWidthBound = "product-width-bound";
inline constexpr std::string_view kMixedProductWidthBound = "mixed-product-width-bound";
inline constexpr std::string_view kSeshadriTransfer = "seshadri-transfer";
inline constexpr std::string_view kSeshadriBound = "seshadri-bound";
}  // namespace steps

enum class Sharpness {
  Equality,             // every factor Hermitian symmetric, unscaled
  ConjecturedEquality,  // unscaled homogeneous factors, some not symmetric
  Unannotated,
};

std::string_view to_string(Sharpness s);

struct BoundReport {
  PiMultiple gromov_width_upper;
  std::optional<Rational> seshadri_upper;
  std::optional<PiMultiple> gw_capacity_value;
  std::vector<WitnessSummary> witnesses;
  std::vector<Citation> citations;
  Sharpness sharpness = Sharpness::Unannotated;
};

std::string space_label(const Space& p);

WitnessSummary summarize(const Space& p, const GWWitness<int>& witness);

/// c_G(M, lambda omega) <= |lambda| pi. Throws ZeroScaling for lambda = 0.
BoundReport single_space_bound(const Space& p, const NormalizationScale& scale = {});

/// min |a_i| pi over the homogeneous factors.
BoundReport product_bound(const std::vector<NormalizedFactor>& factors);

/// epsilon(L) <= 1 for an unscaled product of homogeneous factors.
Rational seshadri_bound(const std::vector<NormalizedFactor>& factors);

/// lambda with omega(A) = lambda c_1(A), in units of pi.
PiMultiple monotone_constant(const Space& p, const NormalizationScale& scale = {});

}  // namespace qchev
