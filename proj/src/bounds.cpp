#include "qchev/bounds.hpp"

#include <algorithm>
#include <charconv>
#include <limits>

namespace qchev {

namespace {

Rational abs_value(const Rational& r) { return r < 0 ? -r : r; }

std::int64_t parse_integer(std::string_view text, std::string_view whole) {
  std::int64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && text.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (first == last || ec != std::errc{} || ptr != last)
    throw ParseError("malformed rational '" + std::string(whole) + "'");
  return value;
}

Citation cite(std::string_view step, std::string statement) {
  return Citation{std::string(step), std::move(statement)};
}

Citation nonvanishing_citation(const std::vector<WitnessSummary>& witnesses) {
  std::string spaces;
  for (const auto& w : witnesses) {
    if (!spaces.empty()) spaces += ", ";
    spaces += w.space + " (coefficient " + std::to_string(w.coefficient) + ", " +
              std::to_string(w.alpha_real_dim) + " + " + std::to_string(w.beta_real_dim) + " = " +
              std::to_string(w.dim_relation()) + ")";
  }
  return cite(steps::kNonvanishing,
              "Psi_{A,0,3}(pt; alpha, beta, pt) != 0 with dim alpha + dim beta = 4n - 2c_1(A): " + spaces);
}

Citation agreement_citation() {
  return cite(steps::kAgreement,
              "b2 = 1 homogeneous spaces are Kähler-Einstein, hence monotone; for indecomposable A the "
              "Liu-Tian invariant Psi_{A,0,3}(pt; a1, a2, a3) equals Psi_{A,0,3}(a1, a2, a3)");
}

Citation capacity_chain_citation() {
  return cite(steps::kCapacityChain,
              "c_G(M, omega) <= C_HZ^(2)(M, omega; pt, gamma) <= C_HZ^(2o)(M, omega; pt, gamma)");
}

void append_seshadri_citations(BoundReport& report) {
  report.citations.push_back(
      cite(steps::kSeshadriTransfer, "epsilon(L) <= c_G(M, omega_L) for every Kähler form omega_L in c_1(L)"));
  report.citations.push_back(cite(steps::kSeshadriBound, "epsilon(L) <= 1 for c_1(L) = [omega / pi]"));
}

Sharpness classify(const std::vector<NormalizedFactor>& factors,
                   const std::vector<WitnessSummary>& witnesses) {
  for (const auto& f : factors)
    if (!f.homogeneous() || abs_value(f.scaling) != Rational(1)) return Sharpness::Unannotated;
  for (const auto& w : witnesses)
    if (!w.hermitian_symmetric) return Sharpness::ConjecturedEquality;
  return Sharpness::Equality;
}

}  // namespace

std::string format_rational(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  const auto num = parse_integer(text.substr(0, slash), text);
  const auto den = parse_integer(text.substr(slash + 1), text);
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string_view to_string(Sharpness s) {
  switch (s) {
    case Sharpness::Equality: return "equality";
    case Sharpness::ConjecturedEquality: return "conjectured-equality";
    case Sharpness::Unannotated: return "none";
  }
  return "none";
}

std::string space_label(const Space& p) { return to_string(p.type()) + ":" + std::to_string(p.beta() + 1); }

WitnessSummary summarize(const Space& p, const GWWitness<int>& witness) {
  WitnessSummary s;
  s.space = space_label(p);
  s.complex_dimension = witness.complex_dimension;
  s.index = witness.index;
  s.alpha_level = witness.alpha_class.level;
  s.alpha_real_dim = real_dimension(witness.alpha_class, witness.complex_dimension);
  s.beta_level = witness.beta_class.level;
  s.beta_real_dim = real_dimension(witness.beta_class, witness.complex_dimension);
  s.coefficient = witness.coefficient;
  s.real_dim_sum = witness.real_dim_sum;
  for (int i : reduced_word(p.root_system(), witness.beta_class.rep)) s.beta_word.push_back(i + 1);
  s.hermitian_symmetric = is_hermitian_symmetric(p);
  return s;
}

BoundReport single_space_bound(const Space& p, const NormalizationScale& scale) {
  if (scale.omega_on_generator == Rational(0)) throw ZeroScaling("symplectic form scaled by zero");
  const auto witness = summarize(p, verify_nonvanishing_lemma(p));
  const Rational area = abs_value(scale.omega_on_generator);

  BoundReport report;
  report.gromov_width_upper = PiMultiple{area};
  report.gw_capacity_value = PiMultiple{area};
  report.seshadri_upper = scale.omega_on_generator == Rational(1) ? std::optional<Rational>(1) : std::nullopt;
  report.witnesses.push_back(witness);
  report.citations.push_back(nonvanishing_citation(report.witnesses));
  report.citations.push_back(agreement_citation());
  report.citations.push_back(
      cite(steps::kGwCapacity,
           "C_HZ^(2)(M, omega; pt, gamma) <= GW(M, omega; pt, gamma) and C_HZ^(2o)(M, omega; pt, gamma) "
           "<= GW_0(M, omega; pt, gamma), with GW = GW_0 = omega(A) = pi for gamma = alpha or beta"));
  report.citations.push_back(capacity_chain_citation());
  report.citations.push_back(cite(steps::kWidthBound, "c_G(M, omega) <= omega(A) = pi"));
  if (area != Rational(1))
    report.citations.push_back(cite(steps::kConformality, "c_G(M, lambda omega) = |lambda| c_G(M, omega), lambda = " +
                                                              format_rational(scale.omega_on_generator)));
  if (report.seshadri_upper) append_seshadri_citations(report);
  report.sharpness = classify({NormalizedFactor{p, scale.omega_on_generator}}, report.witnesses);
  return report;
}

BoundReport product_bound(const std::vector<NormalizedFactor>& factors) {
  bool any_token = false;
  std::optional<Rational> least;
  BoundReport report;
  for (const auto& f : factors) {
    if (f.scaling == Rational(0)) throw ZeroScaling("factor scaled by zero");
    if (!f.homogeneous()) {
      any_token = true;
      continue;
    }
    const auto& p = std::get<Space>(f.space);
    report.witnesses.push_back(summarize(p, verify_nonvanishing_lemma(p)));
    const Rational a = abs_value(f.scaling);
    if (!least || a < *least) least = a;
  }
  if (!least) throw NoHomogeneousFactor("product has no homogeneous b2 = 1 factor");

  report.gromov_width_upper = PiMultiple{*least};
  const bool unscaled = !any_token && std::all_of(factors.begin(), factors.end(),
                                                  [](const NormalizedFactor& f) { return f.scaling == Rational(1); });
  if (unscaled) report.seshadri_upper = Rational(1);

  report.citations.push_back(nonvanishing_citation(report.witnesses));
  report.citations.push_back(agreement_citation());
  report.citations.push_back(
      cite(steps::kProductReduction,
           "Psi^{N x M}_{0+A,0,k}(pt; [N] x b_1, ..., [N] x b_{k-1}, pt x b_k) = Psi^M_{A,0,k}(pt; b_1, ..., b_k)"));
  report.citations.push_back(
      cite(steps::kProductCapacity, "C_HZ^(2o)(N x M, Omega + a omega; pt, [N] x gamma) <= |a| pi"));
  report.citations.push_back(capacity_chain_citation());
  if (any_token)
    report.citations.push_back(cite(steps::kMixedProductWidthBound,
                                    "c_G(N x M, Omega + a omega) <= |a| pi for any closed (N, Omega)"));
  else
    report.citations.push_back(cite(steps::kProductWidthBound,
                                    "c_G(M_1 x ... x M_r, a_1 omega^1 + ... + a_r omega^r) <= min |a_i| pi"));
  if (report.seshadri_upper) append_seshadri_citations(report);
  report.sharpness = classify(factors, report.witnesses);
  return report;
}

Rational seshadri_bound(const std::vector<NormalizedFactor>& factors) {
  bool homogeneous = false;
  for (const auto& f : factors) {
    if (!f.homogeneous())
      throw NoHomogeneousFactor("the line bundle bound applies to products of homogeneous factors only");
    if (f.scaling != Rational(1)) throw ScaledFactorsUnsupported("line bundle bound requires unscaled factors");
    homogeneous = true;
  }
  if (!homogeneous) throw NoHomogeneousFactor("empty product");
  // epsilon(L) <= c_G(M, omega) / pi with c_1(L) = [omega / pi]
  return product_bound(factors).gromov_width_upper.coefficient;
}

PiMultiple monotone_constant(const Space& p, const NormalizationScale& scale) {
  if (scale.omega_on_generator == Rational(0)) throw ZeroScaling("symplectic form scaled by zero");
  return PiMultiple{abs_value(scale.omega_on_generator) / Rational(fano_index(p))};
}

}  // namespace qchev
