#pragma once

// Quantum multiplication by the divisor class sigma_{s_beta} on QH*(G/P), b2 = 1.
//
//   sigma_{s_beta} * sigma_u =
//       sum  <omega_beta, alpha^vee> sigma_{u s_alpha}         over alpha in R+ \ R_P+ with
//                                                              l(u s_alpha) = l(u) + 1
//     + sum  <omega_beta, alpha^vee> q^{d(alpha)} sigma_{[u s_alpha]}
//                                                              over alpha in R+ \ R_P+ with
//                                                              l([u s_alpha]) = l(u) + 1 - d(alpha) I
//
// where d(alpha) is the beta^vee-coefficient of alpha^vee, [.] the minimal coset representative
// and I the Fano index. Coefficients are genus-0 three-point Gromov-Witten invariants.

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qchev/cartan.hpp"
#include "qchev/errors.hpp"
#include "qchev/schubert.hpp"
#include "qchev/weyl.hpp"

namespace qchev {

template <ExactScalar Scalar>
int curve_degree_of_root(const ParabolicChoice<Scalar>& p, int root_index) {
  if (p.root_in_parabolic(root_index))
    throw RootInParabolic("root " + std::to_string(root_index) + " is supported on the parabolic");
  return static_cast<int>(p.root_system().coroot(root_index)(p.beta()));
}

/// A finite sum of terms c q^d sigma_w with c > 0, keyed by (d, w).
template <ExactScalar Scalar>
class QuantumProduct {
 public:
  struct Key {
    int degree;
    WeylElement<Scalar> rep;
  };
  struct Term {
    std::int64_t coefficient = 0;
    int level = 0;
  };
  struct KeyLess {
    bool operator()(const Key& a, const Key& b) const {
      if (a.degree != b.degree) return a.degree < b.degree;
      return lex_less(a.rep, b.rep);
    }
  };
  using Map = std::map<Key, Term, KeyLess>;

  static QuantumProduct from_class(const SchubertClass<Scalar>& u) {
    QuantumProduct x;
    x.add(u.rep, u.level, 0, 1);
    return x;
  }

  void add(const WeylElement<Scalar>& rep, int level, int degree, std::int64_t coefficient) {
    if (coefficient == 0) return;
    auto [it, inserted] = terms_.try_emplace(Key{degree, rep}, Term{0, level});
    it->second.coefficient += coefficient;
    if (it->second.coefficient == 0) terms_.erase(it);
  }

  std::int64_t coefficient(const WeylElement<Scalar>& rep, int degree) const {
    auto it = terms_.find(Key{degree, rep});
    return it == terms_.end() ? 0 : it->second.coefficient;
  }

  const Map& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }

  std::size_t count_of_degree(int degree) const {
    std::size_t n = 0;
    for (const auto& [key, term] : terms_)
      if (key.degree == degree) ++n;
    return n;
  }

  friend bool operator==(const QuantumProduct& a, const QuantumProduct& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    auto it = b.terms_.begin();
    for (const auto& [key, term] : a.terms_) {
      if (key.degree != it->first.degree || !(key.rep == it->first.rep) ||
          term.coefficient != it->second.coefficient)
        return false;
      ++it;
    }
    return true;
  }

 private:
  Map terms_;
};

template <ExactScalar Scalar>
QuantumProduct<Scalar> chevalley_multiply(const SchubertClass<Scalar>& u, const ParabolicChoice<Scalar>& p) {
  if (u.grading != Grading::Codimension)
    throw GradingError("divisor multiplication is defined on codimension-graded classes");
  const auto& rs = p.root_system();
  const int index = fano_index(p);
  const auto omega = fundamental_weight<Scalar>(rs.rank(), p.beta());

  QuantumProduct<Scalar> out;
  for (int k = 0; k < rs.num_positive_roots(); ++k) {
    if (p.root_in_parabolic(k)) continue;
    const std::int64_t coefficient = pair_weight_coroot(omega, rs.coroot(k));
    const int degree = curve_degree_of_root(p, k);
    const auto moved = u.rep * reflection_from_root_index(rs, k);

    if (length(rs, moved) == u.level + 1) {
      out.add(moved, u.level + 1, 0, coefficient);
      continue;
    }
    const auto rep = minimal_coset_rep(moved, p);
    const int level = length(rs, rep);
    if (level == u.level + 1 - degree * index) out.add(rep, level, degree, coefficient);
  }
  return out;
}

/// Linear extension: sigma_{s_beta} * x for a combination x of classes with q-powers.
template <ExactScalar Scalar>
QuantumProduct<Scalar> divisor_times(const QuantumProduct<Scalar>& x, const ParabolicChoice<Scalar>& p) {
  QuantumProduct<Scalar> out;
  for (const auto& [key, term] : x.terms()) {
    const SchubertClass<Scalar> u{key.rep, Grading::Codimension, term.level};
    const auto prod = chevalley_multiply(u, p);
    for (const auto& [k2, t2] : prod.terms())
      out.add(k2.rep, t2.level, key.degree + k2.degree, term.coefficient * t2.coefficient);
  }
  return out;
}

/// Coefficient of q^d sigma_w; read as the invariant Psi_{dA,0,3}(pt; sigma_{s_beta}, sigma_u, sigma(w)).
template <ExactScalar Scalar>
std::int64_t extract_gw_invariant(const QuantumProduct<Scalar>& prod, const SchubertClass<Scalar>& target,
                                  int degree) {
  return prod.coefficient(target.rep, degree);
}

/// Real dimension of the cycle a class represents on a space of complex dimension n.
template <ExactScalar Scalar>
int real_dimension(const SchubertClass<Scalar>& u, int complex_dim) {
  return u.grading == Grading::Dimension ? 2 * u.level : 2 * (complex_dim - u.level);
}

template <ExactScalar Scalar>
struct GWWitness {
  SchubertClass<Scalar> alpha_class;  // sigma_{[s_beta]}, codimension 1
  SchubertClass<Scalar> beta_class;   // sigma(w), dimension n + 1 - I
  std::int64_t coefficient = 0;
  int real_dim_sum = 0;
  int complex_dimension = 0;
  int index = 0;

  int dim_relation() const noexcept { return 4 * complex_dimension - 2 * index; }
};

/// Finds a degree-1 invariant Psi_{A,0,3}(pt; alpha, beta, pt) != 0 by expanding
/// sigma_{s_beta} * [pt]. The target w is the lexicographically least degree-1 term.
template <ExactScalar Scalar>
GWWitness<Scalar> verify_nonvanishing_lemma(const ParabolicChoice<Scalar>& p) {
  const std::string where = to_string(p.type()) + ":" + std::to_string(p.beta() + 1);
  const int n = complex_dimension(p);
  const int index = fano_index(p);
  const auto point = point_class(p);
  if (point.level != n) throw LemmaViolation(where + ": point class has level " + std::to_string(point.level));

  const auto prod = chevalley_multiply(point, p);
  if (prod.count_of_degree(0) != 0) throw LemmaViolation(where + ": classical term in divisor * point");

  const typename QuantumProduct<Scalar>::Map::value_type* first = nullptr;
  for (const auto& entry : prod.terms())
    if (entry.first.degree == 1) {
      first = &entry;
      break;
    }
  if (first == nullptr) throw LemmaViolation(where + ": no degree-1 term in divisor * point");

  auto alpha = adjacent_partner(point, p);
  if (alpha.level != 1 || !(alpha.rep == simple_reflection(p.root_system(), p.beta())))
    throw LemmaViolation(where + ": partner of the point is not [s_beta]");

  SchubertClass<Scalar> beta{first->first.rep, Grading::Dimension, first->second.level};
  GWWitness<Scalar> witness{std::move(alpha), std::move(beta), first->second.coefficient, 0, n, index};
  witness.real_dim_sum = real_dimension(witness.alpha_class, n) + real_dimension(witness.beta_class, n);
  if (witness.coefficient <= 0) throw LemmaViolation(where + ": nonpositive coefficient");
  if (witness.real_dim_sum != witness.dim_relation())
    throw LemmaViolation(where + ": real dimensions sum to " + std::to_string(witness.real_dim_sum) +
                         ", expected " + std::to_string(witness.dim_relation()));
  return witness;
}

}  // namespace qchev
