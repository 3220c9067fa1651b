#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "qchev/cartan.hpp"
#include "qchev/errors.hpp"
#include "qchev/weyl.hpp"

namespace qchev {

/// A maximal parabolic, given by the single simple root beta left out of it.
///
/// G/P then has b2 = 1 and H_2 is generated by the class of the curve [s_beta]. The parabolic
/// subgroup W_P is generated by the simple reflections s_i, i != beta.
template <ExactScalar Scalar>
class ParabolicChoice {
 public:
  ParabolicChoice(std::shared_ptr<const RootSystem<Scalar>> rs, int beta)
      : rs_(std::move(rs)), beta_(beta), longest_(WeylElement<Scalar>::identity(*rs_)) {
    if (beta_ < 0 || beta_ >= rs_->rank())
      throw IndexOutOfRange("node " + std::to_string(beta_) + " out of range for " +
                            to_string(rs_->type()));
    longest_ = longest_element(*rs_);
  }

  /// Rejects anything other than exactly one excluded node.
  static ParabolicChoice from_excluded(std::shared_ptr<const RootSystem<Scalar>> rs,
                                       const std::vector<int>& excluded) {
    if (excluded.size() != 1)
      throw InvalidParabolic("b2(G/P) = 1 requires exactly one excluded node, got " +
                             std::to_string(excluded.size()));
    return ParabolicChoice(std::move(rs), excluded.front());
  }

  const RootSystem<Scalar>& root_system() const noexcept { return *rs_; }
  const std::shared_ptr<const RootSystem<Scalar>>& root_system_ptr() const noexcept { return rs_; }
  CartanType type() const noexcept { return rs_->type(); }
  int beta() const noexcept { return beta_; }
  bool included(int i) const noexcept { return i != beta_; }

  std::vector<int> included_set() const {
    std::vector<int> s;
    for (int i = 0; i < rs_->rank(); ++i)
      if (included(i)) s.push_back(i);
    return s;
  }

  /// Root k lies in R_P (its beta-coefficient vanishes).
  bool root_in_parabolic(int k) const { return rs_->root(k)(beta_) == 0; }

  /// w_0 of the full group.
  const WeylElement<Scalar>& longest() const noexcept { return longest_; }

 private:
  std::shared_ptr<const RootSystem<Scalar>> rs_;
  int beta_;
  WeylElement<Scalar> longest_;
};

enum class Grading { Dimension, Codimension };

inline Grading flip(Grading g) {
  return g == Grading::Dimension ? Grading::Codimension : Grading::Dimension;
}

/// sigma(u) (dimension-graded) or sigma_u (codimension-graded); level is l(u).
template <ExactScalar Scalar>
struct SchubertClass {
  WeylElement<Scalar> rep;
  Grading grading = Grading::Codimension;
  int level = 0;

  friend bool operator==(const SchubertClass& a, const SchubertClass& b) {
    return a.grading == b.grading && a.rep == b.rep;
  }
};

struct SpaceInvariants {
  int complex_dimension = 0;
  int index = 0;
  std::uint64_t schubert_count = 0;
};

/// w(alpha_i) positive for every i in S.
template <ExactScalar Scalar>
bool is_minimal_rep(const ParabolicChoice<Scalar>& p, const WeylElement<Scalar>& w) {
  for (int i = 0; i < w.rank(); ++i)
    if (p.included(i) && !is_positive(w.matrix().col(i))) return false;
  return true;
}

template <ExactScalar Scalar>
WeylElement<Scalar> minimal_coset_rep(const WeylElement<Scalar>& w, const ParabolicChoice<Scalar>& p) {
  const auto& rs = p.root_system();
  if (w.type() != rs.type()) throw SystemMismatch("element does not belong to " + to_string(rs.type()));
  WeylElement<Scalar> r = w;
  for (;;) {
    int descent = -1;
    for (int i = 0; i < rs.rank() && descent < 0; ++i)
      if (p.included(i) && r.has_right_descent(i)) descent = i;
    if (descent < 0) return r;
    r = times_simple(rs, r, descent);
  }
}

template <ExactScalar Scalar>
SchubertClass<Scalar> schubert_class(const ParabolicChoice<Scalar>& p, const WeylElement<Scalar>& w,
                                     Grading grading = Grading::Codimension) {
  auto rep = minimal_coset_rep(w, p);
  const int level = length(p.root_system(), rep);
  return SchubertClass<Scalar>{std::move(rep), grading, level};
}

/// Complex dimension n = |R+| - |R_P+|.
template <ExactScalar Scalar>
int complex_dimension(const ParabolicChoice<Scalar>& p) {
  int n = 0;
  for (int k = 0; k < p.root_system().num_positive_roots(); ++k)
    if (!p.root_in_parabolic(k)) ++n;
  return n;
}

/// c_1 on the curve generator: the sum of R+ \ R_P+ paired with beta^vee.
template <ExactScalar Scalar>
int fano_index(const ParabolicChoice<Scalar>& p) {
  const auto& rs = p.root_system();
  Scalar total = 0;
  for (int k = 0; k < rs.num_positive_roots(); ++k)
    if (!p.root_in_parabolic(k)) total += rs.pair_simple_coroot(rs.root(k), p.beta());
  return static_cast<int>(total);
}

/// The class of a point, sigma_{[w_0]} of codimension n.
template <ExactScalar Scalar>
SchubertClass<Scalar> point_class(const ParabolicChoice<Scalar>& p) {
  return schubert_class(p, p.longest(), Grading::Codimension);
}

template <ExactScalar Scalar>
SchubertClass<Scalar> fundamental_class(const ParabolicChoice<Scalar>& p) {
  return SchubertClass<Scalar>{WeylElement<Scalar>::identity(p.root_system()), Grading::Codimension, 0};
}

/// The minimal coset representatives W^P, in enumeration order (so graded by level).
template <ExactScalar Scalar>
std::vector<SchubertClass<Scalar>> enumerate_schubert_basis(const ParabolicChoice<Scalar>& p,
                                                            const GroupEnumeration<Scalar>& group,
                                                            Grading grading = Grading::Codimension) {
  std::vector<SchubertClass<Scalar>> basis;
  for (std::size_t k = 0; k < group.order(); ++k)
    if (is_minimal_rep(p, group.elements[k]))
      basis.push_back(SchubertClass<Scalar>{group.elements[k], grading, group.lengths[k]});
  return basis;
}

template <ExactScalar Scalar>
std::vector<SchubertClass<Scalar>> enumerate_schubert_basis(const ParabolicChoice<Scalar>& p,
                                                            std::uint64_t cap = kDefaultEnumerationCap,
                                                            Grading grading = Grading::Codimension) {
  return enumerate_schubert_basis(p, enumerate_group(p.root_system(), cap), grading);
}

/// u -> u^vee = [w_0 u], with the grading flipped: sigma(u) = sigma_{u^vee}.
template <ExactScalar Scalar>
SchubertClass<Scalar> dual_class(const SchubertClass<Scalar>& u, const ParabolicChoice<Scalar>& p) {
  return schubert_class(p, p.longest() * u.rep, flip(u.grading));
}

template <ExactScalar Scalar>
SpaceInvariants space_invariants(const ParabolicChoice<Scalar>& p,
                                 const std::vector<SchubertClass<Scalar>>& basis) {
  return SpaceInvariants{complex_dimension(p), fano_index(p), basis.size()};
}

template <ExactScalar Scalar>
SpaceInvariants space_invariants(const ParabolicChoice<Scalar>& p,
                                 std::uint64_t cap = kDefaultEnumerationCap) {
  return space_invariants(p, enumerate_schubert_basis(p, cap));
}

/// v = [u~ s_beta]^vee, keeping the grading of u. The lift u~ is the minimal representative
/// unless s_beta is a right descent of it, in which case the maximal element of the coset is
/// used so that u~ s_beta steps down one level. For u = [w_0] this gives [s_beta], the divisor.
template <ExactScalar Scalar>
SchubertClass<Scalar> adjacent_partner(const SchubertClass<Scalar>& u, const ParabolicChoice<Scalar>& p) {
  const auto& rs = p.root_system();
  WeylElement<Scalar> lift = u.rep;
  // max of u W_P = w_0 * min(w_0 u W_P)
  if (u.rep.has_right_descent(p.beta())) lift = p.longest() * minimal_coset_rep(p.longest() * u.rep, p);
  const auto shifted = schubert_class(p, times_simple(rs, lift, p.beta()), flip(u.grading));
  return dual_class(shifted, p);
}

/// The beta-coefficient of the highest root is 1 exactly for the cominuscule nodes, i.e. when
/// G/P is a compact Hermitian symmetric space.
template <ExactScalar Scalar>
bool is_hermitian_symmetric(const ParabolicChoice<Scalar>& p) {
  return p.root_system().highest_root()(p.beta()) == 1;
}

}  // namespace qchev
