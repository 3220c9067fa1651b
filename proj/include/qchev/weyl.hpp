#pragma once

#include <Eigen/Core>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <unordered_set>
#include <vector>

#include "qchev/cartan.hpp"
#include "qchev/errors.hpp"

namespace qchev {

inline constexpr std::uint64_t kDefaultEnumerationCap = 1'000'000;

/// A Weyl group element as its action on simple-root coordinates.
///
/// Column j of matrix() is w(alpha_j). The matrix is the canonical form: two elements are
/// equal exactly when their matrices are. The Cartan type is carried so that elements of
/// different groups are never composed.
template <ExactScalar Scalar>
class WeylElement {
 public:
  using Matrix = MatrixX<Scalar>;

  WeylElement(CartanType type, Matrix matrix) : type_(type), matrix_(std::move(matrix)) {}

  static WeylElement identity(const RootSystem<Scalar>& rs) {
    return WeylElement(rs.type(), Matrix::Identity(rs.rank(), rs.rank()));
  }

  CartanType type() const noexcept { return type_; }
  int rank() const noexcept { return static_cast<int>(matrix_.rows()); }
  const Matrix& matrix() const noexcept { return matrix_; }

  /// w(x) for x in simple-root coordinates.
  template <typename Derived>
  VectorX<Scalar> operator()(const Eigen::MatrixBase<Derived>& x) const {
    return matrix_ * x.template cast<Scalar>();
  }

  /// True when l(w s_i) < l(w), i.e. w(alpha_i) is negative.
  bool has_right_descent(int i) const { return is_negative(matrix_.col(i)); }

  bool is_identity() const { return matrix_.isIdentity(0); }

  friend bool operator==(const WeylElement& a, const WeylElement& b) {
    return a.type_ == b.type_ && a.matrix_ == b.matrix_;
  }

 private:
  CartanType type_;
  Matrix matrix_;
};

/// Lexicographic order on matrix entries (column-major), used for every deterministic ordering.
template <ExactScalar Scalar>
bool lex_less(const WeylElement<Scalar>& a, const WeylElement<Scalar>& b) {
  const auto& x = a.matrix();
  const auto& y = b.matrix();
  return std::lexicographical_compare(x.data(), x.data() + x.size(), y.data(), y.data() + y.size());
}

template <ExactScalar Scalar>
struct LexLess {
  bool operator()(const WeylElement<Scalar>& a, const WeylElement<Scalar>& b) const {
    return lex_less(a, b);
  }
};

template <ExactScalar Scalar>
struct WeylElementHash {
  std::size_t operator()(const WeylElement<Scalar>& w) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    const auto& m = w.matrix();
    for (Eigen::Index k = 0; k < m.size(); ++k) {
      h ^= std::hash<Scalar>{}(m.data()[k]) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

/// Composition as maps: (a * b)(x) = a(b(x)).
template <ExactScalar Scalar>
WeylElement<Scalar> multiply(const WeylElement<Scalar>& a, const WeylElement<Scalar>& b) {
  if (a.type() != b.type())
    throw SystemMismatch("cannot compose elements of " + to_string(a.type()) + " and " +
                         to_string(b.type()));
  return WeylElement<Scalar>(a.type(), a.matrix() * b.matrix());
}

template <ExactScalar Scalar>
WeylElement<Scalar> operator*(const WeylElement<Scalar>& a, const WeylElement<Scalar>& b) {
  return multiply(a, b);
}

template <ExactScalar Scalar>
WeylElement<Scalar> simple_reflection(const RootSystem<Scalar>& rs, int i) {
  return WeylElement<Scalar>(rs.type(), simple_reflection_action(rs, i));
}

/// w * s_i without a full matrix product.
template <ExactScalar Scalar>
WeylElement<Scalar> times_simple(const RootSystem<Scalar>& rs, const WeylElement<Scalar>& w, int i) {
  MatrixX<Scalar> m = w.matrix();
  // (w s_i)(alpha_j) = w(alpha_j) - C(i,j) w(alpha_i)
  const VectorX<Scalar> wi = m.col(i);
  for (int j = 0; j < rs.rank(); ++j) {
    const Scalar c = rs.cartan()(i, j);
    if (c != 0) m.col(j) -= c * wi;
  }
  return WeylElement<Scalar>(w.type(), std::move(m));
}

/// Number of positive roots sent to negative roots.
template <ExactScalar Scalar>
int length(const RootSystem<Scalar>& rs, const WeylElement<Scalar>& w) {
  if (w.type() != rs.type()) throw SystemMismatch("element does not belong to " + to_string(rs.type()));
  const MatrixX<Scalar> images = w.matrix() * rs.positive_roots();
  int count = 0;
  for (Eigen::Index k = 0; k < images.cols(); ++k)
    if (is_negative(images.col(k))) ++count;
  return count;
}

/// Greedy ascent: right-multiply by any s_i that increases length until none does.
template <ExactScalar Scalar>
WeylElement<Scalar> longest_element(const RootSystem<Scalar>& rs) {
  auto w = WeylElement<Scalar>::identity(rs);
  for (;;) {
    int ascent = -1;
    for (int i = 0; i < rs.rank() && ascent < 0; ++i)
      if (!w.has_right_descent(i)) ascent = i;
    if (ascent < 0) return w;
    w = times_simple(rs, w, ascent);
  }
}

/// s_alpha: x -> x - <x, alpha^vee> alpha.
template <ExactScalar Scalar, typename Derived>
WeylElement<Scalar> reflection_from_root(const RootSystem<Scalar>& rs,
                                         const Eigen::MatrixBase<Derived>& alpha) {
  const auto k = rs.find_root(alpha);
  if (!k) throw NotARoot("vector is not a positive root of " + to_string(rs.type()));
  const int n = rs.rank();
  const VectorX<Scalar> root = rs.root(*k);
  const VectorX<Scalar> coroot = rs.coroot(*k);
  MatrixX<Scalar> m = MatrixX<Scalar>::Identity(n, n);
  m -= root * (coroot.transpose() * rs.cartan());
  return WeylElement<Scalar>(rs.type(), std::move(m));
}

template <ExactScalar Scalar>
WeylElement<Scalar> reflection_from_root_index(const RootSystem<Scalar>& rs, int k) {
  return reflection_from_root(rs, rs.root(k));
}

/// A reduced word i_1 ... i_l (0-based node indices) with w = s_{i_1} ... s_{i_l}.
template <ExactScalar Scalar>
std::vector<int> reduced_word(const RootSystem<Scalar>& rs, WeylElement<Scalar> w) {
  std::vector<int> word;
  for (;;) {
    int descent = -1;
    for (int i = 0; i < rs.rank() && descent < 0; ++i)
      if (w.has_right_descent(i)) descent = i;
    if (descent < 0) break;
    word.push_back(descent);
    w = times_simple(rs, w, descent);
  }
  std::reverse(word.begin(), word.end());
  return word;
}

template <ExactScalar Scalar>
WeylElement<Scalar> from_word(const RootSystem<Scalar>& rs, const std::vector<int>& word) {
  auto w = WeylElement<Scalar>::identity(rs);
  for (int i : word) w = times_simple(rs, w, i);
  return w;
}

template <ExactScalar Scalar>
struct GroupEnumeration {
  std::vector<WeylElement<Scalar>> elements;
  std::vector<int> lengths;

  std::size_t order() const noexcept { return elements.size(); }
};

/// All of W, ordered by length and then lexicographically by matrix.
///
/// Breadth-first by right multiplication with simple reflections; the next layer is built only
/// from ascents w -> w s_i, so each layer holds exactly the elements of one length.
template <ExactScalar Scalar>
GroupEnumeration<Scalar> enumerate_group(const RootSystem<Scalar>& rs,
                                         std::uint64_t cap = kDefaultEnumerationCap) {
  if (cap == 0) throw Error("enumeration cap must be positive");
  GroupEnumeration<Scalar> out;
  std::vector<WeylElement<Scalar>> layer{WeylElement<Scalar>::identity(rs)};
  int level = 0;
  while (!layer.empty()) {
    std::sort(layer.begin(), layer.end(), LexLess<Scalar>{});
    for (auto& w : layer) {
      out.elements.push_back(w);
      out.lengths.push_back(level);
    }
    if (out.elements.size() > cap) throw CapExceeded(cap, out.elements.size());

    std::unordered_set<WeylElement<Scalar>, WeylElementHash<Scalar>> next;
    for (const auto& w : layer)
      for (int i = 0; i < rs.rank(); ++i)
        if (!w.has_right_descent(i)) next.insert(times_simple(rs, w, i));
    layer.assign(next.begin(), next.end());
    ++level;
  }
  return out;
}

/// Product of the fundamental degrees, i.e. |W|, per family.
inline std::uint64_t weyl_order_formula(CartanType t) {
  std::vector<std::uint64_t> degrees;
  const int n = t.rank;
  switch (t.family) {
    case Family::A:
      for (int d = 2; d <= n + 1; ++d) degrees.push_back(d);
      break;
    case Family::B:
    case Family::C:
      for (int d = 1; d <= n; ++d) degrees.push_back(2 * d);
      break;
    case Family::D:
      for (int d = 1; d < n; ++d) degrees.push_back(2 * d);
      degrees.push_back(n);
      break;
    case Family::E:
      if (n == 6) degrees = {2, 5, 6, 8, 9, 12};
      if (n == 7) degrees = {2, 6, 8, 10, 12, 14, 18};
      if (n == 8) degrees = {2, 8, 12, 14, 18, 20, 24, 30};
      break;
    case Family::F: degrees = {2, 6, 8, 12}; break;
    case Family::G: degrees = {2, 6}; break;
  }
  std::uint64_t order = 1;
  for (auto d : degrees) order *= d;
  return order;
}

}  // namespace qchev
