#pragma once

/*
  Finite crystallographic root systems in simple-root coordinates.

  Conventions (Bourbaki numbering, 0-based in the C++ API):
    cartan(i, j) = <alpha_j, alpha_i^vee> = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i)
    s_i(alpha_j) = alpha_j - cartan(i, j) alpha_i

    A_n  o---o---o-- ... --o            B_n  o---o-- ... --o=>=o   (last node short)
         1   2   3         n                 1   2        n-1  n

    C_n  o---o-- ... --o=<=o            D_n  o---o-- ... --o---o n-1
         1   2        n-1  n   (long)        1   2        n-2  \
                                                                o n
    E_n  o---o---o---o-- ... --o        F_4  o---o=>=o---o     G_2  o=<=o
         1   3   4   5         n             1   2   3   4          1   2
                 |                                                 (2 long)
                 o 2
*/

#include <Eigen/Core>

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "qchev/errors.hpp"

namespace qchev {

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
concept ExactScalar = std::integral<Scalar> && std::is_signed_v<Scalar>;

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct CartanType {
  Family family = Family::A;
  int rank = 1;

  friend bool operator==(const CartanType&, const CartanType&) = default;
  friend auto operator<=>(const CartanType&, const CartanType&) = default;
};

inline bool rank_admissible(Family family, int rank) {
  switch (family) {
    case Family::A: return rank >= 1;
    case Family::B: return rank >= 2;
    case Family::C: return rank >= 2;
    case Family::D: return rank >= 4;
    case Family::E: return rank >= 6 && rank <= 8;
    case Family::F: return rank == 4;
    case Family::G: return rank == 2;
  }
  return false;
}

inline std::string to_string(CartanType t) {
  return std::string(1, static_cast<char>(t.family)) + std::to_string(t.rank);
}

inline std::optional<Family> family_from_char(char c) {
  switch (c) {
    case 'A': return Family::A;
    case 'B': return Family::B;
    case 'C': return Family::C;
    case 'D': return Family::D;
    case 'E': return Family::E;
    case 'F': return Family::F;
    case 'G': return Family::G;
    default: return std::nullopt;
  }
}

inline void validate(CartanType t) {
  if (!rank_admissible(t.family, t.rank))
    throw InvalidRank("rank " + std::to_string(t.rank) + " is not admissible for family " +
                      std::string(1, static_cast<char>(t.family)));
}

template <ExactScalar Scalar>
MatrixX<Scalar> cartan_matrix(CartanType t) {
  validate(t);
  const int n = t.rank;
  MatrixX<Scalar> c = MatrixX<Scalar>::Zero(n, n);
  for (int i = 0; i < n; ++i) c(i, i) = 2;
  auto bond = [&c](int i, int j) { c(i, j) = c(j, i) = -1; };

  switch (t.family) {
    case Family::A:
    case Family::B:
    case Family::C:
      for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
      if (t.family == Family::B) c(n - 1, n - 2) = -2;
      if (t.family == Family::C) c(n - 2, n - 1) = -2;
      break;
    case Family::D:
      for (int i = 0; i + 2 < n; ++i) bond(i, i + 1);
      bond(n - 3, n - 1);
      break;
    case Family::E:
      bond(0, 2);
      bond(1, 3);
      for (int i = 2; i + 1 < n; ++i) bond(i, i + 1);
      break;
    case Family::F:
      bond(0, 1);
      bond(1, 2);
      bond(2, 3);
      c(2, 1) = -2;
      break;
    case Family::G:
      c(0, 1) = -3;
      c(1, 0) = -1;
      break;
  }
  return c;
}

/// +1 for a nonzero vector with nonnegative entries, -1 for nonpositive, 0 otherwise.
template <typename Derived>
int root_sign(const Eigen::MatrixBase<Derived>& v) {
  bool pos = false, neg = false;
  for (Eigen::Index k = 0; k < v.size(); ++k) {
    if (v(k) > 0) pos = true;
    if (v(k) < 0) neg = true;
  }
  if (pos && !neg) return 1;
  if (neg && !pos) return -1;
  return 0;
}

template <typename Derived>
bool is_positive(const Eigen::MatrixBase<Derived>& v) { return root_sign(v) > 0; }
template <typename Derived>
bool is_negative(const Eigen::MatrixBase<Derived>& v) { return root_sign(v) < 0; }

/// Coordinates of a weight in the fundamental-weight basis.
template <ExactScalar Scalar>
struct Weight {
  VectorX<Scalar> coords;
};

template <ExactScalar Scalar>
Weight<Scalar> fundamental_weight(int rank, int i) {
  if (i < 0 || i >= rank) throw IndexOutOfRange("fundamental weight index " + std::to_string(i));
  Weight<Scalar> w{VectorX<Scalar>::Zero(rank)};
  w.coords(i) = 1;
  return w;
}

/// <w, cv> for a weight in the fundamental basis and a coroot in simple-coroot coordinates.
template <ExactScalar Scalar, typename Derived>
Scalar pair_weight_coroot(const Weight<Scalar>& w, const Eigen::MatrixBase<Derived>& coroot) {
  if (w.coords.size() != coroot.size())
    throw DimensionMismatch("weight has " + std::to_string(w.coords.size()) +
                            " coordinates, coroot has " + std::to_string(coroot.size()));
  return w.coords.dot(coroot.template cast<Scalar>());
}

/// Positive roots and coroots of a finite root system, generated by reflection closure.
///
/// Roots are the columns of positive_roots() in simple-root coordinates; column k of
/// positive_coroots() is the coroot of root k in simple-coroot coordinates. Order is by
/// height, then reverse-lexicographic coordinates, so the first rank() columns are the
/// simple roots in node order.
template <ExactScalar Scalar>
class RootSystem {
 public:
  using Matrix = MatrixX<Scalar>;
  using Vector = VectorX<Scalar>;

  explicit RootSystem(CartanType t) : type_(t), cartan_(cartan_matrix<Scalar>(t)) { generate(); }

  CartanType type() const noexcept { return type_; }
  int rank() const noexcept { return type_.rank; }
  const Matrix& cartan() const noexcept { return cartan_; }
  const Matrix& positive_roots() const noexcept { return roots_; }
  const Matrix& positive_coroots() const noexcept { return coroots_; }
  int num_positive_roots() const noexcept { return static_cast<int>(roots_.cols()); }

  auto root(int k) const { return roots_.col(k); }
  auto coroot(int k) const { return coroots_.col(k); }

  /// Index of a positive root given by its coordinates.
  template <typename Derived>
  std::optional<int> find_root(const Eigen::MatrixBase<Derived>& v) const {
    if (v.size() != rank()) return std::nullopt;
    auto it = index_.find(key(v));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  /// <x, alpha_i^vee> for x in simple-root coordinates.
  template <typename Derived>
  Scalar pair_simple_coroot(const Eigen::MatrixBase<Derived>& x, int i) const {
    return cartan_.row(i).dot(x.template cast<Scalar>());
  }

  /// <x, cv> for x in simple-root coordinates and cv in simple-coroot coordinates.
  template <typename D1, typename D2>
  Scalar pair_root_coroot(const Eigen::MatrixBase<D1>& x, const Eigen::MatrixBase<D2>& cv) const {
    return (cv.template cast<Scalar>().transpose() * cartan_ * x.template cast<Scalar>())(0, 0);
  }

  /// The positive root of maximal height.
  auto highest_root() const { return roots_.col(roots_.cols() - 1); }

 private:
  template <typename Derived>
  static std::vector<Scalar> key(const Eigen::MatrixBase<Derived>& v) {
    std::vector<Scalar> k(static_cast<std::size_t>(v.size()));
    for (Eigen::Index i = 0; i < v.size(); ++i) k[static_cast<std::size_t>(i)] = v(i);
    return k;
  }

  void generate() {
    const int n = rank();
    using Pair = std::pair<Vector, Vector>;
    std::vector<Pair> found;
    std::map<std::vector<Scalar>, int> seen;
    for (int i = 0; i < n; ++i) {
      Vector e = Vector::Zero(n);
      e(i) = 1;
      seen.emplace(key(e), static_cast<int>(found.size()));
      found.emplace_back(e, e);
    }
    // Breadth-first reflection orbit; s_j(alpha) for positive alpha != alpha_j stays positive.
    for (std::size_t head = 0; head < found.size(); ++head) {
      for (int j = 0; j < n; ++j) {
        const Vector root = found[head].first;
        const Vector coroot = found[head].second;
        Vector r = root;
        r(j) -= cartan_.row(j).dot(root);
        if (!is_positive(r) || seen.count(key(r))) continue;
        Vector cv = coroot;
        cv(j) -= cartan_.col(j).dot(coroot);
        seen.emplace(key(r), static_cast<int>(found.size()));
        found.emplace_back(std::move(r), std::move(cv));
      }
    }

    std::sort(found.begin(), found.end(), [](const Pair& a, const Pair& b) {
      const Scalar ha = a.first.sum(), hb = b.first.sum();
      if (ha != hb) return ha < hb;
      return std::lexicographical_compare(b.first.data(), b.first.data() + b.first.size(),
                                          a.first.data(), a.first.data() + a.first.size());
    });

    roots_.resize(n, static_cast<Eigen::Index>(found.size()));
    coroots_.resize(n, static_cast<Eigen::Index>(found.size()));
    for (std::size_t k = 0; k < found.size(); ++k) {
      roots_.col(static_cast<Eigen::Index>(k)) = found[k].first;
      coroots_.col(static_cast<Eigen::Index>(k)) = found[k].second;
      index_.emplace(key(found[k].first), static_cast<int>(k));
    }
  }

  CartanType type_;
  Matrix cartan_;
  Matrix roots_;
  Matrix coroots_;
  std::map<std::vector<Scalar>, int> index_;
};

template <ExactScalar Scalar>
RootSystem<Scalar> build_root_system(CartanType t) {
  return RootSystem<Scalar>(t);
}

template <ExactScalar Scalar>
std::shared_ptr<const RootSystem<Scalar>> make_root_system(CartanType t) {
  return std::make_shared<const RootSystem<Scalar>>(t);
}

/// Matrix of s_i on simple-root coordinates (column j is s_i(alpha_j)).
template <ExactScalar Scalar>
MatrixX<Scalar> simple_reflection_action(const RootSystem<Scalar>& rs, int i) {
  const int n = rs.rank();
  if (i < 0 || i >= n) throw IndexOutOfRange("simple reflection index " + std::to_string(i));
  MatrixX<Scalar> s = MatrixX<Scalar>::Identity(n, n);
  s.row(i) -= rs.cartan().row(i);
  return s;
}

/// Number of positive roots, per family.
inline long expected_positive_root_count(CartanType t) {
  const long n = t.rank;
  switch (t.family) {
    case Family::A: return n * (n + 1) / 2;
    case Family::B:
    case Family::C: return n * n;
    case Family::D: return n * (n - 1);
    case Family::E: return n == 6 ? 36 : n == 7 ? 63 : 120;
    case Family::F: return 24;
    case Family::G: return 6;
  }
  return 0;
}

}  // namespace qchev
