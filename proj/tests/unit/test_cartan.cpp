#include <doctest.h>

#include <random>
#include <set>
#include <vector>

#include <boost/rational.hpp>

#include "oracles.hpp"
#include "qchev/cartan.hpp"

using namespace qchev;

namespace {

std::vector<CartanType> all_types(int max_rank) {
  std::vector<CartanType> out;
  for (Family f : {Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G})
    for (int n = 1; n <= max_rank; ++n)
      if (rank_admissible(f, n)) out.push_back({f, n});
  return out;
}

std::set<std::vector<int>> column_set(const MatrixX<int>& m) {
  std::set<std::vector<int>> s;
  for (Eigen::Index k = 0; k < m.cols(); ++k) s.insert(std::vector<int>(m.col(k).data(), m.col(k).data() + m.rows()));
  return s;
}

}  // namespace

TEST_CASE("rank bounds per family") {
  for (CartanType bad : {CartanType{Family::A, 0}, CartanType{Family::B, 1}, CartanType{Family::C, 1},
                         CartanType{Family::D, 3}, CartanType{Family::E, 5}, CartanType{Family::E, 9},
                         CartanType{Family::F, 3}, CartanType{Family::G, 3}}) {
    CHECK_THROWS_AS(build_root_system<int>(bad), InvalidRank);
  }
  CHECK_NOTHROW(build_root_system<int>({Family::B, 2}));
  CHECK_NOTHROW(build_root_system<int>({Family::C, 2}));
}

TEST_CASE("A2 positive roots in order") {
  const auto rs = build_root_system<int>({Family::A, 2});
  REQUIRE(rs.num_positive_roots() == 3);
  CHECK(rs.root(0) == Eigen::Vector2i(1, 0));
  CHECK(rs.root(1) == Eigen::Vector2i(0, 1));
  CHECK(rs.root(2) == Eigen::Vector2i(1, 1));
}

TEST_CASE("root counts from closure") {
  CHECK(build_root_system<int>({Family::G, 2}).num_positive_roots() == 6);
  // (dim e6 - rank) / 2
  CHECK(build_root_system<int>({Family::E, 6}).num_positive_roots() == (78 - 6) / 2);
  for (auto t : all_types(8)) {
    CAPTURE(to_string(t));
    const auto rs = build_root_system<int>(t);
    CHECK(rs.num_positive_roots() == expected_positive_root_count(t));
  }
}

TEST_CASE("Cartan matrix shape and simple roots first") {
  for (auto t : all_types(8)) {
    CAPTURE(to_string(t));
    const auto rs = build_root_system<int>(t);
    const auto& c = rs.cartan();
    for (int i = 0; i < t.rank; ++i)
      for (int j = 0; j < t.rank; ++j) {
        if (i == j)
          CHECK(c(i, j) == 2);
        else
          CHECK(c(i, j) <= 0);
      }
    for (int i = 0; i < t.rank; ++i) CHECK(rs.root(i) == VectorX<int>::Unit(t.rank, i));
  }
}

TEST_CASE("Cartan matrix is symmetrized by the Dynkin squared lengths") {
  for (auto t : all_types(8)) {
    CAPTURE(to_string(t));
    const auto c = cartan_matrix<int>(t);
    const auto d = oracle::squared_lengths(t);
    for (int i = 0; i < t.rank; ++i)
      for (int j = 0; j < t.rank; ++j) CHECK(d[i] * c(i, j) == d[j] * c(j, i));
  }
}

TEST_CASE("closure: simple reflections permute roots up to sign") {
  for (auto t : all_types(7)) {
    CAPTURE(to_string(t));
    const auto rs = build_root_system<int>(t);
    for (int i = 0; i < t.rank; ++i) {
      const auto s = simple_reflection_action(rs, i);
      for (int k = 0; k < rs.num_positive_roots(); ++k) {
        const VectorX<int> image = s * rs.root(k);
        const bool found = rs.find_root(image).has_value() || rs.find_root(VectorX<int>(-image)).has_value();
        CHECK(found);
      }
    }
  }
}

TEST_CASE("coroots agree with 2 alpha / (alpha, alpha)") {
  using Q = boost::rational<long>;
  for (auto t : all_types(8)) {
    CAPTURE(to_string(t));
    const auto rs = build_root_system<int>(t);
    const auto d = oracle::squared_lengths(t);
    const auto& c = rs.cartan();
    for (int k = 0; k < rs.num_positive_roots(); ++k) {
      const auto a = rs.root(k);
      Q norm = 0;  // (alpha_i, alpha_j) = d_i C_ij / 2
      for (int i = 0; i < t.rank; ++i)
        for (int j = 0; j < t.rank; ++j) norm += Q(a(i) * a(j) * d[i] * c(i, j), 2);
      for (int i = 0; i < t.rank; ++i) {
        const Q expected = Q(a(i) * d[i]) / norm;
        CHECK(expected == Q(rs.coroot(k)(i)));
      }
    }
  }
}

TEST_CASE("coroot systems: simply-laced equal, B_n dual to C_n") {
  for (auto t : {CartanType{Family::A, 4}, CartanType{Family::D, 5}, CartanType{Family::E, 6}}) {
    const auto rs = build_root_system<int>(t);
    CHECK(rs.positive_roots() == rs.positive_coroots());
  }
  for (int n = 2; n <= 6; ++n) {
    const auto b = build_root_system<int>({Family::B, n});
    const auto c = build_root_system<int>({Family::C, n});
    CHECK(column_set(b.positive_coroots()) == column_set(c.positive_roots()));
    CHECK(column_set(c.positive_coroots()) == column_set(b.positive_roots()));
  }
}

TEST_CASE("pair_weight_coroot") {
  const auto rs = build_root_system<int>({Family::A, 2});
  const auto w1 = fundamental_weight<int>(2, 0);
  const auto w2 = fundamental_weight<int>(2, 1);
  CHECK(pair_weight_coroot(w1, rs.coroot(0)) == 1);
  // (alpha_1 + alpha_2)^vee = alpha_1^vee + alpha_2^vee
  CHECK(rs.coroot(2) == Eigen::Vector2i(1, 1));
  CHECK(pair_weight_coroot(w1, rs.coroot(2)) == 1);
  CHECK(pair_weight_coroot(w2, rs.coroot(0)) == 0);

  const auto g2 = build_root_system<int>({Family::G, 2});
  CHECK(pair_weight_coroot(fundamental_weight<int>(2, 1), g2.coroot(0)) == 0);

  CHECK_THROWS_AS(pair_weight_coroot(fundamental_weight<int>(3, 0), rs.coroot(0)), DimensionMismatch);
  CHECK_THROWS_AS(fundamental_weight<int>(2, 2), IndexOutOfRange);
}

TEST_CASE("pairing is bilinear") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> dist(-9, 9);
  for (int trial = 0; trial < 200; ++trial) {
    Weight<int> a{VectorX<int>(4)}, b{VectorX<int>(4)};
    VectorX<int> x(4), y(4);
    for (int i = 0; i < 4; ++i) {
      a.coords(i) = dist(rng);
      b.coords(i) = dist(rng);
      x(i) = dist(rng);
      y(i) = dist(rng);
    }
    const int s = dist(rng);
    const Weight<int> ab{a.coords + s * b.coords};
    CHECK(pair_weight_coroot(ab, x) == pair_weight_coroot(a, x) + s * pair_weight_coroot(b, x));
    CHECK(pair_weight_coroot(a, VectorX<int>(x + s * y)) == pair_weight_coroot(a, x) + s * pair_weight_coroot(a, y));
  }
}

TEST_CASE("simple reflection matrices") {
  const auto rs = build_root_system<int>({Family::A, 2});
  const auto s1 = simple_reflection_action(rs, 0);
  CHECK(s1 * rs.root(0) == Eigen::Vector2i(-1, 0));
  CHECK(s1 * rs.root(1) == Eigen::Vector2i(1, 1));
  CHECK((s1 * s1).isIdentity());
  CHECK_THROWS_AS(simple_reflection_action(rs, 2), IndexOutOfRange);
  CHECK_THROWS_AS(simple_reflection_action(rs, -1), IndexOutOfRange);

  for (auto t : all_types(8)) {
    const auto r = build_root_system<int>(t);
    for (int i = 0; i < t.rank; ++i) {
      const auto s = simple_reflection_action(r, i);
      CHECK((s * s).isIdentity());
    }
  }
}

TEST_CASE("non-simply-laced conventions") {
  // B2: alpha_1 long, alpha_2 short
  const auto b2 = build_root_system<int>({Family::B, 2});
  CHECK(b2.cartan()(0, 1) == -1);
  CHECK(b2.cartan()(1, 0) == -2);
  CHECK(b2.highest_root() == Eigen::Vector2i(1, 2));
  // G2: alpha_2 long, highest root 3 alpha_1 + 2 alpha_2
  const auto g2 = build_root_system<int>({Family::G, 2});
  CHECK(g2.highest_root() == Eigen::Vector2i(3, 2));
  // F4 highest root 2 3 4 2
  const auto f4 = build_root_system<int>({Family::F, 4});
  CHECK(f4.highest_root() == Eigen::Vector4i(2, 3, 4, 2));
  // E8 highest root in Bourbaki numbering
  const auto e8 = build_root_system<int>({Family::E, 8});
  VectorX<int> h(8);
  h << 2, 3, 4, 6, 5, 4, 3, 2;
  CHECK(e8.highest_root() == h);
}
