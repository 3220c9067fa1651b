#include <doctest.h>

#include <random>

#include "qchev/weyl.hpp"

using namespace qchev;

namespace {

std::vector<CartanType> types_up_to(int max_rank) {
  std::vector<CartanType> out;
  for (Family f : {Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G})
    for (int n = 1; n <= max_rank; ++n)
      if (rank_admissible(f, n)) out.push_back({f, n});
  return out;
}

}  // namespace

TEST_CASE("multiply: involution, braid, identity") {
  const auto rs = build_root_system<int>({Family::A, 2});
  const auto s1 = simple_reflection(rs, 0);
  const auto s2 = simple_reflection(rs, 1);
  const auto e = WeylElement<int>::identity(rs);
  CHECK(s1 * s1 == e);
  CHECK(s1 * s2 * s1 == s2 * s1 * s2);
  CHECK(e * s2 == s2);
  CHECK(times_simple(rs, s1, 1) == s1 * s2);

  const auto b2 = build_root_system<int>({Family::B, 2});
  const auto t1 = simple_reflection(b2, 0);
  const auto t2 = simple_reflection(b2, 1);
  CHECK((t1 * t2) * (t1 * t2) == (t2 * t1) * (t2 * t1));  // m = 4
  CHECK_THROWS_AS(multiply(s1, t1), SystemMismatch);
  CHECK_THROWS_AS(length(b2, s1), SystemMismatch);
}

TEST_CASE("length") {
  const auto rs = build_root_system<int>({Family::A, 2});
  CHECK(length(rs, WeylElement<int>::identity(rs)) == 0);
  for (auto t : types_up_to(8)) {
    const auto r = build_root_system<int>(t);
    for (int i = 0; i < t.rank; ++i) CHECK(length(r, simple_reflection(r, i)) == 1);
  }
}

TEST_CASE("longest element") {
  const auto a1 = build_root_system<int>({Family::A, 1});
  CHECK(longest_element(a1) == simple_reflection(a1, 0));

  const auto a2 = build_root_system<int>({Family::A, 2});
  const auto w0 = longest_element(a2);
  CHECK(length(a2, w0) == 3);
  for (int k = 0; k < 3; ++k) CHECK(is_negative(w0(a2.root(k))));

  const auto f4 = build_root_system<int>({Family::F, 4});
  CHECK(length(f4, longest_element(f4)) == 24);

  for (auto t : types_up_to(8)) {
    CAPTURE(to_string(t));
    const auto r = build_root_system<int>(t);
    const auto w = longest_element(r);
    CHECK(length(r, w) == r.num_positive_roots());
    CHECK((w * w).is_identity());
  }
}

TEST_CASE("reflections from roots") {
  const auto a2 = build_root_system<int>({Family::A, 2});
  for (int i = 0; i < 2; ++i) CHECK(reflection_from_root(a2, a2.root(i)) == simple_reflection(a2, i));
  const auto s1 = simple_reflection(a2, 0), s2 = simple_reflection(a2, 1);
  CHECK(reflection_from_root(a2, Eigen::Vector2i(1, 1)) == s1 * s2 * s1);
  CHECK_THROWS_AS(reflection_from_root(a2, Eigen::Vector2i(2, 1)), NotARoot);
  CHECK_THROWS_AS(reflection_from_root(a2, Eigen::Vector2i(-1, 0)), NotARoot);

  for (auto t : types_up_to(6)) {
    CAPTURE(to_string(t));
    const auto r = build_root_system<int>(t);
    for (int k = 0; k < r.num_positive_roots(); ++k) {
      const auto s = reflection_from_root_index(r, k);
      CHECK((s * s).is_identity());
      CHECK(length(r, s) % 2 == 1);
      CHECK(is_negative(s(r.root(k))));
      // s_{s_i(alpha)} = s_i s_alpha s_i
      for (int i = 0; i < t.rank; ++i) {
        const auto si = simple_reflection(r, i);
        const VectorX<int> moved = si(r.root(k));
        if (!is_positive(moved)) continue;
        CHECK(reflection_from_root(r, moved) == si * s * si);
      }
    }
  }
}

TEST_CASE("reduced words") {
  const auto e6 = build_root_system<int>({Family::E, 6});
  const auto w0 = longest_element(e6);
  const auto word = reduced_word(e6, w0);
  CHECK(word.size() == 36);
  CHECK(from_word(e6, word) == w0);
}

TEST_CASE("enumerate_group orders") {
  CHECK(enumerate_group(build_root_system<int>({Family::A, 2})).order() == 6);
  CHECK(enumerate_group(build_root_system<int>({Family::F, 4})).order() == 1152);
  CHECK(weyl_order_formula({Family::F, 4}) == 2 * 6 * 8 * 12);

  const auto e6 = build_root_system<int>({Family::E, 6});
  try {
    enumerate_group(e6, 1000);
    FAIL("expected CapExceeded");
  } catch (const CapExceeded& e) {
    CHECK(e.order_lower_bound() > 1000);
    CHECK(e.cap() == 1000);
  }
  CHECK_THROWS_AS(enumerate_group(e6, 0), Error);
}

TEST_CASE("enumerate_group matches the degree product for rank <= 6") {
  for (auto t : types_up_to(6)) {
    CAPTURE(to_string(t));
    const auto r = build_root_system<int>(t);
    CHECK(enumerate_group(r).order() == weyl_order_formula(t));
  }
}

TEST_CASE_TEMPLATE("enumeration is independent of the integer scalar", Scalar, int, long long, short) {
  for (CartanType t : {CartanType{Family::B, 3}, CartanType{Family::G, 2}, CartanType{Family::D, 4}}) {
    const auto r = build_root_system<Scalar>(t);
    const auto g = enumerate_group(r);
    CHECK(g.order() == weyl_order_formula(t));
    CHECK(g.lengths.back() == r.num_positive_roots());
  }
}

TEST_CASE("enumeration invariants") {
  for (auto t : types_up_to(4)) {
    CAPTURE(to_string(t));
    const auto r = build_root_system<int>(t);
    const auto g = enumerate_group(r);
    const auto w0 = longest_element(r);
    const int top = r.num_positive_roots();

    std::unordered_set<WeylElement<int>, WeylElementHash<int>> set(g.elements.begin(), g.elements.end());
    CHECK(set.size() == g.order());
    CHECK(g.elements.front().is_identity());

    for (std::size_t k = 0; k < g.order(); ++k) {
      const auto& w = g.elements[k];
      CHECK(g.lengths[k] == length(r, w));
      if (k > 0) {
        const bool ordered = g.lengths[k - 1] < g.lengths[k] ||
                             (g.lengths[k - 1] == g.lengths[k] && lex_less(g.elements[k - 1], w));
        CHECK(ordered);
      }
      for (int i = 0; i < t.rank; ++i) {
        const auto ws = times_simple(r, w, i);
        CHECK(set.count(ws) == 1);
        CHECK(std::abs(length(r, ws) - g.lengths[k]) == 1);
      }
      if (g.order() <= 1000) CHECK(length(r, w0 * w) == top - g.lengths[k]);
    }
  }
}

TEST_CASE("random elements permute the root system") {
  std::mt19937 rng(11);
  for (CartanType t : {CartanType{Family::E, 6}, CartanType{Family::F, 4}, CartanType{Family::C, 5}}) {
    const auto r = build_root_system<int>(t);
    std::uniform_int_distribution<int> node(0, t.rank - 1);
    for (int trial = 0; trial < 50; ++trial) {
      auto w = WeylElement<int>::identity(r);
      for (int step = 0; step < 30; ++step) w = times_simple(r, w, node(rng));
      for (int k = 0; k < r.num_positive_roots(); ++k) {
        const VectorX<int> image = w(r.root(k));
        CHECK((r.find_root(image) || r.find_root(VectorX<int>(-image))));
      }
    }
  }
}
