#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "fock2/enumerate.hpp"
#include "fock2/fock.hpp"
#include "fock2/partition.hpp"
#include "fock2/text.hpp"

using namespace fock2;

namespace {

// Independent transpose oracle: count boxes per column.
Partition transpose_by_columns(const Partition& p) {
  std::vector<int> cols(static_cast<std::size_t>(p.cols()), 0);
  for (int r = 1; r <= p.rows(); ++r)
    for (int c = 1; c <= p.part(r); ++c) cols[static_cast<std::size_t>(c) - 1] += 1;
  return Partition(std::move(cols));
}

}  // namespace

TEST_CASE("transpose examples") {
  CHECK(Partition{5, 4, 2, 2}.transposed() == Partition{4, 4, 2, 2, 1});
  CHECK(Partition{}.transposed() == Partition{});
  CHECK(Partition{6, 6, 6, 6, 5, 5, 5}.transposed() ==
        transpose_by_columns(Partition{6, 6, 6, 6, 5, 5, 5}));
  CHECK(Partition{6, 6, 6, 6, 5, 5, 5}.transposed() == Partition{7, 7, 7, 7, 7, 4});
}

TEST_CASE("transpose is an involution up to size 20") {
  for (int n = 0; n <= 20; ++n) {
    for (const Partition& p : partitions_of(n)) {
      CHECK(p.transposed().transposed() == p);
      CHECK(p.transposed() == transpose_by_columns(p));
    }
  }
}

TEST_CASE("partition validation") {
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({2, -1}), std::invalid_argument);
  CHECK(Partition({3, 2, 0, 0}) == Partition{3, 2});
  CHECK(Partition{4}.is_rectangle());
  CHECK(Partition{2, 2, 2}.is_rectangle());
  CHECK_FALSE(Partition{2, 1}.is_rectangle());
  CHECK_FALSE(Partition{}.is_rectangle());
}

TEST_CASE("removable and addable boxes") {
  // three removable boxes of ((5,3),(2)) at s=(0,1), e=6, residues 4, 1, 2
  Bipartition nu{{5, 3}, {2}};
  FockParam param(6, 1);
  auto rems = removable_boxes(nu);
  REQUIRE(rems.size() == 3);
  std::multiset<int> residues;
  for (const Box& b : rems) residues.insert(param.residue(charged_content(b, param)));
  CHECK(residues == std::multiset<int>{1, 2, 4});

  CHECK(removable_boxes(Bipartition{}).empty());

  Bipartition ones{{1}, {1}};
  FockParam p01(6, 1);
  auto r2 = removable_boxes(ones);
  REQUIRE(r2.size() == 2);
  CHECK(charged_content(r2[0], p01) == 0);
  CHECK(charged_content(r2[1], p01) == 1);
}

TEST_CASE("removable and addable sets are disjoint and inverse") {
  for (int n = 0; n <= 6; ++n) {
    for (const Bipartition& bp : bipartitions_of(n)) {
      auto rems = removable_boxes(bp);
      auto adds = addable_boxes(bp);
      for (const Box& r : rems)
        for (const Box& a : adds) CHECK_FALSE(r == a);
      for (const Box& r : rems) CHECK(add_box(remove_box(bp, r), r) == bp);
      for (const Box& a : adds) CHECK(remove_box(add_box(bp, a), a) == bp);
    }
  }
}

TEST_CASE("marked boxes") {
  SECTION("rectangle: b2 = b4 = b5") {
    auto mb = marked_boxes({{6, 6, 6, 6}, {}});
    REQUIRE(mb.b1);
    CHECK(mb.b1->content() == 5);
    REQUIRE(mb.b2);
    CHECK(mb.b2->content() == 2);
    CHECK(mb.b2 == mb.b4);
    CHECK(mb.b2 == mb.b5);
    CHECK_FALSE(mb.b1p);
  }
  SECTION("single box") {
    auto mb = marked_boxes({{1}, {}});
    CHECK(mb.b1 == mb.b2);
    CHECK(mb.b2 == mb.b4);
    CHECK(mb.b4 == mb.b5);
    CHECK(mb.b1->content() == 0);
  }
  SECTION("two components") {
    auto mb = marked_boxes({{3, 3}, {1}});
    CHECK(mb.b1->content() == 2);
    CHECK(mb.b2->content() == 1);
    CHECK(mb.b4->content() == -1);
    CHECK(mb.b1p->content() == 0);
    CHECK(mb.b2p->content() == 0);
    CHECK(mb.b4p->content() == 0);
  }
  SECTION("all fields absent on empty components") {
    auto mb = marked_boxes({});
    CHECK_FALSE(mb.b1);
    CHECK_FALSE(mb.b1p);
  }
  SECTION("rectangles always collapse b2, b4, b5") {
    for (int q = 1; q <= 5; ++q)
      for (int r = 1; r <= 5; ++r) {
        auto mb = marked_boxes({Partition(std::vector<int>(r, q)), {}});
        CHECK(mb.b2 == mb.b4);
        CHECK(mb.b2 == mb.b5);
      }
  }
}

TEST_CASE("c-function") {
  CHECK(c_function({}, FockParam(3, 1)) == Rational(0));
  CHECK(c_function({{3}, {}}, FockParam(5, 3)) == Rational(0));
  // c((q^r), empty) = 0 exactly at s = e + r - q
  for (int e = 2; e <= 6; ++e)
    for (int q = 1; q <= 6; ++q)
      for (int r = 1; r <= 6; ++r) {
        Bipartition lam{Partition(std::vector<int>(r, q)), {}};
        CHECK(c_function(lam, FockParam(e, e + r - q)) == Rational(0));
        CHECK(c_function(lam, FockParam(e, e + r - q + 1)) != Rational(0));
      }
}

TEST_CASE("fock parameters") {
  FockParam p(5, 3);
  CHECK(p.c() == Rational(1, 5));
  CHECK(p.d() == Rational(1, 10));
  CHECK(FockParam::from_charges(5, 2, 5) == p);
  CHECK(FockParam(3, 1).d() == Rational(-1, 6));
  CHECK_THROWS_AS(FockParam(1, 0), std::invalid_argument);
  CHECK(p.residue(-7) == 3);
  CHECK(p.residue(7) == 2);
}

TEST_CASE("canonical text round trip") {
  for (const char* text : {"-|-", "(1)|-", "-|(2,1)", "(5,4,2,2)|(4,3,2,2)", "(3,3)|(1)"}) {
    CHECK(format_bipartition(parse_bipartition(text)) == text);
  }
  CHECK_THROWS_AS(parse_bipartition("(3,-1)|-"), std::invalid_argument);
  CHECK_THROWS_AS(parse_bipartition("(3,4)|-"), std::invalid_argument);
  CHECK_THROWS_AS(parse_bipartition("(3)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_bipartition("()|-"), std::invalid_argument);
  CHECK_THROWS_AS(parse_partition("(a)"), std::invalid_argument);
}

TEST_CASE("bipartition enumeration order") {
  auto b2 = bipartitions_of(2);
  REQUIRE(b2.size() == 5);
  CHECK(b2[0] == Bipartition{{}, {1, 1}});
  CHECK(b2[1] == Bipartition{{}, {2}});
  CHECK(b2[2] == Bipartition{{1}, {1}});
  CHECK(b2[3] == Bipartition{{1, 1}, {}});
  CHECK(b2[4] == Bipartition{{2}, {}});
  // p2(n) for n = 0..9
  std::vector<std::size_t> expect{1, 2, 5, 10, 20, 36, 65, 110, 185, 300};
  for (int n = 0; n <= 9; ++n) CHECK(bipartitions_of(n).size() == expect[static_cast<std::size_t>(n)]);
}
