#include <catch2/catch_amalgamated.hpp>

#include "fock2/abacus.hpp"
#include "fock2/enumerate.hpp"
#include "fock2/text.hpp"

using namespace fock2;

namespace {

ChargedBipartition charged(const Bipartition& lam, int e, int s) {
  return charged_from_label(lam, FockParam(e, s));
}

}  // namespace

TEST_CASE("beta numbers of ((5,4,2,2),(4,3,2,2)) at charge (0,3)") {
  auto a = abacus_from(charged({{5, 4, 2, 2}, {4, 3, 2, 2}}, 4, 3));
  CHECK(a.row(1).sporadic() == std::vector<int>{4, 3, 0, -1, -3});
  CHECK(a.row(1).tail() == -5);
  CHECK(a.row(2).sporadic() == std::vector<int>{7, 6, 3, 1});
  CHECK(a.row(2).tail() == -1);
}

TEST_CASE("abacus of the empty bipartition is a pair of rays") {
  for (int s = -3; s <= 8; ++s) {
    auto a = abacus_from(charged({}, 3, s));
    CHECK(a.row(1).is_ray());
    CHECK(a.row(1).tail() == 0);
    CHECK(a.row(2).is_ray());
    CHECK(a.row(2).tail() == s);
  }
}

TEST_CASE("abacus of ((6,6,6,6), empty) at charge (0,3)") {
  auto a = abacus_from(charged({{6, 6, 6, 6}, {}}, 5, 3));
  CHECK(a.row(1).sporadic() == std::vector<int>{4, 3, 2, 1, 0, -1});
  CHECK(a.row(1).tail() == -6);
  CHECK(a.row(2).is_ray());
  CHECK(a.row(2).tail() == 3);
}

TEST_CASE("bipartition_from inverts abacus_from") {
  auto cb = charged({{5, 4, 2, 2}, {4, 3, 2, 2}}, 4, 3);
  CHECK(bipartition_from(abacus_from(cb)) == cb);
  CHECK(bipartition_from(abacus_from(cb)).nu == Bipartition{{4, 4, 2, 2, 1}, {4, 4, 2, 1}});

  // exhaustive round trip
  for (int s = -3; s <= 8; ++s) {
    FockParam param(3, s);
    for (int n = 0; n <= 10; ++n)
      for (const Bipartition& nu : bipartitions_of(n)) {
        ChargedBipartition cb2{nu, param};
        CHECK(bipartition_from(abacus_from(cb2)) == cb2);
      }
  }
}

TEST_CASE("abacus_from inverts bipartition_from on canonical abaci") {
  // any canonical pair of rows with matching charges is the abacus of some
  // charged bipartition
  Abacus a(AbacusRow(-2, {3, 1}), AbacusRow(0, {4, 2}), FockParam(3, 2));
  REQUIRE(a.row(1).charge() == 0);
  REQUIRE(a.row(2).charge() == 2);
  CHECK(abacus_from(bipartition_from(a)) == a);
}

TEST_CASE("bipartition_from rejects a charge mismatch") {
  // row charges (1, 0) cannot come from charge (0, 0)
  Abacus bad(AbacusRow(1, {}), AbacusRow(0, {}), FockParam(2, 0));
  CHECK_THROWS_AS(bipartition_from(bad), std::invalid_argument);
}

TEST_CASE("abacus row canonicalization and bead editing") {
  AbacusRow row(0, {3, 1});
  CHECK(row.charge() == 2);
  CHECK_FALSE(row.has_bead(2));
  CHECK(row.has_bead(-5));
  row.remove_bead(-2);  // digs into the tail
  CHECK(row.tail() == -3);
  CHECK(row.sporadic() == std::vector<int>{3, 1, 0, -1});
  row.add_bead(-2);
  CHECK(row.tail() == 1);
  CHECK(row.sporadic() == std::vector<int>{3});
  CHECK_THROWS_AS(row.add_bead(3), std::invalid_argument);
  CHECK_THROWS_AS(AbacusRow(0, {-1}), std::invalid_argument);
}

TEST_CASE("periods of ((6,6,6,6), empty) at e=5 match the drawn ones") {
  auto a = abacus_from(charged({{6, 6, 6, 6}, {}}, 5, 3));
  auto p1 = kth_e_period(a, 1);
  REQUIRE(p1);
  CHECK(p1->beads == std::vector<std::pair<int, int>>{{1, 4}, {1, 3}, {1, 2}, {1, 1}, {1, 0}});
  auto p2 = kth_e_period(a, 2);
  REQUIRE(p2);
  CHECK(p2->beads == std::vector<std::pair<int, int>>{{2, 3}, {2, 2}, {2, 1}, {2, 0}, {1, -1}});
  CHECK(is_totally_e_periodic(a));
}

TEST_CASE("periods of ((1,1,1), empty) at e=3 match the drawn ones") {
  auto a = abacus_from(ChargedBipartition{{{1, 1, 1}, {}}, FockParam(3, 1)});
  auto p1 = kth_e_period(a, 1);
  REQUIRE(p1);
  CHECK(p1->beads == std::vector<std::pair<int, int>>{{1, 1}, {1, 0}, {1, -1}});
  auto p2 = kth_e_period(a, 2);
  REQUIRE(p2);
  CHECK(p2->beads == std::vector<std::pair<int, int>>{{2, 1}, {2, 0}, {2, -1}});
  auto p3 = kth_e_period(a, 3);
  REQUIRE(p3);
  CHECK(p3->beads == std::vector<std::pair<int, int>>{{2, -2}, {1, -3}, {1, -4}});
  CHECK(is_totally_e_periodic(a));
}

TEST_CASE("total periodicity") {
  CHECK(is_totally_e_periodic(abacus_from(charged({}, 4, 2))));
  // fock vertex ((2,2,2),(2)) at charge (0,1), e=4
  CHECK(is_totally_e_periodic(abacus_from(ChargedBipartition{{{2, 2, 2}, {2}}, FockParam(4, 1)})));
  // a single column of length < e is not totally periodic
  CHECK_FALSE(is_totally_e_periodic(abacus_from(ChargedBipartition{{{1, 1}, {}}, FockParam(3, 0)})));
  CHECK(period_count_to_rays(abacus_from(charged({}, 4, 2))) == 0);
}

TEST_CASE("kth period requires all earlier periods") {
  // ((2,1), empty) at e=2, s=0: no first period exists
  auto a = abacus_from(ChargedBipartition{{{2, 1}, {}}, FockParam(2, 0)});
  CHECK_FALSE(kth_e_period(a, 1).has_value());
  CHECK_FALSE(kth_e_period(a, 2).has_value());
}

TEST_CASE("totally periodic two-component vertices span at least e columns") {
  // columns of the label = rows of the fock coordinates
  for (int e : {2, 3, 4}) {
    for (int s = -1; s <= 4; ++s) {
      FockParam param(e, s);
      for (int n = 0; n <= 8; ++n)
        for (const Bipartition& nu : bipartitions_of(n)) {
          if (nu.comp1.empty() || nu.comp2.empty()) continue;
          if (!is_totally_e_periodic(abacus_from({nu, param}))) continue;
          CHECK(nu.comp1.rows() + nu.comp2.rows() >= e);
        }
    }
  }
}

TEST_CASE("abacus rendering") {
  auto a = abacus_from(charged({{6, 6, 6, 6}, {}}, 5, 3));
  std::string picture = render(a);
  CHECK(picture.find("•") != std::string::npos);
  CHECK(picture.find("·") != std::string::npos);
  CHECK(picture.find("-6") != std::string::npos);
  CHECK(picture.find("4") != std::string::npos);
  // three lines: top row, bottom row, ruler
  CHECK(std::count(picture.begin(), picture.end(), '\n') == 3);
}
