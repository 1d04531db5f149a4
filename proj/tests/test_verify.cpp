#include <catch2/catch_amalgamated.hpp>

#include "fock2/text.hpp"
#include "fock2/unitarity.hpp"
#include "fock2/verify.hpp"

using namespace fock2;

namespace {

SweepSpec small_spec(int e, int s, int n_max, std::set<Check> checks) {
  SweepSpec spec;
  spec.e_range = {e};
  spec.s_range = {s};
  spec.n_max = n_max;
  spec.checks = std::move(checks);
  return spec;
}

}  // namespace

TEST_CASE("sweep at e=3, s=1, n<=6 passes every check") {
  auto rep = run_sweep(small_spec(3, 1, 6, {kAllChecks.begin(), kAllChecks.end()}));
  for (const auto& r : rep.results) {
    INFO(check_name(r.check) << ": " << r.first_counterexample);
    CHECK(r.pass);
  }
  // narrow ranges cannot fire every case label; coverage reports that
  CHECK(rep.coverage_checked);

  // the unitary finite-dimensional bipartitions of size <= 6 here are exactly
  // the rectangles with r - q = s - e = -2 or r - q = -s = -1
  FockParam param(3, 1);
  std::set<std::string> fd_list;
  for (int n = 0; n <= 6; ++n)
    for (const Bipartition& lam : bipartitions_of(n))
      if (classify_unitary_fd(lam, param)) fd_list.insert(format_bipartition(lam));
  CHECK(fd_list == std::set<std::string>{"-|-", "(3)|-", "-|(2)", "-|(3,3)"});
}

TEST_CASE("thm1_1 sweep at e=5, s=3: fd-unitary set at n=3") {
  auto rep = run_sweep(small_spec(5, 3, 6, {Check::thm1_1}));
  REQUIRE(rep.results.size() == 1);
  CHECK(rep.results[0].pass);
  FockParam param(5, 3);
  std::set<std::string> at3;
  for (const Bipartition& lam : bipartitions_of(3))
    if (is_unitary(lam, param).unitary && is_finite_dimensional(lam, param))
      at3.insert(format_bipartition(lam));
  CHECK(at3 == std::set<std::string>{"(3)|-"});
}

TEST_CASE("empty sweep passes vacuously") {
  auto rep = run_sweep(small_spec(3, 1, 0, {Check::thm1_1, Check::roundtrip}));
  CHECK(rep.all_pass());
  for (const auto& r : rep.results) CHECK(r.instances == 1);
}

TEST_CASE("a_(m) closed form") {
  CHECK(a_m_closed_form(FockParam(4, 1), 2) == Bipartition{{2, 2, 2}, {2}});
  CHECK(a_m_closed_form(FockParam(3, 0), 1) == Bipartition{{1, 1, 1}, {}});
  CHECK(a_m_closed_form(FockParam(2, 5), 3) == Bipartition{{}, {3, 3}});
  for (int e = 2; e <= 6; ++e)
    for (int s = -3; s <= 9; ++s) {
      INFO("e=" << e << " s=" << s);
      CHECK_FALSE(verify_a_m_closed_form(FockParam(e, s), 5).has_value());
    }
}

TEST_CASE("reports are deterministic") {
  auto spec = small_spec(3, 1, 5, {Check::thm1_1, Check::roundtrip, Check::source_equiv});
  auto a = run_sweep(spec);
  auto b = run_sweep(spec);
  CHECK(render_text(a) == render_text(b));
  CHECK(to_json(a).dump() == to_json(b).dump());
  CHECK(render_text(a).find("RESULT: PASS") != std::string::npos);
}

TEST_CASE("sweep caps") {
  CHECK_THROWS_AS(run_sweep(small_spec(3, 1, 13, {Check::roundtrip})), std::invalid_argument);
  CHECK_THROWS_AS(run_sweep(small_spec(17, 1, 5, {Check::roundtrip})), std::invalid_argument);
  CHECK_THROWS_AS(run_sweep(small_spec(3, 70, 5, {Check::roundtrip})), std::invalid_argument);
}

TEST_CASE("a failing check reports a counterexample and keeps counting") {
  // sanity-check the reporting plumbing itself on a hand-built failure
  VerifyReport rep;
  rep.spec = small_spec(3, 1, 2, {Check::thm1_1});
  CheckResult r;
  r.check = Check::thm1_1;
  r.pass = false;
  r.instances = 7;
  r.first_counterexample = "e=3 s=1 bp=(1)|-";
  rep.results.push_back(r);
  auto text = render_text(rep);
  CHECK(text.find("FAIL") != std::string::npos);
  CHECK(text.find("e=3 s=1 bp=(1)|-") != std::string::npos);
  CHECK_FALSE(rep.all_pass());
  auto j = to_json(rep);
  CHECK(j["checks"][0]["counterexample"] == "e=3 s=1 bp=(1)|-");
}
