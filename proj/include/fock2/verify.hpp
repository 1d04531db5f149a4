#pragma once

#include <algorithm>
#include <chrono>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "fock2/crystal.hpp"
#include "fock2/enumerate.hpp"
#include "fock2/text.hpp"
#include "fock2/unitarity.hpp"

namespace fock2 {

enum class Check {
  thm1_1,
  prop4_1,
  cor4_2,
  cor1_3,
  commutation,
  source_equiv,
  roundtrip,
  a_m_closed_form,
  lemma2_3,
  stacking,
};

constexpr std::array<Check, 10> kAllChecks = {
    Check::thm1_1,       Check::prop4_1,  Check::cor4_2,          Check::cor1_3,
    Check::commutation,  Check::source_equiv, Check::roundtrip,   Check::a_m_closed_form,
    Check::lemma2_3,     Check::stacking,
};

inline const char* check_name(Check c) {
  switch (c) {
    case Check::thm1_1: return "thm1_1";
    case Check::prop4_1: return "prop4_1";
    case Check::cor4_2: return "cor4_2";
    case Check::cor1_3: return "cor1_3";
    case Check::commutation: return "commutation";
    case Check::source_equiv: return "source_equiv";
    case Check::roundtrip: return "roundtrip";
    case Check::a_m_closed_form: return "a_m_closed_form";
    case Check::lemma2_3: return "lemma2_3";
    case Check::stacking: return "stacking";
  }
  return "?";
}

inline std::optional<Check> parse_check(const std::string& name) {
  for (Check c : kAllChecks)
    if (name == check_name(c)) return c;
  return std::nullopt;
}

struct SweepSpec {
  std::vector<int> e_range;
  std::vector<int> s_range;
  int n_max = 9;
  int m_max = 5;
  std::set<Check> checks{kAllChecks.begin(), kAllChecks.end()};

  // e in {2..5}, s in {-2..7}, n <= 9: covers every case branch
  static SweepSpec desk_default() {
    SweepSpec spec;
    for (int e = 2; e <= 5; ++e) spec.e_range.push_back(e);
    for (int s = -2; s <= 7; ++s) spec.s_range.push_back(s);
    return spec;
  }
};

constexpr int kMaxSweepN = 12;
constexpr int kMaxSweepE = 16;
constexpr int kMaxSweepAbsS = 64;

struct CheckResult {
  Check check{};
  bool pass = true;
  long long instances = 0;
  std::string first_counterexample;  // empty when passing
  double wall_seconds = 0.0;
};

struct VerifyReport {
  SweepSpec spec;
  long long vertices_per_cell = 0;
  long long cells = 0;
  std::vector<CheckResult> results;  // in kAllChecks order, requested only
  std::map<std::string, long long> case_fires;  // unitarity labels
  std::map<int, long long> position_fires;      // support position cases 1..6
  long long commutation_one_sided = 0;  // recorded, not asserted
  bool coverage_checked = false;
  // Coverage only binds on sweeps wide enough to reach every branch (the
  // desk-scale ranges); narrower sweeps report it informationally.
  bool coverage_asserted = false;
  bool coverage_pass = true;
  std::string coverage_missing;

  bool all_pass() const {
    if (coverage_asserted && !coverage_pass) return false;
    for (const auto& r : results)
      if (!r.pass) return false;
    return true;
  }
};

// Expected image of a_(m) applied to the empty bipartition, Fock coordinates.
inline Bipartition a_m_closed_form(const FockParam& param, int m) {
  auto rect = [](int value, int count) {
    return Partition(std::vector<int>(static_cast<std::size_t>(count), value));
  };
  int e = param.e(), s = param.s();
  if (0 < s && s < e) return {rect(m, e - s), rect(m, s)};
  if (s >= e) return {{}, rect(m, e)};
  return {rect(m, e), {}};
}

// Check a_(m)(empty) against the closed form for 1 <= m <= m_max; returns
// the offending (s, m) description on failure.
inline std::optional<std::string> verify_a_m_closed_form(const FockParam& param, int m_max) {
  ChargedBipartition cur{{}, param};
  for (int m = 1; m <= m_max; ++m) {
    auto next = upsilon(cur, 1, ShiftDirection::right);
    if (!next)
      return "a_(m) chain broke at e=" + std::to_string(param.e()) +
             " s=" + std::to_string(param.s()) + " m=" + std::to_string(m);
    cur = *next;
    if (!(cur.nu == a_m_closed_form(param, m)))
      return "a_(m) mismatch at e=" + std::to_string(param.e()) +
             " s=" + std::to_string(param.s()) + " m=" + std::to_string(m) + ": got " +
             format_bipartition(cur.nu) + " expected " +
             format_bipartition(a_m_closed_form(param, m));
  }
  return std::nullopt;
}

namespace detail {

struct SweepState {
  std::map<Check, CheckResult> results;
  VerifyReport report;

  bool enabled(Check c) const { return results.count(c) != 0; }

  void record(Check c, bool ok, const std::string& counterexample) {
    auto& r = results.at(c);
    r.instances += 1;
    if (!ok && r.pass) {
      r.pass = false;
      r.first_counterexample = counterexample;
    }
  }
};

inline std::string cell_tag(const FockParam& p, const Bipartition& lam) {
  return "e=" + std::to_string(p.e()) + " s=" + std::to_string(p.s()) +
         " bp=" + format_bipartition(lam);
}

}  // namespace detail

inline VerifyReport run_sweep(const SweepSpec& spec) {
  if (spec.n_max < 0 || spec.n_max > kMaxSweepN)
    throw std::invalid_argument("run_sweep: n_max exceeds the cap of " +
                                std::to_string(kMaxSweepN));
  if (spec.m_max < 1 || spec.m_max > 8)
    throw std::invalid_argument("run_sweep: m_max out of range");
  for (int e : spec.e_range)
    if (e < 2 || e > kMaxSweepE) throw std::invalid_argument("run_sweep: e out of range");
  for (int s : spec.s_range)
    if (s < -kMaxSweepAbsS || s > kMaxSweepAbsS)
      throw std::invalid_argument("run_sweep: s out of range");

  detail::SweepState st;
  st.report.spec = spec;
  for (Check c : kAllChecks)
    if (spec.checks.count(c)) st.results[c].check = c;

  std::vector<std::vector<Bipartition>> by_size;
  for (int n = 0; n <= spec.n_max; ++n) by_size.push_back(bipartitions_of(n));
  for (const auto& block : by_size) st.report.vertices_per_cell += static_cast<long long>(block.size());
  st.report.cells = static_cast<long long>(spec.e_range.size()) *
                    static_cast<long long>(spec.s_range.size());

  const bool need_verdict = st.enabled(Check::thm1_1) || st.enabled(Check::prop4_1) ||
                            st.enabled(Check::cor4_2) || st.enabled(Check::cor1_3) ||
                            st.enabled(Check::stacking);
  const bool need_position = st.enabled(Check::cor4_2) || st.enabled(Check::cor1_3);

  using Clock = std::chrono::steady_clock;
  auto timed = [&](Check c, auto&& body) {
    if (!st.enabled(c)) return;
    auto t0 = Clock::now();
    body();
    st.results.at(c).wall_seconds += std::chrono::duration<double>(Clock::now() - t0).count();
  };

  for (int e : spec.e_range) {
    for (int s : spec.s_range) {
      FockParam param(e, s);
      std::map<int, std::set<std::pair<int, int>>> realized;  // n -> {(n', m)}
      for (int n = 0; n <= spec.n_max; ++n) {
        for (const Bipartition& lam : by_size[static_cast<std::size_t>(n)]) {
          const std::string tag = detail::cell_tag(param, lam);
          ChargedBipartition nu = charged_from_label(lam, param);

          std::optional<UnitarityVerdict> verdict;
          if (need_verdict) {
            verdict = is_unitary(lam, param);
            for (UnitaryCase c : verdict->cases) st.report.case_fires[case_label(c)] += 1;
          }
          std::optional<CrystalPosition> pos;
          if (need_position && verdict->unitary) pos = crystal_position(nu);

          timed(Check::thm1_1, [&] {
            bool closed = classify_unitary_fd(lam, param);
            bool actual = verdict->unitary && is_finite_dimensional(lam, param);
            st.record(Check::thm1_1, closed == actual,
                      tag + " closed-form=" + (closed ? "true" : "false") +
                          " unitary&fd=" + (actual ? "true" : "false"));
          });

          timed(Check::prop4_1, [&] {
            if (!verdict->unitary) return;
            for (int i = 0; i < e; ++i) {
              if (auto image = e_tilde(nu, i)) {
                bool ok = is_unitary(image->label(), param).unitary;
                st.record(Check::prop4_1, ok,
                          tag + " e~_" + std::to_string(i) + " image " +
                              format_bipartition(image->label()) + " not unitary");
              }
            }
            auto [source, path] = sle_source_path(nu);
            auto depth = period_count_to_rays(abacus_from(source));
            for (int k = 1; depth && k <= *depth; ++k) {
              if (auto image = upsilon(nu, k, ShiftDirection::left)) {
                bool ok = is_unitary(image->label(), param).unitary;
                st.record(Check::prop4_1, ok,
                          tag + " Y-_" + std::to_string(k) + " image " +
                              format_bipartition(image->label()) + " not unitary");
              }
            }
          });

          timed(Check::cor4_2, [&] {
            if (!verdict->unitary) return;
            const Bipartition& src = pos->source.nu;
            int base = 0;
            if (src.empty())
              base = 1;
            else if (src.comp2.empty() && src.comp1.is_rectangle() &&
                     src.comp1.cols() - src.comp1.rows() == s - e)
              base = 3;
            else if (src.comp1.empty() && src.comp2.is_rectangle() &&
                     src.comp2.cols() - src.comp2.rows() == -s)
              base = 5;
            int m = pos->sigma.size();
            int p = pos->sle_depth;
            bool ok = base != 0 && (m == 0 || p == 0) && pos->sigma.rows() <= 1;
            st.record(Check::cor4_2, ok,
                      tag + " source=" + format_bipartition(src) +
                          " sigma=" + format_partition(pos->sigma) + " p=" + std::to_string(p));
            if (ok) {
              if (p == 0 && m == 0) {
                st.report.position_fires[base] += 1;
                st.report.position_fires[base + 1] += 1;
              } else {
                st.report.position_fires[m > 0 ? base + 1 : base] += 1;
              }
            }
          });

          if (st.enabled(Check::cor1_3) && verdict->unitary)
            realized[n].insert({pos->source.size(), pos->sigma.size()});

          timed(Check::stacking, [&] {
            if (lam.comp1.empty() || !lam.comp2.empty()) return;
            const Partition& l1 = lam.comp1;
            int q = l1.cols();
            int r = l1.top_multiplicity();
            std::vector<int> tail(l1.parts().begin() + r, l1.parts().end());
            Partition tau(std::move(tail));
            bool rhs = (r - q == s - e) && is_type_a_unitary(tau, e);
            bool lhs = verdict->cases.count(UnitaryCase::c84d) != 0;
            st.record(Check::stacking, lhs == rhs,
                      tag + " case-d=" + (lhs ? "true" : "false") + " but r-q=" +
                          std::to_string(r - q) + ", tau=" + format_partition(tau));
          });

          timed(Check::lemma2_3, [&] {
            auto rems = removable_boxes(nu.nu);
            auto adds = addable_boxes(nu.nu);
            for (const Box& b : rems) {
              int ctb = charged_content(b, param);
              for (const Box& a : adds) {
                int cta = charged_content(a, param);
                bool applies = (b.component == 1 && a.component == 2 && cta == ctb + e) ||
                               (b.component == 2 && a.component == 1 && cta == ctb);
                if (!applies) continue;
                auto good = good_removable_ibox(nu, param.residue(ctb));
                st.record(Check::lemma2_3, !(good && *good == b),
                          tag + " box(" + std::to_string(b.component) + "," +
                              std::to_string(b.row) + "," + std::to_string(b.col) +
                              ") is good removable despite the cancellation pair");
              }
            }
          });

          timed(Check::source_equiv, [&] {
            bool source = is_sle_source(nu);
            bool periodic = is_totally_e_periodic(abacus_from(nu));
            st.record(Check::source_equiv, source == periodic,
                      tag + " sle-source=" + (source ? "true" : "false") +
                          " totally-periodic=" + (periodic ? "true" : "false"));
          });

          timed(Check::roundtrip, [&] {
            bool ok = bipartition_from(abacus_from(nu)) == nu;
            st.record(Check::roundtrip, ok, tag + " abacus round trip failed");
          });

          timed(Check::commutation, [&] {
            auto [source, path] = sle_source_path(nu);
            auto depth = period_count_to_rays(abacus_from(source));
            if (!depth) return;
            std::vector<std::optional<ChargedBipartition>> ei;
            for (int i = 0; i < e; ++i) ei.push_back(e_tilde(nu, i));
            for (int k = 1; k <= *depth; ++k) {
              auto yk = upsilon(nu, k, ShiftDirection::left);
              for (int i = 0; i < e; ++i) {
                std::optional<ChargedBipartition> lhs =
                    yk ? e_tilde(*yk, i) : std::nullopt;
                std::optional<ChargedBipartition> rhs =
                    ei[static_cast<std::size_t>(i)]
                        ? upsilon(*ei[static_cast<std::size_t>(i)], k, ShiftDirection::left)
                        : std::nullopt;
                if (lhs && rhs) {
                  st.record(Check::commutation, *lhs == *rhs,
                            tag + " e~_" + std::to_string(i) + " and Y-_" + std::to_string(k) +
                                " do not commute");
                } else if (lhs.has_value() != rhs.has_value()) {
                  st.report.commutation_one_sided += 1;
                }
              }
            }
          });
        }
      }

      timed(Check::cor1_3, [&] {
        for (int n = 0; n <= spec.n_max; ++n) {
          std::set<std::pair<int, int>> expected;
          expected.insert({0, 0});
          if (n > 0 && n % e == 0) expected.insert({0, n / e});
          for (int q = 1; q <= n; ++q) {
            for (int r = 1; q * r <= n; ++r) {
              if (r - q != s - e && r - q != -s) continue;
              expected.insert({q * r, 0});
              int rest = n - q * r;
              if (rest > 0 && rest % e == 0) expected.insert({q * r, rest / e});
            }
          }
          const auto& got = realized[n];
          bool ok = got == expected;
          std::string diff;
          if (!ok) {
            for (auto& pr : expected)
              if (!got.count(pr))
                diff += " missing (n'=" + std::to_string(pr.first) +
                        ",m=" + std::to_string(pr.second) + ")";
            for (auto& pr : got)
              if (!expected.count(pr))
                diff += " extra (n'=" + std::to_string(pr.first) +
                        ",m=" + std::to_string(pr.second) + ")";
          }
          st.record(Check::cor1_3, ok,
                    "e=" + std::to_string(e) + " s=" + std::to_string(s) +
                        " n=" + std::to_string(n) + diff);
        }
      });

      timed(Check::a_m_closed_form, [&] {
        auto bad = verify_a_m_closed_form(param, spec.m_max);
        st.record(Check::a_m_closed_form, !bad.has_value(), bad.value_or(""));
      });
    }
  }

  if (need_verdict) {
    st.report.coverage_checked = true;
    auto contains = [](const std::vector<int>& range, int lo, int hi) {
      for (int v = lo; v <= hi; ++v)
        if (std::find(range.begin(), range.end(), v) == range.end()) return false;
      return true;
    };
    st.report.coverage_asserted = contains(spec.e_range, 2, 5) &&
                                  contains(spec.s_range, -2, 7) && spec.n_max >= 9;
    for (UnitaryCase c : kAllUnitaryCases) {
      if (st.report.case_fires[case_label(c)] == 0) {
        st.report.coverage_pass = false;
        st.report.coverage_missing += std::string(st.report.coverage_missing.empty() ? "" : ", ") +
                                      case_label(c);
      }
    }
  }
  if (st.enabled(Check::cor4_2)) {
    for (int c = 1; c <= 6; ++c) {
      if (st.report.position_fires[c] == 0) {
        st.report.coverage_pass = false;
        st.report.coverage_missing += std::string(st.report.coverage_missing.empty() ? "" : ", ") +
                                      "position " + std::to_string(c);
      }
    }
  }

  for (Check c : kAllChecks)
    if (st.enabled(c)) st.report.results.push_back(st.results.at(c));
  return st.report;
}

// Deterministic rendering: identical specs give identical bytes, so timings
// stay out of the text and JSON forms.
inline std::string render_text(const VerifyReport& rep) {
  std::ostringstream out;
  auto range = [](const std::vector<int>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "}";
  };
  out << "sweep: e in " << range(rep.spec.e_range) << ", s in " << range(rep.spec.s_range)
      << ", n_max " << rep.spec.n_max << ", m_max " << rep.spec.m_max << "\n";
  out << "vertices per cell: " << rep.vertices_per_cell << ", cells: " << rep.cells << "\n";
  for (const auto& r : rep.results) {
    out << "check " << check_name(r.check) << ": " << (r.pass ? "PASS" : "FAIL")
        << "  instances=" << r.instances << "\n";
    if (!r.pass) out << "  first counterexample: " << r.first_counterexample << "\n";
  }
  if (rep.coverage_checked) {
    out << "coverage: " << (rep.coverage_pass ? "PASS" : "FAIL")
        << (rep.coverage_asserted ? "" : " (informational: ranges below desk scale)");
    if (!rep.coverage_pass) out << "  never fired: " << rep.coverage_missing;
    out << "\n";
    out << "case fires:";
    for (const auto& [label, count] : rep.case_fires) out << " " << label << "=" << count;
    out << "\n";
    if (!rep.position_fires.empty()) {
      out << "position fires:";
      for (const auto& [c, count] : rep.position_fires)
        out << " " << c << "=" << count;
      out << "\n";
    }
  }
  if (rep.commutation_one_sided > 0)
    out << "commutation defined on one side only (recorded, not asserted): "
        << rep.commutation_one_sided << "\n";
  out << "RESULT: " << (rep.all_pass() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

inline nlohmann::json to_json(const VerifyReport& rep) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& r : rep.results) {
    nlohmann::json item{{"check", check_name(r.check)},
                        {"pass", r.pass},
                        {"instances", r.instances}};
    item["counterexample"] =
        r.pass ? nlohmann::json{} : nlohmann::json(r.first_counterexample);
    checks.push_back(item);
  }
  nlohmann::json j{
      {"spec",
       {{"e_range", rep.spec.e_range},
        {"s_range", rep.spec.s_range},
        {"n_max", rep.spec.n_max},
        {"m_max", rep.spec.m_max}}},
      {"vertices_per_cell", rep.vertices_per_cell},
      {"cells", rep.cells},
      {"checks", checks},
      {"all_pass", rep.all_pass()},
  };
  if (rep.coverage_checked) {
    j["coverage"] = {{"pass", rep.coverage_pass},
                     {"asserted", rep.coverage_asserted},
                     {"missing", rep.coverage_missing},
                     {"case_fires", rep.case_fires}};
    nlohmann::json pf;
    for (const auto& [c, count] : rep.position_fires) pf[std::to_string(c)] = count;
    j["coverage"]["position_fires"] = pf;
  }
  if (rep.commutation_one_sided > 0) j["commutation_one_sided"] = rep.commutation_one_sided;
  return j;
}

}  // namespace fock2
