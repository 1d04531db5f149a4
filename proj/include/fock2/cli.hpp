#pragma once

#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fock2/abacus.hpp"
#include "fock2/crystal.hpp"
#include "fock2/enumerate.hpp"
#include "fock2/errors.hpp"
#include "fock2/fock.hpp"
#include "fock2/graph_io.hpp"
#include "fock2/text.hpp"
#include "fock2/unitarity.hpp"
#include "fock2/verify.hpp"

namespace fock2 {
namespace cli {

constexpr int kMaxPartValue = 64;
constexpr int kMaxPartCount = 64;
constexpr int kMaxListN = 16;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string rational_str(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

inline void check_caps(const Bipartition& bp) {
  for (int j : {1, 2}) {
    const Partition& p = bp.component(j);
    if (p.rows() > kMaxPartCount || p.cols() > kMaxPartValue)
      throw UsageError("partition exceeds the 64 parts / part size 64 cap");
  }
}

// Input bipartition with both coordinate systems; fock_input records which
// one the caller supplied.
struct Input {
  Bipartition label;
  Bipartition fock;
  bool fock_input = false;
};

inline Input resolve_input(const std::string& bp, const std::string& bp_fock) {
  if (bp.empty() == bp_fock.empty())
    throw UsageError("provide exactly one of --bp or --bp-fock");
  Input in;
  if (!bp.empty()) {
    in.label = parse_bipartition(bp);
    in.fock = in.label.transposed();
  } else {
    in.fock = parse_bipartition(bp_fock);
    in.label = in.fock.transposed();
    in.fock_input = true;
  }
  check_caps(in.label);
  return in;
}

inline std::vector<int> parse_range(const std::string& text) {
  std::vector<int> out;
  auto parse_int = [&](const std::string& tok) {
    try {
      std::size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      return v;
    } catch (const std::exception&) {
      throw UsageError("malformed range \"" + text + "\"");
    }
  };
  auto colon = text.find(':');
  if (colon != std::string::npos) {
    int lo = parse_int(text.substr(0, colon));
    int hi = parse_int(text.substr(colon + 1));
    if (lo > hi) throw UsageError("empty range \"" + text + "\"");
    for (int v = lo; v <= hi; ++v) out.push_back(v);
    return out;
  }
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(parse_int(tok));
  if (out.empty()) throw UsageError("empty range \"" + text + "\"");
  return out;
}

struct Emitter {
  std::ostream* stream;
  std::string path;

  void write(const std::string& text) const {
    if (path.empty()) {
      *stream << text;
      return;
    }
    std::ofstream f(path, std::ios::binary);  // UTF-8, LF
    if (!f) throw std::invalid_argument("cannot open output file " + path);
    f << text;
  }
  void write_json(const nlohmann::json& j) const { write(j.dump(2) + "\n"); }
};

inline nlohmann::json verdict_json(const Bipartition& label, const FockParam& param,
                                   const UnitarityVerdict& verdict, bool fd,
                                   const SupportDescriptor& sup) {
  nlohmann::json cases = nlohmann::json::array();
  for (UnitaryCase c : verdict.cases) cases.push_back(case_label(c));
  return {
      {"bipartition", format_bipartition(label)},
      {"bipartition_fock", format_bipartition(label.transposed())},
      {"e", param.e()},
      {"s", param.s()},
      {"unitary", verdict.unitary},
      {"cases", cases},
      {"fd", fd},
      {"support",
       {{"n_cusp", sup.n_cuspidal},
        {"m", sup.m},
        {"p", sup.p},
        {"source", format_bipartition(sup.source_fock.nu)},
        {"case", sup.position_case},
        {"depth_zero_pair", sup.depth_zero_pair}}},
  };
}

inline std::string cases_str(const UnitarityVerdict& verdict) {
  std::string out;
  for (UnitaryCase c : verdict.cases) out += std::string(out.empty() ? "" : ",") + case_label(c);
  return out.empty() ? "none" : out;
}

}  // namespace detail

// Parses argv (without the program name) and runs one subcommand.
// Exit codes: 0 done / all checks passed, 1 check failed or image empty,
// 2 usage or malformed input, 3 internal consistency failure.
inline int parse_and_dispatch(std::vector<std::string> args, std::ostream& out,
                              std::ostream& err) {
  CLI::App app{"crystal combinatorics and unitarity on the level-2 Fock space"};
  app.name("fock2");
  app.require_subcommand(1);

  int e = 0;
  std::optional<int> s_opt, s1_opt, s2_opt;
  std::string bp, bp_fock, op, sigma_text, format, out_path, which;
  std::string e_range = "2:5", s_range = "-2:7", checks_text = "all";
  int n = -1, residue = std::numeric_limits<int>::min(), k = 0, m_max = 5;

  auto add_param = [&](CLI::App* sub) {
    sub->add_option("--e", e, "quantum characteristic, an integer >= 2")->required();
    sub->add_option("--s", s_opt, "charge difference s = s2 - s1 (default 0)");
    sub->add_option("--s1", s1_opt, "first charge component");
    sub->add_option("--s2", s2_opt, "second charge component");
  };
  auto add_bp = [&](CLI::App* sub) {
    sub->add_option("--bp", bp, "bipartition in label coordinates, e.g. \"(3,3)|(1)\"");
    sub->add_option("--bp-fock", bp_fock, "bipartition in Fock coordinates (transposed)");
  };
  auto add_out = [&](CLI::App* sub, const std::string& formats) {
    sub->add_option("--format", format, "output format: " + formats);
    sub->add_option("--out", out_path, "write output to this file instead of stdout");
  };

  CLI::App* show = app.add_subcommand("show", "render a bipartition: abacus, boxes, contents");
  add_param(show); add_bp(show); add_out(show, "text|json");
  CLI::App* crystal = app.add_subcommand("crystal", "apply a crystal operator");
  add_param(crystal); add_bp(crystal); add_out(crystal, "text|json");
  crystal->add_option("--op", op, "operator: e (e~_i), f (f~_i), u- (Y-_k), u+ (Y+_k), a (a_sigma)")
      ->required();
  crystal->add_option("--i", residue, "residue mod e for e/f");
  crystal->add_option("--k", k, "period index >= 1 for u-/u+");
  crystal->add_option("--sigma", sigma_text, "partition for a, e.g. \"(2,1)\"");
  CLI::App* position = app.add_subcommand("position", "position in both crystals");
  add_param(position); add_bp(position); add_out(position, "text|json");
  CLI::App* unitary = app.add_subcommand("unitary", "unitarity verdict with case labels");
  add_param(unitary); add_bp(unitary); add_out(unitary, "text|json");
  CLI::App* fd = app.add_subcommand("fd", "finite-dimensionality verdict");
  add_param(fd); add_bp(fd); add_out(fd, "text|json");
  CLI::App* support = app.add_subcommand("support", "cuspidal support datum");
  add_param(support); add_bp(support); add_out(support, "text|json");
  CLI::App* list_unitary = app.add_subcommand("list-unitary", "all unitary bipartitions of size n");
  add_param(list_unitary); add_out(list_unitary, "text|json");
  list_unitary->add_option("--n", n, "size")->required();
  CLI::App* list_fd =
      app.add_subcommand("list-fd", "all unitary finite-dimensional bipartitions of size n");
  add_param(list_fd); add_out(list_fd, "text|json");
  list_fd->add_option("--n", n, "size")->required();
  CLI::App* graph = app.add_subcommand("graph", "crystal graph on all vertices of size <= n");
  add_param(graph); add_out(graph, "dot|json");
  graph->add_option("--which", which, "sle or slinf")->required();
  graph->add_option("--n", n, "maximum vertex size")->required();
  CLI::App* verify = app.add_subcommand("verify", "run a verification sweep");
  add_out(verify, "text|json");
  verify->add_option("--e-range", e_range, "e values, \"2:5\" or \"2,3,5\" (default 2:5)");
  verify->add_option("--s-range", s_range, "s values (default -2:7)");
  verify->add_option("--n", n, "maximum bipartition size (default 9)");
  verify->add_option("--m-max", m_max, "a_(m) closed-form depth (default 5)");
  verify->add_option("--checks", checks_text, "\"all\" or comma list, e.g. thm1_1,roundtrip");

  try {
    std::reverse(args.begin(), args.end());  // CLI11 vector parse is back-to-front
    app.parse(args);
  } catch (const CLI::ParseError& pe) {
    if (pe.get_exit_code() == 0) {
      app.exit(pe, out, err);  // --help and friends
      return 0;
    }
    err << "usage error: " << pe.what() << "\n";
    return 2;
  }

  try {
    detail::Emitter emit{&out, out_path};

    if (verify->parsed()) {
      SweepSpec spec;
      spec.e_range = detail::parse_range(e_range);
      spec.s_range = detail::parse_range(s_range);
      if (n >= 0) spec.n_max = n;
      spec.m_max = m_max;
      if (checks_text != "all") {
        spec.checks.clear();
        std::stringstream ss(checks_text);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
          auto c = parse_check(tok);
          if (!c) throw UsageError("unknown check \"" + tok + "\"");
          spec.checks.insert(*c);
        }
        if (spec.checks.empty()) throw UsageError("no checks requested");
      }
      VerifyReport rep = run_sweep(spec);
      if (format == "json")
        emit.write_json(to_json(rep));
      else
        emit.write(render_text(rep));
      return rep.all_pass() ? 0 : 1;
    }

    // every remaining subcommand needs the Fock parameter
    if (e < 2) throw UsageError("--e must be an integer >= 2");
    if (s1_opt.has_value() != s2_opt.has_value())
      throw UsageError("--s1 and --s2 must be given together");
    if (s_opt && s1_opt) throw UsageError("give either --s or --s1/--s2, not both");
    FockParam param = s1_opt ? FockParam::from_charges(e, *s1_opt, *s2_opt)
                             : FockParam(e, s_opt.value_or(0));

    auto coord_lines = [&](const Bipartition& fock) {
      return "fock: " + format_bipartition(fock) + "\nlabel: " +
             format_bipartition(fock.transposed()) + "\n";
    };

    if (show->parsed()) {
      auto in = detail::resolve_input(bp, bp_fock);
      ChargedBipartition nu{in.fock, param};
      if (format == "json") {
        nlohmann::json rem = nlohmann::json::array();
        for (const Box& b : removable_boxes(in.fock)) {
          int ct = charged_content(b, param);
          rem.push_back({{"component", b.component},
                         {"row", b.row},
                         {"col", b.col},
                         {"charged_content", ct},
                         {"residue", param.residue(ct)}});
        }
        nlohmann::json add = nlohmann::json::array();
        for (const Box& b : addable_boxes(in.fock)) {
          int ct = charged_content(b, param);
          add.push_back({{"component", b.component},
                         {"row", b.row},
                         {"col", b.col},
                         {"charged_content", ct},
                         {"residue", param.residue(ct)}});
        }
        emit.write_json({{"label", format_bipartition(in.label)},
                         {"fock", format_bipartition(in.fock)},
                         {"e", param.e()},
                         {"s", param.s()},
                         {"n", in.label.size()},
                         {"c", detail::rational_str(param.c())},
                         {"d", detail::rational_str(param.d())},
                         {"c_function", detail::rational_str(c_function(in.label, param))},
                         {"totally_e_periodic", is_totally_e_periodic(abacus_from(nu))},
                         {"removable_fock", rem},
                         {"addable_fock", add}});
      } else {
        std::string text;
        text += "label: " + format_bipartition(in.label) + "\n";
        text += "fock: " + format_bipartition(in.fock) + "\n";
        text += "e=" + std::to_string(param.e()) + " s=" + std::to_string(param.s()) +
                " charge=(0," + std::to_string(param.s()) + ")\n";
        text += "c=" + detail::rational_str(param.c()) + " d=" + detail::rational_str(param.d()) +
                " c_function=" + detail::rational_str(c_function(in.label, param)) + "\n";
        text += "abacus (top row = component 2):\n" + render(abacus_from(nu));
        text += "removable boxes (fock coords):\n";
        for (const Box& b : removable_boxes(in.fock)) {
          int ct = charged_content(b, param);
          text += "  comp=" + std::to_string(b.component) + " row=" + std::to_string(b.row) +
                  " col=" + std::to_string(b.col) + " ct~=" + std::to_string(ct) +
                  " res=" + std::to_string(param.residue(ct)) + "\n";
        }
        text += std::string("totally ") + std::to_string(param.e()) + "-periodic: " +
                (is_totally_e_periodic(abacus_from(nu)) ? "yes" : "no") + "\n";
        emit.write(text);
      }
      return 0;
    }

    if (crystal->parsed()) {
      auto in = detail::resolve_input(bp, bp_fock);
      ChargedBipartition nu{in.fock, param};
      std::optional<ChargedBipartition> result;
      std::string note;
      if (op == "e" || op == "f") {
        if (residue == std::numeric_limits<int>::min())
          throw UsageError("--i is required for --op " + op);
        int i = param.residue(residue);
        result = op == "e" ? e_tilde(nu, i) : f_tilde(nu, i);
      } else if (op == "u-" || op == "u+") {
        if (k < 1) throw UsageError("--k must be >= 1 for --op " + op);
        result = upsilon(nu, k, op == "u-" ? ShiftDirection::left : ShiftDirection::right);
      } else if (op == "a") {
        if (sigma_text.empty()) throw UsageError("--sigma is required for --op a");
        Partition sigma = parse_partition(sigma_text);
        if (!crystal_position(nu).sigma.empty()) note = "input is not an sl_inf source";
        result = a_sigma(sigma, nu);  // throws NotInCrystalImage on a bad shift
      } else {
        throw UsageError("unknown --op \"" + op + "\" (want e, f, u-, u+, a)");
      }
      if (format == "json") {
        nlohmann::json j{{"op", op}, {"e", param.e()}, {"s", param.s()},
                         {"input_coords", in.fock_input ? "fock" : "label"}};
        if (result)
          j["result"] = {{"fock", format_bipartition(result->nu)},
                         {"label", format_bipartition(result->nu.transposed())}};
        else
          j["result"] = nullptr;  // the crystal zero
        if (!note.empty()) j["note"] = note;
        emit.write_json(j);
      } else {
        if (!note.empty()) err << "note: " << note << "\n";
        emit.write(result ? coord_lines(result->nu) : "0\n");
      }
      return 0;
    }

    if (position->parsed()) {
      auto in = detail::resolve_input(bp, bp_fock);
      CrystalPosition pos = crystal_position({in.fock, param});
      if (format == "json") {
        emit.write_json({{"fock", format_bipartition(in.fock)},
                         {"label", format_bipartition(in.label)},
                         {"e", param.e()},
                         {"s", param.s()},
                         {"p", pos.sle_depth},
                         {"path", pos.sle_path},
                         {"m", pos.sigma.size()},
                         {"sigma", format_partition(pos.sigma)},
                         {"source_fock", format_bipartition(pos.source.nu)},
                         {"source_label", format_bipartition(pos.source.nu.transposed())}});
      } else {
        std::string text = "p=" + std::to_string(pos.sle_depth) + " path=[";
        for (std::size_t i = 0; i < pos.sle_path.size(); ++i)
          text += (i ? "," : "") + std::to_string(pos.sle_path[i]);
        text += "]\n";
        text += "m=" + std::to_string(pos.sigma.size()) +
                " sigma=" + format_partition(pos.sigma) + "\n";
        text += "source_fock=" + format_bipartition(pos.source.nu) + "\n";
        text += "source_label=" + format_bipartition(pos.source.nu.transposed()) + "\n";
        emit.write(text);
      }
      return 0;
    }

    if (unitary->parsed() || fd->parsed() || support->parsed()) {
      auto in = detail::resolve_input(bp, bp_fock);
      UnitarityVerdict verdict = is_unitary(in.label, param);
      bool is_fd = is_finite_dimensional(in.label, param);
      SupportDescriptor sup = fock2::support(in.label, param);
      if (format == "json") {
        emit.write_json(detail::verdict_json(in.label, param, verdict, is_fd, sup));
        return 0;
      }
      std::string text;
      if (unitary->parsed()) {
        text += "bipartition(label)=" + format_bipartition(in.label) + " n=" +
                std::to_string(in.label.size()) + "\n";
        text += std::string("unitary=") + (verdict.unitary ? "true" : "false") +
                " cases=" + detail::cases_str(verdict) + "\n";
        for (const std::string& t : verdict.reduction_trace) text += "reduction: " + t + "\n";
        text += std::string("fd=") + (is_fd ? "true" : "false") + "\n";
      } else if (fd->parsed()) {
        text += std::string("fd=") + (is_fd ? "true" : "false") + "\n";
      }
      if (unitary->parsed() || support->parsed()) {
        text += "support: n_cusp=" + std::to_string(sup.n_cuspidal) + " m=" +
                std::to_string(sup.m) + " p=" + std::to_string(sup.p) +
                " source_fock=" + format_bipartition(sup.source_fock.nu) +
                " case=" + std::to_string(sup.position_case);
        if (sup.depth_zero_pair)
          text += " (depth 0: also case " + std::to_string(sup.position_case + 1) + ")";
        text += "\n";
      }
      emit.write(text);
      return 0;
    }

    if (list_unitary->parsed() || list_fd->parsed()) {
      if (n < 0 || n > kMaxListN) throw UsageError("--n must be between 0 and 16");
      std::vector<std::string> lines;
      for (const Bipartition& lam : bipartitions_of(n)) {
        if (!is_unitary(lam, param).unitary) continue;
        if (list_fd->parsed() && !is_finite_dimensional(lam, param)) continue;
        lines.push_back(format_bipartition(lam));
      }
      if (format == "json") {
        emit.write_json({{"e", param.e()},
                         {"s", param.s()},
                         {"n", n},
                         {"coords", "label"},
                         {"bipartitions", lines}});
      } else {
        std::string text;
        for (const std::string& line : lines) text += line + "\n";
        emit.write(text);
      }
      return 0;
    }

    if (graph->parsed()) {
      if (which != "sle" && which != "slinf") throw UsageError("--which must be sle or slinf");
      CrystalGraph g =
          crystal_graph(param, n, which == "sle" ? CrystalKind::sle : CrystalKind::slinf);
      if (format == "json")
        emit.write_json(to_json(g));
      else
        emit.write(to_dot(g));
      return 0;
    }

    throw UsageError("no subcommand given");
  } catch (const UsageError& ue) {
    err << "usage error: " << ue.what() << "\n";
    return 2;
  } catch (const InternalConsistencyError& ie) {
    err << "internal error: " << ie.what() << "\n";
    return 3;
  } catch (const NotInCrystalImage& ne) {
    err << "error: " << ne.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& ia) {
    err << "error: " << ia.what() << "\n";
    return 2;
  }
}

}  // namespace cli
}  // namespace fock2
