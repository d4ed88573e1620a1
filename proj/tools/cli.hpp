#pragma once

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "reesgor/reesgor.hpp"

namespace reesgor::cli {

enum Exit : int {
  kGorenstein = 0,
  kNotGorenstein = 1,
  kHypothesisUnmet = 2,
  kInputError = 3,
  kResourceExceeded = 4,
  kInternalError = 5,
};

inline int exit_code_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::HypothesisNotVerified:
    case ErrorKind::DepthNotOne:
    case ErrorKind::WrongDimension:
    case ErrorKind::NotApplicable:
      return kHypothesisUnmet;
    case ErrorKind::ResourceExceeded:
    case ErrorKind::NoStabilization:
    case ErrorKind::PairNotFound:
      return kResourceExceeded;
    case ErrorKind::EquivalenceViolation:
    case ErrorKind::InternalInconsistency:
      return kInternalError;
    default:
      return kInputError;
  }
}

struct Options {
  std::string command;
  std::string input;
  std::string mode;  // empty: take it from the file, else criteria
  std::optional<std::uint32_t> characteristic;
  std::uint64_t seed = 0;
  int r_max = 10;
  int resolution_cap = 64;
  std::string out;
  bool assume_buchsbaum = false;
};

namespace detail {

inline std::string join_polys(const auto& ps) {
  std::string s;
  for (std::size_t i = 0; i < ps.size(); ++i) s += (i ? ", " : "") + ps[i].to_string();
  return s;
}

inline std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

inline void put_profile(ReportDocument& r, const HypothesisProfile& p) {
  for (const auto& e : p.entries) {
    const std::string k = "profile.h" + std::to_string(e.i);
    r.set(k + ".vanishes", e.vanishes());
    r.set(k + ".length", e.length ? std::to_string(*e.length) : std::string("infinite"));
  }
  r.set("profile.verdict", p.verdict);
}

inline void put_oracle(ReportDocument& r, const OracleVerdict& v, int n) {
  r.set("oracle.power", n);
  r.set("oracle.cm", v.cm);
  r.set("oracle.type", v.type);
  r.set("oracle.betti", join_ints(v.betti));
  r.set("oracle.gorenstein", v.gorenstein);
}

template <class F>
int run_check(const Options& o, const InputDocument& doc, const Instance<F>& inst, ReportDocument& r) {
  std::string mode = o.mode;
  for (const auto& m : doc.mode)
    if (mode.empty() && (m == "criteria" || m == "oracle" || m == "both")) mode = m;
  if (mode.empty()) mode = "criteria";
  r.set("mode", mode);
  const int d = inst.ring->dim();
  const int n = doc.power.value_or(d);
  r.set("d", d);
  r.set("power", n);

  if (mode == "oracle") {
    auto v = graded_gorenstein_oracle(rees_presentation(inst.ring, inst.params, n));
    put_oracle(r, v, n);
    r.set("verdict", v.gorenstein);
    r.narrate("R(q^" + std::to_string(n) + ") is " + (v.gorenstein ? "" : "not ") +
              "Gorenstein by its minimal free resolution (" + (v.cm ? "Cohen-Macaulay" : "not Cohen-Macaulay") +
              ", last Betti number " + std::to_string(v.type) + ").");
    return v.gorenstein ? kGorenstein : kNotGorenstein;
  }
  if (n != d) fail(ErrorKind::HypothesisNotVerified, "the criteria describe R(q^d) only; use --mode oracle");

  DecisionOptions opt{o.seed, o.r_max, mode == "both"};
  auto rep = decide(inst.ring, inst.params, opt);
  put_profile(r, rep.profile);
  r.set("standard", rep.standard);
  r.set("h1_length", rep.h1_length);
  if (rep.h1_socle) r.set("h1_socle", *rep.h1_socle);
  r.set("conductor", rep.conductor->to_string());
  r.set("sigma", rep.sigma->to_string());
  if (rep.pair) r.set("pair", rep.pair->a.to_string() + ", " + rep.pair->b.to_string());
  r.set("cond2.h1_nonzero", rep.cond2.h1_nonzero);
  r.set("cond2.socle_is_1", rep.cond2.socle_is_1);
  r.set("cond2.c_equals_sigma", rep.cond2.c_equals_sigma);
  r.set("cond2.verdict", rep.cond2.verdict);
  r.set("cond3.depth_is_1", rep.cond3.depth_is_1);
  r.set("cond3.type_is_1", rep.cond3.type_is_1);
  if (rep.cond3.e_c) r.set("cond3.e_c", *rep.cond3.e_c);
  if (rep.cond3.len_a_mod_c) r.set("cond3.len_a_mod_c", *rep.cond3.len_a_mod_c);
  r.set("cond3.multiplicity_equation", rep.cond3.multiplicity_equation);
  r.set("cond3.reduction_number",
        rep.cond3.reduction_number ? std::to_string(*rep.cond3.reduction_number) : std::string("none"));
  r.set("cond3.verdict", rep.cond3.verdict);
  if (rep.consequences) {
    r.set("consequences.c_equals_q_atilde", rep.consequences->c_equals_q_atilde);
    r.set("consequences.sigma_equals_q_atilde", rep.consequences->sigma_equals_q_atilde);
    r.set("consequences.len_atilde_mod_c_equals_2len", rep.consequences->len_atilde_mod_c_equals_2len);
    r.set("consequences.artinian_quotient_gorenstein", rep.consequences->artinian_quotient_gorenstein);
  }
  if (rep.oracle) put_oracle(r, *rep.oracle, d);
  for (const auto& m : doc.mode) {
    if (m == "shimoda" && d == 2) {
      auto s = shimoda_check(inst.ring, inst.params[0], inst.params[1]);
      r.set("shimoda.verdict", s.verdict);
      if (s.verdict != rep.verdict) fail(ErrorKind::EquivalenceViolation, "the d = 2 criterion disagrees");
    }
    if (m == "buchsbaum") {
      auto b = buchsbaum_criterion(inst.ring, inst.params, o.assume_buchsbaum, o.r_max);
      r.set("buchsbaum.verdict", b.verdict);
      if (b.verdict != rep.verdict) fail(ErrorKind::EquivalenceViolation, "the multiplicity-2 criterion disagrees");
    }
  }
  r.set("verdict", rep.verdict);
  const std::string rn = "R(q^" + std::to_string(d) + ")";
  if (rep.verdict) {
    r.narrate(rn + " is Gorenstein: H^1 is nonzero with one-dimensional socle and c = Σ̃ (local cohomology criterion),");
    r.narrate("and depth 1, type 1, e_c = 2ℓ(A/c) with q a reduction of c (multiplicity criterion).");
  } else if (rep.hypothesis_unmet()) {
    r.narrate("H^1 vanishes, so the local cohomology criterion cannot hold; " + rn + " is not Gorenstein by it.");
  } else {
    r.narrate(rn + " is not Gorenstein: both the local cohomology and the multiplicity criteria fail.");
  }
  if (rep.oracle) r.narrate("The resolution of " + rn + " agrees.");
  if (mode == "criteria" && rep.hypothesis_unmet()) return kHypothesisUnmet;
  return rep.verdict ? kGorenstein : kNotGorenstein;
}

template <class F>
int run_command(const Options& o, const InputDocument& doc, const Instance<F>& inst, ReportDocument& r) {
  r.set("ring", inst.ring->name());
  r.set("q", join_polys(inst.params));
  if (o.command == "check") return run_check(o, doc, inst, r);
  if (o.command == "oracle") {
    const int n = doc.power.value_or(inst.ring->dim());
    auto rp = rees_presentation(inst.ring, inst.params, n);
    r.set("rees.variables", rp.ring->nvars());
    r.set("rees.relations", join_polys(rp.ring->relations()));
    auto v = graded_gorenstein_oracle(rp);
    put_oracle(r, v, n);
    r.set("verdict", v.gorenstein);
    r.narrate("Minimal free resolution of R(q^" + std::to_string(n) + ") over " + std::to_string(rp.ring->nvars()) +
              " variables.");
    return v.gorenstein ? kGorenstein : kNotGorenstein;
  }
  if (o.command == "shimoda") {
    if (inst.params.size() != 2) fail(ErrorKind::WrongDimension, "the criterion takes exactly two parameters");
    auto s = shimoda_check(inst.ring, inst.params[0], inst.params[1]);
    r.set("shimoda.a_regular", s.a_regular);
    r.set("shimoda.b_regular", s.b_regular);
    r.set("shimoda.colon_intersection", s.colon_intersection);
    r.set("shimoda.artinian_gorenstein", s.artinian_gorenstein);
    r.set("verdict", s.verdict);
    return s.verdict ? kGorenstein : kNotGorenstein;
  }
  if (o.command == "buchsbaum") {
    auto b = buchsbaum_criterion(inst.ring, inst.params, o.assume_buchsbaum, o.r_max);
    r.set("buchsbaum.e_m", b.e_m);
    r.set("buchsbaum.reduction_number",
          b.reduction_number ? std::to_string(*b.reduction_number) : std::string("none"));
    r.set("buchsbaum.b", b.b_ideal.to_string());
    r.set("buchsbaum.len_b", b.len_b);
    if (b.e_q) r.set("buchsbaum.e_q", *b.e_q);
    r.set("buchsbaum.assumed", o.assume_buchsbaum);
    r.set("verdict", b.verdict);
    r.narrate(o.assume_buchsbaum ? "A is taken to be Buchsbaum as asserted by the caller."
                                 : "Buchsbaumness of A is not checked; the verdict assumes it.");
    return b.verdict ? kGorenstein : kNotGorenstein;
  }
  if (o.command == "invariants") {
    auto inv = depth_and_type(inst.ring, inst.ring->limits());
    r.set("nvars", inv.nvars);
    r.set("dim", inv.dim);
    r.set("depth", inv.depth);
    r.set("pd", inv.pd);
    r.set("cm", inv.cm);
    r.set("type", inv.type);
    r.set("betti", join_ints(inv.betti));
    Ideal<F> q(inst.ring, inst.params);
    if (q.quotient_dim() <= 0) {
      r.set("len_a_mod_q", artinian_length(q));
      r.set("e_q", multiplicity(q).value);
    }
    r.set("e_m", multiplicity(Ideal<F>::maximal(inst.ring)).value);
    return kGorenstein;
  }
  if (o.command == "s2") {
    CohomologyData<F> coh(inst.ring);
    auto s = analyze_s2(coh, inst.params, o.seed);
    put_profile(r, s.profile);
    r.set("conductor", s.conductor.to_string());
    if (!s.profile.verdict) return kHypothesisUnmet;
    r.set("standard", *s.standard);
    if (!s.data) return kHypothesisUnmet;
    r.set("pair", s.pair->a.to_string() + ", " + s.pair->b.to_string());
    r.set("colon", s.data->colon_ideal.to_string());
    r.set("h1_length", s.data->h1_length);
    if (s.socle) r.set("h1_socle", *s.socle);
    r.set("colon_pd", *s.colon_pd);
    try {
      auto pres = s2_presentation(inst.ring, *s.data);
      r.set("presentation.connected", true);
      r.set("presentation.variables", pres.ring->nvars());
      r.set("presentation.relations", join_polys(pres.ring->relations()));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NonConnected) throw;
      r.set("presentation.connected", false);
      r.narrate(e.what());
    }
    return kGorenstein;
  }
  fail(ErrorKind::InvalidArgument, "unknown command '" + o.command + "'");
}

inline void emit(const Options& o, const std::string& text, std::ostream& out) {
  if (o.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) fail(ErrorKind::InvalidArgument, "cannot write " + o.out);
  f << text;
}

template <class F>
std::string example_text(const std::string& name, const F& field, std::uint32_t ch) {
  return print_document(document_from_instance(corpus_instance<F>(name, field), ch));
}

}  // namespace detail

/// Runs one invocation; returns the process exit code.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gorenstein Rees algebras of parameter ideals"};
  app.require_subcommand(1);
  Options o;
  std::uint32_t ch = 0;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--mode", o.mode, "criteria, oracle or both")->check(CLI::IsMember({"criteria", "oracle", "both"}));
    sub->add_option("--char", ch, "characteristic (0 = rationals)");
    sub->add_option("--seed", o.seed, "seed for the filter-regular pair search");
    sub->add_option("--rmax", o.r_max, "largest reduction number tried");
    sub->add_option("--resolution-cap", o.resolution_cap, "longest resolution computed");
    sub->add_option("--out", o.out, "write the report here");
  };
  const std::pair<const char*, const char*> commands[] = {
      {"check", "decide whether R(q^d) is Gorenstein"},
      {"oracle", "resolve R(q^n) directly"},
      {"shimoda", "test the two-element criterion on (q1, q2)"},
      {"buchsbaum", "test the multiplicity criterion for Buchsbaum rings"},
      {"invariants", "dimension, depth, type and multiplicities"},
      {"s2", "the S2-ification and its presentation"}};
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("input", o.input, "input file")->required();
    add_common(sub);
    if (std::string(name) == "buchsbaum" || std::string(name) == "check")
      sub->add_flag("--assume-buchsbaum", o.assume_buchsbaum, "assert that A is Buchsbaum");
  }
  auto* ex = app.add_subcommand("examples", "print a corpus input file");
  std::string ex_name;
  ex->add_option("name", ex_name, "example name")->required()->check(CLI::IsMember(corpus_names()));
  ex->add_option("--out", o.out, "write the file here");
  ex->add_option("--char", ch, "characteristic");

  std::vector<const char*> argv{"reesgor"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    std::ostringstream msg;
    const int code = app.exit(e, msg, msg);
    (code == 0 ? out : err) << msg.str();
    return code == 0 ? 0 : kInputError;
  }
  o.command = app.get_subcommands().front()->get_name();
  if (app.get_subcommands().front()->count("--char")) o.characteristic = ch;

  ReportDocument report;
  report.set("command", o.command);
  try {
    if (o.command == "examples") {
      const std::uint32_t c = o.characteristic.value_or(32003);
      std::string text = c == 0 ? detail::example_text(ex_name, RationalField{}, 0)
                                : detail::example_text(ex_name, PrimeField(c), c);
      detail::emit(o, text, out);
      return 0;
    }
    std::ifstream f(o.input, std::ios::binary);
    if (!f) fail(ErrorKind::InvalidArgument, "cannot read " + o.input);
    std::stringstream buf;
    buf << f.rdbuf();
    InputDocument doc;
    try {
      doc = parse_document(buf.str());
    } catch (const ParseError& e) {
      err << o.input << ": " << e.what() << "\n";
      return kInputError;
    }
    if (o.characteristic) doc.characteristic = *o.characteristic;
    Limits lim;
    lim.resolution_cap = o.resolution_cap;
    int code = 0;
    try {
      if (doc.characteristic == 0)
        code = detail::run_command(o, doc, build_instance(doc, RationalField{}, lim), report);
      else
        code = detail::run_command(o, doc, build_instance(doc, PrimeField(doc.characteristic), lim), report);
    } catch (const ParseError& e) {
      err << o.input << ": " << e.what() << "\n";
      return kInputError;
    }
    report.set("exit_code", code);
    detail::emit(o, report.str(), out);
    return code;
  } catch (const Error& e) {
    const int code = exit_code_for(e.kind());
    report.set("error", to_string(e.kind()));
    report.set("exit_code", code);
    report.narrate(e.what());
    err << "error: " << e.what() << "\n";
    try {
      detail::emit(o, report.str(), out);
    } catch (const Error&) {
    }
    return code;
  }
}

}  // namespace reesgor::cli
