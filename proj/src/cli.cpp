#include "algknot/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "algknot/errors.hpp"
#include "algknot/numbers.hpp"
#include "algknot/puiseux.hpp"
#include "algknot/semigroup.hpp"
#include "algknot/signature.hpp"
#include "algknot/upsilon.hpp"

namespace algknot::cli {

namespace {

using nlohmann::json;

Int to_int(const std::string& text) {
  const Rat r = parse_rational(text);
  if (boost::multiprecision::denominator(r) != 1)
    throw InvalidInput(Errc::MalformedText, "expected an integer, got '" + text + "'");
  return boost::multiprecision::numerator(r);
}

struct KnotOptions {
  std::string puiseux;
  std::vector<std::string> torus;

  KnotSpec resolve() const {
    if (!puiseux.empty() && !torus.empty())
      throw CLI::ValidationError("give either --puiseux or --torus, not both");
    if (!puiseux.empty())
      return KnotSpec::algebraic(PuiseuxSequence::parse(puiseux));
    if (torus.size() == 2)
      return KnotSpec::torus(to_int(torus[0]), to_int(torus[1]));
    throw CLI::ValidationError("a knot is required: --puiseux \"q0;q1,...\" or --torus p q");
  }
};

void add_knot_options(CLI::App* cmd, KnotOptions& opts) {
  cmd->add_option("--puiseux", opts.puiseux, "Puiseux characteristic sequence \"q0;q1,...\"");
  cmd->add_option("--torus", opts.torus, "torus knot parameters p q")->expected(2);
}

/// A pair argument: either "torus p q" (three tokens) or a Puiseux text.
KnotSpec parse_knot_tokens(const std::vector<std::string>& tokens, const std::string& flag) {
  if (tokens.size() == 3 && tokens[0] == "torus")
    return KnotSpec::torus(to_int(tokens[1]), to_int(tokens[2]));
  if (tokens.size() == 1 && tokens[0] != "torus")
    return KnotSpec::algebraic(PuiseuxSequence::parse(tokens[0]));
  throw CLI::ValidationError(flag + " expects \"q0;q1,...\" or: torus p q");
}

json int_list(const std::vector<Int>& v) {
  json arr = json::array();
  for (const auto& x : v) arr.push_back(x.str());
  return arr;
}

json stage_list(const IteratedTorusDescription& it) {
  json arr = json::array();
  for (const auto& [p, r] : it.stages) arr.push_back({p.str(), r.str()});
  return arr;
}

std::string stages_text(const IteratedTorusDescription& it) {
  std::string out;
  for (const auto& [p, r] : it.stages) {
    if (!out.empty()) out += ",";
    out += "(" + p.str() + "," + r.str() + ")";
  }
  return "(" + out + ")";
}

void emit_key_values(std::ostream& out, const json& j, const std::string& format) {
  if (format == "json") {
    out << j.dump(2) << "\n";
    return;
  }
  const char sep = format == "csv" ? ',' : ' ';
  for (const auto& [key, value] : j.items()) {
    out << key << (format == "csv" ? "" : ":") << sep;
    if (value.is_string()) out << value.get<std::string>();
    else out << value.dump();
    out << "\n";
  }
}

int run_info(const KnotOptions& opts, const std::string& format, std::ostream& out) {
  const KnotSpec knot = opts.resolve();
  const auto& seq = knot.sequence();
  json j;
  j["knot"] = knot.display();
  j["puiseux"] = int_list(seq.terms());
  j["gcd_chain"] = int_list(seq.gcd_chain());
  j["semigroup_generators"] = int_list(seq.semigroup_generators());
  j["cable_stages"] = stage_list(seq.cable_stages());
  j["milnor"] = seq.milnor_number().str();
  j["genus"] = seq.genus().str();
  j["slice_genus"] = seq.slice_genus().str();
  j["unknotting_number"] = seq.unknotting_number().str();
  j["tau"] = tau_of(knot).str();
  if (format == "text") {
    out << "knot: " << knot.display() << "\n"
        << "puiseux: (" << seq.to_text() << ")\n"
        << "gcd chain:";
    for (const auto& d : seq.gcd_chain()) out << " " << d;
    out << "\nsemigroup generators:";
    for (const auto& s : seq.semigroup_generators()) out << " " << s;
    out << "\ncable stages: " << stages_text(seq.cable_stages()) << "\n"
        << "milnor number: " << seq.milnor_number() << "\n"
        << "genus = slice genus = unknotting number = tau: " << seq.genus() << "\n";
  } else {
    emit_key_values(out, j, format);
  }
  return 0;
}

int run_upsilon(const KnotOptions& opts, const std::string& format,
                const std::vector<std::string>& at, int samples, std::ostream& out) {
  const KnotSpec knot = opts.resolve();
  const PiecewiseLinear ups = upsilon_of(knot);
  json j;
  j["knot"] = knot.display();
  j["breakpoints"] = ups.to_json();
  j["first_singularity"] = to_fraction_string(first_singularity(knot));
  j["tau"] = tau_of(knot).str();
  json evals = json::array();
  for (const auto& text : at) {
    const Rat t = parse_rational(text);
    evals.push_back({{"t", to_fraction_string(t)}, {"v", to_fraction_string(ups.evaluate(t))}});
  }
  if (!evals.empty()) j["evaluations"] = evals;
  json sample_rows = json::array();
  for (int k = 0; k <= samples && samples > 0; ++k) {
    const Rat t(k, samples);
    const Rat v = ups.evaluate(t);
    sample_rows.push_back({{"t", to_fraction_string(t)},
                           {"v", to_fraction_string(v)},
                           {"approx", approx(v)}});
  }
  if (samples > 0) j["samples"] = sample_rows;

  if (format == "json") {
    out << j.dump(2) << "\n";
  } else if (format == "csv") {
    out << "t,v,approx\n";
    const json& rows = samples > 0 ? sample_rows : j["breakpoints"];
    for (const auto& row : rows) {
      const Rat v = parse_rational(row["v"].get<std::string>());
      out << row["t"].get<std::string>() << "," << row["v"].get<std::string>() << ","
          << approx(v) << "\n";
    }
  } else {
    out << "knot: " << knot.display() << "\n"
        << "Upsilon breakpoints on [0,1]:\n";
    for (const auto& p : ups.breakpoints())
      out << "  t = " << to_fraction_string(p.t) << "  v = " << to_fraction_string(p.v)
          << "\n";
    out << "first singularity: t = " << j["first_singularity"].get<std::string>() << "\n"
        << "tau: " << j["tau"].get<std::string>() << "\n";
    for (const auto& e : evals)
      out << "Upsilon(" << e["t"].get<std::string>() << ") = " << e["v"].get<std::string>()
          << "\n";
    for (const auto& s : sample_rows)
      out << "sample t = " << s["t"].get<std::string>() << "  v = "
          << s["v"].get<std::string>() << "  approx " << s["approx"].dump() << "\n";
  }
  return 0;
}

int run_signature(const KnotOptions& opts, const std::string& format,
                  const std::vector<std::string>& at, std::ostream& out) {
  const KnotSpec knot = opts.resolve();
  if (!knot.is_torus())
    throw InvalidInput(Errc::MalformedText, "signature requires a torus knot");
  const auto sig = torus_signature(knot.sequence().terms()[0], knot.sequence().terms()[1]);
  json j;
  j["knot"] = knot.display();
  j["jumps"] = sig.to_json();
  json evals = json::array();
  for (const auto& text : at) {
    const Rat x = parse_rational(text);
    evals.push_back({{"x", to_fraction_string(x)}, {"sigma", sig.value_at(x).str()}});
  }
  if (!evals.empty()) j["evaluations"] = evals;

  if (format == "json") {
    out << j.dump(2) << "\n";
  } else if (format == "csv") {
    out << "x,delta\n";
    for (const auto& jump : sig.jumps())
      out << to_fraction_string(jump.x) << "," << jump.delta << "\n";
  } else {
    out << "knot: " << knot.display() << "\n"
        << "signature jumps on (0,1):\n";
    for (const auto& jump : sig.jumps())
      out << "  x = " << to_fraction_string(jump.x) << "  delta = " << (jump.delta > 0 ? "+" : "")
          << jump.delta << "\n";
    for (const auto& e : evals)
      out << "sigma(" << e["x"].get<std::string>() << ") = " << e["sigma"].get<std::string>()
          << "\n";
  }
  return 0;
}

int run_obstruct(const std::vector<std::string>& k0_tokens,
                 const std::vector<std::string>& k1_tokens, const std::string& format,
                 std::ostream& out) {
  KnotSpec k0 = parse_knot_tokens(k0_tokens, "--k0");
  KnotSpec k1 = parse_knot_tokens(k1_tokens, "--k1");
  // The report is asymmetric: orient the pair so that genus(k0) <= genus(k1).
  if (k0.genus() > k1.genus()) std::swap(k0, k1);
  ObstructionReport report = obstruct_minimal(k0, k1);
  json extra = json::object();
  if (k0.is_torus() && k1.is_torus()) {
    const Int diff_max = signature_diff_max(k0, k1);
    report.signature_bound = signature_cobordism_bound(k0, k1);
    extra["signature_diff_max"] = diff_max.str();
  }
  json j = report.to_json();
  j.update(extra);
  if (format == "text") {
    out << "pair: " << report.k0.display() << " -> " << report.k1.display() << "\n"
        << "genus: " << report.g0 << " vs " << report.g1 << "\n"
        << "tau bound: " << report.tau_bound << "\n"
        << "upsilon bound: " << report.upsilon_bound << " (witness t = "
        << to_fraction_string(report.witness_t) << ")\n";
    if (report.signature_bound)
      out << "signature bound: " << *report.signature_bound << " (max |diff| = "
          << extra["signature_diff_max"].get<std::string>() << ")\n";
    out << "verdict: " << verdict_name(report.verdict) << "\n";
  } else {
    emit_key_values(out, j, format);
  }
  return 0;
}

int run_search_family(const Int& max_a, const Int& max_b_in, const Int& max_c,
                      const std::string& format, std::ostream& out) {
  const Int max_b = max_b_in > 0 ? max_b_in : max_c;
  json rows = json::array();
  for (Int a = 2; a <= max_a; ++a) {
    for (Int b = 2 * a + 1; b <= max_b; ++b) {
      for (Int c = 3 * b + 1; c <= max_c; ++c) {
        const auto fam = family_check(a, b, c);
        if (!fam.knots) continue;
        const KnotSpec k0 = KnotSpec::algebraic(fam.knots->first);
        const KnotSpec k1 = KnotSpec::algebraic(fam.knots->second);
        const ObstructionReport report = obstruct_minimal(k0, k1);
        rows.push_back({{"a", a.str()},
                        {"b", b.str()},
                        {"c", c.str()},
                        {"d", fam.d.str()},
                        {"seq0", fam.knots->first.to_text()},
                        {"seq1", fam.knots->second.to_text()},
                        {"g0", report.g0.str()},
                        {"g1", report.g1.str()},
                        {"tau_bound", report.tau_bound.str()},
                        {"upsilon_bound", report.upsilon_bound.str()},
                        {"verdict", verdict_name(report.verdict)}});
      }
    }
  }
  if (format == "json") {
    out << rows.dump(2) << "\n";
  } else {
    static const char* cols[] = {"a", "b", "c", "d", "seq0", "seq1", "g0",
                                 "g1", "tau_bound", "upsilon_bound", "verdict"};
    const char sep = format == "csv" ? ',' : ' ';
    if (format == "csv") out << "a,b,c,d,seq0,seq1,g0,g1,tau_bound,upsilon_bound,verdict\n";
    for (const auto& row : rows) {
      bool first = true;
      for (const char* col : cols) {
        if (!first) out << sep;
        out << row[col].get<std::string>();
        first = false;
      }
      out << "\n";
    }
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"invariants of algebraic knots from Puiseux characteristic sequences"};
  app.require_subcommand(1);

  std::string format = "text";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();

  KnotOptions info_knot, upsilon_knot, signature_knot;
  std::vector<std::string> at_upsilon, at_signature;
  int samples = 0;
  std::vector<std::string> k0_tokens, k1_tokens;
  Int max_a = 0, max_b = 0, max_c = 0;
  std::string max_a_s, max_b_s, max_c_s = "0";

  auto* info = app.add_subcommand("info", "classical invariants of a knot");
  add_knot_options(info, info_knot);

  auto* upsilon = app.add_subcommand("upsilon", "the Upsilon function as exact breakpoints");
  add_knot_options(upsilon, upsilon_knot);
  upsilon->add_option("--at", at_upsilon, "evaluate at rational t (repeatable)");
  upsilon->add_option("--samples", samples, "also emit N+1 evenly spaced samples");

  auto* signature = app.add_subcommand("signature", "Tristram-Levine signature of a torus knot");
  add_knot_options(signature, signature_knot);
  signature->add_option("--at", at_signature, "evaluate at rational x (repeatable)");

  auto* obstruct = app.add_subcommand("obstruct", "minimal-cobordism obstruction for a pair");
  obstruct->add_option("--k0", k0_tokens, "first knot: \"q0;q1,...\" or: torus p q")
      ->expected(1, 3)->required();
  obstruct->add_option("--k1", k1_tokens, "second knot: \"q0;q1,...\" or: torus p q")
      ->expected(1, 3)->required();

  auto* search = app.add_subcommand("search-family", "enumerate obstructed family triples (a,b,c)");
  search->add_option("--max-a", max_a_s, "largest a")->required();
  search->add_option("--max-b", max_b_s, "largest b (default: max-c)");
  search->add_option("--max-c", max_c_s, "largest c")->required();

  // lets --format appear after the subcommand
  for (auto* sub : {info, upsilon, signature, obstruct, search}) sub->fallthrough();

  try {
    std::vector<const char*> argv{"algknot"};
    for (const auto& a : args) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    std::ostringstream msg_out;
    const int code = app.exit(e, msg_out, msg_out);
    (code == 0 ? out : err) << msg_out.str();
    return code == 0 ? 0 : 1;
  }

  try {
    if (info->parsed()) return run_info(info_knot, format, out);
    if (upsilon->parsed())
      return run_upsilon(upsilon_knot, format, at_upsilon, samples, out);
    if (signature->parsed()) return run_signature(signature_knot, format, at_signature, out);
    if (obstruct->parsed()) return run_obstruct(k0_tokens, k1_tokens, format, out);
    if (search->parsed()) {
      max_a = to_int(max_a_s);
      max_b = max_b_s.empty() ? Int(0) : to_int(max_b_s);
      max_c = to_int(max_c_s);
      return run_search_family(max_a, max_b, max_c, format, out);
    }
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace algknot::cli
