#pragma once

#include <CLI11.hpp>

#include "m0n/cli/commands.hpp"

namespace m0n::cli {

inline void emit(const Options& o, const std::string& text, std::ostream& out) {
  if (o.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw UsageError("field 'out': cannot write '" + o.out + "'");
  f << text;
}

/// Canonical divisor document; compact in machine format.
inline int cmd_convert(const Options& o, std::ostream& out) {
  const DivisorClass d = read_divisor(o);
  emit(o, o.format == Format::machine ? compact(d) + "\n" : format_divisor(d), out);
  return kOk;
}

inline Report dispatch(const Options& o) {
  if (o.verb == "dim") return cmd_dim(o);
  if (o.verb == "intersect") return cmd_intersect(o);
  if (o.verb == "fnef") return cmd_fnef(o);
  if (o.verb == "decompose") return cmd_decompose(o);
  if (o.verb == "chamber") return cmd_chamber(o);
  if (o.verb == "classify-fib") return cmd_classify(o);
  if (o.verb == "sym-ineqs") return cmd_sym_ineqs(o);
  if (o.verb == "sym-scan") return cmd_sym_scan(o);
  if (o.verb == "m62") return cmd_m62(o);
  if (o.verb == "certify") return cmd_certify(o);
  if (o.verb == "rays") return cmd_rays(o);
  throw UsageError("unknown verb '" + o.verb + "'");
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact divisor computations on moduli of stable pointed rational curves", "m0n"};
  app.require_subcommand(1);
  Options o;
  std::string format = "human";

  auto common = [&](CLI::App* sub, bool needs_n, bool needs_in, bool needs_group) {
    if (needs_n) sub->add_option("--n", o.n, "number of marked points")->check(CLI::Range(4, kMaxPoints));
    if (needs_in) sub->add_option("--in", o.in, "divisor document ('-' for stdin)");
    if (needs_group) sub->add_option("--group", o.group, "symmetry: sym:g, full or none");
    sub->add_option("--out", o.out, "write output here instead of stdout");
    sub->add_option("--format", format, "human or machine")->check(CLI::IsMember({"human", "machine"}));
    sub->add_option("--seed", o.seed, "seed for sampled checks");
  };
  common(app.add_subcommand("dim", "rank of the Picard group"), true, false, false);
  common(app.add_subcommand("convert", "canonicalize a divisor document"), true, true, false);
  auto* inter = app.add_subcommand("intersect", "pair a divisor with F-curves");
  common(inter, true, true, true);
  inter->add_option("--curve", o.curve, "single curve, e.g. [1,2]|[3]|[4]|[5,6]");
  common(app.add_subcommand("fnef", "check all F-curve pairings"), true, true, true);
  auto* dec = app.add_subcommand("decompose", "effective boundary expression");
  common(dec, true, true, true);
  dec->add_option("--branch", o.force_branch, "force the eight-point branch (1 or 2)")->check(CLI::Range(0, 2));
  common(app.add_subcommand("chamber", "six-point subcone of an F-nef divisor"), true, true, false);
  common(app.add_subcommand("classify-fib", "fibration type, n = 5 or 6"), true, true, false);
  common(app.add_subcommand("sym-ineqs", "symmetric F-inequalities"), true, false, false);
  common(app.add_subcommand("sym-scan", "slice maxima of the symmetric F-nef region"), true, false, false);
  auto* m62 = app.add_subcommand("m62", "eight-point S6 census, or decompose --in");
  common(m62, false, true, false);
  m62->add_option("--samples", o.samples, "random F-nef samples to decompose")->check(CLI::NonNegativeNumber);
  m62->add_option("--branch", o.force_branch, "force a branch (1 or 2)")->check(CLI::Range(0, 2));
  auto* cert = app.add_subcommand("certify", "nef certificate over boundary restrictions");
  common(cert, true, true, true);
  cert->add_flag("--verify", o.verify, "check a certificate document given by --in");
  common(app.add_subcommand("rays", "extremal rays of the invariant F-nef cone"), true, false, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }
  o.verb = app.get_subcommands().front()->get_name();
  o.format = format == "machine" ? Format::machine : Format::human;

  try {
    if (o.verb == "convert") return cmd_convert(o, out);
    const Report r = dispatch(o);
    std::ostringstream text;
    r.write(text, o.format);
    if (o.verb == "certify" && !o.out.empty()) {
      out << text.str();  // certificate already written to --out
    } else {
      emit(o, text.str(), out);
    }
    return r.status;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const InvarianceError& e) {
    err << "error: field 'group': " << e.what() << '\n';
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const ShapeError& e) {
    err << "error: " << e.what() << '\n';
  }
  return kUsage;
}

}  // namespace m0n::cli
