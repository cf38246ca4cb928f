#include "cli_app.hpp"

#include "seshadri/apps.hpp"
#include "seshadri/bounds.hpp"
#include "seshadri/lptest.hpp"
#include "seshadri/nefcert.hpp"
#include "seshadri/serialize.hpp"
#include "seshadri/stats.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace seshadri::cli {

namespace {

using io::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { Table, Csv, Json };

Format parse_format(const std::string& s) {
  if (s == "table") return Format::Table;
  if (s == "csv") return Format::Csv;
  if (s == "json") return Format::Json;
  throw UsageError("unknown format '" + s + "' (table, csv, json)");
}

Rational parse_rational(const std::string& s, const std::string& what) {
  try {
    return Rational::parse(s);
  } catch (const DomainError&) {
    throw UsageError(what + ": not a rational number: '" + s + "'");
  }
}

Integer parse_integer(const std::string& s, const std::string& what, bool positive = true) {
  Rational r = parse_rational(s, what);
  if (!r.is_integer()) throw UsageError(what + ": expected an integer, got '" + s + "'");
  if (positive && r.sign() <= 0) throw UsageError(what + " must be a positive integer");
  if (!positive && r.sign() < 0) throw UsageError(what + " must be nonnegative");
  return r.num();
}

std::optional<Integer> opt_integer(const std::string& s, const std::string& what, bool positive = true) {
  if (s.empty()) return std::nullopt;
  return parse_integer(s, what, positive);
}

std::vector<Integer> parse_list(const std::string& text, const std::string& what) {
  std::vector<Integer> out;
  std::string tok;
  std::istringstream in(text);
  auto flush = [&] {
    if (!tok.empty()) out.push_back(parse_integer(tok, what, false));
    tok.clear();
  };
  char ch;
  while (in.get(ch)) {
    if (ch == ',' || std::isspace(static_cast<unsigned char>(ch))) flush();
    else tok.push_back(ch);
  }
  flush();
  if (out.empty()) throw UsageError(what + ": empty list");
  return out;
}

std::string read_input(const std::string& path) {
  std::ostringstream buf;
  if (path.empty() || path == "-") {
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream f(path);
  if (!f) throw UsageError("cannot open '" + path + "'");
  buf << f.rdbuf();
  return buf.str();
}

std::string pretty_tag(bounds::SetTag t) {
  switch (t) {
    case bounds::SetTag::S1: return "S1";
    case bounds::SetTag::S2: return "S2";
    case bounds::SetTag::S1Refined: return "S1′";
    case bounds::SetTag::S2Refined: return "S2′";
  }
  return "?";
}

// 4 x33  or  1 x7, 1/2 x8
std::string run_length(const std::vector<Rational>& v) {
  std::string out;
  std::size_t i = 0;
  while (i < v.size()) {
    std::size_t j = i;
    while (j < v.size() && v[j] == v[i]) ++j;
    if (!out.empty()) out += ", ";
    out += v[i].str() + " x" + std::to_string(j - i);
    i = j;
  }
  return out;
}

std::string run_length(const std::vector<Integer>& v) {
  std::vector<Rational> r(v.begin(), v.end());
  return run_length(r);
}

void print_certificate_table(std::ostream& out, const nef::NefCertificate& c) {
  out << "provenance: " << c.provenance << "\n";
  out << "divisor: " << c.divisor.c0 << " L' - [" << run_length(c.divisor.e) << "]  (n=" << c.divisor.n
      << ", l=" << c.divisor.l << ")\n";
  out << "a0: " << c.a0 << "\n";
  out << "curve: d=" << c.curve.d << " mults [" << run_length(c.curve.mults) << "]\n";
  for (std::size_t i = 0; i < c.checks.size(); ++i) {
    out << "  " << nef::kCheckNames[i] << ": " << (c.checks[i] ? "pass" : "FAIL") << "\n";
  }
  if (auto u = c.uniform_ratio()) out << "ratio: " << *u << "  " << u->to_decimal() << "\n";
  for (const auto& f : c.validity_flags) out << "flag: " << f << "\n";
  out << (c.valid ? "valid" : "invalid") << "\n";
}

// ---- subcommands -------------------------------------------------------

struct EpsilonOpts {
  std::string n, l, format = "table";
  bool refined = false, witness = false;
};

int cmd_epsilon(const EpsilonOpts& o, std::ostream& out) {
  Integer n = parse_integer(o.n, "n");
  Integer l = parse_integer(o.l, "l");
  Format f = parse_format(o.format);
  auto b = o.refined ? bounds::epsilon_refined(n, l) : bounds::epsilon_basic(n, l);
  if (f == Format::Json) {
    json j = io::to_json(b);
    if (o.witness && b.witness) j["delta"] = io::integer_json(bounds::delta(Integer(b.witness->r + b.witness->m - 1), b.witness->d, n, l));
    out << j.dump(2) << "\n";
    return 0;
  }
  if (f == Format::Csv) {
    out << "n,l,value_num,value_den,value_decimal,square_case,refined,r,d,m,set\n";
    out << n << "," << l << "," << b.value.num() << "," << b.value.den() << "," << b.value.to_decimal() << ","
        << (b.square_case ? "true" : "false") << "," << (b.refined ? "true" : "false") << ",";
    if (b.witness) {
      out << b.witness->r << "," << b.witness->d << "," << b.witness->m << "," << bounds::tag_name(b.witness->tag);
    } else {
      out << ",,,";
    }
    out << "\n";
    return 0;
  }
  out << b.value;
  if (b.square_case) {
    out << " [square case: supremum]";
  } else if (b.witness) {
    const auto& w = *b.witness;
    out << " (witness r=" << w.r << " d=" << w.d;
    if (b.refined) out << " m=" << w.m;
    out << " " << pretty_tag(w.tag) << ")";
  }
  out << "  " << b.value.to_decimal() << "\n";
  if (o.witness && b.witness) {
    Integer R = b.witness->r + b.witness->m - 1;
    out << "delta = (r+m-1)^2 - n*l*d^2 = " << bounds::delta(R, b.witness->d, n, l) << "\n";
  }
  return 0;
}

struct ScanOpts {
  std::string n, l_range, stat = "star", format = "table";
  bool summary_only = false;
};

int cmd_scan(const ScanOpts& o, std::ostream& out, std::ostream& err) {
  Integer n = parse_integer(o.n, "n");
  if (n < 2) throw UsageError("n must be at least 2");
  Format f = parse_format(o.format);
  Integer lo = 1, hi = n;
  if (!o.l_range.empty()) {
    auto pos = o.l_range.find_first_of(":-");
    if (pos == std::string::npos) throw UsageError("--l-range expects A:B");
    lo = parse_integer(o.l_range.substr(0, pos), "l-range start");
    hi = parse_integer(o.l_range.substr(pos + 1), "l-range end");
    if (lo > hi) throw UsageError("--l-range start exceeds end");
  }
  if (o.stat != "star" && o.stat != "I" && o.stat != "J") throw UsageError("--stat must be star, I or J");
  stats::ScanReport rep = stats::star_scan(n, lo, hi, true);

  Integer count = 0;
  for (const auto& r : rep.rows) {
    if (o.stat == "I" ? r.in_I : o.stat == "J" ? r.in_J : (r.star && !r.square_case)) count += 1;
  }
  Rational pct(Integer(100 * count), rep.total_l);
  std::ostringstream summary;
  summary << pct.to_decimal(1) << "% (" << count << "/" << rep.total_l << ")";

  if (f == Format::Json) {
    json j = io::to_json(rep);
    j["stat"] = o.stat;
    j["stat_count"] = io::integer_json(count);
    io::put_rational(j, "stat_percentage", pct, 1);
    j["summary"] = summary.str();
    out << j.dump(2) << "\n";
    return 0;
  }
  if (f == Format::Csv) {
    out << "n,l,epsilon_num,epsilon_den,star,in_I,in_J\n";
    for (const auto& r : rep.rows) {
      out << n << "," << r.l << "," << r.eps.num() << "," << r.eps.den() << "," << (r.star ? "true" : "false")
          << "," << (r.in_I ? "true" : "false") << "," << (r.in_J ? "true" : "false") << "\n";
    }
    err << summary.str() << "\n";
    return 0;
  }
  if (!o.summary_only) {
    out << "l\tepsilon\tdecimal\tstar\tin_I\tin_J\n";
    for (const auto& r : rep.rows) {
      out << r.l << "\t" << r.eps << (r.square_case ? "*" : "") << "\t" << r.eps.to_decimal() << "\t"
          << (r.star ? "true" : "false") << "\t" << (r.in_I ? "true" : "false") << "\t"
          << (r.in_J ? "true" : "false") << "\n";
    }
  }
  out << o.stat << " n=" << n << ": " << summary.str() << "\n";
  return 0;
}

struct NefBuildOpts {
  std::string kind, n, l = "1", r, d, m, which, t, j, dprime, a, b, c, rprime, format = "json";
  bool no_case_check = false;
};

int emit_certificate(const nef::NefCertificate& cert, const std::string& format, std::ostream& out) {
  Format f = parse_format(format);
  if (f == Format::Table) print_certificate_table(out, cert);
  else if (f == Format::Json) out << io::to_json(cert).dump(2) << "\n";
  else throw UsageError("nef output supports table or json");
  return cert.valid ? 0 : 1;
}

int cmd_nef_build(const NefBuildOpts& o, std::ostream& out) {
  std::string kind;
  for (char ch : o.kind) kind.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
  auto need = [&](const std::string& v, const std::string& name) {
    if (v.empty()) throw UsageError("nef build " + kind + " needs --" + name);
    return parse_integer(v, name);
  };
  std::optional<Rational> t, dprime;
  if (!o.t.empty()) t = parse_rational(o.t, "t");
  if (!o.dprime.empty()) dprime = parse_rational(o.dprime, "dprime");

  nef::NefCertificate cert;
  if (kind == "nefcor") {
    Integer n = need(o.n, "n");
    Integer r = o.r.empty() ? n : parse_integer(o.r, "r");
    nef::UniformCase which;
    if (o.which == "a") which = nef::UniformCase::A;
    else if (o.which == "b") which = nef::UniformCase::B;
    else if (o.which == "c") which = nef::UniformCase::C;
    else throw UsageError("nef build nefcor needs --case a|b|c");
    cert = nef::build_nefcor(n, parse_integer(o.l, "l"), r, need(o.d, "d"), which, t, !o.no_case_check);
  } else if (kind == "nefcorb") {
    Integer n = need(o.n, "n");
    Integer r = o.r.empty() ? n : parse_integer(o.r, "r");
    cert = nef::build_nefcorB(n, parse_integer(o.l, "l"), r, need(o.d, "d"), opt_integer(o.j, "j", false), dprime,
                              !o.no_case_check);
  } else if (kind == "nefcorref") {
    Integer n = need(o.n, "n");
    Integer r = o.r.empty() ? n : parse_integer(o.r, "r");
    cert = nef::build_nefcorRef(n, parse_integer(o.l, "l"), r, need(o.d, "d"), need(o.m, "m"), t);
  } else if (kind == "plusonecor") {
    cert = nef::build_plusonecor(need(o.n, "n"), need(o.d, "d"), need(o.rprime, "rprime"));
  } else if (kind == "adhoc") {
    cert = nef::build_adhoc(need(o.n, "n"), need(o.a, "a"), need(o.b, "b"), need(o.c, "c"), need(o.rprime, "rprime"));
  } else {
    throw UsageError("unknown constructor '" + o.kind + "' (nefcor, nefcorb, nefcorref, plusonecor, adhoc)");
  }
  return emit_certificate(cert, o.format, out);
}

int cmd_nef_check(const std::string& path, const std::string& format, std::ostream& out) {
  std::string text = read_input(path);
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw UsageError(std::string("malformed certificate JSON: ") + e.what());
  }
  nef::NefCertificate cert;
  try {
    cert = io::certificate_from_json(j);
  } catch (const json::exception& e) {
    throw UsageError(std::string("malformed certificate JSON: ") + e.what());
  } catch (const DomainError& e) {
    throw UsageError(std::string("malformed certificate JSON: ") + e.what());
  }
  return emit_certificate(cert, format, out);
}

struct LpOpts {
  std::string t, mults, mults_file, n, l = "1", solver = "block", format = "json";
};

int cmd_lp(const LpOpts& o, std::ostream& out) {
  if (o.mults.empty() == o.mults_file.empty()) throw UsageError("give exactly one of --mults or --mults-file");
  std::vector<Integer> b =
      o.mults.empty() ? parse_list(read_input(o.mults_file), "multiplicity file") : parse_list(o.mults, "--mults");
  lp::TargetSystem target;
  target.t = parse_rational(o.t, "t");
  target.l = parse_integer(o.l, "l");
  target.n = o.n.empty() ? Integer(static_cast<unsigned long>(b.size())) : parse_integer(o.n, "n");
  if (target.n < Integer(static_cast<unsigned long>(b.size()))) throw UsageError("--n is smaller than the list of multiplicities");
  while (Integer(static_cast<unsigned long>(b.size())) < target.n) b.push_back(0);
  for (std::size_t i = 1; i < b.size(); ++i) {
    if (b[i - 1] < b[i]) throw UsageError("multiplicities must be nonincreasing");
  }
  target.b = std::move(b);
  if (o.solver != "block" && o.solver != "simplex") throw UsageError("--solver must be block or simplex");

  lp::EffectivityVerdict v;
  if (o.solver == "simplex") {
    // same verdict, generic tableau for the optimum
    auto td = lp::optimal_test_divisor(target.b, target.n, target.l, std::nullopt, std::nullopt, lp::Solver::Simplex);
    v = lp::certify_empty(target);
    v.threshold = td.threshold;
  } else {
    v = lp::certify_empty(target);
  }
  Format f = parse_format(o.format);
  if (f == Format::Json) {
    json j = io::to_json(v);
    j["t"] = target.t.str();
    io::put_rational(j, "uniform_threshold", lp::uniform_threshold(target.b, target.n, target.l));
    out << j.dump(2) << "\n";
  } else if (f == Format::Table) {
    out << "threshold: " << v.threshold << "  " << v.threshold.to_decimal() << "\n";
    if (v.best_test_divisor) {
      out << "test divisor: r=" << v.best_test_divisor->curve.mults.size() << " d=" << v.best_test_divisor->curve.d
          << " a=[" << run_length(v.best_test_divisor->divisor.e) << "]\n";
    }
    Rational u = lp::uniform_threshold(target.b, target.n, target.l);
    out << "uniform threshold: " << u << "  " << u.to_decimal() << "\n";
    out << "F.H = " << v.test_pairing << "\n";
    out << (v.empty_certified ? "certified empty" : "undecided") << " (t = " << target.t << ")\n";
  } else {
    throw UsageError("lp output supports table or json");
  }
  return v.empty_certified ? 0 : 1;
}

struct AppsOpts {
  std::string n, m = "1", format = "table";
};

int cmd_apps(const AppsOpts& o, std::ostream& out) {
  Integer n = parse_integer(o.n, "n");
  Integer m = parse_integer(o.m, "m");
  auto rep = apps::threshold_report(n, m);
  Format f = parse_format(o.format);
  if (f == Format::Json) {
    out << io::to_json(rep).dump(2) << "\n";
    return 0;
  }
  if (f == Format::Csv) {
    out << "n,m,epsilon,effectivity_lb,ampleness_lb,regularity_a,regularity_b,freeness_lb,very_ample_lb\n";
    out << n << "," << m << "," << rep.epsilon << "," << rep.effectivity_lb << "," << rep.ampleness_lb << ",";
    if (rep.regularity) {
      out << rep.regularity->a_threshold << ",";
      if (rep.regularity->b_threshold) out << *rep.regularity->b_threshold;
      out << "," << rep.freeness->free_lb << "," << rep.freeness->va_lb;
    } else {
      out << ",,,";
    }
    out << "\n";
    return 0;
  }
  out << "n=" << n << " m=" << m << "\n";
  out << "epsilon_n: " << rep.epsilon << "  " << rep.epsilon.to_decimal() << (rep.square_case ? " [square case]" : "")
      << "\n";
  out << "effectivity: t >= " << rep.effectivity_lb << "  " << rep.effectivity_lb.to_decimal() << "\n";
  out << "ampleness: t > " << rep.ampleness_lb << "  " << rep.ampleness_lb.to_decimal() << "\n";
  if (rep.regularity) {
    out << "regularity (a): " << rep.regularity->a_threshold << (rep.regularity->sharp ? " (sharp)" : "") << "\n";
    if (rep.regularity->b_threshold) out << "regularity (b): " << *rep.regularity->b_threshold << "\n";
    out << "regularity: " << rep.regularity->best() << "\n";
    out << "free: " << rep.freeness->free_lb << "\n";
    out << "very ample: " << rep.freeness->va_lb << "\n";
  } else {
    out << "regularity: rejected (n <= 9)\n";
  }
  for (const auto& note : rep.notes) out << "note: " << note << "\n";
  return 0;
}

int cmd_compare(const std::string& ns, const std::string& format, std::ostream& out) {
  Integer n = parse_integer(ns, "n");
  if (n < 2) throw UsageError("n must be at least 2");
  auto row = bounds::compare_references(n);
  auto special = n >= 1 ? bounds::special_square_bounds(n) : std::vector<bounds::CaseBound>{};
  auto pc = bounds::ptwocor(n);
  Format f = parse_format(format);
  if (f == Format::Json) {
    json j = io::to_json(row);
    json sp = json::array();
    for (const auto& c : special) sp.push_back(io::to_json(c));
    j["special"] = sp;
    json pj = json::array();
    for (const auto& c : pc) pj.push_back(io::to_json(c));
    j["ptwocor"] = pj;
    out << j.dump(2) << "\n";
    return 0;
  }
  if (f == Format::Csv) {
    out << "n,eps,eps_decimal,eps_refined,vs_inv_sqrt_n_plus_1,n_pm1_square,biran,pell_r_le_n\n";
    out << n << "," << row.eps << "," << row.eps.to_decimal() << "," << row.eps_refined << ","
        << row.vs_inv_sqrt_n_plus_1 << "," << (row.n_pm1_square ? "true" : "false") << ","
        << (row.biran ? row.biran->str() : "") << "," << (row.pell_r_le_n ? "true" : "false") << "\n";
    return 0;
  }
  const char* rel = row.vs_inv_sqrt_n_plus_1 > 0 ? ">" : row.vs_inv_sqrt_n_plus_1 < 0 ? "<" : "=";
  out << "n=" << n << "\n";
  out << "eps_n: " << row.eps << "  " << row.eps.to_decimal() << "  " << rel << " 1/sqrt(n+1)"
      << (row.n_pm1_square ? "  (n-1 or n+1 is a square)" : "") << "\n";
  out << "eps'_n: " << row.eps_refined << "  " << row.eps_refined.to_decimal()
      << (row.refined_improves ? "  (improves)" : "") << "\n";
  if (row.biran) {
    out << "pell: r=" << row.pell->r << " d=" << row.pell->d << "  d/r = " << *row.biran << "  "
        << row.biran->to_decimal() << (row.pell_r_le_n ? "" : "  (r > n)") << "\n";
  }
  for (const auto& c : pc) out << "closed form (" << c.tag << "): " << c.value << "  " << c.value.to_decimal() << "\n";
  for (const auto& c : special) {
    out << "special (" << c.tag << "): " << c.value << "  " << c.value.to_decimal()
        << (c.in_refined_set ? "" : "  [outside S']");
    for (const auto& fl : c.flags) out << "  {" << fl << "}";
    out << "\n";
  }
  return 0;
}

int cmd_pell(const std::string& ns, bool positive, const std::string& format, std::ostream& out) {
  Integer N = parse_integer(ns, "N");
  auto p = positive ? bounds::pell_positive(N) : bounds::pell_fundamental(N);
  Format f = parse_format(format);
  if (f == Format::Json) {
    out << io::to_json(p).dump(2) << "\n";
  } else if (f == Format::Csv) {
    out << "N,r,d,rhs\n" << N << "," << p.r << "," << p.d << "," << p.rhs << "\n";
  } else {
    out << p.r << "^2 - " << N << "*" << p.d << "^2 = " << p.rhs << "\n";
  }
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certified lower bounds for multipoint Seshadri constants"};
  app.require_subcommand(1);

  EpsilonOpts eo;
  auto* eps = app.add_subcommand("epsilon", "eps_{n,l} (or the refined eps'_{n,l}) with its witness");
  eps->add_option("n", eo.n, "number of points")->required();
  eps->add_option("l", eo.l, "L^2")->required();
  eps->add_flag("--refined", eo.refined, "use the refined sets S'");
  eps->add_flag("--witness", eo.witness, "also print delta for the witness");
  eps->add_option("--format", eo.format, "table|csv|json");

  ScanOpts so;
  auto* scan = app.add_subcommand("scan", "fraction of l for which (*) holds, with I/J interval data");
  scan->add_option("--n", so.n, "number of points")->required();
  scan->add_option("--l-range", so.l_range, "A:B (default 1:n)");
  scan->add_option("--stat", so.stat, "star|I|J");
  scan->add_option("--format", so.format, "table|csv|json");
  scan->add_flag("--summary-only", so.summary_only, "table: skip per-l rows");

  auto* nef = app.add_subcommand("nef", "build or check nef certificates");
  nef->require_subcommand(1);
  NefBuildOpts bo;
  auto* build = nef->add_subcommand("build", "construct a certificate");
  build->add_option("kind", bo.kind, "nefcor|nefcorb|nefcorref|plusonecor|adhoc")->required();
  build->add_option("--n", bo.n);
  build->add_option("--l", bo.l);
  build->add_option("--r", bo.r);
  build->add_option("--d", bo.d);
  build->add_option("--m", bo.m);
  build->add_option("--case", bo.which, "a|b|c (nefcor)");
  build->add_option("--t", bo.t, "rational t > sqrt(n/l) for case c");
  build->add_option("--j", bo.j);
  build->add_option("--dprime", bo.dprime, "rational d'");
  build->add_option("--a", bo.a);
  build->add_option("--b", bo.b);
  build->add_option("--c", bo.c);
  build->add_option("--rprime", bo.rprime);
  build->add_flag("--no-case-check", bo.no_case_check, "skip case hypotheses and report the failing checks");
  build->add_option("--format", bo.format, "json|table");
  std::string check_path = "-", check_format = "json";
  auto* check = nef->add_subcommand("check", "re-verify a certificate JSON (file or stdin)");
  check->add_option("file", check_path, "path, or - for stdin");
  check->add_option("--format", check_format, "json|table");

  LpOpts lo;
  auto* lpc = app.add_subcommand("lp", "optimal nef test divisor and emptiness verdict");
  lpc->add_option("--t", lo.t, "degree of the target system")->required();
  lpc->add_option("--mults", lo.mults, "comma-separated nonincreasing multiplicities");
  lpc->add_option("--mults-file", lo.mults_file, "one multiplicity per line");
  lpc->add_option("--n", lo.n, "number of points (pads with zeros)");
  lpc->add_option("--l", lo.l);
  lpc->add_option("--solver", lo.solver, "block|simplex");
  lpc->add_option("--format", lo.format, "json|table");

  AppsOpts ao;
  auto* appc = app.add_subcommand("apps", "thresholds for t L' - m(E_1 + ... + E_n) on the plane");
  appc->add_option("--n", ao.n)->required();
  appc->add_option("--m", ao.m);
  appc->add_option("--format", ao.format, "table|csv|json");

  std::string cmp_n, cmp_format = "table";
  auto* cmp = app.add_subcommand("compare", "eps_n against reference bounds (l = 1)");
  cmp->add_option("n", cmp_n)->required();
  cmp->add_option("--format", cmp_format, "table|csv|json");

  std::string pell_n, pell_format = "table";
  bool pell_pos = false;
  auto* pell = app.add_subcommand("pell", "least solution of r^2 - N d^2 = +-1");
  pell->add_option("N", pell_n)->required();
  pell->add_flag("--positive", pell_pos, "require r^2 - N d^2 = +1");
  pell->add_option("--format", pell_format, "table|csv|json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (eps->parsed()) return cmd_epsilon(eo, out);
    if (scan->parsed()) return cmd_scan(so, out, err);
    if (build->parsed()) return cmd_nef_build(bo, out);
    if (check->parsed()) return cmd_nef_check(check_path, check_format, out);
    if (lpc->parsed()) return cmd_lp(lo, out);
    if (appc->parsed()) return cmd_apps(ao, out);
    if (cmp->parsed()) return cmd_compare(cmp_n, cmp_format, out);
    if (pell->parsed()) return cmd_pell(pell_n, pell_pos, pell_format, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionViolation& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }
  err << "error: no command\n";
  return 2;
}

}  // namespace seshadri::cli
