#include "hypfib/cli.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hypfib/charsums.hpp"
#include "hypfib/counting.hpp"
#include "hypfib/errors.hpp"
#include "hypfib/moments.hpp"
#include "hypfib/rng.hpp"
#include "hypfib/sieve.hpp"
#include "hypfib/singular.hpp"
#include "hypfib/surface_io.hpp"
#include "hypfib/tau.hpp"
#include "hypfib/vdc.hpp"

namespace hypfib {

namespace {

using ojson = nlohmann::ordered_json;

struct RunConfig {
  std::string surface;
  std::int64_t B = 1;
  std::int64_t p = 5, pp = 11, q = 3, qq = 7;
  std::int64_t c = 1;
  std::int64_t lambda = 1;
  std::string h = "1,0", mu = "0,1", sector = "0,0", u = "0,0";
  int r = 1;
  std::uint64_t seed = 1;
  std::string format;
  std::string out;
  bool force = false;
  unsigned threads = 1;
  int samples = 200;
  std::int64_t tau = -1;
  bool locus = false;
  bool h4 = false;
  std::string count = "six";
};

std::pair<std::int64_t, std::int64_t> ParsePair(const std::string& text, const char* flag) {
  const auto comma = text.find(',');
  Require(comma != std::string::npos, std::string(flag) + ": expected INT,INT, got '" + text + "'");
  try {
    std::size_t a = 0, b = 0;
    const std::int64_t x = std::stoll(text.substr(0, comma), &a);
    const std::int64_t y = std::stoll(text.substr(comma + 1), &b);
    Require(a == comma && b == text.size() - comma - 1, std::string(flag) + ": trailing characters in '" + text + "'");
    return {x, y};
  } catch (const std::logic_error&) {
    throw InputError(std::string(flag) + ": expected INT,INT, got '" + text + "'");
  }
}

Surface SurfaceFrom(const RunConfig& cfg) {
  return cfg.surface.empty() ? SampleSurface() : LoadSurface(cfg.surface);
}

std::uint64_t NonNeg(std::int64_t v, const char* flag) {
  Require(v >= 0, std::string(flag) + " must be non-negative");
  return static_cast<std::uint64_t>(v);
}

std::string Num(double v) {
  std::ostringstream os;
  os << std::setprecision(12) << v;
  return os.str();
}

void Emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  Require(static_cast<bool>(f), "cannot open output file " + cfg.out);
  f << text;
  if (!text.empty() && text.back() != '\n') f << '\n';
}

bool WantJson(const RunConfig& cfg, bool json_default) {
  if (cfg.format.empty()) return json_default;
  return cfg.format == "json";
}

TauSpec SpecFrom(const RunConfig& cfg, const Surface& s) {
  const auto [h1, h2] = ParsePair(cfg.h, "--h");
  const auto [m1, m2] = ParsePair(cfg.mu, "--mu");
  const auto [i, j] = ParsePair(cfg.sector, "--sector");
  const std::uint64_t p = NonNeg(cfg.p, "--p");
  auto el = [&](std::int64_t v) { return static_cast<Fq>(Mod(v, static_cast<std::int64_t>(p))); };
  Require(p >= 3 && IsPrime(p), "--p must be an odd prime");
  return MakeTauSpec(s, p, cfg.r, el(cfg.lambda), el(h1), el(h2), el(m1), el(m2), static_cast<int>(i),
                     static_cast<int>(j));
}

std::string CmdGoodPrimes(const RunConfig& cfg) {
  const Surface s = SurfaceFrom(cfg);
  const std::uint64_t bound = NonNeg(cfg.p, "--p");
  const bool json = WantJson(cfg, false);
  ojson rows = ojson::array();
  std::ostringstream os;
  os << "p,congruent,separable,smooth,good\n";
  for (std::uint64_t p = 3; p <= bound; ++p) {
    if (!IsPrime(p)) continue;
    const auto n = static_cast<std::uint64_t>(s.n);
    const bool excluded = (2 * n) % p == 0 || (n - 1) % p == 0;
    const bool congruent = p % n == 2 % n;
    const bool sep = IsSeparableModP(s.g, p);
    const bool smooth = !excluded && IsSmoothModP(s, p);
    const bool good = GoodPrime(s, p, true);
    os << p << ',' << congruent << ',' << sep << ',' << smooth << ',' << good << '\n';
    rows.push_back({{"p", p}, {"congruent", congruent}, {"separable", sep}, {"smooth", smooth}, {"good", good}});
  }
  if (!json) return os.str();
  ojson j{{"schema_version", 1}, {"primes", rows}};
  return j.dump(2);
}

std::string CmdCount(const RunConfig& cfg) {
  const Surface s = SurfaceFrom(cfg);
  const std::uint64_t B = NonNeg(cfg.B, "--B");
  const std::uint64_t N = CountN(s, B, cfg.force);
  const OmegaTable om = OmegaTable::Build(s, B, cfg.force);
  if (!WantJson(cfg, true)) {
    std::ostringstream os;
    os << "B,count_N,omega0,omega1,omega_total\n"
       << B << ',' << N << ',' << om.at(0) << ',' << om.at(1) << ',' << om.total() << '\n';
    return os.str();
  }
  ojson j{{"schema_version", 1}, {"B", B},          {"count_N", N},
          {"omega0", om.at(0)},  {"omega1", om.at(1)}, {"omega_total", om.total()}};
  return j.dump(2);
}

std::string CmdCharsum(const RunConfig& cfg) {
  const Surface s = SurfaceFrom(cfg);
  const std::uint64_t r = NonNeg(cfg.p, "--p");
  const auto [u1, u2] = ParsePair(cfg.u, "--u");
  const SumValue d = SumS(r, cfg.c, u1, u2, s, SMethod::kDirect);
  const SumValue m = SumS(r, cfg.c, u1, u2, s, SMethod::kCrt);
  ojson j{{"schema_version", 1},
          {"r", r},
          {"c", cfg.c},
          {"u", {u1, u2}},
          {"S_direct", {d.re, d.im}},
          {"S_crt", {m.re, m.im}},
          {"abs", d.abs()},
          {"agree", ApproxEqual(d, m)}};
  if (cfg.B >= 1) {
    const std::uint64_t B = NonNeg(cfg.B, "--B");
    const SumValue U = SumU(r, cfg.c, B, s);
    j["B"] = B;
    j["U"] = {U.re, U.im};
    j["U_box_ratio"] = UBoxRatio(U, B, r);
    j["C"] = SumC(r, B, s, CMethod::kDirect, nullptr, cfg.force).re;
  }
  if (!WantJson(cfg, true)) {
    std::ostringstream os;
    os << "r,c,u1,u2,re,im,abs\n"
       << r << ',' << cfg.c << ',' << u1 << ',' << u2 << ',' << Num(d.re) << ',' << Num(d.im) << ','
       << Num(d.abs()) << '\n';
    return os.str();
  }
  return j.dump(2);
}

std::string CmdWpScan(const RunConfig& cfg) {
  const Surface s = SurfaceFrom(cfg);
  const std::uint64_t p = NonNeg(cfg.p, "--p");
  Require(cfg.samples >= 1, "--samples must be positive");
  Require(p >= 3 && IsPrime(p), "--p must be an odd prime");
  const bool good = GoodPrime(s, p, true);
  KeyedRng rng(cfg.seed, "wp-scan/" + std::to_string(p));
  WpEvaluator ev(s, p);
  std::ostringstream os;
  os << "lambda,h1,h2,mu1,mu2,re,im,abs,ratio\n";
  ojson rows = ojson::array();
  double worst = 0;
  const auto P = static_cast<std::int64_t>(p);
  for (int k = 0; k < cfg.samples; ++k) {
    const std::int64_t lam = rng.Range(1, P - 1);
    std::int64_t v[4];
    do {
      for (auto& e : v) e = rng.Range(0, P - 1);
    } while (v[0] == 0 && v[1] == 0 && v[2] == 0 && v[3] == 0);
    const SumValue w = ev.Factored(lam, v[0], v[1], v[2], v[3]);
    // gcd(p, h, mu) is 1 for reduced nonzero (h, mu).
    const double ratio = w.abs() / std::pow(static_cast<double>(p), 2.5);
    worst = std::max(worst, ratio);
    os << lam << ',' << v[0] << ',' << v[1] << ',' << v[2] << ',' << v[3] << ',' << Num(w.re) << ',' << Num(w.im)
       << ',' << Num(w.abs()) << ',' << Num(ratio) << '\n';
    rows.push_back({{"lambda", lam}, {"h", {v[0], v[1]}}, {"mu", {v[2], v[3]}}, {"abs", w.abs()}, {"ratio", ratio}});
  }
  if (!WantJson(cfg, false)) return os.str();
  ojson j{{"schema_version", 1}, {"p", p}, {"good", good}, {"max_ratio", worst}, {"samples", rows}};
  return j.dump(2);
}

std::string CmdVdc(const RunConfig& cfg) {
  const Surface s = SurfaceFrom(cfg);
  const VdcContext v(s, NonNeg(cfg.p, "--p"), NonNeg(cfg.pp, "--pp"), NonNeg(cfg.q, "--q"), NonNeg(cfg.qq, "--qq"),
                     cfg.c, NonNeg(cfg.B, "--B"), cfg.h4 ? HRule::kFloor4B : HRule::kFloorB);
  const VdcReport rep = AuditVdc(v);
  ojson j{{"schema_version", 1},
          {"r0", v.r0()},
          {"r1", v.r1()},
          {"B", v.B()},
          {"H", v.H()},
          {"c", v.c()},
          {"coprime_c", v.coprime_c()},
          {"U_abs", rep.U_abs},
          {"sigma1", rep.sigma1},
          {"sigma1_union", rep.sigma1_union},
          {"sigma2", rep.sigma2},
          {"sigma2A", rep.sigma2A},
          {"sigma2B", rep.sigma2B},
          {"lhs", rep.lhs},
          {"rhs_literal", rep.rhs_literal},
          {"rhs_union", rep.rhs_union},
          {"sigma2_bound", rep.sigma2_bound},
          {"differencing_literal", rep.differencing_literal},
          {"differencing_union", rep.differencing_union},
          {"sigma2_ok", rep.sigma2_ok},
          {"reconstruction_residual", rep.reconstruction_residual},
          {"sigma1_ratio", rep.sigma1_ratio},
          {"sigma2A_ratio", rep.sigma2A_ratio},
          {"sigma2B_ratio", v.coprime_c() ? ojson(rep.sigma2B_ratio) : ojson(nullptr)},
          {"U_bound_ratio", rep.U_bound_ratio}};
  if (!WantJson(cfg, true)) {
    std::ostringstream os;
    os << "quantity,value\n";
    for (const auto& [k, val] : j.items()) os << k << ',' << val.dump() << '\n';
    return os.str();
  }
  return j.dump(2);
}

std::string CmdTauProfile(const RunConfig& cfg) {
  const Surface s = SurfaceFrom(cfg);
  const TauSpec spec = SpecFrom(cfg, s);
  const std::vector<TauRow> rows = TauProfile(spec, cfg.locus, cfg.force);
  if (WantJson(cfg, false)) {
    ojson arr = ojson::array();
    for (const auto& r : rows) {
      arr.push_back({{"tau", r.tau}, {"N6", r.n6}, {"N5", r.n5}, {"N1", r.n1}, {"N2", r.n2}, {"sing_count", r.sing},
                     {"K1", r.k1}, {"K2", r.k2}, {"L", r.l}});
    }
    return ojson{{"schema_version", 1}, {"q", spec.ctx->q()}, {"rows", arr}}.dump(2);
  }
  std::ostringstream os;
  os << "tau,N6,N5,N1,N2,sing_count,K1,K2,L\n";
  auto opt = [](std::int64_t v) { return v < 0 ? std::string() : std::to_string(v); };
  for (const auto& r : rows) {
    os << r.tau << ',' << r.n6 << ',' << r.n5 << ',' << r.n1 << ',' << r.n2 << ',' << opt(r.sing) << ','
       << opt(r.k1) << ',' << opt(r.k2) << ',' << opt(r.l) << '\n';
  }
  return os.str();
}

std::string CmdMoments(const RunConfig& cfg) {
  const Surface s = SurfaceFrom(cfg);
  const TauSpec spec = SpecFrom(cfg, s);
  Require(cfg.count == "six" || cfg.count == "five", "--count must be six or five");
  const MomentReport rep =
      MomentBoundReport(spec, cfg.count == "six" ? CountKind::kSix : CountKind::kFive, cfg.force);
  if (!WantJson(cfg, true)) {
    std::ostringstream os;
    os << "tau,N,deviation\n";
    for (std::size_t t = 0; t < rep.per_tau.size(); ++t) {
      os << t << ',' << rep.per_tau[t] << ',' << Num(static_cast<double>(rep.per_tau[t]) - rep.reference) << '\n';
    }
    return os.str();
  }
  return MomentJson(rep);
}

std::string CmdSieve(const RunConfig& cfg) {
  const Surface s = SurfaceFrom(cfg);
  const SieveReport rep = SieveAudit(s, NonNeg(cfg.B, "--B"), cfg.force, cfg.seed);
  if (!WantJson(cfg, false)) return SieveCsv(rep);
  ojson terms = ojson::array();
  for (const auto& t : rep.terms) {
    terms.push_back({{"term_name", t.name}, {"exact_value", t.exact}, {"paper_majorant", t.majorant},
                     {"ratio", t.ratio()}});
  }
  ojson j{{"schema_version", 1},
          {"B", rep.plan.B},
          {"P", rep.plan.P},
          {"Q", rep.plan.Q},
          {"Q_capped", rep.plan.q_capped},
          {"primes_P", rep.plan.primes_p},
          {"primes_Q", rep.plan.primes_q},
          {"count_N", rep.count_N},
          {"omega0", rep.omega0},
          {"lhs_box", rep.lhs_box},
          {"lhs_full", rep.lhs_full},
          {"box_identity", rep.box_identity},
          {"rhs", rep.rhs},
          {"ratio", rep.ratio()},
          {"sampled", rep.sampled},
          {"direct_agrees", rep.direct_checked ? ojson(rep.direct_agrees) : ojson(nullptr)},
          {"terms", terms}};
  return j.dump(2);
}

ojson PointJson(const P5Point& P) { return ojson::array({P.u, P.v, P.x, P.s1, P.s2, P.t}); }

std::string CmdSingLocus(const RunConfig& cfg) {
  const Surface s = SurfaceFrom(cfg);
  const TauSpec spec = SpecFrom(cfg, s);
  const std::uint32_t q = spec.ctx->q();
  std::vector<Fq> taus;
  if (cfg.tau >= 0) {
    Require(cfg.tau < static_cast<std::int64_t>(q), "--tau out of range");
    taus.push_back(static_cast<Fq>(cfg.tau));
  } else {
    for (Fq t = 0; t < q; ++t) taus.push_back(t);
  }
  ojson per = ojson::array();
  std::ostringstream csv;
  csv << "tau,sing_count,K1,K2,L,sys0,baseline,decomposition,sys0_t_nonzero,sys0_missing_from_V\n";
  std::size_t bad = 0;
  for (Fq tau : taus) {
    const LocusAtTau loc = EnumerateLocus(spec, tau, cfg.force);
    const Sys0VsAux cmp = CompareSys0WithAux(spec, tau, cfg.force);
    const bool dec = DecompositionHolds(loc);
    if (loc.sing.size() > static_cast<std::size_t>(2 * s.n)) ++bad;
    ojson pts = ojson::array();
    for (const auto& P : loc.sing) pts.push_back(PointJson(P));
    per.push_back({{"tau", tau},
                   {"sing_count", loc.sing.size()},
                   {"K1", loc.k1.size()},
                   {"K2", loc.k2.size()},
                   {"L", loc.l.size()},
                   {"sys0", loc.sys0.size()},
                   {"baseline", loc.baseline.size()},
                   {"decomposition", dec},
                   {"sys0_t_nonzero", cmp.sys0_t_nonzero},
                   {"sys0_missing_from_V", cmp.missing_from_v},
                   {"sing_points", pts}});
    csv << tau << ',' << loc.sing.size() << ',' << loc.k1.size() << ',' << loc.k2.size() << ',' << loc.l.size()
        << ',' << loc.sys0.size() << ',' << loc.baseline.size() << ',' << dec << ',' << cmp.sys0_t_nonzero << ','
        << cmp.missing_from_v << '\n';
  }
  if (!WantJson(cfg, true)) return csv.str();
  const MinorSignCheck sign = CheckMinorSign(spec, cfg.force);
  ojson j{{"schema_version", 1},
          {"q", q},
          {"bad_tau", bad},
          {"V_points", sign.points},
          {"minor_sign_corrected_violations", sign.corrected_violations},
          {"minor_sign_literal_violations", sign.literal_violations}};
  if (spec.ctx->degree() == 1) {
    const EliminantCheck elim = CheckEliminant(spec, 50, cfg.seed);
    j["eliminant"] = {{"samples", elim.samples},
                   {"corrected_nonzero", elim.corrected_nonzero},
                   {"literal_nonzero", elim.literal_nonzero}};
  }
  j["per_tau"] = per;
  return j.dump(2);
}

std::string CmdRootCheck(const RunConfig& cfg) {
  const Surface s = SurfaceFrom(cfg);
  const std::uint64_t p = NonNeg(cfg.p, "--p");
  Require(p >= 3 && IsPrime(p), "--p must be an odd prime");
  const auto [h1, h2] = ParsePair(cfg.h, "--h");
  const ExtCtx ctx(p, cfg.r);
  const std::vector<ProjPoint> roots = ProjectiveRoots(s.g, ctx);
  std::size_t part_i_violations = 0;
  for (std::size_t a = 0; a < roots.size(); ++a) {
    for (std::size_t b = 0; b < roots.size(); ++b) {
      const bool zero = RootGradientDet(s.g, roots[a], roots[b], ctx) == 0;
      if (zero != (a == b)) ++part_i_violations;
    }
  }
  // Part (ii) over F_p: every s with [s] != [h] gives a separable restriction
  // of degree d or d - 1.
  const std::uint64_t H1 = static_cast<std::uint64_t>(Mod(h1, static_cast<std::int64_t>(p)));
  const std::uint64_t H2 = static_cast<std::uint64_t>(Mod(h2, static_cast<std::int64_t>(p)));
  const int d = s.g.degree;
  const bool h_root = (H1 != 0 || H2 != 0) && ReduceForm(s.g, p)(H1, H2) == 0;
  const bool separable = IsSeparableModP(s.g, p);
  std::size_t lines = 0, part_ii_violations = 0;
  for (std::uint64_t s1 = 0; s1 < p && (H1 != 0 || H2 != 0); ++s1) {
    for (std::uint64_t s2 = 0; s2 < p; ++s2) {
      if ((s1 * H2 + p * p - s2 * H1) % p == 0) continue;  // [s] = [h] or s = 0
      ++lines;
      const PolyP G = RestrictToLine(s.g, s1, s2, H1, H2, p);
      const int deg = Degree(G);
      const bool sep = deg >= 1 && Degree(PolyGcd(G, PolyDerivative(G, p), p)) == 0;
      if (!sep || deg != (h_root ? d - 1 : d)) ++part_ii_violations;
    }
  }
  ojson j{{"schema_version", 1},
          {"p", p},
          {"r", cfg.r},
          {"separable", separable},
          {"roots_in_field", roots.size()},
          {"part_i_violations", part_i_violations},
          {"h_is_root", h_root},
          {"lines_checked", lines},
          {"part_ii_violations", part_ii_violations}};
  if (!WantJson(cfg, true)) {
    std::ostringstream os;
    os << "quantity,value\n";
    for (const auto& [k, val] : j.items()) os << k << ',' << val.dump() << '\n';
    return os.str();
  }
  return j.dump(2);
}

}  // namespace

int Run(int argc, char** argv) {
  CLI::App app{"Finite-field and sieve computations for the surfaces Y^2 = X^n + X f(U) + g(U)."};
  app.require_subcommand(1);
  RunConfig cfg;

  // -h would collide with --h.
  app.set_help_flag("--help", "Print help");
  auto add_common = [&](CLI::App* sc) {
    sc->set_help_flag("--help", "Print help");
    sc->add_option("--surface", cfg.surface, "Surface JSON file (default: n=3, f=0, g=S1^6+S2^6)");
    sc->add_option("--seed", cfg.seed, "Seed for parameter scans");
    sc->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    sc->add_option("--out", cfg.out, "Output path (default stdout)");
    sc->add_flag("--force", cfg.force, "Ignore the loop budget");
    sc->add_option("--threads", cfg.threads, "Worker threads")->check(CLI::PositiveNumber);
  };
  auto add_field = [&](CLI::App* sc) {
    sc->add_option("--p", cfg.p, "Prime");
    sc->add_option("--r", cfg.r, "Extension degree")->check(CLI::IsMember({1, 2}));
    sc->add_option("--lambda", cfg.lambda, "lambda");
    sc->add_option("--h", cfg.h, "Shift h as INT,INT");
    sc->add_option("--mu", cfg.mu, "Twist mu as INT,INT");
    sc->add_option("--sector", cfg.sector, "Sector i,j");
  };

  auto* good = app.add_subcommand("good-primes", "Classify primes up to --p");
  add_common(good);
  good->add_option("--p", cfg.p, "Upper bound")->default_val(60);

  auto* count = app.add_subcommand("count", "N(S;B) and omega values");
  add_common(count);
  count->add_option("--B", cfg.B, "Box size");

  auto* charsum = app.add_subcommand("charsum", "S(r,c,u), and U, C when --B is given");
  add_common(charsum);
  charsum->add_option("--p", cfg.p, "Odd squarefree modulus r");
  charsum->add_option("--c", cfg.c, "Frequency c");
  charsum->add_option("--u", cfg.u, "Point u as INT,INT");
  charsum->add_option("--B", cfg.B, "Box size for U and C")->default_val(0);

  auto* wp = app.add_subcommand("wp-scan", "Seeded scan of W_p");
  add_common(wp);
  wp->add_option("--p", cfg.p, "Prime");
  wp->add_option("--samples", cfg.samples, "Number of parameter draws");

  auto* vdc = app.add_subcommand("vdc-audit", "Differencing chain for r0 = p p', r1 = q q'");
  add_common(vdc);
  vdc->add_option("--p", cfg.p, "p");
  vdc->add_option("--pp", cfg.pp, "p'");
  vdc->add_option("--q", cfg.q, "q");
  vdc->add_option("--qq", cfg.qq, "q'");
  vdc->add_option("--c", cfg.c, "c");
  vdc->add_option("--B", cfg.B, "Box size")->default_val(21);
  vdc->add_flag("--h4", cfg.h4, "Use H = floor(4B/r1)");

  auto* tau = app.add_subcommand("tau-profile", "N6, N5, N1, N2 per tau");
  add_common(tau);
  add_field(tau);
  tau->add_flag("--locus", cfg.locus, "Also enumerate the singular locus");

  auto* mom = app.add_subcommand("moments", "Second moment and Hooley sums");
  add_common(mom);
  add_field(mom);
  mom->add_option("--count", cfg.count, "six or five");

  auto* sieve = app.add_subcommand("sieve-audit", "Term-by-term sieve audit");
  add_common(sieve);
  sieve->add_option("--B", cfg.B, "Box size")->default_val(20);

  auto* sing = app.add_subcommand("sing-locus", "Singular locus of V_tau and the auxiliary variety V");
  add_common(sing);
  add_field(sing);
  sing->add_option("--tau", cfg.tau, "Single tau (default: all)");

  auto* polf = app.add_subcommand("polf-check", "Root and restriction properties of g");
  add_common(polf);
  polf->add_option("--p", cfg.p, "Prime");
  polf->add_option("--r", cfg.r, "Extension degree")->check(CLI::IsMember({1, 2}));
  polf->add_option("--h", cfg.h, "Direction h as INT,INT");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    SetThreads(cfg.threads);
    std::string text;
    if (good->parsed()) text = CmdGoodPrimes(cfg);
    else if (count->parsed()) text = CmdCount(cfg);
    else if (charsum->parsed()) text = CmdCharsum(cfg);
    else if (wp->parsed()) text = CmdWpScan(cfg);
    else if (vdc->parsed()) text = CmdVdc(cfg);
    else if (tau->parsed()) text = CmdTauProfile(cfg);
    else if (mom->parsed()) text = CmdMoments(cfg);
    else if (sieve->parsed()) text = CmdSieve(cfg);
    else if (sing->parsed()) text = CmdSingLocus(cfg);
    else if (polf->parsed()) text = CmdRootCheck(cfg);
    Emit(cfg, text);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const BudgetError& e) {
    std::cerr << "refused: " << e.what() << '\n';
    return 3;
  }
  return 0;
}

}  // namespace hypfib
