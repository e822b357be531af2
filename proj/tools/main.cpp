#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "parse.hpp"
#include "report.hpp"

using namespace rdyn;
using namespace rdyn::cli;

namespace {

const char* kOrbifoldThm = "pullback and Riemann-Hurwitz for orbifolds";
const char* kClassifyThm = "uniqueness of the maximal orbifold of a generalized Lattes map";
const char* kSemiconjThm = "completion of semiconjugacies through elementary transformations";
const char* kNormalThm = "normal form of left factors of iterates";
const char* kChainThm = "periodicity of good diagram chains";
const char* kGenusThm = "Riemann-Hurwitz for fiber products";
const char* kCurveThm = "invariant curves are images of semiconjugacies";
const char* kCommuteThm = "invariant curves from commuting left factors";
const char* kBoundsThm = "explicit bounds for invariant curves";

enum Exit { kOk = 0, kPrecondition = 2, kInconclusive = 3, kViolation = 4 };

struct Out {
  bool structured = false;
  Json json = Json::object();
  std::ostringstream text;
};

std::string yes(bool b) { return b ? "yes" : "no"; }

void text_identity(Out& o, const std::string& name, bool holds) {
  o.text << "  [" << (holds ? "ok" : "FAILED") << "] " << name << "\n";
}

Json identity(const std::string& name, bool holds, const std::string& thm) {
  return to_json(IdentityCheck{name, holds}, thm);
}

// ---- analyze / classify ----

Json classification(const RatMap& A, Out& o) {
  Json j;
  try {
    SpecialClass sc = classify(A);
    j["class"] = tag_name(sc.tag);
    o.text << "class: " << tag_name(sc.tag);
    if (sc.n) {
      j["n"] = sc.n;
      j["sign"] = sc.sign;
      o.text << " (n = " << sc.n << ", sign " << (sc.sign > 0 ? "+" : "-") << ")";
    }
    o.text << "\n";
    j["over_extension"] = sc.over_extension;
    if (sc.over_extension) o.text << "conjugacy needs a field extension\n";
    if (sc.mu) {
      j["conjugator"] = to_json(*sc.mu);
      o.text << "conjugator: " << sc.mu->str() << "\n";
    }
    if (sc.orbifold) {
      j["orbifold"] = to_json(*sc.orbifold);
      o.text << "orbifold: " << sc.orbifold->str() << "\n";
    }
  } catch (const Inconclusive& e) {
    j["class"] = "Inconclusive";
    j["reason"] = e.what();
    o.text << "class: inconclusive (" << e.what() << ")\n";
  }
  j["theorem"] = kClassifyThm;
  return j;
}

int cmd_analyze(const std::string& s, Out& o) {
  RatMap A = parse_map(s);
  if (A.deg() < 1) throw PreconditionError("constant maps have no dynamics");
  o.json["map"] = to_json(A);
  o.text << "map: " << A.str() << "\ndegree: " << A.deg() << "\ncritical points:\n";
  Json crit = Json::array();
  int total = 0;
  for (const auto& p : critical_points(A)) {
    const int e = local_degree(A, p);
    total += (e - 1) * p.degree();
    crit.push_back(Json{{"place", to_json(p)}, {"local_degree", e}, {"image", to_json(image_place(A, p))}});
    o.text << "  " << p.str() << "  local degree " << e << "  -> " << image_place(A, p).str() << "\n";
  }
  o.json["critical_points"] = crit;
  o.json["riemann_hurwitz"] =
      identity("sum (e - 1) = 2 deg - 2", total == 2 * A.deg() - 2, kOrbifoldThm);
  text_identity(o, "sum (e - 1) = 2 deg - 2", total == 2 * A.deg() - 2);
  const Orbifold o1 = o1_of(A), o2 = o2_of(A);
  o.json["o1"] = to_json(o1);
  o.json["o2"] = to_json(o2);
  o.text << "O1: " << o1.str() << "\nO2: " << o2.str() << "\n";
  o.json["classification"] = classification(A, o);
  return kOk;
}

int cmd_classify(const std::string& s, Out& o) {
  RatMap A = parse_map(s);
  if (A.deg() < 2) throw PreconditionError("classification needs degree at least 2");
  o.json["map"] = to_json(A);
  o.json["classification"] = classification(A, o);
  return o.json["classification"]["class"] == "Inconclusive" ? kInconclusive : kOk;
}

// ---- orbifold ----

int cmd_orbifold_chi(const std::string& s, Out& o) {
  Orbifold O = parse_orbifold(s);
  o.json["orbifold"] = to_json(O);
  o.json["good"] = O.is_good();
  o.text << O.str() << "\nchi = " << chi(O).get_str() << "\ngood: " << yes(O.is_good()) << "\n";
  return kOk;
}

int cmd_orbifold_pullback(const std::string& f, const std::string& s, Out& o) {
  RatMap F = parse_map(f);
  if (F.deg() < 1) throw PreconditionError("pullback needs a nonconstant map");
  Orbifold O = parse_orbifold(s);
  Orbifold P = pullback(F, O);
  o.json["map"] = to_json(F);
  o.json["orbifold"] = to_json(O);
  o.json["pullback"] = to_json(P);
  o.json["theorem"] = kOrbifoldThm;
  const bool mh = is_min_holomorphic(F, P, O);
  o.json["identities"] = Json::array({identity("f: f^*O -> O is minimal holomorphic", mh, kOrbifoldThm)});
  o.text << "pullback: " << P.str() << "\n";
  text_identity(o, "f: f^*O -> O is minimal holomorphic", mh);
  return mh ? kOk : kViolation;
}

int cmd_orbifold_check(const std::string& f, const std::string& a, const std::string& b, Out& o) {
  RatMap F = parse_map(f);
  if (F.deg() < 1) throw PreconditionError("needs a nonconstant map");
  Orbifold O1 = parse_orbifold(a), O2 = parse_orbifold(b);
  const bool hol = is_holomorphic(F, O1, O2), cov = is_covering(F, O1, O2), mh = is_min_holomorphic(F, O1, O2);
  o.json["map"] = to_json(F);
  o.json["o1"] = to_json(O1);
  o.json["o2"] = to_json(O2);
  o.json["holomorphic"] = hol;
  o.json["covering"] = cov;
  o.json["minimal_holomorphic"] = mh;
  o.text << "holomorphic: " << yes(hol) << "\ncovering: " << yes(cov) << "\nminimal holomorphic: " << yes(mh)
         << "\n";
  Json ids = Json::array();
  bool ok = true;
  if (hol) {
    const bool ineq = chi_inequality_check(F, O1, O2);
    ids.push_back(identity("chi(O1) <= deg f chi(O2), equality iff covering", ineq, kOrbifoldThm));
    text_identity(o, "chi(O1) <= deg f chi(O2), equality iff covering", ineq);
    ok = ok && ineq;
  }
  if (cov) {
    const bool rh = rh_identity_check(F, O1, O2);
    ids.push_back(identity("chi(O1) = deg f chi(O2)", rh, kOrbifoldThm));
    text_identity(o, "chi(O1) = deg f chi(O2)", rh);
    ok = ok && rh;
  }
  o.json["identities"] = ids;
  return ok ? kOk : kViolation;
}

// ---- semiconj ----

int cmd_semiconj_verify(const std::string& a, const std::string& x, const std::string& b, Out& o) {
  RatMap A = parse_map(a), X = parse_map(x), B = parse_map(b);
  const bool ok = verify_semiconjugacy(A, X, B);
  o.json["holds"] = ok;
  o.json["identities"] = Json::array({identity("A o X = X o B", ok, kSemiconjThm)});
  text_identity(o, "A o X = X o B", ok);
  return kOk;
}

int cmd_semiconj_complete(const std::string& a, const std::string& x, const std::string& b, Out& o) {
  RatMap A = parse_map(a), X = parse_map(x), B = parse_map(b);
  if (!verify_semiconjugacy(A, X, B)) throw PreconditionError("A o X != X o B");
  SemiconjugacyCompletion c = complete_semiconjugacy(A, X, B);
  const bool i1 = compose(X, c.Y) == iterate(A, c.d), i2 = compose(c.Y, X) == iterate(B, c.d);
  o.json["Y"] = to_json(c.Y);
  o.json["d"] = c.d;
  Json chain = Json::array();
  for (const auto& s : c.chain) chain.push_back(Json{{"outer", to_json(s.outer)}, {"inner", to_json(s.inner)}});
  o.json["chain"] = chain;
  o.json["theorem"] = kSemiconjThm;
  o.json["identities"] =
      Json::array({identity("X o Y = A^d", i1, kSemiconjThm), identity("Y o X = B^d", i2, kSemiconjThm)});
  o.text << "Y = " << c.Y.str() << "\nd = " << c.d << "\n";
  text_identity(o, "X o Y = A^d", i1);
  text_identity(o, "Y o X = B^d", i2);
  if (!(i1 && i2)) throw TheoremViolation("completion failed its identities");
  return kOk;
}

// ---- decompose ----

int cmd_decompose_factors(const std::string& f, int n, bool right, Out& o) {
  RatMap F = parse_map(f);
  if (n < 1 || F.deg() < 1 || F.deg() % n != 0) throw PreconditionError("n must divide deg F");
  Json arr = Json::array();
  if (right) {
    o.text << "right factors of degree " << n << " (up to mu o w):\n";
    for (const auto& w : all_right_factors(F, n)) {
      auto L = right_divide(F, w);
      if (!L) throw TheoremViolation("right factor " + w.str() + " does not divide");
      arr.push_back(Json{{"outer", to_json(*L)}, {"inner", to_json(w)}});
      o.text << "  " << L->str() << "  o  " << w.str() << "\n";
    }
  } else {
    o.text << "left factors of degree " << n << " (up to X o mu):\n";
    for (const auto& X : all_left_factors(F, n)) {
      auto Rs = left_divide(F, X);
      if (Rs.empty()) throw TheoremViolation("left factor " + X.str() + " does not divide");
      arr.push_back(Json{{"outer", to_json(X)}, {"inner", to_json(Rs.front())}});
      o.text << "  " << X.str() << "  o  " << Rs.front().str() << "\n";
    }
  }
  o.json["map"] = to_json(F);
  o.json["side"] = right ? "right" : "left";
  o.json["factors"] = arr;
  return kOk;
}

int cmd_decompose_normalize(const std::string& a, const std::string& x, const std::string& r, int d, Out& o) {
  RatMap A = parse_map(a), X = parse_map(x), R = parse_map(r);
  if (d < 0) throw PreconditionError("d must be nonnegative");
  if (compose(X, R) != iterate(A, d)) throw PreconditionError("X o R != A^d");
  Normalized nz = normalize_left_factor(A, X, R, d);
  const bool i1 = compose(X, nz.R) == iterate(A, nz.N);
  const bool i2 = compose(nz.R, iterate(A, d - nz.N)) == R;
  o.json["N"] = nz.N;
  o.json["R"] = to_json(nz.R);
  o.json["theorem"] = kNormalThm;
  o.json["identities"] = Json::array(
      {identity("X o R' = A^N", i1, kNormalThm), identity("R = R' o A^(d - N)", i2, kNormalThm)});
  o.text << "N = " << nz.N << "\nR' = " << nz.R.str() << "\n";
  text_identity(o, "X o R' = A^N", i1);
  text_identity(o, "R = R' o A^(d - N)", i2);
  if (!(i1 && i2)) throw TheoremViolation("normalization failed its identities");
  return kOk;
}

int cmd_decompose_chain(const std::string& a, const std::string& w, int N, Out& o) {
  RatMap A = parse_map(a), W0 = parse_map(w);
  if (N < 1) throw PreconditionError("chain length must be positive");
  Diagram D = good_diagram_chain(A, W0, N);
  const bool comm = diagram_commutes(D);
  Json cols = Json::array(), rungs = Json::array();
  o.text << "mode: " << (D.seeded ? "seeded" : "generic") << "\ncolumns:\n";
  for (std::size_t i = 0; i < D.columns.size(); ++i) {
    cols.push_back(to_json(D.columns[i]));
    o.text << "  W" << i << " = " << D.columns[i].str() << "\n";
  }
  o.text << "rungs:\n";
  for (std::size_t i = 0; i < D.rungs.size(); ++i) {
    rungs.push_back(to_json(D.rungs[i]));
    o.text << "  h" << i + 1 << " = " << D.rungs[i].str() << "\n";
  }
  o.json["seeded"] = D.seeded;
  o.json["columns"] = cols;
  o.json["rungs"] = rungs;
  o.json["good"] = D.good;
  o.json["theorem"] = kChainThm;
  o.json["identities"] = Json::array({identity("W[d-1] o h[d] = A o W[d]", comm, kChainThm)});
  o.text << "good: " << yes(D.good) << "\n";
  text_identity(o, "W[d-1] o h[d] = A o W[d]", comm);
  if (auto p = detect_periodicity(D)) {
    o.json["periodicity"] = Json{{"N0", p->N0}, {"r", p->r}};
    o.text << "periodic from " << p->N0 << " with period " << p->r << "\n";
  } else {
    o.json["periodicity"] = nullptr;
    o.text << "no periodicity within the chain\n";
  }
  if (!comm) throw TheoremViolation("diagram does not commute");
  return kOk;
}

// ---- curve ----

int cmd_curve_genus(const std::string& a, const std::string& b, Out& o) {
  RatMap Y1 = parse_map(a), Y2 = parse_map(b);
  if (Y1.deg() < 1 || Y2.deg() < 1) throw PreconditionError("genus needs nonconstant maps");
  const int g = genus_separated(Y1, Y2);
  o.json["curve"] = to_json(separated_curve(Y1, Y2));
  o.json["genus"] = g;
  o.json["theorem"] = kGenusThm;
  o.text << g << "\n";
  return kOk;
}

int cmd_curve_invariant(const std::string& c, const std::string& a1, const std::string& a2, Out& o) {
  BiCurve C(parse_curve(c));
  RatMap A1 = parse_map(a1), A2 = parse_map(a2);
  if (!C.irreducible()) throw PreconditionError("curve " + C.str() + " is reducible");
  BiCurve img = image_curve(C, A1, A2);
  const bool inv = img == C;
  o.json["curve"] = to_json(C);
  o.json["image"] = to_json(img);
  o.json["invariant"] = inv;
  o.json["identities"] = Json::array({identity("(A1, A2)(C) = C", inv, kCurveThm)});
  o.text << "image: " << img.str() << "\ninvariant: " << yes(inv) << "\n";
  return kOk;
}

int cmd_curve_orbit(const std::string& c, const std::string& a1, const std::string& a2, int N, Out& o) {
  BiCurve C(parse_curve(c));
  RatMap A1 = parse_map(a1), A2 = parse_map(a2);
  if (!C.irreducible()) throw PreconditionError("curve " + C.str() + " is reducible");
  if (N < 1) throw PreconditionError("orbit length must be positive");
  Json orbit = Json::array({to_json(C)});
  o.text << "C0 = " << C.str() << "\n";
  BiCurve cur = C;
  for (int i = 1; i <= N; ++i) {
    cur = image_curve(cur, A1, A2);
    orbit.push_back(to_json(cur));
    o.text << "C" << i << " = " << cur.str() << "\n";
  }
  o.json["orbit"] = orbit;
  if (auto lp = preperiodicity(C, A1, A2, N, N)) {
    o.json["tail"] = lp->first;
    o.json["period"] = lp->second;
    o.text << "preperiodic: tail " << lp->first << ", period " << lp->second << "\n";
    return kOk;
  }
  o.json["tail"] = nullptr;
  o.json["period"] = nullptr;
  o.text << "no repetition within " << N << " steps\n";
  return kInconclusive;
}

int cmd_curve_implicitize(const std::string& a, const std::string& b, Out& o) {
  RatMap X1 = parse_map(a), X2 = parse_map(b);
  if (X1.deg() < 1 && X2.deg() < 1) throw PreconditionError("both maps are constant");
  BiCurve C = implicitize(X1, X2);
  o.json["curve"] = to_json(C);
  o.text << C.str() << "\n";
  return kOk;
}

// ---- search ----

void print_report(const SearchReport& r, Out& o, const std::string& thm) {
  o.json["report"] = to_json(r, thm);
  o.text << "theorem: " << thm << "\ncompleteness: " << completeness_name(r.completeness) << " (cap " << r.cap
         << ")\n";
  o.text << r.curves.size() << " curve" << (r.curves.size() == 1 ? "" : "s") << "\n";
  for (const auto& c : r.curves) {
    o.text << "curve " << c.curve.str() << "  period " << c.period << "\n";
    o.text << "  X1 = " << c.X1.str() << "\n  X2 = " << c.X2.str() << "\n  B = " << c.B.str() << "\n";
    for (const auto& i : c.identities) text_identity(o, i.name, i.holds);
  }
  for (const auto& l : r.lines) o.text << "line " << l.str() << "\n";
  for (const auto& n : r.notes) o.text << "note: " << n << "\n";
}

int report_exit(const SearchReport& r) {
  return r.completeness == Completeness::Inconclusive ? kInconclusive : kOk;
}

int cmd_search_invariant(const std::string& a1, const std::string& a2, const SearchConfig& cfg, Out& o) {
  RatMap A1 = parse_map(a1), A2 = parse_map(a2);
  if (A1.deg() < 2 || A2.deg() < 2) throw PreconditionError("search needs maps of degree at least 2");
  if (cfg.d1 < 1 || cfg.d2 < 1 || cfg.iterate_cap < 1) throw PreconditionError("degrees and cap must be positive");
  SearchReport r = find_invariant_curves(A1, A2, cfg);
  print_report(r, o, kCurveThm);
  return report_exit(r);
}

int cmd_search_periodic(const std::string& a1, const std::string& a2, const SearchConfig& cfg, int period, Out& o) {
  RatMap A1 = parse_map(a1), A2 = parse_map(a2);
  if (A1.deg() < 2 || A2.deg() < 2) throw PreconditionError("search needs maps of degree at least 2");
  if (cfg.d1 < 1 || cfg.d2 < 1 || cfg.iterate_cap < 1 || period < 1)
    throw PreconditionError("degrees, cap and period must be positive");
  SearchReport r = find_periodic_curves(A1, A2, cfg, period);
  print_report(r, o, kCurveThm);
  return report_exit(r);
}

int cmd_search_commuting(const std::string& a, const SearchConfig& cfg, Out& o) {
  RatMap A = parse_map(a);
  if (A.deg() < 2) throw PreconditionError("search needs a map of degree at least 2");
  if (cfg.d1 < 1 || cfg.d2 < 1 || cfg.iterate_cap < 1) throw PreconditionError("degrees and cap must be positive");
  SearchReport r = commuting_route(A, cfg);
  print_report(r, o, kCommuteThm);
  return report_exit(r);
}

// ---- bounds ----

int cmd_bounds(const std::string& which, const std::vector<int>& args, Out& o) {
  auto need = [&](std::size_t k) {
    if (args.size() != k) throw PreconditionError("bounds " + which + " takes " + std::to_string(k) + " integers");
    for (int v : args)
      if (v < 1) throw PreconditionError("bounds arguments must be positive");
  };
  o.json["theorem"] = kBoundsThm;
  o.json["bound"] = which;
  if (which == "m2") {
    need(3);
    const bool gate = theorem_m2_gate(args[0], args[1], args[2]);
    o.json["n"] = args[0];
    o.json["m"] = args[1];
    o.json["g"] = args[2];
    o.json["holds"] = gate;
    o.text << "84 g > m - 84 n + 168: " << yes(gate) << "\n";
    return kOk;
  }
  Z v;
  if (which == "phi" || which == "psi") {
    need(2);
    v = which == "phi" ? bound_phi(args[0], args[1]) : bound_psi(args[0], args[1]);
  } else if (which == "kappa" || which == "C") {
    need(1);
    v = which == "kappa" ? bound_kappa(args[0]) : bound_C(args[0]);
  } else {
    throw PreconditionError("unknown bound '" + which + "'");
  }
  o.json["value"] = v.get_str();
  o.text << v.get_str() << "\n";
  return kOk;
}

// Positional expressions may come from --file, one per line; blank lines
// and lines starting with # are skipped.
std::vector<std::string> expand_file_args(int argc, char** argv) {
  std::vector<std::string> out;
  std::vector<std::string> extra;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    std::string path;
    if (a == "--file") {
      if (i + 1 >= argc) throw CLI::ArgumentMismatch("--file needs a path");
      path = argv[++i];
    } else if (a.rfind("--file=", 0) == 0) {
      path = a.substr(7);
    } else {
      // "-z^3" is an expression, not a flag; the parsers skip the space.
      if (a.size() > 1 && a[0] == '-' && a[1] != '-' && a != "-h") a = " " + a;
      out.push_back(a);
      continue;
    }
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("--file", "cannot open " + path);
    std::string line;
    while (std::getline(in, line)) {
      auto b = line.find_first_not_of(" \t\r");
      if (b == std::string::npos || line[b] == '#') continue;
      auto e = line.find_last_not_of(" \t\r");
      extra.push_back(line.substr(b, e - b + 1));
    }
  }
  for (auto& e : extra)
    if (e[0] == '-') e = " " + e;
  out.insert(out.end(), extra.begin(), extra.end());
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact dynamics of rational maps over Q."};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "text or structured")->check(CLI::IsMember({"text", "structured"}));
  app.add_option("--file", "read expressions, one per line (handled before parsing)");

  std::vector<std::string> pos(3);
  int ival = 0;
  bool right = false;
  SearchConfig cfg;
  int period = 1;
  std::vector<int> ints;
  std::function<int(Out&)> run;

  // One required positional per name in `names`.
  auto args = [&](CLI::App* c, const std::string& names, int n) {
    std::istringstream in(names);
    for (int i = 0; i < n; ++i) {
      std::string name;
      in >> name;
      c->add_option(name, pos[static_cast<std::size_t>(i)], "expression")->required();
    }
  };

  auto* analyze = app.add_subcommand("analyze", "degree, critical portrait, O1/O2 and classification");
  args(analyze, "MAP", 1);
  analyze->callback([&] { run = [&](Out& o) { return cmd_analyze(pos[0], o); }; });

  auto* cls = app.add_subcommand("classify", "power, Chebyshev, Lattes, generalized Lattes or none");
  args(cls, "MAP", 1);
  cls->callback([&] { run = [&](Out& o) { return cmd_classify(pos[0], o); }; });

  auto* orb = app.add_subcommand("orbifold", "orbifold arithmetic");
  orb->require_subcommand(1);
  auto* ochi = orb->add_subcommand("chi", "Euler characteristic of ORBIFOLD");
  args(ochi, "ORBIFOLD", 1);
  ochi->callback([&] { run = [&](Out& o) { return cmd_orbifold_chi(pos[0], o); }; });
  auto* opb = orb->add_subcommand("pullback", "f^*O for MAP ORBIFOLD");
  args(opb, "MAP ORBIFOLD", 2);
  opb->callback([&] { run = [&](Out& o) { return cmd_orbifold_pullback(pos[0], pos[1], o); }; });
  auto* ock = orb->add_subcommand("check", "holomorphic/covering checks for MAP O1 O2");
  args(ock, "MAP O1 O2", 3);
  ock->callback([&] { run = [&](Out& o) { return cmd_orbifold_check(pos[0], pos[1], pos[2], o); }; });

  auto* sc = app.add_subcommand("semiconj", "semiconjugacies A o X = X o B");
  sc->require_subcommand(1);
  auto* sv = sc->add_subcommand("verify", "check A o X = X o B");
  args(sv, "A X B", 3);
  sv->callback([&] { run = [&](Out& o) { return cmd_semiconj_verify(pos[0], pos[1], pos[2], o); }; });
  auto* scp = sc->add_subcommand("complete", "find Y, d with X o Y = A^d, Y o X = B^d");
  args(scp, "A X B", 3);
  scp->callback([&] { run = [&](Out& o) { return cmd_semiconj_complete(pos[0], pos[1], pos[2], o); }; });

  auto* dec = app.add_subcommand("decompose", "compositional factors of maps and iterates");
  dec->require_subcommand(1);
  auto* df = dec->add_subcommand("factors", "degree-n factors of F");
  args(df, "F", 1);
  df->add_option("n", ival, "factor degree")->required();
  df->add_flag("--right", right, "right factors instead of left factors");
  df->callback([&] { run = [&](Out& o) { return cmd_decompose_factors(pos[0], ival, right, o); }; });
  auto* dn = dec->add_subcommand("normalize", "least N with A^N = X o R'");
  args(dn, "A X R", 3);
  dn->add_option("d", ival, "iterate with X o R = A^d")->required();
  dn->callback([&] { run = [&](Out& o) { return cmd_decompose_normalize(pos[0], pos[1], pos[2], ival, o); }; });
  auto* dc = dec->add_subcommand("chain", "good diagram chain of length N from W0");
  args(dc, "A W0", 2);
  dc->add_option("N", ival, "length")->required();
  dc->callback([&] { run = [&](Out& o) { return cmd_decompose_chain(pos[0], pos[1], ival, o); }; });

  auto* cv = app.add_subcommand("curve", "curves in P1 x P1");
  cv->require_subcommand(1);
  auto* cg = cv->add_subcommand("genus", "genus of Y1(x) = Y2(y)");
  args(cg, "Y1 Y2", 2);
  cg->callback([&] { run = [&](Out& o) { return cmd_curve_genus(pos[0], pos[1], o); }; });
  auto* ci = cv->add_subcommand("invariant", "is C invariant under (A1, A2)");
  args(ci, "C A1 A2", 3);
  ci->callback([&] { run = [&](Out& o) { return cmd_curve_invariant(pos[0], pos[1], pos[2], o); }; });
  auto* co = cv->add_subcommand("orbit", "forward orbit of C for N steps");
  args(co, "C A1 A2", 3);
  co->add_option("N", ival, "steps")->required();
  co->callback([&] { run = [&](Out& o) { return cmd_curve_orbit(pos[0], pos[1], pos[2], ival, o); }; });
  auto* cim = cv->add_subcommand("implicitize", "equation of t -> (X1(t), X2(t))");
  args(cim, "X1 X2", 2);
  cim->callback([&] { run = [&](Out& o) { return cmd_curve_implicitize(pos[0], pos[1], o); }; });

  auto* se = app.add_subcommand("search", "invariant and periodic curves of (A1, A2)");
  se->require_subcommand(1);
  auto add_search_opts = [&](CLI::App* c) {
    c->add_option("--cap", cfg.iterate_cap, "iterate cap N")->capture_default_str();
    c->add_flag("--lines", cfg.include_lines, "also report fixed horizontal and vertical lines");
  };
  auto* si = se->add_subcommand("invariant", "invariant curves of bidegree (d1, d2)");
  args(si, "A1 A2", 2);
  si->add_option("d1", cfg.d1, "degree in x")->required();
  si->add_option("d2", cfg.d2, "degree in y")->required();
  add_search_opts(si);
  si->callback([&] { run = [&](Out& o) { return cmd_search_invariant(pos[0], pos[1], cfg, o); }; });
  auto* sp = se->add_subcommand("periodic", "periodic curves with period up to --period");
  args(sp, "A1 A2", 2);
  sp->add_option("d1", cfg.d1, "degree in x")->required();
  sp->add_option("d2", cfg.d2, "degree in y")->required();
  sp->add_option("--period", period, "period cap")->capture_default_str();
  add_search_opts(sp);
  sp->callback([&] { run = [&](Out& o) { return cmd_search_periodic(pos[0], pos[1], cfg, period, o); }; });
  auto* scm = se->add_subcommand("commuting", "curves from maps commuting with A");
  args(scm, "A", 1);
  scm->add_option("d1", cfg.d1, "degree in x")->required();
  scm->add_option("d2", cfg.d2, "degree in y")->required();
  add_search_opts(scm);
  scm->callback([&] { run = [&](Out& o) { return cmd_search_commuting(pos[0], cfg, o); }; });

  auto* bd = app.add_subcommand("bounds", "explicit bounds: phi m n | psi m n | m2 n m g | kappa m | C m");
  std::string which;
  bd->add_option("which", which, "phi, psi, m2, kappa or C")->required();
  bd->add_option("values", ints, "integers")->required();
  bd->callback([&] { run = [&](Out& o) { return cmd_bounds(which, ints, o); }; });

  try {
    std::vector<std::string> argv_rev = expand_file_args(argc, argv);
    app.parse(argv_rev);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kPrecondition;
  }

  Out out;
  out.structured = format == "structured";
  int code = kOk;
  std::string kind, message;
  try {
    code = run(out);
  } catch (const ParseError& e) {
    code = kPrecondition, kind = "ParseError", message = e.what();
  } catch (const ReducibleCurve& e) {
    code = kPrecondition, kind = "ReducibleCurve", message = e.what();
    Json f = Json::array();
    for (const auto& s : e.factors()) f.push_back(s);
    out.json["factors"] = f;
    message += ": " + f.dump();
  } catch (const Unsupported& e) {
    code = kInconclusive, kind = "Unsupported", message = e.what();
  } catch (const PreconditionError& e) {
    code = kPrecondition, kind = "PreconditionError", message = e.what();
  } catch (const Inconclusive& e) {
    code = kInconclusive, kind = "Inconclusive", message = e.what();
  } catch (const TheoremViolation& e) {
    code = kViolation, kind = "TheoremViolation", message = e.what();
    std::string repro;
    for (int i = 0; i < argc; ++i) repro += std::string(i ? " '" : "'") + argv[i] + "'";
    out.json["reproduce"] = repro;
    message += "\nreproduce with: " + repro;
  }
  if (!kind.empty()) out.json["error"] = Json{{"kind", kind}, {"message", message}};
  out.json["exit_code"] = code;
  if (out.structured) {
    std::cout << out.json.dump(2) << "\n";
  } else {
    std::cout << out.text.str();
    if (!kind.empty()) std::cerr << kind << ": " << message << "\n";
  }
  return code;
}
