#include "swan/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "swan/fuzz.hpp"
#include "swan/newton.hpp"
#include "swan/parse.hpp"
#include "swan/piexp.hpp"
#include "swan/radius.hpp"

namespace swan {

using nlohmann::json;

namespace {

struct FieldDoc {
  const FieldCtx* k;
};

const FieldCtx* field_from_json(const json& j) {
  if (!j.contains("p")) fail(errc::bad_input, "missing field \"p\"");
  int p = j.at("p").get<int>();
  int h = j.value("h", 1);
  int r = j.value("r", 1);
  std::vector<int> ext;
  if (j.contains("ext_poly")) ext = j.at("ext_poly").get<std::vector<int>>();
  return FieldCtx::get(p, h, r, ext);
}

void check_known_keys(const json& j, std::initializer_list<const char*> keys) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (auto* key : keys)
      if (it.key() == key) ok = true;
    if (!ok) fail(errc::bad_input, "unknown field \"" + it.key() + "\" in input document");
  }
}

CoVector covector_from_json(const json& j, const FieldCtx* k) {
  if (!j.contains("covector")) fail(errc::bad_input, "missing \"covector\"");
  CoVector cov;
  for (auto& e : j.at("covector")) cov.f.push_back(parse_laurent(e.get<std::string>(), k));
  if ((int)cov.f.size() - 1 > WittRing::bound(k->p))
    fail(errc::bound_exceeded, "covector longer than the Witt bound for this p");
  return cov;
}

json character_json(const Character& ch) {
  json mins = json::array();
  for (auto& [n, cm] : ch.wild) {
    json w = json::array();
    for (auto& x : cm.witt) w.push_back(to_string(x));
    mins.push_back(json{{"n", cm.n}, {"m", cm.m}, {"witt", w}});
  }
  return mins;
}

json read_input(const std::vector<std::string>& args, size_t idx, std::istream& in) {
  std::string text;
  if (idx < args.size() && !args[idx].empty() && args[idx][0] != '-') {
    std::ifstream f(args[idx]);
    if (!f) fail(errc::bad_input, "cannot open input file " + args[idx]);
    std::stringstream ss;
    ss << f.rdbuf();
    text = ss.str();
  } else {
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(errc::bad_input, "invalid JSON input");
  return j;
}

std::string flag_value(const std::vector<std::string>& args, const std::string& name,
                       const std::string& dflt) {
  for (size_t i = 0; i + 1 < args.size(); ++i)
    if (args[i] == name) return args[i + 1];
  return dflt;
}

Character character_from_json(const json& j) {
  check_known_keys(j, {"p", "h", "r", "ext_poly", "covector", "tame_order"});
  const FieldCtx* k = field_from_json(j);
  CoVector cov = covector_from_json(j, k);
  Character ch = minimal_lifting(cov, k);
  if (j.contains("tame_order")) {
    long N = j.at("tame_order").get<long>();
    if (N < 1 || N % k->p == 0) fail(errc::bad_input, "tame_order must be positive and prime to p");
    ch.tame_order = N;
  }
  return ch;
}

int cmd_witt(const std::vector<std::string>& args, std::istream& in, std::ostream& out, bool mul) {
  json j = read_input(args, 1, in);
  check_known_keys(j, {"p", "h", "r", "ext_poly", "a", "b"});
  const FieldCtx* k = field_from_json(j);
  WittE a, b;
  for (auto& e : j.at("a")) a.push_back(parse_laurent(e.get<std::string>(), k));
  for (auto& e : j.at("b")) b.push_back(parse_laurent(e.get<std::string>(), k));
  if ((int)a.size() - 1 > WittRing::bound(k->p) || a.size() != b.size())
    fail(errc::bad_input, "vector lengths invalid");
  WittCtx W(k);
  WittE c = mul ? W.mul(a, b) : W.add(a, b);
  json res = json::array();
  for (auto& x : c) res.push_back(to_string(x));
  out << json{{"result", res}}.dump() << "\n";
  return 0;
}

int cmd_sw(const std::vector<std::string>& args, std::istream& in, std::ostream& out, bool full) {
  json j = read_input(args, 1, in);
  Character ch = character_from_json(j);
  long sw = swan_conductor(ch);
  if (full)
    out << json{{"sw", sw}, {"minimal", character_json(ch)}}.dump() << "\n";
  else
    out << json{{"sw", sw}}.dump() << "\n";
  return 0;
}

int cmd_rsw(const std::vector<std::string>& args, std::istream& in, std::ostream& out) {
  json j = read_input(args, 1, in);
  Character ch = character_from_json(j);
  LogOneForm y = refined_swan(ch);
  json alpha = json::array();
  for (auto& hcoef : y.alpha.h) alpha.push_back(to_string(hcoef));
  out << json{{"d", y.d}, {"alpha", alpha}, {"beta", to_string(y.beta)}}.dump() << "\n";
  return 0;
}

int cmd_compare(const std::vector<std::string>& args, std::istream& in, std::ostream& out) {
  json j = read_input(args, 1, in);
  Character ch = character_from_json(j);
  ConductorComparison c = compare_conductors(ch);
  out << json{{"sw", c.sw}, {"sw_nabla", c.sw_nabla}, {"equal", c.equal}}.dump() << "\n";
  return 0;
}

int cmd_radius(const std::vector<std::string>& args, std::istream& in, std::ostream& out) {
  json j = read_input(args, 1, in);
  Character ch = character_from_json(j);
  if (ch.wild.empty()) fail(errc::unramified_character, "radius of the trivial wild part is 1");
  // combined radius: min over co-monomials of their T functions
  LogAffine T;
  T.kind = LogAffine::Min;
  T.hi = Rat(0);
  for (auto& [n, cm] : ch.wild) {
    RadiusAtZero rz = radius_at_zero(rank_one_profile(cm, ch.k));
    for (auto& pc : rz.T.pieces) T.pieces.push_back(pc);
  }
  std::string csv_path = flag_value(args, "--csv", "");
  auto red = T.reduced();
  auto breaks = T.breakpoints();
  json verts = json::array();
  for (auto& pc : red) verts.push_back(json{{"slope", rat_str(pc.slope)}, {"icpt", rat_str(pc.icpt)}});
  out << json{{"pieces", verts}, {"sw_nabla", rat_str(T.slope_right())}}.dump() << "\n";
  if (!csv_path.empty()) {
    std::ofstream csv(csv_path);
    if (!csv) fail(errc::bad_input, "cannot open CSV output " + csv_path);
    csv << "r,logT\n";
    // breakpoints plus 32 interior samples on [lo, 0] with lo below all breaks
    Rat lo = Rat(-4);
    for (auto& b : breaks) lo = std::min(lo, Rat(b - 1));
    std::vector<Rat> xs = breaks;
    for (int i = 1; i <= 32; ++i) xs.push_back(lo + (Rat(0) - lo) * Rat(i, 33));
    std::sort(xs.begin(), xs.end());
    for (auto& x : xs) csv << rat_dbl(x) << "," << rat_dbl(T.value(x)) << "\n";
  }
  return 0;
}

int cmd_newton(const std::vector<std::string>& args, std::istream& in, std::ostream& out) {
  json j = read_input(args, 1, in);
  check_known_keys(j, {"valuations"});
  OpValuations v;
  for (auto& e : j.at("valuations")) {
    if (e.is_null() || (e.is_string() && (e == "inf" || e == "+inf")))
      v.push_back(std::nullopt);
    else
      v.push_back(e.get<long>());
  }
  long irr = formal_irregularity(v);
  Rat slope = formal_slope(v);
  NewtonPolygon np = newton_polygon(v);
  json verts = json::array();
  for (auto& [x, y] : np.vertices) verts.push_back(json::array({rat_str(x), rat_str(y)}));
  out << json{{"irr", irr}, {"slope", rat_str(slope)}, {"vertices", verts}}.dump() << "\n";
  return 0;
}

int cmd_piexp(const std::vector<std::string>& args, std::istream& in, std::ostream& out) {
  json j = read_input(args, 1, in);
  Character ch = character_from_json(j);
  int D = std::stoi(flag_value(args, "--order", "8"));
  if (D < 1 || D > 64) fail(errc::bad_input, "--order must be in 1..64");
  if (ch.wild.empty()) fail(errc::bad_input, "trivial wild part; nothing to expand");
  json series = json::array();
  for (auto& [n, cm] : ch.wild) {
    LiftCtx L = make_lift_ctx(ch.k, cm.m);
    WittLift lift = lift_witt_monomial(cm.witt, cm.n, L);
    TruncSeries E = pi_exponential(lift, D, L);
    json coeffs = json::array();
    for (int i = 0; i <= D; ++i) coeffs.push_back(piexp_coeff_to_string(E.c[i], L));
    series.push_back(json{{"n", cm.n}, {"m", cm.m}, {"coeffs", coeffs}});
  }
  out << json{{"order", D}, {"series", series}}.dump() << "\n";
  return 0;
}

int cmd_fuzz(const std::vector<std::string>& args, std::ostream& out) {
  uint64_t seed = std::stoull(flag_value(args, "--seed", "1"));
  long count = std::stol(flag_value(args, "--count", "100"));
  FuzzBounds b;
  b.max_r = std::stoi(flag_value(args, "--max-r", "2"));
  b.max_m = std::stoi(flag_value(args, "--max-m", "2"));
  b.max_n = std::stoi(flag_value(args, "--max-n", "9"));
  b.max_comonomials = std::stoi(flag_value(args, "--comonomials", "3"));
  std::string ps = flag_value(args, "--primes", "2,3,5");
  b.primes.clear();
  std::stringstream ss(ps);
  std::string tok;
  while (std::getline(ss, tok, ',')) b.primes.push_back(std::stoi(tok));
  if (b.primes.empty() || b.max_r < 1 || b.max_r > 9 || b.max_n < 1 || b.max_comonomials < 1)
    fail(errc::bad_input, "bad fuzz bounds");
  FuzzReport rep = fuzz_compare(seed, count, b);
  json hist = json::object();
  for (auto& [sw, n] : rep.conductor_histogram) hist[std::to_string(sw)] = n;
  out << json{{"seed", rep.seed},
              {"count", rep.count},
              {"mismatches", rep.mismatches},
              {"mismatch_cases", rep.mismatch_docs},
              {"histogram", hist}}
             .dump()
      << "\n";
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out) {
  try {
    if (args.empty() || args[0] == "--help" || args[0] == "help") {
      out << "usage: swancond <subcommand> [input.json] [flags]\n"
             "subcommands: witt-add witt-mul sw minlift rsw radius newton piexp compare fuzz-compare\n"
             "flags: --order D (piexp), --csv PATH (radius),\n"
             "       --seed N --count N --primes 2,3,5 --max-r R --max-m M --max-n N --comonomials C\n"
             "input is a JSON document on stdin or in the named file\n";
      return args.empty() ? 2 : 0;
    }
    const std::string& cmd = args[0];
    if (cmd == "witt-add") return cmd_witt(args, in, out, false);
    if (cmd == "witt-mul") return cmd_witt(args, in, out, true);
    if (cmd == "sw") return cmd_sw(args, in, out, false);
    if (cmd == "minlift") return cmd_sw(args, in, out, true);
    if (cmd == "rsw") return cmd_rsw(args, in, out);
    if (cmd == "radius") return cmd_radius(args, in, out);
    if (cmd == "newton") return cmd_newton(args, in, out);
    if (cmd == "piexp") return cmd_piexp(args, in, out);
    if (cmd == "compare") return cmd_compare(args, in, out);
    if (cmd == "fuzz-compare") return cmd_fuzz(args, out);
    fail(errc::bad_input, "unknown subcommand \"" + cmd + "\"");
  } catch (const conductor_error& e) {
    out << json{{"error", errc_name(e.code())}, {"detail", e.what()}}.dump() << "\n";
    return e.code() == errc::integrality_failure ? 3 : 2;
  } catch (const std::exception& e) {
    out << json{{"error", "Internal"}, {"detail", e.what()}}.dump() << "\n";
    return 3;
  }
}

}  // namespace swan
