// dweil: command-line front end for operators, torsion, pairings and the verification suites.
#include <cctype>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dw/drinfeld.hpp"
#include "dw/pairing.hpp"
#include "dw/verify.hpp"
#include "dw/weil.hpp"
#include "json.hpp"

using namespace dw;
using json = nlohmann::json;

namespace {

struct Opts {
  std::uint64_t q = 0;
  std::uint32_t field_ext = 1;
  std::string modulus, theta, f, module_file;
  std::vector<std::string> g;
  std::size_t rank = 2, trunc = 0, cases = 0;
  std::uint64_t seed = 0;
  std::string format = "text", suite;
  std::vector<std::string> mu;
  bool timing = false;
};

std::vector<long long> parse_list(const std::string& s, const char* what) {
  std::vector<long long> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
    if (item.empty() || pos != item.size()) throw Error(Errc::InvalidArgument, std::string("malformed ") + what + ": " + s);
    out.push_back(v);
  }
  if (out.empty()) throw Error(Errc::InvalidArgument, std::string("empty ") + what);
  return out;
}

std::vector<std::uint32_t> to_u32(const std::vector<long long>& v, std::uint32_t p) {
  std::vector<std::uint32_t> out;
  for (auto x : v) out.push_back(static_cast<std::uint32_t>(((x % p) + p) % p));
  return out;
}

std::pair<std::uint32_t, std::uint32_t> prime_power(std::uint64_t q) {
  for (std::uint64_t p = 2; p * p <= q; ++p)
    if (q % p == 0) {
      std::uint32_t e = 0;
      std::uint64_t r = q;
      while (r % p == 0) r /= p, ++e;
      if (r != 1) throw Error(Errc::InvalidArgument, "q is not a prime power");
      return {static_cast<std::uint32_t>(p), e};
    }
  if (q < 2) throw Error(Errc::InvalidArgument, "q must be a prime power >= 2");
  return {static_cast<std::uint32_t>(q), 1};
}

// Elements of F_q are given by their encoding 0..q-1.
PolyF parse_fq_poly(const FiniteField& Fq, const std::string& s) {
  std::vector<Elem> c;
  for (auto v : parse_list(s, "polynomial")) {
    if (v < 0 || static_cast<std::uint64_t>(v) >= Fq.size())
      throw Error(Errc::InvalidArgument, "coefficient out of range for F_q: " + std::to_string(v));
    c.push_back(Fq.from_value(static_cast<std::uint64_t>(v)));
  }
  return PolyF(std::move(c));
}

PolyF monic_f(const FiniteField& Fq, const std::string& s) {
  if (s.empty()) throw Error(Errc::InvalidArgument, "--f is required");
  PolyF f = parse_fq_poly(Fq, s);
  if (f.is_zero() || f.deg() == 0 || !f.is_monic())
    throw Error(Errc::InvalidArgument, "f must be monic of degree >= 1");
  return f;
}

json elem_json(const Elem& a) { return a.field().coeffs(a); }

json field_json(const FiniteField& F) {
  return {{"p", F.p()}, {"e", F.degree()}, {"modulus", F.desc().modulus}};
}

struct Setup {
  FieldPtr Fq, K;
  FiniteModule M;
};

Elem parse_k_elem(const FiniteField& K, const std::vector<long long>& c) {
  if (c.size() > K.degree()) throw Error(Errc::InvalidArgument, "element has more coefficients than the field degree");
  return K.from_coeffs(to_u32(c, K.p()));
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::InvalidArgument, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(Errc::InvalidArgument, std::string("bad module file: ") + e.what());
  }
}

// Module from --module FILE or from --q/--field-ext/--modulus/--theta/--g.
Setup module_setup(const Opts& o) {
  Setup S;
  std::vector<std::vector<long long>> gs;
  std::optional<std::vector<long long>> theta;
  if (!o.module_file.empty()) {
    json j = load_json(o.module_file);
    try {
      const json& fd = j.at("field");
      auto p = fd.at("p").get<std::uint32_t>();
      auto e = fd.at("e").get<std::uint32_t>();
      std::optional<std::vector<std::uint32_t>> mod;
      if (fd.contains("modulus")) mod = fd.at("modulus").get<std::vector<std::uint32_t>>();
      S.K = FiniteField::make(p, e, mod);
      auto [qp, qe] = prime_power(j.value("q", static_cast<std::uint64_t>(p)));
      if (qp != p || e % qe != 0) throw Error(Errc::InvalidArgument, "q does not divide into the field");
      S.Fq = FiniteField::make(p, qe);
      theta = j.at("theta").get<std::vector<long long>>();
      gs = j.at("g").get<std::vector<std::vector<long long>>>();
    } catch (const json::exception& e) {
      throw Error(Errc::InvalidArgument, std::string("bad module file: ") + e.what());
    }
  } else {
    if (o.q == 0) throw Error(Errc::InvalidArgument, "--q is required");
    auto [p, e] = prime_power(o.q);
    if (o.field_ext == 0) throw Error(Errc::InvalidArgument, "--field-ext must be >= 1");
    std::optional<std::vector<std::uint32_t>> mod;
    if (!o.modulus.empty()) mod = to_u32(parse_list(o.modulus, "modulus"), p);
    S.Fq = FiniteField::make(p, e);
    S.K = FiniteField::make(p, e * o.field_ext, mod);
    if (!o.theta.empty()) theta = parse_list(o.theta, "theta");
    if (o.g.empty()) throw Error(Errc::InvalidArgument, "--g is required");
    for (const auto& one : o.g) {
      std::stringstream ss(one);
      std::string item;
      while (std::getline(ss, item, ';')) gs.push_back(parse_list(item, "g coefficient"));
    }
  }
  Elem th = theta ? parse_k_elem(*S.K, *theta) : S.K->gen();
  std::vector<Elem> g;
  for (const auto& c : gs) g.push_back(parse_k_elem(*S.K, c));
  if (g.empty() || g.back().is_zero()) throw Error(Errc::InvalidArgument, "leading g coefficient must be nonzero");
  S.M = finite_module(S.Fq, th, g);
  return S;
}

int cmd_weil_op(const Opts& o) {
  if (o.q == 0) throw Error(Errc::InvalidArgument, "--q is required");
  auto [p, e] = prime_power(o.q);
  FieldPtr F = FiniteField::make(p, e);
  PolyF f = monic_f(*F, o.f);
  if (o.rank == 0) throw Error(Errc::InvalidArgument, "--rank must be >= 1");
  MultiPoly O = weil_op_r(f, o.rank);
  if (o.format == "latex") {
    std::cout << O.to_latex() << "\n";
  } else if (o.format == "json") {
    json terms = json::array();
    for (const auto& [ex, c] : O.terms())
      terms.push_back({{"exponents", std::vector<int>(ex.begin(), ex.begin() + O.nvars())}, {"coeff", c.value()}});
    json j{{"q", o.q}, {"f", poly_values(f)}, {"rank", o.rank}, {"vars", O.vars()}, {"operator", O.to_text()},
           {"terms", terms}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << O.to_text() << "\n";
  }
  return 0;
}

std::uint64_t ipow(std::uint64_t b, std::size_t k) {
  std::uint64_t r = 1;
  while (k--) r *= b;
  return r;
}

int cmd_torsion(const Opts& o) {
  Setup S = module_setup(o);
  PolyF f = monic_f(*S.Fq, o.f);
  TorsionBasis tb = torsion_basis(S.M, f);
  const std::size_t dim = tb.points.size();
  json basis = json::array();
  for (const auto& m : tb.points) basis.push_back(elem_json(m));
  json j{{"splitting_field", field_json(*tb.field)}, {"s", tb.s},         {"rank", S.M.rank()},
         {"f", poly_values(f)},                     {"dimension", dim},   {"size", ipow(S.Fq->size(), dim)},
         {"basis", basis}};
  if (o.format == "json") {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "splitting field: F_" << tb.field->size() << " (s = " << tb.s << ")\n"
              << "size: " << S.Fq->size() << "^" << dim << " = " << ipow(S.Fq->size(), dim) << "\n"
              << "basis:\n";
    for (const auto& m : tb.points) std::cout << "  " << to_string(m) << "\n";
  }
  return 0;
}

// "c1,c2,..." picks sum c_j b_j over the torsion basis; "@a0,a1,..." is a raw element of the torsion field.
Elem select_point(const TorsionBasis& tb, const FiniteField& Fq, const std::string& sel) {
  if (!sel.empty() && sel[0] == '@') return parse_k_elem(*tb.field, parse_list(sel.substr(1), "point"));
  auto c = parse_list(sel, "selector");
  if (c.size() != tb.points.size())
    throw Error(Errc::InvalidArgument, "selector needs " + std::to_string(tb.points.size()) + " coefficients");
  std::vector<Elem> cs;
  for (auto v : c) {
    if (v < 0 || static_cast<std::uint64_t>(v) >= Fq.size()) throw Error(Errc::InvalidArgument, "selector coefficient out of range");
    cs.push_back(Fq.from_value(static_cast<std::uint64_t>(v)));
  }
  return fq_combination(tb.points, cs);
}

int cmd_pairing(const Opts& o) {
  Setup S = module_setup(o);
  PolyF f = monic_f(*S.Fq, o.f);
  TorsionBasis tb = torsion_basis(S.M, f);
  std::vector<Elem> mus;
  if (o.mu.empty()) {
    mus = module_basis(tb, o.seed);
  } else {
    for (const auto& s : o.mu) mus.push_back(select_point(tb, *S.Fq, s));
  }
  Elem W = weil_pairing(tb.module, f, mus);
  Elem chk = tb.module.exterior().phi_apply(f, W);
  const bool ok = chk.is_zero();
  json pts = json::array();
  for (const auto& m : mus) pts.push_back(elem_json(m));
  if (o.format == "json") {
    json j{{"field", field_json(*tb.field)}, {"f", poly_values(f)}, {"points", pts}, {"value", elem_json(W)},
           {"zero", W.is_zero()}, {"psi_f_of_value_is_zero", ok}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "W = " << to_string(W) << "\n" << "psi_f(W) = " << to_string(chk) << (ok ? " (ok)" : " (FAILED)") << "\n";
  }
  return ok ? 0 : 1;
}

int cmd_verify(const Opts& o) {
  if (!is_suite(o.suite)) {
    std::cerr << "unknown suite: " << o.suite << "\n";
    return 2;
  }
  Report r = run_suite(o.suite, o.seed, o.cases, o.trunc);
  if (o.format == "text") {
    std::cout << r.suite << ": " << r.cases << " cases, " << r.checks << " checks, " << r.failures.size()
              << " failures";
    if (o.timing) std::cout << " in " << r.elapsed << " s";
    std::cout << "\n";
    for (const auto& f : r.failures) std::cout << "  " << f.inputs.dump() << "\n    " << f.lhs << "\n    " << f.rhs << "\n";
  } else {
    std::cout << report_json(r, o.timing).dump(2) << "\n";
  }
  return r.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weil operators, Drinfeld torsion and the Moore-determinant Weil pairing"};
  app.require_subcommand(1);
  Opts o;
  auto common = [&o](CLI::App* c, bool module) {
    c->add_option("--q", o.q, "size of the constant field F_q");
    c->add_option("--f", o.f, "modulus f, comma-separated coefficients, constant first");
    c->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json", "latex"}));
    if (module) {
      c->add_option("--field-ext", o.field_ext, "degree m of the A-field K = F_(q^m)");
      c->add_option("--modulus", o.modulus, "modulus of K over F_p");
      c->add_option("--theta", o.theta, "image of the variable x in K, as coefficients over F_p");
      c->add_option("--g", o.g, "coefficients g_1, ..., g_r of phi_x over F_p; repeat the flag or separate with ;");
      c->add_option("--module", o.module_file, "module description file (JSON)");
      c->add_option("--seed", o.seed, "seed for the module basis");
    }
  };
  auto* wop = app.add_subcommand("weil-op", "print the rank-r Weil operator of f");
  common(wop, false);
  wop->add_option("--rank", o.rank, "rank r");
  auto* tor = app.add_subcommand("torsion", "F_q-basis of the f-torsion");
  common(tor, true);
  tor->add_option("--rank", o.rank, "ignored; the rank is the number of g coefficients");
  auto* par = app.add_subcommand("pairing", "Weil pairing of f-torsion points");
  common(par, true);
  par->add_option("--mu", o.mu, "point selector: basis coefficients c1,c2,... or @raw coefficients");
  auto* ver = app.add_subcommand("verify", "run a verification suite");
  ver->add_option("--suite", o.suite, "suite name")->required();
  ver->add_option("--seed", o.seed, "seed");
  ver->add_option("--cases", o.cases, "number of random cases (0 = suite default)");
  ver->add_option("--trunc", o.trunc, "truncation depth N for the agf suite (default 3)");
  ver->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
  ver->add_flag("--timing", o.timing, "include elapsed time");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  try {
    if (*wop) return cmd_weil_op(o);
    if (*tor) {
      if (o.format == "latex") throw Error(Errc::InvalidArgument, "latex output is only available for weil-op");
      return cmd_torsion(o);
    }
    if (*par) {
      if (o.format == "latex") throw Error(Errc::InvalidArgument, "latex output is only available for weil-op");
      return cmd_pairing(o);
    }
    if (*ver) {
      if (ver->count("--format") == 0) o.format = "json";
      return cmd_verify(o);
    }
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return is_usage_error(e.code()) ? 2 : 1;
  }
  return 2;
}
