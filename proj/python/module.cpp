#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dw/drinfeld.hpp"
#include "dw/pairing.hpp"
#include "dw/verify.hpp"
#include "dw/weil.hpp"

namespace py = pybind11;
using namespace dw;

namespace {

PolyF fq_poly(const FiniteField& F, const std::vector<std::uint64_t>& c) {
  for (auto v : c)
    if (v >= F.size()) throw Error(Errc::InvalidArgument, "coefficient out of range for F_q");
  return poly_from_values(F, c);
}

FieldPtr fq_of(std::uint64_t q) {
  for (std::uint32_t p = 2; p <= q; ++p)
    if (q % p == 0) {
      std::uint32_t e = 0;
      for (std::uint64_t r = q; r > 1; r /= p, ++e)
        if (r % p) throw Error(Errc::InvalidArgument, "q is not a prime power");
      return FiniteField::make(p, e);
    }
  throw Error(Errc::InvalidArgument, "q must be >= 2");
}

struct Built {
  FieldPtr Fq;
  FiniteModule M;
};

Built build(std::uint64_t q, std::uint32_t m, const std::vector<std::uint32_t>& theta,
            const std::vector<std::vector<std::uint32_t>>& g) {
  Built b{fq_of(q), {}};
  auto K = FiniteField::make(b.Fq->p(), b.Fq->degree() * m);
  std::vector<Elem> gs;
  for (const auto& c : g) gs.push_back(K->from_coeffs(c));
  b.M = finite_module(b.Fq, theta.empty() ? K->gen() : K->from_coeffs(theta), gs);
  return b;
}

std::string weil_operator(std::uint64_t q, const std::vector<std::uint64_t>& f, std::size_t rank, bool latex) {
  FieldPtr F = fq_of(q);
  MultiPoly O = weil_op_r(fq_poly(*F, f), rank);
  return latex ? O.to_latex() : O.to_text();
}

py::dict torsion(std::uint64_t q, std::uint32_t m, const std::vector<std::uint32_t>& theta,
                 const std::vector<std::vector<std::uint32_t>>& g, const std::vector<std::uint64_t>& f) {
  Built b = build(q, m, theta, g);
  TorsionBasis tb = torsion_basis(b.M, fq_poly(*b.Fq, f));
  py::list basis;
  for (const auto& x : tb.points) basis.append(tb.field->coeffs(x));
  py::dict d;
  d["field_size"] = tb.field->size();
  d["s"] = tb.s;
  d["dimension"] = tb.points.size();
  d["basis"] = basis;
  return d;
}

std::vector<std::uint32_t> pairing(std::uint64_t q, std::uint32_t m, const std::vector<std::uint32_t>& theta,
                                   const std::vector<std::vector<std::uint32_t>>& g, const std::vector<std::uint64_t>& f,
                                   const std::vector<std::vector<std::uint64_t>>& selectors) {
  Built b = build(q, m, theta, g);
  PolyF fp = fq_poly(*b.Fq, f);
  TorsionBasis tb = torsion_basis(b.M, fp);
  std::vector<Elem> mus;
  if (selectors.empty()) mus = module_basis(tb);
  for (const auto& s : selectors) {
    std::vector<Elem> c;
    for (auto v : s) c.push_back(b.Fq->from_value(v % b.Fq->size()));
    if (c.size() != tb.points.size()) throw Error(Errc::InvalidArgument, "selector length must equal the torsion dimension");
    mus.push_back(fq_combination(tb.points, c));
  }
  Elem W = weil_pairing(tb.module, fp, mus);
  return tb.field->coeffs(W);
}

std::string verify(const std::string& suite, std::uint64_t seed, std::size_t cases) {
  if (!is_suite(suite)) throw Error(Errc::InvalidArgument, "unknown suite: " + suite);
  return report_json(run_suite(suite, seed, cases)).dump();
}

}  // namespace

PYBIND11_MODULE(_dweil, m) {
  m.doc() = "Weil operators, Drinfeld torsion and Weil pairings over finite fields";
  static py::exception<Error> exc(m, "DweilError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(exc, e.what());
    }
  });
  m.def("weil_operator", &weil_operator, py::arg("q"), py::arg("f"), py::arg("rank"), py::arg("latex") = false);
  m.def("torsion", &torsion, py::arg("q"), py::arg("field_ext"), py::arg("theta"), py::arg("g"), py::arg("f"));
  m.def("pairing", &pairing, py::arg("q"), py::arg("field_ext"), py::arg("theta"), py::arg("g"), py::arg("f"),
        py::arg("selectors") = std::vector<std::vector<std::uint64_t>>{});
  m.def("verify_json", &verify, py::arg("suite"), py::arg("seed") = 0, py::arg("cases") = 0);
  m.def("suite_names", &suite_names);
}
