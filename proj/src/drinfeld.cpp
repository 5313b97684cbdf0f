#include "dw/drinfeld.hpp"

#include <cmath>
#include <random>

#include "dw/linalg.hpp"

namespace dw {

FiniteModule finite_module(const FieldPtr& Fq, Elem theta, std::vector<Elem> g) {
  const FiniteField& K = theta.field();
  if (K.p() != Fq->p() || K.degree() % Fq->degree() != 0)
    throw Error(Errc::InvalidArgument, "A-field does not contain F_q");
  for (const auto& c : g)
    if (c.field_ptr() != &K) throw Error(Errc::InvalidArgument, "coefficients must lie in the A-field");
  FieldEmbedding emb(Fq, K.ptr());
  return FiniteModule(theta, std::move(g), Fq, [emb](const Elem& c) { return emb(c); });
}

RationalModule rational_module(const FieldPtr& Fq, std::vector<RatFn> g) {
  return RationalModule(theta_of(*Fq), std::move(g), Fq, [](const Elem& c) { return rat_const(c); });
}

const FiniteField& a_field(const FiniteModule& M) { return M.theta().field(); }

FiniteModule base_change(const FiniteModule& M, const FieldEmbedding& emb) {
  std::vector<Elem> g;
  for (const auto& c : M.g()) g.push_back(emb(c));
  return finite_module(M.fq(), emb(M.theta()), std::move(g));
}

PolyF a_characteristic(const FiniteModule& M) {
  const FiniteField& K = a_field(M);
  const std::uint64_t q = M.q();
  PolyF mp = PolyF::constant(K.one());
  Elem c = M.theta();
  do {
    mp = mp * PolyF(std::vector<Elem>{-c, K.one()});
    c = c.pow(q);
  } while (!(c == M.theta()));
  FieldEmbedding emb(M.fq(), K.ptr());
  std::vector<Elem> out;
  for (std::size_t i = 0; i < mp.size(); ++i) out.push_back(*emb.preimage(mp[i]));
  return PolyF(std::move(out));
}

namespace {

std::vector<Elem> fp_basis_of_fq(const FiniteField& Fq, const FiniteField& L) {
  FieldEmbedding emb(Fq.ptr(), L.ptr());
  std::vector<Elem> out;
  for (std::uint32_t k = 0; k < Fq.degree(); ++k) {
    std::vector<std::uint32_t> u(Fq.degree(), 0);
    u[k] = 1;
    out.push_back(emb(Fq.from_coeffs(u)));
  }
  return out;
}

std::size_t fp_rank(const std::vector<Elem>& xs) {
  if (xs.empty()) return 0;
  const FiniteField& L = xs[0].field();
  auto Fp = FiniteField::make(L.p(), 1);
  Matrix<Elem> m(xs.size(), L.degree(), Fp->zero());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    auto c = L.coeffs(xs[i]);
    for (std::size_t j = 0; j < c.size(); ++j) m(i, j) = Fp->from_int(c[j]);
  }
  return rank(m);
}

}  // namespace

std::size_t fq_rank(const std::vector<Elem>& xs, const FiniteField& Fq) {
  if (xs.empty()) return 0;
  auto basis = fp_basis_of_fq(Fq, xs[0].field());
  std::vector<Elem> all;
  for (const auto& x : xs)
    for (const auto& b : basis) all.push_back(x * b);
  return fp_rank(all) / Fq.degree();
}

std::vector<Elem> fq_span(const std::vector<Elem>& basis, const FiniteField& Fq) {
  if (basis.empty()) return {};
  const FiniteField& L = basis[0].field();
  FieldEmbedding emb(Fq.ptr(), L.ptr());
  std::vector<Elem> out{L.zero()};
  for (const auto& b : basis) {
    std::vector<Elem> next;
    next.reserve(out.size() * Fq.size());
    for (std::uint64_t c = 0; c < Fq.size(); ++c) {
      Elem cb = emb(Fq.from_value(c)) * b;
      for (const auto& x : out) next.push_back(x + cb);
    }
    out = std::move(next);
  }
  return out;
}

Elem fq_combination(const std::vector<Elem>& basis, const std::vector<Elem>& coeffs) {
  if (basis.size() != coeffs.size() || basis.empty())
    throw Error(Errc::InvalidArgument, "coefficient count must match the basis");
  const FiniteField& L = basis[0].field();
  FieldEmbedding emb(coeffs[0].field().ptr(), L.ptr());
  Elem r = L.zero();
  for (std::size_t i = 0; i < basis.size(); ++i) r += emb(coeffs[i]) * basis[i];
  return r;
}

TorsionBasis torsion_basis(const FiniteModule& M, const PolyF& f, std::uint32_t cap) {
  if (f.is_zero() || !f.is_monic()) throw Error(Errc::InvalidArgument, "f must be monic");
  const FiniteField& K = a_field(M);
  // f(theta) = 0 exactly when the A-characteristic divides f
  if (f.eval_in(M.theta(), K.zero(), [&](const Elem& c) { return M.lift(c); }).is_zero())
    throw Error(Errc::BadCharacteristic, "f is divisible by the characteristic of the A-field");
  const std::size_t want = M.rank() * f.deg() * M.fq()->degree();  // F_p-dimension
  for (std::uint32_t s = 1; s <= cap; ++s) {
    if (static_cast<double>(K.degree()) * s * std::log2(double(K.p())) > 62) break;
    FieldPtr L = FiniteField::make(K.p(), K.degree() * s);
    FieldEmbedding emb(K.ptr(), L);
    FiniteModule ML = base_change(M, emb);
    TwistedPoly<Elem> phif = ML.phi_of(f);
    auto Fp = FiniteField::make(L->p(), 1);
    const std::size_t E = L->degree();
    Matrix<Elem> m(E, E, Fp->zero());
    for (std::size_t j = 0; j < E; ++j) {
      std::vector<std::uint32_t> u(E, 0);
      u[j] = 1;
      auto img = L->coeffs(phif.apply(L->from_coeffs(u)));
      for (std::size_t i = 0; i < E; ++i) m(i, j) = Fp->from_int(img[i]);
    }
    auto ker = nullspace(m, Fp->zero());
    if (ker.size() != want) continue;
    TorsionBasis tb;
    tb.field = L;
    tb.emb = emb;
    tb.s = s;
    tb.f = f;
    tb.module = ML;
    for (const auto& v : ker) {
      std::vector<std::uint32_t> c(E);
      for (std::size_t i = 0; i < E; ++i) c[i] = static_cast<std::uint32_t>(v[i].value());
      Elem x = L->from_coeffs(c);
      auto trial = tb.points;
      trial.push_back(x);
      if (fq_rank(trial, *M.fq()) == trial.size()) tb.points = std::move(trial);
    }
    return tb;
  }
  throw Error(Errc::SplittingFieldTooLarge, "torsion not rational over any extension of degree <= " + std::to_string(cap));
}

std::vector<Elem> module_basis(const TorsionBasis& tb, std::uint64_t seed) {
  const FiniteModule& M = tb.module;
  const FiniteField& Fq = *M.fq();
  const std::size_t r = M.rank(), n = tb.f.deg();
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 100000; ++attempt) {
    std::vector<Elem> mus;
    std::vector<Elem> gens;
    for (std::size_t i = 0; i < r; ++i) {
      std::vector<Elem> c;
      for (std::size_t k = 0; k < tb.points.size(); ++k) c.push_back(Fq.from_value(rng() % Fq.size()));
      Elem mu = fq_combination(tb.points, c);
      mus.push_back(mu);
      Elem cur = mu;
      for (std::size_t j = 0; j < n; ++j) {
        gens.push_back(cur);
        cur = M.phi_x().apply(cur);
      }
    }
    if (fq_rank(gens, Fq) == r * n) return mus;
  }
  throw Error(Errc::InvalidArgument, "no A/f-basis found");
}

std::vector<RatFn> exp_coeffs(const RationalModule& M, std::size_t N) {
  const std::uint64_t q = M.q();
  const RatFn& th = M.theta();
  std::vector<RatFn> e{adl::ol(th)};
  RatFn thq = th;
  for (std::size_t i = 1; i <= N; ++i) {
    thq = adl::fr(thq, q);
    RatFn s = adl::zl(th);
    for (std::size_t j = 1; j <= std::min(i, M.rank()); ++j) {
      if (M.g()[j - 1].is_zero() || e[i - j].is_zero()) continue;
      s += M.g()[j - 1] * frob_iter(e[i - j], q, j);
    }
    e.push_back(s / (thq - th));
  }
  return e;
}

}  // namespace dw
