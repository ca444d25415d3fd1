#include "dgreen/fake_degree.hpp"

#include "dgreen/errors.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

namespace dgreen {

namespace {

using CycloPoly = std::vector<CycloNum>;  // dense in q, little-endian

// det(w) * (q^2-1)(q^m-1) / det(q - w) for every w in elements(m); the
// division is exact in Q(zeta_m)[q].
struct SumKernel {
  std::vector<CycloPoly> weighted;
};

const SumKernel& sum_kernel(int m) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<SumKernel>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[m];
  if (slot) return *slot;

  auto kernel = std::make_unique<SumKernel>();
  const IntPoly numer = IntPoly::from_terms({{2, 1}, {0, -1}}) * IntPoly::from_terms({{m, 1}, {0, -1}});
  const std::vector<Integer> dense = numer.dense();
  for (const auto& w : elements(m)) {
    // char poly of w on V: q^2 - tr(w) q + det(w)
    const CycloNum trace = w.is_reflection() ? CycloNum::zero(m)
                                             : CycloNum::zeta_power(m, w.k) + CycloNum::zeta_power(m, -w.k);
    const CycloNum det(m, w.is_reflection() ? -1 : 1);
    const CycloNum c1 = -trace;
    const CycloNum& c0 = det;

    CycloPoly rem;
    rem.reserve(dense.size());
    for (const auto& c : dense) rem.emplace_back(m, Rational(c));
    CycloPoly quo(rem.size() - 2, CycloNum::zero(m));
    for (std::size_t i = quo.size(); i-- > 0;) {
      CycloNum lead = rem[i + 2];
      if (lead.is_zero()) continue;
      rem[i + 1] -= lead * c1;
      rem[i] -= lead * c0;
      rem[i + 2] = CycloNum::zero(m);
      quo[i] = std::move(lead);
    }
    if (!rem[0].is_zero() || !rem[1].is_zero())
      throw std::logic_error("fake degree kernel: characteristic polynomial does not divide (q^2-1)(q^m-1)");
    if (w.is_reflection())
      for (auto& c : quo) c = -c;
    kernel->weighted.push_back(std::move(quo));
  }
  slot = std::move(kernel);
  return *slot;
}

IntPoly to_int_poly(const CycloPoly& p, int m) {
  std::vector<IntPoly::Term> terms;
  for (std::size_t e = 0; e < p.size(); ++e) {
    Rational v = p[e].rational_part();
    if (denominator(v) != 1)
      throw NotPolynomial("R(f) has non-integral coefficient " + v.str() + " at q^" + std::to_string(e) +
                          " (m=" + std::to_string(m) + ")");
    if (v != 0) terms.emplace_back(static_cast<int>(e), numerator(v));
  }
  return IntPoly::from_terms(std::move(terms));
}

IntPoly omega_closed_entry(int m, CharLabel a, CharLabel b) {
  using K = CharLabel::Kind;
  if (b < a) std::swap(a, b);
  auto mono = [](int e) { return IntPoly::q_power(e); };
  const bool a_triv = a.kind == K::Chi && a.index == 0;
  const bool b_eps = b.kind == K::Eps;
  if (a.kind == K::Eps) return mono(2 * m);  // eps, eps
  if (a_triv) {
    if (b.kind == K::Chi && b.index == 0) return mono(2 * m);
    if (b.kind == K::Chi) return mono(m + b.index) + mono(2 * m - b.index);
    if (b.is_linear_r()) return mono(3 * m / 2);
    return mono(m);  // eps
  }
  if (a.kind == K::Chi) {
    const int i = a.index;
    if (b.kind == K::Chi) {
      const int j = b.index;
      const int diff = std::abs(i - j);
      return mono(m + diff) + mono(m + i + j) + mono(2 * m - i - j) + mono(2 * m - diff);
    }
    if (b.is_linear_r()) return mono(3 * m / 2 - i) + mono(3 * m / 2 + i);
    if (b_eps) return mono(m + i) + mono(2 * m - i);
  }
  // both linear characters of degree m/2, or one of them with eps
  if (b_eps) return mono(3 * m / 2);
  return a == b ? mono(2 * m) : mono(m);
}

}  // namespace

IntPoly poincare(int m) {
  if (m < 2) throw InvalidM("poincare: m >= 2 required");
  return div_exact(IntPoly::from_terms({{2, 1}, {0, -1}}) * IntPoly::from_terms({{m, 1}, {0, -1}}),
                   IntPoly::from_terms({{2, 1}, {1, -2}, {0, 1}}));
}

IntPoly fake_degree_sum(int m, const ClassFunction& f) {
  const SumKernel& kernel = sum_kernel(m);
  if (f.size() != kernel.weighted.size())
    throw std::invalid_argument("fake_degree_sum: class function must have 2m values");
  CycloPoly acc(kernel.weighted.front().size(), CycloNum::zero(m));
  for (std::size_t w = 0; w < f.size(); ++w) {
    if (f[w].is_zero()) continue;
    const CycloPoly& kw = kernel.weighted[w];
    if (f[w].is_rational()) {
      const Rational c = f[w].rational_part();
      for (std::size_t e = 0; e < acc.size(); ++e)
        if (!kw[e].is_zero()) acc[e] += kw[e] * c;
    } else {
      for (std::size_t e = 0; e < acc.size(); ++e)
        if (!kw[e].is_zero()) acc[e] += kw[e] * f[w];
    }
  }
  const Rational scale(1, 2 * m);
  for (auto& c : acc) c *= scale;
  return to_int_poly(acc, m);
}

IntPoly fake_degree(int m, CharLabel label) {
  const auto elts = elements(m);
  ClassFunction values;
  values.reserve(elts.size());
  for (const auto& g : elts) values.push_back(character_value(m, m, label, g));
  return fake_degree_sum(m, values);
}

IntPoly fake_degree_closed(int m, CharLabel label) {
  if (!is_valid_label(m, label)) throw InvalidLabel(label.to_string() + " is not a character of I2(" + std::to_string(m) + ")");
  switch (label.kind) {
    case CharLabel::Kind::Chi:
      if (label.index == 0) return IntPoly(1);
      return IntPoly::q_power(label.index) + IntPoly::q_power(m - label.index);
    case CharLabel::Kind::ChiR:
    case CharLabel::Kind::ChiRPrime: return IntPoly::q_power(m / 2);
    case CharLabel::Kind::Eps: return IntPoly::q_power(m);
  }
  return {};
}

namespace {

// conj(det_V): for Coxeter groups this is det_V itself, but the
// conjugation is applied so the formula reads as for complex groups.
ClassFunction conj_det(int m) {
  ClassFunction det = det_character(m);
  for (auto& v : det) v = v.conjugate();
  return det;
}

}  // namespace

bool check_symmetry(int m, const ClassFunction& f) {
  const int nstar = m;
  const RatFunc lhs(fake_degree_sum(m, pointwise_product(conj_det(m), f)));
  const RatFunc rhs = RatFunc(fake_degree_sum(m, f)).substitute_inverse(nstar);
  return lhs == rhs;
}

std::size_t OmegaMatrix::index_of(CharLabel label) const {
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) throw InvalidLabel(label.to_string() + " is not a character of I2(" + std::to_string(m) + ")");
  return static_cast<std::size_t>(it - labels.begin());
}

OmegaMatrix omega(int m, OmegaMethod method) {
  if (m < 3) throw InvalidM("omega: m >= 3 required");
  OmegaMatrix out;
  out.m = m;
  out.nstar = m;
  out.labels = char_labels(m);
  const std::size_t n = out.labels.size();
  out.entries = PolyMatrix(n, n);

  if (method == OmegaMethod::Closed) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) out.entries(i, j) = omega_closed_entry(m, out.labels[i], out.labels[j]);
    return out;
  }

  const auto table = character_table(m);
  const ClassFunction cdet = conj_det(m);
  for (std::size_t i = 0; i < n; ++i) {
    const ClassFunction left = pointwise_product(table[i].values, cdet);
    for (std::size_t j = i; j < n; ++j) {
      IntPoly r = fake_degree_sum(m, pointwise_product(left, table[j].values)).shifted(out.nstar);
      out.entries(j, i) = RatFunc(r);
      out.entries(i, j) = RatFunc(std::move(r));
    }
  }
  return out;
}

}  // namespace dgreen
