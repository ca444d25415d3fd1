#include "dgreen/cyclo.hpp"

#include "dgreen/errors.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace dgreen {

namespace {

using RPoly = std::vector<Rational>;  // dense, little-endian

void trim(RPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

struct Field {
  int m = 0;
  IntPoly phi;
  std::size_t degree = 0;
  // x^k mod Phi_m for 0 <= k < m, as integer coordinate vectors.
  std::vector<std::vector<Integer>> powers;
};

const Field& field(int m) {
  static std::recursive_mutex mu;
  static std::map<int, std::unique_ptr<Field>> cache;
  if (m < 1) throw InvalidM("cyclotomic field of order " + std::to_string(m));
  std::lock_guard lock(mu);
  auto& slot = cache[m];
  if (slot) return *slot;

  auto f = std::make_unique<Field>();
  f->m = m;
  f->phi = IntPoly::from_terms({{m, 1}, {0, -1}});
  for (int d = 1; d < m; ++d)
    if (m % d == 0) f->phi = div_exact(f->phi, field(d).phi);
  f->degree = static_cast<std::size_t>(f->phi.degree());
  const std::vector<Integer> phi = f->phi.dense();  // monic
  std::vector<Integer> cur(f->degree);
  cur[0] = 1;
  for (int k = 0; k < m; ++k) {
    f->powers.push_back(cur);
    // multiply by x and reduce with x^deg = -(phi - x^deg)
    Integer top = cur.back();
    for (std::size_t i = cur.size() - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (top != 0)
      for (std::size_t i = 0; i < f->degree; ++i) cur[i] -= top * phi[i];
  }
  slot = std::move(f);
  return *slot;
}

// (quotient, remainder) of a / b in Q[x], b nonzero.
std::pair<RPoly, RPoly> divmod(RPoly a, const RPoly& b) {
  trim(a);
  if (a.size() < b.size()) return {RPoly{}, a};
  RPoly quo(a.size() - b.size() + 1);
  for (std::size_t i = quo.size(); i-- > 0;) {
    Rational c = a[i + b.size() - 1] / b.back();
    if (c == 0) continue;
    for (std::size_t k = 0; k < b.size(); ++k) a[i + k] -= c * b[k];
    quo[i] = c;
  }
  trim(a);
  trim(quo);
  return {quo, a};
}

RPoly sub_mul(const RPoly& a, const RPoly& q, const RPoly& b) {
  RPoly out(std::max(a.size(), q.empty() || b.empty() ? 0 : q.size() + b.size() - 1));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < q.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] -= q[i] * b[j];
  trim(out);
  return out;
}

}  // namespace

const IntPoly& cyclotomic_polynomial(int m) { return field(m).phi; }

int euler_phi(int m) { return static_cast<int>(field(m).degree); }

CycloNum::CycloNum(int m, Rational value) : m_(m), coords_(field(m).degree) {
  coords_[0] = std::move(value);
}

CycloNum CycloNum::zeta_power(int m, long long k) {
  const Field& f = field(m);
  long long e = k % m;
  if (e < 0) e += m;
  CycloNum z(m, 0);
  const auto& p = f.powers[static_cast<std::size_t>(e)];
  for (std::size_t i = 0; i < p.size(); ++i) z.coords_[i] = Rational(p[i]);
  return z;
}

bool CycloNum::is_zero() const {
  for (const auto& c : coords_)
    if (c != 0) return false;
  return true;
}

bool CycloNum::is_rational() const {
  for (std::size_t i = 1; i < coords_.size(); ++i)
    if (coords_[i] != 0) return false;
  return true;
}

Rational CycloNum::rational_part() const {
  if (!is_rational()) throw NotRational("cyclotomic number is not rational: " + to_string());
  return coords_.empty() ? Rational(0) : coords_[0];
}

CycloNum CycloNum::conjugate() const {
  CycloNum out(m_, 0);
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i] == 0) continue;
    out += zeta_power(m_, -static_cast<long long>(i)) * coords_[i];
  }
  return out;
}

CycloNum CycloNum::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero in Q(zeta_" + std::to_string(m_) + ")");
  const Field& f = field(m_);
  RPoly r0;
  for (const auto& c : f.phi.dense()) r0.emplace_back(c);
  RPoly r1 = coords_;
  trim(r1);
  RPoly s0;
  RPoly s1{Rational(1)};
  while (r1.size() > 1) {
    auto [quo, rem] = divmod(r0, r1);
    RPoly s2 = sub_mul(s0, quo, s1);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r1.empty()) throw DivisionByZero("element is not invertible in Q(zeta_" + std::to_string(m_) + ")");
  // s1 * a = r1[0] (mod Phi)
  RPoly phi;
  for (const auto& c : f.phi.dense()) phi.emplace_back(c);
  const RPoly rem = divmod(s1, phi).second;
  CycloNum out(m_, 0);
  for (std::size_t i = 0; i < rem.size(); ++i) out.coords_[i] = rem[i] / r1[0];
  return out;
}

void CycloNum::check_same_field(const CycloNum& o) const {
  if (m_ != o.m_)
    throw InvalidM("mixing Q(zeta_" + std::to_string(m_) + ") and Q(zeta_" + std::to_string(o.m_) + ")");
}

CycloNum CycloNum::operator-() const {
  CycloNum out = *this;
  for (auto& c : out.coords_) c = -c;
  return out;
}

CycloNum& CycloNum::operator+=(const CycloNum& o) {
  check_same_field(o);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

CycloNum& CycloNum::operator-=(const CycloNum& o) {
  check_same_field(o);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

CycloNum& CycloNum::operator*=(const Rational& c) {
  for (auto& x : coords_) x *= c;
  return *this;
}

CycloNum& CycloNum::operator*=(const CycloNum& o) {
  check_same_field(o);
  const Field& f = field(m_);
  const std::size_t n = coords_.size();
  RPoly acc(2 * n - 1);
  bool any = false;
  for (std::size_t i = 0; i < n; ++i) {
    if (coords_[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (o.coords_[j] == 0) continue;
      acc[i + j] += coords_[i] * o.coords_[j];
      any = true;
    }
  }
  for (auto& c : coords_) c = 0;
  if (!any) return *this;
  for (std::size_t k = 0; k < acc.size(); ++k) {
    if (acc[k] == 0) continue;
    if (k < n) {
      coords_[k] += acc[k];
      continue;
    }
    const auto& p = f.powers[k % static_cast<std::size_t>(m_)];
    for (std::size_t i = 0; i < n; ++i)
      if (p[i] != 0) coords_[i] += acc[k] * p[i];
  }
  return *this;
}

std::string CycloNum::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i] == 0) continue;
    if (!s.empty()) s += " + ";
    s += "(" + coords_[i].str() + ")";
    if (i > 0) s += "*z^" + std::to_string(i);
  }
  return s.empty() ? "0" : s;
}

CycloNum cyclo_arith(const CycloNum& a, const CycloNum& b, CycloOp op) {
  switch (op) {
    case CycloOp::Add: return a + b;
    case CycloOp::Mul: return a * b;
    case CycloOp::Inv: return a.inverse();
  }
  return a;
}

Rational cyclo_rational_part(const CycloNum& a) { return a.rational_part(); }

}  // namespace dgreen
