#include "dgreen/int_poly.hpp"

#include "dgreen/errors.hpp"

#include <algorithm>
#include <cctype>

namespace dgreen {

namespace {

using Dense = std::vector<Integer>;

void trim(Dense& d) {
  while (!d.empty() && d.back() == 0) d.pop_back();
}

Integer integer_gcd(Integer a, Integer b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Integer t = a % b;
    a = std::move(b);
    b = std::move(t);
  }
  return a;
}

Integer dense_content(const Dense& d) {
  Integer g = 0;
  for (const auto& c : d) {
    if (c == 0) continue;
    g = integer_gcd(g, c);
    if (g == 1) break;
  }
  return g;
}

void make_primitive(Dense& d) {
  Integer g = dense_content(d);
  if (g > 1)
    for (auto& c : d) c /= g;
  if (!d.empty() && d.back() < 0)
    for (auto& c : d) c = -c;
}

// Pseudo-remainder of a by b (both nonzero, deg a >= deg b), made primitive.
Dense primitive_prem(Dense a, const Dense& b) {
  const std::size_t db = b.size() - 1;
  const Integer& lb = b.back();
  while (!a.empty() && a.size() - 1 >= db) {
    const std::size_t shift = a.size() - 1 - db;
    Integer la = a.back();
    Integer g = integer_gcd(la, lb);
    Integer fa = lb / g;
    Integer fb = la / g;
    for (auto& c : a) c *= fa;
    for (std::size_t i = 0; i <= db; ++i) a[i + shift] -= fb * b[i];
    trim(a);
  }
  make_primitive(a);
  return a;
}

}  // namespace

IntPoly::IntPoly(long long c) {
  if (c != 0) terms_.emplace_back(0, Integer(c));
}

IntPoly::IntPoly(Integer c) {
  if (c != 0) terms_.emplace_back(0, std::move(c));
}

IntPoly IntPoly::monomial(Integer c, int exp) {
  if (exp < 0) throw NotPolynomial("IntPoly::monomial: negative exponent " + std::to_string(exp));
  IntPoly p;
  if (c != 0) p.terms_.emplace_back(exp, std::move(c));
  return p;
}

IntPoly IntPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& x, const Term& y) { return x.first < y.first; });
  IntPoly p;
  for (auto& [e, c] : terms) {
    if (e < 0) throw NotPolynomial("IntPoly: negative exponent " + std::to_string(e));
    if (!p.terms_.empty() && p.terms_.back().first == e) {
      p.terms_.back().second += c;
      if (p.terms_.back().second == 0) p.terms_.pop_back();
    } else if (c != 0) {
      p.terms_.emplace_back(e, std::move(c));
    }
  }
  return p;
}

IntPoly IntPoly::from_dense(const std::vector<Integer>& coeffs) {
  IntPoly p;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i] != 0) p.terms_.emplace_back(static_cast<int>(i), coeffs[i]);
  return p;
}

bool IntPoly::is_one() const {
  return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == 1;
}

const Integer& IntPoly::leading_coeff() const {
  static const Integer zero = 0;
  return terms_.empty() ? zero : terms_.back().second;
}

Integer IntPoly::coeff(int exp) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exp,
                             [](const Term& t, int e) { return t.first < e; });
  if (it != terms_.end() && it->first == exp) return it->second;
  return 0;
}

bool IntPoly::has_nonnegative_coeffs() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.second > 0; });
}

Integer IntPoly::content() const {
  Integer g = 0;
  for (const auto& t : terms_) {
    g = integer_gcd(g, t.second);
    if (g == 1) break;
  }
  return g;
}

Integer IntPoly::eval(const Integer& x) const {
  // Horner over the sparse terms, highest exponent first.
  Integer acc = 0;
  int prev = degree();
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    for (int e = prev; e > it->first; --e) acc *= x;
    acc += it->second;
    prev = it->first;
  }
  for (int e = prev; e > 0; --e) acc *= x;
  return acc;
}

Integer IntPoly::at_one() const {
  Integer s = 0;
  for (const auto& t : terms_) s += t.second;
  return s;
}

std::vector<Integer> IntPoly::dense() const {
  std::vector<Integer> d(static_cast<std::size_t>(degree() + 1));
  for (const auto& [e, c] : terms_) d[static_cast<std::size_t>(e)] = c;
  return d;
}

IntPoly IntPoly::shifted(int k) const {
  if (k == 0 || terms_.empty()) return *this;
  if (valuation() + k < 0) throw NotDivisible("IntPoly::shifted: q^" + std::to_string(-k) + " does not divide " + to_string());
  IntPoly p = *this;
  for (auto& t : p.terms_) t.first += k;
  return p;
}

IntPoly IntPoly::scaled(const Integer& c) const {
  if (c == 0) return {};
  IntPoly p = *this;
  for (auto& t : p.terms_) t.second *= c;
  return p;
}

IntPoly IntPoly::div_scalar(const Integer& c) const {
  if (c == 0) throw DivisionByZero("IntPoly::div_scalar by zero");
  IntPoly p = *this;
  for (auto& t : p.terms_) {
    if (t.second % c != 0) throw NotDivisible("IntPoly::div_scalar: " + c.str() + " does not divide " + to_string());
    t.second /= c;
  }
  return p;
}

IntPoly IntPoly::operator-() const {
  IntPoly p = *this;
  for (auto& t : p.terms_) t.second = -t.second;
  return p;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) return *this = o;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto i = terms_.begin();
  auto j = o.terms_.begin();
  while (i != terms_.end() || j != o.terms_.end()) {
    if (j == o.terms_.end() || (i != terms_.end() && i->first < j->first)) {
      out.push_back(std::move(*i++));
    } else if (i == terms_.end() || j->first < i->first) {
      out.push_back(*j++);
    } else {
      Integer s = i->second + j->second;
      if (s != 0) out.emplace_back(i->first, std::move(s));
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) { return *this += -o; }

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_monomial()) return b.scaled(a.terms_[0].second).shifted(a.terms_[0].first);
  if (b.is_monomial()) return a.scaled(b.terms_[0].second).shifted(b.terms_[0].first);
  const int lo = a.valuation() + b.valuation();
  Dense acc(static_cast<std::size_t>(a.degree() + b.degree() - lo + 1));
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) acc[static_cast<std::size_t>(ea + eb - lo)] += ca * cb;
  IntPoly p;
  for (std::size_t i = 0; i < acc.size(); ++i)
    if (acc[i] != 0) p.terms_.emplace_back(static_cast<int>(i) + lo, std::move(acc[i]));
  return p;
}

std::string IntPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Integer mag = c < 0 ? Integer(-c) : c;
    if (c < 0)
      s += "-";
    else if (!s.empty())
      s += "+";
    if (e == 0) {
      s += mag.str();
      continue;
    }
    if (mag != 1) s += mag.str() + "*";
    s += "q";
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

IntPoly IntPoly::parse(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  auto fail = [&]() -> IntPoly { throw ParseError("cannot parse polynomial '" + text + "'"); };
  if (t.empty()) return fail();
  std::vector<Term> terms;
  std::size_t i = 0;
  while (i < t.size()) {
    bool neg = false;
    if (t[i] == '+' || t[i] == '-') {
      neg = t[i] == '-';
      ++i;
    } else if (!terms.empty()) {
      return fail();
    }
    std::size_t j = i;
    while (j < t.size() && std::isdigit(static_cast<unsigned char>(t[j]))) ++j;
    Integer c = j > i ? Integer(t.substr(i, j - i)) : Integer(1);
    const bool has_digits = j > i;
    i = j;
    int e = 0;
    if (i < t.size() && t[i] == '*') {
      if (!has_digits) return fail();
      ++i;
      if (i >= t.size() || t[i] != 'q') return fail();
    }
    if (i < t.size() && t[i] == 'q') {
      ++i;
      e = 1;
      if (i < t.size() && t[i] == '^') {
        j = ++i;
        while (j < t.size() && std::isdigit(static_cast<unsigned char>(t[j]))) ++j;
        if (j == i || j - i > 6) return fail();
        e = std::stoi(t.substr(i, j - i));
        i = j;
      }
    } else if (!has_digits) {
      return fail();
    }
    terms.emplace_back(e, neg ? Integer(-c) : c);
  }
  return from_terms(std::move(terms));
}

bool try_div_exact(const IntPoly& a, const IntPoly& b, IntPoly& quotient) {
  if (b.is_zero()) throw DivisionByZero("div_exact: division by the zero polynomial");
  if (a.is_zero()) {
    quotient = IntPoly();
    return true;
  }
  if (b.is_monomial()) {
    const auto& [eb, cb] = b.terms()[0];
    if (a.valuation() < eb) return false;
    std::vector<IntPoly::Term> t;
    t.reserve(a.term_count());
    for (const auto& [e, c] : a.terms()) {
      if (c % cb != 0) return false;
      t.emplace_back(e - eb, c / cb);
    }
    quotient = IntPoly::from_terms(std::move(t));
    return true;
  }
  if (a.degree() < b.degree() || a.valuation() < b.valuation()) return false;
  // Work on the q-stripped parts; the valuation difference is restored at the end.
  const int shift = a.valuation() - b.valuation();
  Dense r = a.shifted(-a.valuation()).dense();
  const Dense d = b.shifted(-b.valuation()).dense();
  if (r.size() < d.size()) return false;
  const std::size_t db = d.size() - 1;
  const Integer& lb = d.back();
  Dense quo(r.size() - db);
  for (std::size_t i = quo.size(); i-- > 0;) {
    const Integer& top = r[i + db];
    if (top == 0) continue;
    if (top % lb != 0) return false;
    Integer c = top / lb;
    for (std::size_t k = 0; k <= db; ++k) r[i + k] -= c * d[k];
    quo[i] = std::move(c);
  }
  for (const auto& c : r)
    if (c != 0) return false;
  quotient = IntPoly::from_dense(quo).shifted(shift);
  return true;
}

IntPoly div_exact(const IntPoly& a, const IntPoly& b) {
  IntPoly q;
  if (!try_div_exact(a, b, q))
    throw NotDivisible("(" + a.to_string() + ") is not divisible by (" + b.to_string() + ")");
  return q;
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  auto normalized = [](const IntPoly& p) { return p.leading_coeff() < 0 ? -p : p; };
  if (a.is_zero()) return normalized(b);
  if (b.is_zero()) return normalized(a);

  const int v = std::min(a.valuation(), b.valuation());
  const IntPoly sa = a.shifted(-a.valuation());
  const IntPoly sb = b.shifted(-b.valuation());
  const Integer c = integer_gcd(sa.content(), sb.content());

  IntPoly g = IntPoly::monomial(c, v);
  if (sa.degree() == 0 || sb.degree() == 0) return g;
  if (sa == sb || sa == -sb) return g * normalized(sa.div_scalar(sa.content()));

  Dense x = sa.dense();
  Dense y = sb.dense();
  make_primitive(x);
  make_primitive(y);
  if (x.size() < y.size()) std::swap(x, y);
  while (true) {
    Dense r = primitive_prem(x, y);
    if (r.empty()) break;
    if (r.size() == 1) return g;
    x = std::move(y);
    y = std::move(r);
  }
  return g * IntPoly::from_dense(y);
}

IntPoly poly_arith(const IntPoly& a, const IntPoly& b, PolyOp op) {
  switch (op) {
    case PolyOp::Add: return a + b;
    case PolyOp::Sub: return a - b;
    case PolyOp::Mul: return a * b;
  }
  return {};
}

}  // namespace dgreen
