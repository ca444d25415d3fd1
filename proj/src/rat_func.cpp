#include "dgreen/rat_func.hpp"

#include "dgreen/errors.hpp"

namespace dgreen {

namespace {

IntPoly reversed(const IntPoly& p) {
  std::vector<IntPoly::Term> t;
  t.reserve(p.term_count());
  const int d = p.degree();
  for (const auto& [e, c] : p.terms()) t.emplace_back(d - e, c);
  return IntPoly::from_terms(std::move(t));
}

}  // namespace

RatFunc RatFunc::make(IntPoly num, IntPoly den) {
  RatFunc r(std::move(num), std::move(den), true);
  r.normalize();
  return r;
}

RatFunc ratfunc_normalize(IntPoly num, IntPoly den) { return RatFunc::make(std::move(num), std::move(den)); }

RatFunc RatFunc::q_power(int k) {
  if (k >= 0) return RatFunc(IntPoly::q_power(k));
  return RatFunc(IntPoly(1), IntPoly::q_power(-k), true);
}

void RatFunc::normalize() {
  if (den_.is_zero()) throw ZeroDenominator("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = IntPoly(1);
    return;
  }
  if (!den_.is_one()) {
    IntPoly g = gcd(num_, den_);
    if (!g.is_one()) {
      num_ = div_exact(num_, g);
      den_ = div_exact(den_, g);
    }
  }
  if (den_.leading_coeff() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

const IntPoly& RatFunc::as_poly() const {
  if (!is_polynomial()) throw NotPolynomial("not a polynomial: " + to_string());
  return num_;
}

RatFunc RatFunc::times_q_power(int k) const {
  if (k == 0 || is_zero()) return *this;
  if (k > 0) {
    const int cancel = std::min(k, den_.valuation());
    return RatFunc(num_.shifted(k - cancel), den_.shifted(-cancel), true);
  }
  const int cancel = std::min(-k, num_.valuation());
  return RatFunc(num_.shifted(-cancel), den_.shifted(-k - cancel), true);
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero rational function");
  RatFunc r(den_, num_, true);
  if (r.den_.leading_coeff() < 0) {
    r.num_ = -r.num_;
    r.den_ = -r.den_;
  }
  return r;
}

RatFunc RatFunc::substitute_inverse(int shift) const {
  if (is_zero()) return *this;
  RatFunc r = make(reversed(num_), reversed(den_));
  return r.times_q_power(shift + den_.degree() - num_.degree());
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_, true); }

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    normalize();
    return *this;
  }
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = RatFunc();
  if (is_polynomial() && o.is_polynomial()) {
    num_ = num_ * o.num_;
    return *this;
  }
  // Cross-cancel so that the product of reduced fractions stays reduced.
  IntPoly g1 = gcd(num_, o.den_);
  IntPoly g2 = gcd(o.num_, den_);
  IntPoly n = div_exact(num_, g1) * div_exact(o.num_, g2);
  IntPoly d = div_exact(den_, g2) * div_exact(o.den_, g1);
  num_ = std::move(n);
  den_ = std::move(d);
  if (den_.leading_coeff() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
  if (o.is_zero()) throw DivisionByZero("division by zero rational function");
  return *this *= o.inverse();
}

std::string RatFunc::to_string() const {
  if (is_polynomial()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

RatFunc RatFunc::parse(const std::string& text) {
  const auto slash = text.find(")/(");
  if (slash == std::string::npos) return RatFunc(IntPoly::parse(text));
  const auto open = text.find('('), close = text.rfind(')');
  if (open != 0 || close != text.size() - 1 || close < slash + 2)
    throw ParseError("cannot parse rational function '" + text + "'");
  return make(IntPoly::parse(text.substr(open + 1, slash - open - 1)),
              IntPoly::parse(text.substr(slash + 3, close - slash - 3)));
}

}  // namespace dgreen
