#include "dgreen/green_solver.hpp"

#include "dgreen/errors.hpp"

#include <algorithm>
#include <set>

namespace dgreen {

void LSDatum::validate() const {
  if (m < 3) throw InvalidDatum("datum: m >= 3 required, got " + std::to_string(m));
  if (classes.empty()) throw InvalidDatum("datum: no classes");
  if (a.size() != classes.size())
    throw InvalidDatum("datum: " + std::to_string(classes.size()) + " classes but " + std::to_string(a.size()) +
                       " a-values");
  std::set<CharLabel> seen;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (classes[c].empty()) throw InvalidDatum("datum: class " + std::to_string(c) + " is empty");
    for (CharLabel l : classes[c]) {
      if (!is_valid_label(m, l))
        throw InvalidDatum("datum: " + l.to_string() + " is not a character of I2(" + std::to_string(m) + ")");
      if (!seen.insert(l).second) throw InvalidDatum("datum: " + l.to_string() + " appears twice");
    }
    if (a[c] < 0) throw InvalidDatum("datum: negative a-value for class " + std::to_string(c));
    if (c > 0 && a[c] > a[c - 1])
      throw InvalidDatum("datum: a is not order-reversing at class " + std::to_string(c) + " (a=" +
                         std::to_string(a[c]) + " > " + std::to_string(a[c - 1]) + ")");
  }
  for (CharLabel l : char_labels(m))
    if (!seen.count(l)) throw InvalidDatum("datum: " + l.to_string() + " is in no class");
}

LSDatum LSDatum::canonical() const {
  LSDatum out = *this;
  for (auto& c : out.classes) std::sort(c.begin(), c.end());
  return out;
}

std::size_t LSDatum::class_of(CharLabel label) const {
  for (std::size_t c = 0; c < classes.size(); ++c)
    if (std::find(classes[c].begin(), classes[c].end(), label) != classes[c].end()) return c;
  throw InvalidLabel(label.to_string() + " is in no class of the datum");
}

std::string LSDatum::to_string() const {
  std::string s = "I2(" + std::to_string(m) + "):";
  for (std::size_t c = 0; c < classes.size(); ++c) {
    s += " {";
    for (std::size_t i = 0; i < classes[c].size(); ++i) s += (i ? "," : "") + classes[c][i].to_string();
    s += "}a=" + std::to_string(a[c]);
  }
  return s;
}

std::size_t GreenSystem::index_of(CharLabel label) const {
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) throw InvalidLabel(label.to_string() + " is not a row of the system");
  return static_cast<std::size_t>(it - labels.begin());
}

PolyMatrix GreenSystem::lambda_block(std::size_t class_index) const {
  std::vector<std::size_t> idx;
  for (CharLabel l : datum.classes[class_index]) idx.push_back(index_of(l));
  return Lambda.select(idx, idx);
}

IntPoly gamma_poly(int m) { return IntPoly::from_terms({{m, 1}, {0, -1}}); }

namespace {

std::string class_name(const LSDatum& d, std::size_t c) {
  std::string s = "class " + std::to_string(c) + " {";
  for (std::size_t i = 0; i < d.classes[c].size(); ++i) s += (i ? "," : "") + d.classes[c][i].to_string();
  return s + "}";
}

}  // namespace

GreenSystem solve(const OmegaMatrix& omega, const LSDatum& input, const SolveOptions& options) {
  input.validate();
  if (omega.m != input.m)
    throw InvalidDatum("datum is for m=" + std::to_string(input.m) + " but Omega for m=" + std::to_string(omega.m));

  GreenSystem sys;
  sys.datum = input.canonical();
  sys.labels = omega.labels;
  const std::size_t n = sys.labels.size();
  const LSDatum& d = sys.datum;
  const RatFunc gamma(gamma_poly(d.m));
  const RatFunc gamma_inv = gamma.inverse();

  sys.P = PolyMatrix(n, n);
  sys.Lambda = PolyMatrix(n, n);
  // residual = Omega minus the contributions of the classes solved so far
  PolyMatrix residual = omega.entries;
  std::vector<bool> done(n, false);

  for (std::size_t c = 0; c < d.classes.size(); ++c) {
    const int a = d.a[c];
    std::vector<std::size_t> cls;
    for (CharLabel l : d.classes[c]) cls.push_back(sys.index_of(l));
    for (std::size_t i : cls) done[i] = true;
    std::vector<std::size_t> upper;
    for (std::size_t i = 0; i < n; ++i)
      if (!done[i]) upper.push_back(i);

    const PolyMatrix r_cc = residual.select(cls, cls);
    PolyMatrix y = r_cc;
    for (std::size_t i = 0; i < y.rows(); ++i)
      for (std::size_t j = 0; j < y.cols(); ++j) y(i, j) *= gamma_inv;
    sys.y_polynomial.push_back(y.all_polynomial());
    sys.Y.push_back(std::move(y));

    const PolyMatrix lambda = r_cc.times_q_power(-2 * a);
    for (std::size_t i = 0; i < cls.size(); ++i) {
      sys.P(cls[i], cls[i]) = RatFunc::q_power(a);
      for (std::size_t j = 0; j < cls.size(); ++j) sys.Lambda(cls[i], cls[j]) = lambda(i, j);
    }
    if (upper.empty()) continue;

    // P_{U,C} R_CC = q^a R_{U,C}
    const PolyMatrix r_uc = residual.select(upper, cls);
    PolyMatrix x;
    try {
      x = matrix_solve(r_cc, r_uc.times_q_power(a));
    } catch (const SingularBlock&) {
      throw SingularBlock("solve: Lambda block of " + class_name(d, c) + " is singular for datum " + d.to_string());
    }
    if (options.cross_check) {
      const PolyMatrix via_inverse = r_uc.times_q_power(-a) * matrix_inverse(lambda);
      if (via_inverse != x)
        throw std::logic_error("solve: P block of " + class_name(d, c) + " differs between the two solution paths");
    }
    for (std::size_t i = 0; i < upper.size(); ++i)
      for (std::size_t j = 0; j < cls.size(); ++j) sys.P(upper[i], cls[j]) = x(i, j);

    const PolyMatrix contribution = x * lambda * x.transposed();
    for (std::size_t i = 0; i < upper.size(); ++i)
      for (std::size_t j = 0; j < upper.size(); ++j)
        if (!contribution(i, j).is_zero()) residual(upper[i], upper[j]) -= contribution(i, j);
  }

  if (sys.P * sys.Lambda * sys.P.transposed() != omega.entries)
    throw std::logic_error("solve: P Lambda P^t != Omega for datum " + d.to_string());
  return sys;
}

PolyMatrix y_block(const OmegaMatrix& omega, const GreenSystem& sys, std::size_t class_index,
                   const std::vector<CharLabel>& rows, bool require_polynomial) {
  const LSDatum& d = sys.datum;
  if (class_index >= d.classes.size()) throw std::out_of_range("y_block: class index out of range");
  for (CharLabel l : rows)
    if (d.class_of(l) < class_index)
      throw std::invalid_argument("y_block: " + l.to_string() + " lies below " + class_name(d, class_index));

  const RatFunc gamma_inv = RatFunc(gamma_poly(d.m)).inverse();
  PolyMatrix y(rows.size(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows.size(); ++j) {
      RatFunc acc = omega.at(rows[i], rows[j]);
      for (std::size_t c = 0; c < class_index; ++c)
        for (CharLabel u : d.classes[c])
          for (CharLabel v : d.classes[c]) {
            const RatFunc& pu = sys.p(rows[i], u);
            const RatFunc& pv = sys.p(rows[j], v);
            const RatFunc& l = sys.lambda(u, v);
            if (!pu.is_zero() && !pv.is_zero() && !l.is_zero()) acc -= pu * l * pv;
          }
      y(i, j) = acc * gamma_inv;
      if (require_polynomial && !y(i, j).is_polynomial())
        throw NotPolynomial("Y^C entry (" + rows[i].to_string() + ", " + rows[j].to_string() + ") for " +
                            class_name(d, class_index) + " is " + y(i, j).to_string());
    }
  return y;
}

std::vector<std::pair<std::size_t, std::size_t>> ClosureOrder::hasse() const {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  const std::size_t n = size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !below[i][j]) continue;
      bool covered = true;
      for (std::size_t k = 0; k < n && covered; ++k)
        if (k != i && k != j && below[i][k] && below[k][j]) covered = false;
      if (covered) edges.emplace_back(i, j);
    }
  return edges;
}

bool ClosureOrder::compatible_with_list_order() const {
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (below[i][j]) return false;
  return true;
}

ClosureOrder closure_order(const GreenSystem& sys) {
  const LSDatum& d = sys.datum;
  const std::size_t k = d.classes.size();
  ClosureOrder out;
  out.below.assign(k, std::vector<bool>(k, false));
  for (std::size_t c = 0; c < k; ++c) out.below[c][c] = true;
  for (std::size_t c = 0; c < k; ++c)
    for (CharLabel chi : d.classes[c])
      for (std::size_t c2 = 0; c2 < k; ++c2)
        for (CharLabel chi2 : d.classes[c2])
          if (!sys.p(chi, chi2).is_zero()) out.below[c2][c] = true;
  for (std::size_t via = 0; via < k; ++via)
    for (std::size_t i = 0; i < k; ++i)
      if (out.below[i][via])
        for (std::size_t j = 0; j < k; ++j)
          if (out.below[via][j]) out.below[i][j] = true;
  return out;
}

}  // namespace dgreen
