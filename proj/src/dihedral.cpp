#include "dgreen/dihedral.hpp"

#include "dgreen/errors.hpp"

#include <algorithm>
#include <cctype>

namespace dgreen {

namespace {

int mod(long long a, int m) {
  long long r = a % m;
  return static_cast<int>(r < 0 ? r + m : r);
}

void require_order(int m, int min) {
  if (m < min) throw InvalidM("I2(m) requires m >= " + std::to_string(min) + ", got " + std::to_string(m));
}

}  // namespace

GroupElement multiply(int m, GroupElement a, GroupElement b) {
  using K = GroupElement::Kind;
  if (a.kind == K::Rotation && b.kind == K::Rotation) return GroupElement::rotation(mod(a.k + b.k, m));
  if (a.kind == K::Rotation) return GroupElement::reflection(mod(a.k + b.k, m));
  if (b.kind == K::Rotation) return GroupElement::reflection(mod(a.k - b.k, m));
  return GroupElement::rotation(mod(a.k - b.k, m));
}

GroupElement inverse(int m, GroupElement g) {
  if (g.is_reflection()) return GroupElement::reflection(mod(g.k, m));
  return GroupElement::rotation(mod(-g.k, m));
}

std::size_t element_index(int m, GroupElement g) {
  return static_cast<std::size_t>(mod(g.k, m) + (g.is_reflection() ? m : 0));
}

std::vector<GroupElement> elements(int m) {
  require_order(m, 2);
  std::vector<GroupElement> out;
  out.reserve(2 * static_cast<std::size_t>(m));
  for (int k = 0; k < m; ++k) out.push_back(GroupElement::rotation(k));
  for (int k = 0; k < m; ++k) out.push_back(GroupElement::reflection(k));
  return out;
}

std::string CharLabel::to_string() const {
  switch (kind) {
    case Kind::Chi: return std::to_string(index);
    case Kind::ChiR: return "r";
    case Kind::ChiRPrime: return "r'";
    case Kind::Eps: return "eps";
  }
  return "?";
}

CharLabel CharLabel::parse(const std::string& raw, int m) {
  std::string text;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) text += c;
  CharLabel label;
  if (text == "eps" || text == "e" || text == "epsilon") {
    label = eps();
  } else if (text == "r") {
    label = chi_r();
  } else if (text == "r'") {
    label = chi_r_prime();
  } else {
    const bool primed = !text.empty() && text.back() == '\'';
    if (primed) text.pop_back();
    if (text.empty() || !std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isdigit(c); }))
      throw InvalidLabel("unrecognized character label '" + raw + "'");
    const int i = std::stoi(text);
    if (2 * i == m)
      label = primed ? chi_r_prime() : chi_r();
    else if (primed)
      throw InvalidLabel("label '" + raw + "': only m/2 may carry a prime");
    else
      label = chi(i);
  }
  if (!is_valid_label(m, label)) throw InvalidLabel("label '" + raw + "' is not a character of I2(" + std::to_string(m) + ")");
  return label;
}

std::vector<CharLabel> char_labels(int m) {
  require_order(m, 2);
  std::vector<CharLabel> out;
  for (int i = 0; 2 * i < m; ++i) out.push_back(CharLabel::chi(i));
  if (m % 2 == 0) {
    out.push_back(CharLabel::chi_r());
    out.push_back(CharLabel::chi_r_prime());
  }
  out.push_back(CharLabel::eps());
  return out;
}

bool is_valid_label(int m, CharLabel label) {
  switch (label.kind) {
    case CharLabel::Kind::Chi: return label.index >= 0 && 2 * label.index < m;
    case CharLabel::Kind::ChiR:
    case CharLabel::Kind::ChiRPrime: return label.index == 0 && m % 2 == 0;
    case CharLabel::Kind::Eps: return label.index == 0;
  }
  return false;
}

int b_invariant(int m, CharLabel label) {
  switch (label.kind) {
    case CharLabel::Kind::Chi: return label.index;
    case CharLabel::Kind::ChiR:
    case CharLabel::Kind::ChiRPrime: return m / 2;
    case CharLabel::Kind::Eps: return m;
  }
  return -1;
}

int char_degree(int /*m*/, CharLabel label) {
  return label.kind == CharLabel::Kind::Chi && label.index >= 1 ? 2 : 1;
}

int chi_index(int m, CharLabel label) {
  if (label.kind == CharLabel::Kind::Eps) throw InvalidLabel("chi_index: eps has no chi index");
  return label.kind == CharLabel::Kind::Chi ? label.index : m / 2;
}

CycloNum character_value(int field, int d, CharLabel label, GroupElement g) {
  if (field % d != 0) throw InvalidM("I2(" + std::to_string(d) + ") values need d | " + std::to_string(field));
  if (!is_valid_label(d, label))
    throw InvalidLabel(label.to_string() + " is not a character of I2(" + std::to_string(d) + ")");
  const int sign_k = (mod(g.k, d) % 2 == 0) ? 1 : -1;
  switch (label.kind) {
    case CharLabel::Kind::Chi: {
      if (label.index == 0) return CycloNum::one(field);
      if (g.is_reflection()) return CycloNum::zero(field);
      const long long e = static_cast<long long>(field / d) * label.index * mod(g.k, d);
      return CycloNum::zeta_power(field, e) + CycloNum::zeta_power(field, -e);
    }
    case CharLabel::Kind::ChiR: return CycloNum(field, sign_k);
    case CharLabel::Kind::ChiRPrime: return CycloNum(field, g.is_reflection() ? -sign_k : sign_k);
    case CharLabel::Kind::Eps: return CycloNum(field, g.is_reflection() ? -1 : 1);
  }
  return CycloNum::zero(field);
}

std::vector<IrrChar> character_table(int m) {
  const auto elts = elements(m);
  std::vector<IrrChar> out;
  for (CharLabel label : char_labels(m)) {
    IrrChar c{label, char_degree(m, label), b_invariant(m, label), {}};
    c.values.reserve(elts.size());
    for (const auto& g : elts) c.values.push_back(character_value(m, m, label, g));
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<IrrChar> irreps(int m) {
  require_order(m, 3);
  return character_table(m);
}

Rational inner_product(int m, const ClassFunction& f, const ClassFunction& h) {
  CycloNum acc = CycloNum::zero(m);
  for (std::size_t i = 0; i < f.size(); ++i) acc += f[i] * h[i].conjugate();
  return acc.rational_part() / (2 * m);
}

ClassFunction pointwise_product(const ClassFunction& f, const ClassFunction& h) {
  ClassFunction out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = f[i] * h[i];
  return out;
}

ClassFunction det_character(int m) {
  ClassFunction out;
  for (const auto& g : elements(m)) out.emplace_back(m, g.is_reflection() ? -1 : 1);
  return out;
}

std::vector<CharLabel> special_characters(int m) {
  require_order(m, 3);
  return {CharLabel::chi(0), CharLabel::chi(1), CharLabel::eps()};
}

FamilyPartition families(int m) {
  require_order(m, 3);
  FamilyPartition out{{CharLabel::chi(0)}, {CharLabel::eps()}, {}};
  for (CharLabel l : char_labels(m))
    if (l != CharLabel::chi(0) && l != CharLabel::eps()) out[2].push_back(l);
  return out;
}

ReflSubgroup reflection_subgroup(int m, int d, bool primed) {
  if (d < 2 || m % d != 0)
    throw BadSubgroup("no rank-2 reflection subgroup I2(" + std::to_string(d) + ") in I2(" + std::to_string(m) + ")");
  const int step = m / d;
  if (primed && step % 2 != 0)
    throw BadSubgroup("I2'(" + std::to_string(d) + ") needs m/d even (m=" + std::to_string(m) + ")");
  const int a = primed ? 1 : 0;
  return {d, primed, {GroupElement::reflection(a), GroupElement::reflection(mod(a + step, m))}};
}

std::vector<GroupElement> generated_subgroup(int m, const ReflSubgroup& h) {
  std::vector<GroupElement> out{GroupElement::rotation(0)};
  std::vector<bool> seen(2 * static_cast<std::size_t>(m), false);
  seen[element_index(m, out[0])] = true;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (const auto& gen : h.generators) {
      GroupElement p = multiply(m, out[i], gen);
      if (!seen[element_index(m, p)]) {
        seen[element_index(m, p)] = true;
        out.push_back(p);
      }
    }
  return out;
}

ClassFunction induce_character(int m, const ReflSubgroup& h, CharLabel phi) {
  require_order(m, 2);
  const int d = h.d;
  if (d < 2 || !h.generators[0].is_reflection() || !h.generators[1].is_reflection())
    throw BadSubgroup("subgroup generators must be two reflections with d >= 2");
  const auto sub = generated_subgroup(m, h);
  if (sub.size() != 2 * static_cast<std::size_t>(d))
    throw BadSubgroup("generators s_" + std::to_string(h.generators[0].k) + ", s_" + std::to_string(h.generators[1].k) +
                      " generate a group of order " + std::to_string(sub.size()) + ", not 2d = " + std::to_string(2 * d));
  if (!is_valid_label(d, phi))
    throw InvalidLabel(phi.to_string() + " is not a character of I2(" + std::to_string(d) + ")");

  // s^(d)_k -> s_(a + k*delta), rho_d^k -> rho^(k*delta)
  const int a = h.generators[0].k;
  const int delta = h.generators[1].k - a;
  std::vector<CycloNum> on_g(2 * static_cast<std::size_t>(m), CycloNum::zero(m));
  std::vector<bool> hit(on_g.size(), false);
  for (const auto& x : elements(d)) {
    GroupElement image = x.is_reflection() ? GroupElement::reflection(mod(a + static_cast<long long>(x.k) * delta, m))
                                           : GroupElement::rotation(mod(static_cast<long long>(x.k) * delta, m));
    const std::size_t idx = element_index(m, image);
    if (hit[idx]) throw BadSubgroup("generators do not give an isomorphism with I2(" + std::to_string(d) + ")");
    hit[idx] = true;
    on_g[idx] = character_value(m, d, phi, x);
  }

  const auto elts = elements(m);
  ClassFunction out;
  out.reserve(elts.size());
  const Rational scale(1, 2 * d);
  for (const auto& g : elts) {
    CycloNum acc = CycloNum::zero(m);
    for (const auto& x : elts) acc += on_g[element_index(m, multiply(m, multiply(m, inverse(m, x), g), x))];
    out.push_back(acc * scale);
  }
  return out;
}

CharLabel truncated_induction(int m, const ReflSubgroup& h, CharLabel phi) {
  const ClassFunction induced = induce_character(m, h, phi);
  const int target_b = b_invariant(h.d, phi);
  std::vector<CharLabel> hits;
  for (const auto& chi : character_table(m))
    if (chi.b == target_b && inner_product(m, induced, chi.values) != 0) hits.push_back(chi.label);
  if (hits.size() != 1)
    throw NotUnique("truncated induction of " + phi.to_string() + " from I2" + std::string(h.primed ? "'" : "") + "(" +
                    std::to_string(h.d) + ") to I2(" + std::to_string(m) + ") has " + std::to_string(hits.size()) +
                    " constituents with b = " + std::to_string(target_b));
  return hits[0];
}

}  // namespace dgreen
