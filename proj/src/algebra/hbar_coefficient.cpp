#include "kvn/algebra/hbar_coefficient.hpp"

#include <algorithm>

#include "kvn/errors.hpp"

namespace kvn::algebra {

HbarCoefficient::HbarCoefficient(ComplexRational c, int power) {
  if (power < 0) throw ContractError("negative hbar power");
  if (!c.is_zero()) terms_.emplace_back(power, std::move(c));
}

ComplexRational HbarCoefficient::at(int power) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), power,
                             [](const Term& t, int p) { return t.first < p; });
  if (it != terms_.end() && it->first == power) return it->second;
  return {};
}

void HbarCoefficient::accumulate(int power, const ComplexRational& c) {
  if (c.is_zero()) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), power,
                             [](const Term& t, int p) { return t.first < p; });
  if (it != terms_.end() && it->first == power) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  } else {
    terms_.emplace(it, power, c);
  }
}

HbarCoefficient HbarCoefficient::conj() const {
  HbarCoefficient out = *this;
  for (auto& [k, c] : out.terms_) c.im = -c.im;
  return out;
}

HbarCoefficient HbarCoefficient::component(int power) const {
  HbarCoefficient out;
  for (const auto& [k, c] : terms_)
    if (k == power) out.terms_.emplace_back(k, c);
  return out;
}

HbarCoefficient HbarCoefficient::truncated(int max_power) const {
  HbarCoefficient out;
  for (const auto& [k, c] : terms_)
    if (k <= max_power) out.terms_.emplace_back(k, c);
  return out;
}

HbarCoefficient HbarCoefficient::shifted(int delta) const {
  if (!terms_.empty() && terms_.front().first + delta < 0)
    throw ContractError("hbar shift would produce a negative power");
  HbarCoefficient out = *this;
  for (auto& t : out.terms_) t.first += delta;
  return out;
}

ComplexRational HbarCoefficient::evaluate(const Rational& hbar) const {
  ComplexRational sum;
  for (const auto& [k, c] : terms_) {
    Rational power = 1;
    for (int i = 0; i < k; ++i) power *= hbar;
    sum += c * ComplexRational(power);
  }
  return sum;
}

HbarCoefficient& HbarCoefficient::operator+=(const HbarCoefficient& o) {
  for (const auto& [k, c] : o.terms_) accumulate(k, c);
  return *this;
}

HbarCoefficient& HbarCoefficient::operator-=(const HbarCoefficient& o) {
  for (const auto& [k, c] : o.terms_) accumulate(k, -c);
  return *this;
}

HbarCoefficient& HbarCoefficient::operator*=(const ComplexRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= c;
  return *this;
}

HbarCoefficient operator*(const HbarCoefficient& a, const HbarCoefficient& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const int top = a.max_power() + b.max_power();
  std::vector<ComplexRational> dense(static_cast<size_t>(top) + 1);
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) dense[static_cast<size_t>(ka + kb)] += ca * cb;
  HbarCoefficient out;
  for (int k = 0; k <= top; ++k)
    if (!dense[k].is_zero()) out.terms_.emplace_back(k, std::move(dense[k]));
  return out;
}

HbarCoefficient operator-(const HbarCoefficient& a) {
  HbarCoefficient out = a;
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

}  // namespace kvn::algebra
