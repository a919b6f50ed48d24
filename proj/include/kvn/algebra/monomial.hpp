#pragma once

#include <array>
#include <compare>
#include <cstdint>

namespace kvn::algebra {

inline constexpr int kMaxDof = 4;
inline constexpr int kDefaultDegreeCap = 12;

// The four families of KvN symbols. The first two are the phase-space
// coordinates phi^a, the last two their conjugates lambda_a.
enum class PhaseKind : std::uint8_t { kPosition = 0, kMomentum = 1, kLambdaQ = 2, kLambdaP = 3 };

constexpr bool is_lambda(PhaseKind k) { return k == PhaseKind::kLambdaQ || k == PhaseKind::kLambdaP; }

// q <-> lambda_q, p <-> lambda_p.
constexpr PhaseKind conjugate(PhaseKind k) {
  switch (k) {
    case PhaseKind::kPosition: return PhaseKind::kLambdaQ;
    case PhaseKind::kMomentum: return PhaseKind::kLambdaP;
    case PhaseKind::kLambdaQ: return PhaseKind::kPosition;
    case PhaseKind::kLambdaP: return PhaseKind::kMomentum;
  }
  return k;
}

struct PhaseIndex {
  PhaseKind kind;
  int dof = 0;

  static PhaseIndex q(int j = 0) { return {PhaseKind::kPosition, j}; }
  static PhaseIndex p(int j = 0) { return {PhaseKind::kMomentum, j}; }
  static PhaseIndex lq(int j = 0) { return {PhaseKind::kLambdaQ, j}; }
  static PhaseIndex lp(int j = 0) { return {PhaseKind::kLambdaP, j}; }

  friend bool operator==(const PhaseIndex&, const PhaseIndex&) = default;
};

// Normal-ordered product of KvN symbols: all phi factors to the left of all
// lambda factors, each group sorted by (kind, dof). Because phi's commute among
// themselves and so do lambda's, the exponent table alone determines the word.
class Monomial {
 public:
  using Exponents = std::array<std::uint8_t, 4 * kMaxDof>;

  Monomial() = default;

  static Monomial of(PhaseIndex idx, int power = 1);

  int exponent(PhaseIndex idx) const { return e_[slot(idx)]; }
  void set_exponent(PhaseIndex idx, int power);
  const Exponents& exponents() const { return e_; }

  int degree() const;
  int lambda_degree() const;
  bool is_identity() const { return degree() == 0; }
  // Largest dof index that carries a nonzero exponent, or -1.
  int max_dof() const;

  Monomial phi_part() const;
  Monomial lambda_part() const;

  // Exponent-wise sum. Only meaningful when the factors commute (e.g. both
  // pure phi or both pure lambda, or phi-part times lambda-part).
  friend Monomial operator*(const Monomial& a, const Monomial& b);

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

  static constexpr int slot(PhaseIndex idx) { return static_cast<int>(idx.kind) * kMaxDof + idx.dof; }

 private:
  Exponents e_{};
};

}  // namespace kvn::algebra
