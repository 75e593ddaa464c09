#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>

namespace qsr {

/// An element s/t of the ring Q of rationals whose reduced denominator is
/// coprime to 6. Always stored reduced, with t > 0; zero is 0/1.
///
/// Arithmetic is exact (GMP integers). Products and sums of such fractions
/// again have denominators coprime to 6, so Q is closed under +, -, *.
class LocalizedRational {
 public:
  /// Zero.
  LocalizedRational() : num_(0), den_(1) {}

  /// Normalises s/t. Throws ZeroDenominator or DenominatorNotCoprimeTo6.
  static LocalizedRational make(const mpz_class& s, const mpz_class& t);
  static LocalizedRational integer(long s) { return make(s, 1); }

  const mpz_class& num() const noexcept { return num_; }
  const mpz_class& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_ == 0; }

  friend LocalizedRational operator+(const LocalizedRational& a, const LocalizedRational& b);
  friend LocalizedRational operator-(const LocalizedRational& a, const LocalizedRational& b);
  friend LocalizedRational operator*(const LocalizedRational& a, const LocalizedRational& b);
  friend LocalizedRational operator-(const LocalizedRational& a);

  friend bool operator==(const LocalizedRational& a, const LocalizedRational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const LocalizedRational& a) {
    return os << a.str();
  }

 private:
  LocalizedRational(mpz_class num, mpz_class den) : num_(std::move(num)), den_(std::move(den)) {}

  mpz_class num_;
  mpz_class den_;
};

using LR = LocalizedRational;

inline LR lr_make(const mpz_class& s, const mpz_class& t) { return LR::make(s, t); }
inline LR lr_add(const LR& a, const LR& b) { return a + b; }
inline LR lr_mul(const LR& a, const LR& b) { return a * b; }
inline LR lr_neg(const LR& a) { return -a; }

/// Exponent of p in |n|; 0 for n = 0 by convention (callers test zero first).
unsigned valuation(const mpz_class& n, unsigned long p);

/// The ideal (2^j 3^k) of Q. (1,0) is R0 = (2), (1,1) is (6), (2,0) is (4).
struct LocalIdealSpec {
  unsigned j = 0;
  unsigned k = 0;
};

inline constexpr LocalIdealSpec kR0{1, 0};
inline constexpr LocalIdealSpec kSix{1, 1};
inline constexpr LocalIdealSpec kFour{2, 0};

/// Units of Q: nonzero with numerator coprime to 6.
bool lr_is_unit(const LR& a);

/// Inverse of a unit, t/s. Throws NotAUnit.
LR lr_inverse(const LR& a);

/// Membership in (2^j 3^k), decided by 2- and 3-adic valuations of the
/// reduced numerator (denominators are units at 2 and 3).
bool lr_in_ideal(const LR& a, LocalIdealSpec spec);

/// Right quasi-regularity in Q: 1 - a is a unit. For a in R0 the solution
/// x = -a (1 - a)^{-1} of a x = a + x again lies in R0, so the same test
/// decides quasi-regularity inside the non-unital ring R0.
bool lr_is_rqr(const LR& a);

/// The x with a x = a + x, namely -a (1 - a)^{-1}. Throws NotAUnit when
/// a is not right quasi-regular.
LR lr_rqr_witness(const LR& a);

/// a in J(Q) = (6).
bool jq_member(const LR& a);

/// a in J(R0) = R0 intersected with J(Q). Always equal to membership in (6).
bool jr0_member(const LR& a);

/// For a in R0, returns (u, v) = (3a, 2a) with u in (6), v in (4) and
/// a = u - v. Throws NotInR0.
std::pair<LR, LR> decompose_witness(const LR& a);

/// For a = s/t outside J(Q), the smallest integer b >= 0 with s b = t
/// (mod 3) when 3 does not divide s, otherwise with s b = t (mod 2); then
/// 1 - a b is not a unit. The non-quasi-regularity of a b is verified before
/// returning. Throws InRadical when a is in J(Q).
long non_rqr_counterexample(const LR& a);

}  // namespace qsr
