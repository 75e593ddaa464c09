#include "qsr/localized_rational.hpp"

#include "qsr/error.hpp"

namespace qsr {
namespace {

bool coprime_to_6(const mpz_class& n) {
  return mpz_divisible_ui_p(n.get_mpz_t(), 2) == 0 && mpz_divisible_ui_p(n.get_mpz_t(), 3) == 0;
}

}  // namespace

LocalizedRational LocalizedRational::make(const mpz_class& s, const mpz_class& t) {
  if (t == 0) throw Error(Errc::ZeroDenominator, s.get_str() + "/0");
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t());
  mpz_class num = s / g;
  mpz_class den = t / g;
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num == 0) den = 1;
  if (!coprime_to_6(den)) {
    throw Error(Errc::DenominatorNotCoprimeTo6,
                s.get_str() + "/" + t.get_str() + " reduces to denominator " + den.get_str());
  }
  return LocalizedRational(std::move(num), std::move(den));
}

LocalizedRational operator+(const LocalizedRational& a, const LocalizedRational& b) {
  return LocalizedRational::make(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

LocalizedRational operator-(const LocalizedRational& a, const LocalizedRational& b) {
  return a + (-b);
}

LocalizedRational operator*(const LocalizedRational& a, const LocalizedRational& b) {
  return LocalizedRational::make(a.num_ * b.num_, a.den_ * b.den_);
}

LocalizedRational operator-(const LocalizedRational& a) {
  return LocalizedRational(-a.num_, a.den_);
}

std::string LocalizedRational::str() const { return num_.get_str() + "/" + den_.get_str(); }

unsigned valuation(const mpz_class& n, unsigned long p) {
  if (n == 0) return 0;
  mpz_class m = abs(n);
  unsigned v = 0;
  while (mpz_divisible_ui_p(m.get_mpz_t(), p) != 0) {
    mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
    ++v;
  }
  return v;
}

bool lr_is_unit(const LR& a) { return !a.is_zero() && coprime_to_6(a.num()); }

LR lr_inverse(const LR& a) {
  if (!lr_is_unit(a)) throw Error(Errc::NotAUnit, a.str() + " is not a unit");
  return LR::make(a.den(), a.num());
}

bool lr_in_ideal(const LR& a, LocalIdealSpec spec) {
  if (a.is_zero()) return true;
  return valuation(a.num(), 2) >= spec.j && valuation(a.num(), 3) >= spec.k;
}

bool lr_is_rqr(const LR& a) { return lr_is_unit(LR::integer(1) - a); }

LR lr_rqr_witness(const LR& a) { return -(a * lr_inverse(LR::integer(1) - a)); }

bool jq_member(const LR& a) { return lr_in_ideal(a, kSix); }

bool jr0_member(const LR& a) { return lr_in_ideal(a, kR0) && jq_member(a); }

std::pair<LR, LR> decompose_witness(const LR& a) {
  if (!lr_in_ideal(a, kR0)) throw Error(Errc::NotInR0, a.str() + " is not in (2)");
  return {LR::integer(3) * a, LR::integer(2) * a};
}

long non_rqr_counterexample(const LR& a) {
  if (jq_member(a)) throw Error(Errc::InRadical, a.str() + " lies in J(Q) = (6)");
  const mpz_class& s = a.num();
  const mpz_class& t = a.den();
  const unsigned long modulus = mpz_divisible_ui_p(s.get_mpz_t(), 3) == 0 ? 3 : 2;
  for (long b = 0; b < static_cast<long>(modulus); ++b) {
    const mpz_class diff = s * b - t;
    if (mpz_divisible_ui_p(diff.get_mpz_t(), modulus) == 0) continue;
    if (lr_is_rqr(a * LR::integer(b))) {
      throw Error(Errc::TheoremViolation,
                  "b = " + std::to_string(b) + " leaves a*b quasi-regular for a = " + a.str());
    }
    return b;
  }
  throw Error(Errc::TheoremViolation, "no residue b solves s*b = t for a = " + a.str());
}

}  // namespace qsr
