#include "param_poly.hpp"

#include <cmath>
#include <stdexcept>

namespace phasebound::detail {
namespace {

long long checked_add(long long a, long long b) {
  long long r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("ParamPoly coefficient overflow");
  return r;
}

long long checked_mul(long long a, long long b) {
  long long r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("ParamPoly coefficient overflow");
  return r;
}

long long binomial(int n, int k) {
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

long double ipow(long double base, int n) {
  long double r = 1.0L;
  for (int i = 0; i < n; ++i) r *= base;
  return r;
}

}  // namespace

ParamPoly::ParamPoly(long long constant) {
  if (constant != 0) terms_[{0, 0, 0}] = constant;
}

ParamPoly ParamPoly::x_pow(int n) {
  if (n % 2 != 0) throw std::invalid_argument("x_pow needs an even exponent");
  ParamPoly p;
  p.terms_[{0, 0, n / 2}] = 1;
  return p;
}

ParamPoly ParamPoly::m_pow(int n) {
  if (n % 2 != 0) throw std::invalid_argument("m_pow needs an even exponent");
  ParamPoly p;
  p.terms_[{0, n / 2, 0}] = 1;
  return p;
}

ParamPoly ParamPoly::eta_pow(int n) {
  ParamPoly p;
  p.terms_[{n, 0, 0}] = 1;
  return p;
}

void ParamPoly::prune() {
  std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& rhs) {
  for (const auto& [key, c] : rhs.terms_) terms_[key] = checked_add(terms_[key], c);
  prune();
  return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& rhs) {
  for (const auto& [key, c] : rhs.terms_) terms_[key] = checked_add(terms_[key], -c);
  prune();
  return *this;
}

ParamPoly& ParamPoly::operator*=(const ParamPoly& rhs) {
  std::map<Key, long long> out;
  for (const auto& [ka, ca] : terms_) {
    for (const auto& [kb, cb] : rhs.terms_) {
      const Key k{ka[0] + kb[0], ka[1] + kb[1], ka[2] + kb[2]};
      out[k] = checked_add(out[k], checked_mul(ca, cb));
    }
  }
  terms_ = std::move(out);
  prune();
  return *this;
}

ParamPoly ParamPoly::pow(int n) const {
  ParamPoly r(1);
  for (int i = 0; i < n; ++i) r *= *this;
  return r;
}

ParamPoly ParamPoly::shifted() const {
  // u^c = (m + chi)^c = sum_l C(c, l) m^{c-l} chi^l
  ParamPoly out;
  for (const auto& [key, c] : terms_) {
    for (int l = 0; l <= key[2]; ++l) {
      const Key k{key[0], key[1] + key[2] - l, l};
      out.terms_[k] = checked_add(out.terms_[k], checked_mul(c, binomial(key[2], l)));
    }
  }
  out.prune();
  return out;
}

long double ParamPoly::eval(long double eta, long double m, long double w) const {
  long double sum = 0.0L;
  for (const auto& [key, c] : terms_) {
    sum += static_cast<long double>(c) * ipow(eta, key[0]) * ipow(m, key[1]) * ipow(w, key[2]);
  }
  return sum;
}

std::vector<long double> ParamPoly::coefficients_in_w(long double eta, long double m) const {
  int degree = 0;
  for (const auto& [key, c] : terms_) degree = std::max(degree, key[2]);
  std::vector<long double> out(static_cast<std::size_t>(degree) + 1, 0.0L);
  for (const auto& [key, c] : terms_) {
    out[static_cast<std::size_t>(key[2])] +=
        static_cast<long double>(c) * ipow(eta, key[0]) * ipow(m, key[1]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Transcriptions. X(n) = x^n, N(n) = nu^n (or mu^n), E(n) = eta^n.

namespace {

ParamPoly X(int n) { return ParamPoly::x_pow(n); }
ParamPoly N(int n) { return ParamPoly::m_pow(n); }
ParamPoly E(int n) { return ParamPoly::eta_pow(n); }
const ParamPoly one(1);

}  // namespace

const ShiftedPoly& p_nu_poly() {
  static const ShiftedPoly p(8 * X(6) - 3 * (8 * N(2) + 1) * X(4) + 4 * N(2) * (6 * N(2) - 1) * X(2) -
                             8 * N(6));
  return p;
}

const ShiftedPoly& r_poly_printed() {
  static const ShiftedPoly p = [] {
    const ParamPoly& M2 = N(2);
    ParamPoly r = 12 * X(14);
    r += X(12) * (-44 * M2 + 4 * E(1) * (E(3) + 4 * E(2) - 5 * E(1) - 18));
    r += X(10) * (40 * N(4) + 8 * (-3 * E(3) - 10 * E(2) + 6 * E(1) + 5) * E(1) * M2 -
                  E(2) * (E(1) + 2).pow(2) * (4 * E(2) + 8 * E(1) - 3));
    r += X(8) * (40 * N(6) + 4 * (15 * E(3) + 40 * E(2) + 2 * E(1) + 70) * E(1) * N(4) +
                 (20 * E(4) + 96 * E(3) + 147 * E(2) + 96 * E(1) + 52) * E(2) * M2 +
                 (E(1) + 2).pow(4) * E(4));
    r += X(6) * (-100 * N(8) - 8 * E(1) * (10 * E(3) + 20 * E(2) + 14 * E(1) + 45) * N(6) -
                 E(2) * (40 * E(4) + 144 * E(3) + 171 * E(2) + 116 * E(1) + 80) * N(4) -
                 4 * E(5) * (E(1) + 2).pow(3) * M2);
    r += X(4) * (68 * N(10) + 4 * (15 * E(3) + 20 * E(2) + 27 * E(1) + 20) * E(1) * N(8) +
                 (40 * E(4) + 96 * E(3) + 81 * E(2) + 24 * E(1) + 16) * E(2) * N(6) +
                 6 * (E(1) + 2).pow(2) * E(6) * N(4));
    r += X(2) * (-16 * N(12) - 8 * E(1) * (3 * E(3) + 2 * E(2) + 4 * E(1) - 4) * N(10) -
                 4 * E(3) * (5 * E(3) + 6 * E(2) + 3 * E(1) - 4) * N(8) -
                 4 * E(7) * (E(1) + 2) * N(6));
    r += 4 * E(4) * N(12) + 4 * E(6) * N(10) + E(8) * N(8);
    return ShiftedPoly(r);
  }();
  return p;
}

const ShiftedPoly& q1_poly() {
  static const ShiftedPoly p = [] {
    ParamPoly q = 4096 * X(24);
    q -= 2048 * (24 * N(2) - 1) * X(22);
    q += 128 * (2112 * N(4) - 128 * N(2) + 15) * X(20);
    q -= 32 * (28160 * N(6) - 1760 * N(4) - 584 * N(2) - 1) * X(18);
    q += (2027520 * N(8) - 107520 * N(6) - 117376 * N(4) + 704 * N(2) + 1) * X(16);
    q -= 16 * N(2) * (202752 * N(8) - 7680 * N(6) - 13088 * N(4) + 223 * N(2) - 1) * X(14);
    q += 16 * N(4) * (236544 * N(8) - 5376 * N(6) - 5000 * N(4) + 585 * N(2) + 6) * X(12);
    q -= 16 * N(6) * (202752 * N(8) - 2688 * N(6) + 11440 * N(4) + 935 * N(2) - 16) * X(10);
    q += 16 * N(8) * (126720 * N(8) - 1920 * N(6) + 15272 * N(4) + 823 * N(2) + 16) * X(8);
    q -= 128 * N(12) * (7040 * N(6) - 240 * N(4) + 808 * N(2) + 43) * X(6);
    q += 256 * (1056 * N(6) - 80 * N(4) + 17 * N(2) + 3) * N(14) * X(4);
    q -= 1024 * N(18) * (48 * N(4) - 7 * N(2) - 5) * X(2);
    q += 1024 * (4 * N(2) - 1) * N(22);
    return ShiftedPoly(q);
  }();
  return p;
}

const ShiftedPoly& q2_poly() {
  static const ShiftedPoly p(64 * X(2) * (X(2) - N(2)).pow(5) *
                             (8 * X(6) + (1 - 24 * N(2)) * X(4) + 4 * N(2) * (6 * N(2) + 1) * X(2) -
                              8 * N(6))
                                 .pow(2));
  return p;
}

const ShiftedPoly& q3_poly() {
  static const ShiftedPoly p = [] {
    ParamPoly q = 4096 * X(24);
    q -= 6144 * (8 * N(2) + 1) * X(22);
    q += 128 * (2112 * N(4) + 320 * N(2) - 9) * X(20);
    q -= 32 * (28160 * N(6) + 2848 * N(4) + 760 * N(2) + 27) * X(18);
    q += 3 * (675840 * N(8) - 3072 * N(6) + 46208 * N(4) + 448 * N(2) + 27) * X(16);
    q -= 16 * N(2) * (202752 * N(8) - 29184 * N(6) + 16352 * N(4) + 575 * N(2) - 27) * X(14);
    q += 16 * N(4) * (236544 * N(8) - 69888 * N(6) + 10360 * N(4) + 1657 * N(2) + 54) * X(12);
    q -= 48 * N(6) * (67584 * N(8) - 29568 * N(6) - 1904 * N(4) + 533 * N(2) - 16) * X(10);
    q += 16 * N(8) * (126720 * N(8) - 69504 * N(6) - 11480 * N(4) + 479 * N(2) + 16) * X(8);
    q -= 128 * N(12) * (7040 * N(6) - 4272 * N(4) - 632 * N(2) + 5) * X(6);
    q += 768 * N(14) * (352 * N(6) - 208 * N(4) - N(2) + 1) * X(4);
    q -= 1024 * N(18) * (48 * N(4) - 23 * N(2) + 5) * X(2);
    q += 1024 * (4 * N(2) - 1) * N(22);
    return ShiftedPoly(q);
  }();
  return p;
}

const ShiftedPoly& q4_poly() {
  static const ShiftedPoly p(64 * X(2) * (X(2) - N(2)).pow(5) *
                             (8 * X(6) - 3 * (8 * N(2) + 1) * X(4) + 4 * (6 * N(2) - 1) * N(2) * X(2) -
                              8 * N(6))
                                 .pow(2));
  return p;
}

const ShiftedPoly& q5_poly() {
  static const ShiftedPoly p = [] {
    const ParamPoly M2 = N(2);
    ParamPoly q = 16 * X(16);
    q -= 32 * X(14) * (E(2) + 2 * E(1) + 4 * M2);
    q += 8 * X(12) *
         (3 * E(4) + 12 * E(3) + E(2) * (28 * M2 + 9) + 6 * E(1) * (8 * M2 - 1) + (56 * M2 - 3) * M2);
    q -= 4 * X(10) *
         (2 * E(6) + 12 * E(5) + 12 * E(4) * (3 * M2 + 2) + 8 * E(3) * (15 * M2 + 2) +
          14 * E(2) * (12 * M2 + 5) * M2 + 12 * E(1) * (20 * M2 - 1) * M2 + (224 * M2 - 31) * N(4));
    q += X(8) * (E(8) + 8 * E(7) + 8 * E(6) * (5 * M2 + 3) + 32 * E(5) * (6 * M2 + 1) +
                 2 * E(4) * (180 * N(4) + 145 * M2 + 8) + 48 * E(3) * (20 * M2 + 3) * M2 +
                 4 * E(2) * (280 * N(4) + 99 * M2 + 6) * M2 + 8 * E(1) * (160 * M2 + 13) * N(4) +
                 20 * (56 * M2 - 13) * N(6));
    q -= M2 * X(6) *
         (4 * E(8) + 24 * E(7) + 16 * E(6) * (5 * M2 + 3) + 32 * E(5) * (9 * M2 + 1) +
          E(4) * (480 * M2 + 293) * M2 + E(3) * (960 * N(4) + 76 * M2) +
          4 * E(2) * (280 * N(4) + 56 * M2 + 9) * M2 + 120 * E(1) * (8 * N(6) + N(4)) +
          56 * (16 * M2 - 5) * N(6));
    q += N(4) * X(4) *
         (6 * E(8) + 24 * E(7) + 8 * E(6) * (10 * M2 + 3) + 192 * E(5) * M2 +
          9 * E(4) * (40 * M2 + 11) * M2 + 24 * E(3) * (20 * M2 - 1) * M2 +
          4 * E(2) * (168 * N(4) + 4 * M2 + 3) * M2 + 24 * E(1) * (16 * M2 - 1) * N(4) +
          32 * (14 * M2 - 5) * N(6));
    q -= N(6) * X(2) *
         (4 * E(8) + 8 * E(7) + 40 * E(6) * M2 + 48 * E(5) * M2 + E(4) * (144 * M2 - 1) * M2 +
          4 * E(3) * (24 * M2 - 5) * M2 + 8 * E(2) * (28 * M2 - 3) * N(4) +
          8 * E(1) * (8 * M2 - 5) * N(4) + 4 * (32 * M2 - 11) * N(6));
    q += N(8) * (E(4) + 4 * E(2) * M2 + 4 * N(4) - M2) * (E(2) + 2 * M2).pow(2);
    return ShiftedPoly(q);
  }();
  return p;
}

const ShiftedPoly& q6_poly() {
  static const ShiftedPoly p(4 * (X(2) - N(2)).pow(3) * X(2) *
                             (2 * X(4) - X(2) * ((E(1) + 2) * E(1) + 4 * N(2)) +
                              N(2) * (E(2) + 2 * N(2)))
                                 .pow(2));
  return p;
}

const ShiftedPoly& delta_poly_printed() {
  static const ShiftedPoly p = [] {
    ParamPoly d = 4032 * X(18);
    d += 16 * (1208 * N(2) + 27) * X(16);
    d -= (158656 * N(4) + 2640 * N(2) + 81) * X(14);
    d += 16 * N(2) * (20272 * N(4) + 701 * N(2) - 27) * X(12);
    d -= 16 * N(4) * (12796 * N(4) + 1415 * N(2) + 54) * X(10);
    d -= 64 * N(6) * (2338 * N(4) - 337 * N(2) + 12) * X(8);
    d += 64 * N(8) * (4543 * N(4) - 164 * N(2) - 4) * X(6);
    d -= 3584 * N(12) * (41 * N(2) - 1) * X(4);
    d += 1024 * N(14) * (17 * N(2) - 1) * X(2);
    d += 4096 * N(18);
    return ShiftedPoly(d);
  }();
  return p;
}

const ShiftedPoly& v2_numerator() {
  static const ShiftedPoly p(4 * X(6) - 12 * N(2) * X(4) + 6 * N(2) * (2 * N(2) - 1) * X(2) -
                             N(4) * (4 * N(2) - 1));
  return p;
}

const ShiftedPoly& v2_denominator() {
  static const ShiftedPoly p(4 * X(2) * (X(2) - N(2)).pow(2));
  return p;
}

}  // namespace phasebound::detail
