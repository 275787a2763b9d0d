#pragma once

// Integer-coefficient polynomials in (eta, m, u) where u = x^2 and m is the
// squared order parameter (nu^2 or mu^2). The long closed-form polynomials
// are transcribed once in this form, then re-expanded in chi = u - m with
// exact integer arithmetic. Evaluating in chi removes the cancellation that
// the printed x-form suffers when x is close to the edge of its domain.

#include <array>
#include <map>
#include <vector>

namespace phasebound::detail {

class ParamPoly {
 public:
  /// Exponents of (eta, m, u).
  using Key = std::array<int, 3>;

  ParamPoly() = default;
  explicit ParamPoly(long long constant);

  /// x^n for even n (stored as u^{n/2}).
  static ParamPoly x_pow(int n);
  /// nu^n or mu^n for even n (stored as m^{n/2}).
  static ParamPoly m_pow(int n);
  static ParamPoly eta_pow(int n);

  ParamPoly& operator+=(const ParamPoly& rhs);
  ParamPoly& operator-=(const ParamPoly& rhs);
  ParamPoly& operator*=(const ParamPoly& rhs);
  friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
  friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
  friend ParamPoly operator*(ParamPoly a, const ParamPoly& b) { return a *= b; }
  friend ParamPoly operator+(ParamPoly a, long long b) { return a += ParamPoly(b); }
  friend ParamPoly operator-(ParamPoly a, long long b) { return a -= ParamPoly(b); }
  friend ParamPoly operator+(long long a, const ParamPoly& b) { return ParamPoly(a) += b; }
  friend ParamPoly operator-(long long a, const ParamPoly& b) { return ParamPoly(a) -= b; }
  friend ParamPoly operator*(long long a, ParamPoly b) { return b *= ParamPoly(a); }
  ParamPoly operator-() const { return ParamPoly(0) - *this; }

  ParamPoly pow(int n) const;

  /// Substitutes u = m + chi; in the result the third exponent counts chi.
  ParamPoly shifted() const;

  /// Sum over terms of c * eta^a * m^b * w^c.
  long double eval(long double eta, long double m, long double w) const;

  /// Coefficients of w^0..w^deg for fixed (eta, m).
  std::vector<long double> coefficients_in_w(long double eta, long double m) const;

  const std::map<Key, long long>& terms() const { return terms_; }
  bool operator==(const ParamPoly& rhs) const { return terms_ == rhs.terms_; }

 private:
  void prune();
  std::map<Key, long long> terms_;
};

/// A polynomial stored in both forms: printed (in u) and shifted (in chi).
struct ShiftedPoly {
  ParamPoly printed;
  ParamPoly in_chi;

  explicit ShiftedPoly(ParamPoly p) : printed(std::move(p)), in_chi(printed.shifted()) {}

  /// Stable evaluation at (eta, m = param^2, chi = x^2 - m).
  long double at_chi(long double eta, long double m, long double chi) const {
    return in_chi.eval(eta, m, chi);
  }
};

// Closed-form polynomials transcribed coefficient by coefficient.
const ShiftedPoly& p_nu_poly();         // sextic whose root is x*_nu
const ShiftedPoly& r_poly_printed();    // degree-14 polynomial in x, parameters (mu, eta)
const ShiftedPoly& q1_poly();           // numerator of the theta-lower potential
const ShiftedPoly& q2_poly();           // denominator of the theta-lower potential
const ShiftedPoly& q3_poly();           // numerator of the phi-upper potential
const ShiftedPoly& q4_poly();           // denominator of the phi-upper potential
const ShiftedPoly& q5_poly();           // numerator of the psi-lower potential (mu, eta)
const ShiftedPoly& q6_poly();           // denominator of the psi-lower potential (mu, eta)
const ShiftedPoly& delta_poly_printed();  // degree-18 polynomial delta_nu
const ShiftedPoly& v2_numerator();      // theta-upper potential, numerator
const ShiftedPoly& v2_denominator();    // theta-upper potential, denominator

}  // namespace phasebound::detail
