#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "positroid/errors.hpp"
#include "positroid/rational.hpp"

namespace positroid {

// polynomial in (lambda, mu) with exact coefficients
class BiPoly {
 public:
  using Key = std::pair<int, int>;  // (deg lambda, deg mu)

  BiPoly() = default;

  static BiPoly constant(const Rational& c);
  static BiPoly lambda();
  static BiPoly mu();
  // cl * lambda + cm * mu + c0
  static BiPoly line(const Rational& cl, const Rational& cm, const Rational& c0);

  const std::map<Key, Rational>& terms() const { return c_; }
  bool zero() const { return c_.empty(); }
  int deg_lambda() const;
  int deg_mu() const;
  int total_degree() const;

  BiPoly& add_term(int dl, int dm, const Rational& c);

  BiPoly operator+(const BiPoly& o) const;
  BiPoly operator-(const BiPoly& o) const;
  BiPoly operator*(const BiPoly& o) const;
  BiPoly scaled(const Rational& c) const;

  Rational eval(const Rational& lam, const Rational& mu) const;

  template <class Real>
  Real eval_real(const Real& lam, const Real& mu) const {
    Real s(0);
    for (const auto& [key, coef] : c_) {
      Real t = coef.template to<Real>();
      for (int a = 0; a < key.first; ++a) t *= lam;
      for (int a = 0; a < key.second; ++a) t *= mu;
      s += t;
    }
    return s;
  }

  std::string to_string() const;  // deterministic, graded lexicographic

 private:
  std::map<Key, Rational> c_;
};

// five-line plane model of the reduced spectral curve for the small totally
// positive 2 x 4 case
struct Gr24Lines {
  std::vector<Rational> kappa;
  Rational c13;
  BiPoly gamma0;    // mu
  BiPoly gamma13;   // mu - c13 (lambda - kappa1)
  BiPoly gamma23;   // mu - lambda + kappa3
  BiPoly sigma23;   // lambda - kappa2
  BiPoly sigma24;   // lambda - kappa4
  BiPoly pi0;       // product of the five factors
  Rational lambda5, mu5;  // intersection of gamma13 and gamma23
};

// throws Error when kappa2 + kappa4 = 2 kappa3 (the slope formula degenerates)
// or when c13 = 1 (the two lines turn parallel and alpha5 escapes to infinity)
Gr24Lines gr24_lines(const std::vector<Rational>& kappa);

// fractional-linear charts from the component coordinate to lambda;
// (0, 1, inf) land on (kappa4, kappa2, kappa1) and (kappa4, kappa3, kappa2)
Rational lambda_on_gamma13(const std::vector<Rational>& kappa, const Rational& zeta);
Rational lambda_on_gamma23(const std::vector<Rational>& kappa, const Rational& zeta);

// nodal quintic plus a small even perturbation vanishing doubly on the
// vertical through alpha5
BiPoly gr24_perturbed(const Gr24Lines& g, const BiPoly& c0, const Rational& eps);

// canned perturbation cubics for two phase choices used in worked examples
BiPoly c0_example(const std::vector<Rational>& kappa);

// number of double points of a curve built from n1 lines, n2 conics and n3
// cubics in general position
long singular_point_count(long n1, long n2, long n3);

// one-parameter deformation tending to the five-line model
struct Gr24Xi {
  std::vector<Rational> kappa;
  Rational xi;
  Rational lambda2, lambda3, lambda5;
  Rational c13, c23;
  BiPoly gamma2;  // line through (kappa1, 0)
  BiPoly gamma1;  // cubic degenerating to gamma23 * sigma23 * sigma24
  BiPoly pi;      // mu * gamma2 * gamma1
};

Gr24Xi gr24_xi(const std::vector<Rational>& kappa, const Rational& xi);

BiPoly gr24_xi_perturbed(const Gr24Xi& g, const BiPoly& c0, const Rational& eps);

}  // namespace positroid
