#include "positroid/plane_curve.hpp"

#include <algorithm>

namespace positroid {

BiPoly BiPoly::constant(const Rational& c) {
  BiPoly p;
  p.add_term(0, 0, c);
  return p;
}

BiPoly BiPoly::lambda() {
  BiPoly p;
  p.add_term(1, 0, Rational(1));
  return p;
}

BiPoly BiPoly::mu() {
  BiPoly p;
  p.add_term(0, 1, Rational(1));
  return p;
}

BiPoly BiPoly::line(const Rational& cl, const Rational& cm, const Rational& c0) {
  BiPoly p;
  p.add_term(1, 0, cl);
  p.add_term(0, 1, cm);
  p.add_term(0, 0, c0);
  return p;
}

int BiPoly::deg_lambda() const {
  int d = 0;
  for (const auto& [key, coef] : c_) d = std::max(d, key.first);
  return d;
}

int BiPoly::deg_mu() const {
  int d = 0;
  for (const auto& [key, coef] : c_) d = std::max(d, key.second);
  return d;
}

int BiPoly::total_degree() const {
  int d = 0;
  for (const auto& [key, coef] : c_) d = std::max(d, key.first + key.second);
  return d;
}

BiPoly& BiPoly::add_term(int dl, int dm, const Rational& c) {
  if (c.is_zero()) return *this;
  auto it = c_.find({dl, dm});
  if (it == c_.end()) {
    c_.emplace(Key{dl, dm}, c);
  } else {
    it->second = it->second + c;
    if (it->second.is_zero()) c_.erase(it);
  }
  return *this;
}

BiPoly BiPoly::operator+(const BiPoly& o) const {
  BiPoly out = *this;
  for (const auto& [key, coef] : o.c_) out.add_term(key.first, key.second, coef);
  return out;
}

BiPoly BiPoly::operator-(const BiPoly& o) const {
  BiPoly out = *this;
  for (const auto& [key, coef] : o.c_) out.add_term(key.first, key.second, Rational(0) - coef);
  return out;
}

BiPoly BiPoly::operator*(const BiPoly& o) const {
  BiPoly out;
  for (const auto& [ka, ca] : c_)
    for (const auto& [kb, cb] : o.c_)
      out.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
  return out;
}

BiPoly BiPoly::scaled(const Rational& c) const {
  BiPoly out;
  for (const auto& [key, coef] : c_) out.add_term(key.first, key.second, coef * c);
  return out;
}

Rational BiPoly::eval(const Rational& lam, const Rational& mu) const {
  Rational s(0);
  for (const auto& [key, coef] : c_) {
    Rational t = coef;
    for (int a = 0; a < key.first; ++a) t = t * lam;
    for (int a = 0; a < key.second; ++a) t = t * mu;
    s = s + t;
  }
  return s;
}

std::string BiPoly::to_string() const {
  if (c_.empty()) return "0";
  // highest total degree first, then lambda degree
  std::vector<std::pair<Key, Rational>> terms(c_.begin(), c_.end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    int ta = a.first.first + a.first.second, tb = b.first.first + b.first.second;
    if (ta != tb) return ta > tb;
    return a.first.first > b.first.first;
  });
  std::string out;
  for (const auto& [key, coef] : terms) {
    std::string cs = coef.to_string();
    bool neg = !cs.empty() && cs[0] == '-';
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    if (neg) cs = cs.substr(1);
    std::string mono;
    if (key.first > 0) mono += "lambda" + (key.first > 1 ? "^" + std::to_string(key.first) : "");
    if (key.second > 0) {
      if (!mono.empty()) mono += " ";
      mono += "mu" + (key.second > 1 ? "^" + std::to_string(key.second) : "");
    }
    if (mono.empty()) {
      out += cs;
    } else if (cs == "1") {
      out += mono;
    } else {
      out += cs + " " + mono;
    }
  }
  return out;
}

namespace {

void need_four(const std::vector<Rational>& kappa) {
  if (kappa.size() != 4) throw Error("plane curve model needs exactly four phases");
  for (std::size_t j = 1; j < 4; ++j)
    if (!(kappa[j - 1] < kappa[j])) throw Error("phases must be strictly increasing");
}

}  // namespace

Gr24Lines gr24_lines(const std::vector<Rational>& kappa) {
  need_four(kappa);
  const Rational &k1 = kappa[0], &k2 = kappa[1], &k3 = kappa[2], &k4 = kappa[3];

  Rational slope_den = (k4 - k1) * (k2 - k1) * (k2 + k4 - k3 - k3);
  if (slope_den.is_zero())
    throw Error("degenerate phases: kappa2 + kappa4 = 2 kappa3");
  Rational c13 = ((k2 + k4 - k3 - k3) * (k4 - k3) * (k2 - k1) + (k3 - k1) * (k3 - k2) * (k3 - k2)) /
                 slope_den;
  if ((c13 - Rational(1)).is_zero())
    throw Error("degenerate phases: the two slanted lines are parallel");

  Gr24Lines g;
  g.kappa = kappa;
  g.c13 = c13;
  g.gamma0 = BiPoly::mu();
  g.gamma13 = BiPoly::line(Rational(0) - c13, Rational(1), c13 * k1);
  g.gamma23 = BiPoly::line(Rational(-1), Rational(1), k3);
  g.sigma23 = BiPoly::line(Rational(1), Rational(0), Rational(0) - k2);
  g.sigma24 = BiPoly::line(Rational(1), Rational(0), Rational(0) - k4);
  g.pi0 = g.gamma0 * g.gamma13 * g.sigma23 * g.gamma23 * g.sigma24;
  g.lambda5 = (Rational(0) - (k3 - c13 * k1)) / (c13 - Rational(1));
  g.mu5 = (Rational(0) - c13 * (k3 - k1)) / (c13 - Rational(1));
  return g;
}

Rational lambda_on_gamma13(const std::vector<Rational>& kappa, const Rational& zeta) {
  need_four(kappa);
  const Rational &k1 = kappa[0], &k2 = kappa[1], &k4 = kappa[3];
  Rational den = (k4 - k2) * zeta + (k2 - k1);
  if (den.is_zero()) throw Error("chart pole");
  return (k1 * (k4 - k2) * zeta + (k2 - k1) * k4) / den;
}

Rational lambda_on_gamma23(const std::vector<Rational>& kappa, const Rational& zeta) {
  need_four(kappa);
  const Rational &k2 = kappa[1], &k3 = kappa[2], &k4 = kappa[3];
  Rational den = (k4 - k3) * zeta + (k3 - k2);
  if (den.is_zero()) throw Error("chart pole");
  return (k2 * (k4 - k3) * zeta + (k3 - k2) * k4) / den;
}

BiPoly gr24_perturbed(const Gr24Lines& g, const BiPoly& c0, const Rational& eps) {
  BiPoly shift = BiPoly::lambda() - BiPoly::constant(g.lambda5);
  return g.pi0 + (shift * shift * c0).scaled(eps * eps);
}

BiPoly c0_example(const std::vector<Rational>& kappa) {
  need_four(kappa);
  auto is = [&](long a, long b, long c, long d) {
    return kappa[0] == Rational(a) && kappa[1] == Rational(b) && kappa[2] == Rational(c) &&
           kappa[3] == Rational(d);
  };
  if (is(-3, -1, 2, 3)) {
    BiPoly p;
    p.add_term(3, 0, Rational(-35));
    p.add_term(0, 3, Rational(-1));
    p.add_term(2, 0, Rational(-70));
    return p;
  }
  if (is(-3, -1, 2, 6)) {
    BiPoly p;
    p.add_term(0, 2, Rational(1));
    p.add_term(0, 0, Rational(-35));
    return p;
  }
  throw Error("no stock perturbation for these phases");
}

long singular_point_count(long n1, long n2, long n3) {
  return n1 * (n1 - 1) / 2 + 2 * n1 * n2 + 3 * n1 * n3 + 2 * n2 * (n2 - 1) + 6 * n2 * n3 +
         9 * n3 * (n3 - 1) / 2 + n3;
}

Gr24Xi gr24_xi(const std::vector<Rational>& kappa, const Rational& xi) {
  need_four(kappa);
  const Rational &k1 = kappa[0], &k2 = kappa[1], &k3 = kappa[2], &k4 = kappa[3];
  Rational one(1);

  Gr24Xi g;
  g.kappa = kappa;
  g.xi = xi;
  Rational xi2 = xi * xi;

  {
    Rational den = xi2 * (k4 - k3) + (one - xi) * (k4 - k2);
    if (den.is_zero()) throw Error("deformation parameter hits a pole");
    g.lambda2 = (xi2 * k2 * (k4 - k3) + (one - xi) * k3 * (k4 - k2)) / den;
  }
  {
    Rational den = xi * (k3 - k2) - k4 + k2;
    if (den.is_zero()) throw Error("deformation parameter hits a pole");
    g.lambda3 = (xi * k4 * (k3 - k2) - k3 * (k4 - k2)) / den;
  }

  const Rational &l2 = g.lambda2, &l3 = g.lambda3;
  Rational sum_k = k1 + k2 + k3 + k4;
  Rational sum_not1 = k2 + k3 + k4;
  Rational sum_pairs_not1 = k2 * k3 + k2 * k4 + k3 * k4;

  {
    Rational num = l2 * l3 * k1 - (l2 + l3) * (k1 * k2 + k1 * k4 - k2 * k4) -
                   k2 * k2 * (k4 - k1) - k4 * k4 * (k2 - k1) + k1 * k2 * k4;
    Rational den = l2 * l3 - k1 * (l2 + l3) + k1 * k2 + k1 * k4 - k2 * k4;
    if (den.is_zero()) throw Error("deformation parameter hits a pole");
    g.lambda5 = num / den;
  }
  {
    Rational num = l2 * l3 * (l2 + l3 - sum_k) + k1 * (l2 + l3) * sum_not1 -
                   k1 * (l2 * l2 + l3 * l3 + sum_pairs_not1) + k2 * k3 * k4;
    Rational den = (l2 - k1) * (l3 - k1) * (l2 + l3 - k2 - k4);
    if (den.is_zero()) throw Error("deformation parameter hits a pole");
    g.c13 = num / den;
  }
  {
    Rational den = xi * (l2 - k4) * (l2 - k2) * (g.c13 * (l2 - k1) - l2 + k3);
    if (den.is_zero()) throw Error("deformation parameter hits a pole");
    g.c23 = (Rational(0) - g.c13 * (l2 - k1)) / den;
  }

  g.gamma2 = BiPoly::line(Rational(0) - g.c13, one, g.c13 * k1);
  BiPoly f1 = BiPoly::line(one, Rational(0), Rational(0) - k2);
  BiPoly f2 = BiPoly::line(one, Rational(-1), Rational(0) - k3);
  BiPoly f3 = BiPoly::line(one, Rational(0), Rational(0) - k4);
  g.gamma1 = BiPoly::mu().scaled(one / xi) - (f1 * f2 * f3).scaled(g.c23);
  g.pi = BiPoly::mu() * g.gamma2 * g.gamma1;
  return g;
}

BiPoly gr24_xi_perturbed(const Gr24Xi& g, const BiPoly& c0, const Rational& eps) {
  BiPoly shift = BiPoly::lambda() - BiPoly::constant(g.lambda5);
  return g.pi + (shift * shift * c0).scaled(eps * eps);
}

}  // namespace positroid
