#include "positroid/soliton.hpp"

#include <functional>

namespace positroid {

SolitonData make_soliton_data(const LeTableau& t, std::vector<Rational> kappa) {
  SolitonData data;
  data.tableau = t;
  data.kappa = std::move(kappa);
  LeNetwork net = build_network(t);
  data.A = boundary_measurement(net);
  data.pivots = t.diagram.pivots();
  data.validate();
  return data;
}

TauMinorSum::TauMinorSum(const SolitonData& data) : data_(&data) {
  int k = data.k(), n = data.n();
  std::vector<std::size_t> comb(static_cast<std::size_t>(k));
  std::function<void(int, int)> rec = [&](int pos, int start) {
    if (pos == k) {
      Rational minor = data.A.maximal_minor(comb);
      if (minor.is_zero()) return;
      if (minor < Rational(0))
        throw RegularityError("negative maximal minor: data is not totally nonnegative");
      Rational vdm(1);
      for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
          vdm *= data.kappa[comb[static_cast<std::size_t>(b)]] -
                 data.kappa[comb[static_cast<std::size_t>(a)]];
      TauTerm term;
      term.coef = minor * vdm;
      for (int a = 0; a < k; ++a)
        term.cols.push_back(static_cast<int>(comb[static_cast<std::size_t>(a)]) + 1);
      terms_.push_back(std::move(term));
      return;
    }
    for (int c = start; c + (k - pos) <= n; ++c) {
      comb[static_cast<std::size_t>(pos)] = static_cast<std::size_t>(c);
      rec(pos + 1, c + 1);
    }
  };
  rec(0, 0);
  if (terms_.empty()) throw RegularityError("tau vanishes identically");
}

}  // namespace positroid
