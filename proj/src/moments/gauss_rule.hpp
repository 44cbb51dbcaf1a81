#pragma once

#include <vector>

#include <boost/math/quadrature/gauss.hpp>

#include "zgap/errors.hpp"

namespace zgap::moments::detail {

// Full Gauss-Legendre node/weight lists on [-1, 1] from boost's half tables.
struct GaussNodes {
  std::vector<double> x, w;
};

template <unsigned N>
struct GaussRule : GaussNodes {
  GaussRule() {
    using G = boost::math::quadrature::gauss<double, N>;
    const auto& a = G::abscissa();
    const auto& wt = G::weights();
    for (std::size_t i = 0; i < a.size(); ++i) {
      x.push_back(a[i]);
      w.push_back(wt[i]);
      if (a[i] != 0.0) {
        x.push_back(-a[i]);
        w.push_back(wt[i]);
      }
    }
  }
};

template <unsigned N>
const GaussRule<N>& gauss_rule() {
  static const GaussRule<N> r;
  return r;
}

// Runtime choice among the orders the moment integrals accept.
inline const GaussNodes& gauss_nodes(int points) {
  switch (points) {
    case 7: return gauss_rule<7>();
    case 15: return gauss_rule<15>();
    case 20: return gauss_rule<20>();
    case 30: return gauss_rule<30>();
    default: throw DomainError("Gauss rule order must be 7, 15, 20 or 30");
  }
}

}  // namespace zgap::moments::detail
