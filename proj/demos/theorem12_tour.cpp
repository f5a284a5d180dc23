// A short tour: the (64, 11) instance of the F_3 supercongruence, the unit
// root behind it, and a formal group law read at one prime.

#include <iostream>

#include "supercong/supercong.hpp"

namespace sc = supercong;

int main() {
  const sc::Rational lambda(64);
  const std::uint64_t p = 11;

  const sc::curves::CurveId e = sc::curves::CurveId::cm(lambda);
  const auto local = sc::curves::count_points(e, p, 2);
  std::cout << e.name() << " over F_" << p << ": " << local.count << " points, trace " << local.trace << '\n';
  std::cout << "unit root alpha = " << local.unit_root->str() << '\n';

  const sc::PadicInt lhs = sc::hyper::f_r_mod(lambda, 3, (p - 1) / 2, p, 2);
  std::cout << "F_3(64)_5 = " << lhs.str() << '\n';

  std::cout << sc::lab::theorem12_check(lambda, p).summary() << '\n';
  std::cout << sc::lab::sun_target_check(lambda, p).summary() << '\n';

  const auto law = sc::formal::group_law(sc::formal::hypergeometric_logarithm(3, sc::Rational(1), 8), 8);
  const auto rep = sc::formal::integrality_report(law, 5);
  std::cout << "group law of the F_3(1) logarithm through degree 8, min 5-adic valuation "
            << rep.min_valuation.str() << '\n';
}
