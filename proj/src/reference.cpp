#include "surfsing/reference.hpp"

namespace surfsing {

CounterexampleReference counterexample_reference() {
  CounterexampleReference ref;
  ref.self_intersections = {
      {"D", -2},  {"A", -5},  {"M1", -2}, {"M2", -2}, {"M3", -2}, {"M4", -2},
      {"L1", -2}, {"L2", -2}, {"B", -4},  {"N1", -2}, {"N2", -2}, {"N3", -2},
      {"N4", -2}, {"L3", -1}, {"M5", -1}, {"N5", -1},
  };
  ref.edges = {
      {"D", "A"},   {"A", "M1"},  {"M1", "M2"}, {"M2", "M3"}, {"M3", "M4"},
      {"L1", "L2"}, {"L2", "B"},  {"B", "N1"},  {"N1", "N2"}, {"N2", "N3"}, {"N3", "N4"},
  };
  ref.components = {
      {"D", "A", "M1", "M2", "M3", "M4"},
      {"L1", "L2", "B", "N1", "N2", "N3", "N4"},
  };
  ref.discrepancies = {
      {"D", Rational(-15, 37)},  {"A", Rational(-30, 37)},  {"M1", Rational(-24, 37)},
      {"M2", Rational(-18, 37)}, {"M3", Rational(-12, 37)}, {"M4", Rational(-6, 37)},
      {"L1", Rational(-5, 19)},  {"L2", Rational(-10, 19)}, {"B", Rational(-15, 19)},
      {"N1", Rational(-12, 19)}, {"N2", Rational(-9, 19)},  {"N3", Rational(-6, 19)},
      {"N4", Rational(-3, 19)},
  };
  ref.ky_squared = -4;
  ref.picard_rank_resolution = 14;
  ref.picard_rank_surface = 1;
  ref.ks_squared = Rational(8, 37 * 19);
  ref.chi = {1, 0, 0, 0, 0, 0, 1};
  ref.tau = 6;
  return ref;
}

}  // namespace surfsing
