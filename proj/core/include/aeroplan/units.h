#ifndef AEROPLAN_UNITS_H
#define AEROPLAN_UNITS_H

#include <cmath>
#include <limits>

namespace aeroplan {

constexpr double kInf = std::numeric_limits<double>::infinity();

inline double DbToLinear(double db) { return std::pow(10.0, db / 10.0); }

inline double LinearToDb(double x) {
  if (x <= 0) return -kInf;
  return 10.0 * std::log10(x);
}

inline double WattsToDbm(double w) {
  if (std::isinf(w)) return kInf;
  return LinearToDb(w / 1e-3);
}

inline double DbmToWatts(double dbm) { return 1e-3 * DbToLinear(dbm); }

}  // namespace aeroplan

#endif
