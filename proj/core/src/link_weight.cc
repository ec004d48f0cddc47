#include "aeroplan/link_weight.h"

#include <algorithm>
#include <cmath>

#include "aeroplan/units.h"

namespace aeroplan {
namespace {

double ScaleAt(std::span<const double> scale, size_t cell) {
  if (scale.empty()) return 1.0;
  return cell < scale.size() ? scale[cell] : 0.0;
}

// Mean per-watt SNR over the cells touched by [t0, t1), for bracketing.
double MeanSnr(const LinkProfile& p, size_t i0, size_t i1) {
  double s = 0;
  for (size_t i = i0; i < i1; ++i) s += p.SnrPerWatt(i);
  return i1 > i0 ? s / (i1 - i0) : 0;
}

}  // namespace

double BitTolerance(double size_bits) { return std::max(1.0, 1e-6 * size_bits); }

double Upsilon(const Network& net, const HopSpec& hop, double theta) {
  if (hop.tx == hop.rx || !(theta > 0) || !(hop.t_end > hop.t_start)) return 0;
  const LinkProfile& p = net.Profile(hop.tx, hop.rx);
  double dt = net.dt();
  size_t n = net.n_cells();
  size_t i0 = static_cast<size_t>(std::max(0.0, hop.t_start) / dt);
  double sum = 0;
  for (size_t i = i0; i < n; ++i) {
    double lo = std::max(hop.t_start, i * dt);
    double hi = std::min(hop.t_end, (i + 1) * dt);
    if (hi <= lo) {
      if (i * dt >= hop.t_end) break;
      continue;
    }
    double s = ScaleAt(hop.bandwidth_scale, i);
    if (s > 0) sum += s * p.Rate(theta, i) * (hi - lo);
  }
  return net.bandwidth() * sum;
}

double DeliveryTime(const Network& net, int tx, int rx, double theta, double t_start,
                    double size_bits, std::span<const double> bandwidth_scale,
                    double t_limit) {
  if (size_bits <= 0) return t_start;
  if (tx == rx || !(theta > 0)) return kInf;
  const LinkProfile& p = net.Profile(tx, rx);
  double dt = net.dt();
  size_t n = net.n_cells();
  double remaining = size_bits / net.bandwidth();
  size_t i0 = static_cast<size_t>(std::max(0.0, t_start) / dt);
  for (size_t i = i0; i < n; ++i) {
    double lo = std::max(t_start, i * dt);
    double hi = (i + 1) * dt;
    if (lo >= t_limit) break;
    if (hi <= lo) continue;
    double r = ScaleAt(bandwidth_scale, i) * p.Rate(theta, i);
    if (r > 0) {
      double need = remaining / r;
      if (need <= hi - lo) {
        double t = lo + need;
        return t <= t_limit ? t : kInf;
      }
      remaining -= r * (hi - lo);
    }
  }
  return kInf;
}

LinkWeight SolveP1(const Network& net, const HopSpec& hop, double initial_guess) {
  LinkWeight w;
  w.mode = net.options().bound;
  if (hop.tx == hop.rx || hop.size_bits <= 0) return w;
  const LinkProfile& p = net.Profile(hop.tx, hop.rx);
  w.degenerate = p.degenerate();
  double cap = net.options().theta_cap_w;
  if (!(hop.t_end > hop.t_start)) {
    w.theta = cap;
    w.feasible = false;
    return w;
  }

  double S = hop.size_bits;
  double tol = BitTolerance(S);
  auto upsilon = [&](double theta) { return Upsilon(net, hop, theta); };

  double guess = initial_guess;
  if (!(guess > 0)) {
    double dt = net.dt();
    size_t i0 = static_cast<size_t>(hop.t_start / dt);
    size_t i1 = std::min(net.n_cells(), static_cast<size_t>(std::ceil(hop.t_end / dt)));
    double snr = MeanSnr(p, i0, i1);
    double mean_scale = 0;
    for (size_t i = i0; i < i1; ++i) mean_scale += ScaleAt(hop.bandwidth_scale, i);
    mean_scale = i1 > i0 ? mean_scale / (i1 - i0) : 0;
    double bits_per_hz_s = S / (net.bandwidth() * (hop.t_end - hop.t_start) * mean_scale);
    guess = snr > 0 && std::isfinite(bits_per_hz_s)
                ? std::expm1(std::min(bits_per_hz_s, 1000.0) * std::log(2.0)) / snr
                : 1e-6;
    if (!(guess > 0) || !std::isfinite(guess)) guess = 1e-6;
  }
  guess = std::min(guess, cap);

  double lo = 0;
  double hi = guess;
  double u = upsilon(hi);
  if (std::abs(u - S) <= tol) {
    w.theta = hi;
    return w;
  }
  if (u < S) {
    lo = hi;
    while (true) {
      if (hi >= cap) {
        w.theta = cap;
        w.feasible = false;
        return w;
      }
      hi = std::min(2 * hi, cap);
      u = upsilon(hi);
      if (std::abs(u - S) <= tol) {
        w.theta = hi;
        return w;
      }
      if (u > S) break;
      lo = hi;
    }
  } else {
    lo = hi / 2;
    while (true) {
      double ul = upsilon(lo);
      if (std::abs(ul - S) <= tol) {
        w.theta = lo;
        return w;
      }
      if (ul < S) break;
      hi = lo;
      lo /= 2;
      if (lo < 1e-300) {
        w.theta = hi;
        return w;
      }
    }
  }

  // Bracket [lo, hi] with Upsilon(lo) < S < Upsilon(hi).
  for (int it = 0; it < 200; ++it) {
    double mid = std::sqrt(lo * hi);
    if (!(mid > lo && mid < hi)) break;
    double um = upsilon(mid);
    if (std::abs(um - S) <= tol) {
      w.theta = mid;
      return w;
    }
    if (um < S) {
      lo = mid;
    } else {
      hi = mid;
    }
    if (hi / lo - 1 < 1e-13) break;
  }
  w.theta = hi;
  return w;
}

double PowerPolicy(double theta, std::span<const double> neighbor_gains, double p_max_w) {
  if (theta <= 0) return 0;
  double m = 0;
  for (double g : neighbor_gains) m = std::max(m, g);
  if (m <= 0) return p_max_w;
  return theta / m;
}

}  // namespace aeroplan
