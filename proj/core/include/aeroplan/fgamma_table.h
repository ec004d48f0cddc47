#ifndef AEROPLAN_FGAMMA_TABLE_H
#define AEROPLAN_FGAMMA_TABLE_H

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace aeroplan {

// E[log2(1 + gamma * xi)] for xi ~ Gamma(kappa, 1/kappa), by trapezoidal
// quadrature in log(xi). Accurate to ~1e-10 relative over the table grid.
double ErgodicLog2(double gamma, double kappa);

// Tabulated E[log2(1 + gamma * xi)] over a log-spaced gamma axis and a set of
// shapes. Interpolation is bilinear on ln f in (log10 gamma, 1/kappa).
//
// Outside the gamma range the table extends continuously: linearly in gamma
// below, and with slope log2(gamma) above (the exact high-SNR asymptote).
class FGammaTable {
 public:
  struct Grid {
    double log10_gamma_min = -4.0;
    double log10_gamma_max = 8.0;
    int n_gamma = 121;
    std::vector<double> kappas;  // ascending

    static Grid Default();  // kappa = 1..60 plus 1e6
    uint64_t Hash() const;
  };

  // One shape's column of the table, for fast repeated lookups.
  class Row {
   public:
    double Eval(double gamma, bool* out_of_range = nullptr) const;

   private:
    friend class FGammaTable;
    double log10_min_ = 0;
    double step_ = 1;
    double gamma_min_ = 0;
    double gamma_max_ = 0;
    double f_max_ = 0;
    std::vector<double> ln_f_;
  };

  static FGammaTable Compute(const Grid& grid);

  // Process-wide default grid. Uses the cache file named by
  // AEROPLAN_TABLE_CACHE when set, otherwise computes in memory.
  static const FGammaTable& Default();

  // Reads `path` if it holds a table for `grid`; otherwise computes and
  // writes it.
  static FGammaTable LoadOrCompute(const std::string& path, const Grid& grid);
  static std::optional<FGammaTable> Load(const std::string& path, const Grid& grid);
  void Save(const std::string& path) const;  // throws InputError on I/O failure

  double Eval(double gamma, double kappa, bool* out_of_range = nullptr) const;
  Row RowFor(double kappa) const;

  const Grid& grid() const { return grid_; }
  double Value(int gamma_index, int kappa_index) const;
  double GammaAt(int gamma_index) const;

 private:
  Grid grid_;
  std::vector<double> ln_f_;  // [kappa_index * n_gamma + gamma_index]
};

}  // namespace aeroplan

#endif
