#include "aeroplan/fgamma_table.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <mutex>
#include <random>
#include <sstream>

#include "aeroplan/errors.h"

namespace aeroplan {
namespace {

constexpr int kQuadraturePoints = 4000;
constexpr char kCacheMagic[] = "# aeroplan fgamma table v1";

uint64_t Fnv1a(const void* data, size_t len, uint64_t h) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

double ErgodicLog2(double gamma, double kappa) {
  if (!(gamma > 0)) return 0;
  // Density of u = ln(xi) is proportional to exp(-kappa (e^u - 1 - u)).
  double sd = 1.0 / std::sqrt(kappa);
  double lo = -(12.0 * sd + 45.0 / kappa);
  double hi = 12.0 * sd + std::log1p(60.0 / kappa);
  double h = (hi - lo) / kQuadraturePoints;
  double num = 0;
  double den = 0;
  for (int i = 0; i <= kQuadraturePoints; ++i) {
    double u = lo + i * h;
    double w = std::exp(-kappa * (std::expm1(u) - u));
    if (i == 0 || i == kQuadraturePoints) w *= 0.5;
    num += w * std::log1p(gamma * std::exp(u));
    den += w;
  }
  return num / den / std::log(2.0);
}

FGammaTable::Grid FGammaTable::Grid::Default() {
  Grid g;
  for (int k = 1; k <= 60; ++k) g.kappas.push_back(k);
  g.kappas.push_back(1e6);
  return g;
}

uint64_t FGammaTable::Grid::Hash() const {
  uint64_t h = 0xcbf29ce484222325ULL;
  h = Fnv1a(&log10_gamma_min, sizeof(double), h);
  h = Fnv1a(&log10_gamma_max, sizeof(double), h);
  h = Fnv1a(&n_gamma, sizeof(int), h);
  h = Fnv1a(kappas.data(), kappas.size() * sizeof(double), h);
  int q = kQuadraturePoints;
  return Fnv1a(&q, sizeof(int), h);
}

FGammaTable FGammaTable::Compute(const Grid& grid) {
  if (grid.n_gamma < 2 || grid.kappas.empty() ||
      !(grid.log10_gamma_max > grid.log10_gamma_min)) {
    throw InputError("fgamma table: degenerate grid");
  }
  FGammaTable t;
  t.grid_ = grid;
  t.ln_f_.resize(grid.kappas.size() * grid.n_gamma);
  for (size_t k = 0; k < grid.kappas.size(); ++k) {
    for (int i = 0; i < grid.n_gamma; ++i) {
      t.ln_f_[k * grid.n_gamma + i] = std::log(ErgodicLog2(t.GammaAt(i), grid.kappas[k]));
    }
  }
  return t;
}

const FGammaTable& FGammaTable::Default() {
  static const FGammaTable* table = [] {
    const char* path = std::getenv("AEROPLAN_TABLE_CACHE");
    if (path != nullptr && *path != '\0') {
      return new FGammaTable(LoadOrCompute(path, Grid::Default()));
    }
    return new FGammaTable(Compute(Grid::Default()));
  }();
  return *table;
}

std::optional<FGammaTable> FGammaTable::Load(const std::string& path, const Grid& grid) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::string line;
  if (!std::getline(in, line) || line != kCacheMagic) return std::nullopt;
  if (!std::getline(in, line)) return std::nullopt;
  std::ostringstream expect;
  expect << "# grid_hash " << grid.Hash();
  if (line != expect.str()) return std::nullopt;
  std::getline(in, line);  // column header
  FGammaTable t;
  t.grid_ = grid;
  t.ln_f_.assign(grid.kappas.size() * grid.n_gamma, 0);
  size_t count = 0;
  while (std::getline(in, line)) {
    std::istringstream row(line);
    int k, i;
    char c1, c2, c3;
    double log10_gamma, kappa, f;
    if (!(row >> k >> c1 >> i >> c2 >> log10_gamma >> c3 >> kappa)) return std::nullopt;
    char c4;
    if (!(row >> c4 >> f)) return std::nullopt;
    if (k < 0 || k >= static_cast<int>(grid.kappas.size()) || i < 0 || i >= grid.n_gamma ||
        !(f > 0)) {
      return std::nullopt;
    }
    t.ln_f_[k * grid.n_gamma + i] = std::log(f);
    ++count;
  }
  if (count != t.ln_f_.size()) return std::nullopt;
  return t;
}

void FGammaTable::Save(const std::string& path) const {
  // Write beside the target and rename, so concurrent readers never see a
  // partial file.
  std::string tmp = path + ".tmp" + std::to_string(std::random_device{}());
  std::ofstream out(tmp);
  if (!out) throw InputError("cannot write table cache '" + path + "'");
  out << kCacheMagic << "\n# grid_hash " << grid_.Hash() << "\n";
  out << "kappa_index,gamma_index,log10_gamma,kappa,f_bits\n";
  out << std::setprecision(17);
  for (size_t k = 0; k < grid_.kappas.size(); ++k) {
    for (int i = 0; i < grid_.n_gamma; ++i) {
      out << k << "," << i << "," << std::log10(GammaAt(i)) << "," << grid_.kappas[k] << ","
          << Value(i, static_cast<int>(k)) << "\n";
    }
  }
  out.close();
  std::error_code ec;
  if (!out) throw InputError("cannot write table cache '" + path + "'");
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw InputError("cannot write table cache '" + path + "': " + ec.message());
}

FGammaTable FGammaTable::LoadOrCompute(const std::string& path, const Grid& grid) {
  if (auto t = Load(path, grid)) return *std::move(t);
  FGammaTable t = Compute(grid);
  t.Save(path);
  return t;
}

double FGammaTable::GammaAt(int i) const {
  double step = (grid_.log10_gamma_max - grid_.log10_gamma_min) / (grid_.n_gamma - 1);
  return std::pow(10.0, grid_.log10_gamma_min + i * step);
}

double FGammaTable::Value(int gamma_index, int kappa_index) const {
  return std::exp(ln_f_[kappa_index * grid_.n_gamma + gamma_index]);
}

FGammaTable::Row FGammaTable::RowFor(double kappa) const {
  const std::vector<double>& ks = grid_.kappas;
  int n = grid_.n_gamma;
  Row row;
  row.log10_min_ = grid_.log10_gamma_min;
  row.step_ = (grid_.log10_gamma_max - grid_.log10_gamma_min) / (n - 1);
  row.gamma_min_ = GammaAt(0);
  row.gamma_max_ = GammaAt(n - 1);
  row.ln_f_.resize(n);

  size_t k0 = 0;
  double w = 0;
  if (kappa <= ks.front()) {
    k0 = 0;
  } else if (kappa >= ks.back()) {
    k0 = ks.size() - 1;
  } else {
    k0 = std::upper_bound(ks.begin(), ks.end(), kappa) - ks.begin() - 1;
    double u0 = 1.0 / ks[k0];
    double u1 = 1.0 / ks[k0 + 1];
    w = (1.0 / kappa - u0) / (u1 - u0);
  }
  for (int i = 0; i < n; ++i) {
    double v = ln_f_[k0 * n + i];
    if (w > 0) v = (1 - w) * v + w * ln_f_[(k0 + 1) * n + i];
    row.ln_f_[i] = v;
  }
  row.f_max_ = std::exp(row.ln_f_.back());
  return row;
}

double FGammaTable::Row::Eval(double gamma, bool* out_of_range) const {
  if (!(gamma > 0)) return 0;
  double x = (std::log10(gamma) - log10_min_) / step_;
  int last = static_cast<int>(ln_f_.size()) - 1;
  if (x < 0) {
    if (out_of_range) *out_of_range = true;
    return std::exp(ln_f_[0]) * gamma / gamma_min_;
  }
  if (x >= last) {
    if (x > last && out_of_range) *out_of_range = true;
    return f_max_ + std::log2(gamma / gamma_max_);
  }
  int i = static_cast<int>(x);
  double w = x - i;
  return std::exp((1 - w) * ln_f_[i] + w * ln_f_[i + 1]);
}

double FGammaTable::Eval(double gamma, double kappa, bool* out_of_range) const {
  return RowFor(kappa).Eval(gamma, out_of_range);
}

}  // namespace aeroplan
