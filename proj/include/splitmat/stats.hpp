#pragma once

// Empirical statistics over Monte Carlo spectra: classification tallies,
// histograms, mean-normalized spacings, Kolmogorov-Smirnov distances, and
// adaptive quadrature with tabulated cumulative distributions.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "splitmat/spectral.hpp"

namespace splitmat {

struct Histogram {
  std::vector<double> edges;        // bins + 1 boundaries, ascending
  std::vector<std::size_t> counts;  // per-bin tallies
  std::size_t total = 0;            // includes out-of-range data

  // counts / (total * width); integrates to the in-range fraction
  std::vector<double> density() const {
    std::vector<double> d(counts.size());
    for (std::size_t i = 0; i < counts.size(); ++i) {
      const double width = edges[i + 1] - edges[i];
      d[i] = total == 0 ? 0.0 : static_cast<double>(counts[i]) / (static_cast<double>(total) * width);
    }
    return d;
  }
};

// Equal-width bins over [lo, hi); bins are half-open with the last closed,
// out-of-range values count toward total only.
inline Histogram histogram(const std::vector<double>& data, std::size_t bins, double lo,
                           double hi) {
  if (bins < 1) throw std::invalid_argument("histogram: need at least one bin");
  if (!(lo < hi)) throw std::invalid_argument("histogram: range must be increasing");
  Histogram h;
  h.edges.resize(bins + 1);
  const double width = (hi - lo) / static_cast<double>(bins);
  for (std::size_t i = 0; i <= bins; ++i) h.edges[i] = lo + width * static_cast<double>(i);
  h.counts.assign(bins, 0);
  h.total = data.size();
  for (double x : data) {
    if (x < lo || x > hi) continue;
    std::size_t idx =
        x == hi ? bins - 1 : static_cast<std::size_t>((x - lo) / width);
    if (idx >= bins) idx = bins - 1;  // guard of the floating division at the top edge
    ++h.counts[idx];
  }
  return h;
}

// Plane histogram used for the complex-branch density comparisons; same
// conventions per axis, density = counts / (total * cell area).
struct Histogram2d {
  std::size_t xbins = 0, ybins = 0;
  double xlo = 0, xhi = 0, ylo = 0, yhi = 0;
  std::vector<std::size_t> counts;  // row-major over (xbin, ybin)
  std::size_t total = 0;

  double density(std::size_t ix, std::size_t iy) const {
    const double area = (xhi - xlo) / static_cast<double>(xbins) * (yhi - ylo) /
                        static_cast<double>(ybins);
    return total == 0
               ? 0.0
               : static_cast<double>(counts[ix * ybins + iy]) / (static_cast<double>(total) * area);
  }
};

inline Histogram2d histogram2d(const std::vector<std::pair<double, double>>& data,
                               std::size_t xbins, std::size_t ybins, double xlo, double xhi,
                               double ylo, double yhi) {
  if (xbins < 1 || ybins < 1) throw std::invalid_argument("histogram2d: need at least one bin");
  if (!(xlo < xhi) || !(ylo < yhi))
    throw std::invalid_argument("histogram2d: ranges must be increasing");
  Histogram2d h;
  h.xbins = xbins;
  h.ybins = ybins;
  h.xlo = xlo;
  h.xhi = xhi;
  h.ylo = ylo;
  h.yhi = yhi;
  h.counts.assign(xbins * ybins, 0);
  h.total = data.size();
  const double xw = (xhi - xlo) / static_cast<double>(xbins);
  const double yw = (yhi - ylo) / static_cast<double>(ybins);
  for (const auto& [x, y] : data) {
    if (x < xlo || x > xhi || y < ylo || y > yhi) continue;
    std::size_t ix = x == xhi ? xbins - 1 : static_cast<std::size_t>((x - xlo) / xw);
    std::size_t iy = y == yhi ? ybins - 1 : static_cast<std::size_t>((y - ylo) / yw);
    if (ix >= xbins) ix = xbins - 1;
    if (iy >= ybins) iy = ybins - 1;
    ++h.counts[ix * ybins + iy];
  }
  return h;
}

// Fraction of 2x2 spectra that are fully real.
inline double empirical_real_fraction(const std::vector<Spectrum>& spectra) {
  if (spectra.empty()) throw std::invalid_argument("empirical_real_fraction: empty input");
  std::size_t real_count = 0;
  for (const auto& s : spectra) {
    if (s.n != 2) throw std::invalid_argument("empirical_real_fraction: spectra must be 2x2");
    if (s.real_eigs.size() == 2) ++real_count;
  }
  return static_cast<double>(real_count) / static_cast<double>(spectra.size());
}

struct SpacingSample {
  std::vector<double> raw;         // |l1 - l2| over real-spectrum samples
  double mean_raw = 0.0;
  std::vector<double> normalized;  // raw / mean_raw; sample mean exactly 1
};

// Gaps of the real-spectrum samples, rescaled so the mean spacing is one.
inline SpacingSample real_spacings(const std::vector<Spectrum>& spectra) {
  SpacingSample out;
  for (const auto& s : spectra) {
    if (s.n != 2) throw std::invalid_argument("real_spacings: spectra must be 2x2");
    if (s.real_eigs.size() == 2) out.raw.push_back(std::abs(s.real_eigs[1] - s.real_eigs[0]));
  }
  if (out.raw.size() < 2)
    throw std::invalid_argument("real_spacings: need at least two real-spectrum samples");
  double sum = 0.0;
  for (double g : out.raw) sum += g;
  out.mean_raw = sum / static_cast<double>(out.raw.size());
  out.normalized.reserve(out.raw.size());
  for (double g : out.raw) out.normalized.push_back(g / out.mean_raw);
  return out;
}

// Kolmogorov-Smirnov statistic sup_x |F_n(x) - F(x)| for an ascending sample
// against a continuous cdf.
template <typename Cdf>
double ks_distance(const std::vector<double>& sorted_samples, Cdf&& cdf) {
  if (sorted_samples.empty()) throw std::invalid_argument("ks_distance: empty sample");
  const double n = static_cast<double>(sorted_samples.size());
  double sup = 0.0;
  for (std::size_t i = 0; i < sorted_samples.size(); ++i) {
    if (i > 0 && sorted_samples[i] < sorted_samples[i - 1])
      throw std::invalid_argument("ks_distance: sample must be sorted ascending");
    const double f = cdf(sorted_samples[i]);
    const double lo = static_cast<double>(i) / n;
    const double hi = static_cast<double>(i + 1) / n;
    sup = std::max({sup, std::abs(hi - f), std::abs(lo - f)});
  }
  return sup;
}

namespace detail {

inline double simpson_rule(double a, double b, double fa, double fm, double fb) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

template <typename F>
double quad_recurse(F& f, double a, double b, double fa, double fm, double fb, double whole,
                    double tol, int depth) {
  if (depth > 60) throw std::runtime_error("quad: subdivision budget exhausted");
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = simpson_rule(a, m, fa, flm, fm);
  const double right = simpson_rule(m, b, fm, frm, fb);
  const double delta = left + right - whole;
  if (std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  return quad_recurse(f, a, m, fa, flm, fm, left, 0.5 * tol, depth + 1) +
         quad_recurse(f, m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
}

}  // namespace detail

// Adaptive Simpson quadrature with absolute error target tol.
template <typename F>
double quad(F&& f, double a, double b, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("quad: tolerance must be positive");
  if (a == b) return 0.0;
  const double m = 0.5 * (a + b);
  const double fa = f(a), fm = f(m), fb = f(b);
  const double whole = detail::simpson_rule(a, b, fa, fm, fb);
  return detail::quad_recurse(f, a, b, fa, fm, fb, whole, tol, 0);
}

// Cumulative distribution tabulated by per-cell Simpson quadrature of a pdf
// on [lo, hi], evaluated by linear interpolation; optional rescaling to unit
// total mass for conditional distributions.
class CdfTable {
 public:
  template <typename F>
  CdfTable(F&& pdf, double lo, double hi, std::size_t cells, bool normalize)
      : lo_(lo), hi_(hi) {
    if (!(lo < hi)) throw std::invalid_argument("CdfTable: range must be increasing");
    if (cells < 1) throw std::invalid_argument("CdfTable: need at least one cell");
    step_ = (hi - lo) / static_cast<double>(cells);
    cum_.resize(cells + 1);
    cum_[0] = 0.0;
    double left = pdf(lo);
    for (std::size_t i = 0; i < cells; ++i) {
      const double a = lo + step_ * static_cast<double>(i);
      const double right = pdf(a + step_);
      const double mid = pdf(a + 0.5 * step_);
      cum_[i + 1] = cum_[i] + step_ / 6.0 * (left + 4.0 * mid + right);
      left = right;
    }
    if (normalize) {
      const double mass = cum_.back();
      if (!(mass > 0.0)) throw std::runtime_error("CdfTable: vanishing total mass");
      for (double& c : cum_) c /= mass;
    }
  }

  double mass() const { return cum_.back(); }

  double operator()(double x) const {
    if (x <= lo_) return 0.0;
    if (x >= hi_) return cum_.back();
    const double pos = (x - lo_) / step_;
    std::size_t cell = static_cast<std::size_t>(pos);
    if (cell >= cum_.size() - 1) cell = cum_.size() - 2;
    const double frac = pos - static_cast<double>(cell);
    return cum_[cell] + frac * (cum_[cell + 1] - cum_[cell]);
  }

 private:
  double lo_, hi_, step_;
  std::vector<double> cum_;
};

// Sample mean, unbiased variance, and Pearson correlation.
inline double mean(const std::vector<double>& v) {
  if (v.empty()) throw std::invalid_argument("mean: empty input");
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

inline double variance(const std::vector<double>& v) {
  if (v.size() < 2) throw std::invalid_argument("variance: need at least two values");
  const double mu = mean(v);
  double s = 0.0;
  for (double x : v) s += (x - mu) * (x - mu);
  return s / static_cast<double>(v.size() - 1);
}

inline double correlation(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size() || a.size() < 2)
    throw std::invalid_argument("correlation: need two equal-length samples");
  const double ma = mean(a), mb = mean(b);
  double sab = 0.0, saa = 0.0, sbb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    sab += (a[i] - ma) * (b[i] - mb);
    saa += (a[i] - ma) * (a[i] - ma);
    sbb += (b[i] - mb) * (b[i] - mb);
  }
  return sab / std::sqrt(saa * sbb);
}

}  // namespace splitmat
