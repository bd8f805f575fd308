#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <functional>
#include <vector>

namespace isb::minimize {

struct NelderMeadOptions {
  double diameter_tol = 1e-10;  ///< stop when the simplex diameter drops below this
  double value_tol = 1e-13;     ///< and the value spread across vertices below this
  int max_iterations = 5000;
};

struct NelderMeadResult {
  Eigen::VectorXd x;
  double value = 0.0;
  int iterations = 0;
  bool converged = false;
};

/// Plain downhill simplex (Nelder-Mead) with the standard
/// reflect/expand/contract/shrink moves. Deterministic: ties in the vertex
/// ordering are broken by insertion index.
inline NelderMeadResult nelder_mead(
    const std::function<double(const Eigen::VectorXd&)>& f,
    const Eigen::VectorXd& start, const Eigen::VectorXd& steps,
    const NelderMeadOptions& opts = {}) {
  const int n = static_cast<int>(start.size());
  struct Vertex {
    Eigen::VectorXd x;
    double fx;
    int tag;
  };
  std::vector<Vertex> simplex;
  simplex.reserve(n + 1);
  simplex.push_back({start, f(start), 0});
  for (int i = 0; i < n; ++i) {
    Eigen::VectorXd x = start;
    x[i] += steps[i];
    simplex.push_back({x, f(x), i + 1});
  }

  const auto order = [&] {
    std::stable_sort(simplex.begin(), simplex.end(),
                     [](const Vertex& a, const Vertex& b) {
                       if (a.fx != b.fx) return a.fx < b.fx;
                       return a.tag < b.tag;
                     });
  };
  const auto diameter = [&] {
    double d = 0.0;
    for (int i = 1; i <= n; ++i)
      d = std::max(d, (simplex[i].x - simplex[0].x).norm());
    return d;
  };

  NelderMeadResult res;
  int tag = n + 1;
  for (res.iterations = 0; res.iterations < opts.max_iterations; ++res.iterations) {
    order();
    if (diameter() < opts.diameter_tol &&
        simplex[n].fx - simplex[0].fx < opts.value_tol) {
      res.converged = true;
      break;
    }

    Eigen::VectorXd centroid = Eigen::VectorXd::Zero(n);
    for (int i = 0; i < n; ++i) centroid += simplex[i].x;
    centroid /= n;

    const Eigen::VectorXd xr = centroid + (centroid - simplex[n].x);
    const double fr = f(xr);
    if (fr < simplex[0].fx) {
      const Eigen::VectorXd xe = centroid + 2.0 * (centroid - simplex[n].x);
      const double fe = f(xe);
      simplex[n] = fe < fr ? Vertex{xe, fe, tag++} : Vertex{xr, fr, tag++};
    } else if (fr < simplex[n - 1].fx) {
      simplex[n] = {xr, fr, tag++};
    } else {
      const bool outside = fr < simplex[n].fx;
      const Eigen::VectorXd base = outside ? xr : simplex[n].x;
      const Eigen::VectorXd xc = centroid + 0.5 * (base - centroid);
      const double fc = f(xc);
      if (fc < std::min(fr, simplex[n].fx)) {
        simplex[n] = {xc, fc, tag++};
      } else {
        for (int i = 1; i <= n; ++i) {
          simplex[i].x = simplex[0].x + 0.5 * (simplex[i].x - simplex[0].x);
          simplex[i].fx = f(simplex[i].x);
          simplex[i].tag = tag++;
        }
      }
    }
  }
  order();
  res.x = simplex[0].x;
  res.value = simplex[0].fx;
  return res;
}

}  // namespace isb::minimize
