#include <algorithm>
#include <cmath>
#include <numeric>

#include <Eigen/Eigenvalues>

#include "hardy/inner.hpp"

namespace hardy {
namespace {

// Clusters closer than this are merged when the centroid passes the
// multiplicity test; companion eigenvalues of an m-fold root scatter like eps^{1/m}.
constexpr double kMultipleRootRadius = 1e-4;
constexpr double kMultipleRootTol = 1e-10;

struct Cluster {
  cplx sum{};
  int count = 0;
  cplx center() const { return sum / static_cast<double>(count); }
};

// Single-linkage grouping of points by distance; returns group ids.
std::vector<int> link_groups(const std::vector<cplx>& pts, double radius) {
  std::vector<int> parent(pts.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      if (std::abs(pts[i] - pts[j]) <= radius) parent[find(static_cast<int>(i))] = find(static_cast<int>(j));
  std::vector<int> ids(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) ids[i] = find(static_cast<int>(i));
  return ids;
}

double weighted_scale(const Poly& p, cplx z) {
  const double r = std::max(1.0, std::abs(z));
  double acc = 0.0, rk = 1.0;
  for (const auto& c : p.coeffs()) {
    acc += std::abs(c) * rk;
    rk *= r;
  }
  return acc;
}

bool is_root_of_order(const Poly& p, cplx z, int order) {
  const double tol = kMultipleRootTol * weighted_scale(p, z);
  for (int r = 0; r < order; ++r)
    if (std::abs(p.taylor(z, r)) > tol) return false;
  return true;
}

std::vector<cplx> companion_roots(const Poly& q) {
  const int n = q.degree();
  if (n < 1) return {};
  const cplx lead = q[static_cast<std::size_t>(n)];
  Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 1; i < n; ++i) comp(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) comp(i, n - 1) = -q[static_cast<std::size_t>(i)] / lead;
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(comp, false);
  if (solver.info() != Eigen::Success) throw Error("poly_roots: eigenvalue solve failed");
  const auto& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

cplx newton_polish(const Poly& q, const Poly& dq, cplx z) {
  for (int it = 0; it < 3; ++it) {
    const cplx v = q(z), dv = dq(z);
    if (dv == cplx{}) break;
    const cplx next = z - v / dv;
    if (std::abs(q(next)) >= std::abs(v)) break;
    z = next;
  }
  return z;
}

}  // namespace

std::vector<Zero> poly_roots(const Poly& p) {
  if (p.is_zero()) throw Error("poly_roots: zero polynomial");

  // Low-order coefficients below the zero threshold are exact roots at the origin.
  const double tol = kCoeffZeroTol * (1.0 + p.max_abs());
  std::size_t origin = 0;
  while (origin < p.size() && std::abs(p[origin]) <= tol) ++origin;
  std::vector<cplx> rest(p.coeffs().begin() + static_cast<std::ptrdiff_t>(origin), p.coeffs().end());
  const Poly q(std::move(rest));

  const auto raw = companion_roots(q);

  // Fine clustering at the identification radius.
  std::vector<Cluster> clusters;
  {
    const auto ids = link_groups(raw, kZeroMatchRadius);
    std::vector<int> slot(raw.size(), -1);
    for (std::size_t i = 0; i < raw.size(); ++i) {
      const auto g = static_cast<std::size_t>(ids[i]);
      if (slot[g] < 0) {
        slot[g] = static_cast<int>(clusters.size());
        clusters.push_back({});
      }
      auto& c = clusters[static_cast<std::size_t>(slot[g])];
      c.sum += raw[i];
      ++c.count;
    }
  }

  // Coarse pass: merge clusters that are really one multiple root.
  std::vector<Cluster> merged;
  {
    std::vector<cplx> centers;
    for (const auto& c : clusters) centers.push_back(c.center());
    const auto ids = link_groups(centers, kMultipleRootRadius);
    std::vector<std::vector<std::size_t>> groups(clusters.size());
    for (std::size_t i = 0; i < clusters.size(); ++i) groups[static_cast<std::size_t>(ids[i])].push_back(i);
    for (const auto& g : groups) {
      if (g.empty()) continue;
      Cluster all;
      for (auto i : g) {
        all.sum += clusters[i].sum;
        all.count += clusters[i].count;
      }
      if (g.size() > 1 && is_root_of_order(q, all.center(), all.count)) {
        merged.push_back(all);
      } else {
        for (auto i : g) merged.push_back(clusters[i]);
      }
    }
  }

  const Poly dq = q.derivative();
  std::vector<Zero> out;
  out.reserve(merged.size() + 1);
  for (const auto& c : merged) {
    cplx z = c.center();
    if (c.count == 1) z = newton_polish(q, dq, z);
    out.push_back({z, c.count});
  }
  if (origin > 0) {
    auto it = std::find_if(out.begin(), out.end(), [](const Zero& z) { return std::abs(z.point) <= kZeroMatchRadius; });
    if (it != out.end()) {
      it->point = 0.0;
      it->multiplicity += static_cast<int>(origin);
    } else {
      out.push_back({cplx{}, static_cast<int>(origin)});
    }
  }
  std::sort(out.begin(), out.end(), [](const Zero& a, const Zero& b) {
    const double ma = std::abs(a.point), mb = std::abs(b.point);
    if (ma != mb) return ma < mb;
    return std::arg(a.point) < std::arg(b.point);
  });
  return out;
}

}  // namespace hardy
