#include <algorithm>
#include <cmath>

#include <Eigen/SVD>

#include "hardy/inner.hpp"

namespace hardy {
namespace {

// Series length past the working degree: enough geometric decay for the
// largest zero modulus to push the tail below double precision.
std::size_t series_margin(std::span<const BlaschkeProduct> list) {
  double rmax = 0.0;
  int zeros = 0;
  for (const auto& phi : list) {
    zeros += phi.zero_count();
    for (const auto& z : phi.zeros()) rmax = std::max(rmax, std::abs(z.point));
  }
  std::size_t margin = 32;
  if (rmax > 1e-3) margin = std::max<std::size_t>(margin, static_cast<std::size_t>(std::ceil(std::log(1e-16) / std::log(rmax))));
  return margin + static_cast<std::size_t>(zeros);
}

}  // namespace

CoronaResult corona_approx(std::span<const BlaschkeProduct> list, int degree) {
  if (list.empty()) throw Error("corona_approx: empty list");
  if (degree < 0) throw Error("corona_approx: negative degree");
  const auto per = static_cast<std::size_t>(degree) + 1;
  const std::size_t terms = per + series_margin(list);
  const std::size_t m = list.size();

  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(terms), static_cast<Eigen::Index>(m * per));
  for (std::size_t j = 0; j < m; ++j) {
    const auto s = blaschke_series(list[j], terms);
    for (std::size_t t = 0; t < per; ++t)
      for (std::size_t k = 0; k + t < terms; ++k)
        a(static_cast<Eigen::Index>(k + t), static_cast<Eigen::Index>(j * per + t)) = s[k];
  }
  const auto target = blaschke_series(gcd_inner(list), terms);
  const Eigen::VectorXcd b = Eigen::Map<const Eigen::VectorXcd>(target.data(), static_cast<Eigen::Index>(terms));

  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  svd.setThreshold(1e-14);
  const Eigen::VectorXcd x = svd.solve(b);

  CoronaResult out;
  out.residual = (a * x - b).norm();
  for (std::size_t j = 0; j < m; ++j) {
    std::vector<cplx> c(per);
    for (std::size_t t = 0; t < per; ++t) c[t] = x(static_cast<Eigen::Index>(j * per + t));
    out.coefficients.emplace_back(std::move(c));
  }
  return out;
}

}  // namespace hardy
