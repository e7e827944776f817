// Copyright 2026 The mimo-bc-sim Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MIMOBC_ANALYTIC_WISHART_HPP
#define MIMOBC_ANALYTIC_WISHART_HPP

#include <span>
#include <string>
#include <vector>

namespace mimobc::analytic
{

/// Law of the largest eigenvalue of H^H H, H an N x M matrix of i.i.d. CN(0,1):
///
///   f(x) = sum_{r=1}^{p} sum_s a_{r,s} x^s e^{-r x}
///
/// with p = min(M,N), q = max(M,N). The coefficients are obtained exactly by
/// expanding det[gamma(q-p+i+j-1, x)]_{i,j=1..p} / prod Gamma(q-i+1) Gamma(p-i+1)
/// in rational arithmetic and differentiating term by term.
class WishartMaxEigen
{
public:
  struct Term
  {
    int r;
    int s;
    double coeff;
    std::string exact;  // "num/den" or "num"
  };

  WishartMaxEigen(int tx, int rx);

  int tx() const { return tx_; }
  int rx() const { return rx_; }
  int p() const { return p_; }
  int q() const { return q_; }

  std::span<const Term> terms() const { return terms_; }
  double coefficient(int r, int s) const;
  std::string exact_coefficient(int r, int s) const;

  double pdf(double x) const;
  double cdf(double x) const;
  double survival(double x) const;  // 1 - cdf without cancellation at large x

  // sum a_{r,s} s! / r^{s+1}, equals 1 for a proper density.
  double total_mass() const;

private:
  int tx_;
  int rx_;
  int p_;
  int q_;
  std::vector<Term> terms_;
};

inline constexpr int kWishartMaxDim = 8;

/// Throws DomainError unless 1 <= M, N <= 8.
WishartMaxEigen wishart_coeffs(int tx, int rx);

}  // namespace mimobc::analytic

#endif  // MIMOBC_ANALYTIC_WISHART_HPP
