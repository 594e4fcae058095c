#pragma once

#include <stdexcept>
#include <vector>

#include "resurgo/bigcomplex.hpp"

namespace resurgo {

// Truncated numeric power series utilities ("jets") shared by the ODE
// marcher, recurrence propagation, and Borel-plane bookkeeping. A jet is a
// plain coefficient vector, lowest order first.
using Jet = std::vector<BigComplex>;

BigFloat factorial(unsigned long n, Precision prec = default_precision());

Jet jet_add(const Jet& a, const Jet& b);
Jet jet_sub(const Jet& a, const Jet& b);
Jet jet_mul(const Jet& a, const Jet& b, size_t n);
Jet jet_div(const Jet& a, const Jet& b, size_t n);
Jet jet_derivative(const Jet& a);
Jet jet_antiderivative(const Jet& a, Precision prec);
Jet jet_scale(const Jet& a, const BigComplex& s);
// exp of a power series (a[0] may be nonzero).
Jet jet_exp(const Jet& a, size_t n);
BigComplex jet_eval(const Jet& a, const BigComplex& h);
// Max |coefficient|.
BigFloat jet_norm(const Jet& a);

// Power series at a base point; length(coeffs) = order + 1.
struct TruncatedSeries {
  BigComplex base;
  Jet coeffs;

  TruncatedSeries() = default;
  TruncatedSeries(BigComplex base_point, Jet c) : base(std::move(base_point)), coeffs(std::move(c)) {}
  size_t order() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
};

// Borel-plane star product: coefficient n of f*g is
//   sum_{i+j=n-1} f_i g_j i! j! / n!,
// the termwise form of int_0^w f(s) g(w-s) ds. Result is truncated to the
// smaller operand order; base points must agree.
TruncatedSeries star_convolve(const TruncatedSeries& f, const TruncatedSeries& g);

// Dense linear solve (Gaussian elimination, partial pivoting); A row-major
// n x n. Throws NumericalError on a vanishing pivot.
std::vector<BigComplex> solve_linear(std::vector<BigComplex> A, std::vector<BigComplex> b);

// Polynomial extrapolation (Neville) of s_k given at abscissas x_k to x = 0;
// the workhorse for limits of sequences with 1/n error expansions. Pass
// x_k = 1/n_k and the tail values s_k.
BigComplex richardson_limit(const std::vector<BigFloat>& x, const std::vector<BigComplex>& s);
// Convenience for s_n sampled at consecutive n = n0..n0+len-1, extrapolating
// with the final `depth+1` entries.
BigComplex richardson_tail(const std::vector<BigComplex>& seq, unsigned long n0, int depth);

struct RootCluster {
  BigComplex root;   // cluster centroid
  int multiplicity;  // cluster size
};

struct RootOptions {
  // Residual acceptance |p(r)| < 2^(-precision/2) * max|coeff|.
  int max_iterations = 400;
  // Roots closer than 2^(-precision/4) * scale are merged as one multiple root.
  double cluster_radius_exponent_num = -1;  // derived from precision when < 0
};

// Aberth-Ehrlich simultaneous iteration at the coefficients' precision.
// Throws NumericalError on non-convergence (precision too low).
std::vector<RootCluster> poly_roots(const std::vector<BigComplex>& coeffs, const RootOptions& opts = {});

// Roots of an exact polynomial at the requested precision.
class Poly;
std::vector<RootCluster> poly_roots(const Poly& p, Precision prec, const RootOptions& opts = {});

struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace resurgo
