#include "resurgo/series.hpp"

namespace resurgo {

BigFloat factorial(unsigned long n, Precision prec) {
  BigFloat r(prec);
  mpfr_fac_ui(r.raw(), n, MPFR_RNDN);
  return r;
}

Jet jet_add(const Jet& a, const Jet& b) {
  Jet r = a.size() >= b.size() ? a : b;
  const Jet& s = a.size() >= b.size() ? b : a;
  for (size_t k = 0; k < s.size(); ++k) r[k] += s[k];
  return r;
}

Jet jet_sub(const Jet& a, const Jet& b) {
  Jet r = a;
  if (r.size() < b.size()) r.resize(b.size(), BigComplex(r.empty() ? default_precision() : r[0].precision()));
  for (size_t k = 0; k < b.size(); ++k) r[k] -= b[k];
  return r;
}

Jet jet_mul(const Jet& a, const Jet& b, size_t n) {
  Precision p = a.empty() ? default_precision() : a[0].precision();
  Jet r(n, BigComplex(p));
  for (size_t i = 0; i < a.size() && i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < b.size() && i + j < n; ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

Jet jet_div(const Jet& a, const Jet& b, size_t n) {
  if (b.empty() || b[0].is_zero()) throw NumericalError("jet_div: leading coefficient vanishes");
  Precision p = b[0].precision();
  Jet q(n, BigComplex(p));
  for (size_t k = 0; k < n; ++k) {
    BigComplex acc = k < a.size() ? a[k] : BigComplex(p);
    for (size_t j = 1; j <= k && j < b.size(); ++j) acc -= b[j] * q[k - j];
    q[k] = acc / b[0];
  }
  return q;
}

Jet jet_derivative(const Jet& a) {
  if (a.size() <= 1) return Jet();
  Jet r(a.size() - 1, BigComplex(a[0].precision()));
  for (size_t k = 1; k < a.size(); ++k) r[k - 1] = a[k] * static_cast<long>(k);
  return r;
}

Jet jet_antiderivative(const Jet& a, Precision prec) {
  Jet r(a.size() + 1, BigComplex(prec));
  for (size_t k = 0; k < a.size(); ++k) r[k + 1] = a[k] / static_cast<long>(k + 1);
  return r;
}

Jet jet_scale(const Jet& a, const BigComplex& s) {
  Jet r = a;
  for (auto& c : r) c *= s;
  return r;
}

Jet jet_exp(const Jet& a, size_t n) {
  Precision p = a.empty() ? default_precision() : a[0].precision();
  Jet e(n, BigComplex(p));
  if (n == 0) return e;
  e[0] = a.empty() ? BigComplex(1L, 0L, p) : exp(a[0]);
  // e' = a' e  =>  (m+1) e_{m+1} = sum_k (k+1) a_{k+1} e_{m-k}.
  for (size_t m = 0; m + 1 < n; ++m) {
    BigComplex acc(p);
    for (size_t k = 0; k <= m && k + 1 < a.size(); ++k)
      acc += a[k + 1] * e[m - k] * static_cast<long>(k + 1);
    e[m + 1] = acc / static_cast<long>(m + 1);
  }
  return e;
}

BigComplex jet_eval(const Jet& a, const BigComplex& h) {
  BigComplex acc(h.precision());
  for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * h + *it;
  return acc;
}

BigFloat jet_norm(const Jet& a) {
  BigFloat m(0L, a.empty() ? default_precision() : a[0].precision());
  for (const auto& c : a) m = max(m, abs(c));
  return m;
}

std::vector<BigComplex> solve_linear(std::vector<BigComplex> A, std::vector<BigComplex> b) {
  size_t n = b.size();
  Precision prec = n ? b[0].precision() : default_precision();
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    BigFloat best = abs(A[col * n + col]);
    for (size_t r = col + 1; r < n; ++r) {
      BigFloat mag = abs(A[r * n + col]);
      if (mag > best) {
        best = mag;
        piv = r;
      }
    }
    if (best.is_zero() || !best.is_finite())
      throw NumericalError("solve_linear: singular system");
    if (piv != col) {
      for (size_t c = 0; c < n; ++c) std::swap(A[piv * n + c], A[col * n + c]);
      std::swap(b[piv], b[col]);
    }
    for (size_t r = col + 1; r < n; ++r) {
      if (A[r * n + col].is_zero()) continue;
      BigComplex factor = A[r * n + col] / A[col * n + col];
      A[r * n + col] = BigComplex(prec);
      for (size_t c = col + 1; c < n; ++c) A[r * n + c] -= factor * A[col * n + c];
      b[r] -= factor * b[col];
    }
  }
  std::vector<BigComplex> x(n, BigComplex(prec));
  for (size_t r = n; r-- > 0;) {
    BigComplex acc = b[r];
    for (size_t c = r + 1; c < n; ++c) acc -= A[r * n + c] * x[c];
    x[r] = acc / A[r * n + r];
  }
  return x;
}

BigComplex richardson_limit(const std::vector<BigFloat>& x, const std::vector<BigComplex>& s) {
  if (x.size() != s.size() || s.empty())
    throw std::invalid_argument("richardson_limit: mismatched or empty samples");
  std::vector<BigComplex> t = s;
  size_t n = t.size();
  for (size_t level = 1; level < n; ++level) {
    for (size_t k = 0; k + level < n; ++k) {
      // Neville update toward x = 0.
      BigFloat den = x[k] - x[k + level];
      t[k] = (t[k + 1] * x[k] - t[k] * x[k + level]) / BigComplex(den, BigFloat(0L, den.precision()));
    }
  }
  return t[0];
}

BigComplex richardson_tail(const std::vector<BigComplex>& seq, unsigned long n0, int depth) {
  size_t use = std::min(seq.size(), static_cast<size_t>(depth) + 1);
  Precision p = seq.empty() ? default_precision() : seq[0].precision();
  std::vector<BigFloat> x;
  std::vector<BigComplex> s;
  for (size_t k = seq.size() - use; k < seq.size(); ++k) {
    unsigned long n = n0 + k;
    x.push_back(BigFloat(1L, p) / static_cast<long>(n));
    s.push_back(seq[k]);
  }
  return richardson_limit(x, s);
}

TruncatedSeries star_convolve(const TruncatedSeries& f, const TruncatedSeries& g) {
  if (f.base != g.base) throw std::invalid_argument("star_convolve: mismatched base points");
  size_t n = std::min(f.coeffs.size(), g.coeffs.size());
  Precision p = n && !f.coeffs.empty() ? f.coeffs[0].precision() : default_precision();
  Jet r(n, BigComplex(p));
  for (size_t m = 1; m < n; ++m) {
    BigComplex acc(p);
    for (size_t i = 0; i + 1 <= m; ++i) {
      size_t j = m - 1 - i;
      acc += f.coeffs[i] * g.coeffs[j] * BigComplex(factorial(i, p) * factorial(j, p));
    }
    r[m] = acc / BigComplex(factorial(m, p));
  }
  return TruncatedSeries(f.base, std::move(r));
}

}  // namespace resurgo
