// Copyright 2026 The speclab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "core/matlin.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "core/errors.hpp"

namespace speclab {

namespace {

constexpr double kHermitianTol = 1e-12;
constexpr double kUnitaryTol = 1e-10;
constexpr double kRankTol = 1e-300;
constexpr double kClusterTol = 1e-8;
constexpr std::size_t kQlIterationsPerValue = 60;

double norm2(Complex z) { return std::norm(z); }

// Elementary reflector in the LAPACK zlarfg convention: H = I - tau v v^*
// with v[0] = 1 and H^* x = (beta, 0, ..., 0)^T, beta real.
struct Reflector {
  Complex tau{0.0, 0.0};
  double beta = 0.0;
  std::vector<Complex> v;
};

Reflector make_reflector(std::span<const Complex> x) {
  Reflector h;
  h.v.assign(x.begin(), x.end());
  if (h.v.empty()) return h;
  h.v[0] = 1.0;
  const Complex alpha = x[0];
  double xnorm2 = 0.0;
  for (std::size_t i = 1; i < x.size(); ++i) xnorm2 += norm2(x[i]);
  if (xnorm2 == 0.0 && alpha.imag() == 0.0) {
    h.beta = alpha.real();
    return h;
  }
  const double beta =
      -std::copysign(std::sqrt(norm2(alpha) + xnorm2), alpha.real());
  h.tau = Complex((beta - alpha.real()) / beta, -alpha.imag() / beta);
  const Complex scale = 1.0 / (alpha - beta);
  for (std::size_t i = 1; i < x.size(); ++i) h.v[i] = x[i] * scale;
  h.beta = beta;
  return h;
}

// Applies (I - t v v^*) to rows offset.. of m, all columns from col0 on.
void apply_left(ComplexMatrix& m, const std::vector<Complex>& v, Complex t,
                std::size_t offset, std::size_t col0) {
  const std::size_t n = m.dim();
  if (t == Complex(0.0, 0.0)) return;
  std::vector<Complex> s(n - col0, Complex(0.0, 0.0));
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Complex vi = std::conj(v[i]);
    const Complex* r = m.row(offset + i);
    for (std::size_t j = col0; j < n; ++j) s[j - col0] += vi * r[j];
  }
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Complex f = t * v[i];
    Complex* r = m.row(offset + i);
    for (std::size_t j = col0; j < n; ++j) r[j] -= f * s[j - col0];
  }
}

// Implicit-shift QL on a real symmetric tridiagonal matrix (diagonal d,
// subdiagonal e with e[i] = T(i+1, i), e[n-1] = 0). When z is non-null the
// rotations are accumulated into the row-major n x n matrix *z.
void tridiagonal_ql(std::vector<double>& d, std::vector<double>& e,
                    std::vector<double>* z) {
  const std::size_t n = d.size();
  const double eps = std::numeric_limits<double>::epsilon();
  double f = 0.0;
  double tst1 = 0.0;
  for (std::size_t l = 0; l < n; ++l) {
    tst1 = std::max(tst1, std::abs(d[l]) + std::abs(e[l]));
    std::size_t m = l;
    while (m < n - 1 && std::abs(e[m]) > eps * tst1) ++m;
    if (m > l) {
      std::size_t iter = 0;
      do {
        if (++iter > kQlIterationsPerValue) {
          throw ConvergenceError("tridiagonal QL did not converge", iter);
        }
        double g = d[l];
        double p = (d[l + 1] - g) / (2.0 * e[l]);
        double r = std::hypot(p, 1.0);
        if (p < 0) r = -r;
        d[l] = e[l] / (p + r);
        d[l + 1] = e[l] * (p + r);
        const double dl1 = d[l + 1];
        double h = g - d[l];
        for (std::size_t i = l + 2; i < n; ++i) d[i] -= h;
        f += h;

        p = d[m];
        double c = 1.0, c2 = 1.0, c3 = 1.0;
        const double el1 = e[l + 1];
        double s = 0.0, s2 = 0.0;
        for (std::size_t ii = m; ii-- > l;) {
          c3 = c2;
          c2 = c;
          s2 = s;
          g = c * e[ii];
          h = c * p;
          r = std::hypot(p, e[ii]);
          e[ii + 1] = s * r;
          s = e[ii] / r;
          c = p / r;
          p = c * d[ii] - s * g;
          d[ii + 1] = h + s * (c * g + s * d[ii]);
          if (z != nullptr) {
            double* zz = z->data();
            for (std::size_t k = 0; k < n; ++k) {
              double* rowk = zz + k * n;
              h = rowk[ii + 1];
              rowk[ii + 1] = s * rowk[ii] + c * h;
              rowk[ii] = c * rowk[ii] - s * h;
            }
          }
        }
        p = -s * s2 * c3 * el1 * e[l] / dl1;
        e[l] = s * p;
        d[l] = c * p;
      } while (std::abs(e[l]) > eps * tst1);
    }
    d[l] += f;
    e[l] = 0.0;
  }
}

struct Tridiagonal {
  std::vector<double> d;
  std::vector<double> e;
  std::vector<Reflector> reflectors;  // reflector k acts on rows k+1..n-1
};

Tridiagonal householder_tridiagonalize(const ComplexMatrix& input) {
  const std::size_t n = input.dim();
  ComplexMatrix a = input;
  Tridiagonal t;
  t.d.assign(n, 0.0);
  t.e.assign(n, 0.0);
  if (n >= 2) t.reflectors.reserve(n - 1);
  std::vector<Complex> x;
  std::vector<Complex> p;
  std::vector<Complex> q;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const std::size_t m = n - k - 1;
    x.resize(m);
    for (std::size_t i = 0; i < m; ++i) x[i] = a(k + 1 + i, k);
    Reflector h = make_reflector(x);
    t.e[k] = h.beta;
    t.d[k] = a(k, k).real();
    if (h.tau != Complex(0.0, 0.0)) {
      // A22 <- H^* A22 H = A22 - v q^* - q v^*,
      // q = tau p - |tau|^2 (v^* p) v / 2, p = A22 v.
      p.assign(m, Complex(0.0, 0.0));
      for (std::size_t i = 0; i < m; ++i) {
        const Complex* r = a.row(k + 1 + i) + (k + 1);
        Complex acc(0.0, 0.0);
        for (std::size_t j = 0; j < m; ++j) acc += r[j] * h.v[j];
        p[i] = acc;
      }
      Complex vp(0.0, 0.0);
      for (std::size_t i = 0; i < m; ++i) vp += std::conj(h.v[i]) * p[i];
      const double half = 0.5 * norm2(h.tau) * vp.real();
      q.resize(m);
      for (std::size_t i = 0; i < m; ++i) q[i] = h.tau * p[i] - half * h.v[i];
      for (std::size_t i = 0; i < m; ++i) {
        Complex* r = a.row(k + 1 + i) + (k + 1);
        const Complex vi = h.v[i];
        const Complex qi = q[i];
        for (std::size_t j = 0; j < m; ++j) {
          r[j] -= vi * std::conj(q[j]) + qi * std::conj(h.v[j]);
        }
      }
    }
    t.reflectors.push_back(std::move(h));
  }
  if (n >= 1) t.d[n - 1] = a(n - 1, n - 1).real();
  if (n >= 1) t.e[n - 1] = 0.0;
  return t;
}

void check_hermitian_input(const HermitianView& a) {
  if (!a.matrix().all_finite()) {
    throw NumericalError("non-finite entry in Hermitian input");
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// ComplexMatrix

ComplexMatrix::ComplexMatrix(std::size_t n) : n_(n), a_(n * n) {
  if (n == 0) throw ContractError("matrix dimension must be positive");
}

ComplexMatrix::ComplexMatrix(
    std::initializer_list<std::initializer_list<Complex>> rows)
    : n_(rows.size()), a_() {
  if (n_ == 0) throw ContractError("matrix dimension must be positive");
  a_.reserve(n_ * n_);
  for (const auto& r : rows) {
    if (r.size() != n_) throw ContractError("matrix literal is not square");
    a_.insert(a_.end(), r.begin(), r.end());
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> d) {
  ComplexMatrix m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> d) {
  ComplexMatrix m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

bool ComplexMatrix::all_finite() const noexcept {
  return std::all_of(a_.begin(), a_.end(), [](const Complex& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
  });
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix r(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) r(j, i) = std::conj((*this)(i, j));
  return r;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix r(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

ComplexMatrix ComplexMatrix::leading_block(std::size_t k) const {
  if (k == 0 || k > n_) {
    throw ContractError("block size " + std::to_string(k) +
                        " outside 1.." + std::to_string(n_));
  }
  ComplexMatrix r(k);
  for (std::size_t i = 0; i < k; ++i)
    std::copy_n(row(i), k, r.row(i));
  return r;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& b) {
  if (b.n_ != n_) throw ContractError("dimension mismatch in +");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += b.a_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& b) {
  if (b.n_ != n_) throw ContractError("dimension mismatch in -");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= b.a_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
  for (auto& z : a_) z *= s;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) {
  a += b;
  return a;
}

ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) {
  a -= b;
  return a;
}

ComplexMatrix operator*(Complex s, ComplexMatrix a) {
  a *= s;
  return a;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t n = a.dim();
  if (b.dim() != n) throw ContractError("dimension mismatch in product");
  ComplexMatrix c(n);
  for (std::size_t i = 0; i < n; ++i) {
    Complex* ci = c.row(i);
    const Complex* ai = a.row(i);
    for (std::size_t k = 0; k < n; ++k) {
      const Complex aik = ai[k];
      if (aik == Complex(0.0, 0.0)) continue;
      const Complex* bk = b.row(k);
      for (std::size_t j = 0; j < n; ++j) ci[j] += aik * bk[j];
    }
  }
  return c;
}

// ---------------------------------------------------------------------------
// Views and spectra

HermitianView::HermitianView(ComplexMatrix m) : m_(std::move(m)) {
  if (!m_.all_finite()) throw ContractError("Hermitian input is not finite");
  double diff2 = 0.0;
  double tot2 = 0.0;
  const std::size_t n = m_.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      diff2 += norm2(m_(i, j) - std::conj(m_(j, i)));
      tot2 += norm2(m_(i, j));
    }
  }
  if (std::sqrt(diff2) > kHermitianTol * std::sqrt(tot2)) {
    throw ContractError("matrix is not Hermitian");
  }
}

HermitianView HermitianView::symmetrized(const ComplexMatrix& m) {
  const std::size_t n = m.dim();
  ComplexMatrix h(n);
  for (std::size_t i = 0; i < n; ++i) {
    h(i, i) = m(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex z = 0.5 * (m(i, j) + std::conj(m(j, i)));
      h(i, j) = z;
      h(j, i) = std::conj(z);
    }
  }
  return HermitianView(std::move(h));
}

UnitaryView::UnitaryView(ComplexMatrix m) : m_(std::move(m)) {
  if (!m_.all_finite()) throw ContractError("unitary input is not finite");
  const std::size_t n = m_.dim();
  double dev2 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      Complex s(0.0, 0.0);
      const Complex* ri = m_.row(i);
      const Complex* rj = m_.row(j);
      for (std::size_t k = 0; k < n; ++k) s += ri[k] * std::conj(rj[k]);
      if (i == j) s -= 1.0;
      dev2 += (i == j ? 1.0 : 2.0) * norm2(s);
    }
  }
  if (std::sqrt(dev2) > kUnitaryTol * std::sqrt(static_cast<double>(n))) {
    throw ContractError("matrix is not unitary: ||UU* - I||_HS = " +
                        std::to_string(std::sqrt(dev2)));
  }
}

SpectrumLine::SpectrumLine(std::vector<double> values) : v_(std::move(values)) {
  if (v_.empty()) throw ContractError("empty spectrum");
  for (double x : v_) {
    if (!std::isfinite(x)) throw ContractError("non-finite eigenvalue");
  }
  std::stable_sort(v_.begin(), v_.end());
}

double wrap_angle(double theta) {
  double t = std::fmod(theta, kTwoPi);
  if (t < 0) t += kTwoPi;
  if (t >= kTwoPi) t = 0.0;
  return t;
}

SpectrumCircle::SpectrumCircle(std::vector<double> angles)
    : a_(std::move(angles)) {
  if (a_.empty()) throw ContractError("empty spectrum");
  for (double& t : a_) {
    if (!std::isfinite(t)) throw ContractError("non-finite eigenangle");
    t = wrap_angle(t);
  }
  std::stable_sort(a_.begin(), a_.end());
}

// ---------------------------------------------------------------------------
// Norms

double hs_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (const Complex& z : a.entries()) s += norm2(z);
  return std::sqrt(s);
}

double hs_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw ContractError("dimension mismatch");
  double s = 0.0;
  const auto ea = a.entries();
  const auto eb = b.entries();
  for (std::size_t i = 0; i < ea.size(); ++i) s += norm2(ea[i] - eb[i]);
  return std::sqrt(s);
}

double op_norm(const HermitianView& a) {
  const SpectrumLine s = eig_hermitian(a);
  return std::max(std::abs(s.min()), std::abs(s.max()));
}

double spectral_diameter(const HermitianView& a) {
  const SpectrumLine s = eig_hermitian(a);
  return std::max(0.0, s.max() - s.min());
}

// ---------------------------------------------------------------------------
// QR

QrResult qr_positive(const ComplexMatrix& g) {
  if (!g.all_finite()) throw ContractError("QR input is not finite");
  const std::size_t n = g.dim();
  ComplexMatrix r = g;
  std::vector<Reflector> hs;
  hs.reserve(n);
  std::vector<Complex> x;
  for (std::size_t k = 0; k < n; ++k) {
    x.resize(n - k);
    for (std::size_t i = k; i < n; ++i) x[i - k] = r(i, k);
    Reflector h = make_reflector(x);
    // R <- H^* R on the trailing block.
    apply_left(r, h.v, std::conj(h.tau), k, k + 1);
    r(k, k) = h.beta;
    for (std::size_t i = k + 1; i < n; ++i) r(i, k) = 0.0;
    if (std::abs(h.beta) < kRankTol) {
      throw DegenerateInputError("rank-deficient QR input: |R(" +
                                 std::to_string(k) + "," + std::to_string(k) +
                                 ")| < 1e-300");
    }
    hs.push_back(std::move(h));
  }
  // Q = H_0 H_1 ... H_{n-1}, accumulated backwards.
  ComplexMatrix q = ComplexMatrix::identity(n);
  for (std::size_t k = n; k-- > 0;) apply_left(q, hs[k].v, hs[k].tau, k, k);
  // Move signs of diag(R) into Q.
  for (std::size_t k = 0; k < n; ++k) {
    if (r(k, k).real() < 0) {
      for (std::size_t j = k; j < n; ++j) r(k, j) = -r(k, j);
      for (std::size_t i = 0; i < n; ++i) q(i, k) = -q(i, k);
    }
    r(k, k) = r(k, k).real();
  }
  return QrResult{UnitaryView(std::move(q)), std::move(r)};
}

// ---------------------------------------------------------------------------
// Hermitian eigenproblem

SpectrumLine eig_hermitian(const HermitianView& a) {
  check_hermitian_input(a);
  Tridiagonal t = householder_tridiagonalize(a.matrix());
  tridiagonal_ql(t.d, t.e, nullptr);
  return SpectrumLine(std::move(t.d));
}

HermitianEigen eig_hermitian_vectors(const HermitianView& a) {
  check_hermitian_input(a);
  const std::size_t n = a.dim();
  Tridiagonal t = householder_tridiagonalize(a.matrix());
  std::vector<double> z(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) z[i * n + i] = 1.0;
  tridiagonal_ql(t.d, t.e, &z);

  // Q = H_0 ... H_{n-2}; reflector k acts on rows k+1.. .
  ComplexMatrix q = ComplexMatrix::identity(n);
  for (std::size_t k = t.reflectors.size(); k-- > 0;) {
    apply_left(q, t.reflectors[k].v, t.reflectors[k].tau, k + 1, k + 1);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return t.d[i] < t.d[j]; });

  // vectors = Q * Z, columns permuted into ascending eigenvalue order.
  ComplexMatrix vectors(n);
  std::vector<double> sorted(n);
  for (std::size_t c = 0; c < n; ++c) sorted[c] = t.d[order[c]];
  for (std::size_t i = 0; i < n; ++i) {
    const Complex* qi = q.row(i);
    Complex* vi = vectors.row(i);
    for (std::size_t k = 0; k < n; ++k) {
      const Complex qik = qi[k];
      if (qik == Complex(0.0, 0.0)) continue;
      const double* zk = z.data() + k * n;
      for (std::size_t c = 0; c < n; ++c) vi[c] += qik * zk[order[c]];
    }
  }
  return HermitianEigen{SpectrumLine(std::move(sorted)), std::move(vectors)};
}

// ---------------------------------------------------------------------------
// Unitary eigenangles
//
// U is normal, so its Hermitian part H = (U+U*)/2 and skew part
// K = (U-U*)/(2i) commute and share an eigenbasis. Diagonalize H; inside each
// cluster of (numerically) equal eigenvalues of H, diagonalize K restricted to
// the cluster. The angle of each joint eigenvector w is arg(w* U w).

SpectrumCircle eig_unitary_angles(const UnitaryView& u) {
  const ComplexMatrix& um = u.matrix();
  const std::size_t n = um.dim();
  ComplexMatrix hm(n);
  ComplexMatrix km(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Complex uij = um(i, j);
      const Complex uji = std::conj(um(j, i));
      hm(i, j) = 0.5 * (uij + uji);
      km(i, j) = Complex(0.0, -0.5) * (uij - uji);
    }
  }
  const HermitianView h = HermitianView::symmetrized(hm);
  HermitianEigen eh = eig_hermitian_vectors(h);
  ComplexMatrix& w = eh.vectors;
  const auto c = eh.values.values();
  const double scale = std::max(std::abs(c.front()), std::abs(c.back()));
  const double gap = kClusterTol * scale;

  std::size_t lo = 0;
  while (lo < n) {
    std::size_t hi = lo + 1;
    while (hi < n && c[hi] - c[hi - 1] <= gap) ++hi;
    const std::size_t m = hi - lo;
    if (m > 1) {
      // Kp = Wc^* K Wc, Wc = columns lo..hi-1 of W.
      std::vector<Complex> kw(n * m, Complex(0.0, 0.0));
      for (std::size_t i = 0; i < n; ++i) {
        const Complex* ki = km.row(i);
        for (std::size_t a = 0; a < m; ++a) {
          Complex acc(0.0, 0.0);
          for (std::size_t k = 0; k < n; ++k) acc += ki[k] * w(k, lo + a);
          kw[i * m + a] = acc;
        }
      }
      ComplexMatrix kp(m);
      for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = 0; b < m; ++b) {
          Complex acc(0.0, 0.0);
          for (std::size_t i = 0; i < n; ++i) {
            acc += std::conj(w(i, lo + a)) * kw[i * m + b];
          }
          kp(a, b) = acc;
        }
      }
      const HermitianEigen ek =
          eig_hermitian_vectors(HermitianView::symmetrized(kp));
      std::vector<Complex> rowbuf(m);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t b = 0; b < m; ++b) {
          Complex acc(0.0, 0.0);
          for (std::size_t a = 0; a < m; ++a) {
            acc += w(i, lo + a) * ek.vectors(a, b);
          }
          rowbuf[b] = acc;
        }
        for (std::size_t b = 0; b < m; ++b) w(i, lo + b) = rowbuf[b];
      }
    }
    lo = hi;
  }

  // lambda_j = w_j^* U w_j.
  const ComplexMatrix uw = um * w;
  std::vector<Complex> lambda(n, Complex(0.0, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    const Complex* wi = w.row(i);
    const Complex* uwi = uw.row(i);
    for (std::size_t j = 0; j < n; ++j) lambda[j] += std::conj(wi[j]) * uwi[j];
  }
  std::vector<double> angles(n);
  for (std::size_t j = 0; j < n; ++j) {
    angles[j] = std::atan2(lambda[j].imag(), lambda[j].real());
  }
  return SpectrumCircle(std::move(angles));
}

// ---------------------------------------------------------------------------

Complex determinant(const ComplexMatrix& a) {
  const std::size_t n = a.dim();
  ComplexMatrix lu = a;
  Complex det(1.0, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    double best = std::abs(lu(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      const double v = std::abs(lu(i, k));
      if (v > best) {
        best = v;
        piv = i;
      }
    }
    if (best == 0.0) return Complex(0.0, 0.0);
    if (piv != k) {
      std::swap_ranges(lu.row(k), lu.row(k) + n, lu.row(piv));
      det = -det;
    }
    const Complex pivot = lu(k, k);
    det *= pivot;
    for (std::size_t i = k + 1; i < n; ++i) {
      const Complex f = lu(i, k) / pivot;
      if (f == Complex(0.0, 0.0)) continue;
      Complex* ri = lu.row(i);
      const Complex* rk = lu.row(k);
      for (std::size_t j = k + 1; j < n; ++j) ri[j] -= f * rk[j];
    }
  }
  return det;
}

}  // namespace speclab
