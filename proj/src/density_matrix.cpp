#include "mdiqkd/density_matrix.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

namespace mdiqkd {

namespace {

void require_dim(int dim) {
  if (dim != 2 && dim != 4) {
    throw std::domain_error("DensityMatrix dimension must be 2 or 4");
  }
}

}  // namespace

DensityMatrix::DensityMatrix(int dim) : dim_(dim) { require_dim(dim); }

DensityMatrix DensityMatrix::identity(int dim) {
  DensityMatrix m(dim);
  for (int i = 0; i < dim; ++i) {
    m(i, i) = 1.0;
  }
  return m;
}

DensityMatrix DensityMatrix::pure(std::span<const Complex> amplitudes) {
  const int dim = static_cast<int>(amplitudes.size());
  DensityMatrix m(dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      m(i, j) = amplitudes[i] * std::conj(amplitudes[j]);
    }
  }
  return m;
}

Complex DensityMatrix::trace() const {
  Complex sum = 0.0;
  for (int i = 0; i < dim_; ++i) {
    sum += (*this)(i, i);
  }
  return sum;
}

double DensityMatrix::hermiticity_error() const {
  double worst = 0.0;
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) {
      worst = std::max(worst, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    }
  }
  return worst;
}

double DensityMatrix::min_eigenvalue() const {
  Eigen::MatrixXcd m(dim_, dim_);
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) {
      m(i, j) = (*this)(i, j);
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
  return solver.eigenvalues().minCoeff();
}

bool DensityMatrix::is_valid(double hermitian_tol, double trace_tol,
                             double psd_tol) const {
  if (hermiticity_error() > hermitian_tol) {
    return false;
  }
  if (std::abs(trace() - 1.0) > trace_tol) {
    return false;
  }
  return min_eigenvalue() >= -psd_tol;
}

std::array<Complex, 2> state_vector(Polarization p) {
  const double s = 1.0 / std::sqrt(2.0);
  switch (p) {
    case Polarization::H:
      return {Complex(1.0), Complex(0.0)};
    case Polarization::V:
      return {Complex(0.0), Complex(1.0)};
    case Polarization::D:
      return {Complex(s), Complex(s)};
    case Polarization::A:
      return {Complex(s), Complex(-s)};
  }
  throw std::domain_error("unknown polarization tag");
}

std::array<Complex, 4> bell_vector(Bell b) {
  const double s = 1.0 / std::sqrt(2.0);
  if (b == Bell::PsiPlus) {
    return {Complex(0.0), Complex(s), Complex(s), Complex(0.0)};
  }
  return {Complex(0.0), Complex(s), Complex(-s), Complex(0.0)};
}

DensityMatrix prepare(Polarization p) {
  const auto v = state_vector(p);
  return DensityMatrix::pure(v);
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
  if (a.dim() != 2 || b.dim() != 2) {
    throw std::domain_error("tensor expects two single-qubit states");
  }
  DensityMatrix out(4);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 2; ++k) {
        for (int l = 0; l < 2; ++l) {
          out(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
        }
      }
    }
  }
  return out;
}

double project_bell(const DensityMatrix& rho, Bell bell) {
  if (rho.dim() != 4) {
    throw std::domain_error("project_bell expects a two-qubit state");
  }
  if (rho.hermiticity_error() > 1e-12) {
    throw std::domain_error("project_bell expects a Hermitian state");
  }
  const auto v = bell_vector(bell);
  Complex p = 0.0;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      p += std::conj(v[i]) * rho(i, j) * v[j];
    }
  }
  return p.real();
}

}  // namespace mdiqkd
