#pragma once

#include <array>
#include <complex>
#include <span>

namespace mdiqkd {

using Complex = std::complex<double>;

/// Hermitian, unit-trace, positive-semidefinite matrix of dimension 2 or 4.
///
/// Basis order is {|H>, |V>} for dim 2 and {|HH>, |HV>, |VH>, |VV>} for
/// dim 4, with Alice's qubit as the left tensor factor.
class DensityMatrix {
 public:
  explicit DensityMatrix(int dim);

  static DensityMatrix identity(int dim);
  // Rank-1 projector |v><v| onto a state vector (dim = amplitudes.size()).
  static DensityMatrix pure(std::span<const Complex> amplitudes);

  int dim() const { return dim_; }
  Complex& operator()(int i, int j) { return m_[index(i, j)]; }
  const Complex& operator()(int i, int j) const { return m_[index(i, j)]; }

  Complex trace() const;
  // max_{i,j} |m(i,j) - conj(m(j,i))|
  double hermiticity_error() const;
  double min_eigenvalue() const;
  bool is_valid(double hermitian_tol = 1e-12, double trace_tol = 1e-12,
                double psd_tol = 1e-10) const;

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * dim_ + j;
  }

  int dim_;
  std::array<Complex, 16> m_{};
};

enum class Polarization { H, V, D, A };
enum class Bell { PsiPlus, PsiMinus };

// |H>, |V>, and the diagonal states D = (|H>+|V>)/sqrt(2), A = (|H>-|V>)/sqrt(2).
std::array<Complex, 2> state_vector(Polarization p);
// psi+/- = (|HV> +/- |VH>)/sqrt(2) as {HH, HV, VH, VV} components.
std::array<Complex, 4> bell_vector(Bell b);

// Rank-1 projector onto the given polarization state.
DensityMatrix prepare(Polarization p);

// Kronecker product a (x) b; Alice left, Bob right.
DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);

// Tr(rho |psi><psi|) for the given Bell state.  Requires a Hermitian 4x4
// input; the result is real up to roundoff.
double project_bell(const DensityMatrix& rho, Bell bell);

}  // namespace mdiqkd
